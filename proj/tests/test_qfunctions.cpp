#include <doctest.h>

#include <qseries/errors.hpp>
#include <qseries/qfunctions.hpp>

#include "oracles.hpp"

using namespace qseries;

namespace
{

ExactPoly from_dense(const oracle::Poly &p)
{
    std::vector<std::pair<Exponents, Rational>> ts;
    for (std::size_t i = 0; i < p.size(); ++i) {
        Exponents e{};
        e[0] = static_cast<int>(i);
        ts.emplace_back(e, p[i]);
    }
    return ExactPoly::from_terms({"q"}, ts);
}

} // namespace

TEST_CASE("pochhammer: finite, negative and infinite lengths")
{
    auto ctx = Context::make({{"q", 10}, {"x", 6}});
    const Mono x = ctx->var("x");
    const Mono q = ctx->q(1);
    CHECK(poch(ctx, x, q, 0) == Series::constant(ctx, 1));
    auto two = Series::from_terms(ctx, {{{0, 0}, 1}, {{0, 1}, -1}, {{1, 1}, -1}, {{1, 2}, 1}});
    CHECK(poch(ctx, x, q, 2) == two);

    auto zc = Context::make({{"q", 10}, {"z", 6}});
    const Mono zq2 = zc->mono(1, {{"z", 1}, {"q", 2}});
    auto neg = poch(zc, zq2, zc->q(1), -1);
    CHECK(neg == invert(Series::constant(zc, 1) - Series::monomial(zc, zc->mono(1, {{"z", 1}, {"q", 1}}))));

    auto inf = poch(zc, zq2, zc->q(2), kInfinity);
    CHECK(inf.constant_term() == 1);
    CHECK(inf.coefficient({2, 1}) == -1);

    CHECK_THROWS_AS((void)poch(zc, zc->constant(2), zc->q(1), kInfinity), FormalDivergence);
    CHECK_THROWS_AS((void)poch(zc, zc->constant(1), zc->constant(1), kInfinity), FormalDivergence);
    // (q;q)_{-1} = 1/(1;q)_1 = 1/0
    CHECK_THROWS_AS((void)poch(zc, zc->q(1), zc->q(1), -1), NonUnit);
}

TEST_CASE("pochhammer with a series argument agrees with the monomial path")
{
    auto ctx = Context::make({{"q", 12}, {"z", 4}});
    auto arg = Series::monomial(ctx, ctx->mono(1, {{"z", 1}, {"q", 1}}));
    auto arg3 = Series::monomial(ctx, ctx->mono(1, {{"z", 1}, {"q", 3}}));
    for (int n : {0, 3, -2}) {
        CHECK(pochhammer({arg3, ctx->q(1), n}, ctx) == poch(ctx, ctx->mono(1, {{"z", 1}, {"q", 3}}), ctx->q(1), n));
    }
    CHECK_THROWS_AS((void)pochhammer({arg, ctx->q(1), -2}, ctx), DomainError);
    auto two_terms = arg + Series::monomial(ctx, ctx->q(2));
    auto direct = Series::constant(ctx, 1);
    for (int j = 0; j < 3; ++j) {
        direct = direct * (Series::constant(ctx, 1) - two_terms.mul_mono(ctx->q(j)));
    }
    CHECK(pochhammer({two_terms, ctx->q(1), 3}, ctx) == direct);
    auto inf = pochhammer({two_terms, ctx->q(1), kInfinity}, ctx);
    auto prod = Series::constant(ctx, 1);
    for (int j = 0; j <= 12; ++j) {
        prod = prod * (Series::constant(ctx, 1) - two_terms.mul_mono(ctx->q(j)));
    }
    CHECK(inf == prod);
}

TEST_CASE("property: Pochhammer splitting law")
{
    auto ctx = Context::make({{"q", 20}, {"x", 8}});
    const Mono x = ctx->var("x");
    const Mono q = ctx->q(1);
    for (int m = 0; m <= 8; ++m) {
        for (int n = 0; n <= 8; ++n) {
            auto lhs = poch(ctx, x, q, m + n);
            auto rhs = poch(ctx, x, q, m) * poch(ctx, x * q.pow(m), q, n);
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("q_binomial")
{
    CHECK(q_binomial(7, 0) == ExactPoly::constant({"q"}, 1));
    CHECK(q_binomial(2, 1) == from_dense({1, 1}));
    CHECK(q_binomial(4, 2) == from_dense({1, 1, 2, 1, 1}));
    CHECK(q_binomial(4, 2) == from_dense(oracle::gaussian_pascal(4, 2)));
    CHECK(q_binomial(3, 5).is_zero());
    CHECK(q_binomial(3, -1).is_zero());
}

TEST_CASE("property: Pascal recurrences for n <= 20")
{
    const ExactPoly one = ExactPoly::constant({"q"}, 1);
    for (int n = 1; n <= 20; ++n) {
        for (int k = 0; k <= n; ++k) {
            Exponents e1{};
            e1[0] = n - k;
            Exponents e2{};
            e2[0] = k;
            const auto a = q_binomial(n - 1, k) + q_binomial(n - 1, k - 1).mul_mono(Mono{1, e1});
            const auto b = q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).mul_mono(Mono{1, e2});
            REQUIRE(q_binomial(n, k) == a);
            REQUIRE(q_binomial(n, k) == b);
            REQUIRE(q_binomial(n, k) == from_dense(oracle::gaussian_pascal(n, k)));
        }
    }
}

TEST_CASE("tau")
{
    CHECK(tau(0) == ExactPoly::constant({"q"}, 1));
    CHECK(tau(1) == ExactPoly::constant({"q"}, -1));
    CHECK(tau(3) == ExactPoly::monomial({"q"}, Mono{-1, {3}}));
}

TEST_CASE("property: binomial times tau equals the q^{-n} Pochhammer ratio")
{
    const std::vector<std::string> names{"q"};
    const Mono q{1, {1}};
    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= 10; ++k) {
            const RationalFunction lhs(q_binomial(n, k) * tau(k));
            const RationalFunction rhs = RationalFunction(poch_exact(names, Mono{1, {-n}}, q, k).mul_mono(q.pow(n * k)),
                                                          poch_exact(names, q, q, k));
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("property: reversal of a Pochhammer quotient")
{
    const std::vector<std::string> names{"q", "a", "b"};
    const Mono q{1, {1}};
    const Mono a{1, {0, 1}};
    const Mono b{1, {0, 0, 1}};
    for (int n = 0; n <= 8; ++n) {
        for (int k = 0; k <= n; ++k) {
            const RationalFunction lhs(poch_exact(names, a, q, n - k), poch_exact(names, b, q, n - k));
            const Mono shift = q.pow(1 - n);
            RationalFunction rhs = RationalFunction(poch_exact(names, a, q, n), poch_exact(names, b, q, n))
                                   * RationalFunction(poch_exact(names, shift / b, q, k),
                                                      poch_exact(names, shift / a, q, k))
                                   * RationalFunction(ExactPoly::monomial(names, (b / a).pow(k)));
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("basic_hypergeometric: termination and zero parameters")
{
    auto ctx = Context::make({{"q", 30}, {"x", 6}});
    const Mono q = ctx->q(1);
    const Mono x = ctx->var("x");
    const std::vector<Mono> up{ctx->q(-2), ctx->q(1), ctx->q(2)};
    const std::vector<Mono> lo{ctx->q(3), ctx->q(5)};
    auto phi = basic_hypergeometric(ctx, up, lo, q, x * ctx->q(3));
    auto one = Series::constant(ctx, 1);
    auto one_minus = [&](int e) { return one - Series::monomial(ctx, ctx->q(e)); };
    // hand expansion of the three surviving terms
    CHECK(phi.coefficient_of({{"x", 0}}) == one);
    CHECK(phi.coefficient_of({{"x", 1}}) * one_minus(3) * one_minus(5)
          == -(one_minus(2) * one_minus(2)).mul_mono(ctx->q(1)));
    CHECK(phi.coefficient_of({{"x", 2}}) * one_minus(4) * one_minus(5) * one_minus(6)
          == (one_minus(1) * one_minus(2) * one_minus(2)).mul_mono(ctx->q(3)));
    // without the q^3 the x^2 coefficient carries q^{-3}
    CHECK_THROWS_AS((void)basic_hypergeometric(ctx, up, lo, q, x), DomainError);
    for (int k = 3; k <= 6; ++k) {
        CHECK(phi.coefficient_of({{"x", k}}).is_zero());
    }
    // the terminating sum does not depend on the x truncation beyond its degree
    auto wide = Context::make({{"q", 30}, {"x", 2}});
    auto phi2 = basic_hypergeometric(wide, up, lo, q, wide->var("x") * wide->q(3));
    CHECK(phi2.size() == phi.size());

    // an upper parameter 0 contributes (0;q)_n = 1
    auto z = Context::make({{"q", 20}, {"z", 5}});
    auto with_zero = basic_hypergeometric(z, {z->constant(0), z->q(1)}, {z->q(3)}, z->q(1), z->var("z"));
    auto without = basic_hypergeometric(z, {z->q(1)}, {z->q(3)}, z->q(1), z->var("z"));
    CHECK(with_zero == without);

    // series parameters agree with monomial parameters
    auto sp = basic_hypergeometric(z, std::vector<Series>{Series::monomial(z, z->q(1))},
                                   std::vector<Series>{Series::monomial(z, z->q(3))}, z->q(1),
                                   Series::monomial(z, z->var("z")));
    CHECK(sp == without);

    CHECK_THROWS_AS((void)basic_hypergeometric(z, {z->q(1)}, {z->q(2)}, z->q(1), z->constant(1)), FormalDivergence);
}

TEST_CASE("partial_theta")
{
    auto ctx = Context::make({{"q", 15}, {"x", 8}});
    CHECK(partial_theta(Series(ctx)) == Series::constant(ctx, 1));
    auto th = partial_theta(Series::monomial(ctx, ctx->var("x")));
    CHECK(th.coefficient({0, 0}) == 1);
    CHECK(th.coefficient({0, 1}) == -1);
    CHECK(th.coefficient({1, 2}) == 1);
    CHECK(th.coefficient({3, 3}) == -1);
    for (int n = 0; n <= 8; ++n) {
        const int e = n * (n - 1) / 2;
        if (e <= 15) {
            CHECK(th.coefficient({e, n}) == (n % 2 == 0 ? 1 : -1));
            CHECK(th.coefficient_of({{"x", n}}).size() == 1);
        }
    }
    CHECK_THROWS_AS((void)partial_theta(Series::constant(ctx, 1)), FormalDivergence);
}

TEST_CASE("bilateral window")
{
    CHECK(bilateral_window(20) == 6);
    CHECK(bilateral_window(21) == 6);
    CHECK(bilateral_window(22) == 7);
    CHECK(bilateral_window(1) == 1);
    for (int n = 1; n <= 100; ++n) {
        const int w = bilateral_window(n);
        CHECK(w * (w + 1) / 2 >= n);
        CHECK((w - 1) * w / 2 < n);
    }
}

TEST_CASE("bilateral sum: folded equals direct")
{
    // u^2 = q; weights make 1/ab positive: u -> 1, a, b -> -1
    auto ctx = Context::make({{"u", 40, false, 0, 1}, {"a", 44, true, 44, -1}, {"b", 44, true, 44, -1}}, 40, 2);
    auto sums = bilateral_sum_aaa(ctx, "a", "b");
    CHECK(sums.window == 6);
    CHECK_FALSE(sums.direct.inexact());
    CHECK_FALSE(sums.direct.is_zero());
    CHECK(sums.direct == sums.folded);
}

TEST_CASE("clearing_sum matches the uncleared definition")
{
    // With y = qw the q^{-1} disappears and the sum can be written directly.
    auto ctx = Context::make({{"q", 24}, {"w", 6}});
    const Mono q = ctx->q(1);
    const Mono w = ctx->var("w");
    const Mono q2 = ctx->q(2);
    for (int c : {1, 2}) {
        for (int n : {0, 1, 3, 5}) {
            Series direct(ctx);
            for (int k = 0; k <= n; ++k) {
                auto t = Series::monomial(ctx, ctx->q(c * k));
                t = mul_poch(t, w, q, 2 * k);
                t = div_poch(t, q2, q2, k);
                t = div_poch(t, (q * w).pow(2), q2, k);
                direct += t;
            }
            REQUIRE(clearing_sum(ctx, q * w, n, c) == direct);
        }
        Series direct(ctx);
        for (int k = 0; k <= 24; ++k) {
            auto t = Series::monomial(ctx, ctx->q(c * k));
            t = mul_poch(t, w, q, 2 * k);
            t = div_poch(t, q2, q2, k);
            t = div_poch(t, (q * w).pow(2), q2, k);
            direct += t;
        }
        CHECK(clearing_sum(ctx, q * w, kInfinity, c) == direct);
    }
}
