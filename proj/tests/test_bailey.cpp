#include <doctest.h>

#include <qseries/bailey.hpp>
#include <qseries/qfunctions.hpp>

#include "oracles.hpp"

using namespace qseries;

namespace
{

ContextPtr y_context(int q_order = 30, int y_order = 10)
{
    return Context::make({{"q", q_order}, {"y", y_order}});
}

// u^2 = q, with formal Laurent a and b.
ContextPtr ab_context(int u_order = 40, int window = 12)
{
    return Context::make({{"u", u_order}, {"a", 4, true, window}, {"b", 4, true, window}}, 0, 2);
}

} // namespace

TEST_CASE("pair_deduce222: first alpha and beta terms")
{
    auto ctx = y_context();
    const auto pair = pair_deduce222();
    const Mono y = ctx->var("y");
    const Mono q = ctx->q(1);

    CHECK(pair.alpha(ctx, 0) == Series::constant(ctx, 1));
    CHECK(pair.alpha(ctx, 1) == Series::monomial(ctx, y));
    CHECK(pair.alpha(ctx, 2) == Series::monomial(ctx, y.pow(2) * q));

    const Series one = Series::constant(ctx, 1);
    // n = 0: both Pochhammer lengths in the defining sum are zero.
    CHECK(pair.beta(ctx, 0) == one);

    // beta_1 (1-q)(1-yq)(1-yq^2) = 1 + y - yq - yq^2
    const Series cleared = pair.beta(ctx, 1).mul_one_minus(q).mul_one_minus(y * q).mul_one_minus(y * q.pow(2));
    const Series expected = one + Series::monomial(ctx, y) - Series::monomial(ctx, y * q) -
                            Series::monomial(ctx, y * q.pow(2));
    CHECK(cleared == expected);
}

TEST_CASE("verify_bailey_pair: unit pair and pair_deduce222")
{
    auto ctx = y_context();
    const auto unit = verify_bailey_pair(unit_pair(), 8, ctx);
    CHECK(unit.status == Status::pass);
    CHECK(unit.comparisons == 9);

    const auto r = verify_bailey_pair(pair_deduce222(), 8, ctx);
    CHECK(r.status == Status::pass);
    CHECK_FALSE(r.first_discrepancy.has_value());
}

TEST_CASE("verify_bailey_pair: perturbed beta_2 is located")
{
    auto ctx = y_context();
    const auto bad = perturb_beta(pair_deduce222(), 2, base_power(1));
    const auto r = verify_bailey_pair(bad, 8, ctx);
    REQUIRE(r.status == Status::fail);
    REQUIRE(r.first_discrepancy.has_value());
    CHECK(r.first_discrepancy->label == "beta_2");
    CHECK(r.first_discrepancy->monomial() == "q");
    CHECK(r.first_discrepancy->lhs - r.first_discrepancy->rhs == Rational{1});
}

TEST_CASE("Bailey lemma with pair_deduce222 at t = y and generic a, b")
{
    auto ctx = Context::make({{"q", 14}, {"y", 6}, {"a", 2, true, 8}, {"b", 2, true, 8}});
    const auto sides = apply_bailey_lemma(pair_deduce222(), BaileyParam::of(formal_var("a")),
                                          BaileyParam::of(formal_var("b")), ctx);
    CHECK_FALSE(sides.lhs.inexact());
    CHECK_FALSE(sides.rhs.inexact());
    CHECK_FALSE(sides.lhs.is_zero());
    CHECK(sides.lhs == sides.rhs);
}

TEST_CASE("Bailey lemma at t = q with generic a, b")
{
    auto ctx = ab_context(30);
    const Context &c = *ctx;
    const auto sides =
        apply_bailey_lemma(pair_deduce222(base_power(1)), BaileyParam::of(formal_var("a")),
                           BaileyParam::of(formal_var("b")), ctx);
    CHECK_FALSE(sides.lhs.inexact());
    CHECK(sides.lhs == sides.rhs);

    const Mono a = c.var("a");
    const Mono b = c.var("b");
    const Mono q = c.q(1);

    // sum (a,b;q)_n/(q^2/a,q^2/b;q)_n (ab)^{-n} q^{n^2/2+5n/2}
    Series lhs(ctx);
    for (int n = 0; n <= 10; ++n) {
        Series t = Series::monomial(ctx, (a * b).pow(-n) * c.q_half(n * n + 5 * n));
        t = mul_poch(mul_poch(t, a, q, n), b, q, n);
        lhs += div_poch(div_poch(t, q.pow(2) / a, q, n), q.pow(2) / b, q, n);
    }
    CHECK(lhs == sides.lhs);

    // (q^2, q^2/ab;q)_inf/(q^2/a, q^2/b;q)_inf 3phi2[a, b, -q; q^{3/2}, -q^{3/2}; q, q^2/ab]
    Series rhs = basic_hypergeometric(ctx, {a, b, c.q(1, -1)}, {c.q_half(3), c.q_half(3, -1)}, q,
                                      q.pow(2) / (a * b));
    rhs = mul_poch(mul_poch(rhs, q.pow(2), q, kInfinity), q.pow(2) / (a * b), q, kInfinity);
    rhs = div_poch(div_poch(rhs, q.pow(2) / a, q, kInfinity), q.pow(2) / b, q, kInfinity);
    CHECK(rhs == sides.rhs);
}

TEST_CASE("Bailey lemma at t = q with both parameters at infinity")
{
    const int order = 36; // q-order in a plain context
    auto ctx = Context::make({{"q", order}});
    const auto sides =
        apply_bailey_lemma(pair_deduce222(base_power(1)), BaileyParam::infinity(), BaileyParam::infinity(), ctx);

    // Left: sum_n q^{3n(n+1)/2}
    oracle::Dense lhs(order, 0);
    for (int n = 0; 3 * n * (n + 1) / 2 <= order; ++n) {
        lhs.c[static_cast<std::size_t>(3 * n * (n + 1) / 2)] += 1;
    }
    CHECK(oracle::embed(ctx, lhs, 1) == sides.lhs);

    // Right: (q;q)_inf sum_n (-q;q)_n q^{n^2+n} / ((q;q)_n (q;q^2)_{n+1})
    oracle::Dense sum(order, 0);
    for (int n = 0; n * n + n <= order; ++n) {
        oracle::Dense t(order);
        for (int j = 1; j <= n; ++j) {
            t.mul_one_minus(-1, j).div_one_minus(1, j);
        }
        for (int j = 0; j <= n; ++j) {
            t.div_one_minus(1, 2 * j + 1);
        }
        sum += t.shift(n * n + n);
    }
    oracle::Dense euler(order);
    for (int j = 1; j <= order; ++j) {
        euler.mul_one_minus(1, j);
    }
    CHECK(oracle::embed(ctx, euler * sum, 1) == sides.rhs);

    // The same identity under the rescale.
    auto uctx = Context::make({{"u", 2 * order}}, 0, 2);
    const auto usides =
        apply_bailey_lemma(pair_deduce222(base_power(1)), BaileyParam::infinity(), BaileyParam::infinity(), uctx);
    CHECK(usides.lhs == usides.rhs);
    CHECK(oracle::embed(uctx, lhs, 2) == usides.lhs);
}

TEST_CASE("Bailey lemma: q^{-M} parameter approaches the infinity marker")
{
    const int m = 10;
    auto ctx = Context::make({{"q", 30}});
    const auto pair = pair_deduce222(base_power(1));
    const auto limit = apply_bailey_lemma(pair, BaileyParam::infinity(), BaileyParam::infinity(), ctx);
    const auto finite = apply_bailey_lemma(pair, BaileyParam::q_neg_power(m), BaileyParam::infinity(), ctx);
    CHECK(finite.lhs == finite.rhs);
    for (int e = 0; e <= m; ++e) {
        Exponents ex{};
        ex[0] = e;
        CHECK(finite.lhs.coefficient(ex) == limit.lhs.coefficient(ex));
    }
    CHECK(finite.lhs != limit.lhs);
}

TEST_CASE("Bailey lemma: unit pair reduces to the q-Gauss product")
{
    // alpha = delta_{n0}: LHS = 1.
    auto ctx = Context::make({{"q", 16}, {"y", 6}, {"a", 2, true, 8}, {"b", 2, true, 8}});
    const auto sides = apply_bailey_lemma(unit_pair(), BaileyParam::of(formal_var("a")),
                                          BaileyParam::of(formal_var("b")), ctx);
    CHECK(sides.lhs == Series::constant(ctx, 1));
    CHECK(sides.rhs == sides.lhs);
}
