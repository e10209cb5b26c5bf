#include <doctest.h>

#include <random>

#include <qseries/errors.hpp>
#include <qseries/qfunctions.hpp>
#include <qseries/series.hpp>

#include "oracles.hpp"

using namespace qseries;

namespace
{

ContextPtr qz_context(int q_order, int z_order)
{
    return Context::make({{"q", q_order}, {"z", z_order}});
}

Series mono(const ContextPtr &ctx, Rational c, int qe, int ze = 0)
{
    Exponents e{};
    e[0] = qe;
    e[1] = ze;
    return Series::monomial(ctx, Mono{std::move(c), e});
}

} // namespace

TEST_CASE("add: cancellation, identity and truncation")
{
    auto ctx = qz_context(3, 2);
    auto one = Series::constant(ctx, 1);
    auto q = mono(ctx, 1, 1);
    CHECK((one + q) + (one - q) == Series::constant(ctx, 2));
    auto f = one + q + mono(ctx, 3, 2, 1);
    CHECK(f + Series(ctx) == f);
    auto g = mono(ctx, 1, 3) + mono(ctx, 1, 4);
    CHECK(q + g == q + mono(ctx, 1, 3));
    CHECK((q + g).size() == 2);
}

TEST_CASE("mul: telescoping and truncation")
{
    const int n = 6;
    auto ctx = qz_context(10, n);
    Series geo(ctx);
    for (int i = 0; i <= n; ++i) {
        geo += mono(ctx, 1, 0, i);
    }
    auto one = Series::constant(ctx, 1);
    CHECK((one - mono(ctx, 1, 0, 1)) * geo == one);
    CHECK((one - mono(ctx, 1, 1)) * (one + mono(ctx, 1, 1)) == one - mono(ctx, 1, 2));
    auto ctx1 = qz_context(10, 1);
    auto z = mono(ctx1, 1, 0, 1);
    CHECK((z * z).is_zero());
}

TEST_CASE("mul rejects mismatched contexts")
{
    auto a = Series::constant(qz_context(4, 2), 1);
    auto b = Series::constant(qz_context(5, 2), 1);
    CHECK_THROWS_AS((void)(a * b), IncompatibleContext);
    CHECK_THROWS_AS((void)(a + b), IncompatibleContext);
}

TEST_CASE("invert")
{
    const int n = 12;
    auto ctx = Context::make({{"q", n}});
    auto one = Series::constant(ctx, 1);
    auto q = Series::monomial(ctx, ctx->q(1));
    Series geo(ctx);
    Series half_geo(ctx);
    for (int i = 0; i <= n; ++i) {
        geo += Series::monomial(ctx, ctx->q(i));
        half_geo += Series::monomial(ctx, ctx->q(i, Rational(1, std::int64_t{1} << (i + 1))));
    }
    CHECK(invert(one - q) == geo);
    CHECK(invert(one) == one);
    auto inv = invert(Series::constant(ctx, 2) - q);
    CHECK(inv == half_geo);
    CHECK((Series::constant(ctx, 2) - q) * inv == one);
    CHECK_THROWS_AS((void)invert(q), NonUnit);
}

TEST_CASE("substitute")
{
    auto src = Context::make({{"q", 6}});
    auto dst = Context::make({{"u", 12}}, 0, 2);
    auto f = Series::from_terms(src, {{{0}, 1}, {{1}, 1}, {{3}, 1}});
    auto g = substitute(f, {{"q", dst->var("u", 2)}}, dst);
    CHECK(g == Series::from_terms(dst, {{{0}, 1}, {{2}, 1}, {{6}, 1}}));

    auto ctx = Context::make({{"q", 12}, {"y", 4}});
    auto y = Series::monomial(ctx, ctx->var("y"));
    auto inv = invert(Series::constant(ctx, 1) - y);
    auto h = substitute(inv, "y", ctx->q(3));
    Series expect(ctx);
    for (int i = 0; i <= 4; ++i) {
        expect += Series::monomial(ctx, ctx->q(3 * i));
    }
    CHECK(h == expect);

    auto lz = Context::make({{"q", 6}, {"z", 4, true, 4}});
    auto z2 = Series::monomial(lz, lz->var("z", 2));
    auto sub = substitute(z2, "z", lz->mono(1, {{"q", 1}, {"z", -1}}));
    CHECK(sub == Series::monomial(lz, lz->mono(1, {{"q", 2}, {"z", -2}})));

    CHECK_THROWS_AS((void)substitute(Series::monomial(ctx, ctx->var("y")), "y", ctx->q(-1)), DomainError);
}

TEST_CASE("coefficient_of")
{
    const int n = 12;
    auto ctx = Context::make({{"q", n}});
    auto euler = poch(ctx, ctx->q(1), ctx->q(1), kInfinity);
    auto parts = invert(euler);
    CHECK(parts.coefficient({3}) == oracle::partition_count(3));
    for (int k = 0; k <= n; ++k) {
        CHECK(parts.coefficient({k}) == oracle::partition_count(k));
    }

    auto qz = qz_context(8, 4);
    auto f = poch(qz, qz->mono(1, {{"q", 1}, {"z", 1}}), qz->q(2), kInfinity);
    CHECK(f.coefficient({1, 1}) == -1);
    auto z0 = f.coefficient_of({{"z", 0}});
    CHECK(z0 == Series::constant(qz, 1));
    auto z1 = f.coefficient_of({{"z", 1}});
    CHECK(z1.coefficient({1, 0}) == -1);
    CHECK_THROWS_AS((void)f.coefficient({9, 0}), OutOfWindow);
}

TEST_CASE("formal_sum and formal_product")
{
    const int n = 8;
    auto ctx = qz_context(4, n);
    auto z = ctx->var("z");
    auto geo = formal_sum(
        ctx, "z", [](int k) { return k; }, [&](int k) { return Series::monomial(ctx, z.pow(k)); });
    CHECK(geo == invert(Series::constant(ctx, 1) - Series::monomial(ctx, z)));

    auto x_ctx = Context::make({{"q", 10}, {"x", 6}});
    auto theta = formal_sum(
        x_ctx, "x", [](int k) { return k; },
        [&](int k) { return Series::monomial(x_ctx, tau_mono(*x_ctx, k) * x_ctx->var("x", k)); });
    CHECK(theta == partial_theta(Series::monomial(x_ctx, x_ctx->var("x"))));

    CHECK_THROWS_AS((void)formal_sum(
                        ctx, "q", [](int) { return 0; }, [&](int) { return Series::constant(ctx, 1); }),
                    FormalDivergence);

    auto q5 = Context::make({{"q", 5}});
    auto euler = formal_product(
        q5, "q", [](int j) { return j + 1; },
        [&](int j) { return Series::constant(q5, 1) - Series::monomial(q5, q5->q(j + 1)); });
    CHECK(euler == oracle::pentagonal(q5));

    auto single = formal_product(
        q5, "q", [](int j) { return j == 0 ? 1 : 6; },
        [&](int) { return Series::constant(q5, 1) - Series::monomial(q5, q5->q(2)); });
    CHECK(single == Series::constant(q5, 1) - Series::monomial(q5, q5->q(2)));

    CHECK_THROWS_AS((void)formal_product(
                        q5, "q", [](int j) { return j; },
                        [&](int j) { return Series::constant(q5, 2) - Series::monomial(q5, q5->q(j)); }),
                    FormalDivergence);
}

TEST_CASE("formal_sum is independent of the cap once it is large enough")
{
    auto ctx = Context::make({{"q", 30}});
    auto gen = [&](int k) { return Series::monomial(ctx, ctx->q(k * k)); };
    auto bound = [](int k) { return k * k; };
    auto a = formal_sum(ctx, "q", bound, gen, 6);
    auto b = formal_sum(ctx, "q", bound, gen, 100);
    CHECK(a == b);
    CHECK_THROWS_AS((void)formal_sum(ctx, "q", bound, gen, 3), FormalDivergence);
}

TEST_CASE("rendering is deterministic graded-lex")
{
    auto ctx = qz_context(4, 4);
    auto f = Series::from_terms(ctx, {{{0, 2}, 3}, {{1, 0}, -1}, {{0, 0}, 1}, {{2, 0}, Rational(1, 2)}});
    CHECK(f.str() == "1 - q + 3*z^2 + 1/2*q^2");
    CHECK(Series(ctx).str() == "0");
}

TEST_CASE("Laurent clipping is detected")
{
    auto ctx = Context::make({{"q", 4}, {"x", 2, true, 2}});
    auto x = Series::monomial(ctx, ctx->var("x"));
    auto xi = Series::monomial(ctx, ctx->var("x", -1));
    auto big = x * x * x; // x^3 is clipped
    CHECK(big.is_zero());
    CHECK(big.clipped());
    CHECK((big * xi).inexact());
    CHECK_FALSE((x * xi).inexact());
}

// Property tests over seeded random inputs.

namespace
{

Series random_series(std::mt19937 &rng, const ContextPtr &ctx, int terms, bool unit)
{
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    SeriesBuilder b(ctx);
    const int qo = ctx->order(0);
    for (int i = 0; i < terms; ++i) {
        Exponents e{};
        for (std::size_t v = 0; v < ctx->arity(); ++v) {
            std::uniform_int_distribution<int> ex(ctx->lower(v), ctx->order(v));
            e[v] = ex(rng);
        }
        if (ctx->weighted()) {
            // keep the weight admissible by raising the base exponent
            while (ctx->weight_of(e) < 0 && e[0] < qo) {
                ++e[0];
            }
            if (ctx->weight_of(e) < 0) {
                continue;
            }
        }
        b.add(e, Rational(coeff(rng), den(rng)));
    }
    Series s = b.build();
    if (unit) {
        s = s - Series::constant(ctx, s.constant_term()) + Series::constant(ctx, Rational(den(rng), 1));
    }
    return s;
}

std::vector<ContextPtr> property_contexts()
{
    return {
        Context::make({{"q", 8}, {"z", 3}}),
        Context::make({{"q", 6}, {"y", 2}, {"z", 2}}),
        // graded: q weight 2, x Laurent weight 1, bound 8 keeps x in [-8, 8]
        Context::make({{"q", 8, false, 0, 2}, {"x", 8, true, 16, 1}}, 8),
    };
}

} // namespace

TEST_CASE("property: ring laws (200 cases per context)")
{
    std::mt19937 rng(20240611);
    for (const auto &ctx : property_contexts()) {
        for (int t = 0; t < 200; ++t) {
            auto a = random_series(rng, ctx, 6, false);
            auto b = random_series(rng, ctx, 6, false);
            auto c = random_series(rng, ctx, 6, false);
            REQUIRE(a * b == b * a);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE((a + b) - b == a);
            REQUIRE_FALSE(((a * b) * c).inexact());
        }
    }
}

TEST_CASE("property: inversion (200 cases per context)")
{
    std::mt19937 rng(7);
    for (const auto &ctx : property_contexts()) {
        const auto one = Series::constant(ctx, 1);
        for (int t = 0; t < 200; ++t) {
            auto f = random_series(rng, ctx, 5, true);
            REQUIRE(f * invert(f) == one);
        }
    }
}

TEST_CASE("property: substitution is a ring homomorphism (200 cases each)")
{
    std::mt19937 rng(99);
    auto src = Context::make({{"q", 8}, {"z", 3}});
    auto dst = Context::make({{"u", 16}, {"z", 3}}, 0, 2);
    for (int t = 0; t < 200; ++t) {
        auto f = random_series(rng, src, 6, false);
        auto g = random_series(rng, src, 6, false);
        const Substitution rescale{{"q", dst->var("u", 2)}};
        REQUIRE(substitute(f * g, rescale, dst) == substitute(f, rescale, dst) * substitute(g, rescale, dst));
        const Mono qz = src->mono(2, {{"q", 1}, {"z", 1}});
        REQUIRE(substitute(f * g, "z", qz) == substitute(f, "z", qz) * substitute(g, "z", qz));
        REQUIRE(substitute(f + g, "z", qz) == substitute(f, "z", qz) + substitute(g, "z", qz));
    }
}

TEST_CASE("property: coefficient extraction is additive")
{
    std::mt19937 rng(5);
    auto ctx = Context::make({{"q", 8}, {"z", 3}});
    for (int t = 0; t < 200; ++t) {
        auto f = random_series(rng, ctx, 8, false);
        auto g = random_series(rng, ctx, 8, false);
        const int k = t % 4;
        REQUIRE((f + g).coefficient_of({{"z", k}}) == f.coefficient_of({{"z", k}}) + g.coefficient_of({{"z", k}}));
    }
}
