#include <doctest.h>

#include <set>

#include <qseries/errors.hpp>
#include <qseries/identities.hpp>
#include <qseries/qfunctions.hpp>

#include "oracles.hpp"

using namespace qseries;

namespace
{

oracle::Poly poly_power(int e, std::int64_t c = 1)
{
    oracle::Poly p(static_cast<std::size_t>(e) + 1, 0);
    p.back() = c;
    return p;
}

oracle::Poly poly_add(oracle::Poly a, const oracle::Poly &b)
{
    if (a.size() < b.size()) {
        a.resize(b.size(), 0);
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] += b[i];
    }
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
    return a;
}

// (s q^a; q^step)_k as a dense polynomial
oracle::Poly poly_poch(std::int64_t s, int a, int step, int k)
{
    oracle::Poly p{1};
    for (int i = 0; i < k; ++i) {
        oracle::Poly f = poly_power(a + i * step, -s);
        f[0] += 1;
        p = oracle::poly_mul(p, f);
    }
    return p;
}

} // namespace

TEST_CASE("registry: size, unique sorted ids, descriptions")
{
    const auto &cases = registry();
    CHECK(cases.size() >= 30);
    std::set<std::string> ids;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        CHECK(ids.insert(cases[i].id).second);
        CHECK_FALSE(cases[i].description.empty());
        CHECK(static_cast<bool>(cases[i].check));
        if (i > 0) {
            CHECK(cases[i - 1].id < cases[i].id);
        }
    }
    REQUIRE(find_case("EQ-KNOWN") != nullptr);
    CHECK(find_case("EQ-KNOWN")->mode == Mode::exact);
    REQUIRE(find_case("THM14") != nullptr);
    CHECK(find_case("THM14")->rescale);
    CHECK(find_case("NO-SUCH") == nullptr);
}

TEST_CASE("verify_identity: unknown id throws")
{
    CHECK_THROWS_AS((void)verify_identity("NO-SUCH"), UnknownCase);
}

TEST_CASE("every registered case passes at default orders")
{
    for (const auto &c : registry()) {
        CAPTURE(c.id);
        const auto r = run_case(c, Orders{});
        CHECK(r.status == Status::pass);
        CHECK(r.comparisons > 0);
        CHECK_FALSE(r.first_discrepancy.has_value());
    }
}

TEST_CASE("exact cases do not depend on the base order")
{
    Orders doubled;
    doubled.base *= 2;
    for (const auto &c : registry()) {
        if (c.mode != Mode::exact) {
            continue;
        }
        CAPTURE(c.id);
        CHECK(run_case(c, doubled).status == Status::pass);
    }
}

TEST_CASE("negative controls fail at a located monomial")
{
    REQUIRE(negative_controls().size() == 3);
    for (const auto &c : negative_controls()) {
        CAPTURE(c.id);
        const auto r = verify_identity(c.id);
        CHECK(r.status == Status::fail);
        REQUIRE(r.first_discrepancy.has_value());
        CHECK(r.first_discrepancy->lhs != r.first_discrepancy->rhs);
        CHECK_FALSE(r.first_discrepancy->label.empty());
    }
}

TEST_CASE("AY-2 at small orders")
{
    Orders small;
    small.base = 10;
    small.aux = 4;
    CHECK(verify_identity("AY-2", small).status == Status::pass);
    Orders tiny;
    tiny.base = 1;
    tiny.aux = 1;
    CHECK(verify_identity("AY-2", tiny).status == Status::pass);
}

TEST_CASE("THM12-A with y, z to order 6 and q to order 30")
{
    Orders o;
    o.base = 30;
    o.aux = 6;
    CHECK(verify_identity("THM12-A", o).status == Status::pass);
}

TEST_CASE("oracle: EQ-KNOWN closed form q^{2n^2+n} for n <= 8")
{
    for (int n = 0; n <= 8; ++n) {
        oracle::Poly s;
        for (int k = 0; k <= n; ++k) {
            oracle::Poly t = oracle::poly_mul(oracle::gaussian_pascal(2 * n + 1, 2 * k), poly_poch(1, 1, 2, k));
            t = oracle::poly_mul(t, poly_power(k * k - k, k % 2 == 0 ? 1 : -1));
            s = poly_add(s, t);
        }
        CAPTURE(n);
        CHECK(s == poly_power(2 * n * n + n));
    }
}

TEST_CASE("oracle: Chu-Vandermonde at r = 0, sum_k [m+k,k] q^k = [2m+1,m]")
{
    for (int m = 0; m <= 12; ++m) {
        oracle::Poly s;
        for (int k = 0; k <= m; ++k) {
            s = poly_add(s, oracle::poly_mul(oracle::gaussian_pascal(m + k, k), poly_power(k)));
        }
        CAPTURE(m);
        CHECK(s == oracle::gaussian_pascal(2 * m + 1, m));
    }
}

TEST_CASE("oracle: KEY-99 normalisation, sum_{k<=m} (q;q)_{m+k} q^k/(q^2;q^2)_k = (q^2;q^2)_m")
{
    constexpr int order = 80;
    for (int m = 0; m <= 8; ++m) {
        oracle::Dense sum(order, 0);
        for (int k = 0; k <= m; ++k) {
            oracle::Dense t(order);
            for (int i = 1; i <= m + k; ++i) {
                t.mul_one_minus(1, i);
            }
            for (int i = 1; i <= k; ++i) {
                t.div_one_minus(1, 2 * i);
            }
            t.shift(k);
            sum += t;
        }
        oracle::Dense rhs(order);
        for (int i = 1; i <= m; ++i) {
            rhs.mul_one_minus(1, 2 * i);
        }
        CAPTURE(m);
        CHECK(sum.c == rhs.c);
    }
}

TEST_CASE("sequences: small values")
{
    auto ctx = Context::make({{"q", 40}, {"x", 12}, {"y", 12}});
    const Context &c = *ctx;
    const Series one = Series::constant(ctx, 1);
    const Mono x = c.var("x");

    CHECK(eval_sequence("U", 0, ctx) == one);
    CHECK(eval_sequence("U", 1, ctx) == one + Series::monomial(ctx, x));
    // U_1(q^2) = 1 + q^2 = ((q;q^2)_2 + q^2 (q^2;q^2)_1)/(q;q)_1
    const Series at_q2 = substitute(eval_sequence("U", 1, ctx), "x", c.q(2));
    CHECK(at_q2 == one + Series::monomial(ctx, c.q(2)));
    Series key00 = mul_poch(one, c.q(1), c.q(2), 2) + mul_poch(Series::monomial(ctx, c.q(2)), c.q(2), c.q(2), 1);
    CHECK(div_poch(key00, c.q(1), c.q(1), 1) == at_q2);

    CHECK(eval_sequence("T_thm12", 0, ctx) == div_poch(one, c.var("y"), c.q(1), 1));
    CHECK_THROWS((void)eval_sequence("no-such", 0, ctx));
}

TEST_CASE("sequences: evaluated sums are non-trivial")
{
    auto ctx = Context::make({{"q", 40}, {"x", 12}, {"y", 12}});
    for (const auto &name : sequence_names()) {
        CAPTURE(name);
        CHECK(eval_sequence(name, 3, ctx).size() > 10);
    }
}

TEST_CASE("check_recurrences through m = 12")
{
    const auto r = check_recurrences(12);
    CHECK(r.status == Status::pass);
    CHECK(r.comparisons > 100);
}

TEST_CASE("WZ certificates: pointwise, telescoped and recurrence")
{
    auto ctx = Context::make({{"q", 30}, {"x", 8}, {"y", 8}});
    CHECK(verify_wz_certificate("thm12-a", 1, ctx).status == Status::pass);
    for (const auto &name : wz_certificate_names()) {
        CAPTURE(name);
        const auto r = verify_wz_certificate(name, 12);
        CHECK(r.status == Status::pass);
        CHECK(r.comparisons > 100);
    }
    CHECK_THROWS((void)verify_wz_certificate("no-such", 3));
    CHECK_THROWS((void)verify_wz_certificate("thm12-a", 0));
}

TEST_CASE("lagrange: trivial bases and roundtrips")
{
    auto ctx = Context::make({{"q", 16}, {"z", 5}});
    const Context &c = *ctx;
    const Mono z = c.var("z");
    const Series one = Series::constant(ctx, 1);

    // all x_i = 0: a_n = [z^n] F
    const std::vector<Mono> zeros(6, c.constant(0));
    Series f = one + Series::monomial(ctx, c.q(1) * z) + Series::monomial(ctx, c.q(3) * z.pow(4));
    const auto a0 = lagrange_coefficients(f, zeros, 5);
    CHECK(a0[0] == one);
    CHECK(a0[1] == Series::monomial(ctx, c.q(1)));
    CHECK(a0[2].is_zero());
    CHECK(a0[4] == Series::monomial(ctx, c.q(3)));

    // F = 1/(1 - x_1 z)
    std::vector<Mono> xs;
    for (int i = 1; i <= 6; ++i) {
        xs.push_back(c.q(i));
    }
    const auto a1 = lagrange_coefficients(one.div_one_minus(xs[0] * z), xs, 5);
    CHECK(a1[0] == one);
    for (int n = 1; n <= 5; ++n) {
        CHECK(a1[static_cast<std::size_t>(n)].is_zero());
    }
    CHECK(lagrange_expand(ctx, xs, {one}) == one.div_one_minus(xs[0] * z));

    const std::vector<Series> as{one, Series::monomial(ctx, c.q(2, Rational{-3, 2})), Series(ctx),
                                 one + Series::monomial(ctx, c.q(1))};
    CHECK(lagrange_roundtrip(xs, as, 5, ctx).status == Status::pass);
    CHECK(lagrange_suite().status == Status::pass);
}

TEST_CASE("suites pass and carry their ids")
{
    for (const auto &id : suite_ids()) {
        CAPTURE(id);
        const auto r = verify_identity(id);
        CHECK(r.id == id);
        CHECK(r.status == Status::pass);
    }
}
