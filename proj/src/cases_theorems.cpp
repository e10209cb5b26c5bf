// Infinite-series identities: the AY family, their y-forms, the
// theta-type sums, and the corollaries of the Bailey lemma.
#include "case_support.hpp"

#include <qseries/bailey.hpp>
#include <qseries/errors.hpp>

namespace qseries::detail
{
namespace
{

ContextPtr qz_context(const Orders &o)
{
    return Context::make({{"q", o.base}, {"z", o.aux}});
}

ContextPtr qzy_context(const Orders &o)
{
    return Context::make({{"q", o.base}, {"z", o.aux}, {"y", o.aux}});
}

// sum_n z^{n-1} q^n / (q;q^2)_n, n >= 1
Series ay_common_rhs(const ContextPtr &ctx)
{
    const Context &c = *ctx;
    const Mono z = c.var("z");
    return ideal_sum(
        ctx, [&](int n) { return z.pow(n - 1) * c.q(n); },
        [&](int n) { return div_poch(mono(ctx, z.pow(n - 1) * c.q(n)), c.q(1), c.q(2), n); }, 1);
}

void ay1(const Orders &o, ReportBuilder &rb)
{
    auto ctx = qz_context(o);
    const Context &c = *ctx;
    const Mono z = c.var("z");
    const Series lhs = ideal_sum(
        ctx, [&](int n) { return z.pow(n) * c.q(2 * n * n + 2 * n + 1); },
        [&](int n) {
            Series t = mono(ctx, z.pow(n) * c.q(2 * n * n + 2 * n + 1));
            t = div_poch(t, c.q(1), c.q(2), n + 1);
            return div_poch(t, z * c.q(1), c.q(2), n + 1);
        });
    rb.compare("sum", lhs, ay_common_rhs(ctx));
}

void ay2(const Orders &o, ReportBuilder &rb)
{
    auto ctx = qz_context(o);
    const Context &c = *ctx;
    const Mono z = c.var("z");
    const Series lhs = ideal_sum(
        ctx, [&](int n) { return c.q(n); },
        [&](int n) {
            Series t = mul_poch(mono(ctx, c.q(n)), -(z * c.q(n + 1)), c.q(1), n);
            return mul_poch(t, -(z * c.q(2 * n + 2)), c.q(2), kInfinity);
        });
    const Series rhs = ideal_sum(
        ctx, [&](int n) { return z.pow(n) * c.q(n * n + n); },
        [&](int n) { return div_poch(mono(ctx, z.pow(n) * c.q(n * n + n)), c.q(1), c.q(2), n + 1); });
    rb.compare("sum", lhs, rhs);
}

void ay3(const Orders &o, ReportBuilder &rb)
{
    auto ctx = qz_context(o);
    const Context &c = *ctx;
    const Mono z = c.var("z");
    const Series lhs = ideal_sum(
        ctx, [&](int n) { return c.q(n); },
        [&](int n) {
            Series t = div_poch(mono(ctx, c.q(n)), z * c.q(n), c.q(1), n + 1);
            return div_poch(t, z * c.q(2 * n + 2), c.q(2), kInfinity);
        },
        1);
    rb.compare("sum", lhs, ay_common_rhs(ctx));
}

void thm12a(const Orders &o, ReportBuilder &rb)
{
    auto ctx = qzy_context(o);
    const Context &c = *ctx;
    const Mono z = c.var("z");
    const Mono y = c.var("y");
    const Mono q = c.q(1);
    const Series lhs = ideal_sum(
        ctx, [&](int n) { return y.pow(n); },
        [&](int n) {
            Series t = mul_poch(mono(ctx, y.pow(n)), -(z * c.q(n + 1)), q, n);
            return mul_poch(t, -(z * c.q(2 * n + 2)), c.q(2), kInfinity);
        });
    const auto lead = [&](int n) { return z.pow(n) * c.q(n * n + n); };
    const Series rhs = ideal_sum(ctx, lead, [&](int n) {
        Series t = clearing_sum(ctx, y, n, 2).mul_mono(lead(n));
        t = mul_poch(t, -y, q, n);
        return div_poch(t, y * c.q(n), q, n + 1);
    });
    rb.compare("sum", lhs, rhs);
    // The z^n coefficients in closed form.
    const Series via_f =
        ideal_sum(ctx, lead, [&](int n) { return eval_sequence("f", n, ctx).mul_mono(z.pow(n)); });
    rb.compare("coefficients", rhs, via_f);
}

void thm12b(const Orders &o, ReportBuilder &rb)
{
    auto ctx = qzy_context(o);
    const Context &c = *ctx;
    const Mono z = c.var("z");
    const Mono y = c.var("y");
    const Mono q = c.q(1);
    const Series lhs = ideal_sum(
        ctx, [&](int n) { return y.pow(n - 1); },
        [&](int n) {
            Series t = div_poch(mono(ctx, y.pow(n - 1)), z * c.q(n), q, n + 1);
            return div_poch(t, z * c.q(2 * n + 2), c.q(2), kInfinity);
        },
        1);
    const auto lead = [&](int n) { return (q * z).pow(n); };
    const Series rhs = ideal_sum(ctx, lead, [&](int n) {
        Series t = clearing_sum(ctx, y, n, 1).mul_mono(lead(n));
        t = mul_poch(t, -y, q, n);
        return div_poch(t, y * c.q(n), q, n + 1);
    });
    rb.compare("sum", lhs, rhs);
    const Series via_g =
        ideal_sum(ctx, lead, [&](int n) { return eval_sequence("g", n, ctx).mul_mono(z.pow(n)); });
    rb.compare("coefficients", lhs.mul_mono(y), via_g);
}

// Both sides multiplied by (q^2;q^2)_n (y^2;q^2)_n.
void thm13a(const Orders &, ReportBuilder &rb)
{
    const PolyVars v({"q", "y"});
    const Mono q = v.q(1);
    const Mono q2 = v.q(2);
    const Mono y = v.var("y");
    for (int n = 0; n <= 12; ++n) {
        ExactPoly lhs = v.c(0);
        ExactPoly rhs = v.c(0);
        for (int k = 0; k <= n; ++k) {
            lhs += v.p(v.q(k)) * v.poch(y * v.q(n), k) * v.poch(v.q(2 * k + 2), q2, n - k);
            rhs += v.p(v.q(k)) * v.poch(y * v.q(-1), 2 * k) * v.poch(v.q(2 * k + 2), q2, n - k) *
                   v.poch(y.pow(2) * v.q(2 * k), q2, n - k);
        }
        lhs *= v.poch(y.pow(2), q2, n);
        rhs *= v.poch(-y, q, n);
        rb.compare(at("n", n), lhs, rhs);
    }
}

// Both sides multiplied by (y;q)_{2n+1}.
void thm13b(const Orders &, ReportBuilder &rb)
{
    const PolyVars v({"q", "y"});
    const Mono q = v.q(1);
    const Mono q2 = v.q(2);
    const Mono y = v.var("y");
    for (int n = 0; n <= 12; ++n) {
        ExactPoly lhs = v.c(0);
        ExactPoly rhs = v.c(0);
        for (int k = 0; k <= n; ++k) {
            lhs += v.qbin(n, k) * v.p(y.pow(k) * v.q(k * (k - 1) / 2)) * v.poch(q, k) *
                   v.poch(y * v.q(n + k + 1), n - k);
            rhs += v.p(v.q(2 * k)) * v.poch(y * v.q(-1), 2 * k) * v.poch(v.q(2 * k + 2), q2, n - k) *
                   v.poch(y.pow(2) * v.q(2 * k), q2, n - k);
        }
        lhs *= v.poch(y, n);
        rb.compare(at("n", n), lhs, rhs);
    }
}

struct Sides {
    Series lhs;
    Series rhs;
};

// sum_k y^k q^{k(k-1)/2}  and  (q^2;q^2)_inf (-y;q)_inf 2phi1[y/q, y; y^2; q^2, q^2]
Sides theta_sides(const ContextPtr &ctx)
{
    const Context &c = *ctx;
    const Mono y = c.var("y");
    Series lhs = ideal_sum(
        ctx, [&](int k) { return y.pow(k) * c.q(k * (k - 1) / 2); },
        [&](int k) { return mono(ctx, y.pow(k) * c.q(k * (k - 1) / 2)); });
    Series rhs = clearing_sum(ctx, y, kInfinity, 2);
    rhs = mul_poch(rhs, c.q(2), c.q(2), kInfinity);
    rhs = mul_poch(rhs, -y, c.q(1), kInfinity);
    return {std::move(lhs), std::move(rhs)};
}

void thm13c(const Orders &o, ReportBuilder &rb)
{
    auto ctx = Context::make({{"q", o.base}, {"y", o.aux}});
    const auto s = theta_sides(ctx);
    rb.compare("sum", s.lhs, s.rhs);
}

// (-q;q)_{2r} sum_k q^{k(k+1)/2+2rk} = (q^2;q^2)_inf^2/(q;q)_inf sum_k q^{2k}(q^{2r};q)_{2k}/(q^2,q^{4r+2};q^2)_k
void thm13d(const Orders &o, ReportBuilder &rb)
{
    auto ctx = Context::make({{"q", o.base}});
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const Mono q2 = c.q(2);
    for (int r = 0; r <= 2; ++r) {
        Series lhs = ideal_sum(
            ctx, [&](int k) { return c.q(k * (k + 1) / 2 + 2 * r * k); },
            [&](int k) { return mono(ctx, c.q(k * (k + 1) / 2 + 2 * r * k)); });
        lhs = mul_poch(lhs, -q, q, 2 * r);
        Series rhs = ideal_sum(
            ctx, [&](int k) { return c.q(2 * k); },
            [&](int k) {
                Series t = mul_poch(mono(ctx, c.q(2 * k)), c.q(2 * r), q, 2 * k);
                t = div_poch(t, q2, q2, k);
                return div_poch(t, c.q(4 * r + 2), q2, k);
            });
        rhs = mul_poch(mul_poch(rhs, q2, q2, kInfinity), q2, q2, kInfinity);
        rhs = div_poch(rhs, q, q, kInfinity);
        rb.compare(at("r", r), lhs, rhs);

        // The y-form specialized at y = q^{2r+1}.
        const int y_order = (o.base + 2 * r) / (2 * r + 1);
        auto yctx = Context::make({{"q", o.base}, {"y", y_order}});
        const auto s = theta_sides(yctx);
        const std::vector<std::pair<std::string, Mono>> at_y{{"y", c.q(2 * r + 1)}};
        rb.compare(at("specialized lhs r", r), mul_poch(substitute(s.lhs, at_y, ctx), -q, q, 2 * r), lhs);
        rb.compare(at("specialized rhs r", r), mul_poch(substitute(s.rhs, at_y, ctx), -q, q, 2 * r), rhs);
    }
}

void thm14(const Orders &o, ReportBuilder &rb)
{
    const int y_order = std::min(o.aux, 6);
    auto ctx = Context::make(
        {{"u", o.base}, {"y", y_order}, {"a", 2, true, o.window}, {"b", 2, true, o.window}}, 0, 2);
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const Mono y = c.var("y");
    const Mono a = c.var("a");
    const Mono b = c.var("b");
    const Mono yq = y * q;
    const Series lhs = ideal_sum(
        ctx, [&](int n) { return y.pow(2 * n); },
        [&](int n) {
            Series t = mono(ctx, (y.pow(2) / (a * b)).pow(n) * c.q_half(n * n + n));
            t = mul_poch(mul_poch(t, a, q, n), b, q, n);
            return div_poch(div_poch(t, yq / a, q, n), yq / b, q, n);
        });
    Series rhs = ideal_sum(
        ctx, [&](int n) { return y.pow(n); },
        [&](int n) {
            Series t = clearing_sum(ctx, y, n, 2).mul_mono((yq / (a * b)).pow(n));
            t = mul_poch(mul_poch(t, -q, q, n), -y, q, n);
            t = mul_poch(mul_poch(t, a, q, n), b, q, n);
            return div_poch(t, yq, q, 2 * n);
        });
    rhs = mul_poch(mul_poch(rhs, yq, q, kInfinity), yq / (a * b), q, kInfinity);
    rhs = div_poch(div_poch(rhs, yq / a, q, kInfinity), yq / b, q, kInfinity);
    rb.compare("sum", lhs, rhs);
    const auto lemma = apply_bailey_lemma(pair_deduce222(), BaileyParam::of(formal_var("a")),
                                          BaileyParam::of(formal_var("b")), ctx);
    rb.compare("lemma lhs", lemma.lhs, lhs);
    rb.compare("lemma rhs", lemma.rhs, rhs);
}

ContextPtr qab_context(const Orders &o)
{
    return Context::make({{"q", o.base}, {"a", o.aux}, {"b", o.aux}});
}

// sum_n (ab q^{n-1};q)_n q^n / (q, s a, s b;q)_n, i.e. (ab/q;q)_{2n}/(q, s a, s b, ab/q;q)_n q^n
Series ab_series(const ContextPtr &ctx, const Rational &s)
{
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const Mono a = c.var("a");
    const Mono b = c.var("b");
    return ideal_sum(
        ctx, [&](int n) { return c.q(n); },
        [&](int n) {
            Series t = mul_poch(mono(ctx, c.q(n)), a * b * c.q(n - 1), q, n);
            t = div_poch(t, q, q, n);
            return div_poch(div_poch(t, a * c.constant(s), q, n), b * c.constant(s), q, n);
        });
}

void thm15(const Orders &o, ReportBuilder &rb)
{
    auto ctx = qab_context(o);
    const Context &c = *ctx;
    const Series lhs =
        clearing_sum(ctx, c.var("a"), kInfinity, 2) * clearing_sum(ctx, c.var("b"), kInfinity, 2);
    Series rhs = mul_poch(ab_series(ctx, Rational{-1}), c.q(1), c.q(1), kInfinity);
    rhs = div_poch(div_poch(rhs, c.q(2), c.q(2), kInfinity), c.q(2), c.q(2), kInfinity);
    rb.compare("product", lhs, rhs);
}

void wa_identity(const Orders &o, ReportBuilder &rb)
{
    auto ctx = qab_context(o);
    const Context &c = *ctx;
    const Mono a = c.var("a");
    const Mono b = c.var("b");
    const Series lhs = partial_theta(mono(ctx, a)) * partial_theta(mono(ctx, b));
    Series rhs = mul_poch(ab_series(ctx, Rational{1}), c.q(1), c.q(1), kInfinity);
    rhs = mul_poch(mul_poch(rhs, a, c.q(1), kInfinity), b, c.q(1), kInfinity);
    rb.compare("product", lhs, rhs);
}

ContextPtr rescaled_ab(const Orders &o)
{
    return Context::make({{"u", o.base}, {"a", 2, true, o.window}, {"b", 2, true, o.window}}, 0, 2);
}

void cor_new(const Orders &o, ReportBuilder &rb)
{
    auto ctx = rescaled_ab(o);
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const Mono q2 = c.q(2);
    const Mono a = c.var("a");
    const Mono b = c.var("b");
    const Series lhs = ideal_sum(
        ctx, [&](int n) { return c.q_half(n * n + n); },
        [&](int n) {
            Series t = mono(ctx, (a * b).pow(-n) * c.q_half(n * n + 5 * n));
            t = mul_poch(mul_poch(t, a, q, n), b, q, n);
            return div_poch(div_poch(t, q2 / a, q, n), q2 / b, q, n);
        });
    Series rhs = basic_hypergeometric(ctx, {a, b, -q}, {c.q_half(3), c.q_half(3, -1)}, q, q2 / (a * b));
    rhs = mul_poch(mul_poch(rhs, q2, q, kInfinity), q2 / (a * b), q, kInfinity);
    rhs = div_poch(div_poch(rhs, q2 / a, q, kInfinity), q2 / b, q, kInfinity);
    rb.compare("sum", lhs, rhs);
    const auto lemma = apply_bailey_lemma(pair_deduce222(base_power(1)), BaileyParam::of(formal_var("a")),
                                          BaileyParam::of(formal_var("b")), ctx);
    rb.compare("lemma lhs", lemma.lhs, lhs);
    rb.compare("lemma rhs", lemma.rhs, rhs);
}

void cor_new_1(const Orders &o, ReportBuilder &rb)
{
    auto ctx = Context::make({{"u", o.base}}, 0, 2);
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const auto tri = [&](int n) { return c.q(3 * n * (n + 1) / 2); };
    const Series lhs = ideal_sum(ctx, tri, [&](int n) { return mono(ctx, tri(n)); });
    Series rhs = ideal_sum(
        ctx, [&](int n) { return c.q(n * n + n); },
        [&](int n) {
            Series t = mul_poch(mono(ctx, c.q(n * n + n)), -q, q, n);
            t = div_poch(t, q, q, n);
            return div_poch(t, q, c.q(2), n + 1);
        });
    rhs = mul_poch(rhs, q, q, kInfinity);
    rb.compare("sum", lhs, rhs);
    const auto lemma =
        apply_bailey_lemma(pair_deduce222(base_power(1)), BaileyParam::infinity(), BaileyParam::infinity(), ctx);
    rb.compare("lemma lhs", lemma.lhs, lhs);
    rb.compare("lemma rhs", lemma.rhs, rhs);
}

void cor_new_2(const Orders &o, ReportBuilder &rb)
{
    auto ctx = Context::make({{"u", o.base}, {"a", 2, true, o.window}}, 0, 2);
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const Mono q2 = c.q(2);
    const Mono a = c.var("a");
    const Series lhs = ideal_sum(
        ctx, [&](int n) { return c.q_half(n * n + 2 * n); },
        [&](int n) {
            Series t = mono(ctx, a.pow(-n) * c.q_half(n * n + 2 * n, (n % 2 == 0) ? 1 : -1));
            t = mul_poch(mul_poch(t, a, q, n), c.q_half(3, -1), q, n);
            return div_poch(div_poch(t, q2 / a, q, n), c.q_half(1, -1), q, n);
        });
    Series rhs = mul_poch(one(ctx), q2, q, kInfinity);
    rhs = mul_poch(rhs, c.q_half(3) / a, q, kInfinity);
    rhs = div_poch(div_poch(rhs, q2 / a, q, kInfinity), c.q_half(3), q, kInfinity);
    rb.compare("sum", lhs, rhs);
}

// Graded so that 1/ab is small: u has weight 1, a and b weight -1.
void cor_aaa(const Orders &o, ReportBuilder &rb)
{
    const int span = o.base + 4;
    auto ctx = Context::make({{"u", o.base, false, 0, 1}, {"a", span, true, span, -1}, {"b", span, true, span, -1}},
                             o.base, 2);
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const Mono a = c.var("a");
    const Mono b = c.var("b");
    const auto sums = bilateral_sum_aaa(ctx, "a", "b");
    rb.compare("folded", sums.direct, sums.folded);
    const Mono inv_ab = (a * b).inverse();
    Series rhs = basic_hypergeometric(ctx, {a * q, b * q, -q}, {c.q_half(3), c.q_half(3, -1)}, q, inv_ab);
    rhs = mul_poch(mul_poch(rhs, c.q(2), q, kInfinity), inv_ab, q, kInfinity);
    rhs = div_poch(div_poch(rhs, q / a, q, kInfinity), q / b, q, kInfinity);
    rb.compare("sum", sums.direct, rhs.scaled(Rational{2}));
}

} // namespace

void add_theorem_cases(std::vector<IdentityCase> &out)
{
    const auto T = Mode::truncated;
    const auto E = Mode::exact;
    out.push_back({"AY-1", T, false, "q, z",
                   "sum_{n>=0} z^n q^{2n^2+2n+1}/(q,zq;q^2)_{n+1} = sum_{n>=1} z^{n-1} q^n/(q;q^2)_n", ay1});
    out.push_back({"AY-2", T, false, "q, z",
                   "sum_n q^n (-zq^{n+1};q)_n (-zq^{2n+2};q^2)_inf = sum_n z^n q^{n^2+n}/(q;q^2)_{n+1}", ay2});
    out.push_back({"AY-3", T, false, "q, z",
                   "sum_{n>=1} q^n/((zq^n;q)_{n+1} (zq^{2n+2};q^2)_inf) = sum_{n>=1} z^{n-1} q^n/(q;q^2)_n", ay3});
    out.push_back({"THM12-A", T, false, "q, z, y",
                   "sum_n y^n (-zq^{n+1};q)_n (-zq^{2n+2};q^2)_inf = sum_n z^n q^{n^2+n} (-y;q)_n/(yq^n;q)_{n+1} "
                   "C_n(2); also against the closed-form coefficients f_n(y)",
                   thm12a});
    out.push_back({"THM12-B", T, false, "q, z, y",
                   "sum_{n>=1} y^{n-1}/((zq^n;q)_{n+1} (zq^{2n+2};q^2)_inf) = sum_n (qz)^n (-y;q)_n/(yq^n;q)_{n+1} "
                   "C_n(1); also against g_n(y)",
                   thm12b});
    out.push_back({"THM13-A", E, false, "q, y",
                   "sum_k q^k (yq^n;q)_k/(q^2;q^2)_k = (-y;q)_n C_n(1) for n <= 12, denominators cleared", thm13a});
    out.push_back({"THM13-B", E, false, "q, y",
                   "sum_k [n,k] y^k q^{k(k-1)/2} (q;q)_k/(yq^n;q)_{k+1} = (q^2,y^2;q^2)_n/(y;q)_{2n+1} C_n(2) "
                   "for n <= 12, denominators cleared",
                   thm13b});
    out.push_back({"THM13-C", T, false, "q, y",
                   "sum_k y^k q^{k(k-1)/2} = (q^2;q^2)_inf (-y;q)_inf C_inf(2)", thm13c});
    out.push_back({"THM13-D", T, false, "q",
                   "(-q;q)_{2r} sum_k q^{k(k+1)/2+2rk} = (q^2;q^2)_inf^2/(q;q)_inf sum_k q^{2k} "
                   "(q^{2r};q)_{2k}/(q^2,q^{4r+2};q^2)_k, r = 0,1,2; also THM13-C at y = q^{2r+1}",
                   thm13d});
    out.push_back({"THM14", T, true, "u, y, a, b (a, b Laurent)",
                   "Bailey lemma with the pair alpha_n = y^n q^{n(n-1)/2}, generic a, b; y-order at most 6", thm14});
    out.push_back({"THM15", T, false, "q, a, b",
                   "C_inf(2)|_{y=a} C_inf(2)|_{y=b} = (q;q)_inf/(q^2;q^2)_inf^2 4phi3[...; q, q] with "
                   "(ab/q;q)_{2n}/(q,-a,-b,ab/q;q)_n terms",
                   thm15});
    out.push_back({"WA", T, false, "q, a, b",
                   "theta(q,a) theta(q,b) = (q,a,b;q)_inf sum_n (ab/q;q)_{2n}/(q,a,b,ab/q;q)_n q^n",
                   wa_identity});
    out.push_back({"COR-NEW", T, true, "u, a, b (Laurent)",
                   "sum_n (a,b;q)_n/(q^2/a,q^2/b;q)_n (ab)^{-n} q^{n^2/2+5n/2} = (q^2,q^2/ab;q)_inf/(q^2/a,q^2/b;q)_inf "
                   "3phi2[a,b,-q; q^{3/2},-q^{3/2}; q, q^2/ab]",
                   cor_new});
    out.push_back({"COR-NEW-1", T, true, "u",
                   "sum_n q^{3n(n+1)/2} = (q;q)_inf sum_n (-q;q)_n q^{n^2+n}/((q;q)_n (q;q^2)_{n+1})", cor_new_1});
    out.push_back({"COR-NEW-2", T, true, "u, a (Laurent)",
                   "sum_n (a,-q^{3/2};q)_n/(q^2/a,-q^{1/2};q)_n (-1/a)^n q^{n^2/2+n} = "
                   "(q^2,q^{3/2}/a;q)_inf/(q^2/a,q^{3/2};q)_inf",
                   cor_new_2});
    out.push_back({"COR-AAA", T, true, "u, a, b (Laurent, weighted so that 1/ab is small)",
                   "bilateral sum over n of (aq,bq;q)_n/(q/a,q/b;q)_n (ab)^{-n} q^{n(n+1)/2} = twice its n >= 0 half "
                   "= 2 (q^2,1/ab;q)_inf/(q/a,q/b;q)_inf 3phi2[aq,bq,-q; q^{3/2},-q^{3/2}; q, 1/ab]",
                   cor_aaa});
}

} // namespace qseries::detail
