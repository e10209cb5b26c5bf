// Limiting transformations in several formal variables, and the two-variable
// forms of omega and nu.
#include "case_support.hpp"

namespace qseries::detail
{
namespace
{

// sum_k tau(k) (b;q)_k/(d,zq;q)_k (dz/b)^k = (1-z) sum_k (d/b;q)_k/(d;q)_k z^k
void sec4_trans(const Orders &o, ReportBuilder &rb)
{
    const int small = std::min(o.aux, 5);
    auto ctx = Context::make(
        {{"q", std::min(o.base, 16)}, {"b", 1, true, small}, {"d", small}, {"z", small}});
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const Mono b = c.var("b");
    const Mono d = c.var("d");
    const Mono z = c.var("z");
    const Series lhs = ideal_sum(
        ctx, [&](int k) { return z.pow(k); },
        [&](int k) {
            Series t = mul_poch(mono(ctx, tau_mono(c, k) * (d * z / b).pow(k)), b, q, k);
            return div_poch(div_poch(t, d, q, k), z * q, q, k);
        });
    const Series sum = ideal_sum(
        ctx, [&](int k) { return z.pow(k); },
        [&](int k) { return div_poch(mul_poch(mono(ctx, z.pow(k)), d / b, q, k), d, q, k); });
    rb.compare("sum", lhs, sum.mul_one_minus(z));
}

ContextPtr qyz_context(const Orders &o)
{
    return Context::make({{"q", o.base}, {"y", o.aux}, {"z", o.aux}});
}

// sum_k p^{k^2} (yz)^k/(y,z;p)_{k+1}, p the base variable of ctx.
Series omega2(const ContextPtr &ctx)
{
    const Context &c = *ctx;
    const Mono p = c.q(1);
    const Mono y = c.var("y");
    const Mono z = c.var("z");
    return ideal_sum(
        ctx, [&](int k) { return (y * z).pow(k) * c.q(k * k); },
        [&](int k) {
            const Series t = div_poch(mono(ctx, (y * z).pow(k) * c.q(k * k)), y, p, k + 1);
            return div_poch(t, z, p, k + 1);
        });
}

// sum_k tau(k) (yz)^k/(z;p)_{k+1}
Series nu2(const ContextPtr &ctx)
{
    const Context &c = *ctx;
    const Mono y = c.var("y");
    const Mono z = c.var("z");
    return ideal_sum(
        ctx, [&](int k) { return (y * z).pow(k) * tau_mono(c, k); },
        [&](int k) { return div_poch(mono(ctx, (y * z).pow(k) * tau_mono(c, k)), z, c.q(1), k + 1); });
}

void thm41a(const Orders &o, ReportBuilder &rb)
{
    auto ctx = qyz_context(o);
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const Mono y = c.var("y");
    const Mono z = c.var("z");
    const Series in_z = ideal_sum(
        ctx, [&](int k) { return z.pow(k); },
        [&](int k) { return div_poch(mono(ctx, z.pow(k)), y, q, k + 1); });
    const Series in_y = ideal_sum(
        ctx, [&](int k) { return y.pow(k); },
        [&](int k) { return div_poch(mono(ctx, y.pow(k)), z, q, k + 1); });
    const Series w = omega2(ctx);
    rb.compare("first", w, in_z);
    rb.compare("second", w, in_y);
}

void thm41b(const Orders &o, ReportBuilder &rb)
{
    auto ctx = qyz_context(o);
    const Context &c = *ctx;
    const Mono z = c.var("z");
    const Series rhs = ideal_sum(
        ctx, [&](int k) { return z.pow(k); },
        [&](int k) { return mul_poch(mono(ctx, z.pow(k)), c.var("y"), c.q(1), k); });
    rb.compare("sum", nu2(ctx), rhs);
}

// p has weight 2 and y, z weight 1, so the substitutions below send the
// weighted degree to the q-degree.
ContextPtr graded_pyz(int bound)
{
    return Context::make({{"p", bound, false, 0, 2}, {"y", bound, false, 0, 1}, {"z", bound, false, 0, 1}}, bound);
}

// omega(z;q) = sum_n z^n q^{2n^2+2n}/(q,zq;q^2)_{n+1} = omega_{q^2}(q, zq)
void omega_rel(const Orders &o, ReportBuilder &rb)
{
    auto ctx = Context::make({{"q", o.base}, {"z", o.aux}});
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const Mono z = c.var("z");
    const Series direct = ideal_sum(
        ctx, [&](int n) { return z.pow(n) * c.q(2 * n * n + 2 * n); },
        [&](int n) {
            const Series t = div_poch(mono(ctx, z.pow(n) * c.q(2 * n * n + 2 * n)), q, c.q(2), n + 1);
            return div_poch(t, z * q, c.q(2), n + 1);
        });
    const Series generic = omega2(graded_pyz(o.base));
    rb.compare("specialized", substitute(generic, {{"p", c.q(2)}, {"y", q}, {"z", z * q}}, ctx), direct);
}

// nu(z;q) = sum_n q^{n^2+n}/(-zq;q^2)_{n+1} = nu_{q^2}(q/z, -zq)
void nu_rel(const Orders &o, ReportBuilder &rb)
{
    auto ctx = Context::make({{"q", o.base}, {"z", o.base, true, o.base}});
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const Mono z = c.var("z");
    const Series direct = ideal_sum(
        ctx, [&](int n) { return c.q(n * n + n); },
        [&](int n) { return div_poch(mono(ctx, c.q(n * n + n)), -(z * q), c.q(2), n + 1); });
    const Series generic = nu2(graded_pyz(o.base));
    rb.compare("specialized", substitute(generic, {{"p", c.q(2)}, {"y", q / z}, {"z", -(z * q)}}, ctx), direct);
}

} // namespace

void add_limit_cases(std::vector<IdentityCase> &out)
{
    const auto T = Mode::truncated;
    out.push_back({"SEC4-TRANS", T, false, "q, b (Laurent), d, z",
                   "sum_k tau(k) (b;q)_k/(d,zq;q)_k (dz/b)^k = (1-z) sum_k (d/b;q)_k/(d;q)_k z^k; q-order at most 16, "
                   "d- and z-orders at most 5",
                   sec4_trans});
    out.push_back({"THM41-A", T, false, "q, y, z",
                   "sum_k q^{k^2}(yz)^k/(y,z;q)_{k+1} = sum_k z^k/(y;q)_{k+1} = sum_k y^k/(z;q)_{k+1}", thm41a});
    out.push_back({"THM41-B", T, false, "q, y, z", "sum_k tau(k)(yz)^k/(z;q)_{k+1} = sum_k (y;q)_k z^k", thm41b});
    out.push_back({"OMEGA-REL", T, false, "q, z",
                   "sum_n z^n q^{2n^2+2n}/(q,zq;q^2)_{n+1} equals the two-variable omega_p(y,z) at p = q^2, y = q, "
                   "z -> zq",
                   omega_rel});
    out.push_back({"NU-REL", T, false, "q, z (Laurent)",
                   "sum_n q^{n^2+n}/(-zq;q^2)_{n+1} equals the two-variable nu_p(y,z) at p = q^2, y = q/z, z -> -zq",
                   nu_rel});
}

} // namespace qseries::detail
