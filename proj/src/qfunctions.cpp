#include <qseries/qfunctions.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <qseries/errors.hpp>

namespace qseries
{

namespace
{

bool has_positive_grade(const Context &ctx, const Mono &base)
{
    for (std::size_t i = 1; i < kMaxVars; ++i) {
        if (base.exps[i] != 0) {
            return false;
        }
    }
    return base.exps[0] > 0 && ctx.grade(base.exps) > 0;
}

Mono times_base_power(const Mono &x, const Mono &base, int j)
{
    return Mono{x.coeff * base.coeff.pow(j), x.exps + j * base.exps};
}

// Dense univariate polynomial helpers for Gaussian coefficients.
using Dense = std::vector<Rational>;

void mul_one_minus_dense(Dense &c, int a)
{
    c.resize(c.size() + static_cast<std::size_t>(a));
    for (std::size_t j = c.size(); j-- > static_cast<std::size_t>(a);) {
        c[j] -= c[j - static_cast<std::size_t>(a)];
    }
}

void div_one_minus_dense(Dense &c, int a)
{
    const auto sa = static_cast<std::size_t>(a);
    for (std::size_t j = sa; j < c.size(); ++j) {
        c[j] += c[j - sa];
    }
    c.resize(c.size() - sa);
}

Dense gaussian_dense(int n, int k)
{
    Dense c{Rational{1}};
    if (k < 0 || k > n) {
        return Dense{};
    }
    k = std::min(k, n - k);
    // Each partial product is itself a Gaussian polynomial, so every
    // division is exact.
    for (int i = 1; i <= k; ++i) {
        mul_one_minus_dense(c, n - k + i);
        div_one_minus_dense(c, i);
    }
    return c;
}

int sign_of_power(int n)
{
    return n % 2 == 0 ? 1 : -1;
}

} // namespace

Series mul_poch(const Series &f, const Mono &x, const Mono &base, PochLength n)
{
    const Context &ctx = *f.context();
    if (!n.infinite && n.n < 0) {
        return div_poch(f, times_base_power(x, base, n.n), base, -n.n);
    }
    if (x.coeff.is_zero()) {
        return f;
    }
    const bool grows = has_positive_grade(ctx, base);
    if (n.infinite) {
        if (!grows) {
            throw FormalDivergence("infinite product with a base of zero valuation");
        }
        if (x.is_constant()) {
            throw FormalDivergence("infinite product with an argument of zero valuation");
        }
    }
    Series r = f;
    const int cap = default_iteration_cap(ctx);
    for (int j = 0; n.infinite || j < n.n; ++j) {
        const Mono m = times_base_power(x, base, j);
        if (grows && ctx.beyond_ideal(m.exps)) {
            break;
        }
        if (n.infinite && j > cap) {
            throw FormalDivergence("infinite product does not terminate within the truncation");
        }
        r = r.mul_one_minus(m);
    }
    return r;
}

Series div_poch(const Series &f, const Mono &x, const Mono &base, PochLength n)
{
    const Context &ctx = *f.context();
    if (!n.infinite && n.n < 0) {
        return mul_poch(f, times_base_power(x, base, n.n), base, -n.n);
    }
    if (x.coeff.is_zero()) {
        return f;
    }
    const bool grows = has_positive_grade(ctx, base);
    if (n.infinite) {
        if (!grows) {
            throw FormalDivergence("infinite product with a base of zero valuation");
        }
        if (x.is_constant()) {
            throw FormalDivergence("infinite product with an argument of zero valuation");
        }
    }
    Series r = f;
    const int cap = default_iteration_cap(ctx);
    for (int j = 0; n.infinite || j < n.n; ++j) {
        const Mono m = times_base_power(x, base, j);
        if (grows && ctx.beyond_ideal(m.exps)) {
            break;
        }
        if (n.infinite && j > cap) {
            throw FormalDivergence("infinite product does not terminate within the truncation");
        }
        r = r.div_one_minus(m);
    }
    return r;
}

Series poch(const ContextPtr &ctx, const Mono &x, const Mono &base, PochLength n)
{
    return mul_poch(Series::constant(ctx, Rational{1}), x, base, n);
}

Series pochhammer(const PochSpec &spec, const ContextPtr &ctx)
{
    const Series &x = spec.argument;
    if (!same_context(x.context(), ctx)) {
        throw IncompatibleContext("pochhammer: argument built in a different context");
    }
    if (x.size() == 1) {
        const auto [e, c] = x.terms().front();
        return poch(ctx, Mono{c, e}, spec.base, spec.length);
    }
    if (x.is_zero()) {
        return Series::constant(ctx, Rational{1});
    }
    const Series one = Series::constant(ctx, Rational{1});
    auto factor = [&](int j) { return one - x.mul_mono(spec.base.pow(j)); };
    const PochLength &n = spec.length;
    if (n.infinite) {
        if (!has_positive_grade(*ctx, spec.base)) {
            throw FormalDivergence("infinite product with a base of zero valuation");
        }
        int g0 = INT32_MAX;
        bool only_constant = true;
        for (const auto &[e, c] : x.terms()) {
            g0 = std::min(g0, ctx->grade(e));
            only_constant = only_constant && e == Exponents{};
        }
        if (only_constant) {
            throw FormalDivergence("infinite product with an argument of zero valuation");
        }
        const int step = ctx->grade(spec.base.exps);
        return formal_product(ctx, ctx->weighted() ? "" : ctx->vars().name(0),
                              [&](int j) { return g0 + j * step; }, factor);
    }
    Series r = one;
    if (n.n >= 0) {
        for (int j = 0; j < n.n; ++j) {
            r = r * factor(j);
        }
        return r;
    }
    for (int j = n.n; j < 0; ++j) {
        r = r * factor(j);
    }
    return invert(r);
}

ExactPoly poch_exact(const std::vector<std::string> &names, const Mono &x, const Mono &base, int n)
{
    if (n < 0) {
        throw DomainError("poch_exact: negative length");
    }
    ExactPoly r = ExactPoly::constant(names, Rational{1});
    for (int j = 0; j < n; ++j) {
        r *= ExactPoly::one_minus(names, times_base_power(x, base, j));
    }
    return r;
}

RationalFunction poch_rational(const std::vector<std::string> &names, const Mono &x, const Mono &base, int n)
{
    if (n >= 0) {
        return RationalFunction(poch_exact(names, x, base, n));
    }
    const ExactPoly den = poch_exact(names, times_base_power(x, base, n), base, -n);
    if (den.is_zero()) {
        throw NonUnit("negative-length Pochhammer symbol with a vanishing factor");
    }
    return RationalFunction(ExactPoly::constant(names, Rational{1}), den);
}

ExactPoly q_binomial(int n, int k)
{
    const Dense c = gaussian_dense(n, k);
    std::vector<std::pair<Exponents, Rational>> ts;
    for (std::size_t j = 0; j < c.size(); ++j) {
        Exponents e{};
        e[0] = static_cast<int>(j);
        ts.emplace_back(e, c[j]);
    }
    return ExactPoly::from_terms({"q"}, ts);
}

std::vector<ExactPoly> q_binomial_row(int n)
{
    std::vector<ExactPoly> row;
    for (int k = 0; k <= n; ++k) {
        row.push_back(q_binomial(n, k));
    }
    return row;
}

Series q_binomial_series(const ContextPtr &ctx, int n, int k)
{
    const Dense c = gaussian_dense(n, k);
    SeriesBuilder b(ctx);
    for (std::size_t j = 0; j < c.size(); ++j) {
        const Mono m = ctx->q(static_cast<int>(j));
        if (ctx->beyond_ideal(m.exps)) {
            break;
        }
        b.add(m.exps, c[j]);
    }
    return b.build();
}

ExactPoly tau(int n)
{
    if (n < 0) {
        throw DomainError("tau: negative index");
    }
    Exponents e{};
    e[0] = n * (n - 1) / 2;
    return ExactPoly::monomial({"q"}, Mono{Rational{sign_of_power(n)}, e});
}

Mono tau_mono(const Context &ctx, int n)
{
    return ctx.q(n * (n - 1) / 2, Rational{sign_of_power(n)});
}

namespace
{

// m when param == base^{-m} for some m >= 0.
std::optional<int> terminator(const Mono &param, const Mono &base)
{
    if (!param.coeff.is_one() || base.exps[0] <= 0) {
        return std::nullopt;
    }
    for (std::size_t i = 1; i < kMaxVars; ++i) {
        if (param.exps[i] != 0 || base.exps[i] != 0) {
            return std::nullopt;
        }
    }
    if (!base.coeff.is_one() || param.exps[0] > 0 || param.exps[0] % base.exps[0] != 0) {
        return std::nullopt;
    }
    return -param.exps[0] / base.exps[0];
}

} // namespace

std::optional<RationalFunction> terminating_hypergeometric(const std::vector<std::string> &names,
                                                           const std::vector<Mono> &upper,
                                                           const std::vector<Mono> &lower, const Mono &base,
                                                           const Mono &argument)
{
    std::optional<int> top;
    for (const auto &a : upper) {
        if (const auto m = terminator(a, base)) {
            top = top ? std::min(*top, *m) : *m;
        }
    }
    if (!top) {
        return std::nullopt;
    }
    // term_n = N_n / (d_0 d_1 ... d_{n-1}); the sum is put over d_0 ... d_{top-1}.
    std::vector<ExactPoly> nums{ExactPoly::constant(names, Rational{1})};
    std::vector<ExactPoly> dens;
    for (int n = 0; n < *top; ++n) {
        ExactPoly num = nums.back().mul_mono(argument);
        for (const auto &a : upper) {
            num *= ExactPoly::one_minus(names, times_base_power(a, base, n));
        }
        ExactPoly den = ExactPoly::one_minus(names, base.pow(n + 1));
        for (const auto &b : lower) {
            den *= ExactPoly::one_minus(names, times_base_power(b, base, n));
        }
        if (den.is_zero()) {
            throw NonUnit("terminating series has a vanishing denominator factor");
        }
        nums.push_back(std::move(num));
        dens.push_back(std::move(den));
    }
    ExactPoly total(names);
    ExactPoly suffix = ExactPoly::constant(names, Rational{1});
    for (int n = *top; n >= 0; --n) {
        total += nums[static_cast<std::size_t>(n)] * suffix;
        if (n > 0) {
            suffix *= dens[static_cast<std::size_t>(n - 1)];
        }
    }
    return RationalFunction(std::move(total), std::move(suffix));
}

Series basic_hypergeometric(const ContextPtr &ctx, const std::vector<Mono> &upper, const std::vector<Mono> &lower,
                            const Mono &base, const Mono &argument)
{
    for (const auto &a : upper) {
        if (terminator(a, base)) {
            const auto &names = ctx->vars().names();
            if (names.size() > 4) {
                throw DomainError("terminating series needs at most four variables");
            }
            return terminating_hypergeometric(names, upper, lower, base, argument)->to_series(ctx);
        }
    }
    Series term = Series::constant(ctx, Rational{1});
    Series sum = term;
    const int cap = default_iteration_cap(*ctx);
    for (int n = 0;; ++n) {
        term = term.mul_mono(argument);
        for (const auto &a : upper) {
            term = term.mul_one_minus(times_base_power(a, base, n));
        }
        term = term.div_one_minus(base.pow(n + 1));
        for (const auto &b : lower) {
            term = term.div_one_minus(times_base_power(b, base, n));
        }
        if (term.is_zero()) {
            sum += term;
            return sum;
        }
        if (n >= cap) {
            throw FormalDivergence("basic hypergeometric series: terms do not gain valuation");
        }
        sum += term;
    }
}

Series basic_hypergeometric(const ContextPtr &ctx, const std::vector<Series> &upper,
                            const std::vector<Series> &lower, const Mono &base, const Series &argument)
{
    const Series one = Series::constant(ctx, Rational{1});
    Series term = one;
    Series sum = term;
    const int cap = default_iteration_cap(*ctx);
    for (int n = 0;; ++n) {
        const Mono bn = base.pow(n);
        term = term * argument;
        for (const auto &a : upper) {
            term = term * (one - a.mul_mono(bn));
        }
        Series den = one - one.mul_mono(base.pow(n + 1));
        for (const auto &b : lower) {
            den = den * (one - b.mul_mono(bn));
        }
        term = term * invert(den);
        if (term.is_zero()) {
            sum += term;
            return sum;
        }
        if (n >= cap) {
            throw FormalDivergence("basic hypergeometric series: terms do not gain valuation");
        }
        sum += term;
    }
}

Series partial_theta(const Series &x)
{
    const ContextPtr &ctx = x.context();
    if (!x.constant_term().is_zero()) {
        throw FormalDivergence("partial theta: argument must have positive valuation");
    }
    Series term = Series::constant(ctx, Rational{1});
    Series sum = term;
    const int cap = default_iteration_cap(*ctx);
    for (int n = 0;; ++n) {
        // tau(n+1) / tau(n) = -q^n
        term = (term * x).mul_mono(ctx->q(n, Rational{-1}));
        if (term.is_zero()) {
            sum += term;
            return sum;
        }
        if (n >= cap) {
            throw FormalDivergence("partial theta: argument has zero valuation");
        }
        sum += term;
    }
}

int bilateral_window(int order)
{
    int w = static_cast<int>(std::ceil((std::sqrt(8.0 * order + 1.0) - 1.0) / 2.0));
    while (w > 0 && (w - 1) * w / 2 >= order) {
        --w;
    }
    while (w * (w + 1) / 2 < order) {
        ++w;
    }
    return w;
}

namespace
{

Series bilateral_term(const ContextPtr &ctx, const Mono &a, const Mono &b, int n)
{
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const Mono ab_inv = (a * b).inverse();
    Series t = Series::constant(ctx, Rational{1});
    if (n >= 0) {
        t = t.mul_mono(ab_inv.pow(n) * c.q(n * (n + 1) / 2));
        t = mul_poch(t, a * q, q, n);
        t = mul_poch(t, b * q, q, n);
        t = div_poch(t, q / a, q, n);
        t = div_poch(t, q / b, q, n);
        return t;
    }
    const int m = -n;
    // (aq;q)_{-m} / (q/a;q)_{-m} = (-1/a) prod_{f=1}^{m-1} a^{-2} (1 - a q^f) / (1 - q^f/a)
    t = t.mul_mono(ab_inv.pow(m - 1) * c.q(m * (m - 1) / 2));
    for (int f = 1; f < m; ++f) {
        const Mono qf = c.q(f);
        t = t.mul_one_minus(a * qf).mul_one_minus(b * qf);
        t = t.div_one_minus(qf / a).div_one_minus(qf / b);
    }
    return t;
}

} // namespace

BilateralSums bilateral_sum_aaa(const ContextPtr &ctx, const std::string &a, const std::string &b)
{
    const Mono ma = ctx->var(a);
    const Mono mb = ctx->var(b);
    // Orders are quoted in powers of q.
    const int q_order = ctx->grade_bound() / ctx->grade(ctx->q(1).exps);
    const int w = bilateral_window(q_order);
    if (2 * w + 3 > default_iteration_cap(*ctx)) {
        throw FormalDivergence("bilateral window exceeds the iteration cap");
    }
    if (!bilateral_term(ctx, ma, mb, w + 1).is_zero() || !bilateral_term(ctx, ma, mb, -w - 1).is_zero()) {
        throw FormalDivergence("bilateral sum: terms outside the window survive the truncation");
    }
    Series nonneg(ctx);
    for (int n = 0; n <= w; ++n) {
        nonneg += bilateral_term(ctx, ma, mb, n);
    }
    Series negative(ctx);
    for (int m = 1; m <= w; ++m) {
        negative += bilateral_term(ctx, ma, mb, -m);
    }
    return BilateralSums{nonneg + negative, nonneg.scaled(Rational{2}), w};
}

Series clearing_sum(const ContextPtr &ctx, const Mono &y, PochLength n, int c)
{
    if (c < 1) {
        throw std::invalid_argument("clearing_sum: c must be positive");
    }
    const Context &cx = *ctx;
    Series sum = Series::constant(ctx, Rational{1});
    if (!n.infinite && n.n <= 0) {
        return sum;
    }
    const Mono y2 = y.pow(2);
    // P_k = (y;q)_{2k-1} / ((q^2;q^2)_k (y^2;q^2)_k)
    Series p = Series::constant(ctx, Rational{1}).mul_one_minus(y).div_one_minus(cx.q(2)).div_one_minus(y2);
    const int cap = default_iteration_cap(cx);
    for (int k = 1; n.infinite || k <= n.n; ++k) {
        const Mono lead = cx.q(c * k - 1);
        if (cx.beyond_ideal(lead.exps)) {
            break;
        }
        if (k > cap) {
            throw FormalDivergence("clearing_sum does not terminate within the truncation");
        }
        // q^{ck} (y/q;q)_{2k} = (q^{ck} - y q^{ck-1}) (y;q)_{2k-1}
        sum += p.mul_mono(cx.q(c * k)) - p.mul_mono(y * lead);
        p = p.mul_one_minus(y * cx.q(2 * k - 1)).mul_one_minus(y * cx.q(2 * k));
        p = p.div_one_minus(cx.q(2 * k + 2)).div_one_minus(y2 * cx.q(2 * k));
    }
    return sum;
}

} // namespace qseries
