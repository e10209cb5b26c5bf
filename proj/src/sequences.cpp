// Named finite sums and the recurrences they satisfy.
#include <chrono>
#include <map>

#include "case_support.hpp"

namespace qseries
{
namespace
{

using detail::mono;
using detail::one;

Series seq_u(int m, const ContextPtr &ctx)
{
    const Context &c = *ctx;
    const Mono x = c.var("x");
    Series s(ctx);
    for (int k = 0; k <= m; ++k) {
        s += div_poch(q_binomial_series(ctx, m + k, k).mul_mono(x.pow(k)), -c.q(1), c.q(1), k);
    }
    return s;
}

// (x;q)_m S_m(x,y), a polynomial.
Series seq_s_poly(int m, const ContextPtr &ctx)
{
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const Mono x = c.var("x");
    const Mono y = c.var("y");
    Series s(ctx);
    for (int k = 0; k <= m; ++k) {
        const Series t = mul_poch(q_binomial_series(ctx, m + k, k).mul_mono(c.q(k)), y, q, k);
        s += mul_poch(t, x * c.q(k), q, m - k);
    }
    return s;
}

Series seq_t_a(int m, const ContextPtr &ctx)
{
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const Mono y = c.var("y");
    Series s(ctx);
    for (int k = 0; k <= m; ++k) {
        Series t = q_binomial_series(ctx, m, k).mul_mono(y.pow(k) * c.q(k * (k - 1) / 2));
        t = mul_poch(t, q, q, k);
        s += div_poch(t, y * c.q(m), q, k + 1);
    }
    return s;
}

Series seq_t_b(int m, const ContextPtr &ctx)
{
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const Mono y = c.var("y");
    Series s(ctx);
    for (int k = 0; k <= m; ++k) {
        s += div_poch(mul_poch(mono(ctx, c.q(k)), y * c.q(m), q, k), c.q(2), c.q(2), k);
    }
    return s;
}

Series seq_f(int m, const ContextPtr &ctx)
{
    const Context &c = *ctx;
    const Mono y = c.var("y");
    Series s = clearing_sum(ctx, y, m, 2).mul_mono(c.q(m * m + m));
    s = mul_poch(s, y.pow(2), c.q(2), m);
    return div_poch(s, y, c.q(1), 2 * m + 1);
}

Series seq_g(int m, const ContextPtr &ctx)
{
    const Context &c = *ctx;
    const Mono y = c.var("y");
    Series s = clearing_sum(ctx, y, m, 1).mul_mono(y * c.q(m));
    s = mul_poch(s, -y, c.q(1), m);
    return div_poch(s, y * c.q(m), c.q(1), m + 1);
}

using Evaluator = Series (*)(int, const ContextPtr &);

const std::map<std::string, Evaluator> &evaluators()
{
    static const std::map<std::string, Evaluator> table{
        {"S_poly", seq_s_poly}, {"T_thm12", seq_t_a}, {"T_thm12b", seq_t_b},
        {"U", seq_u},           {"f", seq_f},         {"g", seq_g},
    };
    return table;
}

// (q;q^2)_{m+1}/(q;q)_m x^{m+1}
Series boundary(int m, const ContextPtr &ctx)
{
    const Context &c = *ctx;
    const Series t = mul_poch(mono(ctx, c.var("x").pow(m + 1)), c.q(1), c.q(2), m + 1);
    return div_poch(t, c.q(1), c.q(1), m);
}

// (x;q)_m S_m(x,y) from the first-order relation, as an exact numerator over
// prod_{j<m} (x - yq^{j+2}).
std::vector<ExactPoly> s_forward(int m_max)
{
    const detail::PolyVars v({"q", "x", "y"});
    const Mono x = v.var("x");
    const Mono y = v.var("y");
    std::vector<ExactPoly> num{v.c(1)};
    ExactPoly den = v.c(1);
    for (int m = 1; m <= m_max; ++m) {
        const ExactPoly drive = v.p(v.q(m)) * (v.p(v.q(1)) + v.p(x) - v.p(y * v.q(m + 1)) - v.p(y * v.q(2 * m + 1))) *
                                v.qbin(2 * m - 1, m) * v.poch(y, m);
        num.push_back((v.p(x) - v.p(v.q(m + 1))) * (v.c(1) - v.p(x * v.q(m - 1))) * num.back() + drive * den);
        den *= v.p(x) - v.p(y * v.q(m + 1));
    }
    return num;
}

// The right side of the S_m(x,y) transformation times (x;q)_m R_m(q^2)(x - yq).
ExactPoly masterid_rhs(int m)
{
    const detail::PolyVars v({"q", "x", "y"});
    const Mono q = v.q(1);
    const Mono x = v.var("x");
    const Mono y = v.var("y");
    ExactPoly odd = v.c(0);
    ExactPoly even = v.c(0);
    for (int k = 1; k <= m; ++k) {
        const ExactPoly common = v.poch(y, k) * v.rev_poch(x, y * q, q, k) * v.poch(x * v.q(k), m - k) *
                                 v.rev_poch(x, v.q(2 + k), q, m - k);
        odd += v.qbin(2 * k - 1, k) * common.mul_mono(v.q(k));
        even += v.qbin(2 * k, k) * common.mul_mono(v.q(2 * k));
    }
    return v.poch(x, m) * v.rev_poch(x, v.q(2), q, m) * (v.p(x) - v.p(y * q)) + (v.p(q) + v.p(x)) * odd -
           even.mul_mono(y * q);
}

} // namespace

Series eval_sequence(const std::string &name, int index, const ContextPtr &ctx)
{
    if (index < 0) {
        throw std::invalid_argument("sequence index must be nonnegative");
    }
    const auto it = evaluators().find(name);
    if (it == evaluators().end()) {
        throw std::invalid_argument("unknown sequence " + name);
    }
    return it->second(index, ctx);
}

const std::vector<std::string> &sequence_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> r;
        for (const auto &[name, f] : evaluators()) {
            r.push_back(name);
        }
        return r;
    }();
    return names;
}

VerificationReport check_recurrences(int m_max, const ContextPtr &ctx)
{
    using detail::at;
    if (m_max < 1) {
        throw std::invalid_argument("m_max must be at least 1");
    }
    const auto start = std::chrono::steady_clock::now();
    ReportBuilder rb("recurrences");
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const Mono x = c.var("x");
    const Mono y = c.var("y");
    const auto seq = [&](const char *name, int m) { return eval_sequence(name, m, ctx); };

    std::vector<Series> u;
    for (int m = 0; m <= m_max + 2; ++m) {
        u.push_back(seq("U", m));
    }
    for (int m = 0; m <= m_max; ++m) {
        const Series at_xq = substitute(u[m], "x", x * q);
        const Series at_xq2 = substitute(u[m], "x", x * c.q(2));
        const Series b = boundary(m, ctx);
        rb.compare(at("U(q) m", m), substitute(u[m], "x", q), mul_poch(one(ctx), -q, q, m));
        rb.compare(at("ttt m", m), at_xq2, u[m] - u[m + 1].mul_one_minus(c.q(m + 1)).mul_mono(x) + b + b.mul_mono(x));
        rb.compare(at("ttt-1 m", m), at_xq.mul_mono(c.q(m + 1)), u[m] - u[m + 1].mul_one_minus(c.q(m + 1)) + b);
        rb.compare(at("second-order m", m), at_xq2, u[m].mul_one_minus(x) + at_xq.mul_mono(x * c.q(m + 1)) + b);
        // (1-q^{m+2})U_{m+2} + (xq^{2m+3}-q-1)U_{m+1} + q(1+q^{m+1})U_m = (x-q)(q^{m+2};q)_m/(q^2;q^2)_m x^{m+1}
        const Series three = u[m + 2].mul_one_minus(c.q(m + 2)) + u[m + 1].mul_mono(x * c.q(2 * m + 3)) -
                             u[m + 1].mul_mono(q) - u[m + 1] + u[m].mul_mono(q) + u[m].mul_mono(c.q(m + 2));
        Series drive = mul_poch(mono(ctx, x.pow(m + 1)), c.q(m + 2), q, m);
        drive = detail::mul_diff(div_poch(drive, c.q(2), c.q(2), m), x, q);
        rb.compare(at("qqq m", m), three, drive);
    }

    // S_m = (q;q)_m U_m: S_m(x) - S_{m-1}(x) = (q;q^2)_m x^m - q^m S_{m-1}(xq)
    for (int m = 1; m <= m_max; ++m) {
        const Series s = mul_poch(u[m], q, q, m);
        const Series prev = mul_poch(u[m - 1], q, q, m - 1);
        const Series rhs = mul_poch(mono(ctx, x.pow(m)), q, c.q(2), m) -
                           substitute(prev, "x", x * q).mul_mono(c.q(m));
        rb.compare(at("ooo m", m), s - prev, rhs);
    }

    // First-order relation for S_m(x,y), multiplied by (x - yq^{m+1})(x;q)_m.
    std::vector<Series> p;
    for (int m = 0; m <= m_max; ++m) {
        p.push_back(seq("S_poly", m));
    }
    for (int m = 1; m <= m_max; ++m) {
        const Series lhs = detail::mul_diff(p[m], x, y * c.q(m + 1)) -
                           detail::mul_diff(p[m - 1].mul_one_minus(x * c.q(m - 1)), x, c.q(m + 1));
        Series rhs = q_binomial_series(ctx, 2 * m - 1, m).mul_mono(c.q(m));
        rhs = mul_poch(rhs, y, q, m);
        rhs = rhs.mul_mono(q) + rhs.mul_mono(x) - rhs.mul_mono(y * c.q(m + 1)) - rhs.mul_mono(y * c.q(2 * m + 1));
        rb.compare(at("ppp m", m), lhs, rhs);
    }
    // Solving that relation forward reproduces the closed transformation.
    {
        const int top = std::min(m_max, 8);
        const auto num = s_forward(top);
        const detail::PolyVars v({"q", "x", "y"});
        for (int m = 0; m <= top; ++m) {
            rb.compare(at("ppp forward m", m), num[static_cast<std::size_t>(m)] * (v.p(v.var("x")) - v.p(v.m(1, {{"q", 1}, {"y", 1}}))),
                       masterid_rhs(m));
        }
    }

    // T_m for the AY-1 y-form: relation, T_0, closed form, and f_m.
    std::vector<Series> ta;
    for (int m = 0; m <= m_max; ++m) {
        ta.push_back(seq("T_thm12", m));
        Series closed = mul_poch(mul_poch(clearing_sum(ctx, y, m, 2), c.q(2), c.q(2), m), y.pow(2), c.q(2), m);
        closed = div_poch(closed, y, q, 2 * m + 1);
        rb.compare(at("T closed m", m), ta.back(), closed);
        rb.compare(at("f m", m), mul_poch(seq("f", m), c.q(2), c.q(2), m), ta.back().mul_mono(c.q(m * m + m)));
    }
    rb.compare("T_0", ta[0], div_poch(one(ctx), y, q, 1));
    for (int m = 1; m <= m_max; ++m) {
        const Series lhs = ta[m].mul_one_minus(y * c.q(2 * m - 1)).mul_one_minus(y * c.q(2 * m)) -
                           ta[m - 1].mul_one_minus(c.q(2 * m)).mul_one_minus(y.pow(2) * c.q(2 * m - 2));
        rb.compare(at("t_m m", m), lhs, detail::mul_diff(mono(ctx, c.q(2 * m - 1)), q, y));
    }

    // The second T: relation, closed form, and g_m.
    std::vector<Series> tb;
    for (int m = 0; m <= m_max; ++m) {
        tb.push_back(seq("T_thm12b", m));
        rb.compare(at("T' closed m", m), tb.back(), mul_poch(clearing_sum(ctx, y, m, 1), -y, q, m));
        rb.compare(at("g m", m), mul_poch(seq("g", m), y * c.q(m), q, m + 1), tb.back().mul_mono(y * c.q(m)));
    }
    for (int m = 0; m < m_max; ++m) {
        Series drive = mul_poch(mono(ctx, c.q(m)), y * c.q(m + 1), q, m);
        drive = detail::mul_diff(div_poch(drive, c.q(2), c.q(2), m + 1), q, y);
        rb.compare(at("T' relation m", m), tb[m + 1] - tb[m] - tb[m].mul_mono(y * c.q(m)), drive);
    }

    return rb.finish(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
}

VerificationReport check_recurrences(int m_max)
{
    return check_recurrences(m_max, Context::make({{"q", 40}, {"x", 12}, {"y", 12}}));
}

} // namespace qseries
