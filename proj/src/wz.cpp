// WZ certificates: pointwise relations F(m,k) = G(m,k) - G(m,k-1), their
// telescoped sums, and the recurrences they produce.
#include <chrono>
#include <functional>

#include "case_support.hpp"

namespace qseries
{
namespace
{

using detail::at;
using detail::mono;
using detail::one;

struct Certificate {
    // The combination of shifted summands at (m, k).
    std::function<Series(int, int)> combination;
    // G(m, k); zero outside its support.
    std::function<Series(int, int)> g;
    // Largest k at which the combination can be nonzero.
    std::function<int(int)> k_top;
    // The recurrence obtained after summing over k, at m.
    std::function<void(int, ReportBuilder &)> recurrence;
};

Series qbin_or_zero(const ContextPtr &ctx, int n, int k)
{
    if (k < 0 || k > n) {
        return Series(ctx);
    }
    return q_binomial_series(ctx, n, k);
}

// [m,k] y^k q^{k(k-1)/2} (q;q)_k/(yq^m;q)_{k+1}
Certificate thm12a(const ContextPtr &ctx)
{
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const Mono y = c.var("y");
    auto s = [ctx, &c, q, y](int m, int k) {
        if (k < 0 || k > m) {
            return Series(ctx);
        }
        Series t = q_binomial_series(ctx, m, k).mul_mono(y.pow(k) * c.q(k * (k - 1) / 2));
        return div_poch(mul_poch(t, q, q, k), y * c.q(m), q, k + 1);
    };
    // (1 - yq^{2m+1})(1 - yq^{2m+2}) as a divisor
    auto cleared = [&c, q, y](Series f, int m) {
        return div_poch(div_poch(f, y * c.q(2 * m + 1), q, 1), y * c.q(2 * m + 2), q, 1);
    };
    Certificate cert;
    cert.combination = [=, &c](int m, int k) {
        const Series prev = mul_poch(mul_poch(s(m, k), c.q(2 * m + 2), q, 1), y.pow(2) * c.q(2 * m), q, 1);
        return s(m + 1, k) - cleared(prev, m);
    };
    cert.g = [=, &c](int m, int k) {
        Series t = qbin_or_zero(ctx, m + 1, k + 1);
        if (t.is_zero()) {
            return t;
        }
        t = t.mul_mono(y.pow(k + 1) * c.q(k * (k - 1) / 2 + m));
        t = div_poch(mul_poch(t, q, q, k + 1), y * c.q(m + 1), q, k + 1);
        const Series factor = mono(ctx, y * c.q(k + m + 1)) + mono(ctx, c.q(k + 1)) - mono(ctx, c.q(m + 1)) - one(ctx);
        return cleared(t * factor, m);
    };
    cert.k_top = [](int m) { return m + 1; };
    // T_{m+1} - A_m T_m = q^{2m+1}(q - y)/((1-yq^{2m+1})(1-yq^{2m+2}))
    cert.recurrence = [=, &c](int m, ReportBuilder &rb) {
        const Series t0 = eval_sequence("T_thm12", m, ctx);
        const Series t1 = eval_sequence("T_thm12", m + 1, ctx);
        const Series prev = mul_poch(mul_poch(t0, c.q(2 * m + 2), q, 1), y.pow(2) * c.q(2 * m), q, 1);
        const Series drive = detail::mul_diff(mono(ctx, c.q(2 * m + 1)), q, y);
        rb.compare(at("t_m m", m + 1), t1 - cleared(prev, m), cleared(drive, m));
    };
    return cert;
}

// (yq^m;q)_k q^k/(q^2;q^2)_k
Certificate thm12b(const ContextPtr &ctx)
{
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const Mono y = c.var("y");
    auto s = [ctx, &c, q, y](int m, int k) {
        if (k < 0) {
            return Series(ctx);
        }
        return div_poch(mul_poch(mono(ctx, c.q(k)), y * c.q(m), q, k), c.q(2), c.q(2), k);
    };
    Certificate cert;
    cert.combination = [=, &c](int m, int k) {
        const Series prev = s(m, k);
        return s(m + 1, k) - prev - prev.mul_mono(y * c.q(m));
    };
    cert.g = [=, &c](int m, int k) {
        if (k < 0) {
            return Series(ctx);
        }
        const Series t = mul_poch(mono(ctx, -(y * c.q(m))), y * c.q(m + 1), q, k);
        return div_poch(t, c.q(2), c.q(2), k);
    };
    cert.k_top = [](int m) { return m + 1; };
    // T_{m+1} - (1 + yq^m) T_m = q^m (q - y)(yq^{m+1};q)_m/(q^2;q^2)_{m+1}
    cert.recurrence = [=, &c](int m, ReportBuilder &rb) {
        const Series t0 = eval_sequence("T_thm12b", m, ctx);
        const Series t1 = eval_sequence("T_thm12b", m + 1, ctx);
        Series drive = mul_poch(mono(ctx, c.q(m)), y * c.q(m + 1), q, m);
        drive = detail::mul_diff(div_poch(drive, c.q(2), c.q(2), m + 1), q, y);
        rb.compare(at("T' relation m", m), t1 - t0 - t0.mul_mono(y * c.q(m)), drive);
    };
    return cert;
}

// V_m(k) = [m+k,k] x^k/(-q;q)_k; the relation is multiplied by 1 - q^{m+2}.
Certificate sec3(const ContextPtr &ctx)
{
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const Mono x = c.var("x");
    auto v = [ctx, &c, q, x](int m, int k) {
        if (k < 0) {
            return Series(ctx);
        }
        return div_poch(q_binomial_series(ctx, m + k, k).mul_mono(x.pow(k)), -q, q, k);
    };
    Certificate cert;
    cert.combination = [=, &c](int m, int k) {
        const Series v1 = v(m + 1, k);
        const Series v0 = v(m, k);
        return v(m + 2, k).mul_one_minus(c.q(m + 2)) + v1.mul_mono(x * c.q(2 * m + 3)) - v1.mul_mono(q) - v1 +
               v0.mul_mono(q) + v0.mul_mono(c.q(m + 2));
    };
    // (1 - q^{m+2}) V_m(k) R(m,k), R(m,k) = xq^{2m+3}(1-q^{m+k+1})/((1-q^{m+1})(1-q^{m+2}))
    cert.g = [=, &c](int m, int k) {
        const Series t = v(m, k).mul_mono(x * c.q(2 * m + 3)).mul_one_minus(c.q(m + k + 1));
        return div_poch(t, c.q(m + 1), q, 1);
    };
    cert.k_top = [](int m) { return m + 2; };
    cert.recurrence = [=, &c](int m, ReportBuilder &rb) {
        std::vector<Series> u;
        for (int j = 0; j <= 2; ++j) {
            u.push_back(eval_sequence("U", m + j, ctx));
        }
        const Series lhs = u[2].mul_one_minus(c.q(m + 2)) + u[1].mul_mono(x * c.q(2 * m + 3)) - u[1].mul_mono(q) -
                           u[1] + u[0].mul_mono(q) + u[0].mul_mono(c.q(m + 2));
        Series drive = mul_poch(mono(ctx, x.pow(m + 1)), c.q(m + 2), q, m);
        drive = detail::mul_diff(div_poch(drive, c.q(2), c.q(2), m), x, q);
        rb.compare(at("qqq m", m), lhs, drive);
    };
    return cert;
}

} // namespace

const std::vector<std::string> &wz_certificate_names()
{
    static const std::vector<std::string> names{"thm12-a", "thm12-b", "sec3-three-term"};
    return names;
}

VerificationReport verify_wz_certificate(const std::string &which, int m_max, const ContextPtr &ctx)
{
    if (m_max < 1) {
        throw std::invalid_argument("m_max must be at least 1");
    }
    Certificate cert;
    if (which == "thm12-a") {
        cert = thm12a(ctx);
    } else if (which == "thm12-b") {
        cert = thm12b(ctx);
    } else if (which == "sec3-three-term") {
        cert = sec3(ctx);
    } else {
        throw std::invalid_argument("unknown certificate " + which);
    }
    const auto start = std::chrono::steady_clock::now();
    ReportBuilder rb(which);
    for (int m = 0; m <= m_max; ++m) {
        const int top = cert.k_top(m);
        Series total(ctx);
        Series g_prev = cert.g(m, -1);
        const Series g_first = g_prev;
        for (int k = 0; k <= top; ++k) {
            const Series f = cert.combination(m, k);
            Series g = cert.g(m, k);
            rb.compare(at("pointwise m,k", m, k), f, g - g_prev);
            total += f;
            g_prev = std::move(g);
        }
        rb.compare(at("telescoped m", m), total, g_prev - g_first);
        cert.recurrence(m, rb);
    }
    return rb.finish(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
}

VerificationReport verify_wz_certificate(const std::string &which, int m_max)
{
    return verify_wz_certificate(which, m_max, Context::make({{"q", 40}, {"x", 12}, {"y", 12}}));
}

} // namespace qseries
