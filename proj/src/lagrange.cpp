// Lagrange inversion with respect to the basis z^n / prod_{i<=n+1} (1 - x_i z).
#include <chrono>
#include <random>

#include "case_support.hpp"

namespace qseries
{

std::vector<Series> lagrange_coefficients(const Series &f, const std::vector<Mono> &x_seq, int n_max,
                                          const std::string &z)
{
    if (n_max < 0 || static_cast<int>(x_seq.size()) < n_max) {
        throw std::invalid_argument("lagrange_coefficients needs x_1..x_n for n <= n_max");
    }
    const Mono zm = f.context()->var(z);
    std::vector<Series> out;
    Series prod = f;
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) {
            prod = prod.mul_one_minus(x_seq[static_cast<std::size_t>(n - 1)] * zm);
        }
        out.push_back(prod.coefficient_of({{z, n}}));
    }
    return out;
}

Series lagrange_expand(const ContextPtr &ctx, const std::vector<Mono> &x_seq, const std::vector<Series> &a_seq,
                       const std::string &z)
{
    if (x_seq.size() < a_seq.size()) {
        throw std::invalid_argument("lagrange_expand needs x_1..x_{n+1} for every a_n");
    }
    const Mono zm = ctx->var(z);
    Series f(ctx);
    for (std::size_t n = 0; n < a_seq.size(); ++n) {
        Series t = a_seq[n].mul_mono(zm.pow(static_cast<int>(n)));
        for (std::size_t i = 0; i <= n; ++i) {
            t = t.div_one_minus(x_seq[i] * zm);
        }
        f += t;
    }
    return f;
}

VerificationReport lagrange_roundtrip(const std::vector<Mono> &x_seq, const std::vector<Series> &a_seq, int n_max,
                                      const ContextPtr &ctx)
{
    const auto start = std::chrono::steady_clock::now();
    ReportBuilder rb("lagrange-roundtrip");
    const Series f = lagrange_expand(ctx, x_seq, a_seq);
    const auto back = lagrange_coefficients(f, x_seq, n_max);
    for (int n = 0; n <= n_max; ++n) {
        const auto i = static_cast<std::size_t>(n);
        rb.compare(detail::at("a", n), back[i], i < a_seq.size() ? a_seq[i] : Series(ctx));
    }
    return rb.finish(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
}

VerificationReport lagrange_suite(int instances, unsigned seed)
{
    using detail::at;
    const auto start = std::chrono::steady_clock::now();
    ReportBuilder rb("lagrange");
    constexpr int n_max = 5;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> denom(1, 3);
    std::uniform_int_distribution<int> expo(0, 3);
    std::uniform_int_distribution<int> length(1, n_max + 1);
    auto ctx = Context::make({{"q", 16}, {"z", n_max}});
    const Context &c = *ctx;

    const auto random_rational = [&] {
        int p = coeff(rng);
        while (p == 0) {
            p = coeff(rng);
        }
        return Rational{p, denom(rng)};
    };
    for (int inst = 0; inst < instances; ++inst) {
        std::vector<Mono> xs;
        for (int i = 0; i < n_max + 1; ++i) {
            xs.push_back(c.q(expo(rng), random_rational()));
        }
        std::vector<Series> as;
        const int count = length(rng);
        for (int n = 0; n < count; ++n) {
            Series a(ctx);
            for (int e = 0; e <= 4; ++e) {
                a += Series::monomial(ctx, c.q(e, Rational{coeff(rng), denom(rng)}));
            }
            as.push_back(a);
        }
        const auto back = lagrange_coefficients(lagrange_expand(ctx, xs, as), xs, n_max);
        for (int n = 0; n <= n_max; ++n) {
            const auto i = static_cast<std::size_t>(n);
            rb.compare(at("instance,a", inst, n), back[i], i < as.size() ? as[i] : Series(ctx));
        }
    }

    // The AY-1 identity in this basis: x_i = q^{2i-1},
    // F = sum_{k>=1} q^k z^{k-1}/(q;q^2)_k, a_n = q^{2n^2+2n+1}/(q;q^2)_{n+1}.
    constexpr int top = 6;
    auto ay = Context::make({{"q", 2 * top * top + 2 * top + 21}, {"z", top}});
    const Context &a = *ay;
    const Mono q = a.q(1);
    const Mono z = a.var("z");
    std::vector<Mono> xs;
    for (int i = 1; i <= top + 1; ++i) {
        xs.push_back(a.q(2 * i - 1));
    }
    std::vector<Series> as;
    for (int n = 0; n <= top; ++n) {
        as.push_back(div_poch(detail::mono(ay, a.q(2 * n * n + 2 * n + 1)), q, a.q(2), n + 1));
    }
    Series f(ay);
    for (int k = 1; k <= top + 1; ++k) {
        f += div_poch(detail::mono(ay, a.q(k) * z.pow(k - 1)), q, a.q(2), k);
    }
    const auto coeffs = lagrange_coefficients(f, xs, top);
    for (int n = 0; n <= top; ++n) {
        rb.compare(at("coefficient n", n), coeffs[static_cast<std::size_t>(n)], as[static_cast<std::size_t>(n)]);
    }
    rb.compare("expansion", lagrange_expand(ay, xs, as), f);
    return rb.finish(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
}

} // namespace qseries
