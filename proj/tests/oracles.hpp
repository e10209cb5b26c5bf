// Independent reference computations used by the tests. Nothing here calls
// the library's Pochhammer, inversion or hypergeometric code.
#ifndef QSERIES_TESTS_ORACLES_HPP
#define QSERIES_TESTS_ORACLES_HPP

#include <cstdint>
#include <vector>

#include <qseries/series.hpp>

namespace oracle
{

// Number of partitions of n, by enumerating parts in nonincreasing order.
inline std::int64_t partitions_with_max_part(int n, int max_part)
{
    if (n == 0) {
        return 1;
    }
    std::int64_t count = 0;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        count += partitions_with_max_part(n - p, p);
    }
    return count;
}

inline std::int64_t partition_count(int n)
{
    return partitions_with_max_part(n, n);
}

// Euler's pentagonal expansion sum_k (-1)^k q^{k(3k-1)/2} over all integers k.
inline qseries::Series pentagonal(const qseries::ContextPtr &ctx)
{
    qseries::SeriesBuilder b(ctx);
    const int n = ctx->order(0);
    for (int k = -n; k <= n; ++k) {
        const int e = k * (3 * k - 1) / 2;
        if (e <= n) {
            qseries::Exponents ex{};
            ex[0] = e;
            b.add(ex, k % 2 == 0 ? 1 : -1);
        }
    }
    return b.build();
}

// Dense univariate polynomial with integer coefficients, index = q-degree.
using Poly = std::vector<std::int64_t>;

inline Poly poly_mul(const Poly &a, const Poly &b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// Gaussian polynomial by Pascal's rule [n k] = [n-1 k-1] + q^k [n-1 k].
inline Poly gaussian_pascal(int n, int k)
{
    if (k < 0 || k > n) {
        return {};
    }
    if (k == 0 || k == n) {
        return {1};
    }
    Poly a = gaussian_pascal(n - 1, k - 1);
    Poly b = gaussian_pascal(n - 1, k);
    Poly r(std::max(a.size(), b.size() + static_cast<std::size_t>(k)), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] += a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        r[i + static_cast<std::size_t>(k)] += b[i];
    }
    return r;
}

// Dense truncated power series in q with integer coefficients, index = q-degree.
struct Dense {
    std::vector<std::int64_t> c;

    explicit Dense(int order, std::int64_t constant = 1) : c(static_cast<std::size_t>(order) + 1, 0)
    {
        c[0] = constant;
    }
    [[nodiscard]] int order() const
    {
        return static_cast<int>(c.size()) - 1;
    }
    // *= (1 - s q^k)
    Dense &mul_one_minus(std::int64_t s, int k)
    {
        for (int i = order(); i >= k; --i) {
            c[static_cast<std::size_t>(i)] -= s * c[static_cast<std::size_t>(i - k)];
        }
        return *this;
    }
    // /= (1 - s q^k), k >= 1
    Dense &div_one_minus(std::int64_t s, int k)
    {
        for (int i = k; i <= order(); ++i) {
            c[static_cast<std::size_t>(i)] += s * c[static_cast<std::size_t>(i - k)];
        }
        return *this;
    }
    Dense &shift(int k)
    {
        for (int i = order(); i >= 0; --i) {
            c[static_cast<std::size_t>(i)] = i >= k ? c[static_cast<std::size_t>(i - k)] : 0;
        }
        return *this;
    }
    Dense &operator+=(const Dense &o)
    {
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] += o.c[i];
        }
        return *this;
    }
    friend Dense operator*(const Dense &a, const Dense &b)
    {
        Dense r(a.order(), 0);
        for (int i = 0; i <= a.order(); ++i) {
            for (int j = 0; i + j <= a.order(); ++j) {
                r.c[static_cast<std::size_t>(i + j)] +=
                    a.c[static_cast<std::size_t>(i)] * b.c[static_cast<std::size_t>(j)];
            }
        }
        return r;
    }
};

// Embeds q^i as base^(scale*i).
inline qseries::Series embed(const qseries::ContextPtr &ctx, const Dense &d, int scale)
{
    qseries::SeriesBuilder b(ctx);
    for (int i = 0; i <= d.order(); ++i) {
        if (d.c[static_cast<std::size_t>(i)] != 0) {
            qseries::Exponents e{};
            e[0] = scale * i;
            b.add(e, qseries::Rational{d.c[static_cast<std::size_t>(i)]});
        }
    }
    return b.build();
}

} // namespace oracle

#endif
