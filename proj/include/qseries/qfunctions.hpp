#ifndef QSERIES_QFUNCTIONS_HPP
#define QSERIES_QFUNCTIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <qseries/exact_poly.hpp>
#include <qseries/series.hpp>

namespace qseries
{

// Length of a Pochhammer symbol: an integer (possibly negative) or infinity.
struct PochLength {
    bool infinite = false;
    int n = 0;

    PochLength(int len) : n(len) {} // NOLINT: integers convert implicitly
    static PochLength infinity()
    {
        PochLength l(0);
        l.infinite = true;
        return l;
    }
};

inline const PochLength kInfinity = PochLength::infinity();

// (x; base)_n with a general Series argument.
struct PochSpec {
    Series argument;
    Mono base;
    PochLength length;
};

[[nodiscard]] Series pochhammer(const PochSpec &spec, const ContextPtr &ctx);

// Monomial fast paths. base is a monomial (normally ctx.q(s)).
[[nodiscard]] Series poch(const ContextPtr &ctx, const Mono &x, const Mono &base, PochLength n);
// f * (x; base)_n
[[nodiscard]] Series mul_poch(const Series &f, const Mono &x, const Mono &base, PochLength n);
// f / (x; base)_n
[[nodiscard]] Series div_poch(const Series &f, const Mono &x, const Mono &base, PochLength n);

// Exact (x; base)_n for n >= 0 as a Laurent polynomial.
[[nodiscard]] ExactPoly poch_exact(const std::vector<std::string> &names, const Mono &x, const Mono &base, int n);
// Exact (x; base)_n for any integer n, as a rational function.
[[nodiscard]] RationalFunction poch_rational(const std::vector<std::string> &names, const Mono &x, const Mono &base,
                                             int n);

// Gaussian polynomial [n k]_q in the single variable "q".
[[nodiscard]] ExactPoly q_binomial(int n, int k);
// All of [n 0]_q, ..., [n n]_q.
[[nodiscard]] std::vector<ExactPoly> q_binomial_row(int n);
// [n k] with q mapped to ctx.q(1) (u^2 under the rescale).
[[nodiscard]] Series q_binomial_series(const ContextPtr &ctx, int n, int k);

// tau(n) = (-1)^n q^{n(n-1)/2} in the single variable "q".
[[nodiscard]] ExactPoly tau(int n);
// tau(n) as a monomial of ctx; any integer n.
[[nodiscard]] Mono tau_mono(const Context &ctx, int n);

// Basic hypergeometric series
//   sum_n (a_1, ..., a_r; b)_n / (b, b_1, ..., b_s; b)_n x^n
// with monomial parameters. An upper parameter equal to base^{-m} makes the
// sum terminate; that case is evaluated exactly and then embedded.
[[nodiscard]] Series basic_hypergeometric(const ContextPtr &ctx, const std::vector<Mono> &upper,
                                          const std::vector<Mono> &lower, const Mono &base, const Mono &argument);
// General parameters. Non-terminating only.
[[nodiscard]] Series basic_hypergeometric(const ContextPtr &ctx, const std::vector<Series> &upper,
                                          const std::vector<Series> &lower, const Mono &base,
                                          const Series &argument);
// The terminating sum as an exact rational function over the given names;
// nullopt when no upper parameter terminates it.
[[nodiscard]] std::optional<RationalFunction>
terminating_hypergeometric(const std::vector<std::string> &names, const std::vector<Mono> &upper,
                           const std::vector<Mono> &lower, const Mono &base, const Mono &argument);

// sum_{n>=0} tau(n) x^n
[[nodiscard]] Series partial_theta(const Series &x);

struct BilateralSums {
    Series direct;
    Series folded;
    int window = 0;
};

// sum over all integers n of (aq, bq; q)_n / (q/a, q/b; q)_n (1/ab)^n q^{n(n+1)/2},
// both as a direct windowed sum and as twice its nonnegative half. The
// context must be graded so that 1/ab has positive weight.
[[nodiscard]] BilateralSums bilateral_sum_aaa(const ContextPtr &ctx, const std::string &a, const std::string &b);
// Smallest w with w(w+1)/2 >= order.
[[nodiscard]] int bilateral_window(int order);

// sum_{k=0}^{n} q^{ck} (y/q; q)_{2k} / ((q^2; q^2)_k (y^2; q^2)_k), with the
// q^{-1} inside the first product cleared against q^{ck}. n = infinity sums
// until the truncation cuts.
[[nodiscard]] Series clearing_sum(const ContextPtr &ctx, const Mono &y, PochLength n, int c);

} // namespace qseries

#endif
