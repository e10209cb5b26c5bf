// Helpers shared by the identity, sequence and certificate sources.
#ifndef QSERIES_SRC_CASE_SUPPORT_HPP
#define QSERIES_SRC_CASE_SUPPORT_HPP

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <qseries/errors.hpp>
#include <qseries/exact_poly.hpp>
#include <qseries/identities.hpp>
#include <qseries/qfunctions.hpp>
#include <qseries/report.hpp>

namespace qseries::detail
{

// Monomial and polynomial builders over a fixed list of names, for exact
// computations.
class PolyVars
{
public:
    explicit PolyVars(std::vector<std::string> names) : names_(std::move(names)) {}

    [[nodiscard]] const std::vector<std::string> &names() const noexcept
    {
        return names_;
    }
    [[nodiscard]] Mono m(const Rational &c, std::initializer_list<std::pair<const char *, int>> powers) const
    {
        Mono r{c, {}};
        for (const auto &[name, p] : powers) {
            r.exps[index(name)] += p;
        }
        return r;
    }
    [[nodiscard]] Mono q(int e, const Rational &c = Rational{1}) const
    {
        return m(c, {{"q", e}});
    }
    [[nodiscard]] Mono var(const char *name, int p = 1) const
    {
        return m(Rational{1}, {{name, p}});
    }
    [[nodiscard]] ExactPoly c(const Rational &v) const
    {
        return ExactPoly::constant(names_, v);
    }
    [[nodiscard]] ExactPoly p(const Mono &mono) const
    {
        return ExactPoly::monomial(names_, mono);
    }
    // (x; base)_n, n >= 0
    [[nodiscard]] ExactPoly poch(const Mono &x, const Mono &base, int n) const
    {
        return poch_exact(names_, x, base, n);
    }
    [[nodiscard]] ExactPoly poch(const Mono &x, int n) const
    {
        return poch(x, q(1), n);
    }
    // prod_{j<n} (x - a base^j)
    [[nodiscard]] ExactPoly rev_poch(const Mono &x, const Mono &a, const Mono &base, int n) const
    {
        ExactPoly r = c(1);
        Mono t = a;
        for (int j = 0; j < n; ++j) {
            r *= p(x) - p(t);
            t = t * base;
        }
        return r;
    }
    // Gaussian polynomial in q, embedded over these names.
    [[nodiscard]] ExactPoly qbin(int n, int k) const
    {
        return ExactPoly::from_terms(names_, q_binomial(n, k).terms());
    }
    [[nodiscard]] ExactPoly tau(int n) const
    {
        return p(q(n * (n - 1) / 2, (n % 2 == 0) ? 1 : -1));
    }

private:
    [[nodiscard]] std::size_t index(const char *name) const
    {
        const auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) {
            throw std::invalid_argument(std::string("unknown variable ") + name);
        }
        return static_cast<std::size_t>(it - names_.begin());
    }

    std::vector<std::string> names_;
};

// f * (u - v)
inline Series mul_diff(const Series &f, const Mono &u, const Mono &v)
{
    return f.mul_mono(u) - f.mul_mono(v);
}

// f * prod_{j<n} (x - a base^j)
inline Series mul_rev_poch(Series f, const Mono &x, const Mono &a, const Mono &base, int n)
{
    Mono t = a;
    for (int j = 0; j < n; ++j) {
        f = mul_diff(f, x, t);
        t = t * base;
    }
    return f;
}

inline Series one(const ContextPtr &ctx)
{
    return Series::constant(ctx, Rational{1});
}

inline Series mono(const ContextPtr &ctx, const Mono &m)
{
    return Series::monomial(ctx, m);
}

// Sum of term(n) for n = first, first + 1, ... The monomial lead(n) divides
// every monomial of term(n); the sum stops once it lies beyond the ideal.
template <class Lead, class Term>
Series ideal_sum(const ContextPtr &ctx, Lead lead, Term term, int first = 0)
{
    Series sum(ctx);
    const int cap = default_iteration_cap(*ctx) + first;
    for (int n = first;; ++n) {
        if (ctx->beyond_ideal(lead(n).exps)) {
            break;
        }
        if (n > cap) {
            throw FormalDivergence("sum does not terminate within the truncation");
        }
        sum += term(n);
    }
    return sum;
}

inline std::string at(const char *label, int n)
{
    return std::string(label) + "[" + std::to_string(n) + "]";
}

inline std::string at(const char *label, int m, int k)
{
    return std::string(label) + "[" + std::to_string(m) + "," + std::to_string(k) + "]";
}

// Case families, one per source file.
void add_theorem_cases(std::vector<IdentityCase> &out);
void add_finite_cases(std::vector<IdentityCase> &out);
void add_limit_cases(std::vector<IdentityCase> &out);

} // namespace qseries::detail

#endif
