#ifndef QSERIES_SERIES_HPP
#define QSERIES_SERIES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <qseries/context.hpp>
#include <qseries/monomial.hpp>
#include <qseries/rational.hpp>

namespace qseries
{

// Sparse truncated multivariate power/Laurent series with exact rational
// coefficients. Terms are kept sorted by packed key (lexicographic, base
// variable first); no zero coefficient is ever stored.
//
// Laurent-window losses are tracked. clipped() means a term inside every
// ideal bound but outside a Laurent window was dropped while building this
// value; clip_floor() is the least grade of such a term. A product is marked
// inexact() when a dropped term could have contributed inside the truncation.
class Series
{
public:
    using Key = std::uint64_t;
    static constexpr int kNoClip = 1 << 30;
    struct Term {
        Key key;
        Rational coeff;
    };

    explicit Series(ContextPtr ctx);

    static Series constant(ContextPtr ctx, const Rational &c);
    static Series monomial(ContextPtr ctx, const Mono &m);
    static Series from_terms(ContextPtr ctx, const std::vector<std::pair<Exponents, Rational>> &terms);

    [[nodiscard]] const ContextPtr &context() const noexcept
    {
        return ctx_;
    }
    [[nodiscard]] bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    [[nodiscard]] std::size_t size() const noexcept
    {
        return terms_.size();
    }
    [[nodiscard]] bool clipped() const noexcept
    {
        return clip_floor_ != kNoClip;
    }
    [[nodiscard]] int clip_floor() const noexcept
    {
        return clip_floor_;
    }
    [[nodiscard]] bool inexact() const noexcept
    {
        return inexact_;
    }

    // Coefficient of one monomial; the exponent vector must lie in the window.
    [[nodiscard]] Rational coefficient(const Exponents &e) const;
    [[nodiscard]] Rational constant_term() const;
    // The part of the series multiplying the given partial monomial, returned
    // with the fixed variables set to exponent zero.
    [[nodiscard]] Series coefficient_of(const std::vector<std::pair<std::string, int>> &pattern) const;

    [[nodiscard]] std::vector<std::pair<Exponents, Rational>> terms() const;
    [[nodiscard]] const std::vector<Term> &raw_terms() const noexcept
    {
        return terms_;
    }
    // Minimum exponent of variable i over all terms; nullopt for zero.
    [[nodiscard]] std::optional<int> valuation(std::size_t i) const;
    [[nodiscard]] std::optional<int> weighted_valuation() const;

    Series &operator+=(const Series &o);
    Series &operator-=(const Series &o);
    [[nodiscard]] Series operator-() const;
    [[nodiscard]] Series scaled(const Rational &c) const;

    friend Series operator+(Series a, const Series &b)
    {
        a += b;
        return a;
    }
    friend Series operator-(Series a, const Series &b)
    {
        a -= b;
        return a;
    }
    friend Series operator*(const Series &a, const Series &b);

    [[nodiscard]] Series mul_mono(const Mono &m) const;
    // (1 - m) * this
    [[nodiscard]] Series mul_one_minus(const Mono &m) const;
    // this / (1 - m)
    [[nodiscard]] Series div_one_minus(const Mono &m) const;
    [[nodiscard]] Series pow(int n) const;

    // Deterministic rendering in graded-lex order.
    [[nodiscard]] std::string str() const;

    // Equality of context and coefficients; loss flags are ignored.
    friend bool operator==(const Series &a, const Series &b);
    friend bool operator!=(const Series &a, const Series &b)
    {
        return !(a == b);
    }

private:
    friend Series invert(const Series &f);
    friend Series substitute(const Series &f, const std::vector<std::pair<std::string, Mono>> &images,
                             const ContextPtr &target);

    friend class SeriesBuilder;

    void check_compatible(const Series &o) const;
    void note_clip(int grade) noexcept
    {
        clip_floor_ = grade < clip_floor_ ? grade : clip_floor_;
    }
    // Least grade over stored and clipped terms.
    [[nodiscard]] int grade_floor() const;
    static Series merge(const Series &a, const Series &b, const Rational &sb);

    ContextPtr ctx_;
    std::vector<Term> terms_;
    int clip_floor_ = kNoClip;
    bool inexact_ = false;
};

// Accumulates terms in arbitrary order, then produces a canonical Series.
// Exponents outside the truncation are dropped (and recorded as clipped when
// they fall outside a Laurent window only).
class SeriesBuilder
{
public:
    explicit SeriesBuilder(ContextPtr ctx);

    void add(const Exponents &e, const Rational &c);
    // Key already known to be admissible.
    void add_key(Series::Key k, const Rational &c);
    void mark_inexact() noexcept
    {
        inexact_ = true;
    }
    void note_clip(int grade) noexcept
    {
        clip_floor_ = grade < clip_floor_ ? grade : clip_floor_;
    }
    [[nodiscard]] Series build();

private:
    ContextPtr ctx_;
    std::unordered_map<Series::Key, Rational> acc_;
    int clip_floor_ = Series::kNoClip;
    bool inexact_ = false;
};

// Multiplicative inverse up to truncation; the constant term must be a
// nonzero rational.
[[nodiscard]] Series invert(const Series &f);

// Replaces each listed variable by a monomial over the target context.
// Unlisted variables map to the same-named variable of the target. The
// source truncation must cover every exponent that can land in the target
// window; this is the caller's responsibility.
[[nodiscard]] Series substitute(const Series &f, const std::vector<std::pair<std::string, Mono>> &images,
                                const ContextPtr &target);
// Single variable, same context: var -> m.
[[nodiscard]] Series substitute(const Series &f, const std::string &var, const Mono &m);

struct Discrepancy {
    Exponents exps{};
    Rational lhs;
    Rational rhs;
};

// Graded-lex least monomial on which a and b differ.
[[nodiscard]] std::optional<Discrepancy> first_discrepancy(const Series &a, const Series &b);

[[nodiscard]] int default_iteration_cap(const Context &ctx);

// Sum of term(n) for n = 0, 1, ... The grading is a variable name, or the
// empty string for the context's weighted degree. bound(n) must be a
// nondecreasing lower bound on the graded valuation of term(n); the sum stops
// at the first n whose bound exceeds the truncation order of the grading.
using SeriesGenerator = std::function<Series(int)>;
using ValuationBound = std::function<int(int)>;

[[nodiscard]] Series formal_sum(const ContextPtr &ctx, const std::string &graded_by, const ValuationBound &bound,
                                const SeriesGenerator &term, int cap = 0);
// Product of factor(j), each of the form 1 + (terms of graded degree >= bound(j)).
[[nodiscard]] Series formal_product(const ContextPtr &ctx, const std::string &graded_by, const ValuationBound &bound,
                                    const SeriesGenerator &factor, int cap = 0);

} // namespace qseries

#endif
