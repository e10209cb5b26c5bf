#ifndef QSERIES_EXACT_POLY_HPP
#define QSERIES_EXACT_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <qseries/context.hpp>
#include <qseries/monomial.hpp>
#include <qseries/rational.hpp>
#include <qseries/series.hpp>

namespace qseries
{

using Substitution = std::vector<std::pair<std::string, Mono>>;

// Exact Laurent polynomial in up to four variables. Every variable,
// including the base, may carry negative exponents. Values with the same
// variable names compare term by term.
class ExactPoly
{
public:
    using Key = std::uint64_t;
    struct Term {
        Key key;
        Rational coeff;
    };

    ExactPoly() : ExactPoly(std::vector<std::string>{"q"}) {}
    explicit ExactPoly(std::vector<std::string> names);

    static ExactPoly constant(std::vector<std::string> names, const Rational &c);
    static ExactPoly monomial(std::vector<std::string> names, const Mono &m);
    static ExactPoly from_terms(std::vector<std::string> names,
                                const std::vector<std::pair<Exponents, Rational>> &terms);
    // 1 - m
    static ExactPoly one_minus(std::vector<std::string> names, const Mono &m);

    [[nodiscard]] const std::vector<std::string> &names() const noexcept
    {
        return names_;
    }
    [[nodiscard]] bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    [[nodiscard]] std::size_t size() const noexcept
    {
        return terms_.size();
    }
    [[nodiscard]] Rational coefficient(const Exponents &e) const;
    [[nodiscard]] std::vector<std::pair<Exponents, Rational>> terms() const;
    // Least and greatest exponent of variable i; zero polynomial gives {0, 0}.
    [[nodiscard]] std::pair<int, int> degree_range(std::size_t i) const;

    ExactPoly &operator+=(const ExactPoly &o);
    ExactPoly &operator-=(const ExactPoly &o);
    [[nodiscard]] ExactPoly operator-() const;
    [[nodiscard]] ExactPoly scaled(const Rational &c) const;
    friend ExactPoly operator+(ExactPoly a, const ExactPoly &b)
    {
        a += b;
        return a;
    }
    friend ExactPoly operator-(ExactPoly a, const ExactPoly &b)
    {
        a -= b;
        return a;
    }
    friend ExactPoly operator*(const ExactPoly &a, const ExactPoly &b);
    ExactPoly &operator*=(const ExactPoly &o)
    {
        *this = *this * o;
        return *this;
    }

    [[nodiscard]] ExactPoly mul_mono(const Mono &m) const;
    [[nodiscard]] ExactPoly pow(int n) const;
    // Replace listed variables by monomials over the same names.
    [[nodiscard]] ExactPoly substitute(const Substitution &images) const;

    // Exact quotient; throws DomainError when the divisor does not divide.
    [[nodiscard]] ExactPoly divide_exact(const ExactPoly &d) const;

    // Embeds into a truncated context. Variables listed in images are
    // replaced by monomials of the context; the rest map by name.
    [[nodiscard]] Series to_series(const ContextPtr &ctx, const Substitution &images = {}) const;

    [[nodiscard]] std::string str() const;

    friend bool operator==(const ExactPoly &a, const ExactPoly &b);
    friend bool operator!=(const ExactPoly &a, const ExactPoly &b)
    {
        return !(a == b);
    }

private:
    friend class PolyBuilder;
    void check_compatible(const ExactPoly &o) const;
    static ExactPoly merge(const ExactPoly &a, const ExactPoly &b, const Rational &sb);

    std::vector<std::string> names_;
    std::vector<Term> terms_;
};

// Graded-lex least monomial on which two polynomials differ.
[[nodiscard]] std::optional<Discrepancy> first_discrepancy(const ExactPoly &a, const ExactPoly &b);

// num / den with den nonzero. Not reduced; equality is by cross
// multiplication.
class RationalFunction
{
public:
    RationalFunction() = default;
    RationalFunction(ExactPoly num); // NOLINT: polynomials embed implicitly
    RationalFunction(ExactPoly num, ExactPoly den);

    [[nodiscard]] const ExactPoly &num() const noexcept
    {
        return num_;
    }
    [[nodiscard]] const ExactPoly &den() const noexcept
    {
        return den_;
    }
    [[nodiscard]] bool is_zero() const noexcept
    {
        return num_.is_zero();
    }

    friend RationalFunction operator+(const RationalFunction &a, const RationalFunction &b);
    friend RationalFunction operator-(const RationalFunction &a, const RationalFunction &b);
    friend RationalFunction operator*(const RationalFunction &a, const RationalFunction &b);
    friend RationalFunction operator/(const RationalFunction &a, const RationalFunction &b);
    RationalFunction &operator+=(const RationalFunction &o)
    {
        *this = *this + o;
        return *this;
    }
    RationalFunction &operator*=(const RationalFunction &o)
    {
        *this = *this * o;
        return *this;
    }

    // Cancels the content shared by numerator and denominator when the
    // denominator divides exactly or is a monomial; otherwise unchanged.
    [[nodiscard]] RationalFunction simplified() const;

    [[nodiscard]] Series to_series(const ContextPtr &ctx, const Substitution &images = {}) const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const RationalFunction &a, const RationalFunction &b);

private:
    ExactPoly num_;
    ExactPoly den_ = ExactPoly::constant({"q"}, 1);
};

} // namespace qseries

#endif
