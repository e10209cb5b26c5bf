#ifndef QSERIES_RATIONAL_HPP
#define QSERIES_RATIONAL_HPP

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace qseries
{

// Exact rational number. Values whose numerator and denominator fit in
// 64 bits are kept inline; anything larger is promoted to an mpq_class.
// The representation is always canonical (reduced, positive denominator,
// demoted back to the small form whenever it fits).
class Rational
{
public:
    Rational() noexcept = default;
    Rational(std::int64_t n) noexcept : num_(n) {} // NOLINT: implicit by design of the numeric tower
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class &q);

    Rational(const Rational &other);
    Rational(Rational &&other) noexcept = default;
    Rational &operator=(const Rational &other);
    Rational &operator=(Rational &&other) noexcept = default;
    ~Rational() = default;

    // Parses "a" or "a/b" (arbitrary size).
    static Rational parse(const std::string &s);

    [[nodiscard]] bool is_zero() const noexcept
    {
        return !big_ && num_ == 0;
    }
    [[nodiscard]] bool is_one() const noexcept
    {
        return !big_ && num_ == 1 && den_ == 1;
    }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] int sign() const noexcept;

    [[nodiscard]] mpq_class to_mpq() const;
    [[nodiscard]] std::string str() const;

    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    Rational &operator/=(const Rational &o);

    // this += a * b, the inner loop of every convolution.
    void add_mul(const Rational &a, const Rational &b);

    [[nodiscard]] Rational operator-() const;
    [[nodiscard]] Rational inverse() const;
    // Integer power; negative exponents require a nonzero value.
    [[nodiscard]] Rational pow(int k) const;

    friend Rational operator+(Rational a, const Rational &b)
    {
        a += b;
        return a;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        a -= b;
        return a;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        a *= b;
        return a;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        a /= b;
        return a;
    }
    friend bool operator==(const Rational &a, const Rational &b);
    friend bool operator!=(const Rational &a, const Rational &b)
    {
        return !(a == b);
    }
    friend std::ostream &operator<<(std::ostream &os, const Rational &r)
    {
        return os << r.str();
    }

private:
    void set_big(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

} // namespace qseries

#endif
