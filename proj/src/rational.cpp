#include <qseries/rational.hpp>

#include <limits>
#include <numeric>
#include <stdexcept>

namespace qseries
{

namespace
{

using i128 = __int128;

constexpr i128 kMin = std::numeric_limits<std::int64_t>::min();
constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v)
{
    // Exclude INT64_MIN so that negation never overflows.
    return v > kMin && v <= kMax;
}

i128 gcd128(i128 a, i128 b)
{
    if (a < 0) {
        a = -a;
    }
    if (b < 0) {
        b = -b;
    }
    while (b != 0) {
        const i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(i128 v)
{
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

mpq_class small_to_mpq(std::int64_t n, std::int64_t d)
{
    mpq_class q{mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d))};
    return q;
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d)
{
    if (d == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    i128 nn = n;
    i128 dd = d;
    if (dd < 0) {
        nn = -nn;
        dd = -dd;
    }
    const i128 g = gcd128(nn, dd);
    if (g > 1) {
        nn /= g;
        dd /= g;
    }
    if (fits(nn) && fits(dd)) {
        num_ = static_cast<std::int64_t>(nn);
        den_ = static_cast<std::int64_t>(dd);
    } else {
        mpq_class q{to_mpz(nn), to_mpz(dd)};
        set_big(std::move(q));
    }
}

Rational::Rational(const mpq_class &q)
{
    mpq_class c = q;
    c.canonicalize();
    set_big(std::move(c));
}

Rational::Rational(const Rational &other) : num_(other.num_), den_(other.den_)
{
    if (other.big_) {
        big_ = std::make_unique<mpq_class>(*other.big_);
    }
}

Rational &Rational::operator=(const Rational &other)
{
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        if (other.big_) {
            big_ = std::make_unique<mpq_class>(*other.big_);
        } else {
            big_.reset();
        }
    }
    return *this;
}

Rational Rational::parse(const std::string &s)
{
    mpq_class q;
    if (q.set_str(s, 10) != 0) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
    if (q.get_den() == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    return Rational(q);
}

void Rational::set_big(mpq_class q)
{
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        const long n = q.get_num().get_si();
        const long d = q.get_den().get_si();
        if (n != std::numeric_limits<long>::min() && d != std::numeric_limits<long>::min()) {
            num_ = n;
            den_ = d;
            big_.reset();
            return;
        }
    }
    num_ = 0;
    den_ = 1;
    if (big_) {
        *big_ = std::move(q);
    } else {
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

Rational Rational::pow(int k) const
{
    if (k < 0) {
        return inverse().pow(-k);
    }
    Rational result(1);
    Rational base(*this);
    while (k > 0) {
        if (k & 1) {
            result *= base;
        }
        k >>= 1;
        if (k > 0) {
            base *= base;
        }
    }
    return result;
}

bool Rational::is_integer() const
{
    return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const noexcept
{
    if (big_) {
        return sgn(*big_);
    }
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const
{
    return big_ ? *big_ : small_to_mpq(num_, den_);
}

std::string Rational::str() const
{
    if (big_) {
        return big_->get_str();
    }
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational &Rational::operator+=(const Rational &o)
{
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t r;
            if (!__builtin_add_overflow(num_, o.num_, &r) && r != std::numeric_limits<std::int64_t>::min()) {
                num_ = r;
                return *this;
            }
        }
        i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
        i128 d = static_cast<i128>(den_) * o.den_;
        const i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
        set_big(mpq_class{to_mpz(n), to_mpz(d)});
        return *this;
    }
    set_big(to_mpq() + o.to_mpq());
    return *this;
}

Rational &Rational::operator-=(const Rational &o)
{
    return *this += -o;
}

Rational &Rational::operator*=(const Rational &o)
{
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t r;
            if (!__builtin_mul_overflow(num_, o.num_, &r) && r != std::numeric_limits<std::int64_t>::min()) {
                num_ = r;
                return *this;
            }
        }
        // Cross-cancel before multiplying.
        const i128 g1 = gcd128(num_, o.den_);
        const i128 g2 = gcd128(o.num_, den_);
        i128 n = (static_cast<i128>(num_) / (g1 == 0 ? 1 : g1)) * (static_cast<i128>(o.num_) / (g2 == 0 ? 1 : g2));
        i128 d = (static_cast<i128>(den_) / (g2 == 0 ? 1 : g2)) * (static_cast<i128>(o.den_) / (g1 == 0 ? 1 : g1));
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
        set_big(mpq_class{to_mpz(n), to_mpz(d)});
        return *this;
    }
    set_big(to_mpq() * o.to_mpq());
    return *this;
}

Rational &Rational::operator/=(const Rational &o)
{
    return *this *= o.inverse();
}

void Rational::add_mul(const Rational &a, const Rational &b)
{
    if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
        std::int64_t p;
        std::int64_t r;
        if (!__builtin_mul_overflow(a.num_, b.num_, &p) && !__builtin_add_overflow(num_, p, &r)
            && r != std::numeric_limits<std::int64_t>::min()) {
            num_ = r;
            return;
        }
    }
    *this += a * b;
}

Rational Rational::operator-() const
{
    Rational r;
    if (big_) {
        r.set_big(-*big_);
    } else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    if (big_) {
        Rational r;
        r.set_big(1 / *big_);
        return r;
    }
    Rational r;
    if (num_ < 0) {
        r.num_ = -den_;
        r.den_ = -num_;
    } else {
        r.num_ = den_;
        r.den_ = num_;
    }
    return r;
}

bool operator==(const Rational &a, const Rational &b)
{
    if (!a.big_ && !b.big_) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    // Canonical forms: a big value never equals a small one.
    if (a.big_ && b.big_) {
        return *a.big_ == *b.big_;
    }
    return false;
}

} // namespace qseries
