#ifndef QSERIES_MONOMIAL_HPP
#define QSERIES_MONOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <qseries/rational.hpp>

namespace qseries
{

inline constexpr std::size_t kMaxVars = 5;

// One exponent per variable; slots past the variable-set arity stay zero.
using Exponents = std::array<int, kMaxVars>;

[[nodiscard]] inline Exponents operator+(const Exponents &a, const Exponents &b)
{
    Exponents r{};
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        r[i] = a[i] + b[i];
    }
    return r;
}

[[nodiscard]] inline Exponents operator*(int k, const Exponents &a)
{
    Exponents r{};
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        r[i] = k * a[i];
    }
    return r;
}

[[nodiscard]] inline int total_degree(const Exponents &e)
{
    int s = 0;
    for (int x : e) {
        s += x;
    }
    return s;
}

// Graded-lex comparison: total degree first, then lexicographic in
// variable order.
[[nodiscard]] inline bool graded_lex_less(const Exponents &a, const Exponents &b)
{
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) {
        return da < db;
    }
    return a < b;
}

// A single term c * x^e. Exponents may be negative in any slot; whether
// the term is admissible is decided by the ring it is placed into.
struct Mono {
    Rational coeff{1};
    Exponents exps{};

    [[nodiscard]] bool is_constant() const
    {
        for (int e : exps) {
            if (e != 0) {
                return false;
            }
        }
        return true;
    }

    [[nodiscard]] Mono pow(int k) const;
    [[nodiscard]] Mono inverse() const;

    friend Mono operator*(const Mono &a, const Mono &b)
    {
        return Mono{a.coeff * b.coeff, a.exps + b.exps};
    }
    friend Mono operator/(const Mono &a, const Mono &b)
    {
        return a * b.inverse();
    }
    friend Mono operator-(const Mono &a)
    {
        return Mono{-a.coeff, a.exps};
    }
    friend bool operator==(const Mono &a, const Mono &b)
    {
        return a.coeff == b.coeff && a.exps == b.exps;
    }
};

// Packs an exponent vector into 64 bits: kFields fields of kBits bits each,
// biased so that the packed integer order is lexicographic order with
// variable 0 most significant.
template <int kBits, std::size_t kFields>
struct KeyCodec {
    static_assert(kBits * kFields <= 64);
    static constexpr std::int64_t kBias = std::int64_t{1} << (kBits - 1);
    static constexpr std::uint64_t kMask = (std::uint64_t{1} << kBits) - 1;
    // Largest magnitude accepted for a single operand so that the sum of two
    // operands never leaves its field.
    static constexpr int kLimit = static_cast<int>(kBias / 2 - 1);

    static constexpr int shift(std::size_t i)
    {
        return static_cast<int>(kBits * (kFields - 1 - i));
    }

    static constexpr std::uint64_t bias_key()
    {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < kFields; ++i) {
            k |= static_cast<std::uint64_t>(kBias) << shift(i);
        }
        return k;
    }

    static std::uint64_t encode(const Exponents &e)
    {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < kFields; ++i) {
            k |= static_cast<std::uint64_t>(e[i] + kBias) << shift(i);
        }
        return k;
    }

    static int field(std::uint64_t key, std::size_t i)
    {
        return static_cast<int>(static_cast<std::int64_t>((key >> shift(i)) & kMask) - kBias);
    }

    static Exponents decode(std::uint64_t key)
    {
        Exponents e{};
        for (std::size_t i = 0; i < kFields; ++i) {
            e[i] = field(key, i);
        }
        return e;
    }

    // Key of the product of two monomials. Valid while both operands are
    // within kLimit in every slot.
    static std::uint64_t add(std::uint64_t a, std::uint64_t b)
    {
        return a + b - bias_key();
    }
};

// Series keys: 12-bit fields for every slot. ExactPoly keys: 16-bit fields,
// at most four variables.
using SeriesCodec = KeyCodec<12, kMaxVars>;
using PolyCodec = KeyCodec<16, 4>;

std::string format_monomial(const Exponents &e, const std::vector<std::string> &names);

} // namespace qseries

#endif
