#ifndef QSERIES_BAILEY_HPP
#define QSERIES_BAILEY_HPP

#include <functional>
#include <string>
#include <utility>

#include <qseries/report.hpp>
#include <qseries/series.hpp>

namespace qseries
{

// A monomial chosen per context, e.g. [](const Context &c) { return c.var("y"); }.
using MonoOf = std::function<Mono(const Context &)>;

[[nodiscard]] MonoOf formal_var(std::string name);
[[nodiscard]] MonoOf base_power(int e); // q^e in original units

// Sequences (alpha_n, beta_n) relative to the parameter t:
//   beta_n = sum_{k=0}^n alpha_k / ((q;q)_{n-k} (tq;q)_{n+k}).
struct BaileyPair {
    MonoOf t;
    std::function<Series(const ContextPtr &, int)> alpha;
    std::function<Series(const ContextPtr &, int)> beta;
    std::string label;
};

// alpha_n = t^n q^{n(n-1)/2},
// beta_n  = (-q,-t;q)_n / (tq;q)_{2n} * sum_k q^{2k} (t/q;q)_{2k} / ((q^2;q^2)_k (t^2;q^2)_k).
[[nodiscard]] BaileyPair pair_deduce222(MonoOf t = formal_var("y"));
// alpha_0 = 1, alpha_n = 0 otherwise; beta_n = 1/((q;q)_n (tq;q)_n).
[[nodiscard]] BaileyPair unit_pair(MonoOf t = formal_var("y"));
// Returns a copy whose beta_n gains delta at n.
[[nodiscard]] BaileyPair perturb_beta(BaileyPair pair, int n, MonoOf delta);

[[nodiscard]] VerificationReport verify_bailey_pair(const BaileyPair &pair, int n_max, const ContextPtr &ctx);

// Value of a lemma parameter: a monomial (formal variable or q-power),
// the limit marker infinity, or q^{-M} with M >= 0.
class BaileyParam
{
public:
    enum class Kind { monomial, infinity, neg_power };

    static BaileyParam of(MonoOf m);
    static BaileyParam infinity();
    static BaileyParam q_neg_power(int m);

    [[nodiscard]] Kind kind() const noexcept
    {
        return kind_;
    }
    [[nodiscard]] const MonoOf &value() const noexcept
    {
        return value_;
    }
    [[nodiscard]] int m() const noexcept
    {
        return m_;
    }

private:
    Kind kind_ = Kind::infinity;
    MonoOf value_;
    int m_ = 0;
};

struct LemmaSides {
    Series lhs;
    Series rhs;
};

// Both sides of
//   sum_n (a,b;q)_n/(tq/a,tq/b;q)_n (tq/ab)^n alpha_n
//     = (tq,tq/ab;q)_inf/(tq/a,tq/b;q)_inf sum_n (a,b;q)_n (tq/ab)^n beta_n.
// With a at infinity, (a;q)_n (c/a)^n becomes tau(n) c^n and (tq/a;q)_n becomes 1.
[[nodiscard]] LemmaSides apply_bailey_lemma(const BaileyPair &pair, const BaileyParam &a, const BaileyParam &b,
                                            const ContextPtr &ctx);

} // namespace qseries

#endif
