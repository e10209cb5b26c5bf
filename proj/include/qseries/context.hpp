#ifndef QSERIES_CONTEXT_HPP
#define QSERIES_CONTEXT_HPP

#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <qseries/monomial.hpp>

namespace qseries
{

// Ordered variable names. Index 0 is the base variable (q, or u when the
// context works under the rescale q = u^2).
class VariableSet
{
public:
    VariableSet() = default;
    VariableSet(std::vector<std::string> names, std::vector<bool> laurent);

    [[nodiscard]] std::size_t size() const noexcept
    {
        return names_.size();
    }
    [[nodiscard]] const std::string &name(std::size_t i) const
    {
        return names_.at(i);
    }
    [[nodiscard]] const std::vector<std::string> &names() const noexcept
    {
        return names_;
    }
    [[nodiscard]] bool laurent(std::size_t i) const
    {
        return laurent_.at(i);
    }
    [[nodiscard]] bool contains(const std::string &n) const;
    [[nodiscard]] std::size_t index_of(const std::string &n) const;

    friend bool operator==(const VariableSet &a, const VariableSet &b)
    {
        return a.names_ == b.names_ && a.laurent_ == b.laurent_;
    }

private:
    std::vector<std::string> names_;
    std::vector<bool> laurent_;
};

// Per-variable bounds. Exponents above order[i] are dropped; for Laurent
// variables exponents below -window[i] are dropped. When weights is
// nonempty, terms whose weighted degree exceeds weight_bound are dropped
// as well, and every stored term must have nonnegative weight.
struct TruncationSpec {
    std::vector<int> order;
    std::vector<int> window;
    std::vector<int> weights;
    int weight_bound = 0;

    friend bool operator==(const TruncationSpec &, const TruncationSpec &) = default;
};

// Declarative description of one variable, used to assemble a context.
struct VarSpec {
    std::string name;
    int order = 0;
    bool laurent = false;
    int window = 0;
    int weight = 0;
};

class Context;
using ContextPtr = std::shared_ptr<const Context>;

// The ring a Series lives in: variables, truncation, and the scale of the
// base variable (2 under the rescale q = u^2, 1 otherwise).
class Context
{
public:
    enum class Fit {
        keep,
        // Outside the ideal cut by the truncation; dropping is exact.
        drop_exact,
        // Outside a Laurent window but inside every ideal bound; dropping
        // loses information that could re-enter the window under
        // multiplication.
        drop_clip,
    };

    Context(VariableSet vars, TruncationSpec trunc, int base_scale = 1);

    static ContextPtr make(VariableSet vars, TruncationSpec trunc, int base_scale = 1);
    // Convenience: make({{"q", 40}, {"z", 12}}).
    static ContextPtr make(const std::vector<VarSpec> &specs, int weight_bound = 0, int base_scale = 1);

    [[nodiscard]] const VariableSet &vars() const noexcept
    {
        return vars_;
    }
    [[nodiscard]] const TruncationSpec &trunc() const noexcept
    {
        return trunc_;
    }
    [[nodiscard]] std::size_t arity() const noexcept
    {
        return vars_.size();
    }
    [[nodiscard]] int base_scale() const noexcept
    {
        return base_scale_;
    }
    [[nodiscard]] bool weighted() const noexcept
    {
        return !trunc_.weights.empty();
    }
    [[nodiscard]] int order(std::size_t i) const
    {
        return trunc_.order.at(i);
    }
    [[nodiscard]] int lower(std::size_t i) const
    {
        return lo_[i];
    }
    [[nodiscard]] int weight_of(const Exponents &e) const;
    // Degree used for the ideal cut: the weighted degree when weights are
    // set, otherwise the base exponent.
    [[nodiscard]] int grade(const Exponents &e) const
    {
        return weighted() ? weight_of(e) : e[0];
    }
    [[nodiscard]] int grade_bound() const noexcept
    {
        return weighted() ? trunc_.weight_bound : trunc_.order[0];
    }

    [[nodiscard]] Fit classify(const Exponents &e) const;
    // True when every product of this monomial with an admissible term is
    // cut exactly by the truncation (used to stop infinite products).
    [[nodiscard]] bool beyond_ideal(const Exponents &e) const;

    // Monomial builders by variable name.
    [[nodiscard]] Mono var(const std::string &name, int power = 1) const;
    [[nodiscard]] Mono mono(const Rational &c, std::initializer_list<std::pair<std::string, int>> powers) const;
    // q^e in units of the original base q; under the rescale this is u^{2e}.
    [[nodiscard]] Mono q(int e, const Rational &c = Rational{1}) const;
    // q^{h/2}; requires the rescale unless h is even.
    [[nodiscard]] Mono q_half(int h, const Rational &c = Rational{1}) const;
    [[nodiscard]] Mono constant(const Rational &c) const
    {
        return Mono{c, {}};
    }

    [[nodiscard]] std::string describe() const;

    friend bool operator==(const Context &a, const Context &b)
    {
        return a.base_scale_ == b.base_scale_ && a.vars_ == b.vars_ && a.trunc_ == b.trunc_;
    }

private:
    VariableSet vars_;
    TruncationSpec trunc_;
    int base_scale_ = 1;
    Exponents lo_{};
    Exponents hi_{};
};

[[nodiscard]] bool same_context(const ContextPtr &a, const ContextPtr &b);

} // namespace qseries

#endif
