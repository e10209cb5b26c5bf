#include <qseries/context.hpp>

#include <algorithm>
#include <sstream>

#include <qseries/errors.hpp>

namespace qseries
{

VariableSet::VariableSet(std::vector<std::string> names, std::vector<bool> laurent)
    : names_(std::move(names)), laurent_(std::move(laurent))
{
    if (names_.empty() || names_.size() > kMaxVars) {
        throw std::invalid_argument("VariableSet: between 1 and " + std::to_string(kMaxVars) + " variables required");
    }
    if (laurent_.size() != names_.size()) {
        throw std::invalid_argument("VariableSet: one Laurent flag per variable required");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) {
            throw std::invalid_argument("VariableSet: empty variable name");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (names_[i] == names_[j]) {
                throw std::invalid_argument("VariableSet: duplicate variable '" + names_[i] + "'");
            }
        }
    }
}

bool VariableSet::contains(const std::string &n) const
{
    return std::find(names_.begin(), names_.end(), n) != names_.end();
}

std::size_t VariableSet::index_of(const std::string &n) const
{
    const auto it = std::find(names_.begin(), names_.end(), n);
    if (it == names_.end()) {
        throw std::invalid_argument("unknown variable '" + n + "'");
    }
    return static_cast<std::size_t>(it - names_.begin());
}

Context::Context(VariableSet vars, TruncationSpec trunc, int base_scale)
    : vars_(std::move(vars)), trunc_(std::move(trunc)), base_scale_(base_scale)
{
    const std::size_t n = vars_.size();
    if (trunc_.order.size() != n) {
        throw std::invalid_argument("TruncationSpec: one order per variable required");
    }
    if (trunc_.window.empty()) {
        trunc_.window.assign(n, 0);
    }
    if (trunc_.window.size() != n) {
        throw std::invalid_argument("TruncationSpec: one window per variable required");
    }
    if (!trunc_.weights.empty() && trunc_.weights.size() != n) {
        throw std::invalid_argument("TruncationSpec: one weight per variable required");
    }
    if (base_scale_ != 1 && base_scale_ != 2) {
        throw std::invalid_argument("Context: base scale must be 1 or 2");
    }
    if (vars_.laurent(0)) {
        throw std::invalid_argument("Context: the base variable cannot be Laurent in a truncated context");
    }
    constexpr int limit = SeriesCodec::kLimit;
    for (std::size_t i = 0; i < n; ++i) {
        const int o = trunc_.order[i];
        const int w = trunc_.window[i];
        if (o < 0 || o > limit || w < 0 || w > limit) {
            throw std::invalid_argument("TruncationSpec: bounds for '" + vars_.name(i) + "' out of range");
        }
        if (!vars_.laurent(i) && w != 0) {
            throw std::invalid_argument("TruncationSpec: window given for non-Laurent variable '" + vars_.name(i) + "'");
        }
        lo_[i] = vars_.laurent(i) ? -w : 0;
        hi_[i] = o;
    }
    if (weighted()) {
        if (trunc_.weight_bound < 0) {
            throw std::invalid_argument("TruncationSpec: negative weight bound");
        }
        if (trunc_.weights[0] <= 0) {
            throw std::invalid_argument("TruncationSpec: the base variable must carry positive weight");
        }
    }
}

ContextPtr Context::make(VariableSet vars, TruncationSpec trunc, int base_scale)
{
    return std::make_shared<const Context>(std::move(vars), std::move(trunc), base_scale);
}

ContextPtr Context::make(const std::vector<VarSpec> &specs, int weight_bound, int base_scale)
{
    std::vector<std::string> names;
    std::vector<bool> laurent;
    TruncationSpec t;
    bool any_weight = false;
    for (const auto &s : specs) {
        names.push_back(s.name);
        laurent.push_back(s.laurent);
        t.order.push_back(s.order);
        t.window.push_back(s.window);
        t.weights.push_back(s.weight);
        any_weight = any_weight || s.weight != 0;
    }
    if (any_weight) {
        t.weight_bound = weight_bound;
    } else {
        t.weights.clear();
    }
    return make(VariableSet(std::move(names), std::move(laurent)), std::move(t), base_scale);
}

int Context::weight_of(const Exponents &e) const
{
    int w = 0;
    for (std::size_t i = 0; i < trunc_.weights.size(); ++i) {
        w += trunc_.weights[i] * e[i];
    }
    return w;
}

Context::Fit Context::classify(const Exponents &e) const
{
    const std::size_t n = arity();
    for (std::size_t i = 0; i < n; ++i) {
        if (!vars_.laurent(i) && e[i] < 0) {
            throw DomainError("negative exponent " + std::to_string(e[i]) + " of non-Laurent variable '"
                              + vars_.name(i) + "'");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!vars_.laurent(i) && e[i] > hi_[i]) {
            return Fit::drop_exact;
        }
    }
    if (weighted()) {
        const int w = weight_of(e);
        if (w > trunc_.weight_bound) {
            return Fit::drop_exact;
        }
        if (w < 0) {
            throw DomainError("term of negative weight " + std::to_string(w) + " in a graded context");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (vars_.laurent(i) && (e[i] < lo_[i] || e[i] > hi_[i])) {
            return Fit::drop_clip;
        }
    }
    return Fit::keep;
}

bool Context::beyond_ideal(const Exponents &e) const
{
    for (std::size_t i = 0; i < arity(); ++i) {
        if (!vars_.laurent(i) && e[i] > hi_[i]) {
            return true;
        }
    }
    return weighted() && weight_of(e) > trunc_.weight_bound;
}

Mono Context::var(const std::string &name, int power) const
{
    Mono m;
    m.exps[vars_.index_of(name)] = power;
    return m;
}

Mono Context::mono(const Rational &c, std::initializer_list<std::pair<std::string, int>> powers) const
{
    Mono m{c, {}};
    for (const auto &[name, p] : powers) {
        m.exps[vars_.index_of(name)] += p;
    }
    return m;
}

Mono Context::q(int e, const Rational &c) const
{
    Mono m{c, {}};
    m.exps[0] = e * base_scale_;
    return m;
}

Mono Context::q_half(int h, const Rational &c) const
{
    if (base_scale_ == 2) {
        Mono m{c, {}};
        m.exps[0] = h;
        return m;
    }
    if (h % 2 != 0) {
        throw DomainError("half-integer power of q requires the rescale q = u^2");
    }
    return q(h / 2, c);
}

std::string Context::describe() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < arity(); ++i) {
        if (i != 0) {
            os << ", ";
        }
        if (vars_.laurent(i)) {
            os << vars_.name(i) << " in [" << lo_[i] << "," << hi_[i] << "]";
        } else {
            os << vars_.name(i) << "<=" << hi_[i];
        }
    }
    if (weighted()) {
        os << ", weight(";
        for (std::size_t i = 0; i < arity(); ++i) {
            os << (i ? "," : "") << trunc_.weights[i];
        }
        os << ")<=" << trunc_.weight_bound;
    }
    if (base_scale_ == 2) {
        os << ", q=" << vars_.name(0) << "^2";
    }
    return os.str();
}

bool same_context(const ContextPtr &a, const ContextPtr &b)
{
    return a == b || (a && b && *a == *b);
}

} // namespace qseries
