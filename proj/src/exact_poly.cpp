#include <qseries/exact_poly.hpp>

#include <algorithm>
#include <climits>
#include <sstream>
#include <unordered_map>

#include <qseries/errors.hpp>

namespace qseries
{

namespace
{

using Codec = PolyCodec;

bool key_less(const ExactPoly::Term &a, const ExactPoly::Term &b)
{
    return a.key < b.key;
}

void check_range(const Exponents &e, std::size_t n)
{
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (i >= n ? e[i] != 0 : (e[i] > Codec::kLimit || e[i] < -Codec::kLimit)) {
            throw DomainError("ExactPoly: exponent out of representable range");
        }
    }
}

} // namespace

class PolyBuilder
{
public:
    explicit PolyBuilder(std::vector<std::string> names) : names_(std::move(names)) {}

    void add(const Exponents &e, const Rational &c)
    {
        if (c.is_zero()) {
            return;
        }
        check_range(e, names_.size());
        add_key(Codec::encode(e), c);
    }
    void add_key(ExactPoly::Key k, const Rational &c)
    {
        auto [it, fresh] = acc_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
        }
    }
    ExactPoly build()
    {
        ExactPoly p(names_);
        p.terms_.reserve(acc_.size());
        for (auto &[k, c] : acc_) {
            if (!c.is_zero()) {
                p.terms_.push_back({k, std::move(c)});
            }
        }
        std::sort(p.terms_.begin(), p.terms_.end(), key_less);
        return p;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<ExactPoly::Key, Rational> acc_;
};

ExactPoly::ExactPoly(std::vector<std::string> names) : names_(std::move(names))
{
    if (names_.empty() || names_.size() > 4) {
        throw std::invalid_argument("ExactPoly: between 1 and 4 variables required");
    }
}

ExactPoly ExactPoly::constant(std::vector<std::string> names, const Rational &c)
{
    return monomial(std::move(names), Mono{c, {}});
}

ExactPoly ExactPoly::monomial(std::vector<std::string> names, const Mono &m)
{
    PolyBuilder b(std::move(names));
    b.add(m.exps, m.coeff);
    return b.build();
}

ExactPoly ExactPoly::from_terms(std::vector<std::string> names,
                                const std::vector<std::pair<Exponents, Rational>> &terms)
{
    PolyBuilder b(std::move(names));
    for (const auto &[e, c] : terms) {
        b.add(e, c);
    }
    return b.build();
}

ExactPoly ExactPoly::one_minus(std::vector<std::string> names, const Mono &m)
{
    PolyBuilder b(std::move(names));
    b.add(Exponents{}, Rational{1});
    b.add(m.exps, -m.coeff);
    return b.build();
}

void ExactPoly::check_compatible(const ExactPoly &o) const
{
    if (names_ != o.names_) {
        throw IncompatibleContext("ExactPoly operands use different variables");
    }
}

Rational ExactPoly::coefficient(const Exponents &e) const
{
    check_range(e, names_.size());
    const Key k = Codec::encode(e);
    const auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{k, Rational{}}, key_less);
    return it != terms_.end() && it->key == k ? it->coeff : Rational{};
}

std::vector<std::pair<Exponents, Rational>> ExactPoly::terms() const
{
    std::vector<std::pair<Exponents, Rational>> out;
    out.reserve(terms_.size());
    for (const auto &t : terms_) {
        out.emplace_back(Codec::decode(t.key), t.coeff);
    }
    return out;
}

std::pair<int, int> ExactPoly::degree_range(std::size_t i) const
{
    if (terms_.empty()) {
        return {0, 0};
    }
    int lo = INT_MAX;
    int hi = INT_MIN;
    for (const auto &t : terms_) {
        const int e = Codec::field(t.key, i);
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    return {lo, hi};
}

ExactPoly ExactPoly::merge(const ExactPoly &a, const ExactPoly &b, const Rational &sb)
{
    ExactPoly r(a.names_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && i->key < j->key)) {
            r.terms_.push_back(*i++);
        } else if (i == a.terms_.end() || j->key < i->key) {
            r.terms_.push_back({j->key, j->coeff * sb});
            ++j;
        } else {
            Rational c = i->coeff;
            c.add_mul(j->coeff, sb);
            if (!c.is_zero()) {
                r.terms_.push_back({i->key, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    return r;
}

ExactPoly &ExactPoly::operator+=(const ExactPoly &o)
{
    check_compatible(o);
    *this = merge(*this, o, Rational{1});
    return *this;
}

ExactPoly &ExactPoly::operator-=(const ExactPoly &o)
{
    check_compatible(o);
    *this = merge(*this, o, Rational{-1});
    return *this;
}

ExactPoly ExactPoly::operator-() const
{
    return scaled(Rational{-1});
}

ExactPoly ExactPoly::scaled(const Rational &c) const
{
    ExactPoly r(names_);
    if (c.is_zero()) {
        return r;
    }
    r.terms_.reserve(terms_.size());
    for (const auto &t : terms_) {
        r.terms_.push_back({t.key, t.coeff * c});
    }
    return r;
}

ExactPoly operator*(const ExactPoly &a, const ExactPoly &b)
{
    a.check_compatible(b);
    PolyBuilder acc(a.names_);
    for (const auto &s : a.terms_) {
        for (const auto &t : b.terms_) {
            const ExactPoly::Key k = Codec::add(s.key, t.key);
            Rational c = s.coeff;
            c *= t.coeff;
            acc.add_key(k, c);
        }
    }
    ExactPoly r = acc.build();
    for (const auto &t : r.terms_) {
        check_range(Codec::decode(t.key), r.names_.size());
    }
    return r;
}

ExactPoly ExactPoly::mul_mono(const Mono &m) const
{
    ExactPoly r(names_);
    if (m.coeff.is_zero()) {
        return r;
    }
    r.terms_.reserve(terms_.size());
    for (const auto &t : terms_) {
        const Exponents e = Codec::decode(t.key) + m.exps;
        check_range(e, names_.size());
        r.terms_.push_back({Codec::encode(e), t.coeff * m.coeff});
    }
    return r;
}

ExactPoly ExactPoly::pow(int n) const
{
    if (n < 0) {
        throw DomainError("ExactPoly: negative power");
    }
    ExactPoly result = constant(names_, Rational{1});
    ExactPoly base = *this;
    while (n > 0) {
        if (n & 1) {
            result *= base;
        }
        n >>= 1;
        if (n > 0) {
            base *= base;
        }
    }
    return result;
}

ExactPoly ExactPoly::substitute(const Substitution &images) const
{
    std::vector<const Mono *> image(names_.size(), nullptr);
    for (const auto &[name, m] : images) {
        const auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) {
            throw std::invalid_argument("ExactPoly::substitute: unknown variable '" + name + "'");
        }
        image[static_cast<std::size_t>(it - names_.begin())] = &m;
    }
    PolyBuilder b(names_);
    for (const auto &t : terms_) {
        const Exponents e = Codec::decode(t.key);
        Exponents out{};
        Rational c = t.coeff;
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (image[i] == nullptr) {
                out[i] += e[i];
            } else if (e[i] != 0) {
                out = out + e[i] * image[i]->exps;
                c *= image[i]->coeff.pow(e[i]);
            }
        }
        b.add(out, c);
    }
    return b.build();
}

ExactPoly ExactPoly::divide_exact(const ExactPoly &d) const
{
    check_compatible(d);
    if (d.is_zero()) {
        throw DomainError("ExactPoly: division by zero");
    }
    ExactPoly quotient(names_);
    if (is_zero()) {
        return quotient;
    }
    const std::size_t n = names_.size();
    // The quotient's exponents lie in the difference of the bounding boxes.
    Exponents qlo{};
    Exponents qhi{};
    for (std::size_t i = 0; i < n; ++i) {
        const auto [alo, ahi] = degree_range(i);
        const auto [dlo, dhi] = d.degree_range(i);
        qlo[i] = alo - dlo;
        qhi[i] = ahi - dhi;
        if (qlo[i] > qhi[i]) {
            throw DomainError("ExactPoly: divisor does not divide");
        }
    }
    const Term &lead = d.terms_.back();
    const Exponents lead_e = Codec::decode(lead.key);
    const Rational lead_inv = lead.coeff.inverse();
    ExactPoly rem = *this;
    PolyBuilder qb(names_);
    while (!rem.is_zero()) {
        const Term &top = rem.terms_.back();
        Exponents e = Codec::decode(top.key);
        for (std::size_t i = 0; i < n; ++i) {
            e[i] -= lead_e[i];
            if (e[i] < qlo[i] || e[i] > qhi[i]) {
                throw DomainError("ExactPoly: divisor does not divide");
            }
        }
        const Mono t{top.coeff * lead_inv, e};
        qb.add(t.exps, t.coeff);
        rem = merge(rem, d.mul_mono(t), Rational{-1});
    }
    return qb.build();
}

namespace
{

// Exponent vectors of p rewritten into the variables of ctx.
std::vector<std::pair<Exponents, Rational>> mapped_terms(const ExactPoly &p, const Context &ctx,
                                                         const Substitution &images)
{
    const auto &names = p.names();
    std::vector<const Mono *> image(names.size(), nullptr);
    std::vector<std::size_t> slot(names.size(), 0);
    for (const auto &[name, m] : images) {
        const auto it = std::find(names.begin(), names.end(), name);
        if (it != names.end()) {
            image[static_cast<std::size_t>(it - names.begin())] = &m;
        }
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (image[i] == nullptr) {
            slot[i] = ctx.vars().index_of(names[i]);
        }
    }
    std::vector<std::pair<Exponents, Rational>> out;
    for (const auto &[e, c0] : p.terms()) {
        Exponents x{};
        Rational c = c0;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (image[i] != nullptr) {
                x = x + e[i] * image[i]->exps;
                c *= image[i]->coeff.pow(e[i]);
            } else {
                x[slot[i]] += e[i];
            }
        }
        out.emplace_back(x, std::move(c));
    }
    return out;
}

Series build_shifted(const ContextPtr &ctx, const std::vector<std::pair<Exponents, Rational>> &ts, int shift0)
{
    SeriesBuilder b(ctx);
    for (auto [e, c] : ts) {
        e[0] += shift0;
        b.add(e, c);
    }
    return b.build();
}

} // namespace

Series ExactPoly::to_series(const ContextPtr &ctx, const Substitution &images) const
{
    return build_shifted(ctx, mapped_terms(*this, *ctx, images), 0);
}

std::string ExactPoly::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    auto ts = terms();
    std::stable_sort(ts.begin(), ts.end(),
                     [](const auto &x, const auto &y) { return graded_lex_less(x.first, y.first); });
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : ts) {
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        const std::string mono = format_monomial(e, names_);
        if (mono == "1") {
            os << mag;
        } else if (mag.is_one()) {
            os << mono;
        } else {
            os << mag << '*' << mono;
        }
    }
    return os.str();
}

bool operator==(const ExactPoly &a, const ExactPoly &b)
{
    if (a.names_ != b.names_ || a.terms_.size() != b.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff) {
            return false;
        }
    }
    return true;
}

std::optional<Discrepancy> first_discrepancy(const ExactPoly &a, const ExactPoly &b)
{
    const ExactPoly diff = a - b;
    std::optional<Discrepancy> best;
    for (const auto &[e, c] : diff.terms()) {
        if (!best || graded_lex_less(e, best->exps)) {
            best = Discrepancy{e, a.coefficient(e), b.coefficient(e)};
        }
    }
    return best;
}

RationalFunction::RationalFunction(ExactPoly num)
    : num_(std::move(num)), den_(ExactPoly::constant(num_.names(), Rational{1}))
{
}

RationalFunction::RationalFunction(ExactPoly num, ExactPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) {
        throw DomainError("RationalFunction: zero denominator");
    }
    if (num_.names() != den_.names()) {
        throw IncompatibleContext("RationalFunction: numerator and denominator use different variables");
    }
}

RationalFunction operator+(const RationalFunction &a, const RationalFunction &b)
{
    if (a.den_ == b.den_) {
        return RationalFunction(a.num_ + b.num_, a.den_);
    }
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction &a, const RationalFunction &b)
{
    if (a.den_ == b.den_) {
        return RationalFunction(a.num_ - b.num_, a.den_);
    }
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction &a, const RationalFunction &b)
{
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction &a, const RationalFunction &b)
{
    if (b.num_.is_zero()) {
        throw DomainError("RationalFunction: division by zero");
    }
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::simplified() const
{
    if (den_.size() == 1) {
        const auto [e, c] = den_.terms().front();
        return RationalFunction(num_.mul_mono(Mono{c, e}.inverse()));
    }
    try {
        return RationalFunction(num_.divide_exact(den_));
    } catch (const DomainError &) {
        return *this;
    }
}

Series RationalFunction::to_series(const ContextPtr &ctx, const Substitution &images) const
{
    const auto dt = mapped_terms(den_, *ctx, images);
    int v = INT_MAX;
    for (const auto &[e, c] : dt) {
        v = std::min(v, e[0]);
    }
    if (dt.empty()) {
        throw NonUnit("RationalFunction: zero denominator");
    }
    // Clear the lowest base power from both sides so the denominator is a unit.
    const Series d = build_shifted(ctx, dt, -v);
    const Series n = build_shifted(ctx, mapped_terms(num_, *ctx, images), -v);
    return n * invert(d);
}

std::string RationalFunction::str() const
{
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

bool operator==(const RationalFunction &a, const RationalFunction &b)
{
    return a.num_ * b.den_ == b.num_ * a.den_;
}

} // namespace qseries
