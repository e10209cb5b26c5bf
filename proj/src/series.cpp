#include <qseries/series.hpp>

#include <algorithm>
#include <climits>
#include <sstream>

#include <qseries/errors.hpp>

namespace qseries
{

namespace
{

using Codec = SeriesCodec;

bool key_less(const Series::Term &a, const Series::Term &b)
{
    return a.key < b.key;
}

int expansion_cap(const Context &ctx);

} // namespace

SeriesBuilder::SeriesBuilder(ContextPtr ctx) : ctx_(std::move(ctx))
{
    if (!ctx_) {
        throw std::invalid_argument("SeriesBuilder: null context");
    }
}

void SeriesBuilder::add(const Exponents &e, const Rational &c)
{
    if (c.is_zero()) {
        return;
    }
    switch (ctx_->classify(e)) {
    case Context::Fit::keep:
        add_key(Codec::encode(e), c);
        break;
    case Context::Fit::drop_clip:
        note_clip(ctx_->grade(e));
        break;
    case Context::Fit::drop_exact:
        break;
    }
}

void SeriesBuilder::add_key(Series::Key k, const Rational &c)
{
    auto [it, fresh] = acc_.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
    }
}

Series SeriesBuilder::build()
{
    Series s(ctx_);
    s.terms_.reserve(acc_.size());
    for (auto &[k, c] : acc_) {
        if (!c.is_zero()) {
            s.terms_.push_back({k, std::move(c)});
        }
    }
    std::sort(s.terms_.begin(), s.terms_.end(), key_less);
    s.clip_floor_ = clip_floor_;
    s.inexact_ = inexact_;
    acc_.clear();
    return s;
}

Series::Series(ContextPtr ctx) : ctx_(std::move(ctx))
{
    if (!ctx_) {
        throw std::invalid_argument("Series: null context");
    }
}

Series Series::constant(ContextPtr ctx, const Rational &c)
{
    return monomial(std::move(ctx), Mono{c, {}});
}

Series Series::monomial(ContextPtr ctx, const Mono &m)
{
    Series s(std::move(ctx));
    if (m.coeff.is_zero()) {
        return s;
    }
    switch (s.ctx_->classify(m.exps)) {
    case Context::Fit::keep:
        s.terms_.push_back({Codec::encode(m.exps), m.coeff});
        break;
    case Context::Fit::drop_clip:
        s.note_clip(s.ctx_->grade(m.exps));
        break;
    case Context::Fit::drop_exact:
        break;
    }
    return s;
}

Series Series::from_terms(ContextPtr ctx, const std::vector<std::pair<Exponents, Rational>> &terms)
{
    SeriesBuilder b(std::move(ctx));
    for (const auto &[e, c] : terms) {
        b.add(e, c);
    }
    return b.build();
}

void Series::check_compatible(const Series &o) const
{
    if (!same_context(ctx_, o.ctx_)) {
        throw IncompatibleContext("operands live in different contexts: {" + ctx_->describe() + "} vs {"
                                  + o.ctx_->describe() + "}");
    }
}

Rational Series::coefficient(const Exponents &e) const
{
    Context::Fit fit = Context::Fit::drop_exact;
    try {
        fit = ctx_->classify(e);
    } catch (const DomainError &) {
        fit = Context::Fit::drop_exact;
    }
    if (fit != Context::Fit::keep) {
        throw OutOfWindow("coefficient of " + format_monomial(e, ctx_->vars().names()) + " is outside {"
                          + ctx_->describe() + "}");
    }
    const Key k = Codec::encode(e);
    const auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{k, Rational{}}, key_less);
    if (it != terms_.end() && it->key == k) {
        return it->coeff;
    }
    return Rational{};
}

Rational Series::constant_term() const
{
    return coefficient(Exponents{});
}

Series Series::coefficient_of(const std::vector<std::pair<std::string, int>> &pattern) const
{
    std::vector<std::pair<std::size_t, int>> fixed;
    for (const auto &[name, e] : pattern) {
        fixed.emplace_back(ctx_->vars().index_of(name), e);
    }
    SeriesBuilder b(ctx_);
    for (const auto &t : terms_) {
        Exponents e = Codec::decode(t.key);
        bool match = true;
        for (const auto &[i, p] : fixed) {
            if (e[i] != p) {
                match = false;
                break;
            }
            e[i] = 0;
        }
        if (match) {
            b.add(e, t.coeff);
        }
    }
    if (clipped() || inexact_) {
        b.mark_inexact();
    }
    return b.build();
}

std::vector<std::pair<Exponents, Rational>> Series::terms() const
{
    std::vector<std::pair<Exponents, Rational>> out;
    out.reserve(terms_.size());
    for (const auto &t : terms_) {
        out.emplace_back(Codec::decode(t.key), t.coeff);
    }
    return out;
}

std::optional<int> Series::valuation(std::size_t i) const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    if (i == 0) {
        return Codec::field(terms_.front().key, 0);
    }
    int v = INT_MAX;
    for (const auto &t : terms_) {
        v = std::min(v, Codec::field(t.key, i));
    }
    return v;
}

std::optional<int> Series::weighted_valuation() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    int v = INT_MAX;
    for (const auto &t : terms_) {
        v = std::min(v, ctx_->weight_of(Codec::decode(t.key)));
    }
    return v;
}

int Series::grade_floor() const
{
    int g = clip_floor_;
    if (terms_.empty()) {
        return g;
    }
    if (!ctx_->weighted()) {
        return std::min(g, Codec::field(terms_.front().key, 0));
    }
    for (const auto &t : terms_) {
        g = std::min(g, ctx_->weight_of(Codec::decode(t.key)));
    }
    return g;
}

Series Series::merge(const Series &a, const Series &b, const Rational &sb)
{
    Series r(a.ctx_);
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
    r.clip_floor_ = std::min(a.clip_floor_, b.clip_floor_);
    r.inexact_ = a.inexact_ || b.inexact_;
    return r;
}

Series &Series::operator+=(const Series &o)
{
    check_compatible(o);
    *this = merge(*this, o, Rational{1});
    return *this;
}

Series &Series::operator-=(const Series &o)
{
    check_compatible(o);
    *this = merge(*this, o, Rational{-1});
    return *this;
}

Series Series::operator-() const
{
    return scaled(Rational{-1});
}

Series Series::scaled(const Rational &c) const
{
    Series r(ctx_);
    r.clip_floor_ = clip_floor_;
    r.inexact_ = inexact_;
    if (c.is_zero()) {
        return r;
    }
    r.terms_.reserve(terms_.size());
    for (const auto &t : terms_) {
        r.terms_.push_back({t.key, t.coeff * c});
    }
    return r;
}

Series operator*(const Series &a, const Series &b)
{
    a.check_compatible(b);
    const Context &ctx = *a.ctx_;
    SeriesBuilder acc(a.ctx_);
    const int bound = ctx.grade_bound();
    if (a.inexact_ || b.inexact_) {
        acc.mark_inexact();
    }
    // A dropped term of one factor times the lowest term of the other.
    if ((a.clipped() && a.clip_floor_ + b.grade_floor() <= bound)
        || (b.clipped() && b.clip_floor_ + a.grade_floor() <= bound)) {
        if (!a.is_zero() || !b.is_zero()) {
            acc.mark_inexact();
        }
    }
    if (a.clipped() && b.clipped()) {
        acc.note_clip(a.clip_floor_ + b.clip_floor_);
    }
    if (a.clipped() && !b.is_zero()) {
        acc.note_clip(a.clip_floor_ + b.grade_floor());
    }
    if (b.clipped() && !a.is_zero()) {
        acc.note_clip(b.clip_floor_ + a.grade_floor());
    }
    const Series &outer = a.size() <= b.size() ? a : b;
    const Series &inner = a.size() <= b.size() ? b : a;
    const int order0 = ctx.order(0);
    for (const auto &s : outer.terms_) {
        const int e0 = Codec::field(s.key, 0);
        for (const auto &t : inner.terms_) {
            if (e0 + Codec::field(t.key, 0) > order0) {
                break;
            }
            const Series::Key k = Codec::add(s.key, t.key);
            const Exponents e = Codec::decode(k);
            switch (ctx.classify(e)) {
            case Context::Fit::keep: {
                Rational c = s.coeff;
                c *= t.coeff;
                acc.add_key(k, c);
                break;
            }
            case Context::Fit::drop_clip:
                acc.note_clip(ctx.grade(e));
                break;
            case Context::Fit::drop_exact:
                break;
            }
        }
    }
    return acc.build();
}

Series Series::mul_mono(const Mono &m) const
{
    Series r(ctx_);
    r.inexact_ = inexact_;
    if (m.coeff.is_zero()) {
        return r;
    }
    const int gm = ctx_->grade(m.exps);
    bool moves_laurent = false;
    for (std::size_t i = 0; i < ctx_->arity(); ++i) {
        moves_laurent = moves_laurent || (ctx_->vars().laurent(i) && m.exps[i] != 0);
    }
    if (clipped()) {
        if (moves_laurent && clip_floor_ + gm <= ctx_->grade_bound()) {
            r.inexact_ = true;
        }
        r.note_clip(clip_floor_ + gm);
    }
    r.terms_.reserve(terms_.size());
    for (const auto &t : terms_) {
        const Exponents e = Codec::decode(t.key) + m.exps;
        switch (ctx_->classify(e)) {
        case Context::Fit::keep:
            r.terms_.push_back({Codec::encode(e), t.coeff * m.coeff});
            break;
        case Context::Fit::drop_clip:
            r.note_clip(ctx_->grade(e));
            break;
        case Context::Fit::drop_exact:
            break;
        }
    }
    // Adding a fixed vector preserves lexicographic order.
    return r;
}

Series Series::mul_one_minus(const Mono &m) const
{
    return merge(*this, mul_mono(m), Rational{-1});
}

Series Series::div_one_minus(const Mono &m) const
{
    if (m.is_constant()) {
        if (m.coeff.is_one()) {
            throw NonUnit("division by 1 - 1");
        }
        return scaled((Rational{1} - m.coeff).inverse());
    }
    Series result = *this;
    Series t = *this;
    const int cap = expansion_cap(*ctx_);
    for (int it = 0;; ++it) {
        t = t.mul_mono(m);
        if (t.is_zero()) {
            result.clip_floor_ = std::min(result.clip_floor_, t.clip_floor_);
            result.inexact_ = result.inexact_ || t.inexact_;
            return result;
        }
        if (it >= cap) {
            throw FormalDivergence("geometric series in " + format_monomial(m.exps, ctx_->vars().names())
                                   + " does not terminate within the truncation");
        }
        result = merge(result, t, Rational{1});
    }
}

Series Series::pow(int n) const
{
    if (n < 0) {
        return invert(*this).pow(-n);
    }
    Series result = constant(ctx_, Rational{1});
    Series base = *this;
    while (n > 0) {
        if (n & 1) {
            result = result * base;
        }
        n >>= 1;
        if (n > 0) {
            base = base * base;
        }
    }
    return result;
}

std::string Series::str() const
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
        if (first) {
            os << (neg ? "-" : "");
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        const std::string mono = format_monomial(e, ctx_->vars().names());
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

bool operator==(const Series &a, const Series &b)
{
    if (!same_context(a.ctx_, b.ctx_) || a.terms_.size() != b.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff) {
            return false;
        }
    }
    return true;
}

int default_iteration_cap(const Context &ctx)
{
    return 4 * (std::max(ctx.grade_bound(), ctx.order(0)) + 2);
}

namespace
{

// Geometric and inverse expansions may advance in an auxiliary variable only.
int expansion_cap(const Context &ctx)
{
    int span = 0;
    for (std::size_t i = 0; i < ctx.arity(); ++i) {
        span += ctx.order(i) - ctx.lower(i);
    }
    return default_iteration_cap(ctx) + span;
}

} // namespace

Series invert(const Series &f)
{
    const Rational c0 = f.constant_term();
    if (c0.is_zero()) {
        throw NonUnit("series with zero constant term is not invertible");
    }
    const Rational inv0 = c0.inverse();
    // c0 + c*m: a single geometric series.
    if (f.size() == 2) {
        const auto &t = f.terms_[0].key == Codec::encode(Exponents{}) ? f.terms_[1] : f.terms_[0];
        Mono m{-(t.coeff * inv0), Codec::decode(t.key)};
        Series one = Series::constant(f.ctx_, inv0);
        one.clip_floor_ = f.clip_floor_;
        one.inexact_ = f.inexact_;
        return one.div_one_minus(m);
    }
    if (f.size() == 1) {
        Series r = Series::constant(f.ctx_, inv0);
        r.clip_floor_ = f.clip_floor_;
        r.inexact_ = f.inexact_;
        return r;
    }
    // 1/(c0 (1 + h)) = (1/c0) * sum (-h)^k
    Series h = f.scaled(-inv0);
    h += Series::constant(f.ctx_, Rational{1});
    Series result = Series::constant(f.ctx_, Rational{1});
    Series power = result;
    const int cap = expansion_cap(*f.ctx_);
    for (int k = 1;; ++k) {
        power = power * h;
        if (power.is_zero()) {
            result.clip_floor_ = std::min(result.clip_floor_, power.clip_floor_);
            result.inexact_ = result.inexact_ || power.inexact_;
            break;
        }
        if (k > cap) {
            throw FormalDivergence("inverse does not converge within the truncation");
        }
        result += power;
    }
    return result.scaled(inv0);
}

Series substitute(const Series &f, const std::vector<std::pair<std::string, Mono>> &images, const ContextPtr &target)
{
    const Context &src = *f.ctx_;
    const std::size_t n = src.arity();
    std::vector<const Mono *> image(n, nullptr);
    std::vector<std::size_t> slot(n, 0);
    for (const auto &[name, m] : images) {
        image[src.vars().index_of(name)] = &m;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (image[i] == nullptr) {
            slot[i] = target->vars().index_of(src.vars().name(i));
        }
    }
    SeriesBuilder b(target);
    if (f.inexact_ || f.clipped()) {
        b.mark_inexact();
    }
    for (const auto &t : f.terms_) {
        const Exponents e = Codec::decode(t.key);
        Exponents out{};
        Rational c = t.coeff;
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (image[i] != nullptr) {
                out = out + e[i] * image[i]->exps;
                if (!image[i]->coeff.is_one()) {
                    if (image[i]->coeff.is_zero() && e[i] < 0) {
                        throw DomainError("substituting zero for a variable with negative exponent");
                    }
                    c *= image[i]->coeff.pow(e[i]);
                }
            } else {
                out[slot[i]] += e[i];
            }
        }
        b.add(out, c);
    }
    return b.build();
}

Series substitute(const Series &f, const std::string &var, const Mono &m)
{
    return substitute(f, {{var, m}}, f.context());
}

std::optional<Discrepancy> first_discrepancy(const Series &a, const Series &b)
{
    if (!same_context(a.context(), b.context())) {
        throw IncompatibleContext("comparison across contexts");
    }
    std::optional<Discrepancy> best;
    auto consider = [&](Series::Key k, const Rational &x, const Rational &y) {
        const Exponents e = Codec::decode(k);
        if (!best || graded_lex_less(e, best->exps)) {
            best = Discrepancy{e, x, y};
        }
    };
    const auto &ta = a.raw_terms();
    const auto &tb = b.raw_terms();
    auto i = ta.begin();
    auto j = tb.begin();
    while (i != ta.end() || j != tb.end()) {
        if (j == tb.end() || (i != ta.end() && i->key < j->key)) {
            consider(i->key, i->coeff, Rational{});
            ++i;
        } else if (i == ta.end() || j->key < i->key) {
            consider(j->key, Rational{}, j->coeff);
            ++j;
        } else {
            if (i->coeff != j->coeff) {
                consider(i->key, i->coeff, j->coeff);
            }
            ++i;
            ++j;
        }
    }
    return best;
}

namespace
{

struct Grading {
    bool weighted = false;
    std::size_t index = 0;
    int limit = 0;
};

Grading grading_for(const Context &ctx, const std::string &graded_by)
{
    Grading g;
    if (graded_by.empty()) {
        if (!ctx.weighted()) {
            throw std::invalid_argument("weighted grading requested in an unweighted context");
        }
        g.weighted = true;
        g.limit = ctx.trunc().weight_bound;
    } else {
        g.index = ctx.vars().index_of(graded_by);
        g.limit = ctx.order(g.index);
    }
    return g;
}

std::optional<int> graded_valuation(const Series &s, const Grading &g)
{
    return g.weighted ? s.weighted_valuation() : s.valuation(g.index);
}

template <typename Step>
Series run_formal(const ContextPtr &ctx, const std::string &graded_by, const ValuationBound &bound, int cap,
                  Series init, const char *what, Step step)
{
    const Grading g = grading_for(*ctx, graded_by);
    if (cap <= 0) {
        cap = default_iteration_cap(*ctx);
    }
    int prev = INT_MIN;
    for (int n = 0;; ++n) {
        const int b = bound(n);
        if (b < prev) {
            throw FormalDivergence(std::string(what) + ": declared valuation bound decreases at n = "
                                   + std::to_string(n));
        }
        prev = b;
        if (b > g.limit) {
            return init;
        }
        if (n >= cap) {
            throw FormalDivergence(std::string(what) + ": no convergence after " + std::to_string(cap) + " terms");
        }
        step(init, n, b, g);
    }
}

} // namespace

Series formal_sum(const ContextPtr &ctx, const std::string &graded_by, const ValuationBound &bound,
                  const SeriesGenerator &term, int cap)
{
    return run_formal(ctx, graded_by, bound, cap, Series(ctx), "formal_sum",
                      [&](Series &acc, int n, int b, const Grading &g) {
                          Series t = term(n);
                          if (!same_context(t.context(), ctx)) {
                              throw IncompatibleContext("formal_sum: term built in a different context");
                          }
                          const auto v = graded_valuation(t, g);
                          if (v && *v < b) {
                              throw FormalDivergence("formal_sum: term " + std::to_string(n) + " has valuation "
                                                     + std::to_string(*v) + " below its bound "
                                                     + std::to_string(b));
                          }
                          acc += t;
                      });
}

Series formal_product(const ContextPtr &ctx, const std::string &graded_by, const ValuationBound &bound,
                      const SeriesGenerator &factor, int cap)
{
    return run_formal(ctx, graded_by, bound, cap, Series::constant(ctx, Rational{1}), "formal_product",
                      [&](Series &acc, int n, int b, const Grading &g) {
                          Series f = factor(n);
                          if (!same_context(f.context(), ctx)) {
                              throw IncompatibleContext("formal_product: factor built in a different context");
                          }
                          Series rest = f - Series::constant(ctx, Rational{1});
                          const auto v = graded_valuation(rest, g);
                          if (v && *v < b) {
                              throw FormalDivergence("formal_product: factor " + std::to_string(n)
                                                     + " is not 1 plus terms of valuation >= "
                                                     + std::to_string(b));
                          }
                          acc = acc * f;
                      });
}

} // namespace qseries
