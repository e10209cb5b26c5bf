#include <qseries/bailey.hpp>

#include <chrono>
#include <optional>
#include <stdexcept>

#include <qseries/errors.hpp>
#include <qseries/qfunctions.hpp>

namespace qseries
{

MonoOf formal_var(std::string name)
{
    return [name = std::move(name)](const Context &c) { return c.var(name); };
}

MonoOf base_power(int e)
{
    return [e](const Context &c) { return c.q(e); };
}

BaileyPair pair_deduce222(MonoOf t)
{
    BaileyPair p;
    p.t = t;
    p.label = "pair_deduce222";
    p.alpha = [t](const ContextPtr &ctx, int n) {
        const Mono m = t(*ctx).pow(n) * ctx->q(n * (n - 1) / 2);
        return Series::monomial(ctx, m);
    };
    p.beta = [t](const ContextPtr &ctx, int n) {
        const Context &c = *ctx;
        const Mono tv = t(c);
        Series s = clearing_sum(ctx, tv, n, 2);
        s = mul_poch(s, c.q(1, Rational{-1}), c.q(1), n);
        s = mul_poch(s, -tv, c.q(1), n);
        return div_poch(s, tv * c.q(1), c.q(1), 2 * n);
    };
    return p;
}

BaileyPair unit_pair(MonoOf t)
{
    BaileyPair p;
    p.t = t;
    p.label = "unit_pair";
    p.alpha = [](const ContextPtr &ctx, int n) {
        return n == 0 ? Series::constant(ctx, Rational{1}) : Series(ctx);
    };
    p.beta = [t](const ContextPtr &ctx, int n) {
        const Context &c = *ctx;
        Series s = div_poch(Series::constant(ctx, Rational{1}), c.q(1), c.q(1), n);
        return div_poch(s, t(c) * c.q(1), c.q(1), n);
    };
    return p;
}

BaileyPair perturb_beta(BaileyPair pair, int n, MonoOf delta)
{
    auto inner = pair.beta;
    pair.beta = [inner, n, delta](const ContextPtr &ctx, int k) {
        Series s = inner(ctx, k);
        if (k == n) {
            s += Series::monomial(ctx, delta(*ctx));
        }
        return s;
    };
    pair.label += " (perturbed)";
    return pair;
}

VerificationReport verify_bailey_pair(const BaileyPair &pair, int n_max, const ContextPtr &ctx)
{
    if (n_max < 0) {
        throw std::invalid_argument("verify_bailey_pair: n_max must be nonnegative");
    }
    const auto start = std::chrono::steady_clock::now();
    const Context &c = *ctx;
    ReportBuilder rb(pair.label, Orders{c.order(0), c.arity() > 1 ? c.order(1) : 0, c.arity() > 1 ? -c.lower(1) : 0});
    const Mono tq = pair.t(c) * c.q(1);
    std::vector<Series> alpha;
    for (int n = 0; n <= n_max; ++n) {
        alpha.push_back(pair.alpha(ctx, n));
        Series sum(ctx);
        for (int k = 0; k <= n; ++k) {
            Series term = div_poch(alpha[static_cast<std::size_t>(k)], c.q(1), c.q(1), n - k);
            sum += div_poch(term, tq, c.q(1), n + k);
        }
        rb.compare("beta_" + std::to_string(n), pair.beta(ctx, n), sum);
    }
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    return rb.finish(ms.count());
}

BaileyParam BaileyParam::of(MonoOf m)
{
    BaileyParam p;
    p.kind_ = Kind::monomial;
    p.value_ = std::move(m);
    return p;
}

BaileyParam BaileyParam::infinity()
{
    return BaileyParam{};
}

BaileyParam BaileyParam::q_neg_power(int m)
{
    if (m < 0) {
        throw std::invalid_argument("BaileyParam::q_neg_power: M must be nonnegative");
    }
    BaileyParam p;
    p.kind_ = Kind::neg_power;
    p.m_ = m;
    return p;
}

namespace
{

// Per-parameter pieces of the lemma for one parameter p:
//   numerator(n)   = (p;q)_n * p^{-n}  with the limit rules applied
//   denominator(n) = (tq/p;q)_n
struct ParamFactors {
    const BaileyParam &p;
    const Context &c;
    Mono tq;

    // Monomial 1/p, or q^M for p = q^{-M}; empty for infinity.
    [[nodiscard]] std::optional<Mono> reciprocal() const
    {
        switch (p.kind()) {
        case BaileyParam::Kind::monomial:
            return p.value()(c).inverse();
        case BaileyParam::Kind::neg_power:
            return c.q(p.m());
        case BaileyParam::Kind::infinity:
            break;
        }
        return std::nullopt;
    }

    // The part of (tq/ab)^n carried by this parameter when it is a plain monomial.
    [[nodiscard]] Mono scale() const
    {
        return p.kind() == BaileyParam::Kind::monomial ? p.value()(c).inverse() : c.constant(Rational{1});
    }

    [[nodiscard]] Series numerator(Series f, int n) const
    {
        switch (p.kind()) {
        case BaileyParam::Kind::monomial:
            return mul_poch(f, p.value()(c), c.q(1), n);
        case BaileyParam::Kind::infinity:
            return f.mul_mono(tau_mono(c, n));
        case BaileyParam::Kind::neg_power:
            // (q^{-M};q)_n q^{Mn} = tau(n) (q^{M-n+1};q)_n, zero once n > M
            if (n > p.m()) {
                return Series(f.context());
            }
            return mul_poch(f.mul_mono(tau_mono(c, n)), c.q(p.m() - n + 1), c.q(1), n);
        }
        return f;
    }

    [[nodiscard]] Series denominator(Series f, PochLength n) const
    {
        const auto r = reciprocal();
        if (!r) {
            return f;
        }
        return div_poch(f, tq * *r, c.q(1), n);
    }
};

template <class Term>
Series lemma_sum(const ContextPtr &ctx, const char *what, Term term)
{
    const int cap = default_iteration_cap(*ctx);
    Series sum(ctx);
    for (int n = 0;; ++n) {
        if (n > cap) {
            throw FormalDivergence(std::string("Bailey lemma: ") + what + " does not terminate within the truncation");
        }
        Series t = term(n);
        if (t.is_zero() && n > 0) {
            break;
        }
        sum += t;
    }
    return sum;
}

} // namespace

LemmaSides apply_bailey_lemma(const BaileyPair &pair, const BaileyParam &a, const BaileyParam &b,
                              const ContextPtr &ctx)
{
    const Context &c = *ctx;
    const Mono tq = pair.t(c) * c.q(1);
    const ParamFactors fa{a, c, tq};
    const ParamFactors fb{b, c, tq};
    const Mono z = tq * fa.scale() * fb.scale();

    Series lhs = lemma_sum(ctx, "left side", [&](int n) {
        Series t = pair.alpha(ctx, n).mul_mono(z.pow(n));
        if (t.is_zero()) {
            return t;
        }
        t = fb.numerator(fa.numerator(std::move(t), n), n);
        return fb.denominator(fa.denominator(std::move(t), n), n);
    });

    Series rhs = lemma_sum(ctx, "right side", [&](int n) {
        Series t = pair.beta(ctx, n).mul_mono(z.pow(n));
        if (t.is_zero()) {
            return t;
        }
        return fb.numerator(fa.numerator(std::move(t), n), n);
    });

    rhs = mul_poch(rhs, tq, c.q(1), kInfinity);
    const auto ra = fa.reciprocal();
    const auto rb = fb.reciprocal();
    if (ra && rb) {
        rhs = mul_poch(rhs, tq * *ra * *rb, c.q(1), kInfinity);
    }
    rhs = fb.denominator(fa.denominator(std::move(rhs), kInfinity), kInfinity);
    return {std::move(lhs), std::move(rhs)};
}

} // namespace qseries
