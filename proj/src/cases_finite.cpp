// Finite identities: polynomial sums checked exactly, and the cleared
// rational-function transformations in x and y.
#include "case_support.hpp"

namespace qseries::detail
{
namespace
{

const PolyVars &vq()
{
    static const PolyVars v({"q"});
    return v;
}

const PolyVars &vqx()
{
    static const PolyVars v({"q", "x"});
    return v;
}

// sum_k (q;q)_{m+k} q^{ck} (q^{2k+2};q^2)_{m-k}: the sum over (q^2;q^2)_k
// multiplied by (q^2;q^2)_m.
ExactPoly key_sum(int m, int c)
{
    const auto &v = vq();
    ExactPoly s = v.c(0);
    for (int k = 0; k <= m; ++k) {
        s += v.poch(v.q(1), m + k) * v.p(v.q(c * k)) * v.poch(v.q(2 * k + 2), v.q(2), m - k);
    }
    return s;
}

void key99(const Orders &, ReportBuilder &rb)
{
    const auto &v = vq();
    const Mono q = v.q(1);
    for (int m = 0; m <= 15; ++m) {
        const ExactPoly q2m = v.poch(v.q(2), v.q(2), m);
        rb.compare(at("sum m", m), key_sum(m, 1), q2m * q2m);
        // (-q;q)_m U_m(q) = (-q;q)_m^2, i.e. U_m(q) = (-q;q)_m
        ExactPoly u = v.c(0);
        for (int k = 0; k <= m; ++k) {
            u += v.qbin(m + k, k) * v.p(v.q(k)) * v.poch(-v.q(k + 1), m - k);
        }
        const ExactPoly neg = v.poch(-q, m);
        rb.compare(at("U m", m), u, neg * neg);
        rb.compare(at("product m", m), v.poch(q, m) * neg, q2m);
    }
}

void key00(const Orders &, ReportBuilder &rb)
{
    const auto &v = vq();
    for (int m = 0; m <= 15; ++m) {
        const ExactPoly q2m = v.poch(v.q(2), v.q(2), m);
        const ExactPoly rhs = (v.poch(v.q(1), v.q(2), m + 1) + v.p(v.q(m + 1)) * q2m) * q2m;
        rb.compare(at("sum m", m), key_sum(m, 2), rhs);
    }
}

ExactPoly known_lhs(int n)
{
    const auto &v = vq();
    ExactPoly s = v.c(0);
    for (int k = 0; k <= n; ++k) {
        s += v.qbin(2 * n + 1, 2 * k) * v.poch(v.q(1), v.q(2), k) * v.p(v.q(k * k - k, (k % 2 == 0) ? 1 : -1));
    }
    return s;
}

void eq_known(const Orders &, ReportBuilder &rb)
{
    for (int n = 0; n <= 15; ++n) {
        rb.compare(at("n", n), known_lhs(n), vq().p(vq().q(2 * n * n + n)));
    }
}

// q^{2n^2+2n+1}/(q;q^2)_{n+1} = [z^n] (sum_{k>=1} q^k z^{k-1}/(q;q^2)_k) (zq;q^2)_n
void eq42(const Orders &o, ReportBuilder &rb)
{
    for (int n = 0; n <= 10; ++n) {
        auto ctx = Context::make({{"q", 2 * n * n + 2 * n + 1 + std::max(o.base, 20)}, {"z", n}});
        const Context &c = *ctx;
        const Mono q = c.q(1);
        const Mono z = c.var("z");
        Series g(ctx);
        for (int k = 1; k <= n + 1; ++k) {
            g += div_poch(mono(ctx, c.q(k) * z.pow(k - 1)), q, c.q(2), k);
        }
        const Series coeff = mul_poch(g, z * q, c.q(2), n).coefficient_of({{"z", n}});
        const Series lhs = div_poch(mono(ctx, c.q(2 * n * n + 2 * n + 1)), q, c.q(2), n + 1);
        rb.compare(at("n", n), lhs, coeff);
    }
}

ExactPoly bd_x(int n)
{
    const auto &v = vq();
    if (n % 2 != 0) {
        return v.c(0);
    }
    const int k = n / 2;
    return v.p(v.q(k * k - k, (k % 2 == 0) ? 1 : -1)) * v.poch(v.q(1), v.q(2), k);
}

ExactPoly bd_y(int n)
{
    return vq().p(vq().q(n * (n - 1) / 2));
}

void bd_pair(const Orders &, ReportBuilder &rb)
{
    const auto &v = vq();
    for (int n = 0; n <= 12; ++n) {
        ExactPoly forward = v.c(0);
        ExactPoly inverted = v.c(0);
        for (int k = 0; k <= n; ++k) {
            forward += v.qbin(n, k) * v.tau(n - k) * bd_y(k);
            inverted += v.qbin(n, k) * bd_x(k);
        }
        rb.compare(at("forward n", n), forward, bd_x(n));
        rb.compare(at("inverted n", n), inverted, bd_y(n));
        if (n % 2 == 1) {
            rb.compare(at("inverted vs EQ-KNOWN n", n), inverted, known_lhs(n / 2));
        }
    }
}

// The transformation for S_m(x,y), multiplied through by
// (x;q)_m R_m(q^2) (x - yq) with R_k(a) = prod_{j<k} (x - a q^j).
void masterid(const Orders &o, ReportBuilder &rb)
{
    auto ctx = Context::make({{"q", o.base}, {"x", o.aux}, {"y", o.aux}});
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const Mono x = c.var("x");
    const Mono y = c.var("y");
    const Mono q2 = c.q(2);
    const auto qbin = [&](int n, int k) { return q_binomial_series(ctx, n, k); };
    for (int m = 0; m <= 10; ++m) {
        Series sum(ctx);
        for (int k = 0; k <= m; ++k) {
            Series t = qbin(m + k, k).mul_mono(c.q(k));
            sum += mul_poch(mul_poch(t, y, q, k), x * c.q(k), q, m - k);
        }
        const Series lhs = mul_diff(mul_rev_poch(sum, x, y * q2, q, m), x, y * q);

        Series rhs = mul_diff(mul_rev_poch(mul_poch(one(ctx), x, q, m), x, q2, q, m), x, y * q);
        Series odd(ctx);
        Series even(ctx);
        for (int k = 1; k <= m; ++k) {
            Series common = mul_poch(one(ctx), y, q, k);
            common = mul_rev_poch(common, x, y * q, q, k);
            common = mul_poch(common, x * c.q(k), q, m - k);
            common = mul_rev_poch(common, x, c.q(2 + k), q, m - k);
            odd += (qbin(2 * k - 1, k) * common).mul_mono(c.q(k));
            even += (qbin(2 * k, k) * common).mul_mono(c.q(2 * k));
        }
        rhs += odd.mul_mono(q) + odd.mul_mono(x) - even.mul_mono(y * q);
        rb.compare(at("m", m), lhs, rhs);
    }
}

// x = -q in the transformation above; every denominator is a unit series.
void special2(const Orders &o, ReportBuilder &rb)
{
    auto ctx = Context::make({{"q", o.base}, {"y", o.aux}});
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const Mono q2 = c.q(2);
    const Mono y = c.var("y");
    for (int m = 0; m <= 10; ++m) {
        Series sum(ctx);
        for (int k = 0; k <= m; ++k) {
            Series t = mul_poch(mono(ctx, c.q(k)), c.q(m + 1), q, k);
            sum += div_poch(mul_poch(t, y, q, k), q2, q2, k);
        }
        const Series lhs = div_poch(mul_poch(sum, -(y * q), q, m), -q, q, m);
        Series tail(ctx);
        for (int k = 1; k <= m; ++k) {
            Series t = mul_poch(q_binomial_series(ctx, 2 * k, k).mul_mono(c.q(2 * k)), y.pow(2), q2, k);
            tail += div_poch(div_poch(t, -q, q, k), -q, q, k);
        }
        const Series rhs = one(ctx) + div_poch(tail.mul_mono(y), -y, q, 1);
        rb.compare(at("m", m), lhs, rhs);
    }
}

// y = 0, multiplied through by x (x;q)_m R_m(q^2).
void zero(const Orders &, ReportBuilder &rb)
{
    const auto &v = vqx();
    const Mono q = v.q(1);
    const Mono x = v.var("x");
    for (int m = 0; m <= 10; ++m) {
        ExactPoly lhs = v.c(0);
        ExactPoly tail = v.c(0);
        for (int k = 0; k <= m; ++k) {
            lhs += v.qbin(m + k, k) * v.p(v.q(k)) * v.poch(x * v.q(k), m - k);
            if (k >= 1) {
                tail += v.qbin(2 * k - 1, k) * v.p(v.q(k) * x.pow(k)) * v.poch(x * v.q(k), m - k) *
                        v.rev_poch(x, v.q(2 + k), q, m - k);
            }
        }
        lhs = lhs.mul_mono(x.pow(m + 1));
        const ExactPoly rhs =
            (v.poch(x, m) * v.rev_poch(x, v.q(2), q, m)).mul_mono(x) + (v.p(x) + v.p(q)) * tail;
        rb.compare(at("m", m), lhs, rhs);
    }
}

// (x;q)_{m+1}/(xq;q)_k = (1-x)(xq^{k+1};q)_{m-k}
ExactPoly sum_x_side(int m, const Mono &x)
{
    const auto &v = vqx();
    ExactPoly s = v.c(0);
    for (int k = 0; k <= m; ++k) {
        s += v.qbin(m + k, k) * v.p(v.q(k)) * v.poch(x * v.q(k + 1), m - k);
    }
    return s * v.poch(x, 1);
}

void cor36(const Orders &, ReportBuilder &rb)
{
    const auto &v = vqx();
    const Mono x = v.var("x");
    for (int m = 0; m <= 12; ++m) {
        const ExactPoly lhs = sum_x_side(m, x) + sum_x_side(m, x.inverse());
        rb.compare(at("m", m), lhs, v.poch(x, m + 1) * v.poch(x.inverse(), m + 1));
    }
}

void chu_vandermonde(const Orders &, ReportBuilder &rb)
{
    const auto &v = vq();
    for (int m = 0; m <= 12; ++m) {
        for (int r = 0; r <= (m <= 8 ? m : 0); ++r) {
            ExactPoly s = v.c(0);
            for (int k = 0; k + r <= m; ++k) {
                s += v.qbin(m + k, m) * v.qbin(m - k, r) * v.p(v.q((r + 1) * k));
            }
            rb.compare(at("m,r", m, r), s, v.qbin(2 * m + 1, m + r + 1));
        }
    }
}

// Largest n with n(n-1)/2 <= order.
int theta_bound(int order)
{
    int n = 0;
    while ((n + 1) * n / 2 <= order) {
        ++n;
    }
    return n;
}

void triple(const Orders &o, ReportBuilder &rb)
{
    const int w = std::max(o.window, theta_bound(o.base));
    auto ctx = Context::make({{"q", o.base}, {"x", w, true, w}});
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const Mono x = c.var("x");
    Series sum(ctx);
    for (int n = -w; n <= w; ++n) {
        if (n * (n - 1) / 2 <= o.base) {
            sum += mono(ctx, tau_mono(c, n) * x.pow(n));
        }
    }
    Series prod = mul_poch(one(ctx), x, q, kInfinity);
    prod = mul_poch(mul_poch(prod, q / x, q, kInfinity), q, q, kInfinity);
    rb.compare("product", prod, sum);
}

// Both identities multiplied by 1 + q^{m+1}.
void cor3600(const Orders &, ReportBuilder &rb)
{
    const auto &v = vqx();
    const Mono x = v.var("x");
    for (int m = 0; m <= 12; ++m) {
        const ExactPoly scale = v.c(1) + v.p(v.q(m + 1));
        const ExactPoly lhs = sum_x_side(m, x) * scale;
        ExactPoly tail = v.c(0);
        for (int k = 1; k <= m + 1; ++k) {
            tail += v.tau(k) * (v.c(1) + v.p(v.q(k))) * v.qbin(2 * m + 2, m + 1 - k) * v.p(x.pow(k));
        }
        rb.compare(at("m", m), lhs, v.qbin(2 * m + 1, m) * scale + tail);

        ExactPoly plain = v.c(0);
        for (int k = 0; k <= m; ++k) {
            plain += v.qbin(m + k, k) * v.p(v.q(k));
        }
        const ExactPoly full = tail + v.c(2) * v.qbin(2 * m + 2, m + 1);
        rb.compare(at("intermediate m", m), lhs + plain * scale, full);
    }
}

void xx_expansion(const Orders &, ReportBuilder &rb)
{
    const auto &v = vqx();
    const Mono x = v.var("x");
    for (int n = 0; n <= 10; ++n) {
        const ExactPoly lhs = (v.c(1) + v.p(v.q(n))) * v.poch(x, n) * v.poch(x.inverse(), n);
        ExactPoly rhs = v.c(0);
        for (int k = -n; k <= n; ++k) {
            rhs += v.tau(k) * (v.c(1) + v.p(v.q(k))) * v.qbin(2 * n, n - k) * v.p(x.pow(k));
        }
        rb.compare(at("n", n), lhs, rhs);
    }
}

struct Params {
    Mono b, c, d, e;
};

std::vector<Params> lemma_params(bool second)
{
    const auto &v = vq();
    const auto m = [&](int e, const Rational &c) { return v.q(e, c); };
    if (!second) {
        return {{m(2, 1), m(3, 1), m(5, 1), m(4, 1)},
                {m(1, -1), m(2, 1), m(4, 1), m(3, -1)},
                {m(1, 2), m(2, Rational{1, 3}), m(5, 1), m(2, -1)}};
    }
    return {{m(2, 1), m(3, 1), m(5, 1), m(4, 1)},
            {m(1, -1), m(1, 2), m(4, 1), m(3, Rational{-1, 3})},
            {m(1, Rational{1, 2}), m(2, -1), m(3, 3), m(5, 1)}};
}

RationalFunction phi32(const std::vector<Mono> &upper, const std::vector<Mono> &lower, const Mono &arg)
{
    const auto &v = vq();
    auto r = terminating_hypergeometric(v.names(), upper, lower, v.q(1), arg);
    if (!r) {
        throw std::logic_error("expected a terminating sum");
    }
    return *r;
}

// 3phi2[q^-n,b,c; d,e; q,q] = (de/bc;q)_n/(e;q)_n (bc/d)^n 3phi2[q^-n,d/b,d/c; d,de/bc; q,q]
void lemma_a(const Orders &, ReportBuilder &rb)
{
    const auto &v = vq();
    const Mono q = v.q(1);
    int spec = 0;
    for (const auto &[b, c, d, e] : lemma_params(false)) {
        for (int n = 0; n <= 6; ++n) {
            const Mono top = v.q(-n);
            const Mono de_bc = d * e / (b * c);
            const RationalFunction lhs = phi32({top, b, c}, {d, e}, q);
            const RationalFunction pre = RationalFunction(v.poch(de_bc, n) * v.p((b * c / d).pow(n)), v.poch(e, n));
            const RationalFunction rhs = pre * phi32({top, d / b, d / c}, {d, de_bc}, q);
            rb.compare(at("specialization,n", spec, n), lhs, rhs);
        }
        ++spec;
    }
}

// 3phi2[q^-n,b,c; d,e; q, deq^n/bc] = (e/c;q)_n/(e;q)_n 3phi2[q^-n,c,d/b; d,cq^{1-n}/e; q,q]
void lemma_b(const Orders &, ReportBuilder &rb)
{
    const auto &v = vq();
    const Mono q = v.q(1);
    int spec = 0;
    for (const auto &[b, c, d, e] : lemma_params(true)) {
        for (int n = 0; n <= 6; ++n) {
            const Mono top = v.q(-n);
            const RationalFunction lhs = phi32({top, b, c}, {d, e}, d * e * v.q(n) / (b * c));
            const RationalFunction pre = RationalFunction(v.poch(e / c, n), v.poch(e, n));
            const RationalFunction rhs = pre * phi32({top, c, d / b}, {d, c * v.q(1 - n) / e}, q);
            rb.compare(at("specialization,n", spec, n), lhs, rhs);
        }
        ++spec;
    }
}

} // namespace

void add_finite_cases(std::vector<IdentityCase> &out)
{
    const auto T = Mode::truncated;
    const auto E = Mode::exact;
    out.push_back({"KEY-99", E, false, "q",
                   "sum_k (q;q)_{m+k} q^k/(q^2;q^2)_k = (q^2;q^2)_m for m <= 15, and U_m(q) = (-q;q)_m", key99});
    out.push_back({"KEY-00", E, false, "q",
                   "sum_k (q;q)_{m+k} q^{2k}/(q^2;q^2)_k = (q;q^2)_{m+1} + q^{m+1}(q^2;q^2)_m for m <= 15", key00});
    out.push_back({"EQ-KNOWN", E, false, "q",
                   "sum_k [2n+1,2k] (q;q^2)_k (-1)^k q^{k^2-k} = q^{2n^2+n} for n <= 15", eq_known});
    out.push_back({"EQ-4.2", T, false, "q, z",
                   "q^{2n^2+2n+1}/(q;q^2)_{n+1} = [z^n] (sum_{k>=1} q^k z^{k-1}/(q;q^2)_k)(zq;q^2)_n for n <= 10",
                   eq42});
    out.push_back({"BD-PAIR", E, false, "q",
                   "sum_k [n,k] tau(n-k) Y(k) = X(n) and sum_k [n,k] X(k) = Y(n) for n <= 12, with Y(n) = "
                   "q^{n(n-1)/2} and X(2k) = (-1)^k q^{k^2-k}(q;q^2)_k, X odd = 0",
                   bd_pair});
    out.push_back({"MASTERID", T, false, "q, x, y",
                   "(yq^2/x;q)_m/(q^2/x;q)_m S_m(x,y) = 1 + (q+x)/(x-yq) sum_k [2k-1,k] A_k q^k - yq/(x-yq) sum_k "
                   "[2k,k] A_k q^{2k}, A_k = (y,yq/x;q)_k/(x,q^2/x;q)_k, m <= 10, denominators cleared",
                   masterid});
    out.push_back({"COR-SPECIAL-2", T, false, "q, y",
                   "(-yq;q)_m/(-q;q)_m sum_k (q^{m+1},y;q)_k q^k/(q^2;q^2)_k = 1 + y/(1+y) sum_k [2k,k] "
                   "(y^2;q^2)_k/(-q;q)_k^2 q^{2k} for m <= 10",
                   special2});
    out.push_back({"COR-ZERO", E, false, "q, x",
                   "1/(q^2/x;q)_m sum_k [m+k,k] q^k/(x;q)_k = 1 + (1+q/x) sum_k [2k-1,k] q^k/(x,q^2/x;q)_k for "
                   "m <= 10, denominators cleared",
                   zero});
    out.push_back({"COR-3.6", E, false, "q, x (Laurent)",
                   "(x;q)_{m+1} sum_k [m+k,k] q^k/(xq;q)_k + (1/x;q)_{m+1} sum_k [m+k,k] q^k/(q/x;q)_k = "
                   "(x,1/x;q)_{m+1} for m <= 12",
                   cor36});
    out.push_back({"CHU-VAN", E, false, "q",
                   "sum_k [m+k,m][m-k,r] q^{(r+1)k} = [2m+1,m+r+1] for r <= m <= 8, and r = 0 for m <= 12",
                   chu_vandermonde});
    out.push_back({"TRIPLE", T, false, "q, x (Laurent)",
                   "(x,q/x,q;q)_inf = sum_n (-1)^n q^{n(n-1)/2} x^n, window at least the largest n with "
                   "n(n-1)/2 <= q-order",
                   triple});
    out.push_back({"COR-3.600", E, false, "q, x",
                   "(x;q)_{m+1} sum_k [m+k,k] q^k/(xq;q)_k = [2m+1,m] + 1/(1+q^{m+1}) sum_{k>=1} tau(k)(1+q^k)"
                   "[2m+2,m+1-k] x^k for m <= 12, with the unsimplified form",
                   cor3600});
    out.push_back({"XX-EXPANSION", E, false, "q, x (Laurent)",
                   "(1+q^n)(x,1/x;q)_n = sum_{|k|<=n} tau(k)(1+q^k)[2n,n-k] x^k for n <= 10", xx_expansion});
    out.push_back({"LEM21-A", E, false, "q",
                   "3phi2[q^-n,b,c; d,e; q,q] = (de/bc;q)_n/(e;q)_n (bc/d)^n 3phi2[q^-n,d/b,d/c; d,de/bc; q,q], "
                   "n <= 6, three monomial specializations of (b,c,d,e)",
                   lemma_a});
    out.push_back({"LEM21-B", E, false, "q",
                   "3phi2[q^-n,b,c; d,e; q,deq^n/bc] = (e/c;q)_n/(e;q)_n 3phi2[q^-n,c,d/b; d,cq^{1-n}/e; q,q], "
                   "n <= 6, three monomial specializations of (b,c,d,e)",
                   lemma_b});
}

} // namespace qseries::detail
