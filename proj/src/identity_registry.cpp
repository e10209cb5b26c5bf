#include <algorithm>
#include <chrono>
#include <set>

#include <qseries/bailey.hpp>
#include <qseries/errors.hpp>
#include <qseries/identities.hpp>
#include <qseries/qfunctions.hpp>

#include "case_support.hpp"

namespace qseries
{

const char *to_string(Mode m)
{
    return m == Mode::exact ? "exact" : "truncated";
}

namespace
{

using detail::ideal_sum;
using detail::mono;

std::vector<IdentityCase> build_registry()
{
    std::vector<IdentityCase> cases;
    detail::add_theorem_cases(cases);
    detail::add_finite_cases(cases);
    detail::add_limit_cases(cases);
    std::sort(cases.begin(), cases.end(), [](const auto &a, const auto &b) { return a.id < b.id; });
    std::set<std::string> seen;
    for (const auto &c : cases) {
        if (!seen.insert(c.id).second) {
            throw std::logic_error("duplicate case id " + c.id);
        }
    }
    return cases;
}

// EQ-KNOWN with q^{k^2+k} in place of q^{k^2-k}.
void neg_exact(const Orders &, ReportBuilder &rb)
{
    const std::vector<std::string> names{"q"};
    const detail::PolyVars v(names);
    for (int n = 0; n <= 15; ++n) {
        ExactPoly s = v.c(0);
        for (int k = 0; k <= n; ++k) {
            s += v.qbin(2 * n + 1, 2 * k) * v.poch(v.q(1), v.q(2), k) * v.p(v.q(k * k + k, (k % 2 == 0) ? 1 : -1));
        }
        rb.compare(detail::at("n", n), s, v.p(v.q(2 * n * n + n)));
    }
}

// THM13-C with y^k q^{k(k+1)/2} on the left.
void neg_truncated(const Orders &o, ReportBuilder &rb)
{
    auto ctx = Context::make({{"q", o.base}, {"y", o.aux}});
    const Context &c = *ctx;
    const Mono y = c.var("y");
    const Series lhs = ideal_sum(
        ctx, [&](int k) { return y.pow(k) * c.q(k * (k + 1) / 2); },
        [&](int k) { return mono(ctx, y.pow(k) * c.q(k * (k + 1) / 2)); });
    Series rhs = clearing_sum(ctx, y, kInfinity, 2);
    rhs = mul_poch(mul_poch(rhs, c.q(2), c.q(2), kInfinity), -y, c.q(1), kInfinity);
    rb.compare("sum", lhs, rhs);
}

// pair_deduce222 with beta_2 raised by q, against the defining sum.
void neg_bailey(const Orders &o, ReportBuilder &rb)
{
    auto ctx = Context::make({{"q", o.base}, {"y", o.aux}});
    const Context &c = *ctx;
    const Mono q = c.q(1);
    const Mono y = c.var("y");
    const auto pair = perturb_beta(pair_deduce222(), 2, base_power(1));
    for (int n = 0; n <= 8; ++n) {
        Series sum(ctx);
        for (int r = 0; r <= n; ++r) {
            sum += div_poch(div_poch(pair.alpha(ctx, r), q, q, n - r), y * q, q, n + r);
        }
        rb.compare(detail::at("beta", n), pair.beta(ctx, n), sum);
    }
}

std::vector<IdentityCase> build_negatives()
{
    return {
        {"NEG-BAILEY", Mode::truncated, false, "q, y", "pair_deduce222 with beta_2 + q (must fail)", neg_bailey},
        {"NEG-EXACT", Mode::exact, false, "q", "EQ-KNOWN with q^{k^2+k} for q^{k^2-k} (must fail)", neg_exact},
        {"NEG-TRUNCATED", Mode::truncated, false, "q, y",
         "sum_k y^k q^{k(k+1)/2} against the THM13-C product (must fail)", neg_truncated},
    };
}

const IdentityCase *find_in(const std::vector<IdentityCase> &cases, const std::string &id)
{
    const auto it = std::find_if(cases.begin(), cases.end(), [&](const auto &c) { return c.id == id; });
    return it == cases.end() ? nullptr : &*it;
}

double elapsed_ms(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Folds part into total: the first non-pass status wins, counts add.
void absorb(VerificationReport &total, const VerificationReport &part)
{
    total.comparisons += part.comparisons;
    if (total.status == Status::pass && part.status != Status::pass) {
        total.status = part.status;
        total.first_discrepancy = part.first_discrepancy;
        if (total.first_discrepancy) {
            total.first_discrepancy->label = part.id + ": " + total.first_discrepancy->label;
        }
        total.message = part.id + (part.message.empty() ? "" : ": " + part.message);
    }
}

template <class F>
VerificationReport guarded(const std::string &id, const Orders &orders, F body)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    try {
        r = body();
    } catch (const std::exception &e) {
        r = VerificationReport{};
        r.status = Status::error;
        r.message = e.what();
    }
    r.id = id;
    r.orders = orders;
    r.millis = elapsed_ms(start);
    return r;
}

} // namespace

const std::vector<IdentityCase> &registry()
{
    static const std::vector<IdentityCase> cases = build_registry();
    return cases;
}

const std::vector<IdentityCase> &negative_controls()
{
    static const std::vector<IdentityCase> cases = build_negatives();
    return cases;
}

const IdentityCase *find_case(const std::string &id)
{
    return find_in(registry(), id);
}

VerificationReport run_case(const IdentityCase &c, const Orders &orders)
{
    const auto start = std::chrono::steady_clock::now();
    ReportBuilder rb(c.id, orders);
    try {
        c.check(orders, rb);
    } catch (const std::exception &e) {
        rb.error(e.what());
    }
    return rb.finish(elapsed_ms(start));
}

VerificationReport verify_identity(const std::string &id, const std::optional<Orders> &overrides)
{
    const Orders orders = overrides.value_or(Orders{});
    if (const auto *c = find_case(id)) {
        return run_case(*c, orders);
    }
    if (const auto *c = find_in(negative_controls(), id)) {
        return run_case(*c, orders);
    }
    const auto &suites = suite_ids();
    if (std::find(suites.begin(), suites.end(), id) != suites.end()) {
        return run_suite(id, orders);
    }
    throw UnknownCase("unknown identity id: " + id);
}

const std::vector<std::string> &suite_ids()
{
    static const std::vector<std::string> ids{"BAILEY-ALL", "LAGRANGE-ALL", "REC-ALL", "WZ-ALL"};
    return ids;
}

VerificationReport run_suite(const std::string &id, const Orders &orders)
{
    return guarded(id, orders, [&] {
        VerificationReport total;
        if (id == "WZ-ALL") {
            for (const auto &name : wz_certificate_names()) {
                absorb(total, verify_wz_certificate(name, 12));
            }
        } else if (id == "REC-ALL") {
            absorb(total, check_recurrences(12));
        } else if (id == "BAILEY-ALL") {
            auto ctx = Context::make({{"q", orders.base}, {"y", orders.aux}});
            absorb(total, verify_bailey_pair(unit_pair(), 12, ctx));
            absorb(total, verify_bailey_pair(pair_deduce222(), 12, ctx));
            absorb(total, verify_bailey_pair(pair_deduce222(base_power(1)), 12, Context::make({{"q", orders.base}})));
            for (const char *c : {"COR-NEW", "COR-NEW-1", "THM14"}) {
                absorb(total, run_case(*find_case(c), orders));
            }
        } else if (id == "LAGRANGE-ALL") {
            absorb(total, lagrange_suite());
        } else {
            throw UnknownCase("unknown suite id: " + id);
        }
        return total;
    });
}

} // namespace qseries
