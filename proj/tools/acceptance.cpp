// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <qseries/bailey.hpp>
#include <qseries/identities.hpp>
#include <qseries/qfunctions.hpp>

using namespace qseries;

namespace
{

// Pinned limits.
constexpr double kRuntimeLimitSeconds = 300.0;
constexpr int kMinCases = 30;
constexpr int kPropertyCases = 200;
constexpr int kWzMax = 12;
constexpr int kBaileyMax = 12;
constexpr int kAaaQOrder = 20;

struct Outcome {
    bool ok;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string describe(const VerificationReport &r)
{
    std::ostringstream os;
    os << r.id << " " << to_string(r.status);
    if (r.first_discrepancy) {
        os << " (" << r.first_discrepancy->label << " at " << r.first_discrepancy->monomial() << ")";
    }
    if (!r.message.empty()) {
        os << " " << r.message;
    }
    return os.str();
}

Outcome full_registry()
{
    const auto start = std::chrono::steady_clock::now();
    int passed = 0;
    std::string first_bad;
    for (const auto &c : registry()) {
        const auto r = run_case(c, Orders{});
        if (r.status == Status::pass) {
            ++passed;
        } else if (first_bad.empty()) {
            first_bad = describe(r);
        }
    }
    const double secs = seconds_since(start);
    const int total = static_cast<int>(registry().size());
    std::ostringstream os;
    os << passed << "/" << total << " cases at orders 40/12/16 in " << secs << " s (limit " << kRuntimeLimitSeconds
       << " s, at least " << kMinCases << " cases)";
    if (!first_bad.empty()) {
        os << "; " << first_bad;
    }
    return {passed == total && total >= kMinCases && secs < kRuntimeLimitSeconds, os.str()};
}

Outcome exact_suite()
{
    int passed = 0;
    std::string bad;
    const std::vector<std::string> ids{"EQ-KNOWN", "KEY-99", "KEY-00", "CHU-VAN", "BD-PAIR", "XX-EXPANSION"};
    for (const auto &id : ids) {
        const auto *c = find_case(id);
        const auto r = verify_identity(id);
        if (c->mode == Mode::exact && r.status == Status::pass) {
            ++passed;
        } else if (bad.empty()) {
            bad = describe(r);
        }
    }
    std::ostringstream os;
    os << passed << "/" << ids.size() << " exact polynomial cases, tolerance zero";
    if (!bad.empty()) {
        os << "; " << bad;
    }
    return {passed == static_cast<int>(ids.size()), os.str()};
}

Outcome from_report(const VerificationReport &r, const std::string &what)
{
    std::ostringstream os;
    os << what << ": " << r.comparisons << " comparisons";
    if (r.status != Status::pass) {
        os << "; " << describe(r);
    }
    return {r.status == Status::pass && r.comparisons > 0, os.str()};
}

Outcome wz_suite()
{
    VerificationReport total;
    total.id = "WZ";
    for (const auto &name : wz_certificate_names()) {
        const auto r = verify_wz_certificate(name, kWzMax);
        total.comparisons += r.comparisons;
        if (r.status != Status::pass && total.status == Status::pass) {
            total = r;
        }
    }
    return from_report(total, "3 certificates, pointwise and telescoped, with recurrences, m <= 12");
}

Outcome bailey_suite()
{
    auto ctx = Context::make({{"q", 40}, {"y", 12}});
    std::vector<VerificationReport> parts{verify_bailey_pair(pair_deduce222(), kBaileyMax, ctx),
                                          verify_identity("COR-NEW"), verify_identity("COR-NEW-1")};
    VerificationReport total;
    total.id = "BAILEY";
    for (const auto &r : parts) {
        total.comparisons += r.comparisons;
        if (r.status != Status::pass && total.status == Status::pass) {
            total = r;
        }
    }
    return from_report(total, "pair_deduce222 for n <= 12, lemma at y = q and at both limits");
}

Outcome lagrange()
{
    return from_report(lagrange_suite(20, 20240517), "20 seeded roundtrips (n <= 5) and the AY-1 basis form (n <= 6)");
}

Outcome specialisation()
{
    const auto thm13d = verify_identity("THM13-D");
    // q = u^2, so u-order 2*20 is q-order 20
    const int u_order = 2 * kAaaQOrder;
    const int span = u_order + 4;
    auto ctx = Context::make(
        {{"u", u_order, false, 0, 1}, {"a", span, true, span, -1}, {"b", span, true, span, -1}}, u_order, 2);
    const auto sums = bilateral_sum_aaa(ctx, "a", "b");
    const bool folded_ok = sums.direct == sums.folded && !sums.direct.is_zero();
    std::ostringstream os;
    os << "THM13-C at y = q^{2r+1}, r <= 2: " << describe(thm13d) << "; COR-AAA folded vs direct at q-order "
       << kAaaQOrder << ": " << (folded_ok ? "equal" : "differ") << " (" << sums.direct.size() << " terms)";
    return {thm13d.status == Status::pass && folded_ok, os.str()};
}

Outcome negatives()
{
    int located = 0;
    std::ostringstream os;
    const char *sep = "";
    for (const auto &c : negative_controls()) {
        const auto r = verify_identity(c.id);
        if (r.status == Status::fail && r.first_discrepancy) {
            ++located;
        }
        os << sep << describe(r);
        sep = "; ";
    }
    return {located == 3 && negative_controls().size() == 3, os.str()};
}

// Random series with small rational coefficients.
Series random_series(std::mt19937 &rng, const ContextPtr &ctx, int terms, bool unit)
{
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    SeriesBuilder b(ctx);
    for (int i = 0; i < terms; ++i) {
        Exponents e{};
        for (std::size_t v = 0; v < ctx->arity(); ++v) {
            std::uniform_int_distribution<int> ex(0, ctx->order(v));
            e[v] = ex(rng);
        }
        b.add(e, Rational(coeff(rng), den(rng)));
    }
    Series s = b.build();
    if (unit) {
        s = s - Series::constant(ctx, s.constant_term()) + Series::constant(ctx, Rational(den(rng), 1));
    }
    return s;
}

Outcome properties()
{
    std::mt19937 rng(20240611);
    auto ctx = Context::make({{"q", 8}, {"y", 3}, {"z", 3}});
    auto dst = Context::make({{"u", 16}, {"y", 3}, {"z", 3}}, 0, 2);
    const Series one = Series::constant(ctx, 1);
    const std::vector<std::pair<std::string, Mono>> rescale{{"q", dst->var("u", 2)}};
    const Mono qz = ctx->mono(2, {{"q", 1}, {"z", 1}});
    int ring = 0;
    int inv = 0;
    int hom = 0;
    for (int t = 0; t < kPropertyCases; ++t) {
        const auto a = random_series(rng, ctx, 6, false);
        const auto b = random_series(rng, ctx, 6, false);
        const auto c = random_series(rng, ctx, 6, false);
        ring += (a * b == b * a && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && (a + b) - b == a)
                    ? 1
                    : 0;
        const auto f = random_series(rng, ctx, 5, true);
        inv += f * invert(f) == one ? 1 : 0;
        hom += (substitute(a * b, rescale, dst) == substitute(a, rescale, dst) * substitute(b, rescale, dst) &&
                substitute(a * b, "z", qz) == substitute(a, "z", qz) * substitute(b, "z", qz))
                   ? 1
                   : 0;
    }
    std::ostringstream os;
    os << "ring laws " << ring << "/" << kPropertyCases << ", inversion " << inv << "/" << kPropertyCases
       << ", substitution " << hom << "/" << kPropertyCases;
    return {ring == kPropertyCases && inv == kPropertyCases && hom == kPropertyCases, os.str()};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"full registry", full_registry},  {"exact suite", exact_suite},       {"WZ suite", wz_suite},
        {"Bailey suite", bailey_suite},    {"Lagrange suite", lagrange},       {"specialisation", specialisation},
        {"negative controls", negatives},  {"series algebra", properties},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.ok ? 0 : 1;
        std::printf("%s %zu %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    }
    std::fflush(stdout);
    return failures == 0 ? 0 : 1;
}
