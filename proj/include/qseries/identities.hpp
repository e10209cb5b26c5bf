#ifndef QSERIES_IDENTITIES_HPP
#define QSERIES_IDENTITIES_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <qseries/report.hpp>
#include <qseries/series.hpp>

namespace qseries
{

enum class Mode { exact, truncated };

[[nodiscard]] const char *to_string(Mode m);

// A registered identity. check() performs every comparison the case needs
// at the given orders; families indexed by n run each index up to the
// case's documented limit.
struct IdentityCase {
    std::string id;
    Mode mode = Mode::truncated;
    bool rescale = false; // q = u^2
    std::string variables;
    std::string description;
    std::function<void(const Orders &, ReportBuilder &)> check;
};

struct UnknownCase : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// All cases, sorted by id. Immutable after first use.
[[nodiscard]] const std::vector<IdentityCase> &registry();
[[nodiscard]] const IdentityCase *find_case(const std::string &id);

// Deliberately wrong variants used to show that mismatches are detected.
[[nodiscard]] const std::vector<IdentityCase> &negative_controls();

[[nodiscard]] VerificationReport run_case(const IdentityCase &c, const Orders &orders);
// Accepts registry ids, negative controls and suite ids; throws UnknownCase
// for anything else.
[[nodiscard]] VerificationReport verify_identity(const std::string &id,
                                                 const std::optional<Orders> &overrides = std::nullopt);

// ---- sequences -----------------------------------------------------------

// Named finite sums. Free variables are looked up by name in ctx:
//   U        U_m(x)     = sum_k [m+k, k] x^k / (-q;q)_k                 (q, x)
//   S_poly   (x;q)_m S_m(x,y), S_m = sum_k [m+k, k] (y;q)_k/(x;q)_k q^k  (q, x, y)
//   T_thm12  sum_k [m,k] y^k q^{k(k-1)/2} (q;q)_k/(yq^m;q)_{k+1}       (q, y)
//   T_thm12b sum_k (yq^m;q)_k q^k/(q^2;q^2)_k                            (q, y)
//   f        q^{m^2+m} (y^2;q^2)_m/(y;q)_{2m+1} C_m,  C_m = sum_k q^{2k}(y/q;q)_{2k}/(q^2,y^2;q^2)_k
//   g        y q^m (-y;q)_m/(yq^m;q)_{m+1} sum_k q^k (y/q;q)_{2k}/(q^2,y^2;q^2)_k
[[nodiscard]] Series eval_sequence(const std::string &name, int index, const ContextPtr &ctx);
[[nodiscard]] const std::vector<std::string> &sequence_names();

// q-difference equations, first-order relations and closed forms for the
// sequences above, for every m <= m_max.
[[nodiscard]] VerificationReport check_recurrences(int m_max, const ContextPtr &ctx);
[[nodiscard]] VerificationReport check_recurrences(int m_max);

// ---- WZ certificates -----------------------------------------------------

// "thm12-a":          S_m(k) = [m,k] y^k q^{k(k-1)/2} (q;q)_k/(yq^m;q)_{k+1}
// "thm12-b":          S_m(k) = (yq^m;q)_k q^k/(q^2;q^2)_k
// "sec3-three-term":  V_m(k) = [m+k,k] x^k/(-q;q)_k, second order in m
[[nodiscard]] const std::vector<std::string> &wz_certificate_names();
[[nodiscard]] VerificationReport verify_wz_certificate(const std::string &which, int m_max, const ContextPtr &ctx);
[[nodiscard]] VerificationReport verify_wz_certificate(const std::string &which, int m_max);

// ---- Lagrange inversion --------------------------------------------------

// a_n = [z^n] F(z) prod_{i=1}^n (1 - x_i z) for n <= n_max. F lives in a
// context with a variable named z; the results have z-degree zero.
// x_seq[i-1] holds x_i and must have at least n_max entries.
[[nodiscard]] std::vector<Series> lagrange_coefficients(const Series &f, const std::vector<Mono> &x_seq,
                                                      int n_max, const std::string &z = "z");

// F = sum_n a_n z^n / prod_{i=1}^{n+1} (1 - x_i z).
[[nodiscard]] Series lagrange_expand(const ContextPtr &ctx, const std::vector<Mono> &x_seq,
                                     const std::vector<Series> &a_seq, const std::string &z = "z");

// Expands a_seq into F, re-extracts the coefficients, and compares.
[[nodiscard]] VerificationReport lagrange_roundtrip(const std::vector<Mono> &x_seq,
                                                    const std::vector<Series> &a_seq, int n_max,
                                                    const ContextPtr &ctx);

// Seeded random roundtrips plus the coefficient-extraction form of the
// AY-1 identity.
[[nodiscard]] VerificationReport lagrange_suite(int instances = 20, unsigned seed = 20240517);

// ---- suites --------------------------------------------------------------

// Pseudo-ids accepted by the command line besides registry ids.
[[nodiscard]] const std::vector<std::string> &suite_ids();
[[nodiscard]] VerificationReport run_suite(const std::string &id, const Orders &orders);

} // namespace qseries

#endif
