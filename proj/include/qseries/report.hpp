#ifndef QSERIES_REPORT_HPP
#define QSERIES_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <qseries/exact_poly.hpp>
#include <qseries/series.hpp>

namespace qseries
{

enum class Status { pass, fail, error };

[[nodiscard]] const char *to_string(Status s);

// Orders a verification ran at: base order, auxiliary order, Laurent window.
struct Orders {
    int base = 40;
    int aux = 12;
    int window = 16;

    friend bool operator==(const Orders &, const Orders &) = default;
};

struct LocatedDiscrepancy {
    std::string label;              // which comparison inside the case
    std::vector<std::string> vars;  // variable names for exps
    Exponents exps{};
    Rational lhs;
    Rational rhs;

    [[nodiscard]] std::string monomial() const;
};

struct VerificationReport {
    std::string id;
    Status status = Status::pass;
    Orders orders;
    std::optional<LocatedDiscrepancy> first_discrepancy;
    double millis = 0.0;
    std::string message;
    int comparisons = 0;
};

// Collects the outcome of a sequence of comparisons. The first failing
// comparison (in check order) is kept; within it the graded-lex least
// monomial is reported. A comparison whose operands lost information to a
// Laurent window turns the whole report into an error.
class ReportBuilder
{
public:
    explicit ReportBuilder(std::string id, Orders orders = {});

    // Returns true when the comparison passed.
    bool compare(const std::string &label, const Series &lhs, const Series &rhs);
    bool compare(const std::string &label, const ExactPoly &lhs, const ExactPoly &rhs);
    bool compare(const std::string &label, const RationalFunction &lhs, const RationalFunction &rhs);
    void error(const std::string &message);

    [[nodiscard]] bool failed() const noexcept
    {
        return report_.status != Status::pass;
    }
    [[nodiscard]] VerificationReport finish(double millis) const;

private:
    VerificationReport report_;
};

} // namespace qseries

#endif
