#include <qseries/report.hpp>

namespace qseries
{

const char *to_string(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::error:
        return "error";
    }
    return "error";
}

std::string LocatedDiscrepancy::monomial() const
{
    return format_monomial(exps, vars);
}

ReportBuilder::ReportBuilder(std::string id, Orders orders)
{
    report_.id = std::move(id);
    report_.orders = orders;
}

bool ReportBuilder::compare(const std::string &label, const Series &lhs, const Series &rhs)
{
    ++report_.comparisons;
    if (lhs.inexact() || rhs.inexact()) {
        error(label + ": a Laurent window dropped terms that reach the truncation; enlarge the window");
        return false;
    }
    const auto d = first_discrepancy(lhs, rhs);
    if (!d) {
        return true;
    }
    if (report_.status == Status::pass) {
        report_.status = Status::fail;
        report_.first_discrepancy =
            LocatedDiscrepancy{label, lhs.context()->vars().names(), d->exps, d->lhs, d->rhs};
        report_.message = label + ": coefficients differ";
    }
    return false;
}

bool ReportBuilder::compare(const std::string &label, const ExactPoly &lhs, const ExactPoly &rhs)
{
    ++report_.comparisons;
    const auto d = first_discrepancy(lhs, rhs);
    if (!d) {
        return true;
    }
    if (report_.status == Status::pass) {
        report_.status = Status::fail;
        report_.first_discrepancy = LocatedDiscrepancy{label, lhs.names(), d->exps, d->lhs, d->rhs};
        report_.message = label + ": polynomials differ";
    }
    return false;
}

bool ReportBuilder::compare(const std::string &label, const RationalFunction &lhs, const RationalFunction &rhs)
{
    // Compared after clearing denominators.
    return compare(label, lhs.num() * rhs.den(), rhs.num() * lhs.den());
}

void ReportBuilder::error(const std::string &message)
{
    if (report_.status != Status::error) {
        report_.status = Status::error;
        report_.first_discrepancy.reset();
        report_.message = message;
    }
}

VerificationReport ReportBuilder::finish(double millis) const
{
    VerificationReport r = report_;
    r.millis = millis;
    return r;
}

} // namespace qseries
