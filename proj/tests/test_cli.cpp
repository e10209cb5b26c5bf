#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <cli.hpp>
#include <qseries/identities.hpp>

using namespace qseries;

namespace
{

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "qseries-cli");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &s)
{
    std::vector<std::string> v;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);) {
        if (!line.empty()) {
            v.push_back(line);
        }
    }
    return v;
}

} // namespace

TEST_CASE("list: every case, sorted, with mode and rescale flag")
{
    const auto r = invoke({"list", "--format", "structured"});
    REQUIRE(r.code == cli::kOk);
    const auto rows = lines(r.out);
    CHECK(rows.size() == registry().size());
    CHECK(rows.size() >= 30);
    std::string prev;
    bool saw_known = false;
    bool saw_thm14 = false;
    for (const auto &row : rows) {
        const auto j = nlohmann::json::parse(row);
        const auto id = j.at("id").get<std::string>();
        CHECK(prev < id);
        prev = id;
        CHECK_FALSE(j.at("description").get<std::string>().empty());
        if (id == "EQ-KNOWN") {
            saw_known = true;
            CHECK(j.at("mode") == "exact");
        }
        if (id == "THM14") {
            saw_thm14 = true;
            CHECK(j.at("rescale") == true);
        }
    }
    CHECK(saw_known);
    CHECK(saw_thm14);

    const auto text = invoke({"list"});
    CHECK(text.code == cli::kOk);
    CHECK(lines(text.out).size() == registry().size());
}

TEST_CASE("run: unknown id exits 2 with a message")
{
    const auto r = invoke({"run", "--id", "NO-SUCH"});
    CHECK(r.code == cli::kUnknownId);
    CHECK(r.err.find("NO-SUCH") != std::string::npos);
    CHECK(r.out.empty());
    CHECK(invoke({"run"}).code == cli::kUnknownId);
}

TEST_CASE("run: AY-2 at small orders gives one passing record")
{
    const auto r = invoke(
        {"run", "--id", "AY-2", "--base-order", "10", "--aux-order", "4", "--format", "structured", "--jobs", "1"});
    CHECK(r.code == cli::kOk);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    const auto rec = nlohmann::json::parse(rows[0]);
    CHECK(rec.at("id") == "AY-2");
    CHECK(rec.at("status") == "pass");
    CHECK(rec.at("orders").at("base") == 10);
    CHECK(rec.at("orders").at("aux") == 4);
    CHECK(rec.at("orders").at("window") == 16);
    CHECK(rec.at("millis").is_number());
    CHECK_FALSE(rec.contains("first_discrepancy"));
    const auto summary = nlohmann::json::parse(rows[1]);
    CHECK(summary.at("passed") == 1);
    CHECK(summary.at("total") == 1);
}

TEST_CASE("run: a failing selection exits 1 and reports the discrepancy")
{
    const auto r = invoke({"run", "--id", "NEG-EXACT", "--id", "EQ-KNOWN", "--format", "structured", "--jobs", "2"});
    CHECK(r.code == cli::kFailures);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 3);
    bool saw_fail = false;
    for (std::size_t i = 0; i < 2; ++i) {
        const auto rec = nlohmann::json::parse(rows[i]);
        if (rec.at("id") == "NEG-EXACT") {
            saw_fail = true;
            CHECK(rec.at("status") == "fail");
            const auto &d = rec.at("first_discrepancy");
            CHECK(d.at("monomial").is_string());
            CHECK(d.at("lhs") != d.at("rhs"));
        } else {
            CHECK(rec.at("status") == "pass");
        }
    }
    CHECK(saw_fail);
    const auto summary = nlohmann::json::parse(rows[2]);
    CHECK(summary.at("summary")[0].at("id") == "EQ-KNOWN");
    CHECK(summary.at("summary")[1].at("id") == "NEG-EXACT");
}

TEST_CASE("run: suites by pseudo-id, text output")
{
    const auto r = invoke({"run", "--id", "LAGRANGE-ALL", "--id", "KEY-99"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("summary: 2/2 passed") != std::string::npos);
}

TEST_CASE("run: option validation")
{
    CHECK(invoke({"run", "--id", "AY-1", "--base-order", "0"}).code != cli::kOk);
    CHECK(invoke({"run", "--id", "AY-1", "--format", "xml"}).code != cli::kOk);
    CHECK(invoke({"run", "--all", "--id", "AY-1"}).code != cli::kOk);
    CHECK(invoke({}).code != cli::kOk);
}

TEST_CASE("default_jobs honours QSERIES_JOBS")
{
    ::setenv("QSERIES_JOBS", "3", 1);
    CHECK(cli::default_jobs() == 3);
    ::setenv("QSERIES_JOBS", "zero", 1);
    CHECK(cli::default_jobs() >= 1);
    ::unsetenv("QSERIES_JOBS");
    CHECK(cli::default_jobs() >= 1);
}
