#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <qseries/identities.hpp>

namespace qseries::cli
{
namespace
{

struct RunConfig {
    std::vector<std::string> ids;
    bool all = false;
    Orders orders;
    int jobs = 0;
    std::string format = "text";
};

bool is_known(const std::string &id)
{
    if (find_case(id) != nullptr) {
        return true;
    }
    const auto &neg = negative_controls();
    if (std::any_of(neg.begin(), neg.end(), [&](const auto &c) { return c.id == id; })) {
        return true;
    }
    const auto &suites = suite_ids();
    return std::find(suites.begin(), suites.end(), id) != suites.end();
}

void print_list(std::ostream &out, const std::string &format)
{
    for (const auto &c : registry()) {
        if (format == "structured") {
            nlohmann::json j{{"id", c.id},
                             {"mode", to_string(c.mode)},
                             {"rescale", c.rescale},
                             {"variables", c.variables},
                             {"description", c.description}};
            out << j.dump() << '\n';
        } else {
            out << std::left << std::setw(15) << c.id << std::setw(10) << to_string(c.mode)
                << (c.rescale ? "rescaled  " : "          ") << c.description << '\n';
        }
    }
}

std::vector<VerificationReport> run_all(const RunConfig &cfg, const std::vector<std::string> &ids, std::ostream &out)
{
    std::vector<VerificationReport> reports(ids.size());
    std::atomic<std::size_t> next{0};
    std::mutex out_mutex;
    const auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= ids.size()) {
                return;
            }
            VerificationReport r = verify_identity(ids[i], cfg.orders);
            {
                const std::lock_guard<std::mutex> lock(out_mutex);
                out << (cfg.format == "structured" ? to_json(r).dump() : to_text(r)) << '\n' << std::flush;
            }
            reports[i] = std::move(r);
        }
    };
    const int n = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(ids.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    return reports;
}

void print_summary(std::ostream &out, std::vector<VerificationReport> reports, const std::string &format)
{
    std::sort(reports.begin(), reports.end(), [](const auto &a, const auto &b) { return a.id < b.id; });
    int passed = 0;
    double millis = 0;
    for (const auto &r : reports) {
        passed += r.status == Status::pass ? 1 : 0;
        millis += r.millis;
    }
    if (format == "structured") {
        nlohmann::json list = nlohmann::json::array();
        for (const auto &r : reports) {
            list.push_back({{"id", r.id}, {"status", to_string(r.status)}});
        }
        out << nlohmann::json{{"summary", list}, {"passed", passed}, {"total", reports.size()}}.dump() << '\n';
        return;
    }
    out << "summary: " << passed << "/" << reports.size() << " passed, " << std::fixed << std::setprecision(1)
        << millis << " ms total\n";
    for (const auto &r : reports) {
        out << "  " << std::left << std::setw(15) << r.id << to_string(r.status) << '\n';
    }
}

} // namespace

nlohmann::json to_json(const VerificationReport &r)
{
    nlohmann::json j{{"id", r.id},
                     {"status", to_string(r.status)},
                     {"orders", {{"base", r.orders.base}, {"aux", r.orders.aux}, {"window", r.orders.window}}},
                     {"millis", r.millis}};
    if (r.first_discrepancy) {
        const auto &d = *r.first_discrepancy;
        j["first_discrepancy"] = {
            {"label", d.label}, {"monomial", d.monomial()}, {"lhs", d.lhs.str()}, {"rhs", d.rhs.str()}};
    }
    if (!r.message.empty()) {
        j["message"] = r.message;
    }
    return j;
}

std::string to_text(const VerificationReport &r)
{
    std::ostringstream os;
    std::string status = to_string(r.status);
    std::transform(status.begin(), status.end(), status.begin(), [](unsigned char ch) { return std::toupper(ch); });
    os << std::left << std::setw(6) << status << std::setw(15) << r.id << std::right << std::fixed
       << std::setprecision(1) << std::setw(10) << r.millis << " ms";
    if (r.first_discrepancy) {
        const auto &d = *r.first_discrepancy;
        os << "  " << d.label << " at " << d.monomial() << ": lhs " << d.lhs << ", rhs " << d.rhs;
    }
    if (!r.message.empty()) {
        os << "  " << r.message;
    }
    return os.str();
}

int default_jobs()
{
    if (const char *env = std::getenv("QSERIES_JOBS")) {
        try {
            const int j = std::stoi(env);
            if (j >= 1) {
                return j;
            }
        } catch (const std::exception &) {
        }
    }
    return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Verify q-series identities as formal power series."};
    app.require_subcommand(1);

    std::string list_format = "text";
    auto *list = app.add_subcommand("list", "List registered identities, sorted by id");
    list->add_option("--format", list_format, "Output format")->check(CLI::IsMember({"text", "structured"}));

    RunConfig cfg;
    auto *run_cmd = app.add_subcommand("run", "Verify selected identities");
    auto *all = run_cmd->add_flag("--all", cfg.all, "Every registered identity and every suite");
    auto *ids = run_cmd->add_option("--id", cfg.ids, "Identity or suite id (repeatable)");
    all->excludes(ids);
    run_cmd->add_option("--base-order", cfg.orders.base, "Truncation order of q")->check(CLI::PositiveNumber);
    run_cmd->add_option("--aux-order", cfg.orders.aux, "Truncation order of auxiliary variables")
        ->check(CLI::PositiveNumber);
    run_cmd->add_option("--laurent-window", cfg.orders.window, "Laurent window")->check(CLI::NonNegativeNumber);
    run_cmd->add_option("--jobs", cfg.jobs, "Worker threads (default: QSERIES_JOBS or core count)")
        ->check(CLI::PositiveNumber);
    run_cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "structured"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err);
    }

    try {
        if (list->parsed()) {
            print_list(out, list_format);
            return kOk;
        }
        std::vector<std::string> selected = cfg.ids;
        if (cfg.all) {
            for (const auto &c : registry()) {
                selected.push_back(c.id);
            }
            const auto &suites = suite_ids();
            selected.insert(selected.end(), suites.begin(), suites.end());
        }
        if (selected.empty()) {
            err << "run: nothing selected; pass --all or --id\n";
            return kUnknownId;
        }
        for (const auto &id : selected) {
            if (!is_known(id)) {
                err << "unknown id: " << id << '\n';
                return kUnknownId;
            }
        }
        if (cfg.jobs == 0) {
            cfg.jobs = default_jobs();
        }
        const auto reports = run_all(cfg, selected, out);
        print_summary(out, reports, cfg.format);
        const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto &r) { return r.status == Status::pass; });
        return ok ? kOk : kFailures;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

} // namespace qseries::cli
