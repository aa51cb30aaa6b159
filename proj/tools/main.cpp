// Command-line front end: compute N(W), search for the Ramsey number,
// cross-validate the engines, or evaluate the compatible-tuple bound.
//
// Exit codes: 0 success, 2 parse/usage error, 3 enumeration budget
// exceeded, 4 engine disagreement (validate).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ramsey/errors.hpp"
#include "ramsey/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitDisagree = 4;

struct RawArgs {
    std::optional<int> t;
    std::optional<int> r;
    std::optional<std::string> p_csv;
    std::optional<int> n;
    std::optional<std::string> engine;
    std::optional<int> k_cutoff;
    std::optional<std::uint64_t> budget;
    std::optional<int> workers;
    std::string format = "json";
    std::optional<std::string> file;
};

void add_common_options(CLI::App* cmd, RawArgs& args, bool with_engine) {
    cmd->add_option("--t", args.t, "number of boxes");
    cmd->add_option("--r", args.r, "subset size");
    cmd->add_option("--p", args.p_csv, "comma-separated box thresholds P_1<=...<=P_t");
    cmd->add_option("--n", args.n, "ambient set size");
    if (with_engine) cmd->add_option("--engine", args.engine, "brute | direct | spectrum");
    cmd->add_option("--k-cutoff", args.k_cutoff, "truncate the tuple-size sum at this k");
    cmd->add_option("--budget", args.budget, "max enumerated objects (default 2^24)");
    cmd->add_option("--workers", args.workers, "worker threads (default 1)");
    cmd->add_option("--format", args.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--file", args.file, "problem file with key = value lines");
}

std::optional<std::uint64_t> env_u64(const char* name) {
    const char* value = std::getenv(name);
    if (!value || !*value) return std::nullopt;
    try {
        size_t pos = 0;
        unsigned long long parsed = std::stoull(value, &pos);
        if (pos != std::string(value).size()) throw std::invalid_argument("trailing junk");
        return parsed;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad integer in $") + name + ": '" + value + "'");
    }
}

struct Resolved {
    ramsey::ProblemSpec spec;
    std::optional<int> n;
    std::optional<ramsey::EngineId> engine;
    ramsey::EngineOptions opt;
    ramsey::ReportFormat format = ramsey::ReportFormat::json;
};

Resolved resolve(const RawArgs& args) {
    ramsey::ProblemFileConfig file_cfg;
    if (args.file) {
        std::ifstream in(*args.file);
        if (!in) throw std::invalid_argument("cannot open problem file '" + *args.file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        file_cfg = ramsey::parse_problem_file(buf.str());
    }

    Resolved out;
    std::optional<int> t = args.t ? args.t : file_cfg.t;
    std::optional<int> r = args.r ? args.r : file_cfg.r;
    std::optional<std::vector<int>> p =
        args.p_csv ? std::optional(ramsey::parse_int_list(*args.p_csv)) : file_cfg.p;
    if (!t || !r || !p) throw std::invalid_argument("t, r and p are required (flags or --file)");
    out.spec = ramsey::ProblemSpec(*t, *r, *p);

    out.n = args.n ? args.n : file_cfg.n;

    std::optional<std::string> engine = args.engine ? args.engine : file_cfg.engine;
    if (engine) {
        out.engine = ramsey::engine_from_name(*engine);
        if (!out.engine) throw std::invalid_argument("unknown engine '" + *engine + "'");
    }

    // Flags beat the environment, the environment beats the file.
    std::optional<std::uint64_t> budget = args.budget;
    if (!budget) budget = env_u64("RAMSEY_BUDGET");
    if (!budget) budget = file_cfg.budget;
    if (budget) out.opt.budget = *budget;

    std::optional<int> workers = args.workers;
    if (!workers) {
        if (auto w = env_u64("RAMSEY_WORKERS")) workers = static_cast<int>(*w);
    }
    if (!workers) workers = file_cfg.workers;
    if (workers) out.opt.workers = *workers;

    std::optional<int> k_cutoff = args.k_cutoff ? args.k_cutoff : file_cfg.k_cutoff;
    if (k_cutoff) out.opt.k_cutoff = *k_cutoff;

    out.format = args.format == "csv" ? ramsey::ReportFormat::csv : ramsey::ReportFormat::json;
    return out;
}

int require_n(const Resolved& r) {
    if (!r.n) throw std::invalid_argument("--n is required");
    return *r.n;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact monochromatic-subset distribution counts and Ramsey search"};
    app.require_subcommand(1);

    RawArgs compute_args, search_args, validate_args, kmax_args;
    std::optional<int> n_max;
    bool realized = false;

    CLI::App* compute = app.add_subcommand("compute", "count N(W) with one engine");
    add_common_options(compute, compute_args, true);

    CLI::App* search = app.add_subcommand("search", "scan n upward for the Ramsey number");
    add_common_options(search, search_args, true);
    search->add_option("--n-max", n_max, "largest n to scan")->required();

    CLI::App* validate = app.add_subcommand("validate", "run all engines and compare");
    add_common_options(validate, validate_args, false);

    CLI::App* kmax = app.add_subcommand("kmax", "compatible-tuple size bound");
    add_common_options(kmax, kmax_args, false);
    kmax->add_flag("--realized", realized, "also enumerate the realized maximum");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    }

    try {
        if (compute->parsed()) {
            Resolved r = resolve(compute_args);
            ramsey::EngineId engine = r.engine.value_or(ramsey::EngineId::direct);
            auto report = ramsey::engine_report(engine, r.spec, require_n(r), r.opt);
            std::cout << ramsey::render_report(ramsey::report_compute(r.spec, report, r.opt),
                                               r.format);
            return kExitOk;
        }
        if (search->parsed()) {
            Resolved r = resolve(search_args);
            ramsey::EngineId engine = r.engine.value_or(ramsey::EngineId::brute);
            auto result = ramsey::ramsey_number(r.spec, *n_max, engine, r.opt);
            std::cout << ramsey::render_report(
                ramsey::report_search(r.spec, result, engine, *n_max, r.opt), r.format);
            if (!result.ramsey_n)
                std::cerr << "no Ramsey witness found for n <= " << *n_max << "\n";
            return kExitOk;
        }
        if (validate->parsed()) {
            Resolved r = resolve(validate_args);
            auto result = ramsey::cross_validate(r.spec, require_n(r), r.opt);
            std::cout << ramsey::render_report(ramsey::report_validate(r.spec, result, r.opt),
                                               r.format);
            if (!result.agree) {
                std::cerr << "engines disagree\n";
                return kExitDisagree;
            }
            return kExitOk;
        }
        if (kmax->parsed()) {
            Resolved r = resolve(kmax_args);
            int n = require_n(r);
            auto bound = ramsey::kmax_upper_bound(r.spec, n);
            std::optional<int> realized_k;
            if (realized) realized_k = ramsey::direct_ie_report(r.spec, n, r.opt).max_k;
            std::cout << ramsey::render_report(ramsey::report_kmax(r.spec, n, bound, realized_k),
                                               r.format);
            return kExitOk;
        }
    } catch (const ramsey::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitParse;
}
