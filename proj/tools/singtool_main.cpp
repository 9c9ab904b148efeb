#include <chrono>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "sing/batch.hpp"
#include "sing/errors.hpp"
#include "sing/parser.hpp"
#include "sing/report.hpp"

namespace {

std::vector<std::string> split_vars(const std::string& csv) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        std::string v = csv.substr(pos, comma == std::string::npos ? csv.size() - pos
                                                                   : comma - pos);
        if (!v.empty()) out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"singtool: invariants of isolated hypersurface singularities at the origin"};
    app.require_subcommand(1);

    auto* analyze_cmd = app.add_subcommand("analyze", "analyze one polynomial");
    std::string poly_text, vars_csv = "x,y", checks_csv = "all", format = "json";
    bool timings = false;
    analyze_cmd->add_option("--poly", poly_text, "polynomial text")->required();
    analyze_cmd->add_option("--vars", vars_csv, "comma-separated variable names");
    analyze_cmd->add_option("--checks", checks_csv, "all or a csv subset of "
                            "mu,tau,quasihomogeneity,ebs,beta,delta,hilbert,derlog,identities");
    analyze_cmd->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    analyze_cmd->add_flag("--timings", timings,
                          "include wall-clock timings (breaks byte determinism)");

    auto* batch_cmd = app.add_subcommand("batch", "run a family spec file");
    std::string family_path, out_path, batch_checks = "all";
    unsigned jobs = 1;
    batch_cmd->add_option("--family", family_path, "family spec file")->required();
    batch_cmd->add_option("--out", out_path, "output record file (appended)")->required();
    batch_cmd->add_option("--jobs", jobs, "parallel instances");
    batch_cmd->add_option("--checks", batch_checks, "checks per instance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze_cmd) {
            std::vector<std::string> vars = split_vars(vars_csv);
            if (vars.empty()) throw std::invalid_argument("empty variable list");
            sing::CheckSet checks = sing::CheckSet::parse(checks_csv);
            auto t0 = std::chrono::steady_clock::now();
            sing::Polynomial f = sing::parse_polynomial(poly_text, vars);
            sing::SingularityReport rep = sing::analyze(f, vars, checks);
            auto t1 = std::chrono::steady_clock::now();
            nlohmann::ordered_json j = sing::report_to_json(rep, checks);
            if (timings) {
                j["timings_ms"] = {
                    {"total",
                     std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()}};
            }
            if (format == "json")
                std::cout << j.dump() << "\n";
            else
                std::cout << sing::report_to_text(rep, checks);
            return (rep.error && *rep.error == "NotIsolated") ? 2 : 0;
        }
        if (*batch_cmd) {
            sing::CheckSet checks = sing::CheckSet::parse(batch_checks);
            if (jobs == 0) jobs = std::thread::hardware_concurrency();
            sing::BatchSummary s = sing::run_batch(family_path, out_path, jobs, checks);
            nlohmann::ordered_json j;
            j["total"] = s.total;
            j["analyzed"] = s.analyzed;
            j["skipped_existing"] = s.skipped_existing;
            j["quasihomogeneous"] = s.quasihomogeneous;
            j["not_isolated"] = s.not_isolated;
            j["conjecture_violations"] = s.conjecture_violations;
            j["bound_failures"] = s.bound_failures;
            j["errors"] = s.errors;
            std::cout << j.dump() << "\n";
            return 0;
        }
    } catch (const sing::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
