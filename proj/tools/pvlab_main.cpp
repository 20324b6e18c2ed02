#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pvlab/cli.hpp"

namespace {

using pvlab::RunConfig;

void add_output_flags(CLI::App* cmd, RunConfig& cfg, bool* json_flag, bool* csv_flag,
                      std::string* out_path) {
    cmd->add_flag("--json", *json_flag, "emit the JSON report");
    cmd->add_flag("--csv", *csv_flag, "emit CSV (count only; JSON elsewhere)");
    cmd->add_option("--out", *out_path, "write the report to a file instead of stdout");
    cmd->add_option("--seed", cfg.seed, "random seed (default 0, runs are reproducible)");
    cmd->add_option("--threads", cfg.threads, "worker count for the counting fold");
}

std::string rational_help = "rational as NUM/DEN or an integer";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pvlab: exact verification workbench for translation-invariant "
                 "moment systems and their decoupling bookkeeping"};
    app.set_version_flag("--version", pvlab::kToolVersion);
    app.require_subcommand(1);

    RunConfig cfg;
    bool json_flag = false, csv_flag = false;
    std::string out_path;
    std::string p_text;

    if (const char* env = std::getenv("PVLAB_THREADS")) cfg.threads = std::max(1, std::atoi(env));

    auto* exponents = app.add_subcommand("exponents", "index and exponent table for one (d, k, p)");
    exponents->add_option("--d", cfg.d, "dimension")->required();
    exponents->add_option("--k", cfg.k, "degree")->required();
    exponents->add_option("--p", p_text, rational_help);
    add_output_flags(exponents, cfg, &json_flag, &csv_flag, &out_path);

    auto* iterate = app.add_subcommand("iterate", "build and solve the iteration systems at (d, k, p)");
    iterate->add_option("--d", cfg.d, "dimension")->required();
    iterate->add_option("--k", cfg.k, "degree")->required();
    iterate->add_option("--p", p_text, rational_help)->required();
    add_output_flags(iterate, cfg, &json_flag, &csv_flag, &out_path);

    auto* verify = app.add_subcommand("verify", "run an identity sweep");
    verify->add_option("--suite", cfg.suite, "identities | exponents")->required();
    verify->add_option("--dmax", cfg.dmax, "max dimension");
    verify->add_option("--kmax", cfg.kmax, "max degree");
    verify->add_option("--pgrid", cfg.pgrid, "points per admissible p range");
    add_output_flags(verify, cfg, &json_flag, &csv_flag, &out_path);

    auto* comb = app.add_subcommand("comb", "combinatorial suites");
    comb->add_option("--suite", cfg.suite, "extension | frac | deficiency | multiplicity")->required();
    comb->add_option("--d", cfg.d, "dimension");
    comb->add_option("--l", cfg.l, "lower level");
    comb->add_option("--k", cfg.k, "upper level");
    comb->add_option("--grid", cfg.grid, "grid size for multiplicity runs");
    comb->add_option("--budget", cfg.budget, "max enumeration size before a check is guarded");
    add_output_flags(comb, cfg, &json_flag, &csv_flag, &out_path);

    auto* blcheck = app.add_subcommand("blcheck", "rank-condition certificates");
    blcheck->add_option("--d", cfg.d, "dimension")->required();
    blcheck->add_option("--k", cfg.k, "degree")->required();
    blcheck->add_option("--l", cfg.l, "jet order")->required();
    blcheck->add_option("--random", cfg.random_cases, "number of random subspaces to certify");
    blcheck->add_flag("--monomial-sweep", cfg.monomial_sweep, "exhaustive coordinate-subspace sweep");
    blcheck->add_option("--trials", cfg.trials, "point budget per certificate");
    blcheck->add_option("--budget", cfg.budget, "max enumeration size before a check is guarded");
    add_output_flags(blcheck, cfg, &json_flag, &csv_flag, &out_path);

    auto* count = app.add_subcommand("count", "exact solution counts J at dyadic N");
    count->add_option("--s", cfg.s, "summands per side")->required();
    count->add_option("--d", cfg.d, "dimension")->required();
    count->add_option("--k", cfg.k, "degree")->required();
    count->add_option("--n", cfg.n, "largest N (counts run over N = 2, 4, ..., n)")->required();
    count->add_option("--budget", cfg.budget, "table-size guard");
    add_output_flags(count, cfg, &json_flag, &csv_flag, &out_path);

    auto* all = app.add_subcommand("all", "every suite within guards");
    all->add_option("--dmax", cfg.dmax, "max dimension");
    all->add_option("--kmax", cfg.kmax, "max degree");
    all->add_option("--budget", cfg.budget, "max enumeration size before a check is guarded");
    add_output_flags(all, cfg, &json_flag, &csv_flag, &out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (json_flag) cfg.format = RunConfig::Format::json;
    if (csv_flag) cfg.format = RunConfig::Format::csv;
    cfg.out_path = out_path;

    try {
        if (!p_text.empty()) cfg.p = pvlab::Rat::parse(p_text);
        const auto result = pvlab::dispatch(cfg);
        if (cfg.out_path.empty()) {
            std::cout << result.rendered;
        } else {
            std::ofstream out(cfg.out_path);
            if (!out) {
                std::cerr << "cannot open " << cfg.out_path << "\n";
                return 2;
            }
            out << result.rendered;
        }
        return result.exit_code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
