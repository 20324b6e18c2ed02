#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pvlab/rat.hpp"
#include "pvlab/report.hpp"

namespace pvlab {

extern const char* kToolVersion;

// A fully validated invocation. Defaults are deterministic (seed 0) so a
// bare run reproduces bit-for-bit.
struct RunConfig {
    enum class Format { text, json, csv };

    std::string subcommand;
    std::string suite;

    int d = 1;
    int k = 2;
    int l = 1;
    int s = 2;
    long n = 16;
    std::optional<Rat> p;

    int dmax = 3;
    int kmax = 4;
    int pgrid = 4;

    int random_cases = 0;
    bool monomial_sweep = false;
    int trials = 32;
    std::uint64_t seed = 0;
    int threads = 1;
    long budget = 1'000'000;  // cap on exhaustive enumeration sizes
    int grid = 10;            // cube-collection grid for multiplicity runs

    Format format = Format::text;
    std::string out_path;  // empty writes to stdout
};

struct RunResult {
    int exit_code = 0;          // 0 all pass, 1 any fail, 2 usage error
    nlohmann::json report;      // {tool_version, command, params, checks[], summary}
    std::string rendered;       // text/json/csv payload
};

RunResult dispatch(const RunConfig& config);

// The composite suite behind `all`: every module's checks within guards.
std::vector<CheckReport> run_all_checks(int dmax, int kmax, long budget, std::uint64_t seed,
                                        int threads);

}  // namespace pvlab
