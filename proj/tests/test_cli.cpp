#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "pvlab/cli.hpp"

using namespace pvlab;

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

// Runs the installed binary and captures stdout.
CommandResult run_binary(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + std::string(PVLAB_BIN) + " " + args + " 2>/dev/null";
    CommandResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

nlohmann::json strip_wall(nlohmann::json j) {
    j.erase("wall_ms");
    for (auto& c : j["checks"]) c.erase("wall_ms");
    return j;
}

}  // namespace

TEST_CASE("exponents dispatch carries the frozen (1,2,6) values") {
    RunConfig cfg;
    cfg.subcommand = "exponents";
    cfg.d = 1;
    cfg.k = 2;
    cfg.p = Rat(6);
    cfg.format = RunConfig::Format::json;
    const auto result = dispatch(cfg);
    CHECK(result.exit_code == 0);
    CHECK(result.report["values"]["gamma"] == "1/3");
    CHECK(result.report["values"]["lambda0"] == "1/6");
    // Compact serialization contains the documented key:value fragments.
    const std::string compact = result.report.dump();
    CHECK(compact.find("\"gamma\":\"1/3\"") != std::string::npos);
    CHECK(compact.find("\"lambda0\":\"1/6\"") != std::string::npos);
}

TEST_CASE("iterate dispatch reports matrix, certificate and checks") {
    RunConfig cfg;
    cfg.subcommand = "iterate";
    cfg.d = 1;
    cfg.k = 3;
    cfg.p = Rat(13);
    const auto result = dispatch(cfg);
    CHECK(result.exit_code == 0);
    CHECK(result.report["values"]["matrix"]["rows"] == 3);
    CHECK(result.report["values"]["certificate"].size() == 3);
    CHECK(result.report["summary"]["fail"] == 0);
    bool saw_lambda_bound = false;
    for (const auto& c : result.report["checks"])
        if (c["name"].get<std::string>().rfind("lambda-bound", 0) == 0) saw_lambda_bound = true;
    CHECK(saw_lambda_bound);
}

TEST_CASE("verify identities sweep is clean at small sizes") {
    RunConfig cfg;
    cfg.subcommand = "verify";
    cfg.suite = "identities";
    cfg.dmax = 2;
    cfg.kmax = 3;
    cfg.pgrid = 2;
    const auto result = dispatch(cfg);
    CHECK(result.exit_code == 0);
    CHECK(result.report["summary"]["fail"] == 0);
    CHECK(result.report["summary"]["pass"].get<int>() > 0);
}

TEST_CASE("comb suites dispatch") {
    RunConfig cfg;
    cfg.subcommand = "comb";
    cfg.suite = "frac";
    cfg.d = 2;
    cfg.l = 1;
    cfg.k = 3;
    CHECK(dispatch(cfg).exit_code == 0);

    cfg.suite = "deficiency";
    cfg.k = 2;
    CHECK(dispatch(cfg).exit_code == 0);

    cfg.suite = "multiplicity";
    cfg.grid = 10;
    CHECK(dispatch(cfg).exit_code == 0);

    cfg.suite = "nonsense";
    CHECK_THROWS_AS(dispatch(cfg), std::invalid_argument);
}

TEST_CASE("count dispatch emits CSV rows") {
    RunConfig cfg;
    cfg.subcommand = "count";
    cfg.s = 2;
    cfg.d = 1;
    cfg.k = 2;
    cfg.n = 8;
    cfg.format = RunConfig::Format::csv;
    const auto result = dispatch(cfg);
    CHECK(result.exit_code == 0);
    CHECK(result.rendered.rfind("N,J,slope\n", 0) == 0);
    CHECK(result.rendered.find("\n2,6,\n") != std::string::npos);
    CHECK(result.rendered.find("\n4,28,") != std::string::npos);
}

TEST_CASE("tiny budget reports guarded checks, never failures") {
    const auto checks = run_all_checks(1, 2, 8, 0, 1);
    const auto summary = summarize(checks);
    CHECK(summary.fail == 0);
    CHECK(summary.guarded > 0);
}

TEST_CASE("verify exponents suite dispatch") {
    RunConfig cfg;
    cfg.subcommand = "verify";
    cfg.suite = "exponents";
    cfg.dmax = 2;
    cfg.kmax = 3;
    const auto result = dispatch(cfg);
    CHECK(result.exit_code == 0);
    CHECK(result.report["summary"]["fail"] == 0);

    cfg.suite = "bogus";
    CHECK_THROWS_AS(dispatch(cfg), std::invalid_argument);
}

TEST_CASE("binary: exit codes and determinism") {
    // Missing required flag is a usage error.
    CHECK(run_binary("iterate --d 1").exit_code == 2);
    CHECK(run_binary("nonsense").exit_code == 2);
    CHECK(run_binary("--version").exit_code == 0);

    // Happy path.
    const auto once = run_binary("exponents --d 1 --k 2 --p 6/1 --json");
    CHECK(once.exit_code == 0);
    CHECK(once.output.find("\"gamma\": \"1/3\"") != std::string::npos);

    // Byte-identical reruns modulo wall-time fields.
    const auto a = run_binary("blcheck --d 2 --k 2 --l 1 --random 3 --seed 9 --json");
    const auto b = run_binary("blcheck --d 2 --k 2 --l 1 --random 3 --seed 9 --json");
    CHECK(a.exit_code == 0);
    REQUIRE_FALSE(a.output.empty());
    const auto ja = strip_wall(nlohmann::json::parse(a.output));
    const auto jb = strip_wall(nlohmann::json::parse(b.output));
    CHECK(ja == jb);

    // Different seed changes the certificates but stays clean.
    const auto c = run_binary("blcheck --d 2 --k 2 --l 1 --random 3 --seed 10 --json");
    CHECK(c.exit_code == 0);
}

TEST_CASE("binary: count respects PVLAB_THREADS") {
    const auto result = run_binary("count --s 2 --d 1 --k 2 --n 4 --csv");
    CHECK(result.exit_code == 0);
    const auto flag = run_binary("count --s 2 --d 1 --k 2 --n 4 --csv --threads 3");
    CHECK(flag.output == result.output);
    const auto env = run_binary("count --s 2 --d 1 --k 2 --n 4 --csv", "PVLAB_THREADS=4 ");
    CHECK(env.exit_code == 0);
    CHECK(env.output == result.output);
}

TEST_CASE("binary: --out writes the report to a file") {
    const std::string path = "/tmp/pvlab_out_test.json";
    std::remove(path.c_str());
    const auto result = run_binary("exponents --d 1 --k 2 --p 6/1 --json --out " + path);
    CHECK(result.exit_code == 0);
    CHECK(result.output.empty());
    std::FILE* f = std::fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string contents;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, f)) contents.append(buf, got);
    std::fclose(f);
    CHECK(contents.find("\"gamma\": \"1/3\"") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("blcheck random mode embeds full certificates in witnesses") {
    RunConfig cfg;
    cfg.subcommand = "blcheck";
    cfg.d = 2;
    cfg.k = 2;
    cfg.l = 1;
    cfg.random_cases = 2;
    const auto result = dispatch(cfg);
    CHECK(result.exit_code == 0);
    for (const auto& c : result.report["checks"]) {
        CHECK(c["witness"].contains("point"));
        CHECK(c["witness"].contains("rows"));
        CHECK(c["witness"].contains("cols"));
        CHECK(c["witness"].contains("minor"));
    }
}
