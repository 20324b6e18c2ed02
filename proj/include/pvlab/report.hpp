#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace pvlab {

enum class CheckStatus { pass, fail, degenerate, guarded };

const char* to_string(CheckStatus s);

// One verification outcome. A fail always carries enough witness data
// (exact rationals serialized as "num/den" strings) to replay the failure
// in isolation.
struct CheckReport {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    nlohmann::json witness = nlohmann::json::object();
    double wall_ms = 0.0;

    bool passed() const { return status == CheckStatus::pass; }

    static CheckReport pass(std::string name, nlohmann::json witness = nlohmann::json::object());
    static CheckReport fail(std::string name, nlohmann::json witness);
    static CheckReport guarded(std::string name, nlohmann::json witness);
    static CheckReport degenerate(std::string name, nlohmann::json witness);
};

struct Summary {
    int pass = 0;
    int fail = 0;
    int degenerate = 0;
    int guarded = 0;
};

Summary summarize(const std::vector<CheckReport>& checks);

nlohmann::json to_json(const CheckReport& check);
nlohmann::json to_json(const Summary& summary);

}  // namespace pvlab
