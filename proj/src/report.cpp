#include "pvlab/report.hpp"

namespace pvlab {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::degenerate: return "degenerate";
        case CheckStatus::guarded: return "guarded";
    }
    return "unknown";
}

CheckReport CheckReport::pass(std::string name, nlohmann::json witness) {
    return CheckReport{std::move(name), CheckStatus::pass, std::move(witness), 0.0};
}
CheckReport CheckReport::fail(std::string name, nlohmann::json witness) {
    return CheckReport{std::move(name), CheckStatus::fail, std::move(witness), 0.0};
}
CheckReport CheckReport::guarded(std::string name, nlohmann::json witness) {
    return CheckReport{std::move(name), CheckStatus::guarded, std::move(witness), 0.0};
}
CheckReport CheckReport::degenerate(std::string name, nlohmann::json witness) {
    return CheckReport{std::move(name), CheckStatus::degenerate, std::move(witness), 0.0};
}

Summary summarize(const std::vector<CheckReport>& checks) {
    Summary s;
    for (const auto& c : checks) {
        switch (c.status) {
            case CheckStatus::pass: ++s.pass; break;
            case CheckStatus::fail: ++s.fail; break;
            case CheckStatus::degenerate: ++s.degenerate; break;
            case CheckStatus::guarded: ++s.guarded; break;
        }
    }
    return s;
}

nlohmann::json to_json(const CheckReport& check) {
    return nlohmann::json{{"name", check.name},
                          {"status", to_string(check.status)},
                          {"witness", check.witness.is_null() ? nlohmann::json::object() : check.witness},
                          {"wall_ms", check.wall_ms}};
}

nlohmann::json to_json(const Summary& summary) {
    return nlohmann::json{{"pass", summary.pass},
                          {"fail", summary.fail},
                          {"degenerate", summary.degenerate},
                          {"guarded", summary.guarded}};
}

}  // namespace pvlab
