#ifndef HAHNEXP_REPORT_HPP
#define HAHNEXP_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace hahnexp {

/// Result of one check suite run. passes + failures.size() + undecided
/// always equals instances; every failure witness carries enough data to
/// re-run the failing comparison through the CLI.
struct CheckReport {
    std::string check;
    nlohmann::json config = nlohmann::json::object();
    std::uint64_t instances = 0;
    std::uint64_t passes = 0;
    std::vector<nlohmann::json> failures;
    std::uint64_t undecided = 0;
    std::uint64_t wall_time_ms = 0;

    bool ok() const { return failures.empty() && undecided == 0; }

    void pass() {
        ++instances;
        ++passes;
    }
    void fail(nlohmann::json witness) {
        ++instances;
        failures.push_back(std::move(witness));
    }
    void undecide() {
        ++instances;
        ++undecided;
    }

    nlohmann::json to_json() const {
        return {{"check", check},
                {"config", config},
                {"instances", instances},
                {"passes", passes},
                {"failures", failures},
                {"undecided", undecided},
                {"wall_time_ms", wall_time_ms}};
    }
};

} // namespace hahnexp

#endif
