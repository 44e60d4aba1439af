#ifndef LEAFSPACE_RUNNER_HPP
#define LEAFSPACE_RUNNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "leafspace/cohomology.hpp"
#include "leafspace/scenario.hpp"

namespace leafspace {

inline constexpr const char* kVersion = "0.1.0";

struct VerifyOutcome {
    bool pass = false;
    int trials = 0;
    std::string counterexample;  // empty on pass
};

/// Randomized verification suites. Names: calculus, thm3, thm4, thm5,
/// injectivity. Deterministic for fixed seed; failures are results, not
/// errors.
VerifyOutcome verify_suite(const std::string& suite, const Scenario& scenario, uint64_t seed,
                           int trials);

struct TaskResult {
    std::string task;
    std::string status;  // "pass" | "fail" | "value"
    std::optional<BettiTable> betti;
    std::optional<std::string> counterexample;
    double seconds = 0;
};

struct Report {
    std::string scenario_name;
    uint64_t seed = 0;
    std::string version = kVersion;
    std::vector<TaskResult> results;

    bool all_passed() const;
    /// Deterministic JSON (no timing, no version): scenario, results, seed.
    nlohmann::json to_json() const;
};

/// Executes the scenario's tasks in declared order. Input problems
/// (unknown task, missing foliation, bad presentation) throw; verification
/// failures are recorded in the report.
Report run_scenario(const Scenario& scenario);
Report run_scenario_file(const std::string& path);

}  // namespace leafspace

#endif
