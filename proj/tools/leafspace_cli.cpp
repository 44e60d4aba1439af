// Command-line front end: load a scenario describing a foliated torus,
// run Betti computations and verification suites, and emit deterministic
// reports. Exit codes: 0 success, 1 verification failure, 2 input error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "leafspace/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology workbench for foliated tori and their leaf spaces"};

    std::string scenario_path;
    std::vector<std::string> task_overrides;
    int truncation = -1;
    long long seed = -1;
    int trials = -1;
    std::string json_path;

    app.add_option("--scenario", scenario_path, "scenario file to run")->required();
    app.add_option("--task", task_overrides,
                   "task to run instead of the scenario's list (repeatable)");
    app.add_option("--K", truncation, "override the mode truncation box");
    app.add_option("--seed", seed, "override the random seed");
    app.add_option("--trials", trials, "override the verification trial count");
    app.add_option("--json", json_path, "write the JSON report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // flag problems are input errors
    }

    leafspace::Report report;
    try {
        leafspace::Scenario scenario = leafspace::Scenario::parse_file(scenario_path);
        if (!task_overrides.empty())
            scenario.tasks = task_overrides;
        if (truncation >= 0)
            scenario.truncation = truncation;
        if (seed >= 0)
            scenario.seed = static_cast<uint64_t>(seed);
        if (trials >= 0)
            scenario.trials = trials;

        std::cerr << "leafspace " << leafspace::kVersion << " running scenario \""
                  << scenario.name << "\"\n";
        report = leafspace::run_scenario(scenario);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    for (const leafspace::TaskResult& r : report.results) {
        if (r.betti) {
            std::cout << "== " << r.task << " ==\n" << r.betti->table();
        } else {
            std::cout << "== " << r.task << " == " << r.status << "\n";
            if (r.counterexample)
                std::cout << "counterexample: " << *r.counterexample << "\n";
        }
        std::cerr << r.task << " finished in " << r.seconds << " s\n";
    }

    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "error: cannot write JSON report to " << json_path << "\n";
            return 2;
        }
        out << report.to_json().dump(2) << "\n";
    }
    return report.all_passed() ? 0 : 1;
}
