#ifndef LEAFSPACE_SCENARIO_HPP
#define LEAFSPACE_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leafspace/diffeology.hpp"

namespace leafspace {

/// Parse or validation failure with position information.
struct ScenarioError : std::runtime_error {
    ScenarioError(std::string file, int line, int column, const std::string& message)
        : std::runtime_error(file + ":" + std::to_string(line) + ":" + std::to_string(column) +
                             ": " + message),
          line(line), column(column) {}

    int line;
    int column;
};

/// Declarative description of a foliated torus and the work to run on it.
/// Plain text, one `key value...` pair per line, '#' comments. All numbers
/// are exact strings ("3/2", "1+2√2"). See the shipped scenarios and the
/// README for the full grammar.
struct Scenario {
    std::string name;
    long discriminant = 1;
    int torus_dim = 1;
    std::vector<QuadVector> foliation_vectors;
    int truncation = 2;
    uint64_t seed = 12345;
    int trials = 100;
    bool standard_presentation = true;

    struct ExplicitGenerator {
        QuadMatrix matrix;
        QuadVector phase;
        std::vector<std::pair<QuadMatrix, QuadVector>> extra_lifts;
    };
    struct ExplicitWitness {
        size_t factored = 0;
        size_t base = 0;
        QuadMatrix matrix;
        QuadVector phase;
    };
    std::vector<ExplicitGenerator> explicit_generators;
    std::vector<ExplicitWitness> explicit_witnesses;

    std::vector<std::string> tasks;

    static Scenario parse(const std::string& text, const std::string& filename = "<string>");
    static Scenario parse_file(const std::string& path);

    /// Canonical rendering; parse(serialize()) reproduces the scenario and
    /// serialize is idempotent on it.
    std::string serialize() const;

    bool has_foliation() const { return !foliation_vectors.empty(); }
    LinearFoliation foliation() const;
    /// The quotient presentation: standard, or assembled from the explicit
    /// generator/witness lists.
    GeneratedDiffeology quotient_presentation() const;
};

}  // namespace leafspace

#endif
