#include "leafspace/runner.hpp"

#include <chrono>
#include <sstream>

#include "leafspace/random.hpp"

namespace leafspace {

namespace {

std::string render(const DiffForm& x, const std::string& prefix = "θ") {
    return x.str(coord_names(x.dim(), prefix));
}

std::string trial_tag(int trial) {
    return "trial " + std::to_string(trial) + ": ";
}

VerifyOutcome pass_outcome(int trials) {
    return {true, trials, ""};
}

VerifyOutcome verify_calculus(int n, long d, uint64_t seed, int trials) {
    RandomSource rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        const int deg_x = static_cast<int>(rng.uniform(0, n));
        const int deg_y = static_cast<int>(rng.uniform(0, n));
        const DiffForm x = rng.form(n, deg_x, d, 5, 2);
        const DiffForm y = rng.form(n, deg_y, d, 5, 2);
        const QuadVector v = rng.quad_vector(n, d);
        const AffineMap g = rng.affine_plot(std::max(1, n - 1), n, d);
        const AffineMap f = rng.affine_plot(1, std::max(1, n - 1), d);

        if (!exterior_d(exterior_d(x)).is_zero())
            return {false, trial + 1, trial_tag(trial) + "d(d x) ≠ 0 for x = " + render(x)};

        DiffForm leibniz = wedge(exterior_d(x), y);
        const DiffForm second = wedge(x, exterior_d(y));
        leibniz = deg_x % 2 == 0 ? leibniz + second : leibniz - second;
        if (exterior_d(wedge(x, y)) != leibniz)
            return {false, trial + 1,
                    trial_tag(trial) + "graded Leibniz failed for x = " + render(x) +
                        ", y = " + render(y)};

        if (pullback(g.compose(f), x) != pullback(f, pullback(g, x)))
            return {false, trial + 1,
                    trial_tag(trial) + "pullback functoriality failed for x = " + render(x)};

        if (pullback(g, exterior_d(x)) != exterior_d(pullback(g, x)))
            return {false, trial + 1,
                    trial_tag(trial) + "pullback does not commute with d for x = " + render(x)};

        // Cartan formula against the translation-flow derivative
        DiffForm flow(x.dim(), x.degree(), x.discriminant());
        for (const auto& [idx, coeff] : x.terms()) {
            TrigScalar directional(x.dim(), x.discriminant());
            for (int j = 0; j < x.dim(); ++j)
                directional = directional + coeff.partial(j) * v[j];
            flow = flow + DiffForm::monomial(directional, idx);
        }
        if (lie_derivative(v, x) != flow)
            return {false, trial + 1,
                    trial_tag(trial) + "Cartan formula failed for x = " + render(x)};

        if (lie_derivative(v, wedge(x, y)) !=
            wedge(lie_derivative(v, x), y) + wedge(x, lie_derivative(v, y)))
            return {false, trial + 1,
                    trial_tag(trial) + "L_v product rule failed for x = " + render(x) +
                        ", y = " + render(y)};

        if (!interior_product(v, interior_product(v, x)).is_zero())
            return {false, trial + 1,
                    trial_tag(trial) + "i_v∘i_v ≠ 0 for x = " + render(x)};
    }
    return pass_outcome(trials);
}

VerifyOutcome verify_thm3(int n, long d, uint64_t seed, int trials) {
    RandomSource rng(seed);
    const GeneratedDiffeology torus = standard_torus_diffeology(n, d);
    for (int trial = 0; trial < trials; ++trial) {
        const int degree = static_cast<int>(rng.uniform(0, n));
        const DiffForm omega = rng.form(n, degree, d, 5, 2);
        const DForm theta = induce_dform(omega, torus);
        if (CompatibilityCheck chk = check_dform(theta, torus); !chk)
            return {false, trial + 1,
                    trial_tag(trial) + "restricted family incompatible: " + chk.describe()};
        if (glue_dform(theta, torus) != omega)
            return {false, trial + 1,
                    trial_tag(trial) + "glue∘restrict ≠ id for ω = " + render(omega)};
        if (induce_dform(glue_dform(theta, torus), torus) != theta)
            return {false, trial + 1,
                    trial_tag(trial) + "restrict∘glue ≠ id for ω = " + render(omega)};
        if (glue_dform(exterior_d(theta, torus), torus) != exterior_d(omega))
            return {false, trial + 1,
                    trial_tag(trial) + "gluing does not commute with d for ω = " + render(omega)};
        if (exterior_d(theta, torus) != induce_dform(exterior_d(omega), torus))
            return {false, trial + 1,
                    trial_tag(trial) +
                        "restriction does not commute with d for ω = " + render(omega)};
    }
    return pass_outcome(trials);
}

DiffForm nonzero_basic_form(RandomSource& rng, const LinearFoliation& f, int degree, int box) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        const DiffForm omega = rng.basic_form(f, degree, box);
        if (!omega.is_zero())
            return omega;
    }
    // Degrees where the basic complex vanishes have no nonzero samples.
    return DiffForm(f.torus_dim(), degree, f.discriminant());
}

int random_interesting_degree(RandomSource& rng, const LinearFoliation& f) {
    // Basic complexes die in top degrees; prefer degrees that carry forms.
    return static_cast<int>(rng.uniform(0, std::max(1, f.torus_dim() - f.leaf_dim())));
}

VerifyOutcome verify_thm4(const LinearFoliation& f, const GeneratedDiffeology& quotient,
                          uint64_t seed, int trials) {
    RandomSource rng(seed);
    const GeneratedDiffeology torus = standard_torus_diffeology(f);
    for (int trial = 0; trial < trials; ++trial) {
        const DiffForm omega = nonzero_basic_form(rng, f, random_interesting_degree(rng, f), 2);
        const DForm theta = dform_from_basic(omega, f, quotient);
        if (CompatibilityCheck chk = check_dform(theta, quotient); !chk)
            return {false, trial + 1,
                    trial_tag(trial) + "family incompatible: " + chk.describe()};
        DiffForm image(f.torus_dim(), theta.degree(), f.discriminant());
        try {
            image = to_basic_form(theta, torus, quotient);
        } catch (const std::logic_error& e) {
            return {false, trial + 1, trial_tag(trial) + e.what()};
        }
        if (BasicCheck chk = is_basic(image, f); !chk)
            return {false, trial + 1,
                    trial_tag(trial) + "comparison image not basic: " +
                        chk.describe(coord_names(f.torus_dim(), "θ"))};
    }
    return pass_outcome(trials);
}

VerifyOutcome verify_injectivity(const LinearFoliation& f, const GeneratedDiffeology& quotient,
                                 uint64_t seed, int trials) {
    RandomSource rng(seed);
    const GeneratedDiffeology torus = standard_torus_diffeology(f);
    for (int degree = 0; degree <= f.torus_dim(); ++degree) {
        const DForm zero = zero_dform(quotient, degree);
        if (!projection_pullback(zero, torus, quotient).is_zero())
            return {false, 0, "projection pullback of the zero family is nonzero"};
    }
    for (int trial = 0; trial < trials; ++trial) {
        const DiffForm omega = nonzero_basic_form(rng, f, random_interesting_degree(rng, f), 2);
        if (omega.is_zero())
            continue;
        const DForm theta = dform_from_basic(omega, f, quotient);
        if (theta.is_zero())
            return {false, trial + 1,
                    trial_tag(trial) + "nonzero basic form induced the zero family: " +
                        render(omega)};
        if (projection_pullback(theta, torus, quotient).is_zero())
            return {false, trial + 1,
                    trial_tag(trial) + "π* killed a nonzero family induced by " + render(omega)};
    }
    return pass_outcome(trials);
}

VerifyOutcome verify_thm5(const LinearFoliation& f, const GeneratedDiffeology& quotient,
                          uint64_t seed, int trials, int truncation) {
    RandomSource rng(seed);
    const GeneratedDiffeology torus = standard_torus_diffeology(f);
    const int n = f.torus_dim();
    for (int trial = 0; trial < trials; ++trial) {
        const DiffForm omega = nonzero_basic_form(rng, f, random_interesting_degree(rng, f), 2);
        const DForm theta = dform_from_basic(omega, f, quotient);
        if (to_basic_form(theta, torus, quotient) != omega)
            return {false, trial + 1,
                    trial_tag(trial) + "comparison∘inverse ≠ id for ω = " + render(omega)};
        if (dform_from_basic(to_basic_form(theta, torus, quotient), f, quotient) != theta)
            return {false, trial + 1,
                    trial_tag(trial) + "inverse∘comparison ≠ id for ω = " + render(omega)};
        // lift independence against random tangential homotopies
        for (int h = 0; h < 10; ++h) {
            const AffineMap base = rng.affine_plot(static_cast<int>(rng.uniform(1, 2)), n,
                                                   f.discriminant());
            const QuadVector w = rng.leaf_vector(f);
            if (HomotopyConstancy c = lift_independent(omega, base, w, f); !c)
                return {false, trial + 1,
                        trial_tag(trial) + "lift independence failed (" + c.reason +
                            ") for ω = " + render(omega)};
        }
        // the conclusion of the homotopy argument: tangent Lie derivatives vanish
        for (const QuadVector& v : f.tangents())
            if (!lie_derivative(v, omega).is_zero())
                return {false, trial + 1,
                        trial_tag(trial) + "L_v ω ≠ 0 for basic ω = " + render(omega)};
    }
    const BettiTable qt = quotient_betti(quotient, truncation);
    const BettiTable bt = basic_betti(f, truncation);
    if (!(qt == bt)) {
        std::ostringstream out;
        out << "quotient and basic Betti tables differ:\n" << qt.table() << bt.table();
        return {false, trials, out.str()};
    }
    return pass_outcome(trials);
}

}  // namespace

VerifyOutcome verify_suite(const std::string& suite, const Scenario& scenario, uint64_t seed,
                           int trials) {
    const int n = scenario.torus_dim;
    const long d = scenario.discriminant;
    if (suite == "calculus")
        return verify_calculus(n, d, seed, trials);
    if (suite == "thm3")
        return verify_thm3(n, d, seed, trials);
    if (suite == "thm4")
        return verify_thm4(scenario.foliation(), scenario.quotient_presentation(), seed, trials);
    if (suite == "injectivity")
        return verify_injectivity(scenario.foliation(), scenario.quotient_presentation(), seed,
                                  trials);
    if (suite == "thm5")
        return verify_thm5(scenario.foliation(), scenario.quotient_presentation(), seed, trials,
                           scenario.truncation);
    throw std::invalid_argument("unknown verification suite \"" + suite + "\"");
}

bool Report::all_passed() const {
    for (const TaskResult& r : results)
        if (r.status == "fail")
            return false;
    return true;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["scenario"] = scenario_name;
    j["results"] = nlohmann::json::array();
    for (const TaskResult& r : results) {
        nlohmann::json entry;
        entry["task"] = r.task;
        entry["status"] = r.status;
        if (r.betti)
            entry["betti"] = r.betti->ranks;
        if (r.counterexample)
            entry["counterexample"] = *r.counterexample;
        j["results"].push_back(std::move(entry));
    }
    j["seed"] = seed;
    return j;
}

Report run_scenario(const Scenario& scenario) {
    Report report;
    report.scenario_name = scenario.name;
    report.seed = scenario.seed;
    for (const std::string& task : scenario.tasks) {
        const auto start = std::chrono::steady_clock::now();
        TaskResult result;
        result.task = task;
        if (task == "derham-betti") {
            result.status = "value";
            result.betti = de_rham_betti(scenario.torus_dim, scenario.discriminant,
                                         scenario.truncation);
        } else if (task == "basic-betti") {
            result.status = "value";
            result.betti = basic_betti(scenario.foliation(), scenario.truncation);
        } else if (task == "quotient-betti") {
            result.status = "value";
            result.betti = quotient_betti(scenario.quotient_presentation(), scenario.truncation);
        } else if (task.rfind("verify-", 0) == 0) {
            const VerifyOutcome outcome =
                verify_suite(task.substr(7), scenario, scenario.seed, scenario.trials);
            result.status = outcome.pass ? "pass" : "fail";
            if (!outcome.pass)
                result.counterexample = outcome.counterexample;
        } else {
            throw std::invalid_argument("unknown task \"" + task + "\"");
        }
        result.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.results.push_back(std::move(result));
    }
    return report;
}

Report run_scenario_file(const std::string& path) {
    return run_scenario(Scenario::parse_file(path));
}

}  // namespace leafspace
