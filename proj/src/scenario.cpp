#include "leafspace/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace leafspace {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(trim(current));
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(trim(current));
    return parts;
}

const std::set<std::string> kKnownTasks = {
    "derham-betti",   "basic-betti",  "quotient-betti",     "verify-calculus",
    "verify-thm3",    "verify-thm4",  "verify-thm5",        "verify-injectivity"};

}  // namespace

Scenario Scenario::parse(const std::string& text, const std::string& filename) {
    Scenario sc;
    std::set<std::string> seen;
    bool has_discriminant = false;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    auto fail = [&](int column, const std::string& message) -> ScenarioError {
        return ScenarioError(filename, line_no, column, message);
    };
    auto value_column = [&](const std::string& key) {
        return static_cast<int>(raw.find(key) + key.size() + 2);
    };

    // Vector and matrix fields need the discriminant; parse them after the
    // scalar keys in a second pass.
    struct Pending {
        int line;
        std::string key;
        std::string value;
    };
    std::vector<Pending> pending;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (size_t hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const size_t space = line.find_first_of(" \t");
        const std::string key = space == std::string::npos ? line : line.substr(0, space);
        const std::string value =
            space == std::string::npos ? "" : trim(line.substr(space + 1));

        auto parse_long = [&](const std::string& what, long lo, long hi) {
            try {
                size_t used = 0;
                const long v = std::stol(value, &used);
                if (used != value.size())
                    throw std::invalid_argument("trailing characters");
                if (v < lo || v > hi)
                    throw std::invalid_argument("out of range");
                return v;
            } catch (const std::exception&) {
                throw fail(value_column(key), "invalid " + what + ": \"" + value + "\"");
            }
        };
        auto once = [&](const std::string& k) {
            if (!seen.insert(k).second)
                throw fail(1, "duplicate key \"" + k + "\"");
        };

        if (key == "name") {
            once(key);
            if (value.empty())
                throw fail(value_column(key), "empty scenario name");
            sc.name = value;
        } else if (key == "discriminant") {
            once(key);
            sc.discriminant = parse_long("discriminant", 1, 1000000);
            has_discriminant = true;
        } else if (key == "torus") {
            once(key);
            sc.torus_dim = static_cast<int>(parse_long("torus dimension", 1, 8));
        } else if (key == "K") {
            once(key);
            sc.truncation = static_cast<int>(parse_long("truncation", 0, 16));
        } else if (key == "seed") {
            once(key);
            sc.seed = static_cast<uint64_t>(parse_long("seed", 0, 1L << 62));
        } else if (key == "trials") {
            once(key);
            sc.trials = static_cast<int>(parse_long("trial count", 1, 1000000));
        } else if (key == "diffeology") {
            once(key);
            if (value == "standard")
                sc.standard_presentation = true;
            else if (value == "explicit")
                sc.standard_presentation = false;
            else
                throw fail(value_column(key),
                           "diffeology must be \"standard\" or \"explicit\"");
        } else if (key == "task") {
            if (!kKnownTasks.count(value))
                throw fail(value_column(key), "unknown task \"" + value + "\"");
            sc.tasks.push_back(value);
        } else if (key == "vector" || key == "generator" || key == "witness" || key == "lift") {
            pending.push_back({line_no, key, value});
        } else {
            throw fail(1, "unknown key \"" + key + "\"");
        }
    }

    if (!has_discriminant)
        throw ScenarioError(filename, line_no, 1, "missing \"discriminant\"");
    if (sc.name.empty())
        throw ScenarioError(filename, line_no, 1, "missing \"name\"");

    auto parse_entry = [&](const std::string& text_entry, int line, const std::string& what) {
        try {
            return QuadScalar::parse(text_entry, sc.discriminant);
        } catch (const std::exception& e) {
            throw ScenarioError(filename, line, 1,
                                "invalid " + what + " \"" + text_entry + "\": " + e.what());
        }
    };
    auto parse_vector = [&](const std::string& text_vec, int line, const std::string& what) {
        QuadVector v;
        for (const std::string& part : split(text_vec, ','))
            v.push_back(parse_entry(part, line, what));
        return v;
    };
    auto parse_matrix_phase = [&](const std::string& text_mp, int line)
        -> std::pair<QuadMatrix, QuadVector> {
        const size_t bar = text_mp.find('|');
        if (bar == std::string::npos)
            throw ScenarioError(filename, line, 1, "expected \"matrix | phase\"");
        QuadMatrix m;
        for (const std::string& row : split(trim(text_mp.substr(0, bar)), ';'))
            m.push_back(parse_vector(row, line, "matrix entry"));
        const QuadVector phase = parse_vector(trim(text_mp.substr(bar + 1)), line, "phase entry");
        return {std::move(m), phase};
    };

    for (const Pending& p : pending) {
        line_no = p.line;
        if (p.key == "vector") {
            const QuadVector v = parse_vector(p.value, p.line, "vector entry");
            if (static_cast<int>(v.size()) != sc.torus_dim)
                throw ScenarioError(filename, p.line, 1,
                                    "vector length does not match the torus dimension");
            sc.foliation_vectors.push_back(v);
        } else if (p.key == "generator") {
            auto [m, phase] = parse_matrix_phase(p.value, p.line);
            sc.explicit_generators.push_back({std::move(m), phase, {}});
        } else if (p.key == "lift") {
            const size_t space = p.value.find_first_of(" \t");
            if (space == std::string::npos)
                throw ScenarioError(filename, p.line, 1, "expected \"lift <generator> matrix | phase\"");
            size_t index = 0;
            try {
                index = std::stoul(p.value.substr(0, space));
            } catch (const std::exception&) {
                throw ScenarioError(filename, p.line, 1, "invalid generator index");
            }
            if (index >= sc.explicit_generators.size())
                throw ScenarioError(filename, p.line, 1,
                                    "lift declared before its generator");
            auto [m, phase] = parse_matrix_phase(trim(p.value.substr(space + 1)), p.line);
            sc.explicit_generators[index].extra_lifts.push_back({std::move(m), phase});
        } else {  // witness
            std::istringstream ws(p.value);
            size_t factored = 0, base = 0;
            if (!(ws >> factored >> base))
                throw ScenarioError(filename, p.line, 1,
                                    "expected \"witness <factored> <base> matrix | phase\"");
            std::string rest;
            std::getline(ws, rest);
            auto [m, phase] = parse_matrix_phase(trim(rest), p.line);
            sc.explicit_witnesses.push_back({factored, base, std::move(m), phase});
        }
    }

    // cross-field validation
    if (sc.has_foliation()) {
        try {
            sc.foliation();
        } catch (const std::exception& e) {
            throw ScenarioError(filename, 1, 1, std::string("invalid foliation: ") + e.what());
        }
    }
    if (!sc.standard_presentation && sc.explicit_generators.empty())
        throw ScenarioError(filename, 1, 1, "explicit diffeology without generators");
    return sc;
}

Scenario Scenario::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ScenarioError(path, 0, 0, "cannot open scenario file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path);
}

namespace {

std::string vector_str(const QuadVector& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i)
        out += (i ? ", " : "") + v[i].str();
    return out;
}

std::string matrix_phase_str(const QuadMatrix& m, const QuadVector& phase) {
    std::string out;
    for (size_t i = 0; i < m.size(); ++i)
        out += (i ? "; " : "") + vector_str(m[i]);
    out += " | " + vector_str(phase);
    return out;
}

}  // namespace

std::string Scenario::serialize() const {
    std::ostringstream out;
    out << "name " << name << "\n";
    out << "discriminant " << discriminant << "\n";
    out << "torus " << torus_dim << "\n";
    for (const QuadVector& v : foliation_vectors)
        out << "vector " << vector_str(v) << "\n";
    out << "K " << truncation << "\n";
    out << "seed " << seed << "\n";
    out << "trials " << trials << "\n";
    out << "diffeology " << (standard_presentation ? "standard" : "explicit") << "\n";
    if (!standard_presentation) {
        for (const ExplicitGenerator& g : explicit_generators)
            out << "generator " << matrix_phase_str(g.matrix, g.phase) << "\n";
        for (size_t i = 0; i < explicit_generators.size(); ++i)
            for (const auto& [m, phase] : explicit_generators[i].extra_lifts)
                out << "lift " << i << " " << matrix_phase_str(m, phase) << "\n";
        for (const ExplicitWitness& w : explicit_witnesses)
            out << "witness " << w.factored << " " << w.base << " "
                << matrix_phase_str(w.matrix, w.phase) << "\n";
    }
    for (const std::string& t : tasks)
        out << "task " << t << "\n";
    return out.str();
}

LinearFoliation Scenario::foliation() const {
    if (!has_foliation())
        throw std::invalid_argument("scenario \"" + name + "\" declares no foliation vectors");
    return LinearFoliation(torus_dim, foliation_vectors);
}

GeneratedDiffeology Scenario::quotient_presentation() const {
    const LinearFoliation f = foliation();
    if (standard_presentation)
        return standard_quotient_diffeology(f);
    std::vector<Plot> gens;
    for (const ExplicitGenerator& g : explicit_generators) {
        const int source = g.matrix.empty() ? 0 : static_cast<int>(g.matrix[0].size());
        Plot plot = Plot::quotient_plot(
            AffineMap(source, torus_dim, g.matrix, g.phase), f);
        for (const auto& [m, phase] : g.extra_lifts)
            plot.add_lift(AffineMap(m.empty() ? 0 : static_cast<int>(m[0].size()), torus_dim, m,
                                    phase),
                          f);
        gens.push_back(std::move(plot));
    }
    std::vector<RelationWitness> wits;
    for (const ExplicitWitness& w : explicit_witnesses) {
        if (w.factored >= gens.size() || w.base >= gens.size())
            throw std::invalid_argument("witness references a missing generator");
        const int source = gens[w.factored].domain_dim();
        const int target = gens[w.base].domain_dim();
        (void)source;
        wits.push_back({w.factored, w.base,
                        AffineMap(w.matrix.empty() ? 0 : static_cast<int>(w.matrix[0].size()),
                                  target, w.matrix, w.phase)});
    }
    return GeneratedDiffeology(TargetKind::Quotient, torus_dim, discriminant, f, std::move(gens),
                               std::move(wits));
}

}  // namespace leafspace
