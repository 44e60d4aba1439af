#include "leafspace/cohomology.hpp"

#include <map>
#include <sstream>
#include <tuple>

namespace leafspace {

namespace {

// Matrix of exterior_d from the full mode space of degree r to degree r+1.
QuadMatrix mode_differential(const ModeCoordinates& from, const ModeCoordinates& to) {
    QuadMatrix m = zero_matrix(to.dim(), from.dim(), from.mode().entries.empty()
                                                         ? 1
                                                         : from.mode().entries[0].discriminant());
    for (size_t u = 0; u < from.dim(); ++u) {
        const QuadVector image = to.coordinates(exterior_d(from.unit(u)));
        for (size_t r = 0; r < to.dim(); ++r)
            m[r][u] = image[r];
    }
    return m;
}

QuadMatrix basis_matrix(const ModeCoordinates& space, const std::vector<DiffForm>& basis) {
    QuadMatrix m = zero_matrix(space.dim(), basis.size(),
                               space.dim() == 0 ? 1 : space.unit(0).discriminant());
    for (size_t c = 0; c < basis.size(); ++c) {
        const QuadVector coords = space.coordinates(basis[c]);
        for (size_t r = 0; r < space.dim(); ++r)
            m[r][c] = coords[r];
    }
    return m;
}

}  // namespace

std::vector<size_t> ModeComplex::dims() const {
    std::vector<size_t> out;
    out.reserve(bases.size());
    for (const auto& b : bases)
        out.push_back(b.size());
    return out;
}

ModeComplex build_mode_complex(int torus_dim, const Frequency& mode,
                               const std::optional<LinearFoliation>& constraint) {
    if (static_cast<int>(mode.size()) != torus_dim)
        throw DimensionError("mode length must equal the torus dimension");
    if (!mode.is_integer())
        throw std::invalid_argument("mode complexes are indexed by integer frequencies");
    const long d = mode.entries.empty() ? 1 : mode.entries[0].discriminant();
    if (constraint && constraint->torus_dim() != torus_dim)
        throw DimensionError("constraint foliation lives on a different torus");

    ModeComplex complex;
    complex.mode = mode.canonical().first;
    complex.torus_dim = torus_dim;
    complex.d = d;

    std::vector<ModeCoordinates> spaces;
    for (int r = 0; r <= torus_dim; ++r)
        spaces.emplace_back(torus_dim, d, complex.mode, r);

    for (int r = 0; r <= torus_dim; ++r) {
        std::vector<DiffForm> basis;
        if (constraint) {
            basis = basic_mode_space(*constraint, complex.mode, r);
        } else {
            for (size_t u = 0; u < spaces[r].dim(); ++u)
                basis.push_back(spaces[r].unit(u));
        }
        complex.bases.push_back(std::move(basis));
    }

    for (int r = 0; r < torus_dim; ++r) {
        const QuadMatrix full_d = mode_differential(spaces[r], spaces[r + 1]);
        const QuadMatrix b_here = basis_matrix(spaces[r], complex.bases[r]);
        const QuadMatrix b_next = basis_matrix(spaces[r + 1], complex.bases[r + 1]);
        QuadMatrix rhs = complex.bases[r].empty() ? zero_matrix(spaces[r + 1].dim(), 0, d)
                                                  : matmul(full_d, b_here);
        complex.differentials.push_back(solve_columns(b_next, rhs, d));
    }

    // d∘d = 0 as exact matrices
    for (int r = 0; r + 1 < torus_dim; ++r) {
        const auto degenerate = [](const QuadMatrix& m) { return m.empty() || m[0].empty(); };
        if (degenerate(complex.differentials[r]) || degenerate(complex.differentials[r + 1]))
            continue;
        const QuadMatrix square = matmul(complex.differentials[r + 1], complex.differentials[r]);
        for (const auto& row : square)
            for (const auto& e : row)
                if (!e.is_zero())
                    throw std::logic_error("mode complex differential does not square to zero");
    }
    return complex;
}

std::vector<int> betti_numbers(const ModeComplex& complex) {
    const int n = complex.torus_dim;
    std::vector<size_t> ranks(n, 0);
    for (int r = 0; r < n; ++r)
        ranks[r] = complex.differentials[r].empty() || complex.differentials[r][0].empty()
                       ? 0
                       : rank(complex.differentials[r]);
    std::vector<int> betti(n + 1, 0);
    for (int r = 0; r <= n; ++r) {
        const size_t dim_r = complex.bases[r].size();
        const size_t out_rank = r < n ? ranks[r] : 0;
        const size_t in_rank = r > 0 ? ranks[r - 1] : 0;
        betti[r] = static_cast<int>(dim_r - out_rank - in_rank);
    }
    return betti;
}


namespace {

std::vector<std::vector<long>> mode_list_to_long(const std::vector<Frequency>& modes) {
    std::vector<std::vector<long>> out;
    out.reserve(modes.size());
    for (const Frequency& k : modes) {
        std::vector<long> row;
        row.reserve(k.size());
        for (const auto& e : k.entries)
            row.push_back(e.to_integer());
        out.push_back(std::move(row));
    }
    return out;
}

BettiTable summed_table(const std::string& kind, int torus_dim, long d, int box,
                        const std::optional<LinearFoliation>& constraint) {
    BettiTable table;
    table.complex_kind = kind;
    table.truncation = box;
    table.ranks.assign(torus_dim + 1, 0);
    if (constraint)
        table.foliation_desc = constraint->str();
    std::vector<Frequency> used;
    for (const Frequency& k : enumerate_modes(torus_dim, d, box)) {
        const ModeComplex complex = build_mode_complex(torus_dim, k, constraint);
        bool nonzero = false;
        for (const auto& b : complex.bases)
            nonzero = nonzero || !b.empty();
        if (!nonzero)
            continue;
        used.push_back(k);
        const std::vector<int> betti = betti_numbers(complex);
        for (int r = 0; r <= torus_dim; ++r)
            table.ranks[r] += betti[r];
    }
    table.modes_used = mode_list_to_long(used);
    return table;
}

}  // namespace

BettiTable de_rham_betti(int torus_dim, long d, int truncation) {
    return summed_table("deRham", torus_dim, d, truncation, std::nullopt);
}

BettiTable basic_betti(const LinearFoliation& foliation, int truncation) {
    return summed_table("basic", foliation.torus_dim(), foliation.discriminant(), truncation,
                        foliation);
}

namespace {

// Sparse row collector for witness-constraint systems: a row per
// (witness, multi-index, frequency, cos|sin) seen in any difference form.
class ConstraintRows {
  public:
    explicit ConstraintRows(long d) : d_(d) {}

    void add(size_t witness, const DiffForm& difference, size_t column) {
        for (const auto& [idx, f] : difference.terms()) {
            for (const auto& [k, t] : f.terms()) {
                if (!t.cos_coeff.is_zero())
                    entries_.emplace_back(row_of(witness, idx, k, 0), column, t.cos_coeff);
                if (!t.sin_coeff.is_zero())
                    entries_.emplace_back(row_of(witness, idx, k, 1), column, t.sin_coeff);
            }
        }
    }

    QuadMatrix matrix(size_t columns) const {
        QuadMatrix m = zero_matrix(next_row_, columns, d_);
        for (const auto& [r, c, v] : entries_)
            m[r][c] = m[r][c] + v;
        return m;
    }

  private:
    using Key = std::tuple<size_t, MultiIndex, std::vector<std::string>, int>;

    size_t row_of(size_t witness, const MultiIndex& idx, const Frequency& k, int part) {
        // Frequencies are keyed by their canonical rendering; exact since
        // normal forms are canonical.
        std::vector<std::string> freq_key;
        freq_key.reserve(k.size());
        for (const auto& e : k.entries)
            freq_key.push_back(e.str());
        const Key key{witness, idx, std::move(freq_key), part};
        auto it = rows_.find(key);
        if (it != rows_.end())
            return it->second;
        rows_.emplace(key, next_row_);
        return next_row_++;
    }

    long d_;
    std::map<Key, size_t> rows_;
    size_t next_row_ = 0;
    std::vector<std::tuple<size_t, size_t, QuadScalar>> entries_;
};

}  // namespace

BettiTable quotient_betti(const GeneratedDiffeology& quotient_side, int truncation) {
    if (quotient_side.kind() != TargetKind::Quotient)
        throw std::invalid_argument("quotient cohomology needs a quotient presentation");
    const LinearFoliation& foliation = *quotient_side.foliation();
    const int n = quotient_side.torus_dim();
    const long d = quotient_side.discriminant();
    const size_t covering = quotient_side.covering_index();
    const auto& gens = quotient_side.generators();
    const auto& wits = quotient_side.witnesses();

    // Path maps: θ_g = pullback(path[g], θ_covering), built by forward
    // closure over the declared witnesses (first declaration wins).
    std::vector<std::optional<AffineMap>> path(gens.size());
    path[covering] = AffineMap::identity(n, d);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const RelationWitness& w : wits) {
            if (path[w.base] && !path[w.factored]) {
                path[w.factored] = path[w.base]->compose(w.map);
                changed = true;
            }
        }
    }
    for (size_t g = 0; g < gens.size(); ++g)
        if (!path[g])
            throw std::invalid_argument(
                "insufficient relation witnesses: generator " + std::to_string(g) +
                " is not connected to the covering generator");

    // Lattice periodicity lint: translation self-witnesses on the covering
    // generator must span all coordinates.
    QuadMatrix lattice_vectors;
    const QuadMatrix id_matrix = identity_matrix(n, d);
    for (const RelationWitness& w : wits)
        if (w.factored == covering && w.base == covering && w.map.matrix() == id_matrix)
            lattice_vectors.push_back(w.map.phase_half_pi());
    {
        std::vector<int> missing;
        for (int i = 0; i < n; ++i) {
            QuadMatrix probe = lattice_vectors;
            QuadVector e(n, QuadScalar::zero(d));
            e[i] = QuadScalar::one(d);
            probe.push_back(e);
            if (rank(probe) != rank(lattice_vectors))
                missing.push_back(i);
        }
        if (!missing.empty()) {
            std::ostringstream out;
            out << "insufficient relation witnesses: no lattice periodicity witness for "
                   "coordinate(s)";
            for (int i : missing)
                out << " " << (i + 1);
            throw std::invalid_argument(out.str());
        }
    }

    // Leaf-direction lint: the linear discrepancies of the witness
    // equations must span every tangent direction.
    QuadMatrix discrepancy_columns;
    for (const RelationWitness& w : wits) {
        const AffineMap lhs = *path[w.factored];
        const AffineMap rhs = path[w.base]->compose(w.map);
        for (int j = 0; j < lhs.source_dim(); ++j) {
            QuadVector column;
            column.reserve(n);
            bool nonzero = false;
            for (int i = 0; i < n; ++i) {
                column.push_back(lhs.matrix()[i][j] - rhs.matrix()[i][j]);
                nonzero = nonzero || !column.back().is_zero();
            }
            if (nonzero)
                discrepancy_columns.push_back(std::move(column));
        }
    }
    {
        std::vector<std::string> missing;
        for (const QuadVector& v : foliation.tangents()) {
            QuadMatrix probe = discrepancy_columns;
            probe.push_back(v);
            if (rank(probe) != rank(discrepancy_columns)) {
                std::ostringstream vec;
                vec << "(";
                for (size_t i = 0; i < v.size(); ++i)
                    vec << (i ? "," : "") << v[i].str();
                vec << ")";
                missing.push_back(vec.str());
            }
        }
        if (!missing.empty()) {
            std::ostringstream out;
            out << "insufficient relation witnesses: leaf direction(s) not constrained:";
            for (const auto& s : missing)
                out << " " << s;
            throw std::invalid_argument(out.str());
        }
    }

    BettiTable table;
    table.complex_kind = "quotient";
    table.truncation = truncation;
    table.ranks.assign(n + 1, 0);
    table.foliation_desc = foliation.str();
    std::vector<Frequency> used;

    for (const Frequency& mode : enumerate_modes(n, d, truncation)) {
        std::vector<ModeCoordinates> spaces;
        for (int r = 0; r <= n; ++r)
            spaces.emplace_back(n, d, mode, r);

        // Solve the witness constraints degree by degree.
        std::vector<QuadMatrix> chain_bases;  // columns = solutions, in full mode coords
        bool any_dim = false;
        for (int r = 0; r <= n; ++r) {
            ConstraintRows rows(d);
            for (size_t u = 0; u < spaces[r].dim(); ++u) {
                const DiffForm b = spaces[r].unit(u);
                for (size_t w = 0; w < wits.size(); ++w) {
                    const DiffForm lhs = pullback(*path[wits[w].factored], b);
                    const DiffForm rhs = pullback(path[wits[w].base]->compose(wits[w].map), b);
                    rows.add(w, lhs - rhs, u);
                }
            }
            const std::vector<QuadVector> kernel =
                nullspace(rows.matrix(spaces[r].dim()), spaces[r].dim(), d);
            QuadMatrix basis = zero_matrix(spaces[r].dim(), kernel.size(), d);
            for (size_t c = 0; c < kernel.size(); ++c)
                for (size_t i = 0; i < spaces[r].dim(); ++i)
                    basis[i][c] = kernel[c][i];
            any_dim = any_dim || !kernel.empty();
            chain_bases.push_back(std::move(basis));
        }
        if (!any_dim)
            continue;
        used.push_back(mode);

        std::vector<size_t> chain_dims(n + 1);
        std::vector<size_t> d_ranks(n, 0);
        for (int r = 0; r <= n; ++r)
            chain_dims[r] = chain_bases[r].empty() ? 0 : chain_bases[r][0].size();
        std::vector<QuadMatrix> subs(n);
        for (int r = 0; r < n; ++r) {
            if (chain_dims[r] == 0)
                continue;
            const QuadMatrix full_d = mode_differential(spaces[r], spaces[r + 1]);
            const QuadMatrix image = matmul(full_d, chain_bases[r]);
            // d preserves the solution space; express the image in the
            // next degree's solution basis and take its rank.
            subs[r] = solve_columns(chain_bases[r + 1], image, d);
            d_ranks[r] = subs[r].empty() || subs[r][0].empty() ? 0 : rank(subs[r]);
        }
        for (int r = 0; r + 1 < n; ++r) {
            const auto degenerate = [](const QuadMatrix& m) { return m.empty() || m[0].empty(); };
            if (degenerate(subs[r]) || degenerate(subs[r + 1]))
                continue;
            for (const auto& row : matmul(subs[r + 1], subs[r]))
                for (const auto& e : row)
                    if (!e.is_zero())
                        throw std::logic_error(
                            "quotient complex differential does not square to zero");
        }
        for (int r = 0; r <= n; ++r) {
            const size_t out_rank = r < n ? d_ranks[r] : 0;
            const size_t in_rank = r > 0 ? d_ranks[r - 1] : 0;
            table.ranks[r] += static_cast<int>(chain_dims[r] - out_rank - in_rank);
        }
    }
    table.modes_used = mode_list_to_long(used);
    return table;
}

nlohmann::json BettiTable::to_json() const {
    nlohmann::json j;
    j["complex"] = complex_kind;
    j["K"] = truncation;
    j["betti"] = ranks;
    j["modes_used"] = modes_used;
    return j;
}

std::string BettiTable::table() const {
    std::ostringstream out;
    out << "complex: " << complex_kind;
    if (!foliation_desc.empty())
        out << "   foliation: " << foliation_desc;
    out << "   K=" << truncation << "\n";
    out << "degree:";
    for (size_t r = 0; r < ranks.size(); ++r)
        out << "  " << r;
    out << "\nrank:  ";
    for (int r : ranks)
        out << "  " << r;
    out << "\nmodes used: " << modes_used.size() << "\n";
    return out.str();
}

}  // namespace leafspace
