#include "leafspace/foliation.hpp"

#include <sstream>

#include "leafspace/modes.hpp"

namespace leafspace {

LinearFoliation::LinearFoliation(int torus_dim, std::vector<QuadVector> tangents)
    : n_(torus_dim), tangents_(std::move(tangents)) {
    if (n_ < 1)
        throw DimensionError("torus dimension must be positive");
    if (tangents_.empty())
        throw std::invalid_argument("a foliation needs at least one tangent vector");
    d_ = tangents_[0][0].discriminant();
    for (const auto& v : tangents_) {
        if (static_cast<int>(v.size()) != n_)
            throw DimensionError("tangent vector length must equal torus dimension");
        for (const auto& e : v)
            if (e.discriminant() != d_)
                throw FieldMismatchError("tangent vectors over different fields");
    }
    if (static_cast<int>(tangents_.size()) >= n_)
        throw std::invalid_argument("leaf dimension must be smaller than the torus dimension");
    if (!linearly_independent(tangents_, d_))
        throw std::invalid_argument("tangent vectors must be linearly independent");
}

bool LinearFoliation::contains(const QuadVector& w) const {
    if (static_cast<int>(w.size()) != n_)
        throw DimensionError("vector length must equal torus dimension");
    if (is_zero(w))
        return true;
    QuadMatrix stacked = tangents_;
    stacked.push_back(w);
    return rank(stacked) == tangents_.size();
}

std::string LinearFoliation::str() const {
    std::ostringstream out;
    out << "span{";
    for (size_t j = 0; j < tangents_.size(); ++j) {
        out << (j ? ", " : "") << "(";
        for (size_t i = 0; i < tangents_[j].size(); ++i)
            out << (i ? "," : "") << tangents_[j][i].str();
        out << ")";
    }
    out << "} on T" << n_;
    return out.str();
}

std::string BasicCheck::describe(const std::vector<std::string>& names) const {
    if (basic)
        return "basic";
    std::ostringstream out;
    out << "i_v" << (tangent_index + 1) << (from_differential ? "(dω)" : "(ω)") << " = "
        << (contraction ? contraction->str(names) : std::string("?")) << " ≠ 0";
    return out.str();
}

BasicCheck is_basic(const DiffForm& x, const LinearFoliation& foliation) {
    if (x.dim() != foliation.torus_dim())
        throw DimensionError("form and foliation live on different tori");
    const DiffForm dx = exterior_d(x);
    for (size_t j = 0; j < foliation.tangents().size(); ++j) {
        const QuadVector& v = foliation.tangents()[j];
        DiffForm horizontal = interior_product(v, x);
        if (!horizontal.is_zero())
            return {false, static_cast<int>(j), false, std::move(horizontal)};
        DiffForm invariant = interior_product(v, dx);
        if (!invariant.is_zero())
            return {false, static_cast<int>(j), true, std::move(invariant)};
    }
    return {true, -1, false, std::nullopt};
}

std::vector<DiffForm> basic_mode_space(const LinearFoliation& foliation, const Frequency& mode,
                                       int degree) {
    const int n = foliation.torus_dim();
    const long d = foliation.discriminant();
    if (degree < 0 || degree > n)
        return {};
    const ModeCoordinates space(n, d, mode, degree);
    if (space.dim() == 0)
        return {};
    const ModeCoordinates below(n, d, mode, degree - 1 < 0 ? 0 : degree - 1);
    const ModeCoordinates same(n, d, mode, degree);

    // Stack the conditions i_v ω = 0 (degree r-1) and i_v dω = 0 (degree r)
    // for every tangent vector; both contractions stay inside the mode.
    std::vector<QuadVector> columns;
    columns.reserve(space.dim());
    size_t row_count = 0;
    for (size_t u = 0; u < space.dim(); ++u) {
        const DiffForm b = space.unit(u);
        QuadVector column;
        for (const QuadVector& v : foliation.tangents()) {
            if (degree > 0) {
                const QuadVector c1 = below.coordinates(interior_product(v, b));
                column.insert(column.end(), c1.begin(), c1.end());
            }
            const QuadVector c2 = same.coordinates(interior_product(v, exterior_d(b)));
            column.insert(column.end(), c2.begin(), c2.end());
        }
        row_count = column.size();
        columns.push_back(std::move(column));
    }

    QuadMatrix constraints = zero_matrix(row_count, space.dim(), d);
    for (size_t c = 0; c < columns.size(); ++c)
        for (size_t r = 0; r < row_count; ++r)
            constraints[r][c] = columns[c][r];

    std::vector<DiffForm> basis;
    for (const QuadVector& x : nullspace(std::move(constraints), space.dim(), d))
        basis.push_back(space.form(x));
    return basis;
}

TangentialHomotopy::TangentialHomotopy(AffineMap base, QuadVector direction,
                                       const LinearFoliation& foliation)
    : base_(std::move(base)), direction_(std::move(direction)),
      extended_(AffineMap::identity(1, foliation.discriminant())) {
    const int n = foliation.torus_dim();
    if (base_.target_dim() != n)
        throw DimensionError("homotopy base plot must land in the foliated torus");
    if (static_cast<int>(direction_.size()) != n)
        throw DimensionError("homotopy direction length must equal torus dimension");
    if (!foliation.contains(direction_))
        throw std::invalid_argument("not a tangential deformation");
    // Extended map on U x R: matrix gains the direction as a last column.
    QuadMatrix m = base_.matrix();
    for (int i = 0; i < n; ++i)
        m[i].push_back(direction_[i]);
    extended_ = AffineMap(base_.source_dim() + 1, n, std::move(m), base_.phase_half_pi());
}

TangentialHomotopy tangential_homotopy(const AffineMap& base, const QuadVector& direction,
                                       const LinearFoliation& foliation) {
    return TangentialHomotopy(base, direction, foliation);
}

HomotopyConstancy homotopy_pullback_constant(const TangentialHomotopy& homotopy,
                                             const DiffForm& x) {
    const AffineMap& h = homotopy.extended();
    const int s_coord = h.source_dim() - 1;
    DiffForm pulled = pullback(h, x);
    for (const auto& [idx, f] : pulled.terms()) {
        for (int i : idx)
            if (i == s_coord)
                return {false, "differential in the homotopy parameter appears", pulled};
        if (!f.independent_of(s_coord))
            return {false, "coefficient depends on the homotopy parameter", pulled};
    }
    return {true, "", pulled};
}

}  // namespace leafspace
