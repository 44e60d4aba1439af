#include "leafspace/forms.hpp"

#include <algorithm>
#include <sstream>

namespace leafspace {

AffineMap::AffineMap(int source_dim, int target_dim, QuadMatrix matrix, QuadVector phase_half_pi)
    : source_dim_(source_dim), target_dim_(target_dim), matrix_(std::move(matrix)),
      phase_(std::move(phase_half_pi)) {
    if (target_dim_ < 1 || source_dim_ < 0)
        throw DimensionError("affine map needs target dim >= 1, source dim >= 0");
    if (static_cast<int>(matrix_.size()) != target_dim_ ||
        static_cast<int>(phase_.size()) != target_dim_)
        throw DimensionError("affine map: matrix/phase row count must equal target dim");
    for (const auto& row : matrix_)
        if (static_cast<int>(row.size()) != source_dim_)
            throw DimensionError("affine map: matrix column count must equal source dim");
    d_ = phase_[0].discriminant();
}

AffineMap AffineMap::identity(int dim, long d) {
    return AffineMap(dim, dim, identity_matrix(dim, d), QuadVector(dim, QuadScalar::zero(d)));
}

AffineMap AffineMap::constant(int source_dim, QuadVector phase_half_pi) {
    const long d = phase_half_pi.at(0).discriminant();
    const int n = static_cast<int>(phase_half_pi.size());
    return AffineMap(source_dim, n, zero_matrix(n, source_dim, d), std::move(phase_half_pi));
}

AffineMap AffineMap::translation(QuadVector phase_half_pi) {
    const long d = phase_half_pi.at(0).discriminant();
    const int n = static_cast<int>(phase_half_pi.size());
    return AffineMap(n, n, identity_matrix(n, d), std::move(phase_half_pi));
}

AffineMap AffineMap::shear_by(const QuadVector& direction) {
    const long d = direction.at(0).discriminant();
    const int n = static_cast<int>(direction.size());
    QuadMatrix m = zero_matrix(n, n + 1, d);
    for (int i = 0; i < n; ++i) {
        m[i][i] = QuadScalar::one(d);
        m[i][n] = direction[i];
    }
    return AffineMap(n + 1, n, std::move(m), QuadVector(n, QuadScalar::zero(d)));
}

AffineMap AffineMap::drop_last(int source_dim, long d) {
    if (source_dim < 1)
        throw DimensionError("drop_last needs at least one coordinate");
    const int n = source_dim - 1;
    QuadMatrix m = zero_matrix(n, source_dim, d);
    for (int i = 0; i < n; ++i)
        m[i][i] = QuadScalar::one(d);
    return AffineMap(source_dim, n, std::move(m), QuadVector(n, QuadScalar::zero(d)));
}

AffineMap AffineMap::compose(const AffineMap& other) const {
    if (other.target_dim_ != source_dim_)
        throw DimensionError("affine composition: dimension mismatch");
    if (d_ != other.d_)
        throw FieldMismatchError("affine composition over different fields");
    // (M1(M2 t + c2) + c1) = (M1 M2) t + (M1 c2 + c1)
    QuadMatrix m = source_dim_ == 0 ? zero_matrix(target_dim_, other.source_dim_, d_)
                                    : matmul(matrix_, other.matrix_);
    QuadVector c = phase_;
    for (int i = 0; i < target_dim_; ++i)
        for (int j = 0; j < source_dim_; ++j)
            c[i] += matrix_[i][j] * other.phase_[j];
    return AffineMap(other.source_dim_, target_dim_, std::move(m), std::move(c));
}

bool AffineMap::operator==(const AffineMap& o) const {
    return source_dim_ == o.source_dim_ && target_dim_ == o.target_dim_ && matrix_ == o.matrix_ &&
           phase_ == o.phase_;
}

std::string AffineMap::str() const {
    std::ostringstream out;
    out << "t↦Mt+(π/2)c, M=[";
    for (int i = 0; i < target_dim_; ++i) {
        if (i)
            out << "; ";
        for (int j = 0; j < source_dim_; ++j)
            out << (j ? "," : "") << matrix_[i][j].str();
    }
    out << "], c=[";
    for (int i = 0; i < target_dim_; ++i)
        out << (i ? "," : "") << phase_[i].str();
    out << "]";
    return out.str();
}

namespace {

// Merge two strictly increasing index lists; returns the sign of the
// permutation sorting their concatenation, or 0 on a repeated index.
int merge_indices(const MultiIndex& x, const MultiIndex& y, MultiIndex& out) {
    out.clear();
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    int sign = 1;
    while (i < x.size() && j < y.size()) {
        if (x[i] == y[j])
            return 0;
        if (x[i] < y[j]) {
            out.push_back(x[i++]);
        } else {
            // y[j] jumps over the remaining entries of x
            if ((x.size() - i) % 2 == 1)
                sign = -sign;
            out.push_back(y[j++]);
        }
    }
    while (i < x.size())
        out.push_back(x[i++]);
    while (j < y.size())
        out.push_back(y[j++]);
    return sign;
}

}  // namespace

DiffForm::DiffForm(int dim, int degree, long d) : dim_(dim), degree_(degree), d_(d) {
    if (dim < 0 || degree < 0)
        throw DimensionError("form dimension and degree must be nonnegative");
}

DiffForm DiffForm::from_function(const TrigScalar& f) {
    DiffForm r(f.dim(), 0, f.discriminant());
    r.add_term({}, f);
    return r;
}

DiffForm DiffForm::monomial(const TrigScalar& coeff, const MultiIndex& indices) {
    for (int i : indices)
        if (i < 0 || i >= coeff.dim())
            throw DimensionError("multi-index entry out of range");
    MultiIndex sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return DiffForm(coeff.dim(), static_cast<int>(indices.size()), coeff.discriminant());
    // parity of the sorting permutation
    int sign = 1;
    MultiIndex work = indices;
    for (size_t a = 0; a < work.size(); ++a)
        for (size_t b = a + 1; b < work.size(); ++b)
            if (work[a] > work[b]) {
                std::swap(work[a], work[b]);
                sign = -sign;
            }
    DiffForm r(coeff.dim(), static_cast<int>(indices.size()), coeff.discriminant());
    r.add_term(sorted, sign == 1 ? coeff : -coeff);
    return r;
}

DiffForm DiffForm::coordinate_differential(int j, int dim, long d) {
    return monomial(TrigScalar::constant(QuadScalar::one(d), dim), {j});
}

TrigScalar DiffForm::coefficient(const MultiIndex& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? TrigScalar(dim_, d_) : it->second;
}

void DiffForm::add_term(const MultiIndex& sorted_index, const TrigScalar& coeff) {
    if (static_cast<int>(sorted_index.size()) != degree_)
        throw DimensionError("multi-index length must equal form degree");
    if (coeff.dim() != dim_)
        throw DimensionError("coefficient domain does not match form");
    if (coeff.is_zero())
        return;
    auto it = terms_.find(sorted_index);
    if (it == terms_.end()) {
        terms_.emplace(sorted_index, coeff);
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero())
        terms_.erase(it);
}

void DiffForm::check_compatible(const DiffForm& o) const {
    if (dim_ != o.dim_)
        throw DimensionError("forms on different ambient dimensions");
    if (d_ != o.d_)
        throw FieldMismatchError("forms over different fields");
}

DiffForm DiffForm::operator-() const {
    DiffForm r(dim_, degree_, d_);
    for (const auto& [idx, f] : terms_)
        r.terms_.emplace(idx, -f);
    return r;
}

DiffForm DiffForm::operator+(const DiffForm& o) const {
    check_compatible(o);
    if (degree_ != o.degree_)
        throw DimensionError("cannot add forms of different degree");
    DiffForm r = *this;
    for (const auto& [idx, f] : o.terms_)
        r.add_term(idx, f);
    return r;
}

DiffForm DiffForm::operator-(const DiffForm& o) const {
    return *this + (-o);
}

DiffForm DiffForm::operator*(const QuadScalar& c) const {
    DiffForm r(dim_, degree_, d_);
    for (const auto& [idx, f] : terms_)
        r.add_term(idx, f * c);
    return r;
}

DiffForm DiffForm::operator*(const TrigScalar& f) const {
    DiffForm r(dim_, degree_, d_);
    for (const auto& [idx, g] : terms_)
        r.add_term(idx, g * f);
    return r;
}

bool DiffForm::operator==(const DiffForm& o) const {
    check_compatible(o);
    return degree_ == o.degree_ && terms_ == o.terms_;
}

DiffForm wedge(const DiffForm& x, const DiffForm& y) {
    x.check_compatible(y);
    DiffForm r(x.dim_, x.degree_ + y.degree_, x.d_);
    MultiIndex merged;
    for (const auto& [ix, fx] : x.terms_)
        for (const auto& [iy, fy] : y.terms_) {
            const int sign = merge_indices(ix, iy, merged);
            if (sign == 0)
                continue;
            TrigScalar coeff = fx * fy;
            r.add_term(merged, sign == 1 ? coeff : -coeff);
        }
    return r;
}

DiffForm exterior_d(const DiffForm& x) {
    DiffForm r(x.dim_, x.degree_ + 1, x.d_);
    MultiIndex merged;
    for (const auto& [idx, f] : x.terms_) {
        for (int j = 0; j < x.dim_; ++j) {
            TrigScalar df = f.partial(j);
            if (df.is_zero())
                continue;
            const MultiIndex single{j};
            const int sign = merge_indices(single, idx, merged);
            if (sign == 0)
                continue;
            r.add_term(merged, sign == 1 ? df : -df);
        }
    }
    return r;
}

DiffForm pullback(const AffineMap& h, const DiffForm& x) {
    if (h.target_dim() != x.dim())
        throw DimensionError("pullback: map target must be the form's ambient space");
    if (h.discriminant() != x.discriminant())
        throw FieldMismatchError("pullback over different fields");
    const int m = h.source_dim();
    const long d = x.discriminant();
    // Pull coordinate differentials back once: dx_i -> sum_j M_ij dt_j.
    std::vector<DiffForm> dcoord;
    dcoord.reserve(x.dim());
    for (int i = 0; i < x.dim(); ++i) {
        DiffForm w(m, 1, d);
        for (int j = 0; j < m; ++j) {
            const QuadScalar& entry = h.matrix()[i][j];
            if (!entry.is_zero())
                w = w + DiffForm::coordinate_differential(j, m, d) * TrigScalar::constant(entry, m);
        }
        dcoord.push_back(std::move(w));
    }
    DiffForm r(m, x.degree(), d);
    for (const auto& [idx, f] : x.terms()) {
        DiffForm part = DiffForm::from_function(f.substitute_affine(h.matrix(), h.phase_half_pi()));
        for (int i : idx)
            part = wedge(part, dcoord[i]);
        r = r + part;
    }
    return r;
}

DiffForm interior_product(const QuadVector& v, const DiffForm& x) {
    if (static_cast<int>(v.size()) != x.dim())
        throw DimensionError("interior product: vector length must equal ambient dimension");
    if (x.degree() == 0)
        return DiffForm(x.dim(), 0, x.discriminant());  // 0-form contracts to zero
    DiffForm r(x.dim(), x.degree() - 1, x.discriminant());
    for (const auto& [idx, f] : x.terms()) {
        for (size_t a = 0; a < idx.size(); ++a) {
            const QuadScalar& va = v[idx[a]];
            if (va.is_zero())
                continue;
            MultiIndex rest;
            rest.reserve(idx.size() - 1);
            for (size_t b = 0; b < idx.size(); ++b)
                if (b != a)
                    rest.push_back(idx[b]);
            TrigScalar coeff = f * va;
            r.add_term(rest, a % 2 == 0 ? coeff : -coeff);
        }
    }
    return r;
}

DiffForm lie_derivative(const QuadVector& v, const DiffForm& x) {
    if (x.degree() == 0)
        return interior_product(v, exterior_d(x));  // the d(i_v x) term is zero
    return interior_product(v, exterior_d(x)) + exterior_d(interior_product(v, x));
}

std::string DiffForm::str(const std::vector<std::string>& names) const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, f] : terms_) {
        if (!first)
            out << " + ";
        first = false;
        std::string coeff = f.str(names);
        const bool needs_parens = f.terms().size() > 1 ||
                                  coeff.find('+') != std::string::npos ||
                                  coeff.find('-', 1) != std::string::npos;
        if (idx.empty()) {
            out << coeff;
            continue;
        }
        if (coeff == "1")
            ;  // bare basis form
        else if (coeff == "-1")
            out << "-";
        else
            out << (needs_parens ? "(" + coeff + ")" : coeff) << "·";
        for (size_t a = 0; a < idx.size(); ++a)
            out << (a ? "∧" : "") << "d" << names.at(idx[a]);
    }
    return out.str();
}

}  // namespace leafspace
