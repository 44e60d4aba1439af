#ifndef LEAFSPACE_FORMS_HPP
#define LEAFSPACE_FORMS_HPP

#include <map>
#include <string>
#include <vector>

#include "leafspace/linalg.hpp"
#include "leafspace/trig.hpp"

namespace leafspace {

/// Strictly increasing multi-index of coordinate positions (0-based).
using MultiIndex = std::vector<int>;

/// Affine map t -> M t + (pi/2) c between Euclidean domains (or into a
/// torus read in coordinates). The phase vector is stored in units of
/// pi/2 so that every representable translation keeps cos/sin exact.
class AffineMap {
  public:
    AffineMap(int source_dim, int target_dim, QuadMatrix matrix, QuadVector phase_half_pi);

    static AffineMap identity(int dim, long d);
    /// The constant map onto (pi/2)·c.
    static AffineMap constant(int source_dim, QuadVector phase_half_pi);
    /// t -> t + (pi/2)·c on a fixed domain.
    static AffineMap translation(QuadVector phase_half_pi);
    /// (t, s) -> t + s·w : the leafwise deformation map on U x R.
    static AffineMap shear_by(const QuadVector& direction);
    /// (t, s) -> t : drops the trailing coordinate.
    static AffineMap drop_last(int source_dim, long d);

    int source_dim() const { return source_dim_; }
    int target_dim() const { return target_dim_; }
    long discriminant() const { return d_; }
    const QuadMatrix& matrix() const { return matrix_; }
    const QuadVector& phase_half_pi() const { return phase_; }

    /// this ∘ other (apply other first).
    AffineMap compose(const AffineMap& other) const;

    bool operator==(const AffineMap& o) const;
    bool operator!=(const AffineMap& o) const { return !(*this == o); }

    std::string str() const;

  private:
    int source_dim_, target_dim_;
    long d_;
    QuadMatrix matrix_;  // target_dim rows, source_dim columns
    QuadVector phase_;
};

/// Exterior form of fixed degree with trigonometric-polynomial
/// coefficients, in normal form: multi-indices strictly increasing, no
/// identically-zero coefficient stored. Degree may formally exceed the
/// ambient dimension, in which case the form is zero.
class DiffForm {
  public:
    DiffForm(int dim, int degree, long d);

    static DiffForm from_function(const TrigScalar& f);
    /// f · dx_{i1} ∧ ... ∧ dx_{ir}; the index list need not be sorted and
    /// contributes its permutation sign (zero on repeats).
    static DiffForm monomial(const TrigScalar& coeff, const MultiIndex& indices);
    /// The basis 1-form dx_j.
    static DiffForm coordinate_differential(int j, int dim, long d);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    long discriminant() const { return d_; }
    const std::map<MultiIndex, TrigScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient at a (sorted) multi-index; zero when absent.
    TrigScalar coefficient(const MultiIndex& index) const;

    DiffForm operator-() const;
    DiffForm operator+(const DiffForm& o) const;
    DiffForm operator-(const DiffForm& o) const;
    DiffForm operator*(const QuadScalar& c) const;
    DiffForm operator*(const TrigScalar& f) const;

    bool operator==(const DiffForm& o) const;
    bool operator!=(const DiffForm& o) const { return !(*this == o); }

    std::string str(const std::vector<std::string>& coord_names) const;

  private:
    friend DiffForm wedge(const DiffForm&, const DiffForm&);
    friend DiffForm exterior_d(const DiffForm&);
    friend DiffForm pullback(const AffineMap&, const DiffForm&);
    friend DiffForm interior_product(const QuadVector&, const DiffForm&);

    int dim_;
    int degree_;
    long d_;
    std::map<MultiIndex, TrigScalar> terms_;

    void add_term(const MultiIndex& sorted_index, const TrigScalar& coeff);
    void check_compatible(const DiffForm& o) const;
};

/// Graded exterior product; degree adds, signs by merge parity.
DiffForm wedge(const DiffForm& x, const DiffForm& y);

/// Exterior differential; satisfies d∘d = 0 exactly.
DiffForm exterior_d(const DiffForm& x);

/// h*x for an affine h into the ambient space of x: coefficients are
/// substituted, dx_i pulls back to the i-th row of the matrix.
DiffForm pullback(const AffineMap& h, const DiffForm& x);

/// Contraction with a constant vector field; a 0-form contracts to the
/// zero 0-form by convention.
DiffForm interior_product(const QuadVector& v, const DiffForm& x);

/// Lie derivative along a constant vector field via the Cartan formula
/// i_v∘d + d∘i_v.
DiffForm lie_derivative(const QuadVector& v, const DiffForm& x);

}  // namespace leafspace

#endif
