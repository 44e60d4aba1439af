#ifndef LEAFSPACE_FOLIATION_HPP
#define LEAFSPACE_FOLIATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "leafspace/forms.hpp"

namespace leafspace {

/// Constant-coefficient linear foliation of the torus R^n/(2πZ)^n: the
/// tangent distribution is spanned by v_1..v_p with entries in Q(sqrt(d)),
/// linearly independent, p < n.
class LinearFoliation {
  public:
    LinearFoliation(int torus_dim, std::vector<QuadVector> tangents);

    int torus_dim() const { return n_; }
    int leaf_dim() const { return static_cast<int>(tangents_.size()); }
    long discriminant() const { return d_; }
    const std::vector<QuadVector>& tangents() const { return tangents_; }

    /// Exact span-membership test over Q(sqrt(d)).
    bool contains(const QuadVector& w) const;

    std::string str() const;

  private:
    int n_;
    long d_;
    std::vector<QuadVector> tangents_;
};

/// Result of the basic-form test; when not basic, carries the offending
/// contraction as a witness.
struct BasicCheck {
    bool basic = false;
    int tangent_index = -1;           // which v_j failed
    bool from_differential = false;   // i_v(dω) rather than i_v(ω)
    std::optional<DiffForm> contraction;

    explicit operator bool() const { return basic; }
    std::string describe(const std::vector<std::string>& coord_names) const;
};

/// ω is basic iff i_v ω = 0 and i_v dω = 0 for every tangent vector v.
BasicCheck is_basic(const DiffForm& x, const LinearFoliation& foliation);

/// Exact basis of the degree-r forms with all coefficients in the single
/// Fourier mode k that satisfy both basic conditions. Empty whenever some
/// k·v_j ≠ 0 (the mode cannot carry a basic form).
std::vector<DiffForm> basic_mode_space(const LinearFoliation& foliation, const Frequency& mode,
                                       int degree);

/// H(y, s) = β(y) + s·w for a leafwise direction w, realized as an affine
/// map on the extended domain U x R; the homotopy parameter is the last
/// coordinate. H(·,0) = β and every path s ↦ H(y,s) is tangential.
class TangentialHomotopy {
  public:
    TangentialHomotopy(AffineMap base, QuadVector direction, const LinearFoliation& foliation);

    const AffineMap& base() const { return base_; }
    const QuadVector& direction() const { return direction_; }
    /// The extended map U x R -> torus.
    const AffineMap& extended() const { return extended_; }
    /// β + w, the time-1 end.
    AffineMap end_map() const;

  private:
    AffineMap base_;
    QuadVector direction_;
    AffineMap extended_;
};

/// Builds H from a base plot and a leaf vector; throws
/// std::invalid_argument("not a tangential deformation") when w is outside
/// the tangent span.
TangentialHomotopy tangential_homotopy(const AffineMap& base, const QuadVector& direction,
                                       const LinearFoliation& foliation);

struct HomotopyConstancy {
    bool constant = false;
    std::string reason;                 // which dependence appeared
    std::optional<DiffForm> pulled_back;

    explicit operator bool() const { return constant; }
};

/// Pulls x back along the extended map and reports whether the result is
/// literally independent of the homotopy parameter: no differential in it
/// and no coefficient depending on it. Holds for every basic x.
HomotopyConstancy homotopy_pullback_constant(const TangentialHomotopy& homotopy,
                                             const DiffForm& x);

}  // namespace leafspace

#endif
