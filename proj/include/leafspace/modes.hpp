#ifndef LEAFSPACE_MODES_HPP
#define LEAFSPACE_MODES_HPP

#include <vector>

#include "leafspace/forms.hpp"

namespace leafspace {

/// Canonical-sign integer modes with |k|_∞ ≤ box, lexicographic order.
std::vector<Frequency> enumerate_modes(int torus_dim, long d, int box);

/// All strictly increasing multi-indices of length r in {0..n-1}, lex order.
std::vector<MultiIndex> multi_indices(int n, int r);

/// Exact coordinates for the space of degree-r forms whose coefficients
/// live in one Fourier mode: one coordinate per multi-index for the zero
/// mode (constants), a (cos, sin) pair per multi-index otherwise.
class ModeCoordinates {
  public:
    ModeCoordinates(int n, long d, const Frequency& mode, int degree);

    int ambient_dim() const { return n_; }
    int degree() const { return degree_; }
    const Frequency& mode() const { return mode_; }
    bool zero_mode() const { return zero_mode_; }
    const std::vector<MultiIndex>& indices() const { return indices_; }
    size_t dim() const { return (zero_mode_ ? 1 : 2) * indices_.size(); }

    /// Coordinates of a form all of whose coefficients are in this mode;
    /// throws std::logic_error on foreign frequencies.
    QuadVector coordinates(const DiffForm& x) const;
    DiffForm form(const QuadVector& coords) const;
    /// Basis form for one coordinate.
    DiffForm unit(size_t i) const;

  private:
    int n_;
    long d_;
    Frequency mode_;
    int degree_;
    bool zero_mode_;
    std::vector<MultiIndex> indices_;
};

}  // namespace leafspace

#endif
