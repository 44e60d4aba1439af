#ifndef LEAFSPACE_RANDOM_HPP
#define LEAFSPACE_RANDOM_HPP

#include <cstdint>
#include <random>

#include "leafspace/foliation.hpp"
#include "leafspace/forms.hpp"

namespace leafspace {

/// Deterministic generator for the randomized verification suites. Draws
/// are derived from the raw engine stream only (no distribution objects),
/// so a fixed seed reproduces the same inputs everywhere.
class RandomSource {
  public:
    explicit RandomSource(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }
    /// Uniform-ish integer in [lo, hi], deterministic across platforms.
    long uniform(long lo, long hi);

    Rational rational(long max_abs_num = 3, long max_den = 3);
    QuadScalar quad(long d);
    QuadScalar quad_nonzero(long d);
    QuadVector quad_vector(int dim, long d);
    Frequency integer_frequency(int dim, long d, int box);
    TrigScalar trig_polynomial(int dim, long d, int max_terms, int box);
    DiffForm form(int dim, int degree, long d, int max_terms, int box);
    /// Random element of the basic subcomplex in one degree, assembled
    /// from the per-mode basic bases with |k|_∞ ≤ box. May be zero.
    DiffForm basic_form(const LinearFoliation& foliation, int degree, int box);
    /// Random leafwise vector (combination of the tangent frame).
    QuadVector leaf_vector(const LinearFoliation& foliation);
    /// Random affine plot of the torus with small integer matrix and
    /// quarter-lattice phase.
    AffineMap affine_plot(int source_dim, int torus_dim, long d);

  private:
    std::mt19937_64 engine_;
};

}  // namespace leafspace

#endif
