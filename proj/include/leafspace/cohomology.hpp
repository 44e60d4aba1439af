#ifndef LEAFSPACE_COHOMOLOGY_HPP
#define LEAFSPACE_COHOMOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "leafspace/diffeology.hpp"
#include "leafspace/modes.hpp"

#include "json.hpp"

namespace leafspace {

/// The finite subcomplex of forms whose coefficients live in one integer
/// Fourier mode, with exact bases per degree and the matrices of d between
/// them. The exterior differential preserves modes, so cohomology is the
/// direct sum of these complexes over modes; a truncation box only bounds
/// which modes are enumerated, it introduces no error.
struct ModeComplex {
    Frequency mode;
    int torus_dim = 0;
    long d = 1;
    std::vector<std::vector<DiffForm>> bases;  // degree 0..n
    std::vector<QuadMatrix> differentials;     // degree 0..n-1, next basis × this basis

    std::vector<size_t> dims() const;
};

/// Bases are the full mode coordinate spaces, or the basic subspaces when
/// a foliation constraint is given; d∘d = 0 is asserted on the built
/// matrices.
ModeComplex build_mode_complex(int torus_dim, const Frequency& mode,
                               const std::optional<LinearFoliation>& constraint);

/// rank H^r = dim ker d_r − rank d_{r−1}, exact.
std::vector<int> betti_numbers(const ModeComplex& complex);

struct BettiTable {
    std::string complex_kind;  // "deRham" | "basic" | "quotient"
    int truncation = 0;
    std::vector<int> ranks;    // degree 0..n
    std::vector<std::vector<long>> modes_used;
    std::string foliation_desc;

    nlohmann::json to_json() const;
    std::string table() const;
    bool operator==(const BettiTable& o) const { return ranks == o.ranks; }
};

BettiTable de_rham_betti(int torus_dim, long d, int truncation);
BettiTable basic_betti(const LinearFoliation& foliation, int truncation);

/// Cohomology of the compatible-family complex over a quotient
/// presentation, computed mode-wise by solving the witness constraints on
/// the covering component. Requires the covering generator, lattice
/// periodicity witnesses for every coordinate, and witness pairs whose
/// discrepancies span every tangent direction; errors list what is
/// missing.
BettiTable quotient_betti(const GeneratedDiffeology& quotient_side, int truncation);

}  // namespace leafspace

#endif
