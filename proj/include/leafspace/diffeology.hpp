#ifndef LEAFSPACE_DIFFEOLOGY_HPP
#define LEAFSPACE_DIFFEOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "leafspace/foliation.hpp"
#include "leafspace/forms.hpp"

namespace leafspace {

enum class TargetKind { Torus, Quotient };

/// An affine plot of the torus R^n/(2πZ)^n, or of the leaf space of a
/// linear foliation (the projection of an affine map). Quotient plots
/// always carry at least one explicit lift; the first declared lift is
/// canonical. Alternate lifts of a quotient plot must differ from the
/// canonical one by a constant leaf translation (plus a lattice vector);
/// that is the only lift ambiguity the affine model produces.
class Plot {
  public:
    static Plot torus_plot(AffineMap body);
    /// π∘lift with the lift stored.
    static Plot quotient_plot(AffineMap lift, const LinearFoliation& foliation);

    TargetKind kind() const { return kind_; }
    int torus_dim() const { return lifts_[0].target_dim(); }
    int domain_dim() const { return lifts_[0].source_dim(); }
    const AffineMap& lift() const { return lifts_[0]; }
    const std::vector<AffineMap>& lifts() const { return lifts_; }

    /// Declares another lift of the same quotient plot; validated against
    /// the canonical one.
    void add_lift(const AffineMap& lift, const LinearFoliation& foliation);

  private:
    Plot(TargetKind kind, AffineMap lift) : kind_(kind), lifts_{std::move(lift)} {}

    TargetKind kind_;
    std::vector<AffineMap> lifts_;
};

/// Spec operation: the plot π∘β of the leaf space, with β stored.
Plot make_quotient_plot(const AffineMap& lift, const LinearFoliation& foliation);

/// Declares that gen[base] ∘ map = gen[factored] as plots; the witness
/// map goes from the factored generator's domain into the base
/// generator's. A compatible form family must satisfy
///     θ[factored] = pullback(map, θ[base]).
struct RelationWitness {
    size_t factored;
    size_t base;
    AffineMap map;
};

/// Finitely presented diffeology over a torus or over the leaf space of a
/// linear foliation: generating plots plus relation witnesses. Every
/// witness is verified on construction: exactly for torus targets, up to
/// a constant leaf translation and a lattice vector for quotient targets.
class GeneratedDiffeology {
  public:
    GeneratedDiffeology(TargetKind kind, int torus_dim, long d,
                        std::optional<LinearFoliation> foliation, std::vector<Plot> generators,
                        std::vector<RelationWitness> witnesses);

    TargetKind kind() const { return kind_; }
    int torus_dim() const { return torus_dim_; }
    long discriminant() const { return d_; }
    const std::optional<LinearFoliation>& foliation() const { return foliation_; }
    const std::vector<Plot>& generators() const { return generators_; }
    const std::vector<RelationWitness>& witnesses() const { return witnesses_; }

    /// Index of the covering generator (identity lift R^n -> T^n).
    size_t covering_index() const;

  private:
    TargetKind kind_;
    int torus_dim_;
    long d_;
    std::optional<LinearFoliation> foliation_;
    std::vector<Plot> generators_;
    std::vector<RelationWitness> witnesses_;
};

/// Do the affine maps x and y define the same plot of the target? For a
/// torus target they may differ by a 2π lattice vector; for a quotient
/// target additionally by a leafwise affine discrepancy (linear part
/// columns tangent, constant part tangent up to lattice).
bool same_plot(const AffineMap& x, const AffineMap& y,
               const std::optional<LinearFoliation>& foliation);

/// The standard presentation of the torus: covering generator, lattice
/// translation witnesses, and (n >= 2) one skew sample plot, (n == 1) a
/// doubled-speed sample plot.
GeneratedDiffeology standard_torus_diffeology(int n, long d);
/// As above plus one leaf-extended generator per tangent vector, each
/// witnessed by its defining shear.
GeneratedDiffeology standard_torus_diffeology(const LinearFoliation& foliation);
/// The standard presentation of the leaf space: projections of the
/// foliated torus generators; each leaf-extended generator carries both
/// the shear witness and the projection witness, which together encode
/// leafwise invariance.
GeneratedDiffeology standard_quotient_diffeology(const LinearFoliation& foliation);

/// A compatible family of ordinary forms, one per generator.
class DForm {
  public:
    DForm(int degree, std::vector<DiffForm> components);

    int degree() const { return degree_; }
    const std::vector<DiffForm>& components() const { return components_; }
    const DiffForm& component(size_t i) const { return components_.at(i); }
    bool is_zero() const;

    bool operator==(const DForm& o) const;
    bool operator!=(const DForm& o) const { return !(*this == o); }

    DForm operator+(const DForm& o) const;
    DForm operator-(const DForm& o) const;

    std::string str() const;

  private:
    int degree_;
    std::vector<DiffForm> components_;
};

DForm zero_dform(const GeneratedDiffeology& diffeology, int degree);

struct CompatibilityCheck {
    bool ok = false;
    size_t witness_index = 0;
    std::optional<DiffForm> expected;  // pullback through the witness
    std::optional<DiffForm> found;     // the stored component

    explicit operator bool() const { return ok; }
    std::string describe() const;
};

/// Verifies every declared witness equation exactly; reports the first
/// violation.
CompatibilityCheck check_dform(const DForm& theta, const GeneratedDiffeology& diffeology);

/// Componentwise exterior differential; the result is compatible again
/// (asserted).
DForm exterior_d(const DForm& theta, const GeneratedDiffeology& diffeology);

/// A differentiable map between two finitely presented diffeologies,
/// recorded by how it factors each source generator through a target
/// generator: f∘α_i = α_{target(i)} ∘ connector(i).
class DiffeoMorphism {
  public:
    struct Match {
        size_t target_generator;
        AffineMap connector;
    };

    static DiffeoMorphism identity(const GeneratedDiffeology& diffeology);
    /// The leaf projection π, from the foliated torus presentation to the
    /// quotient presentation (generators matched by equal lifts).
    static DiffeoMorphism projection(const GeneratedDiffeology& torus_side,
                                     const GeneratedDiffeology& quotient_side);
    /// The constant map onto the point (π/2)·point of the target torus.
    static DiffeoMorphism constant_map(const GeneratedDiffeology& source,
                                       const GeneratedDiffeology& target, QuadVector point);
    /// Declares matches for the torus-level affine map and validates
    /// each of them; throws "plot not generated" when a source generator
    /// has no declared match.
    static DiffeoMorphism declare(const GeneratedDiffeology& source,
                                  const GeneratedDiffeology& target, const AffineMap& torus_map,
                                  std::vector<std::optional<Match>> matches);

    const std::vector<Match>& matches() const { return matches_; }

  private:
    explicit DiffeoMorphism(std::vector<Match> matches) : matches_(std::move(matches)) {}
    std::vector<Match> matches_;
};

/// (f*θ)_α = θ_{f∘α}, realized through the declared matches.
DForm dform_pullback(const DiffeoMorphism& f, const DForm& theta,
                     const GeneratedDiffeology& source, const GeneratedDiffeology& target);

/// Restriction of a global torus form to every generating plot.
DForm induce_dform(const DiffForm& omega, const GeneratedDiffeology& diffeology);

/// Reconstructs the global torus form from the covering component,
/// checking 2π-periodicity (all frequencies integer).
DiffForm glue_dform(const DForm& theta, const GeneratedDiffeology& diffeology);

/// Pullback along the leaf projection: the component at a torus
/// generator β is the quotient component at π∘β. Injective: a zero
/// result forces a zero argument.
DForm projection_pullback(const DForm& theta, const GeneratedDiffeology& torus_side,
                          const GeneratedDiffeology& quotient_side);

/// Composite comparison morphism into basic forms (glue after projection
/// pullback); the result is asserted basic.
DiffForm to_basic_form(const DForm& theta, const GeneratedDiffeology& torus_side,
                       const GeneratedDiffeology& quotient_side);

/// Certifies that β*ω = (β + w)*ω by pulling ω back along the tangential
/// homotopy and checking independence of the homotopy parameter.
HomotopyConstancy lift_independent(const DiffForm& omega, const AffineMap& base,
                                   const QuadVector& direction, const LinearFoliation& foliation);

/// Inverse comparison: a basic form ω induces the family β ↦ β*ω over the
/// quotient presentation. Validates basicness, runs the lift-independence
/// certificate for every tangent direction and every declared alternate
/// lift, and asserts compatibility of the result.
DForm dform_from_basic(const DiffForm& omega, const LinearFoliation& foliation,
                       const GeneratedDiffeology& quotient_side);

}  // namespace leafspace

#endif
