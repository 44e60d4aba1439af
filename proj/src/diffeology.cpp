#include "leafspace/diffeology.hpp"

#include <sstream>

namespace leafspace {

namespace {

// Functionals vanishing exactly on the leaf span (all of (R^n)* when no
// foliation is given). Rows of the returned matrix.
QuadMatrix leaf_annihilator(int n, long d, const std::optional<LinearFoliation>& foliation) {
    if (!foliation)
        return identity_matrix(n, d);
    return nullspace(foliation->tangents(), n, d);
}

bool integer_frequencies(const DiffForm& x) {
    for (const auto& [idx, f] : x.terms())
        for (const auto& [k, t] : f.terms())
            if (!k.is_integer())
                return false;
    return true;
}

}  // namespace

bool same_plot(const AffineMap& x, const AffineMap& y,
               const std::optional<LinearFoliation>& foliation) {
    if (x.source_dim() != y.source_dim() || x.target_dim() != y.target_dim() ||
        x.discriminant() != y.discriminant())
        return false;
    const int n = x.target_dim();
    const long d = x.discriminant();
    const QuadMatrix ann = leaf_annihilator(n, d, foliation);

    // Linear parts must agree up to leafwise columns.
    for (int j = 0; j < x.source_dim(); ++j) {
        QuadVector column;
        column.reserve(n);
        for (int i = 0; i < n; ++i)
            column.push_back(x.matrix()[i][j] - y.matrix()[i][j]);
        for (const auto& functional : ann)
            if (!dot(functional, column).is_zero())
                return false;
    }

    // Constant parts may differ by a leaf vector plus a 2π lattice vector:
    // with phases in π/2 units,  δ0 - 4μ ∈ span(leaf)  for some μ ∈ Z^n,
    // i.e. (4·ann) μ = ann·δ0 must have an integer solution (split into
    // rational and radical components).
    QuadVector delta = x.phase_half_pi() - y.phase_half_pi();
    const size_t m = ann.size();
    QuadMatrix a = zero_matrix(2 * m, n, d);
    QuadVector b(2 * m, QuadScalar::zero(d));
    for (size_t r = 0; r < m; ++r) {
        const QuadScalar rhs = dot(ann[r], delta);
        b[r] = QuadScalar::from_rational(rhs.rational_part(), d);
        b[m + r] = QuadScalar::from_rational(rhs.radical_part(), d);
        for (int i = 0; i < n; ++i) {
            a[r][i] = QuadScalar::from_rational(4 * ann[r][i].rational_part(), d);
            a[m + r][i] = QuadScalar::from_rational(4 * ann[r][i].radical_part(), d);
        }
    }
    return has_integer_solution(a, b);
}

Plot Plot::torus_plot(AffineMap body) {
    return Plot(TargetKind::Torus, std::move(body));
}

Plot Plot::quotient_plot(AffineMap lift, const LinearFoliation& foliation) {
    if (lift.target_dim() != foliation.torus_dim())
        throw DimensionError("quotient plot lift must land in the foliated torus");
    return Plot(TargetKind::Quotient, std::move(lift));
}

Plot make_quotient_plot(const AffineMap& lift, const LinearFoliation& foliation) {
    return Plot::quotient_plot(lift, foliation);
}

void Plot::add_lift(const AffineMap& lift, const LinearFoliation& foliation) {
    if (kind_ != TargetKind::Quotient)
        throw std::invalid_argument("only quotient plots carry alternate lifts");
    if (lift.matrix() != lifts_[0].matrix())
        throw std::invalid_argument(
            "alternate lift must differ from the canonical lift by a constant leaf translation");
    if (!same_plot(lift, lifts_[0], foliation))
        throw std::invalid_argument("declared lift does not project to the same plot");
    lifts_.push_back(lift);
}

GeneratedDiffeology::GeneratedDiffeology(TargetKind kind, int torus_dim, long d,
                                         std::optional<LinearFoliation> foliation,
                                         std::vector<Plot> generators,
                                         std::vector<RelationWitness> witnesses)
    : kind_(kind), torus_dim_(torus_dim), d_(d), foliation_(std::move(foliation)),
      generators_(std::move(generators)), witnesses_(std::move(witnesses)) {
    if (kind_ == TargetKind::Quotient && !foliation_)
        throw std::invalid_argument("a quotient diffeology needs its foliation");
    if (foliation_ && foliation_->torus_dim() != torus_dim_)
        throw DimensionError("foliation torus dimension mismatch");
    if (generators_.empty())
        throw std::invalid_argument("a presentation needs at least one generator");
    for (const Plot& g : generators_) {
        if (g.kind() != kind_)
            throw std::invalid_argument("generator target kind does not match the diffeology");
        if (g.torus_dim() != torus_dim_ || g.lift().discriminant() != d_)
            throw DimensionError("generator dimensions or field mismatch");
    }
    const std::optional<LinearFoliation> slack =
        kind_ == TargetKind::Quotient ? foliation_ : std::nullopt;
    for (size_t w = 0; w < witnesses_.size(); ++w) {
        const RelationWitness& wit = witnesses_[w];
        if (wit.factored >= generators_.size() || wit.base >= generators_.size())
            throw std::invalid_argument("witness " + std::to_string(w) +
                                        " references a missing generator");
        const AffineMap& h = wit.map;
        const Plot& factored = generators_[wit.factored];
        const Plot& base = generators_[wit.base];
        if (h.source_dim() != factored.domain_dim() || h.target_dim() != base.domain_dim())
            throw DimensionError("witness " + std::to_string(w) +
                                 " does not connect its generators' domains");
        if (!same_plot(base.lift().compose(h), factored.lift(), slack))
            throw std::invalid_argument("witness " + std::to_string(w) +
                                        " does not intertwine its generators");
    }
}

size_t GeneratedDiffeology::covering_index() const {
    const AffineMap id = AffineMap::identity(torus_dim_, d_);
    for (size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].lift() == id)
            return i;
    throw std::invalid_argument("presentation has no covering generator");
}

namespace {

QuadVector unit_lattice_phase(int i, int n, long d) {
    QuadVector c(n, QuadScalar::zero(d));
    c[i] = QuadScalar(4, d);  // 2π in units of π/2
    return c;
}

std::vector<RelationWitness> lattice_witnesses(size_t covering, int n, long d) {
    std::vector<RelationWitness> w;
    for (int i = 0; i < n; ++i)
        w.push_back({covering, covering, AffineMap::translation(unit_lattice_phase(i, n, d))});
    return w;
}

AffineMap sample_plot_map(int n, long d) {
    if (n == 1) {
        QuadMatrix m = {{QuadScalar(2, d)}};
        return AffineMap(1, 1, std::move(m), QuadVector(1, QuadScalar::zero(d)));
    }
    // A line t ↦ (t, √d t, 0, ...) with irrational slope when d > 1.
    QuadMatrix m = zero_matrix(n, 1, d);
    m[0][0] = QuadScalar::one(d);
    m[1][0] = QuadScalar::sqrt_d(d);
    return AffineMap(1, n, std::move(m), QuadVector(n, QuadScalar::zero(d)));
}

}  // namespace

GeneratedDiffeology standard_torus_diffeology(int n, long d) {
    std::vector<Plot> gens;
    gens.push_back(Plot::torus_plot(AffineMap::identity(n, d)));
    const AffineMap sample = sample_plot_map(n, d);
    gens.push_back(Plot::torus_plot(sample));
    std::vector<RelationWitness> wits = lattice_witnesses(0, n, d);
    wits.push_back({1, 0, sample});
    return GeneratedDiffeology(TargetKind::Torus, n, d, std::nullopt, std::move(gens),
                               std::move(wits));
}

GeneratedDiffeology standard_torus_diffeology(const LinearFoliation& foliation) {
    const int n = foliation.torus_dim();
    const long d = foliation.discriminant();
    std::vector<Plot> gens;
    gens.push_back(Plot::torus_plot(AffineMap::identity(n, d)));
    std::vector<RelationWitness> wits = lattice_witnesses(0, n, d);
    for (const QuadVector& v : foliation.tangents()) {
        const AffineMap shear = AffineMap::shear_by(v);
        gens.push_back(Plot::torus_plot(shear));
        wits.push_back({gens.size() - 1, 0, shear});
    }
    return GeneratedDiffeology(TargetKind::Torus, n, d, foliation, std::move(gens),
                               std::move(wits));
}

GeneratedDiffeology standard_quotient_diffeology(const LinearFoliation& foliation) {
    const int n = foliation.torus_dim();
    const long d = foliation.discriminant();
    std::vector<Plot> gens;
    gens.push_back(Plot::quotient_plot(AffineMap::identity(n, d), foliation));
    std::vector<RelationWitness> wits = lattice_witnesses(0, n, d);
    for (const QuadVector& v : foliation.tangents()) {
        const AffineMap shear = AffineMap::shear_by(v);
        gens.push_back(Plot::quotient_plot(shear, foliation));
        // Both factorizations of the leaf-extended plot: through the shear
        // and through the projection that forgets the leaf parameter.
        wits.push_back({gens.size() - 1, 0, shear});
        wits.push_back({gens.size() - 1, 0, AffineMap::drop_last(n + 1, d)});
    }
    return GeneratedDiffeology(TargetKind::Quotient, n, d, foliation, std::move(gens),
                               std::move(wits));
}

DForm::DForm(int degree, std::vector<DiffForm> components)
    : degree_(degree), components_(std::move(components)) {
    if (degree_ < 0)
        throw DimensionError("negative form degree");
    if (components_.empty())
        throw std::invalid_argument("a plot family needs at least one component");
    for (const DiffForm& c : components_)
        if (c.degree() != degree_)
            throw DimensionError("every component must have the family's degree");
}

bool DForm::is_zero() const {
    for (const DiffForm& c : components_)
        if (!c.is_zero())
            return false;
    return true;
}

bool DForm::operator==(const DForm& o) const {
    if (degree_ != o.degree_ || components_.size() != o.components_.size())
        return false;
    for (size_t i = 0; i < components_.size(); ++i)
        if (components_[i] != o.components_[i])
            return false;
    return true;
}

DForm DForm::operator+(const DForm& o) const {
    if (components_.size() != o.components_.size())
        throw DimensionError("plot families over different presentations");
    std::vector<DiffForm> sum;
    sum.reserve(components_.size());
    for (size_t i = 0; i < components_.size(); ++i)
        sum.push_back(components_[i] + o.components_[i]);
    return DForm(degree_, std::move(sum));
}

DForm DForm::operator-(const DForm& o) const {
    if (components_.size() != o.components_.size())
        throw DimensionError("plot families over different presentations");
    std::vector<DiffForm> diff;
    diff.reserve(components_.size());
    for (size_t i = 0; i < components_.size(); ++i)
        diff.push_back(components_[i] - o.components_[i]);
    return DForm(degree_, std::move(diff));
}

std::string DForm::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < components_.size(); ++i) {
        if (i)
            out << "; ";
        out << "θ[" << i << "] = " << components_[i].str(coord_names(components_[i].dim()));
    }
    return out.str();
}

DForm zero_dform(const GeneratedDiffeology& diffeology, int degree) {
    std::vector<DiffForm> comps;
    comps.reserve(diffeology.generators().size());
    for (const Plot& g : diffeology.generators())
        comps.emplace_back(g.domain_dim(), degree, diffeology.discriminant());
    return DForm(degree, std::move(comps));
}

std::string CompatibilityCheck::describe() const {
    if (ok)
        return "compatible";
    std::ostringstream out;
    out << "witness " << witness_index << " violated: expected "
        << (expected ? expected->str(coord_names(expected->dim())) : std::string("?")) << ", found "
        << (found ? found->str(coord_names(found->dim())) : std::string("?"));
    return out.str();
}

CompatibilityCheck check_dform(const DForm& theta, const GeneratedDiffeology& diffeology) {
    if (theta.components().size() != diffeology.generators().size())
        throw DimensionError("family does not assign a form to every generator");
    for (size_t i = 0; i < theta.components().size(); ++i)
        if (theta.components()[i].dim() != diffeology.generators()[i].domain_dim())
            throw DimensionError("component " + std::to_string(i) +
                                 " lives on the wrong domain");
    for (size_t w = 0; w < diffeology.witnesses().size(); ++w) {
        const RelationWitness& wit = diffeology.witnesses()[w];
        DiffForm expected = pullback(wit.map, theta.component(wit.base));
        const DiffForm& found = theta.component(wit.factored);
        if (expected != found)
            return {false, w, std::move(expected), found};
    }
    return {true, 0, std::nullopt, std::nullopt};
}

DForm exterior_d(const DForm& theta, const GeneratedDiffeology& diffeology) {
    if (CompatibilityCheck in = check_dform(theta, diffeology); !in)
        throw std::invalid_argument("differential of an incompatible family: " + in.describe());
    std::vector<DiffForm> comps;
    comps.reserve(theta.components().size());
    for (const DiffForm& c : theta.components())
        comps.push_back(exterior_d(c));
    DForm result(theta.degree() + 1, std::move(comps));
    if (CompatibilityCheck out = check_dform(result, diffeology); !out)
        throw std::logic_error("differential broke compatibility: " + out.describe());
    return result;
}

DiffeoMorphism DiffeoMorphism::identity(const GeneratedDiffeology& diffeology) {
    std::vector<Match> matches;
    for (size_t i = 0; i < diffeology.generators().size(); ++i)
        matches.push_back({i, AffineMap::identity(diffeology.generators()[i].domain_dim(),
                                                  diffeology.discriminant())});
    return DiffeoMorphism(std::move(matches));
}

DiffeoMorphism DiffeoMorphism::projection(const GeneratedDiffeology& torus_side,
                                          const GeneratedDiffeology& quotient_side) {
    if (torus_side.kind() != TargetKind::Torus || quotient_side.kind() != TargetKind::Quotient)
        throw std::invalid_argument("projection goes from a torus presentation to a quotient one");
    if (torus_side.torus_dim() != quotient_side.torus_dim())
        throw DimensionError("projection: torus dimensions differ");
    std::vector<Match> matches;
    for (size_t i = 0; i < torus_side.generators().size(); ++i) {
        const AffineMap& lift = torus_side.generators()[i].lift();
        bool found = false;
        for (size_t j = 0; j < quotient_side.generators().size(); ++j) {
            if (quotient_side.generators()[j].lift() == lift) {
                matches.push_back(
                    {j, AffineMap::identity(lift.source_dim(), lift.discriminant())});
                found = true;
                break;
            }
        }
        if (!found)
            throw std::invalid_argument("plot not generated: torus generator " +
                                        std::to_string(i) +
                                        " has no matching quotient generator");
    }
    return DiffeoMorphism(std::move(matches));
}

DiffeoMorphism DiffeoMorphism::constant_map(const GeneratedDiffeology& source,
                                            const GeneratedDiffeology& target, QuadVector point) {
    if (static_cast<int>(point.size()) != target.torus_dim())
        throw DimensionError("constant map: point dimension mismatch");
    const size_t covering = target.covering_index();
    std::vector<Match> matches;
    for (const Plot& g : source.generators())
        matches.push_back({covering, AffineMap::constant(g.domain_dim(), point)});
    return DiffeoMorphism(std::move(matches));
}

DiffeoMorphism DiffeoMorphism::declare(const GeneratedDiffeology& source,
                                       const GeneratedDiffeology& target,
                                       const AffineMap& torus_map,
                                       std::vector<std::optional<Match>> matches) {
    if (matches.size() != source.generators().size())
        throw std::invalid_argument("declare: one match per source generator required");
    const std::optional<LinearFoliation> slack =
        target.kind() == TargetKind::Quotient ? target.foliation() : std::nullopt;
    std::vector<Match> checked;
    for (size_t i = 0; i < matches.size(); ++i) {
        if (!matches[i])
            throw std::invalid_argument("plot not generated: source generator " +
                                        std::to_string(i) + " has no declared factorization");
        const Match& m = *matches[i];
        const AffineMap through =
            target.generators().at(m.target_generator).lift().compose(m.connector);
        const AffineMap composed = torus_map.compose(source.generators()[i].lift());
        if (!same_plot(through, composed, slack))
            throw std::invalid_argument("declared factorization of source generator " +
                                        std::to_string(i) + " does not reproduce the composite");
        checked.push_back(m);
    }
    return DiffeoMorphism(std::move(checked));
}

DForm dform_pullback(const DiffeoMorphism& f, const DForm& theta,
                     const GeneratedDiffeology& source, const GeneratedDiffeology& target) {
    if (theta.components().size() != target.generators().size())
        throw DimensionError("family does not match the target presentation");
    std::vector<DiffForm> comps;
    comps.reserve(f.matches().size());
    for (const DiffeoMorphism::Match& m : f.matches())
        comps.push_back(pullback(m.connector, theta.component(m.target_generator)));
    DForm result(theta.degree(), std::move(comps));
    if (CompatibilityCheck chk = check_dform(result, source); !chk)
        throw std::logic_error("pullback family is incompatible: " + chk.describe());
    return result;
}

DForm induce_dform(const DiffForm& omega, const GeneratedDiffeology& diffeology) {
    if (diffeology.kind() != TargetKind::Torus)
        throw std::invalid_argument("global forms restrict over a torus presentation");
    if (omega.dim() != diffeology.torus_dim())
        throw DimensionError("form dimension does not match the torus");
    if (!integer_frequencies(omega))
        throw std::invalid_argument("form is not defined on the torus (non-integer frequency)");
    std::vector<DiffForm> comps;
    comps.reserve(diffeology.generators().size());
    for (const Plot& g : diffeology.generators())
        comps.push_back(pullback(g.lift(), omega));
    return DForm(omega.degree(), std::move(comps));
}

DiffForm glue_dform(const DForm& theta, const GeneratedDiffeology& diffeology) {
    if (diffeology.kind() != TargetKind::Torus)
        throw std::invalid_argument("gluing reads a torus presentation");
    const DiffForm& covering = theta.component(diffeology.covering_index());
    if (!integer_frequencies(covering))
        throw std::invalid_argument(
            "covering component is not 2π-periodic (non-integer frequency); cannot glue");
    return covering;
}

DForm projection_pullback(const DForm& theta, const GeneratedDiffeology& torus_side,
                          const GeneratedDiffeology& quotient_side) {
    return dform_pullback(DiffeoMorphism::projection(torus_side, quotient_side), theta, torus_side,
                          quotient_side);
}

DiffForm to_basic_form(const DForm& theta, const GeneratedDiffeology& torus_side,
                       const GeneratedDiffeology& quotient_side) {
    DiffForm glued = glue_dform(projection_pullback(theta, torus_side, quotient_side), torus_side);
    const LinearFoliation& foliation = *quotient_side.foliation();
    if (BasicCheck chk = is_basic(glued, foliation); !chk)
        throw std::logic_error("comparison image is not basic: " +
                               chk.describe(coord_names(glued.dim(), "θ")));
    return glued;
}

HomotopyConstancy lift_independent(const DiffForm& omega, const AffineMap& base,
                                   const QuadVector& direction,
                                   const LinearFoliation& foliation) {
    return homotopy_pullback_constant(tangential_homotopy(base, direction, foliation), omega);
}

DForm dform_from_basic(const DiffForm& omega, const LinearFoliation& foliation,
                       const GeneratedDiffeology& quotient_side) {
    if (quotient_side.kind() != TargetKind::Quotient)
        throw std::invalid_argument("the comparison inverse targets a quotient presentation");
    if (omega.dim() != foliation.torus_dim())
        throw DimensionError("form and foliation live on different tori");
    if (!integer_frequencies(omega))
        throw std::invalid_argument("form is not defined on the torus (non-integer frequency)");
    if (BasicCheck chk = is_basic(omega, foliation); !chk)
        throw std::invalid_argument("form is not basic: " +
                                    chk.describe(coord_names(omega.dim(), "θ")));

    const size_t covering = quotient_side.covering_index();
    const AffineMap& covering_lift = quotient_side.generators()[covering].lift();
    for (const QuadVector& v : foliation.tangents())
        if (HomotopyConstancy c = lift_independent(omega, covering_lift, v, foliation); !c)
            throw std::logic_error("lift independence failed along a tangent direction: " +
                                   c.reason);

    std::vector<DiffForm> comps;
    comps.reserve(quotient_side.generators().size());
    for (const Plot& g : quotient_side.generators()) {
        comps.push_back(pullback(g.lift(), omega));
        // Alternate lifts differ by a constant leaf translation plus a
        // lattice vector; certify independence along the leaf part.
        for (size_t a = 1; a < g.lifts().size(); ++a) {
            const QuadVector delta = g.lifts()[a].phase_half_pi() - g.lift().phase_half_pi();
            const QuadMatrix ann =
                leaf_annihilator(omega.dim(), omega.discriminant(), foliation);
            const size_t m = ann.size();
            const long d = omega.discriminant();
            QuadMatrix sys = zero_matrix(2 * m, omega.dim(), d);
            QuadVector rhs(2 * m, QuadScalar::zero(d));
            for (size_t r = 0; r < m; ++r) {
                const QuadScalar value = dot(ann[r], delta);
                rhs[r] = QuadScalar::from_rational(value.rational_part(), d);
                rhs[m + r] = QuadScalar::from_rational(value.radical_part(), d);
                for (int i = 0; i < omega.dim(); ++i) {
                    sys[r][i] = QuadScalar::from_rational(4 * ann[r][i].rational_part(), d);
                    sys[m + r][i] = QuadScalar::from_rational(4 * ann[r][i].radical_part(), d);
                }
            }
            const auto lattice = integer_solution(sys, rhs);
            if (!lattice)
                throw std::logic_error("declared alternate lift is not reachable");
            QuadVector leaf_part = delta;
            for (int i = 0; i < omega.dim(); ++i)
                leaf_part[i] -= QuadScalar::from_rational(Rational(4 * (*lattice)[i]), d);
            if (HomotopyConstancy c = lift_independent(omega, g.lift(), leaf_part, foliation); !c)
                throw std::logic_error("lift independence failed for a declared alternate lift: " +
                                       c.reason);
        }
    }
    DForm result(omega.degree(), std::move(comps));
    if (CompatibilityCheck chk = check_dform(result, quotient_side); !chk)
        throw std::logic_error("induced family is incompatible: " + chk.describe());
    return result;
}

}  // namespace leafspace
