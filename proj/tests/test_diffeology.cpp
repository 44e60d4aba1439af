#include "doctest.h"

#include "leafspace/cohomology.hpp"
#include "leafspace/diffeology.hpp"
#include "testutil.hpp"

using namespace leafspace;

namespace {
const long D = 2;
QuadScalar q(long a, long b = 0) { return QuadScalar(Rational(a), Rational(b), D); }
LinearFoliation kronecker() { return LinearFoliation(2, {{q(1), q(0, 1)}}); }
LinearFoliation skew_t3() { return LinearFoliation(3, {{q(1), q(0, 1), q(0)}}); }
DiffForm dtheta(int j, int dim) { return DiffForm::coordinate_differential(j, dim, D); }

DiffForm random_torus_form(RandomSource& rng, int n, int degree) {
    return rng.form(n, degree, D, 3, 2);
}
}  // namespace

TEST_CASE("plots and lifts") {
    const LinearFoliation f = kronecker();
    // the universal quotient generator
    Plot covering = make_quotient_plot(AffineMap::identity(2, D), f);
    CHECK(covering.kind() == TargetKind::Quotient);
    CHECK(covering.domain_dim() == 2);

    // constant plot (diffeology axiom: constants are plots)
    const Plot point = make_quotient_plot(AffineMap::constant(0, {q(1), q(0)}), f);
    CHECK(point.domain_dim() == 0);

    // a single-leaf plot
    const AffineMap leaf_line(1, 2, {{q(1)}, {q(0, 1)}}, {q(0), q(0)});
    CHECK(make_quotient_plot(leaf_line, f).torus_dim() == 2);

    // alternate lift by a constant leaf translation: β + (1,√2)
    AffineMap shifted(2, 2, identity_matrix(2, D), {q(1), q(0, 1)});
    // phases (1, √2)·π/2 lie along the leaf: allowed
    covering.add_lift(shifted, f);
    CHECK(covering.lifts().size() == 2);
    // a lattice translation is also the same plot
    covering.add_lift(AffineMap::translation({q(4), q(0)}), f);
    CHECK(covering.lifts().size() == 3);
    // a transverse translation is not
    CHECK_THROWS_AS(covering.add_lift(AffineMap::translation({q(0), q(1)}), f),
                    std::invalid_argument);
    // a different linear part is rejected
    AffineMap sheared(2, 2, {{q(1), q(1)}, {q(0, 1), q(0, 1)}}, {q(0), q(0)});
    CHECK_THROWS_AS(covering.add_lift(sheared, f), std::invalid_argument);
}

TEST_CASE("standard presentations validate") {
    for (int n : {1, 2, 3}) {
        const GeneratedDiffeology torus = standard_torus_diffeology(n, D);
        CHECK(torus.covering_index() == 0);
        CHECK(torus.generators().size() == 2);
    }
    const LinearFoliation f = kronecker();
    const GeneratedDiffeology foliated = standard_torus_diffeology(f);
    CHECK(foliated.generators().size() == 2);
    const GeneratedDiffeology quotient = standard_quotient_diffeology(f);
    CHECK(quotient.generators().size() == 2);
    CHECK(quotient.witnesses().size() == 4);  // 2 lattice + shear + projection

    // a broken witness is rejected: translation by a non-lattice vector
    std::vector<Plot> gens{Plot::torus_plot(AffineMap::identity(2, D))};
    std::vector<RelationWitness> wits{{0, 0, AffineMap::translation({q(1), q(0)})}};
    CHECK_THROWS_WITH_AS(GeneratedDiffeology(TargetKind::Torus, 2, D, std::nullopt,
                                             std::move(gens), std::move(wits)),
                         doctest::Contains("does not intertwine"), std::invalid_argument);

    // on the quotient the same translation is fine when it is leafwise:
    // (π/2)·(2, 2√2) lies along (1, √2)
    const LinearFoliation g = kronecker();
    std::vector<Plot> qgens{Plot::quotient_plot(AffineMap::identity(2, D), g)};
    std::vector<RelationWitness> qwits{{0, 0, AffineMap::translation({q(2), q(0, 2)})}};
    CHECK_NOTHROW(GeneratedDiffeology(TargetKind::Quotient, 2, D, g, std::move(qgens),
                                      std::move(qwits)));
}

TEST_CASE("compatibility checking") {
    const GeneratedDiffeology torus = standard_torus_diffeology(2, D);
    // all-zero family is compatible
    CHECK(static_cast<bool>(check_dform(zero_dform(torus, 1), torus)));

    // restriction of a global form is compatible
    RandomSource rng(6001);
    const DiffForm omega = random_torus_form(rng, 2, 1);
    const DForm theta = induce_dform(omega, torus);
    CHECK(static_cast<bool>(check_dform(theta, torus)));

    // break one component: dt on the sample generator, 0 on the covering
    DForm broken(1, {DiffForm(2, 1, D), dtheta(0, 1)});
    const CompatibilityCheck chk = check_dform(broken, torus);
    CHECK(!chk.ok);
    CHECK(chk.witness_index == 2);  // the sample plot's defining witness
    CHECK(chk.describe().find("witness 2 violated") != std::string::npos);
}

TEST_CASE("restriction and gluing invert each other") {
    RandomSource rng(6002);
    for (int n : {1, 2, 3}) {
        const GeneratedDiffeology torus = standard_torus_diffeology(n, D);
        for (int trial = 0; trial < 25; ++trial) {
            const int degree = static_cast<int>(rng.uniform(0, n));
            const DiffForm omega = random_torus_form(rng, n, degree);
            const DForm theta = induce_dform(omega, torus);
            CHECK(static_cast<bool>(check_dform(theta, torus)));
            CHECK(glue_dform(theta, torus) == omega);
            CHECK(induce_dform(glue_dform(theta, torus), torus) == theta);
            // both directions commute with d
            CHECK(glue_dform(exterior_d(theta, torus), torus) == exterior_d(omega));
            CHECK(exterior_d(theta, torus) == induce_dform(exterior_d(omega), torus));
        }
    }
}

TEST_CASE("gluing rejects non-periodic covering components") {
    const GeneratedDiffeology torus = standard_torus_diffeology(1, D);
    // cos(t/2) dt: a half-integer frequency
    QuadVector half{QuadScalar(Rational(1, 2), Rational(0), D)};
    const DiffForm bad = DiffForm::monomial(
        TrigScalar::wave(Frequency{half}, QuadScalar::one(D), QuadScalar::zero(D)), {0});
    // build the family by hand (it even satisfies the doubling witness)
    const DForm theta(1, {bad, pullback(torus.generators()[1].lift(), bad)});
    CHECK_THROWS_WITH_AS(glue_dform(theta, torus), doctest::Contains("not 2π-periodic"),
                         std::invalid_argument);
    CHECK_THROWS_AS(induce_dform(bad, torus), std::invalid_argument);
}

TEST_CASE("morphism pullbacks") {
    RandomSource rng(6003);
    const GeneratedDiffeology torus = standard_torus_diffeology(2, D);
    const DiffForm omega = random_torus_form(rng, 2, 1);
    const DForm theta = induce_dform(omega, torus);

    // identity
    const DiffeoMorphism id = DiffeoMorphism::identity(torus);
    CHECK(dform_pullback(id, theta, torus, torus) == theta);

    // constant map: positive-degree forms die
    const DiffeoMorphism point =
        DiffeoMorphism::constant_map(torus, torus, {q(0), q(2)});
    CHECK(dform_pullback(point, theta, torus, torus).is_zero());
    // degree-0 families pull back to the point value
    const DiffForm func = DiffForm::from_function(TrigScalar::coord_cos(1, 2, D));
    const DForm ftheta = induce_dform(func, torus);
    const DForm fpulled = dform_pullback(point, ftheta, torus, torus);
    // cos(π) = −1 at the covering component
    CHECK(fpulled.component(0) ==
          DiffForm::from_function(TrigScalar::constant(q(-1), 2)));

    // declared morphism: the doubling map T¹ → T¹, t ↦ 2t
    const GeneratedDiffeology circle = standard_torus_diffeology(1, D);
    const AffineMap doubling(1, 1, {{q(2)}}, {q(0)});
    std::vector<std::optional<DiffeoMorphism::Match>> matches;
    matches.push_back(DiffeoMorphism::Match{0, doubling});           // covering ∘ 2t
    matches.push_back(DiffeoMorphism::Match{0, AffineMap(1, 1, {{q(4)}}, {q(0)})});  // sample: 2·(2t)
    const DiffeoMorphism twice = DiffeoMorphism::declare(circle, circle, doubling, matches);
    const DiffForm c1 = DiffForm::from_function(TrigScalar::coord_cos(0, 1, D));
    const DForm pulled = dform_pullback(twice, induce_dform(c1, circle), circle, circle);
    QuadVector two{q(2)};
    CHECK(pulled.component(0) == DiffForm::from_function(
                                     TrigScalar::wave(Frequency{two}, q(1), q(0))));

    // a missing match is reported as an ungenerated plot
    matches[1] = std::nullopt;
    CHECK_THROWS_WITH_AS(DiffeoMorphism::declare(circle, circle, doubling, matches),
                         doctest::Contains("plot not generated"), std::invalid_argument);
}

TEST_CASE("morphism pullback is functorial") {
    RandomSource rng(6009);
    const GeneratedDiffeology circle = standard_torus_diffeology(1, D);
    const AffineMap doubling(1, 1, {{q(2)}}, {q(0)});
    const AffineMap quadrupling(1, 1, {{q(4)}}, {q(0)});
    auto declare_scaling = [&](const AffineMap& scale, long sample_factor) {
        std::vector<std::optional<DiffeoMorphism::Match>> matches;
        matches.push_back(DiffeoMorphism::Match{0, scale});
        matches.push_back(
            DiffeoMorphism::Match{0, AffineMap(1, 1, {{q(sample_factor)}}, {q(0)})});
        return DiffeoMorphism::declare(circle, circle, scale, matches);
    };
    const DiffeoMorphism twice = declare_scaling(doubling, 4);
    const DiffeoMorphism four_times = declare_scaling(quadrupling, 8);
    for (int trial = 0; trial < 20; ++trial) {
        const DForm theta = induce_dform(rng.form(1, trial % 2, D, 3, 2), circle);
        // (g∘f)* = f* ∘ g* with f = g = doubling
        CHECK(dform_pullback(twice, dform_pullback(twice, theta, circle, circle), circle,
                             circle) == dform_pullback(four_times, theta, circle, circle));
    }
}

TEST_CASE("projection pullback and injectivity") {
    RandomSource rng(6004);
    const LinearFoliation f = kronecker();
    const GeneratedDiffeology torus = standard_torus_diffeology(f);
    const GeneratedDiffeology quotient = standard_quotient_diffeology(f);

    const DForm zero = zero_dform(quotient, 1);
    CHECK(projection_pullback(zero, torus, quotient).is_zero());

    for (int trial = 0; trial < 40; ++trial) {
        const int degree = static_cast<int>(rng.uniform(0, 2));
        const DiffForm omega = rng.basic_form(f, degree, 2);
        const DForm theta = dform_from_basic(omega, f, quotient);
        const DForm lifted = projection_pullback(theta, torus, quotient);
        // π* is injective: nonzero families stay nonzero
        CHECK(lifted.is_zero() == theta.is_zero());
        // and the composite glues back to ω
        CHECK(glue_dform(lifted, torus) == omega);
    }
}

TEST_CASE("comparison morphism lands in basic forms") {
    RandomSource rng(6005);
    for (const LinearFoliation& f : {kronecker(), skew_t3()}) {
        const GeneratedDiffeology torus = standard_torus_diffeology(f);
        const GeneratedDiffeology quotient = standard_quotient_diffeology(f);
        const int n = f.torus_dim();
        for (int trial = 0; trial < 25; ++trial) {
            const int degree = static_cast<int>(rng.uniform(0, n));
            const DiffForm omega = rng.basic_form(f, degree, 2);
            const DForm theta = dform_from_basic(omega, f, quotient);
            CHECK(static_cast<bool>(check_dform(theta, quotient)));
            const DiffForm back = to_basic_form(theta, torus, quotient);
            CHECK(static_cast<bool>(is_basic(back, f)));
            CHECK(back == omega);  // round trip one way
            // and the other way
            CHECK(dform_from_basic(back, f, quotient) == theta);
        }
    }
}

TEST_CASE("inverse comparison rejects non-basic input") {
    const LinearFoliation f = kronecker();
    const GeneratedDiffeology quotient = standard_quotient_diffeology(f);
    CHECK_THROWS_WITH_AS(dform_from_basic(dtheta(0, 2), f, quotient),
                         doctest::Contains("not basic"), std::invalid_argument);
    // non-integer frequencies are not torus forms
    QuadVector irr{q(0, 1), q(0)};
    const DiffForm off_lattice = DiffForm::from_function(
        TrigScalar::wave(Frequency{irr}, QuadScalar::one(D), QuadScalar::zero(D)));
    CHECK_THROWS_WITH_AS(dform_from_basic(off_lattice, f, quotient),
                         doctest::Contains("not defined on the torus"), std::invalid_argument);
}

TEST_CASE("inverse comparison components are the lift pullbacks") {
    const LinearFoliation f = kronecker();
    const GeneratedDiffeology quotient = standard_quotient_diffeology(f);
    const DiffForm omega = dtheta(0, 2) * q(0, 1) - dtheta(1, 2);  // √2dθ₁ − dθ₂
    const DForm theta = dform_from_basic(omega, f, quotient);
    // covering component is √2 dt₁ − dt₂ itself
    CHECK(theta.component(0) == omega);
    // the leaf-extended component has no ds part: it equals pr₁* of the form
    CHECK(theta.component(1) == pullback(AffineMap::drop_last(3, D), omega));

    // constants induce constant families
    const DiffForm one = DiffForm::from_function(TrigScalar::constant(q(1), 2));
    const DForm ctheta = dform_from_basic(one, f, quotient);
    for (const DiffForm& comp : ctheta.components())
        CHECK(comp.coefficient({}).is_constant());
}

TEST_CASE("lift independence certificates") {
    RandomSource rng(6006);
    const LinearFoliation f = kronecker();
    const AffineMap covering = AffineMap::identity(2, D);
    // basic forms pass against random tangential deformations
    for (int trial = 0; trial < 20; ++trial) {
        const DiffForm omega = rng.basic_form(f, static_cast<int>(rng.uniform(0, 2)), 2);
        CHECK(static_cast<bool>(lift_independent(omega, covering, rng.leaf_vector(f), f)));
    }
    // dθ₁ fails along the leaf
    CHECK(!lift_independent(dtheta(0, 2), covering, {q(1), q(0, 1)}, f));
    // zero deformation is always independent
    CHECK(static_cast<bool>(lift_independent(dtheta(0, 2), covering, {q(0), q(0)}, f)));
}

TEST_CASE("alternate lifts are certified in the inverse comparison") {
    const LinearFoliation f = kronecker();
    const int n = 2;
    // standard presentation plus a declared alternate lift of the covering:
    // shifted along the leaf by (π/2)(1, √2) and by a lattice step
    std::vector<Plot> gens;
    Plot covering = Plot::quotient_plot(AffineMap::identity(n, D), f);
    covering.add_lift(AffineMap::translation({q(5), q(0, 1)}), f);  // (4+1, √2)
    gens.push_back(covering);
    const AffineMap shear = AffineMap::shear_by(f.tangents()[0]);
    gens.push_back(Plot::quotient_plot(shear, f));
    std::vector<RelationWitness> wits;
    for (int i = 0; i < n; ++i) {
        QuadVector c(n, q(0));
        c[i] = q(4);
        wits.push_back({0, 0, AffineMap::translation(c)});
    }
    wits.push_back({1, 0, shear});
    wits.push_back({1, 0, AffineMap::drop_last(n + 1, D)});
    const GeneratedDiffeology quotient(TargetKind::Quotient, n, D, f, std::move(gens),
                                       std::move(wits));

    RandomSource rng(6007);
    const DiffForm omega = rng.basic_form(f, 1, 2);
    CHECK_NOTHROW(dform_from_basic(omega, f, quotient));
}

TEST_CASE("quotient cohomology matches basic cohomology") {
    const LinearFoliation cases[] = {kronecker(), LinearFoliation(2, {{q(1), q(0)}}), skew_t3()};
    for (const LinearFoliation& f : cases) {
        const GeneratedDiffeology quotient = standard_quotient_diffeology(f);
        const BettiTable qt = quotient_betti(quotient, 2);
        const BettiTable bt = basic_betti(f, 2);
        CHECK(qt.ranks == bt.ranks);
        CHECK(qt.complex_kind == "quotient");
    }
}

TEST_CASE("quotient cohomology reports missing witnesses") {
    const LinearFoliation f = kronecker();
    const int n = 2;
    // presentation without the projection witness: leaf direction unconstrained
    {
        std::vector<Plot> gens{Plot::quotient_plot(AffineMap::identity(n, D), f),
                               Plot::quotient_plot(AffineMap::shear_by(f.tangents()[0]), f)};
        std::vector<RelationWitness> wits;
        for (int i = 0; i < n; ++i) {
            QuadVector c(n, q(0));
            c[i] = q(4);
            wits.push_back({0, 0, AffineMap::translation(c)});
        }
        wits.push_back({1, 0, AffineMap::shear_by(f.tangents()[0])});
        const GeneratedDiffeology presentation(TargetKind::Quotient, n, D, f, std::move(gens),
                                               std::move(wits));
        CHECK_THROWS_WITH_AS(quotient_betti(presentation, 1),
                             doctest::Contains("leaf direction"), std::invalid_argument);
    }
    // presentation without lattice witnesses
    {
        std::vector<Plot> gens{Plot::quotient_plot(AffineMap::identity(n, D), f),
                               Plot::quotient_plot(AffineMap::shear_by(f.tangents()[0]), f)};
        std::vector<RelationWitness> wits{{1, 0, AffineMap::shear_by(f.tangents()[0])},
                                          {1, 0, AffineMap::drop_last(n + 1, D)}};
        const GeneratedDiffeology presentation(TargetKind::Quotient, n, D, f, std::move(gens),
                                               std::move(wits));
        CHECK_THROWS_WITH_AS(quotient_betti(presentation, 1),
                             doctest::Contains("lattice periodicity"), std::invalid_argument);
    }
    // disconnected generator
    {
        std::vector<Plot> gens{Plot::quotient_plot(AffineMap::identity(n, D), f),
                               Plot::quotient_plot(AffineMap::shear_by(f.tangents()[0]), f)};
        std::vector<RelationWitness> wits;
        for (int i = 0; i < n; ++i) {
            QuadVector c(n, q(0));
            c[i] = q(4);
            wits.push_back({0, 0, AffineMap::translation(c)});
        }
        const GeneratedDiffeology presentation(TargetKind::Quotient, n, D, f, std::move(gens),
                                               std::move(wits));
        CHECK_THROWS_WITH_AS(quotient_betti(presentation, 1),
                             doctest::Contains("not connected"), std::invalid_argument);
    }
}

TEST_CASE("differential of compatible families stays compatible") {
    RandomSource rng(6008);
    const LinearFoliation f = kronecker();
    const GeneratedDiffeology quotient = standard_quotient_diffeology(f);
    for (int trial = 0; trial < 20; ++trial) {
        const DiffForm omega = rng.basic_form(f, static_cast<int>(rng.uniform(0, 1)), 2);
        const DForm theta = dform_from_basic(omega, f, quotient);
        const DForm dtheta_family = exterior_d(theta, quotient);
        CHECK(static_cast<bool>(check_dform(dtheta_family, quotient)));
        CHECK(exterior_d(dtheta_family, quotient).is_zero());
        // d commutes with the inverse comparison
        CHECK(dtheta_family == dform_from_basic(exterior_d(omega), f, quotient));
    }
}
