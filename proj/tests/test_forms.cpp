#include "doctest.h"

#include "leafspace/forms.hpp"
#include "testutil.hpp"

using namespace leafspace;

namespace {
const long D = 2;
QuadScalar q(long a, long b = 0) { return QuadScalar(Rational(a), Rational(b), D); }
DiffForm dtheta(int j, int dim) { return DiffForm::coordinate_differential(j, dim, D); }
TrigScalar cosx(int j, int dim) { return TrigScalar::coord_cos(j, dim, D); }
TrigScalar sinx(int j, int dim) { return TrigScalar::coord_sin(j, dim, D); }
}  // namespace

TEST_CASE("wedge basics") {
    const int dim = 2;
    const DiffForm w = wedge(dtheta(0, dim), dtheta(1, dim));
    CHECK(w.degree() == 2);
    CHECK(w.coefficient({0, 1}) == TrigScalar::constant(q(1), dim));
    CHECK(wedge(dtheta(1, dim), dtheta(0, dim)) == -w);
    // repeated index dies
    const DiffForm a = DiffForm::monomial(cosx(0, dim), {0});
    const DiffForm b = DiffForm::monomial(sinx(0, dim), {0});
    CHECK(wedge(a, b).is_zero());
    // degree beyond the dimension is the zero form
    CHECK(wedge(w, dtheta(0, dim)).is_zero());
    CHECK_THROWS_AS(wedge(dtheta(0, 2), dtheta(0, 3)), DimensionError);
}

TEST_CASE("exterior differential") {
    const int dim = 2;
    // d cos θ₁ = −sin θ₁ dθ₁
    const DiffForm f = DiffForm::from_function(cosx(0, dim));
    CHECK(exterior_d(f) == DiffForm::monomial(-sinx(0, dim), {0}));
    // d dθ₁ = 0
    CHECK(exterior_d(dtheta(0, dim)).is_zero());
    // d(cos θ₂ dθ₁) = sin θ₂ dθ₁∧dθ₂
    const DiffForm x = DiffForm::monomial(cosx(1, dim), {0});
    CHECK(exterior_d(x) == DiffForm::monomial(sinx(1, dim), {0, 1}));
}

TEST_CASE("pullback examples") {
    const int dim = 2;
    // h(t) = (t, √2 t)
    const AffineMap h(1, 2, {{q(1)}, {q(0, 1)}}, {q(0), q(0)});
    // √2 dθ₁ − dθ₂ pulls back to 0 along the leaf direction
    const DiffForm kernel_form = dtheta(0, dim) * q(0, 1) - dtheta(1, dim);
    CHECK(pullback(h, kernel_form).is_zero());
    // identity pullback
    const AffineMap id = AffineMap::identity(2, D);
    const DiffForm x = DiffForm::monomial(cosx(1, dim), {0});
    CHECK(pullback(id, x) == x);
    // 2-forms die on a 1-dimensional domain
    CHECK(pullback(h, wedge(dtheta(0, dim), dtheta(1, dim))).is_zero());
    // coefficients substitute: cos(θ₁) dθ₂ → √2 cos(t) dt
    const DiffForm y = DiffForm::monomial(cosx(0, dim), {1});
    CHECK(pullback(h, y) == DiffForm::monomial(TrigScalar::coord_cos(0, 1, D) * q(0, 1), {0}));
}

TEST_CASE("interior product") {
    const int dim = 2;
    const QuadVector v{q(1), q(0, 1)};  // (1, √2)
    // i_v(dθ₁∧dθ₂) = dθ₂ − √2 dθ₁
    const DiffForm w = wedge(dtheta(0, dim), dtheta(1, dim));
    CHECK(interior_product(v, w) == dtheta(1, dim) - dtheta(0, dim) * q(0, 1));
    // 0-forms contract to zero
    CHECK(interior_product(v, DiffForm::from_function(cosx(0, dim))).is_zero());
    // i_{e₁} dθ₂ = 0
    CHECK(interior_product({q(1), q(0)}, dtheta(1, dim)).is_zero());
}

TEST_CASE("lie derivative examples") {
    const int dim = 2;
    // L_{e₁} cos θ₁ = −sin θ₁
    const DiffForm f = DiffForm::from_function(cosx(0, dim));
    CHECK(lie_derivative({q(1), q(0)}, f) == DiffForm::from_function(-sinx(0, dim)));
    // constant differentials are invariant
    CHECK(lie_derivative({q(1), q(0, 1)}, dtheta(0, dim)).is_zero());
    // the Kronecker-basic constant 1-form is invariant along the leaf
    const DiffForm basic = dtheta(0, dim) * q(0, 1) - dtheta(1, dim);
    CHECK(lie_derivative({q(1), q(0, 1)}, basic).is_zero());
}

TEST_CASE("calculus identities on random forms") {
    RandomSource rng(3001);
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            const int deg_x = static_cast<int>(rng.uniform(0, n));
            const int deg_y = static_cast<int>(rng.uniform(0, n));
            const DiffForm x = rng.form(n, deg_x, D, 3, 2);
            const DiffForm y = rng.form(n, deg_y, D, 3, 2);
            const QuadVector v = rng.quad_vector(n, D);

            // d∘d = 0
            CHECK(exterior_d(exterior_d(x)).is_zero());

            // graded Leibniz
            DiffForm leibniz = wedge(exterior_d(x), y);
            const DiffForm second = wedge(x, exterior_d(y));
            leibniz = deg_x % 2 == 0 ? leibniz + second : leibniz - second;
            CHECK(exterior_d(wedge(x, y)) == leibniz);

            // Cartan formula against the translation-flow route
            CHECK(lie_derivative(v, x) == testutil::lie_by_translation(v, x));

            // product rule for L_v
            CHECK(lie_derivative(v, wedge(x, y)) ==
                  wedge(lie_derivative(v, x), y) + wedge(x, lie_derivative(v, y)));

            // i_v ∘ i_v = 0
            CHECK(interior_product(v, interior_product(v, x)).is_zero());
        }
    }
}

TEST_CASE("pullback functoriality and d-commutation") {
    RandomSource rng(3002);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + trial % 2;           // target torus dim
        const int mid = 1 + trial % 2;         // intermediate dim
        const int src = 1;
        const AffineMap g = rng.affine_plot(mid, n, D);
        const AffineMap f = rng.affine_plot(src, mid, D);
        const int deg = static_cast<int>(rng.uniform(0, n));
        const DiffForm x = rng.form(n, deg, D, 3, 2);

        CHECK(pullback(g.compose(f), x) == pullback(f, pullback(g, x)));
        CHECK(pullback(g, exterior_d(x)) == exterior_d(pullback(g, x)));
    }
}

TEST_CASE("pullback through zero-dimensional domains") {
    // constant plot at the quarter-lattice point (π/2, π)
    const AffineMap point = AffineMap::constant(0, {q(1), q(2)});
    const DiffForm f = DiffForm::from_function(cosx(0, 2) + sinx(1, 2));
    const DiffForm value = pullback(point, f);
    // cos(π/2) + sin(π) = 0
    CHECK(value.is_zero());
    const DiffForm g = DiffForm::from_function(sinx(0, 2));
    CHECK(pullback(point, g) == DiffForm::from_function(TrigScalar::constant(q(1), 0)));
    CHECK(pullback(point, dtheta(0, 2)).is_zero());
}

TEST_CASE("deterministic rendering") {
    const int dim = 2;
    const DiffForm x = DiffForm::monomial(cosx(1, dim), {0}) + dtheta(1, dim) * q(0, 1);
    CHECK(x.str(coord_names(dim, "θ")) == "cos(θ2)·dθ1 + √2·dθ2");
    CHECK(DiffForm(2, 1, D).str(coord_names(2)) == "0");
}
