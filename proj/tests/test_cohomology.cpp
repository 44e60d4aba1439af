#include "doctest.h"

#include "leafspace/cohomology.hpp"
#include "oracle.hpp"
#include "testutil.hpp"

using namespace leafspace;

namespace {
const long D = 2;
QuadScalar q(long a, long b = 0) { return QuadScalar(Rational(a), Rational(b), D); }
LinearFoliation kronecker() { return LinearFoliation(2, {{q(1), q(0, 1)}}); }
LinearFoliation axis_t2() { return LinearFoliation(2, {{q(1), q(0)}}); }
LinearFoliation skew_t3() { return LinearFoliation(3, {{q(1), q(0, 1), q(0)}}); }
Frequency mode(std::vector<long> k) {
    QuadVector entries;
    for (long e : k)
        entries.push_back(QuadScalar(e, D));
    return Frequency{std::move(entries)};
}
}  // namespace

TEST_CASE("mode enumeration") {
    const auto modes1 = enumerate_modes(1, D, 2);  // 0, 1, 2
    CHECK(modes1.size() == 3);
    const auto modes2 = enumerate_modes(2, D, 1);  // (0,0),(0,1),(1,-1),(1,0),(1,1)
    CHECK(modes2.size() == 5);
    for (const Frequency& k : modes2)
        CHECK(k.is_canonical());
    CHECK(enumerate_modes(2, D, 2).size() == 13);  // (25 - 1)/2 + 1
    CHECK(enumerate_modes(3, D, 2).size() == 63);  // (125 - 1)/2 + 1
}

TEST_CASE("unconstrained mode complexes") {
    // constants: dims (1,2,1), zero differentials
    const ModeComplex zero = build_mode_complex(2, mode({0, 0}), std::nullopt);
    CHECK(zero.dims() == std::vector<size_t>{1, 2, 1});
    CHECK(betti_numbers(zero) == std::vector<int>{1, 2, 1});

    // mode (1,0): dims (2,4,2), acyclic
    const ModeComplex k10 = build_mode_complex(2, mode({1, 0}), std::nullopt);
    CHECK(k10.dims() == std::vector<size_t>{2, 4, 2});
    CHECK(betti_numbers(k10) == std::vector<int>{0, 0, 0});
    CHECK(rank(k10.differentials[0]) == 2);
    CHECK(rank(k10.differentials[1]) == 2);

    CHECK_THROWS_AS(build_mode_complex(2, Frequency{{q(1, 1), q(0)}}, std::nullopt),
                    std::invalid_argument);
}

TEST_CASE("mode acyclicity away from zero") {
    for (int n : {2, 3}) {
        for (const Frequency& k : enumerate_modes(n, D, 2)) {
            if (k.is_zero())
                continue;
            const auto betti = betti_numbers(build_mode_complex(n, k, std::nullopt));
            for (int b : betti)
                CHECK(b == 0);
        }
    }
}

TEST_CASE("basic-constrained mode complexes") {
    const LinearFoliation f = kronecker();
    const ModeComplex dead = build_mode_complex(2, mode({1, 1}), f);
    CHECK(dead.dims() == std::vector<size_t>{0, 0, 0});
    const ModeComplex alive = build_mode_complex(2, mode({0, 0}), f);
    CHECK(alive.dims() == std::vector<size_t>{1, 1, 0});
    CHECK(betti_numbers(alive) == std::vector<int>{1, 1, 0});
}

TEST_CASE("de Rham Betti numbers are binomial") {
    CHECK(de_rham_betti(1, D, 2).ranks == std::vector<int>{1, 1});
    CHECK(de_rham_betti(2, D, 2).ranks == std::vector<int>{1, 2, 1});
    CHECK(de_rham_betti(3, D, 2).ranks == std::vector<int>{1, 3, 3, 1});
    CHECK(de_rham_betti(4, D, 2).ranks == std::vector<int>{1, 4, 6, 4, 1});
    // independent of the truncation box for K >= 1
    CHECK(de_rham_betti(2, D, 1).ranks == de_rham_betti(2, D, 3).ranks);
}

TEST_CASE("basic Betti numbers of the shipped foliations") {
    CHECK(basic_betti(kronecker(), 2).ranks == std::vector<int>{1, 1, 0});
    CHECK(basic_betti(axis_t2(), 2).ranks == std::vector<int>{1, 1, 0});
    CHECK(basic_betti(skew_t3(), 2).ranks == std::vector<int>{1, 2, 1, 0});
    // the Kronecker table only sees the zero mode
    const BettiTable kron = basic_betti(kronecker(), 2);
    CHECK(kron.modes_used == std::vector<std::vector<long>>{{0, 0}});
    // the axis foliation keeps the (0,m) tower
    const BettiTable axis = basic_betti(axis_t2(), 2);
    CHECK(axis.modes_used == std::vector<std::vector<long>>{{0, 0}, {0, 1}, {0, 2}});
}

TEST_CASE("brute-force oracle agrees with the mode-complex route") {
    // de Rham
    for (int n : {1, 2, 3})
        CHECK(oracle::betti(n, D, 1, std::nullopt) == de_rham_betti(n, D, 1).ranks);
    CHECK(oracle::betti(2, D, 2, std::nullopt) == de_rham_betti(2, D, 2).ranks);
    CHECK(oracle::betti(4, D, 1, std::nullopt) == de_rham_betti(4, D, 1).ranks);
    // basic
    CHECK(oracle::betti(2, D, 2, kronecker()) == basic_betti(kronecker(), 2).ranks);
    CHECK(oracle::betti(2, D, 2, axis_t2()) == basic_betti(axis_t2(), 2).ranks);
    CHECK(oracle::betti(3, D, 2, skew_t3()) == basic_betti(skew_t3(), 2).ranks);
}

TEST_CASE("basic Betti numbers are frame independent") {
    RandomSource rng(5001);
    // p = 2 foliation on T³ spanned by axis vectors
    const LinearFoliation plane(3, {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}});
    const BettiTable reference = basic_betti(plane, 2);
    CHECK(reference.ranks == std::vector<int>{1, 1, 0, 0});
    for (int trial = 0; trial < 5; ++trial) {
        // random invertible recombination of the frame
        QuadScalar a = rng.quad(D), b = rng.quad(D), c = rng.quad(D), e = rng.quad(D);
        if ((a * e - b * c).is_zero())
            continue;
        const auto& v = plane.tangents();
        QuadVector w1(3, q(0)), w2(3, q(0));
        for (int i = 0; i < 3; ++i) {
            w1[i] = a * v[0][i] + b * v[1][i];
            w2[i] = c * v[0][i] + e * v[1][i];
        }
        const LinearFoliation recombined(3, {w1, w2});
        CHECK(basic_betti(recombined, 2).ranks == reference.ranks);
    }
    // scale invariance for the Kronecker line
    const LinearFoliation scaled(2, {{q(0, 3), q(6, 0)}});  // 3√2·(1, √2)
    CHECK(basic_betti(scaled, 2).ranks == basic_betti(kronecker(), 2).ranks);
}

TEST_CASE("rational slopes contribute a sublattice of acyclic modes") {
    // v = (1, 3/2): modes with k·v = 0 form the lattice generated by (3, -2)
    const LinearFoliation slope(2, {{QuadScalar(Rational(1), Rational(0), D),
                                     QuadScalar(Rational(3, 2), Rational(0), D)}});
    CHECK(basic_betti(slope, 2).ranks == std::vector<int>{1, 1, 0});
    const BettiTable wide = basic_betti(slope, 3);
    CHECK(wide.ranks == std::vector<int>{1, 1, 0});
    // the sublattice mode (3, -2) enters the box at K = 3 but is acyclic
    bool saw_sublattice_mode = false;
    for (const auto& k : wide.modes_used)
        saw_sublattice_mode = saw_sublattice_mode || (k == std::vector<long>{3, -2});
    CHECK(saw_sublattice_mode);
    CHECK(oracle::betti(2, D, 3, slope) == wide.ranks);
}

TEST_CASE("a different quadratic field works throughout") {
    const long d5 = 5;
    const LinearFoliation golden(2, {{QuadScalar(1, d5), QuadScalar::sqrt_d(d5)}});
    CHECK(basic_betti(golden, 2).ranks == std::vector<int>{1, 1, 0});
    CHECK(de_rham_betti(2, d5, 2).ranks == std::vector<int>{1, 2, 1});
    CHECK(oracle::betti(2, d5, 2, golden) == std::vector<int>{1, 1, 0});
}

TEST_CASE("betti table JSON schema") {
    const BettiTable t = basic_betti(kronecker(), 2);
    const nlohmann::json j = t.to_json();
    CHECK(j["complex"] == "basic");
    CHECK(j["K"] == 2);
    CHECK(j["betti"] == nlohmann::json::array({1, 1, 0}));
    CHECK(j["modes_used"].size() == 1);
    CHECK(j.size() == 4);  // exactly the documented fields
}
