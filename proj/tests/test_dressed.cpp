#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "mscheme/dressed.hpp"
#include "mscheme/solver.hpp"
#include "oracle.hpp"

using namespace mscheme;

namespace {

SystemParams caption_params(double d3) {
    SystemParams p;
    p.rabi = {Complex(0.75), Complex(1.5), Complex(0.01), Complex(0.1)};
    p.detuning = {20.0, 0.0, d3, d3};
    p.decay = DecayRates{1.0, 1.0, 0.25, 0.25, 1.0, 1.0};
    p.dephasing = 0.01;
    return p;
}

std::vector<Hamiltonian> detuning_sweep(double lo, double hi, int n) {
    std::vector<Hamiltonian> hs;
    for (int k = 0; k < n; ++k)
        hs.push_back(build_hamiltonian(caption_params(lo + (hi - lo) * k / (n - 1))));
    return hs;
}

}  // namespace

TEST_CASE("uncoupled Hamiltonian diagonalizes to the bare basis") {
    const DressedBasis b = diagonalize(Hamiltonian{});  // H = 0
    // |U| must be a permutation matrix
    for (int l = 0; l < 5; ++l) {
        int ones = 0;
        for (int j = 0; j < 5; ++j) {
            const double mag = std::abs(b.vectors(l, j));
            CHECK((mag < 1e-12 || std::abs(mag - 1.0) < 1e-12));
            if (mag > 0.5) ++ones;
        }
        CHECK(ones == 1);
    }
    SystemParams p = caption_params(20.0);
    p.rabi = {};  // fields off, frame energies (0,20,20,40,20)
    const DressedBasis c = diagonalize(build_hamiltonian(p));
    CHECK(c.eigenvalues[0] == doctest::Approx(0.0));
    CHECK(std::abs(c.vectors(0, 0)) == doctest::Approx(1.0));  // e0 = |1>
    // transfer pair: e4 on bare |5> (eps 20), e3 on bare |4> (eps 40)
    CHECK(c.eigenvalues[4] == doctest::Approx(20.0));
    CHECK(std::abs(c.vectors(4, 4)) == doctest::Approx(1.0));
    CHECK(c.eigenvalues[3] == doctest::Approx(40.0));
    CHECK(std::abs(c.vectors(3, 3)) == doctest::Approx(1.0));
}

TEST_CASE("basis invariants hold for random parameters") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const Hamiltonian h = build_hamiltonian(oracle::random_params(rng, trial % 2 == 1));
        const DressedBasis b = diagonalize(h);
        CHECK((b.vectors * b.vectors.adjoint() - Matrix5c::Identity()).cwiseAbs().maxCoeff() <
              1e-12);
        double sum = 0;
        Matrix5c completeness = Matrix5c::Zero();
        for (int l = 0; l < 5; ++l) {
            sum += b.eigenvalues[l];
            const Vector5c ket = b.vectors.row(l).transpose();
            completeness += ket * ket.adjoint();
            CHECK((h.matrix * ket - b.eigenvalues[l] * ket).cwiseAbs().maxCoeff() < 1e-10);
            // phase convention: largest component real positive
            int jmax = 0;
            for (int j = 1; j < 5; ++j)
                if (std::abs(b.vectors(l, j)) > std::abs(b.vectors(l, jmax))) jmax = j;
            CHECK(b.vectors(l, jmax).imag() == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(b.vectors(l, jmax).real() > 0.0);
        }
        CHECK(std::abs(sum - h.matrix.trace().real()) < 1e-10);
        CHECK((completeness - Matrix5c::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("eigenvalue asymptotics at large detuning") {
    const DressedBasis far = diagonalize(build_hamiltonian(caption_params(-40.0)));
    // one branch near delta1 = 20, one near delta1 + delta3 = -20
    CHECK(std::abs(far.eigenvalues[4] - 20.0) < 2.0);
    CHECK(std::abs(far.eigenvalues[3] + 20.0) < 2.0);

    const DressedBasis mid = diagonalize(build_hamiltonian(caption_params(0.0)));
    // the transfer pair sits at delta1 +- O(Omega), split by a real gap
    for (int l : {3, 4}) {
        const double d = std::abs(mid.eigenvalues[l] - 20.0);
        CHECK(d > 0.01);
        CHECK(d < 2.0);
    }
}

TEST_CASE("branch tracking: constant sweep keeps labels") {
    const Hamiltonian h = build_hamiltonian(caption_params(5.0));
    const auto seq = track_branches({h, h, h});
    for (const auto& b : seq)
        for (int l = 0; l < 5; ++l) {
            CHECK(b.eigenvalues[l] == seq.front().eigenvalues[l]);
            CHECK((b.vectors - seq.front().vectors).cwiseAbs().maxCoeff() < 1e-14);
        }
}

TEST_CASE("branch tracking follows the avoided crossing") {
    const auto seq = track_branches(detuning_sweep(-40.0, 40.0, 161));
    const DressedBasis& first = seq.front();
    const DressedBasis& last = seq.back();
    // the branch at ~delta1 on the left carries ~delta1+delta3 on the right
    CHECK(std::abs(first.eigenvalues[4] - 20.0) < 2.0);
    CHECK(std::abs(last.eigenvalues[4] - 60.0) < 2.0);
    // and the reverse for its partner
    CHECK(std::abs(first.eigenvalues[3] + 20.0) < 2.0);
    CHECK(std::abs(last.eigenvalues[3] - 20.0) < 2.0);
}

TEST_CASE("branch tracking is path-consistent") {
    auto hs = detuning_sweep(-40.0, 40.0, 161);
    std::vector<Hamiltonian> round_trip = hs;
    for (auto it = hs.rbegin() + 1; it != hs.rend(); ++it) round_trip.push_back(*it);
    const auto seq = track_branches(round_trip);
    const DressedBasis& start = seq.front();
    const DressedBasis& end = seq.back();
    for (int l = 0; l < 5; ++l)
        CHECK(std::abs(start.eigenvalues[l] - end.eigenvalues[l]) < 1e-9);
}

TEST_CASE("coarse three-state rotation is ambiguous") {
    // rotate the degenerate-free {1,2,3} subspace by 60 degrees about the
    // (1,1,1) axis: every overlap against the previous point is ~2/3
    Matrix5c h0 = Matrix5c::Zero();
    h0.diagonal() << 1.0, 2.0, 3.0, 10.0, 20.0;
    Eigen::Matrix3d rot;
    const double c = 0.5, s = std::sqrt(3.0) / 2.0, k = (1.0 - c) / 3.0, t = s / std::sqrt(3.0);
    rot << c + k, k - t, k + t, k + t, c + k, k - t, k - t, k + t, c + k;
    Matrix5c r = Matrix5c::Identity();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = rot(i, j);
    Hamiltonian a, b;
    a.matrix = h0;
    b.matrix = r * h0 * r.adjoint();
    CHECK_THROWS_AS(track_branches({a, b}), AmbiguousTracking);
}

TEST_CASE("dressed populations") {
    const DressedBasis bare = diagonalize(Hamiltonian{});
    const auto p = dressed_populations(DensityMatrix::level({1}).matrix(), bare);
    // the branch carrying bare |1> holds everything
    double on_level1 = 0;
    for (int l = 0; l < 5; ++l)
        if (std::abs(bare.vectors(l, 0)) > 0.5) on_level1 = p[l];
    CHECK(on_level1 == doctest::Approx(1.0));

    std::mt19937 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const DressedBasis b = diagonalize(build_hamiltonian(oracle::random_params(rng)));
        const Matrix5c rho = oracle::random_density_matrix(rng);
        const auto pops = dressed_populations(rho, b);
        double sum = 0;
        for (double v : pops) {
            CHECK(v > -1e-10);
            CHECK(v < 1.0 + 1e-10);
            sum += v;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("steady-state population concentrates in the |5>-like branch") {
    const SystemParams p = caption_params(20.0);
    const DressedBasis b = diagonalize(build_hamiltonian(p));
    const auto rho = steady_state(oracle::liouvillian_of(p)).state;
    int b5 = 0;
    for (int l = 1; l < 5; ++l)
        if (std::norm(b.vectors(l, 4)) > std::norm(b.vectors(b5, 4))) b5 = l;
    CHECK(dressed_populations(rho.matrix(), b)[b5] > 0.9);
}

TEST_CASE("decay expansion") {
    const DressedBasis bare = diagonalize(Hamiltonian{});
    const DecayExpansion ex = decay_expansion(bare, {2}, {5});
    int nonzero = 0;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            if (std::abs(ex.coefficients(a, b)) > 1e-12) {
                ++nonzero;
                CHECK(std::abs(ex.coefficients(a, b)) == doctest::Approx(1.0));
                CHECK(std::abs(bare.vectors(a, 1)) == doctest::Approx(1.0));  // bra on |2>
                CHECK(std::abs(bare.vectors(b, 4)) == doctest::Approx(1.0));  // ket on |5>
            }
    CHECK(nonzero == 1);

    CHECK_THROWS_AS(decay_expansion(bare, {1}, {5}), ValidationError);
    CHECK_THROWS_AS(decay_expansion(bare, {2}, {4}), ValidationError);

    // unit Frobenius norm and bare-basis reconstruction, random parameters
    std::mt19937 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        const DressedBasis basis = diagonalize(build_hamiltonian(oracle::random_params(rng)));
        const DecayExpansion e = decay_expansion(basis, {2}, {5});
        CHECK(e.coefficients.norm() == doctest::Approx(1.0).epsilon(1e-12));
        Matrix5c rebuilt = Matrix5c::Zero();
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b) {
                const Vector5c ea = basis.vectors.row(a).transpose();
                const Vector5c eb = basis.vectors.row(b).transpose();
                rebuilt += e.coefficients(a, b) * ea * eb.adjoint();
            }
        Matrix5c want = Matrix5c::Zero();
        want(1, 4) = 1.0;  // |2><5| in the bare basis
        CHECK((rebuilt - want).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("dominant terms") {
    const DressedBasis bare = diagonalize(Hamiltonian{});
    const DecayExpansion ex = decay_expansion(bare, {2}, {5});
    CHECK(dominant_terms(ex, 0.5).size() == 1);
    CHECK(dominant_terms(ex, 1.0).size() == 1);
    CHECK_THROWS_AS(dominant_terms(ex, 0.0), ValidationError);
    CHECK_THROWS_AS(dominant_terms(ex, 1.5), ValidationError);

    // restricted to the {e0, e3, e4} transfer set and tracked from the left
    // wing, the dominant pair switches from (e0,e4) below the crossing to
    // (e0,e3) above it: the |5>-like character moves between the labels at
    // the avoided crossing
    const std::vector<int> sel{0, 3, 4};
    const auto seq = track_branches(detuning_sweep(-40.0, 40.0, 161));
    const auto lo = dominant_terms(decay_expansion(seq[40], {2}, {5}), 0.3, sel);  // -20
    REQUIRE(lo.size() == 1);
    CHECK(pair_tag(lo.front()) == "e0e4");
    const auto hi = dominant_terms(decay_expansion(seq[120], {2}, {5}), 0.3, sel);  // +20
    REQUIRE(hi.size() == 1);
    CHECK(pair_tag(hi.front()) == "e0e3");
    // standalone (no history) the |5>-like branch is e4 on either side
    const auto alone = dominant_terms(
        decay_expansion(diagonalize(build_hamiltonian(caption_params(20.0))), {2}, {5}), 0.3, sel);
    REQUIRE(alone.size() == 1);
    CHECK(pair_tag(alone.front()) == "e0e4");
    // at the crossing the e0-to-pair couplings are equal in magnitude and
    // dominate the intra-pair term by ~8x
    const auto mid = dominant_terms(decay_expansion(seq[80], {2}, {5}), 0.3, sel);  // 0
    REQUIRE(mid.size() == 2);
    std::set<std::string> tags{pair_tag(mid[0]), pair_tag(mid[1])};
    CHECK(tags == std::set<std::string>{"e0e3", "e0e4"});
}
