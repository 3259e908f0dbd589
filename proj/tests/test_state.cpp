#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qswaptrace/state.hpp"

using namespace qswaptrace;

TEST_CASE("ghz reduced single-qubit state is maximally mixed") {
    const PureState ghz = make_ghz(3);
    const DensityMatrix red = reduced_density(ghz, {1});
    CHECK(red.side() == 2);
    CHECK(red.entries(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(red.entries(1, 1).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(red.entries(0, 1)) == doctest::Approx(0.0));
    const MomentVector mv = moments(red, 4);
    CHECK(mv.m(1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mv.m(2) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(mv.m(3) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(mv.m(4) == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("w reduced single-qubit state is diag(2/3, 1/3)") {
    const PureState w = make_w(3);
    const DensityMatrix red = reduced_density(w, {1});
    CHECK(red.entries(0, 0).real() == doctest::Approx(2.0 / 3).epsilon(1e-12));
    CHECK(red.entries(1, 1).real() == doctest::Approx(1.0 / 3).epsilon(1e-12));
    const MomentVector mv = moments(red, 4);
    CHECK(mv.m(2) == doctest::Approx(5.0 / 9).epsilon(1e-12));
    CHECK(mv.m(3) == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(mv.m(4) == doctest::Approx(17.0 / 81).epsilon(1e-12));
}

TEST_CASE("moments of an explicit spectrum") {
    const MomentVector mv = moments_of_spectrum({2.0 / 3, 1.0 / 3}, 4);
    CHECK(mv.m(1) == doctest::Approx(1.0));
    CHECK(mv.m(2) == doctest::Approx(5.0 / 9));
    CHECK(mv.m(4) == doctest::Approx(17.0 / 81));
    CHECK(mv.source_dim == 2);
}

TEST_CASE("partial trace of a density matrix matches the pure-state route") {
    const PureState w = make_w(4);
    const DensityMatrix full = density_of(w);
    const DensityMatrix a = reduced_density(w, {2});
    const DensityMatrix b = reduced_density(full, {2});
    REQUIRE(a.side() == b.side());
    CHECK((a.entries - b.entries).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial trace keeps the right subsystem of a product state") {
    Vector up(2), plus(2);
    up << 1.0, 0.0;
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    Vector prod(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) prod(2 * i + j) = up(i) * plus(j);
    const PureState psi(prod, {2, 2});
    const DensityMatrix red = reduced_density(psi, {2});
    CHECK(red.entries(0, 1).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(red.entries(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("multi-subsystem keep preserves trace and purity of pure inputs") {
    const PureState ghz = make_ghz(4);
    const DensityMatrix red = reduced_density(ghz, {1, 3});
    CHECK(red.side() == 4);
    CHECK(red.entries.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    // GHZ cut 13|24 is rank 2 with equal weights.
    CHECK(moments(red, 2).m(2) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("random states are deterministic, normalized, and well formed") {
    const PureState a = random_pure({2, 2, 2}, 7);
    const PureState b = random_pure({2, 2, 2}, 7);
    const PureState c = random_pure({2, 2, 2}, 8);
    CHECK(a.amplitudes == b.amplitudes);
    CHECK(a.amplitudes != c.amplitudes);
    CHECK(a.amplitudes.norm() == doctest::Approx(1.0).epsilon(1e-12));

    const DensityMatrix dm = random_mixed(4, 2, 3);
    CHECK(dm.entries.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((dm.entries - dm.entries.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Matrix> es(dm.entries);
    CHECK(es.eigenvalues().minCoeff() > -1e-12);
    int rank = 0;
    for (int i = 0; i < 4; ++i)
        if (es.eigenvalues()(i) > 1e-9) ++rank;
    CHECK(rank == 2);
}

TEST_CASE("validation rejects malformed inputs") {
    Vector bad(2);
    bad << 1.0, 1.0;  // norm sqrt(2)
    CHECK_THROWS_AS(PureState(bad, {2}), std::invalid_argument);

    Matrix nh = Matrix::Zero(2, 2);
    nh(0, 0) = 0.5;
    nh(1, 1) = 0.5;
    nh(0, 1) = Complex(0.1, 0.0);  // not Hermitian (lower entry missing)
    CHECK_THROWS_AS(DensityMatrix(nh, {2}), std::invalid_argument);

    Matrix neg = Matrix::Zero(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix(neg, {2}), std::invalid_argument);

    CHECK_THROWS_AS(make_ghz(1), std::invalid_argument);
    CHECK_THROWS_AS(make_w(1), std::invalid_argument);
    CHECK_THROWS_AS(reduced_density(make_ghz(3), std::vector<int>{4}),
                    std::invalid_argument);
}
