#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qswaptrace/estimate.hpp"
#include "qswaptrace/states_builtin.hpp"

using namespace qswaptrace;

TEST_CASE("exact distributions invert to the power traces") {
    const DensityMatrix red = reduced_density(make_ghz(3), {1});
    const MomentVector mv = moments(red, 4);
    const OutcomeDistribution dist = exact_distribution_moments(mv, 4);
    for (int k = 2; k <= 4; ++k)
        CHECK(trace_from_distribution(dist, k) == doctest::Approx(mv.m(k)).epsilon(1e-12));
    CHECK_THROWS_AS(trace_from_distribution(dist, 1), std::invalid_argument);
    CHECK_THROWS_AS(trace_from_distribution(dist, 5), std::invalid_argument);
    const MomentVector back = moments_from_distribution(dist, 4);
    for (int k = 1; k <= 4; ++k) CHECK(back.m(k) == doctest::Approx(mv.m(k)).epsilon(1e-12));
}

TEST_CASE("inversion holds for random mixed states") {
    for (int trial = 0; trial < 8; ++trial) {
        const DensityMatrix rho = random_mixed(3, 1 + trial % 3, 200 + trial);
        const int n = 2 + trial % 4;
        const MomentVector mv = moments(rho, n);
        const OutcomeDistribution dist = exact_distribution_moments(mv, n);
        for (int k = 2; k <= n; ++k)
            CHECK(std::abs(trace_from_distribution(dist, k) - mv.m(k)) < 1e-10);
    }
}

TEST_CASE("estimates from counts recover the traces with sane variance") {
    const DensityMatrix red = reduced_density(make_w(3), {1});
    const MomentVector mv = moments(red, 4);
    const OutcomeDistribution dist = exact_distribution_moments(mv, 4);
    const ShotCounts counts = sample(dist, 200000, 5);
    const TraceEstimates est = traces_from_counts(counts, 2, 4);
    CHECK(est.shots == 200000);
    for (int k = 2; k <= 4; ++k) {
        const auto& e = est.per_k.at(k);
        CHECK(std::abs(e.estimate - mv.m(k)) < 0.01);
        CHECK(e.estimate == doctest::Approx(2.0 * e.p - 1.0).epsilon(1e-12));
        CHECK(e.variance == doctest::Approx(estimator_variance(e.p, 200000)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(traces_from_counts(counts, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(traces_from_counts(counts, 2, 5), std::invalid_argument);
}

TEST_CASE("shot planning") {
    CHECK(plan_shots(0.01, 0.05, 4).shots == 95750);
    CHECK(plan_shots(0.02, 0.08, 4).shots == 21588);
    CHECK(plan_shots(0.5, 0.5, 2).shots ==
          static_cast<long long>(std::ceil(8.0 * std::log(4.0))));
    CHECK_THROWS_AS(plan_shots(2.0, 0.05, 4), std::invalid_argument);
    CHECK_THROWS_AS(plan_shots(0.0, 0.05, 4), std::invalid_argument);
    CHECK_THROWS_AS(plan_shots(0.01, 1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(plan_shots(0.01, 0.05, 1), std::invalid_argument);
}

TEST_CASE("characteristic polynomial coefficients for a rank-2 spectrum") {
    const MomentVector mv = moments_of_spectrum({2.0 / 3, 1.0 / 3}, 2);
    const CharPolyCoeffs coeffs = newton_girard_coeffs(mv, 2);
    CHECK(coeffs.coeff(0) == doctest::Approx(1.0));
    CHECK(coeffs.coeff(1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(coeffs.coeff(2) == doctest::Approx(2.0 / 9).epsilon(1e-12));
}

TEST_CASE("moment extension reproduces eigenvalue power sums") {
    const std::vector<double> spec{0.4, 0.3, 0.2, 0.1};
    const MomentVector mv = moments_of_spectrum(spec, 4);
    const MomentVector truth = moments_of_spectrum(spec, 9);
    const ExtendedMoments ext = extend_moments(newton_girard_coeffs(mv, 4), mv, 5);
    CHECK(ext.warnings.empty());
    for (int k = 5; k <= 9; ++k)
        CHECK(std::abs(ext.moments.m(k) - truth.m(k)) / truth.m(k) < 1e-8);
}

TEST_CASE("rank diagnostic flags coefficients that disagree with the moments") {
    const CharPolyCoeffs coeffs =
        newton_girard_coeffs(moments_of_spectrum({0.9, 0.1}, 2), 2);
    const MomentVector other = moments_of_spectrum({0.5, 0.5}, 2);
    const ExtendedMoments ext = extend_moments(coeffs, other, 2);
    CHECK_FALSE(ext.warnings.empty());
}

TEST_CASE("hybrid estimation from an exact low-order circuit") {
    const DensityMatrix red = reduced_density(make_w(3), {1});
    const MomentVector truth = moments(red, 6);
    const ExtendedMoments ext = hybrid_estimate_exact(red, 2, 6);
    for (int k = 3; k <= 6; ++k)
        CHECK(std::abs(ext.moments.m(k) - truth.m(k)) / truth.m(k) < 1e-8);

    // Rank 1 needs no circuit at all.
    const DensityMatrix pure = reduced_of(builtin_state("ghz3"), {1, 2, 3});
    const ExtendedMoments ones = hybrid_estimate_exact(pure, 1, 5);
    for (int k = 1; k <= 5; ++k) CHECK(ones.moments.m(k) == doctest::Approx(1.0));
}

TEST_CASE("hybrid estimation from sampled counts stays close") {
    const DensityMatrix red = reduced_density(make_ghz(3), {1});
    const MomentVector truth = moments(red, 4);
    const ShotPlan plan = plan_shots(0.005, 0.05, 2);
    const ExtendedMoments ext = hybrid_estimate_sampled(red, 2, 4, plan, 9);
    CHECK(std::abs(ext.moments.m(3) - truth.m(3)) < 0.03);
    CHECK(std::abs(ext.moments.m(4) - truth.m(4)) < 0.05);
}
