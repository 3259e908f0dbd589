#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qswaptrace/measures.hpp"
#include "qswaptrace/estimate.hpp"
#include "qswaptrace/states_builtin.hpp"

using namespace qswaptrace;

namespace {

MomentVector maxmix_moments(int d, int k_max) {
    return moments_of_spectrum(std::vector<double>(static_cast<size_t>(d), 1.0 / d), k_max);
}

MomentVector pure_moments(int k_max) {
    return moments_of_spectrum({1.0}, k_max);
}

}  // namespace

TEST_CASE("truncated exponential trace") {
    CHECK(exp_trace(maxmix_moments(2, 12), 2, {12}) ==
          doctest::Approx(2.0 * std::exp(0.5)).epsilon(1e-9));
    CHECK(exp_trace(pure_moments(12), 2, {12}) ==
          doctest::Approx(std::exp(1.0) + 1.0).epsilon(1e-9));
    CHECK(exp_trace(pure_moments(1), 5, {1}) == doctest::Approx(6.0));
    CHECK_THROWS_AS(exp_trace(maxmix_moments(2, 3), 2, {12}), std::invalid_argument);
}

TEST_CASE("truncated von Neumann entropy") {
    CHECK(von_neumann_entropy(maxmix_moments(2, 41), 2, {40}) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-9));
    CHECK(std::abs(von_neumann_entropy(maxmix_moments(3, 61), 3, {60}) - std::log(3.0)) <
          1e-6);
    // N=1 reduces to the linear-entropy surrogate 1 - m_2.
    const MomentVector mv = moments_of_spectrum({0.7, 0.3}, 2);
    CHECK(von_neumann_entropy(mv, 2, {1}) == doctest::Approx(1.0 - mv.m(2)).epsilon(1e-12));

    const DensityMatrix mixed = reduced_of(builtin_state("maxmix2"), {1});
    CHECK(von_neumann_entropy(mixed, {40}) == doctest::Approx(std::log(2.0)).epsilon(1e-9));
    const DensityMatrix pure = reduced_of(builtin_state("ghz3"), {1, 2, 3});
    CHECK_THROWS_AS(von_neumann_entropy(pure, {40}), std::runtime_error);
}

TEST_CASE("truncation error shrinks as the order grows") {
    const MomentVector mv = maxmix_moments(3, 41);
    const double target = std::log(3.0);
    const double err10 = std::abs(von_neumann_entropy(mv, 3, {10}) - target);
    const double err20 = std::abs(von_neumann_entropy(mv, 3, {20}) - target);
    const double err40 = std::abs(von_neumann_entropy(mv, 3, {40}) - target);
    CHECK(err20 < err10);
    CHECK(err40 < err20);
}

TEST_CASE("gibbs preparation cost is the negated entropy series") {
    const MomentVector mv = maxmix_moments(2, 41);
    CHECK(gibbs_cost(mv, 40) == doctest::Approx(-std::log(2.0)).epsilon(1e-9));
    CHECK(gibbs_cost(mv, 40) ==
          doctest::Approx(-von_neumann_entropy(mv, 2, {40})).epsilon(1e-12));
    const MomentVector mv2 = moments_of_spectrum({0.7, 0.3}, 2);
    CHECK(gibbs_cost(mv2, 1) == doctest::Approx(mv2.m(2) - 1.0).epsilon(1e-12));
}

TEST_CASE("concurrence") {
    CHECK(concurrence(0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence(1.0) == doctest::Approx(0.0));
    CHECK(concurrence(5.0 / 9) == doctest::Approx(std::sqrt(8.0 / 9)).epsilon(1e-9));
    // Algebraic identity C^2 + 2 m_2 == 2.
    for (double m2 : {0.3, 0.5, 0.77, 1.0})
        CHECK(concurrence(m2) * concurrence(m2) + 2 * m2 == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(concurrence(1.5), std::invalid_argument);
}

TEST_CASE("icem on the canonical cuts") {
    MomentVector ghz;
    ghz.values = {1.0, 0.5};
    CHECK(icem(ghz, 1) == doctest::Approx(0.25).epsilon(1e-12));
    MomentVector w;
    w.values = {1.0, 5.0 / 9};
    CHECK(icem(w, 1) == doctest::Approx(2.0 / 9).epsilon(1e-12));
    CHECK(icem(pure_moments(1), 0) == doctest::Approx(0.0));
    CHECK(icem(pure_moments(4), 3) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("tsallis and q-concurrence") {
    const DensityMatrix ghz_cut = reduced_of(builtin_state("ghz3"), {1});
    const DensityMatrix w_cut = reduced_of(builtin_state("w3"), {1});
    CHECK(tsallis_q(moments(ghz_cut, 2), 2) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(tsallis_q(moments(w_cut, 3), 3) == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(q_concurrence(moments(ghz_cut, 2), 2) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(q_concurrence(moments(ghz_cut, 4), 4) == doctest::Approx(0.875).epsilon(1e-12));
    CHECK(tsallis_q(pure_moments(5), 5) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(tsallis_q(pure_moments(5), 1), std::invalid_argument);
}

TEST_CASE("probability forms agree with the moment forms") {
    for (const char* name : {"ghz3", "w3"}) {
        const DensityMatrix cut = reduced_of(builtin_state(name), {1});
        const MomentVector mv = moments(cut, 5);
        const OutcomeDistribution dist = exact_distribution_moments(mv, 5);
        CHECK(std::abs(concurrence_from_distribution(dist) - concurrence(mv.m(2))) < 1e-10);
        CHECK(std::abs(icem_from_distribution(dist, 1) - icem(mv, 1)) < 1e-10);
        for (int q = 2; q <= 5; ++q) {
            CHECK(std::abs(tsallis_q_from_distribution(dist, q) - tsallis_q(mv, q)) < 1e-10);
            CHECK(std::abs(q_concurrence_from_distribution(dist, q) - q_concurrence(mv, q)) <
                  1e-10);
        }
    }
}
