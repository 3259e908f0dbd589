#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qswaptrace/permtrace.hpp"

using namespace qswaptrace;

namespace {

double monomial(const MomentVector& mv, const CycleType& lens) {
    double v = 1.0;
    for (int len : lens) v *= mv.m(len);
    return v;
}

}  // namespace

TEST_CASE("word composition follows right-to-left action") {
    // S2 S1 S2 = (1 3)
    const Permutation p = compose_word({{2, 1, 2}, 3});
    CHECK(p == Permutation{3, 2, 1});
    CHECK(cycle_type(p) == CycleType{2, 1});
}

TEST_CASE("cycle type and symbolic expression of the debug example") {
    const PermutationWord word{{2, 4, 5, 2, 1}, 6};
    const CycleType ct = cycle_type(compose_word(word));
    CHECK(ct == CycleType{3, 2, 1});
    CHECK(trace_expression(ct) == "tr(rho^2)*tr(rho^3)");
    CHECK(trace_expression(cycle_type(compose_word({{}, 4}))) == "1");
}

TEST_CASE("full adjacent ladders and their rearrangements give tr(rho^k)") {
    const MomentVector mv = moments_of_spectrum({0.6, 0.3, 0.1}, 5);
    for (const auto& word : {std::vector<int>{1, 2, 3, 4}, std::vector<int>{2, 4, 1, 3},
                             std::vector<int>{4, 3, 2, 1}, std::vector<int>{3, 1, 4, 2}}) {
        CHECK(eval_trace_cycles({word, 5}, mv) == doctest::Approx(mv.m(5)).epsilon(1e-12));
    }
}

TEST_CASE("nonadjacent pairs and disjoint blocks factor into products") {
    const MomentVector mv = moments_of_spectrum({0.5, 0.25, 0.15, 0.1}, 6);
    CHECK(eval_trace_cycles({{1, 3}, 4}, mv) ==
          doctest::Approx(mv.m(2) * mv.m(2)).epsilon(1e-12));
    CHECK(eval_trace_cycles({{1, 2, 4, 5}, 6}, mv) ==
          doctest::Approx(mv.m(3) * mv.m(3)).epsilon(1e-12));
    CHECK(eval_trace_cycles({{1, 4, 5}, 6}, mv) ==
          doctest::Approx(mv.m(2) * mv.m(3)).epsilon(1e-12));
}

TEST_CASE("one repeated factor in a consecutive run cancels out") {
    const MomentVector mv = moments_of_spectrum({0.45, 0.3, 0.25}, 5);
    CHECK(eval_trace_cycles({{1, 2, 3, 1}, 5}, mv) == doctest::Approx(mv.m(3)).epsilon(1e-12));
    CHECK(eval_trace_cycles({{2, 3, 2, 1}, 5}, mv) == doctest::Approx(mv.m(3)).epsilon(1e-12));
    CHECK(eval_trace_cycles({{1, 2, 3, 2}, 5}, mv) == doctest::Approx(mv.m(3)).epsilon(1e-12));
    CHECK(eval_trace_cycles({{1, 3, 4, 3, 2}, 5}, mv) ==
          doctest::Approx(mv.m(4)).epsilon(1e-12));
}

TEST_CASE("scrambled six-copy words with one repeat reduce to tr(rho^5)") {
    const MomentVector mv = moments_of_spectrum({0.4, 0.3, 0.2, 0.1}, 6);
    for (const auto& word :
         {std::vector<int>{1, 3, 4, 5, 2, 1}, std::vector<int>{2, 3, 5, 4, 2, 1},
          std::vector<int>{1, 2, 4, 5, 3, 2}, std::vector<int>{2, 3, 4, 5, 4, 1}}) {
        CHECK(eval_trace_cycles({word, 6}, mv) == doctest::Approx(mv.m(5)).epsilon(1e-12));
    }
}

TEST_CASE("nonadjacent repeats split into the documented monomials") {
    const MomentVector mv = moments_of_spectrum({0.4, 0.3, 0.2, 0.1}, 6);
    CHECK(eval_trace_cycles({{1, 3, 5, 4, 1}, 6}, mv) ==
          doctest::Approx(monomial(mv, {4})).epsilon(1e-12));
    for (const auto& word : {std::vector<int>{2, 4, 5, 2, 1}, std::vector<int>{1, 2, 4, 5, 2},
                             std::vector<int>{1, 3, 5, 3, 2}}) {
        CHECK(eval_trace_cycles({word, 6}, mv) ==
              doctest::Approx(monomial(mv, {2, 3})).epsilon(1e-12));
    }
}

TEST_CASE("cycle evaluation matches the dense contraction oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 2);
        const int k = 2 + static_cast<int>(rng() % 5);
        const int len = static_cast<int>(rng() % 9);
        std::vector<int> word(static_cast<size_t>(len));
        for (int& t : word) t = 1 + static_cast<int>(rng() % (k - 1));
        const DensityMatrix dm = random_mixed(d, 1 + static_cast<int>(rng() % d), rng());
        const PermutationWord pw{word, k};
        CHECK(std::abs(eval_trace_cycles(pw, dm) - eval_trace_dense(pw, dm)) < 1e-10);
    }
}

TEST_CASE("involution and identity properties") {
    const DensityMatrix dm = random_mixed(3, 3, 5);
    const MomentVector mv = moments(dm, 4);
    // S_i S_i = I.
    CHECK(eval_trace_cycles({{2, 2}, 4}, mv) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eval_trace_cycles({{}, 4}, mv) == doctest::Approx(1.0).epsilon(1e-12));
    // A single transposition is tr(rho^2).
    CHECK(eval_trace_cycles({{3}, 4}, mv) == doctest::Approx(mv.m(2)).epsilon(1e-12));
}

TEST_CASE("errors on malformed words and oversized dense requests") {
    CHECK_THROWS_AS(compose_word({{3}, 3}), std::invalid_argument);
    CHECK_THROWS_AS(compose_word({{0}, 3}), std::invalid_argument);
    const DensityMatrix dm = random_mixed(8, 8, 1);
    CHECK_THROWS_AS(eval_trace_dense({{1, 2, 3}, 6}, dm), std::runtime_error);
}
