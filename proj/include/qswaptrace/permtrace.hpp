// permtrace.hpp
// Traces of adjacent-transposition words acting on copies of a state,
// evaluated through cycle decomposition with a dense contraction oracle.

#pragma once

#include <vector>

#include "qswaptrace/state.hpp"

namespace qswaptrace {

// Ordered product S_{i1} S_{i2} ... S_{im}; the rightmost factor acts
// first on states. Indices are 1-based in 1..num_copies-1.
struct PermutationWord {
    std::vector<int> transpositions;
    int num_copies;
};

// Multiset of cycle lengths (fixed points included as length 1).
using CycleType = std::vector<int>;

// Permutation on {1..k} as a 0-based array: perm[x-1] = pi(x).
using Permutation = std::vector<int>;

Permutation compose_word(const PermutationWord& word);

CycleType cycle_type(const Permutation& perm);

// tr(S_word rho^{(x)k}) = product of m_{|c|} over cycles of the composed
// permutation.
double eval_trace_cycles(const PermutationWord& word, const MomentVector& mv);
double eval_trace_cycles(const PermutationWord& word, const DensityMatrix& dm);

// Independent oracle: contracts tr(P_word . dm^{(x)k}) over the full basis.
// Requires side(dm)^k <= 2^14.
double eval_trace_dense(const PermutationWord& word, const DensityMatrix& dm);

// Cycle type rendered as "tr(rho^2)*tr(rho^3)" (length-1 cycles omitted).
std::string trace_expression(const CycleType& cycles);

}  // namespace qswaptrace
