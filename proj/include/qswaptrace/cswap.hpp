// cswap.hpp
// The n-copy controlled-SWAP test: exact control-register outcome
// distributions by three independent routes, plus multinomial sampling.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qswaptrace/state.hpp"

namespace qswaptrace {

inline constexpr int kDefaultMomentPathCopyCap = 10;
inline constexpr int kStatevectorCopyCap = 6;

// Distribution over (n-1)-bit control strings z = z_1...z_{n-1}. The
// leftmost character z_1 controls S_1 (the swap of copies 1 and 2); in
// the packed integer index z_1 is the most significant bit.
struct OutcomeDistribution {
    std::vector<double> probabilities;  // size 2^{n_controls}
    int n_controls;

    double p(int z) const { return probabilities.at(static_cast<size_t>(z)); }
    int num_outcomes() const { return static_cast<int>(probabilities.size()); }
};

struct ShotCounts {
    std::vector<long long> counts;  // indexed like OutcomeDistribution
    int n_controls;
    long long total;
};

// Circuit-size metadata for the n-copy test on a state of local dimension d.
struct CircuitSpec {
    int n_copies;
    std::vector<int> target;      // 1-based subsystem indices under test
    std::vector<int> state_dims;
    int gate_count;               // 3(n-1) gate groups (H, cswap, H per control)
    int control_qubits;           // n-1

    static CircuitSpec make(int n_copies, std::vector<int> target,
                            std::vector<int> state_dims);
};

// Exact p(z) from the power traces of rho_x via the full Kraus-word
// expansion; mv must cover m_1..m_{n_copies}.
OutcomeDistribution exact_distribution_moments(const MomentVector& mv, int n_copies,
                                               int copy_cap = kDefaultMomentPathCopyCap);

// Exact p(z) = tr(Kz^dag Kz rho_x^{(x)n}) by dense operator products.
// Requires side(rho_x)^n <= 2^12.
OutcomeDistribution exact_distribution_dense(const DensityMatrix& rho_x, int n_copies);

// Full statevector simulation of the circuit: Hadamards on all
// controls, the controlled-SWAP ladder on the target subsystems, Hadamards
// again, then the marginal of the control register.
OutcomeDistribution exact_distribution_statevector(const PureState& state, int n_copies,
                                                   const std::vector<int>& target);

// Multinomial draw, deterministic per seed.
ShotCounts sample(const OutcomeDistribution& dist, long long shots, std::uint64_t seed);

OutcomeDistribution normalize_counts(const ShotCounts& counts);

std::string outcome_string(int z, int n_controls);
int outcome_index(const std::string& z);

}  // namespace qswaptrace
