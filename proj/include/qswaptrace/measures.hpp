// measures.hpp
// Nonlinear functionals and entanglement measures expressed through the
// power traces of a reduced density matrix.

#pragma once

#include "qswaptrace/cswap.hpp"
#include "qswaptrace/state.hpp"

namespace qswaptrace {

struct TruncationSpec {
    int order;  // Taylor truncation order N >= 1
};

// tr(e^rho) truncated: dim + 1 + sum_{n=2..N} m_n / n!
double exp_trace(const MomentVector& mv, int dim, TruncationSpec trunc);

// Von Neumann entropy -tr(rho ln rho) via the Mercator series in the
// binomial re-expansion. Requires full rank (series diverges at eigenvalue
// 0); when a DensityMatrix is available use the guarded overload.
double von_neumann_entropy(const MomentVector& mv, int dim, TruncationSpec trunc);
double von_neumann_entropy(const DensityMatrix& dm, TruncationSpec trunc);

// Truncated tr(rho ln rho) series (the negative of the entropy series),
// used as a Gibbs-state preparation cost.
double gibbs_cost(const MomentVector& mv, int truncation);

// C_E = sqrt(2 (1 - m_2)).
double concurrence(double m2);

// E^C = 1 - 2^{-R} sum_{i=0..R} C(R,i) m_{i+1}, R+1 the Schmidt rank.
double icem(const MomentVector& mv, int schmidt_rank_minus_one);

// T_q = (1 - m_q) / (q - 1), integer q >= 2.
double tsallis_q(const MomentVector& mv, int q);

// C_q = 1 - m_q, integer q >= 2.
double q_concurrence(const MomentVector& mv, int q);

// Probability-form evaluations from an exact outcome distribution. The
// Tsallis/q-concurrence forms use the odd-parity sum 2*sum_{odd} p, which
// matches the definitions through the parity inversion identity.
double concurrence_from_distribution(const OutcomeDistribution& dist);
double icem_from_distribution(const OutcomeDistribution& dist, int schmidt_rank_minus_one);
double tsallis_q_from_distribution(const OutcomeDistribution& dist, int q);
double q_concurrence_from_distribution(const OutcomeDistribution& dist, int q);

}  // namespace qswaptrace
