// estimate.hpp
// Inversion of controlled-SWAP measurement data to power traces, Hoeffding
// shot planning, and the Newton-Girard moment extension.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qswaptrace/cswap.hpp"
#include "qswaptrace/state.hpp"

namespace qswaptrace {

struct TraceEstimates {
    struct Entry {
        double estimate;  // T_k = 2 p_k - 1
        double p;         // even-parity frequency for the (k-1)-bit prefix
        double variance;  // 4 p (1-p) / M
    };
    std::map<int, Entry> per_k;
    long long shots = 0;
    std::optional<double> epsilon;
    std::optional<double> delta;
};

struct ShotPlan {
    double epsilon;
    double delta;
    int n_copies;
    long long shots;  // M = ceil((2/eps^2) ln(2(n-1)/delta))
};

// Coefficients a_1..a_r of the characteristic polynomial, a_0 = 1 implicit.
struct CharPolyCoeffs {
    std::vector<double> a;
    int rank;

    double coeff(int k) const { return k == 0 ? 1.0 : a.at(static_cast<size_t>(k) - 1); }
};

struct ExtendedMoments {
    MomentVector moments;
    std::vector<std::string> warnings;
};

// tr rho^k = 2 sum_{prefix parity even} p(z) - 1 for k in 2..n_controls+1.
double trace_from_distribution(const OutcomeDistribution& dist, int k);

// All T_k from one dataset in a single pass over the counts.
TraceEstimates traces_from_counts(const ShotCounts& counts, int k_min, int k_max);

ShotPlan plan_shots(double epsilon, double delta, int n_copies);

double estimator_variance(double p_k, long long shots);

// Exact moments recovered from an exact distribution (m_1 = 1 prepended).
MomentVector moments_from_distribution(const OutcomeDistribution& dist, int k_max);

CharPolyCoeffs newton_girard_coeffs(const MomentVector& mv, int r);

ExtendedMoments extend_moments(const CharPolyCoeffs& coeffs, const MomentVector& mv,
                               int l_max);

// Circuit + classical-iteration hybrid: an r-copy circuit (exact or sampled)
// supplies
// m_2..m_r, Newton-Girard extends to m_{n_target}.
ExtendedMoments hybrid_estimate_exact(const DensityMatrix& rho_x, int r, int n_target);
ExtendedMoments hybrid_estimate_sampled(const DensityMatrix& rho_x, int r, int n_target,
                                        const ShotPlan& plan, std::uint64_t seed);
ExtendedMoments hybrid_from_counts(const ShotCounts& counts, int r, int n_target);

}  // namespace qswaptrace
