#include "qswaptrace/estimate.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qswaptrace {

namespace {

// Parity of the (k-1)-bit prefix z_1..z_{k-1} of a packed outcome index.
bool prefix_even(int z, int n_controls, int k) {
    const int prefix = z >> (n_controls - (k - 1));
    return (std::popcount(static_cast<unsigned>(prefix)) & 1) == 0;
}

}  // namespace

double trace_from_distribution(const OutcomeDistribution& dist, int k) {
    if (k < 2 || k > dist.n_controls + 1)
        throw std::invalid_argument("k must be in 2..n_controls+1");
    long double even = 0.0L;
    for (int z = 0; z < dist.num_outcomes(); ++z)
        if (prefix_even(z, dist.n_controls, k)) even += dist.p(z);
    return static_cast<double>(2.0L * even - 1.0L);
}

TraceEstimates traces_from_counts(const ShotCounts& counts, int k_min, int k_max) {
    if (counts.total < 1) throw std::invalid_argument("empty counts");
    if (k_min < 2 || k_max > counts.n_controls + 1 || k_min > k_max)
        throw std::invalid_argument("k range must lie within 2..n_controls+1");

    TraceEstimates est;
    est.shots = counts.total;
    // One pass: every k reads the same dataset through its prefix parity.
    std::vector<long long> even(static_cast<size_t>(k_max - k_min + 1), 0);
    for (int z = 0; z < static_cast<int>(counts.counts.size()); ++z) {
        if (counts.counts[z] == 0) continue;
        for (int k = k_min; k <= k_max; ++k)
            if (prefix_even(z, counts.n_controls, k)) even[k - k_min] += counts.counts[z];
    }
    for (int k = k_min; k <= k_max; ++k) {
        const double p =
            static_cast<double>(even[k - k_min]) / static_cast<double>(counts.total);
        est.per_k[k] = {2.0 * p - 1.0, p, estimator_variance(p, counts.total)};
    }
    return est;
}

ShotPlan plan_shots(double epsilon, double delta, int n_copies) {
    if (!(epsilon > 0.0) || epsilon >= 2.0)
        throw std::invalid_argument("epsilon must be in (0, 2)");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must be in (0, 1)");
    if (n_copies < 2) throw std::invalid_argument("n_copies must be >= 2");
    const double m = std::ceil(2.0 / (epsilon * epsilon) *
                               std::log(2.0 * (n_copies - 1) / delta));
    return ShotPlan{epsilon, delta, n_copies, static_cast<long long>(m)};
}

double estimator_variance(double p_k, long long shots) {
    if (p_k < 0.0 || p_k > 1.0) throw std::invalid_argument("p_k must be in [0, 1]");
    if (shots < 1) throw std::invalid_argument("shots must be >= 1");
    return 4.0 * p_k * (1.0 - p_k) / static_cast<double>(shots);
}

MomentVector moments_from_distribution(const OutcomeDistribution& dist, int k_max) {
    if (k_max < 1 || k_max > dist.n_controls + 1)
        throw std::invalid_argument("k_max must be in 1..n_controls+1");
    MomentVector mv;
    mv.values.push_back(1.0);
    for (int k = 2; k <= k_max; ++k) mv.values.push_back(trace_from_distribution(dist, k));
    return mv;
}

CharPolyCoeffs newton_girard_coeffs(const MomentVector& mv, int r) {
    if (r < 1) throw std::invalid_argument("rank must be >= 1");
    if (mv.max_order() < r) throw std::invalid_argument("moment vector must cover m_1..m_r");
    CharPolyCoeffs coeffs;
    coeffs.rank = r;
    // a_k = (1/k) sum_{i=1..k} (-1)^{i-1} a_{k-i} m_i, a_0 = 1.
    for (int k = 1; k <= r; ++k) {
        long double sum = 0.0L;
        for (int i = 1; i <= k; ++i) {
            const long double term =
                static_cast<long double>(coeffs.coeff(k - i)) * mv.m(i);
            sum += (i % 2 == 1) ? term : -term;
        }
        coeffs.a.push_back(static_cast<double>(sum / k));
    }
    return coeffs;
}

ExtendedMoments extend_moments(const CharPolyCoeffs& coeffs, const MomentVector& mv,
                               int l_max) {
    const int r = coeffs.rank;
    if (mv.max_order() < r) throw std::invalid_argument("moment vector must cover m_1..m_r");
    if (l_max < 0) throw std::invalid_argument("l_max must be >= 0");

    ExtendedMoments out;
    out.moments.source_dim = mv.source_dim;
    out.moments.values.assign(mv.values.begin(), mv.values.begin() + r);

    // Diagnostic: the recurrence must reproduce the input moments.
    for (int k = 2; k <= r; ++k) {
        long double rec = (k % 2 == 1) ? k * coeffs.coeff(k) : -k * coeffs.coeff(k);
        for (int i = 1; i <= k - 1; ++i) {
            const long double term =
                static_cast<long double>(coeffs.coeff(i)) * mv.m(k - i);
            rec += (i % 2 == 1) ? term : -term;
        }
        if (std::abs(static_cast<double>(rec) - mv.m(k)) > 1e-8) {
            out.warnings.push_back("declared rank " + std::to_string(r) +
                                   " inconsistent with m_" + std::to_string(k));
            break;
        }
    }

    const double m_r = out.moments.values.back();
    for (int l = 1; l <= l_max; ++l) {
        // m_{r+l} = sum_{j=1..r} (-1)^{j-1} a_j m_{r+l-j}
        long double next = 0.0L;
        for (int j = 1; j <= r; ++j) {
            const long double term = static_cast<long double>(coeffs.coeff(j)) *
                                     out.moments.m(r + l - j);
            next += (j % 2 == 1) ? term : -term;
        }
        const double value = static_cast<double>(next);
        if (value < 0.0 || value > m_r * (1.0 + 1e-6))
            out.warnings.push_back("extended moment m_" + std::to_string(r + l) +
                                   " outside [0, m_r]: numeric instability");
        out.moments.values.push_back(value);
    }
    return out;
}

namespace {

ExtendedMoments hybrid_from_moment_vector(MomentVector measured, int r, int n_target) {
    measured.values.resize(static_cast<size_t>(r));
    CharPolyCoeffs coeffs = newton_girard_coeffs(measured, r);
    return extend_moments(coeffs, measured, n_target - r);
}

}  // namespace

ExtendedMoments hybrid_estimate_exact(const DensityMatrix& rho_x, int r, int n_target) {
    if (r < 1) throw std::invalid_argument("rank must be >= 1");
    if (n_target < r) throw std::invalid_argument("n_target must be >= r");
    if (r == 1) {
        // Rank-1 states need no circuit: every moment is 1.
        ExtendedMoments out;
        out.moments.source_dim = rho_x.side();
        out.moments.values.assign(static_cast<size_t>(n_target), 1.0);
        return out;
    }
    const OutcomeDistribution dist = exact_distribution_moments(moments(rho_x, r), r);
    MomentVector measured = moments_from_distribution(dist, r);
    measured.source_dim = rho_x.side();
    return hybrid_from_moment_vector(std::move(measured), r, n_target);
}

ExtendedMoments hybrid_estimate_sampled(const DensityMatrix& rho_x, int r, int n_target,
                                        const ShotPlan& plan, std::uint64_t seed) {
    if (r < 2) throw std::invalid_argument("sampled hybrid needs rank >= 2");
    if (n_target < r) throw std::invalid_argument("n_target must be >= r");
    const OutcomeDistribution dist = exact_distribution_moments(moments(rho_x, r), r);
    const ShotCounts counts = sample(dist, plan.shots, seed);
    return hybrid_from_counts(counts, r, n_target);
}

ExtendedMoments hybrid_from_counts(const ShotCounts& counts, int r, int n_target) {
    if (r < 2 || r > counts.n_controls + 1)
        throw std::invalid_argument("rank must be in 2..n_controls+1");
    if (n_target < r) throw std::invalid_argument("n_target must be >= r");
    const TraceEstimates est = traces_from_counts(counts, 2, r);
    MomentVector measured;
    measured.values.push_back(1.0);
    for (int k = 2; k <= r; ++k) measured.values.push_back(est.per_k.at(k).estimate);
    return hybrid_from_moment_vector(std::move(measured), r, n_target);
}

}  // namespace qswaptrace
