#include "qswaptrace/measures.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qswaptrace/estimate.hpp"

namespace qswaptrace {

namespace {

// Pascal-triangle binomials up to row n.
std::vector<std::vector<double>> binomials(int n) {
    std::vector<std::vector<double>> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        c[i].assign(static_cast<size_t>(i) + 1, 1.0);
        for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
}

// Truncated tr(rho ln rho) = sum_{n=1..N} ((-1)^{n+1}/n) tr(rho (rho-I)^n)
// with the binomial re-expansion into power traces.
double log_trace_series(const MomentVector& mv, int order) {
    if (order < 1) throw std::invalid_argument("truncation order must be >= 1");
    if (mv.max_order() < order + 1)
        throw std::invalid_argument("moment vector must cover m_1..m_{N+1}");
    const auto binom = binomials(order);
    long double total = 0.0L;
    for (int n = 1; n <= order; ++n) {
        long double inner = 0.0L;
        for (int s = 0; s <= n; ++s) {
            const long double term = binom[n][s] * mv.m(s + 1);
            inner += ((n - s) % 2 == 0) ? term : -term;
        }
        total += ((n % 2 == 1) ? inner : -inner) / n;
    }
    return static_cast<double>(total);
}

}  // namespace

double exp_trace(const MomentVector& mv, int dim, TruncationSpec trunc) {
    if (trunc.order < 1) throw std::invalid_argument("truncation order must be >= 1");
    if (dim < 1) throw std::invalid_argument("dim must be >= 1");
    if (trunc.order >= 2 && mv.max_order() < trunc.order)
        throw std::invalid_argument("moment vector must cover m_2..m_N");
    long double total = dim + 1.0L;  // m_0 = tr I = dim, m_1 = 1
    long double factorial = 1.0L;
    for (int n = 2; n <= trunc.order; ++n) {
        factorial *= n;
        total += mv.m(n) / factorial;
    }
    return static_cast<double>(total);
}

double von_neumann_entropy(const MomentVector& mv, int dim, TruncationSpec trunc) {
    (void)dim;
    return -log_trace_series(mv, trunc.order);
}

double von_neumann_entropy(const DensityMatrix& dm, TruncationSpec trunc) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(dm.entries, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() <= 1e-9)
        throw std::runtime_error("entropy series diverges for rank-deficient states");
    return von_neumann_entropy(moments(dm, trunc.order + 1), dm.side(), trunc);
}

double gibbs_cost(const MomentVector& mv, int truncation) {
    return log_trace_series(mv, truncation);
}

double concurrence(double m2) {
    if (m2 < 0.0 || m2 > 1.0) throw std::invalid_argument("m2 must be in [0, 1]");
    return std::sqrt(2.0 * (1.0 - m2));
}

double icem(const MomentVector& mv, int schmidt_rank_minus_one) {
    const int r = schmidt_rank_minus_one;
    if (r < 0) throw std::invalid_argument("R must be >= 0");
    if (mv.max_order() < r + 1)
        throw std::invalid_argument("moment vector must cover m_1..m_{R+1}");
    const auto binom = binomials(r);
    long double sum = 0.0L;
    for (int i = 0; i <= r; ++i) sum += binom[r][i] * mv.m(i + 1);
    return static_cast<double>(1.0L - sum / std::pow(2.0L, r));
}

double tsallis_q(const MomentVector& mv, int q) {
    if (q < 2) throw std::invalid_argument("q must be an integer >= 2");
    if (mv.max_order() < q) throw std::invalid_argument("moment vector must cover m_q");
    return (1.0 - mv.m(q)) / (q - 1);
}

double q_concurrence(const MomentVector& mv, int q) {
    if (q < 2) throw std::invalid_argument("q must be an integer >= 2");
    if (mv.max_order() < q) throw std::invalid_argument("moment vector must cover m_q");
    return 1.0 - mv.m(q);
}

namespace {

// 2 * sum over odd (q-1)-prefix parity = 1 - m_q.
double odd_parity_mass(const OutcomeDistribution& dist, int q) {
    return 1.0 - trace_from_distribution(dist, q);
}

}  // namespace

double concurrence_from_distribution(const OutcomeDistribution& dist) {
    // C_E = 2 sqrt(1 - p_even) with p_even = (m_2 + 1) / 2.
    const double p_even = (trace_from_distribution(dist, 2) + 1.0) / 2.0;
    return 2.0 * std::sqrt(1.0 - p_even);
}

double icem_from_distribution(const OutcomeDistribution& dist, int schmidt_rank_minus_one) {
    const int r = schmidt_rank_minus_one;
    if (r < 0) throw std::invalid_argument("R must be >= 0");
    if (r > dist.n_controls)
        throw std::invalid_argument("distribution too small for the requested R");
    const auto binom = binomials(r);
    long double sum = 0.0L;
    for (int i = 1; i <= r; ++i) {
        long double even = 0.0L;
        for (int z = 0; z < dist.num_outcomes(); ++z) {
            const int prefix = z >> (dist.n_controls - i);
            int bits = 0;
            for (int b = prefix; b; b >>= 1) bits += b & 1;
            if (bits % 2 == 0) even += dist.p(z);
        }
        sum += binom[r][i] * even;
    }
    const long double half_pow = std::pow(2.0L, r - 1);
    return static_cast<double>(2.0L - sum / half_pow - 1.0L / half_pow);
}

double tsallis_q_from_distribution(const OutcomeDistribution& dist, int q) {
    if (q < 2) throw std::invalid_argument("q must be an integer >= 2");
    return odd_parity_mass(dist, q) / (q - 1);
}

double q_concurrence_from_distribution(const OutcomeDistribution& dist, int q) {
    if (q < 2) throw std::invalid_argument("q must be an integer >= 2");
    return odd_parity_mass(dist, q);
}

}  // namespace qswaptrace
