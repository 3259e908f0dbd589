// experiments.hpp
// Desk-scale reproduction of the numerical studies: simulated-vs-exact MSE
// runs and Hoeffding error-distribution runs.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qswaptrace/cswap.hpp"
#include "qswaptrace/estimate.hpp"

namespace qswaptrace {

struct MseReport {
    std::string state_name;
    int n_copies;
    long long shots;
    std::uint64_t seed;
    double mse;
    // outcome string -> (simulated, exact)
    std::map<std::string, std::pair<double, double>> per_outcome;
};

struct HoeffdingReport {
    std::string state_name;
    int n_copies;
    double epsilon;
    double delta;
    long long shots;  // per repetition
    int repetitions;
    std::map<int, std::vector<double>> per_k_errors;  // |T_k - m_k| per repetition
    double failure_fraction;  // repetitions where any k exceeds epsilon
};

// Mean over all 2^{n-1} outcomes of the squared probability difference.
double mse(const OutcomeDistribution& sim, const OutcomeDistribution& exact);

// Exact distribution via the moment path (cross-checked against the
// statevector path once), sampled with the given shot budget.
MseReport run_mse_experiment(const std::string& state_name, int n_copies, long long shots,
                             std::uint64_t seed);

HoeffdingReport run_hoeffding_experiment(const std::string& state_name, int n_copies,
                                         double epsilon, double delta, int repetitions,
                                         std::uint64_t seed);

// Thread cap for repetition loops: 0 = hardware concurrency. The
// QSWAPTRACE_THREADS environment variable seeds the default.
int thread_cap_from_env();

}  // namespace qswaptrace
