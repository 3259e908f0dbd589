#include "qswaptrace/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "qswaptrace/states_builtin.hpp"

namespace qswaptrace {

namespace {

constexpr double kCrossCheckTol = 1e-10;

struct ExperimentState {
    AnyState state;
    OutcomeDistribution exact;
    MomentVector mv;
};

ExperimentState prepare(const std::string& state_name, int n_copies) {
    if (n_copies < 2) throw std::invalid_argument("n_copies must be >= 2");
    AnyState state = builtin_state(state_name);
    const DensityMatrix reduced = reduced_of(state, {1});
    MomentVector mv = moments(reduced, n_copies);
    OutcomeDistribution exact = exact_distribution_moments(mv, n_copies);
    // Cross-validate against the circuit simulation once per run (when the
    // full register fits in memory).
    bool fits = std::holds_alternative<PureState>(state) && n_copies <= kStatevectorCopyCap;
    if (fits) {
        double size = std::pow(2.0, n_copies - 1);
        for (int c = 0; c < n_copies; ++c)
            size *= std::get<PureState>(state).total_dim();
        fits = size <= static_cast<double>(1LL << 22);
    }
    if (fits) {
        const OutcomeDistribution sv =
            exact_distribution_statevector(std::get<PureState>(state), n_copies, {1});
        for (int z = 0; z < exact.num_outcomes(); ++z)
            if (std::abs(sv.p(z) - exact.p(z)) > kCrossCheckTol)
                throw std::runtime_error("moment/statevector cross-check failed");
    }
    return ExperimentState{std::move(state), std::move(exact), std::move(mv)};
}

// Fixed-order parallel map over repetition indices.
template <typename Fn>
void parallel_reps(int repetitions, Fn&& fn) {
    int cap = thread_cap_from_env();
    if (cap == 0) cap = static_cast<int>(std::thread::hardware_concurrency());
    cap = std::max(1, std::min(cap, repetitions));
    if (cap == 1) {
        for (int r = 0; r < repetitions; ++r) fn(r);
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < cap; ++t)
        pool.emplace_back([&, t] {
            for (int r = t; r < repetitions; r += cap) fn(r);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

double mse(const OutcomeDistribution& sim, const OutcomeDistribution& exact) {
    if (sim.n_controls != exact.n_controls)
        throw std::invalid_argument("mismatched control-register sizes");
    long double sum = 0.0L;
    for (int z = 0; z < exact.num_outcomes(); ++z) {
        const long double d = sim.p(z) - exact.p(z);
        sum += d * d;
    }
    return static_cast<double>(sum / exact.num_outcomes());
}

MseReport run_mse_experiment(const std::string& state_name, int n_copies, long long shots,
                             std::uint64_t seed) {
    if (n_copies < 3 || n_copies > 6)
        throw std::invalid_argument("mse experiment supports 3..6 copies");
    const ExperimentState prep = prepare(state_name, n_copies);
    const ShotCounts counts = sample(prep.exact, shots, seed);
    const OutcomeDistribution sim = normalize_counts(counts);

    MseReport report;
    report.state_name = state_name;
    report.n_copies = n_copies;
    report.shots = shots;
    report.seed = seed;
    report.mse = mse(sim, prep.exact);
    for (int z = 0; z < prep.exact.num_outcomes(); ++z)
        report.per_outcome[outcome_string(z, prep.exact.n_controls)] = {sim.p(z),
                                                                        prep.exact.p(z)};
    return report;
}

HoeffdingReport run_hoeffding_experiment(const std::string& state_name, int n_copies,
                                         double epsilon, double delta, int repetitions,
                                         std::uint64_t seed) {
    if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
    const ExperimentState prep = prepare(state_name, n_copies);
    const ShotPlan plan = plan_shots(epsilon, delta, n_copies);

    HoeffdingReport report;
    report.state_name = state_name;
    report.n_copies = n_copies;
    report.epsilon = epsilon;
    report.delta = delta;
    report.shots = plan.shots;
    report.repetitions = repetitions;
    for (int k = 2; k <= n_copies; ++k)
        report.per_k_errors[k].assign(static_cast<size_t>(repetitions), 0.0);

    std::vector<char> failed(static_cast<size_t>(repetitions), 0);
    parallel_reps(repetitions, [&](int rep) {
        const ShotCounts counts = sample(prep.exact, plan.shots, seed + rep);
        const TraceEstimates est = traces_from_counts(counts, 2, n_copies);
        for (int k = 2; k <= n_copies; ++k) {
            const double err = std::abs(est.per_k.at(k).estimate - prep.mv.m(k));
            report.per_k_errors.at(k)[static_cast<size_t>(rep)] = err;
            if (err > epsilon) failed[static_cast<size_t>(rep)] = 1;
        }
    });
    int failures = 0;
    for (char f : failed) failures += f;
    report.failure_fraction = static_cast<double>(failures) / repetitions;
    return report;
}

int thread_cap_from_env() {
    const char* env = std::getenv("QSWAPTRACE_THREADS");
    if (!env) return 1;
    const int v = std::atoi(env);
    return v < 0 ? 1 : v;
}

}  // namespace qswaptrace
