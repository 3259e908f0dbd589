// Python bindings for the core operations.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qswaptrace/estimate.hpp"
#include "qswaptrace/experiments.hpp"
#include "qswaptrace/measures.hpp"
#include "qswaptrace/permtrace.hpp"
#include "qswaptrace/states_builtin.hpp"

namespace py = pybind11;
using namespace qswaptrace;

namespace {

py::dict estimates_dict(const TraceEstimates& est) {
    py::dict per_k;
    for (const auto& [k, e] : est.per_k) {
        py::dict entry;
        entry["estimate"] = e.estimate;
        entry["p"] = e.p;
        entry["variance"] = e.variance;
        per_k[py::int_(k)] = entry;
    }
    py::dict out;
    out["per_k"] = per_k;
    out["shots"] = est.shots;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "trace estimation via the n-copy controlled-SWAP test";

    py::class_<PureState>(m, "PureState")
        .def(py::init<Vector, std::vector<int>>(), py::arg("amplitudes"), py::arg("dims"))
        .def_readonly("amplitudes", &PureState::amplitudes)
        .def_readonly("dims", &PureState::dims)
        .def_property_readonly("total_dim", &PureState::total_dim);

    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def(py::init<Matrix, std::vector<int>>(), py::arg("entries"), py::arg("dims"))
        .def_readonly("entries", &DensityMatrix::entries)
        .def_readonly("dims", &DensityMatrix::dims)
        .def_property_readonly("side", &DensityMatrix::side);

    py::class_<MomentVector>(m, "MomentVector")
        .def_readonly("values", &MomentVector::values)
        .def_readonly("source_dim", &MomentVector::source_dim)
        .def("m", &MomentVector::m, py::arg("k"));

    py::class_<OutcomeDistribution>(m, "OutcomeDistribution")
        .def(py::init<std::vector<double>, int>(), py::arg("probabilities"),
             py::arg("n_controls"))
        .def_readonly("probabilities", &OutcomeDistribution::probabilities)
        .def_readonly("n_controls", &OutcomeDistribution::n_controls)
        .def("p", &OutcomeDistribution::p, py::arg("z"));

    py::class_<ShotCounts>(m, "ShotCounts")
        .def_readonly("counts", &ShotCounts::counts)
        .def_readonly("n_controls", &ShotCounts::n_controls)
        .def_readonly("total", &ShotCounts::total);

    m.def("make_ghz", &make_ghz, py::arg("num_qubits"));
    m.def("make_w", &make_w, py::arg("num_qubits"));
    m.def("random_pure", &random_pure, py::arg("dims"), py::arg("seed"));
    m.def("random_mixed", &random_mixed, py::arg("dim"), py::arg("rank"), py::arg("seed"));
    m.def("density_of", &density_of, py::arg("state"));
    m.def("reduced_density",
          py::overload_cast<const PureState&, const std::vector<int>&>(&reduced_density),
          py::arg("state"), py::arg("keep"));
    m.def("reduced_density",
          py::overload_cast<const DensityMatrix&, const std::vector<int>&>(&reduced_density),
          py::arg("state"), py::arg("keep"));
    m.def("moments", &moments, py::arg("dm"), py::arg("k_max"));
    m.def("moments_of_spectrum", &moments_of_spectrum, py::arg("eigenvalues"),
          py::arg("k_max"));

    m.def(
        "word_cycle_type",
        [](const std::vector<int>& word, int num_copies) {
            return cycle_type(compose_word({word, num_copies}));
        },
        py::arg("word"), py::arg("num_copies"));
    m.def(
        "word_trace",
        [](const std::vector<int>& word, int num_copies, const MomentVector& mv) {
            return eval_trace_cycles({word, num_copies}, mv);
        },
        py::arg("word"), py::arg("num_copies"), py::arg("moments"));

    m.def("exact_distribution_moments", &exact_distribution_moments, py::arg("moments"),
          py::arg("n_copies"), py::arg("copy_cap") = kDefaultMomentPathCopyCap);
    m.def("exact_distribution_dense", &exact_distribution_dense, py::arg("rho_x"),
          py::arg("n_copies"));
    m.def("exact_distribution_statevector", &exact_distribution_statevector,
          py::arg("state"), py::arg("n_copies"), py::arg("target"));
    m.def("sample", &sample, py::arg("dist"), py::arg("shots"), py::arg("seed"));
    m.def("normalize_counts", &normalize_counts, py::arg("counts"));
    m.def("outcome_string", &outcome_string, py::arg("z"), py::arg("n_controls"));
    m.def("outcome_index", &outcome_index, py::arg("z"));

    m.def("trace_from_distribution", &trace_from_distribution, py::arg("dist"), py::arg("k"));
    m.def(
        "traces_from_counts",
        [](const ShotCounts& counts, int k_min, int k_max) {
            return estimates_dict(traces_from_counts(counts, k_min, k_max));
        },
        py::arg("counts"), py::arg("k_min"), py::arg("k_max"));
    m.def(
        "plan_shots",
        [](double epsilon, double delta, int n_copies) {
            return plan_shots(epsilon, delta, n_copies).shots;
        },
        py::arg("epsilon"), py::arg("delta"), py::arg("n_copies"));
    m.def("moments_from_distribution", &moments_from_distribution, py::arg("dist"),
          py::arg("k_max"));
    m.def(
        "newton_girard_coeffs",
        [](const MomentVector& mv, int r) { return newton_girard_coeffs(mv, r).a; },
        py::arg("moments"), py::arg("rank"));
    m.def(
        "extend_moments",
        [](const MomentVector& mv, int r, int l_max) {
            const ExtendedMoments ext = extend_moments(newton_girard_coeffs(mv, r), mv, l_max);
            return py::make_tuple(ext.moments.values, ext.warnings);
        },
        py::arg("moments"), py::arg("rank"), py::arg("l_max"));
    m.def(
        "hybrid_estimate_exact",
        [](const DensityMatrix& rho_x, int r, int n_target) {
            const ExtendedMoments ext = hybrid_estimate_exact(rho_x, r, n_target);
            return py::make_tuple(ext.moments.values, ext.warnings);
        },
        py::arg("rho_x"), py::arg("rank"), py::arg("n_target"));

    m.def("exp_trace",
          [](const MomentVector& mv, int dim, int order) {
              return exp_trace(mv, dim, {order});
          },
          py::arg("moments"), py::arg("dim"), py::arg("order"));
    m.def("von_neumann_entropy",
          [](const MomentVector& mv, int dim, int order) {
              return von_neumann_entropy(mv, dim, {order});
          },
          py::arg("moments"), py::arg("dim"), py::arg("order"));
    m.def("gibbs_cost", &gibbs_cost, py::arg("moments"), py::arg("truncation"));
    m.def("concurrence", &concurrence, py::arg("m2"));
    m.def("icem", &icem, py::arg("moments"), py::arg("schmidt_rank_minus_one"));
    m.def("tsallis_q", &tsallis_q, py::arg("moments"), py::arg("q"));
    m.def("q_concurrence", &q_concurrence, py::arg("moments"), py::arg("q"));

    m.def(
        "run_mse_experiment",
        [](const std::string& state, int n_copies, long long shots, std::uint64_t seed) {
            const MseReport r = run_mse_experiment(state, n_copies, shots, seed);
            py::dict out;
            out["state"] = r.state_name;
            out["copies"] = r.n_copies;
            out["shots"] = r.shots;
            out["seed"] = r.seed;
            out["mse"] = r.mse;
            out["per_outcome"] = r.per_outcome;
            return out;
        },
        py::arg("state"), py::arg("n_copies"), py::arg("shots"), py::arg("seed"));
    m.def(
        "run_hoeffding_experiment",
        [](const std::string& state, int n_copies, double epsilon, double delta,
           int repetitions, std::uint64_t seed) {
            const HoeffdingReport r =
                run_hoeffding_experiment(state, n_copies, epsilon, delta, repetitions, seed);
            py::dict out;
            out["state"] = r.state_name;
            out["copies"] = r.n_copies;
            out["epsilon"] = r.epsilon;
            out["delta"] = r.delta;
            out["shots"] = r.shots;
            out["repetitions"] = r.repetitions;
            out["per_k_errors"] = r.per_k_errors;
            out["failure_fraction"] = r.failure_fraction;
            return out;
        },
        py::arg("state"), py::arg("n_copies"), py::arg("epsilon"), py::arg("delta"),
        py::arg("repetitions"), py::arg("seed"));
}
