// qswaptrace: command-line front end for the controlled-SWAP trace toolkit.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qswaptrace/estimate.hpp"
#include "qswaptrace/experiments.hpp"
#include "qswaptrace/io.hpp"
#include "qswaptrace/measures.hpp"
#include "qswaptrace/permtrace.hpp"
#include "qswaptrace/states_builtin.hpp"

namespace {

using namespace qswaptrace;
using io::json;

// Usage-level problems (bad flag combinations, unsupported formats) exit 2;
// computation problems exit 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    std::string path;    // empty = stdout
    std::string format;  // "json" or "csv"
};

void write_text(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

void emit_json(const json& j, const Output& out) {
    if (out.format != "json")
        throw UsageError("this subcommand only supports --format json");
    write_text(j.dump(2) + "\n", out.path);
}

// CSV cells are printed with 17 significant digits so doubles round-trip.
std::string csv_cell(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

AnyState resolve_state(const std::string& name, const std::string& file) {
    if (!name.empty() && !file.empty())
        throw UsageError("--state and --state-file are mutually exclusive");
    if (!name.empty()) {
        if (!is_builtin_state(name))
            throw UsageError("unknown built-in state: " + name);
        return builtin_state(name);
    }
    if (!file.empty()) return io::state_from_json(io::load_json(file));
    throw UsageError("one of --state or --state-file is required");
}

int subsystem_count(const AnyState& state) {
    return std::holds_alternative<PureState>(state)
               ? std::get<PureState>(state).num_subsystems()
               : static_cast<int>(std::get<DensityMatrix>(state).dims.size());
}

// "all", "1", or "1,3" -> 1-based subsystem indices.
std::vector<int> parse_cut(const std::string& spec, const AnyState& state) {
    std::vector<int> cut;
    if (spec == "all") {
        for (int i = 1; i <= subsystem_count(state); ++i) cut.push_back(i);
        return cut;
    }
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            cut.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw UsageError("bad subsystem list: " + spec);
        }
    }
    if (cut.empty()) throw UsageError("bad subsystem list: " + spec);
    return cut;
}

// "2..6" or "4" -> [k_min, k_max].
std::pair<int, int> parse_k_range(const std::string& spec) {
    const auto dots = spec.find("..");
    try {
        if (dots == std::string::npos) {
            const int k = std::stoi(spec);
            return {k, k};
        }
        return {std::stoi(spec.substr(0, dots)), std::stoi(spec.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("bad k range: " + spec);
    }
}

std::vector<int> parse_word(const std::string& spec) {
    std::vector<int> word;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            word.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw UsageError("bad word: " + spec);
        }
    }
    return word;
}

json distribution_with_meta(const OutcomeDistribution& dist, const std::string& method) {
    json j = io::distribution_to_json(dist);
    j["method"] = method;
    return j;
}

void emit_distribution(const OutcomeDistribution& dist, const std::string& method,
                       const Output& out) {
    if (out.format == "csv") {
        std::string text = "outcome,probability\n";
        for (int z = 0; z < dist.num_outcomes(); ++z)
            text += outcome_string(z, dist.n_controls) + "," + csv_cell(dist.p(z)) + "\n";
        write_text(text, out.path);
        return;
    }
    emit_json(distribution_with_meta(dist, method), out);
}

int run(int argc, char** argv) {
    CLI::App app{"trace estimation via the n-copy controlled-SWAP test"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    Output out{"", "json"};
    app.add_option("--seed", seed, "base RNG seed (default 0)");
    app.add_option("--out", out.path, "write output to a file instead of stdout");
    app.add_option("--format", out.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string state_name, state_file, cut_spec = "1";
    auto add_state_flags = [&](CLI::App* cmd, bool with_cut) {
        cmd->add_option("--state", state_name, "built-in state name");
        cmd->add_option("--state-file", state_file, "state JSON file");
        if (with_cut)
            cmd->add_option("--target,--cut", cut_spec,
                            "subsystem cut: comma list or 'all' (default 1)");
    };

    // state
    auto* cmd_state = app.add_subcommand("state", "emit a state as JSON");
    bool state_reduce = false;
    add_state_flags(cmd_state, true);
    cmd_state->add_flag("--reduced", state_reduce, "emit the reduced state of the cut");

    // exact-dist
    auto* cmd_dist = app.add_subcommand("exact-dist", "exact outcome distribution");
    int copies = 3;
    std::string method = "moments";
    add_state_flags(cmd_dist, true);
    cmd_dist->add_option("--copies", copies, "number of state copies n")->required();
    cmd_dist->add_option("--method", method, "moments | dense | statevector")
        ->check(CLI::IsMember({"moments", "dense", "statevector"}));

    // sample
    auto* cmd_sample = app.add_subcommand("sample", "draw shots from a distribution");
    long long shots = 0;
    std::string dist_file;
    add_state_flags(cmd_sample, true);
    cmd_sample->add_option("--copies", copies, "number of state copies n");
    cmd_sample->add_option("--dist", dist_file, "distribution JSON file to sample from");
    cmd_sample->add_option("--shots", shots, "number of shots")->required();

    // estimate
    auto* cmd_est = app.add_subcommand("estimate", "invert counts to trace estimates");
    std::string counts_file, k_spec = "2..2";
    cmd_est->add_option("--counts", counts_file, "counts JSON file")->required();
    cmd_est->add_option("--k", k_spec, "order or range, e.g. 3 or 2..6")->required();

    // plan-shots
    auto* cmd_plan = app.add_subcommand("plan-shots", "Hoeffding shot budget");
    double epsilon = 0.01, delta = 0.05;
    cmd_plan->add_option("--epsilon", epsilon, "additive error bound")->required();
    cmd_plan->add_option("--delta", delta, "failure probability")->required();
    cmd_plan->add_option("--copies", copies, "number of state copies n")->required();

    // newton-girard
    auto* cmd_ng = app.add_subcommand("newton-girard", "extend moments from a known rank");
    std::string moments_file;
    int rank = 2, extend = 0;
    cmd_ng->add_option("--moments", moments_file, "moments JSON file")->required();
    cmd_ng->add_option("--rank", rank, "declared rank r")->required();
    cmd_ng->add_option("--extend", extend, "number of extra orders")->required();

    // measure
    auto* cmd_meas = app.add_subcommand("measure", "entanglement measures");
    std::string kind;
    int q = 2, schmidt_r = 1;
    cmd_meas->add_option("--kind", kind, "concurrence | icem | tsallis | qconcurrence")
        ->required()
        ->check(CLI::IsMember({"concurrence", "icem", "tsallis", "qconcurrence"}));
    add_state_flags(cmd_meas, true);
    cmd_meas->add_option("--q", q, "moment order for tsallis/qconcurrence");
    cmd_meas->add_option("--R", schmidt_r, "Schmidt rank minus one for icem");

    // nonlinear
    auto* cmd_nl = app.add_subcommand("nonlinear", "nonlinear trace functionals");
    int trunc = 12;
    cmd_nl->add_option("--kind", kind, "exp-trace | entropy | gibbs-cost")
        ->required()
        ->check(CLI::IsMember({"exp-trace", "entropy", "gibbs-cost"}));
    add_state_flags(cmd_nl, true);
    cmd_nl->add_option("--trunc", trunc, "truncation order N")->required();

    // experiment
    auto* cmd_exp = app.add_subcommand("experiment", "numerical studies");
    cmd_exp->require_subcommand(1);
    auto* cmd_mse = cmd_exp->add_subcommand("mse", "simulated-vs-exact MSE run");
    cmd_mse->add_option("--state", state_name, "built-in state name")->required();
    cmd_mse->add_option("--copies", copies, "number of state copies n")->required();
    cmd_mse->add_option("--shots", shots, "shots per run")->required();
    auto* cmd_hoef = cmd_exp->add_subcommand("hoeffding", "error-distribution run");
    int reps = 200;
    cmd_hoef->add_option("--state", state_name, "built-in state name")->required();
    cmd_hoef->add_option("--copies", copies, "number of state copies n")->required();
    cmd_hoef->add_option("--epsilon", epsilon, "additive error bound")->required();
    cmd_hoef->add_option("--delta", delta, "failure probability")->required();
    cmd_hoef->add_option("--reps", reps, "number of repetitions");

    // word-trace
    auto* cmd_word = app.add_subcommand("word-trace", "cycle type of a SWAP word");
    std::string word_spec;
    cmd_word->add_option("--word", word_spec, "comma list of transposition indices")
        ->required();
    cmd_word->add_option("--copies", copies, "number of state copies k")->required();
    add_state_flags(cmd_word, true);

    // Global flags (--seed, --out, --format) may appear after the subcommand.
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; })) {
        sc->fallthrough();
        for (CLI::App* nested : sc->get_subcommands([](const CLI::App*) { return true; }))
            nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // help exits 0; any usage problem exits 2
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (*cmd_state) {
        AnyState state = resolve_state(state_name, state_file);
        if (state_reduce)
            state = AnyState(reduced_of(state, parse_cut(cut_spec, state)));
        emit_json(io::state_to_json(state), out);
    } else if (*cmd_dist) {
        const AnyState state = resolve_state(state_name, state_file);
        const std::vector<int> cut = parse_cut(cut_spec, state);
        OutcomeDistribution dist{{}, 0};
        if (method == "moments") {
            const DensityMatrix red = reduced_of(state, cut);
            dist = exact_distribution_moments(moments(red, copies), copies);
        } else if (method == "dense") {
            dist = exact_distribution_dense(reduced_of(state, cut), copies);
        } else {
            if (!std::holds_alternative<PureState>(state))
                throw UsageError("--method statevector requires a pure state");
            dist = exact_distribution_statevector(std::get<PureState>(state), copies, cut);
        }
        emit_distribution(dist, method, out);
    } else if (*cmd_sample) {
        OutcomeDistribution dist{{}, 0};
        if (!dist_file.empty()) {
            dist = io::distribution_from_json(io::load_json(dist_file));
        } else {
            const AnyState state = resolve_state(state_name, state_file);
            const DensityMatrix red = reduced_of(state, parse_cut(cut_spec, state));
            if (copies < 2) throw UsageError("--copies is required without --dist");
            dist = exact_distribution_moments(moments(red, copies), copies);
        }
        const ShotCounts counts = sample(dist, shots, seed);
        if (out.format == "csv") {
            std::string text = "outcome,count\n";
            for (int z = 0; z < static_cast<int>(counts.counts.size()); ++z)
                text += outcome_string(z, counts.n_controls) + "," +
                        std::to_string(counts.counts[z]) + "\n";
            write_text(text, out.path);
        } else {
            emit_json(io::counts_to_json(counts), out);
        }
    } else if (*cmd_est) {
        const ShotCounts counts = io::counts_from_json(io::load_json(counts_file));
        const auto [k_min, k_max] = parse_k_range(k_spec);
        const TraceEstimates est = traces_from_counts(counts, k_min, k_max);
        if (out.format == "csv") {
            std::string text = "k,estimate,p,variance\n";
            for (const auto& [k, e] : est.per_k)
                text += std::to_string(k) + "," + csv_cell(e.estimate) + "," +
                        csv_cell(e.p) + "," + csv_cell(e.variance) + "\n";
            write_text(text, out.path);
        } else {
            emit_json(io::estimates_to_json(est), out);
        }
    } else if (*cmd_plan) {
        const ShotPlan plan = plan_shots(epsilon, delta, copies);
        emit_json(json{{"M", plan.shots},
                       {"epsilon", plan.epsilon},
                       {"delta", plan.delta},
                       {"copies", plan.n_copies}},
                  out);
    } else if (*cmd_ng) {
        const MomentVector mv = io::moments_from_json(io::load_json(moments_file));
        const CharPolyCoeffs coeffs = newton_girard_coeffs(mv, rank);
        const ExtendedMoments ext = extend_moments(coeffs, mv, extend);
        emit_json(json{{"rank", rank},
                       {"coefficients", coeffs.a},
                       {"moments", io::moments_to_json(ext.moments)},
                       {"warnings", ext.warnings}},
                  out);
    } else if (*cmd_meas) {
        const AnyState state = resolve_state(state_name, state_file);
        const DensityMatrix red = reduced_of(state, parse_cut(cut_spec, state));
        double value = 0.0;
        json detail;
        if (kind == "concurrence") {
            const double m2 = moments(red, 2).m(2);
            value = concurrence(m2);
            detail["m2"] = m2;
        } else if (kind == "icem") {
            value = icem(moments(red, schmidt_r + 1), schmidt_r);
            detail["R"] = schmidt_r;
        } else if (kind == "tsallis") {
            value = tsallis_q(moments(red, q), q);
            detail["q"] = q;
        } else {
            value = q_concurrence(moments(red, q), q);
            detail["q"] = q;
        }
        detail["kind"] = kind;
        detail["value"] = value;
        emit_json(detail, out);
    } else if (*cmd_nl) {
        const AnyState state = resolve_state(state_name, state_file);
        const DensityMatrix red = reduced_of(state, parse_cut(cut_spec, state));
        double value = 0.0;
        if (kind == "exp-trace") {
            value = exp_trace(moments(red, std::max(trunc, 1)), red.side(), {trunc});
        } else if (kind == "entropy") {
            value = von_neumann_entropy(red, {trunc});
        } else {
            value = gibbs_cost(moments(red, trunc + 1), trunc);
        }
        emit_json(json{{"kind", kind}, {"trunc", trunc}, {"value", value}}, out);
    } else if (*cmd_mse) {
        const MseReport report = run_mse_experiment(state_name, copies, shots, seed);
        if (out.format == "csv") {
            std::string text = "outcome,p_sim,p_theo\n";
            for (const auto& [z, pq] : report.per_outcome)
                text += z + "," + csv_cell(pq.first) + "," + csv_cell(pq.second) + "\n";
            write_text(text, out.path);
        } else {
            emit_json(io::mse_report_to_json(report), out);
        }
    } else if (*cmd_hoef) {
        const HoeffdingReport report =
            run_hoeffding_experiment(state_name, copies, epsilon, delta, reps, seed);
        if (out.format == "csv") {
            std::string text = "repetition,k,abs_error\n";
            for (const auto& [k, errs] : report.per_k_errors)
                for (size_t r = 0; r < errs.size(); ++r)
                    text += std::to_string(r) + "," + std::to_string(k) + "," +
                            csv_cell(errs[r]) + "\n";
            write_text(text, out.path);
        } else {
            emit_json(io::hoeffding_report_to_json(report), out);
        }
    } else if (*cmd_word) {
        const PermutationWord word{parse_word(word_spec), copies};
        const CycleType ct = cycle_type(compose_word(word));
        json j{{"word", word.transpositions},
               {"copies", copies},
               {"cycle_type", ct},
               {"expression", trace_expression(ct)}};
        if (!state_name.empty() || !state_file.empty()) {
            const AnyState state = resolve_state(state_name, state_file);
            const DensityMatrix red = reduced_of(state, parse_cut(cut_spec, state));
            j["value"] = eval_trace_cycles(word, moments(red, copies));
        }
        emit_json(j, out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
