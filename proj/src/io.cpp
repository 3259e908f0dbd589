#include "qswaptrace/io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qswaptrace::io {

namespace {

json complex_rows(const Vector& v) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        rows.push_back({v(i).real(), v(i).imag()});
    return rows;
}

}  // namespace

json state_to_json(const AnyState& state) {
    json j;
    if (std::holds_alternative<PureState>(state)) {
        const auto& pure = std::get<PureState>(state);
        j["dims"] = pure.dims;
        j["kind"] = "pure";
        j["data"] = complex_rows(pure.amplitudes);
    } else {
        const auto& dm = std::get<DensityMatrix>(state);
        j["dims"] = dm.dims;
        j["kind"] = "mixed";
        json rows = json::array();
        for (int r = 0; r < dm.side(); ++r)
            for (int c = 0; c < dm.side(); ++c)
                rows.push_back({dm.entries(r, c).real(), dm.entries(r, c).imag()});
        j["data"] = rows;
    }
    return j;
}

AnyState state_from_json(const json& j) {
    const std::vector<int> dims = j.at("dims").get<std::vector<int>>();
    const std::string kind = j.at("kind").get<std::string>();
    const auto& data = j.at("data");
    auto entry = [&](size_t i) {
        return Complex(data.at(i).at(0).get<double>(), data.at(i).at(1).get<double>());
    };
    if (kind == "pure") {
        Vector amps(data.size());
        for (size_t i = 0; i < data.size(); ++i) amps(static_cast<Eigen::Index>(i)) = entry(i);
        return PureState(std::move(amps), dims);
    }
    if (kind == "mixed") {
        const auto side = static_cast<Eigen::Index>(std::llround(std::sqrt(
            static_cast<double>(data.size()))));
        if (side * side != static_cast<Eigen::Index>(data.size()))
            throw std::invalid_argument("mixed state data is not a square matrix");
        Matrix m(side, side);
        for (Eigen::Index r = 0; r < side; ++r)
            for (Eigen::Index c = 0; c < side; ++c)
                m(r, c) = entry(static_cast<size_t>(r * side + c));
        return DensityMatrix(std::move(m), dims);
    }
    throw std::invalid_argument("state kind must be \"pure\" or \"mixed\"");
}

json distribution_to_json(const OutcomeDistribution& dist) {
    json probs = json::object();
    for (int z = 0; z < dist.num_outcomes(); ++z)
        probs[outcome_string(z, dist.n_controls)] = dist.p(z);
    return json{{"n_controls", dist.n_controls}, {"probabilities", probs}};
}

OutcomeDistribution distribution_from_json(const json& j) {
    const int nc = j.at("n_controls").get<int>();
    std::vector<double> probs(static_cast<size_t>(1) << nc, 0.0);
    for (const auto& [key, value] : j.at("probabilities").items())
        probs.at(static_cast<size_t>(outcome_index(key))) = value.get<double>();
    return OutcomeDistribution{std::move(probs), nc};
}

json counts_to_json(const ShotCounts& counts) {
    json c = json::object();
    for (int z = 0; z < static_cast<int>(counts.counts.size()); ++z)
        if (counts.counts[z] > 0) c[outcome_string(z, counts.n_controls)] = counts.counts[z];
    return json{{"n_controls", counts.n_controls}, {"total", counts.total}, {"counts", c}};
}

ShotCounts counts_from_json(const json& j) {
    const int nc = j.at("n_controls").get<int>();
    std::vector<long long> counts(static_cast<size_t>(1) << nc, 0);
    long long total = 0;
    for (const auto& [key, value] : j.at("counts").items()) {
        const long long c = value.get<long long>();
        counts.at(static_cast<size_t>(outcome_index(key))) = c;
        total += c;
    }
    if (j.contains("total") && j.at("total").get<long long>() != total)
        throw std::invalid_argument("counts do not sum to the declared total");
    return ShotCounts{std::move(counts), nc, total};
}

json moments_to_json(const MomentVector& mv) {
    return json{{"values", mv.values}, {"source_dim", mv.source_dim}};
}

MomentVector moments_from_json(const json& j) {
    MomentVector mv;
    mv.values = j.at("values").get<std::vector<double>>();
    mv.source_dim = j.value("source_dim", 0);
    if (mv.values.empty()) throw std::invalid_argument("moments file has no values");
    return mv;
}

json estimates_to_json(const TraceEstimates& est) {
    json per_k = json::object();
    for (const auto& [k, entry] : est.per_k)
        per_k[std::to_string(k)] = {{"estimate", entry.estimate},
                                    {"p", entry.p},
                                    {"variance", entry.variance}};
    json j{{"per_k", per_k}, {"shots", est.shots}};
    if (est.epsilon) j["epsilon"] = *est.epsilon;
    if (est.delta) j["delta"] = *est.delta;
    return j;
}

json mse_report_to_json(const MseReport& report) {
    json per_outcome = json::object();
    for (const auto& [z, pair] : report.per_outcome)
        per_outcome[z] = {{"p_sim", pair.first}, {"p_theo", pair.second}};
    return json{{"state", report.state_name}, {"copies", report.n_copies},
                {"shots", report.shots},      {"seed", report.seed},
                {"mse", report.mse},          {"per_outcome", per_outcome}};
}

json hoeffding_report_to_json(const HoeffdingReport& report) {
    json per_k = json::object();
    for (const auto& [k, errors] : report.per_k_errors) per_k[std::to_string(k)] = errors;
    return json{{"state", report.state_name},
                {"copies", report.n_copies},
                {"epsilon", report.epsilon},
                {"delta", report.delta},
                {"shots", report.shots},
                {"repetitions", report.repetitions},
                {"per_k_errors", per_k},
                {"failure_fraction", report.failure_fraction}};
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace qswaptrace::io
