// Copyright 2026 The modeqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "modeqaoa/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace modeqaoa {

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const MaxCutInstance& instance) {
    Json j;
    j["n"] = instance.num_vertices();
    Json edges = Json::array();
    for (const Edge& e : instance.edges()) edges.push_back(Json::array({e.u, e.v, e.w}));
    j["edges"] = std::move(edges);
    if (instance.seed) j["seed"] = *instance.seed;
    if (const auto& opt = instance.cached_optimum()) {
        j["optimum"] = {{"bits", opt->bits.to_text()}, {"value", opt->value}};
    }
    return j;
}

MaxCutInstance instance_from_json(const Json& j) {
    try {
        std::vector<Edge> edges;
        for (const Json& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3) throw std::invalid_argument("instance: edge must be [u, v, w]");
            edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<double>()});
        }
        MaxCutInstance inst(j.at("n").get<int>(), std::move(edges));
        if (j.contains("seed")) inst.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("optimum")) {
            inst = inst.with_optimum();
            const auto& opt = *inst.cached_optimum();
            if (opt.bits.to_text() != j["optimum"].at("bits").get<std::string>() ||
                opt.value != j["optimum"].at("value").get<double>()) {
                throw std::invalid_argument("instance: stored optimum disagrees with brute force");
            }
        }
        return inst;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("instance: ") + e.what());
    }
}

MaxCutInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return instance_from_json(j);
}

void save_instance(const MaxCutInstance& instance, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << to_json(instance).dump(2) << '\n';
}

Json to_json(const QaoaParams& params) {
    return {{"gammas", params.gammas}, {"betas", params.betas}};
}

Json to_json(const EvalStats& s) {
    return {{"mode", s.mode.to_text()},   {"mode_cut", s.mode_cut},       {"confidence", s.confidence},
            {"var_norm", s.var_normalized}, {"expectation", s.expectation}, {"distinct", s.distinct},
            {"shots", s.shots}};
}

Json to_json(const Trial& t) {
    return {{"t", t.index},
            {"theta", t.params.theta()},
            {"y", t.objective},
            {"shots", t.shots_used},
            {"accepted", t.accepted},
            {"conf", t.confidence},
            {"var_norm", t.var_normalized},
            {"incumbent", t.incumbent},
            {"mode", t.mode.to_text()},
            {"mode_cut", t.mode_cut}};
}

Json to_json(const ResourceLedger& l) {
    return {{"optimization_shots", l.optimization_shots},
            {"final_eval_shots", l.final_eval_shots},
            {"stage2_shots", l.stage2_shots},
            {"total_shots", l.total_shots()},
            {"circuit_evaluations", l.circuit_evaluations},
            {"classical_count_ops", l.classical_count_ops},
            {"classical_cut_ops", l.classical_cut_ops},
            {"bootstrap_ops", l.bootstrap_ops},
            {"avg_point_shots", l.average_point_shots()},
            {"avg_distinct", l.average_distinct()},
            {"per_point_shots", l.per_point_shots},
            {"distinct_counts", l.distinct_counts}};
}

Json to_json(const MetricsReport& r) {
    return {{"final_mode_accuracy", r.final_mode_accuracy},
            {"final_expectation_accuracy", r.final_expectation_accuracy},
            {"final_best_sample_accuracy", r.final_best_sample_accuracy},
            {"total_shots", r.total_shots},
            {"shots_to_threshold", optional_json(r.shots_to_threshold)},
            {"S_q", optional_json(r.saving_q)},
            {"S_cl", optional_json(r.saving_cl)}};
}

Json to_json(const OutcomeDistribution& dist) { return Json(dist.probs()); }

Json to_json(const RunResult& run) {
    Json trials = Json::array();
    for (const Trial& t : run.trials) trials.push_back(to_json(t));
    Json j;
    j["method"] = run.method;
    j["best_params"] = to_json(run.best_params);
    j["best_bitstring"] = run.best_bitstring.to_text();
    j["best_objective"] = run.best_objective;
    j["best_trial"] = run.best_trial;
    j["stop_reason"] = to_string(run.stop_reason);
    j["final_eval"] = to_json(run.final_eval);
    j["ledger"] = to_json(run.ledger);
    j["trials"] = std::move(trials);
    if (run.stage2) {
        j["stage2"] = {{"params", to_json(run.stage2->params)}, {"trace", run.stage2->trace}};
    }
    return j;
}

}  // namespace modeqaoa
