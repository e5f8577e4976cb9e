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

#include "modeqaoa/resources.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace modeqaoa {

namespace {

double positive_optimum(const MaxCutInstance& instance) {
    const double best = instance.optimum().value;
    if (!(best > 0.0)) throw std::invalid_argument("accuracy metrics need a positive optimum cut");
    return best;
}

double mean_of(const std::vector<std::int64_t>& xs) {
    if (xs.empty()) return 0.0;
    return static_cast<double>(std::accumulate(xs.begin(), xs.end(), std::int64_t{0})) / static_cast<double>(xs.size());
}

}  // namespace

void ResourceLedger::record_point(std::int64_t shots, std::int64_t distinct) {
    if (shots < 0 || distinct < 0 || distinct > shots) throw std::invalid_argument("record_point: need 0 <= K <= N");
    optimization_shots += shots;
    per_point_shots.push_back(shots);
    distinct_counts.push_back(distinct);
}

double ResourceLedger::average_point_shots() const { return mean_of(per_point_shots); }

double ResourceLedger::average_distinct() const { return mean_of(distinct_counts); }

void ResourceLedger::merge(const ResourceLedger& other) {
    optimization_shots += other.optimization_shots;
    final_eval_shots += other.final_eval_shots;
    stage2_shots += other.stage2_shots;
    circuit_evaluations += other.circuit_evaluations;
    classical_count_ops += other.classical_count_ops;
    classical_cut_ops += other.classical_cut_ops;
    bootstrap_ops += other.bootstrap_ops;
    distinct_counts.insert(distinct_counts.end(), other.distinct_counts.begin(), other.distinct_counts.end());
    per_point_shots.insert(per_point_shots.end(), other.per_point_shots.begin(), other.per_point_shots.end());
}

double final_mode_accuracy(const MaxCutInstance& instance, const EvalStats& final_eval) {
    return cut_value(instance, final_eval.mode) / positive_optimum(instance);
}

AuxAccuracies aux_accuracies(const MaxCutInstance& instance, const Counts& final_counts) {
    const double best = positive_optimum(instance);
    AuxAccuracies out;
    out.expectation = expectation_estimate(instance, final_counts) / best;
    double top = 0.0;
    for (const auto& [z, c] : final_counts.entries()) top = std::max(top, cut_value(instance, z));
    out.best_sample = top / best;
    return out;
}

std::optional<std::int64_t> shots_to_threshold(std::span<const Trial> trials, double optimum_value,
                                               double threshold) {
    if (!(optimum_value > 0.0)) throw std::invalid_argument("shots_to_threshold: optimum must be positive");
    std::int64_t cumulative = 0;
    const Trial* incumbent = nullptr;
    for (const Trial& t : trials) {
        cumulative += t.shots_used;
        if (!incumbent || t.objective > incumbent->objective) incumbent = &t;
        if (incumbent->mode_cut / optimum_value >= threshold) return cumulative;
    }
    return std::nullopt;
}

SavingRatios saving_ratios(const ResourceLedger& ledger_exp, std::int64_t trials_exp, const ResourceLedger& ledger_map,
                           std::int64_t trials_map, int num_edges, int bootstrap_resamples) {
    if (trials_exp < 1 || trials_map < 1) throw std::invalid_argument("saving_ratios: trial counts must be positive");
    const double t_exp = static_cast<double>(trials_exp);
    const double t_map = static_cast<double>(trials_map);
    const double n_fix = ledger_exp.average_point_shots();
    const double n_adp = ledger_map.average_point_shots();
    const double k_bar = ledger_map.average_distinct();
    const double m = static_cast<double>(num_edges);
    const double b = static_cast<double>(bootstrap_resamples);
    SavingRatios out;
    out.quantum = (t_exp * n_fix) / (t_map * n_adp);
    out.classical = (t_exp * n_fix * m) / (t_map * n_adp + t_map * k_bar * m + b * t_map * k_bar);
    return out;
}

MetricsReport compute_metrics(const MaxCutInstance& instance, const RunResult& run, double threshold) {
    MetricsReport r;
    r.final_mode_accuracy = final_mode_accuracy(instance, run.final_eval);
    const AuxAccuracies aux = aux_accuracies(instance, run.final_counts);
    r.final_expectation_accuracy = aux.expectation;
    r.final_best_sample_accuracy = aux.best_sample;
    r.total_shots = run.ledger.total_shots();
    r.shots_to_threshold = shots_to_threshold(run.trials, instance.optimum().value, threshold);
    return r;
}

}  // namespace modeqaoa
