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

#include "modeqaoa/bo.hpp"

#include <algorithm>
#include <stdexcept>

#include "modeqaoa/random.hpp"

namespace modeqaoa {

namespace {

enum Stream : std::uint64_t { kSuggest = 1, kEvaluate = 2, kFinal = 3 };

void validate_settings(const BoSettings& s) {
    s.tpe.validate();
    if (s.stagnation) s.stagnation->validate();
    if (s.max_trials < 1) throw std::invalid_argument("BoSettings: max_trials must be >= 1");
    if (s.final_shots < 1) throw std::invalid_argument("BoSettings: final_shots must be >= 1");
}

}  // namespace

std::string to_string(StopReason reason) {
    return reason == StopReason::budget ? "budget" : "stagnation";
}

void StagnationConfig::validate() const {
    if (patience < 1) throw std::invalid_argument("StagnationConfig: patience must be >= 1");
    if (!(min_delta >= 0.0)) throw std::invalid_argument("StagnationConfig: min_delta must be >= 0");
}

bool should_stop(std::span<const Trial> history, const StagnationConfig& cfg) {
    const auto t = history.size();
    const auto patience = static_cast<std::size_t>(cfg.patience);
    if (t < patience || t == 0) return false;
    const std::size_t ref_end = std::max<std::size_t>(t - patience, 1);
    auto best_of = [&](std::size_t end) {
        double best = history[0].objective;
        for (std::size_t i = 1; i < end; ++i) best = std::max(best, history[i].objective);
        return best;
    };
    return best_of(t) - best_of(ref_end) < cfg.min_delta;
}

void run_final_evaluation(const MaxCutInstance& instance, const NoiseSpec& noise, std::int64_t shots,
                          int bootstrap_resamples, std::uint64_t seed, RunResult& result) {
    const OutcomeDistribution dist = outcome_distribution(instance, result.best_params, noise);
    result.final_counts = sample(dist, shots, derive_seed(seed, {0}));
    result.final_eval = compute_eval_stats(instance, result.final_counts, bootstrap_resamples, derive_seed(seed, {1}));
    result.ledger.final_eval_shots += shots;
}

RunResult optimize_map_bo(const MaxCutInstance& instance, int depth, const AdaptiveConfig& adaptive,
                          const BoSettings& settings, double noise_lambda, std::uint64_t seed) {
    adaptive.validate();
    validate_settings(settings);
    const NoiseSpec noise = NoiseSpec::for_circuit(instance, depth, noise_lambda);
    const std::vector<Interval> bounds = default_bounds(depth);

    RunResult result;
    result.method = "map_bo";
    for (int t = 1; t <= settings.max_trials; ++t) {
        const auto tt = static_cast<std::uint64_t>(t);
        const QaoaParams params = suggest(result.trials, bounds, settings.tpe, derive_seed(seed, {kSuggest, tt}));
        const PointEvaluation pe =
            evaluate_point(instance, params, noise, adaptive, derive_seed(seed, {kEvaluate, tt}), result.ledger);

        Trial trial;
        trial.index = t;
        trial.params = params;
        trial.objective = pe.stats.mode_cut;
        trial.shots_used = pe.shots_used;
        trial.accepted = pe.accepted;
        trial.confidence = pe.stats.confidence;
        trial.var_normalized = pe.stats.var_normalized;
        trial.mode = pe.stats.mode;
        trial.mode_cut = pe.stats.mode_cut;
        if (result.trials.empty() || trial.objective > result.best_objective) {
            result.best_objective = trial.objective;
            result.best_params = params;
            result.best_bitstring = trial.mode;
            result.best_trial = t;
        }
        trial.incumbent = result.best_objective;
        result.trials.push_back(std::move(trial));

        if (t < settings.max_trials && settings.stagnation && should_stop(result.trials, *settings.stagnation)) {
            result.stop_reason = StopReason::stagnation;
            break;
        }
    }
    run_final_evaluation(instance, noise, settings.final_shots, adaptive.bootstrap_resamples,
                         derive_seed(seed, {kFinal}), result);
    return result;
}

}  // namespace modeqaoa
