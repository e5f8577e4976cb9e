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

#include "modeqaoa/baselines.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

#include "modeqaoa/random.hpp"

namespace modeqaoa {

namespace {

enum Stream : std::uint64_t { kSuggest = 1, kEvaluate = 2, kFinal = 3, kInit = 4, kGradient = 5 };

// Exact counterpart of ExpectationEval: mode is the most probable string.
ExpectationEval exact_expectation_eval(const MaxCutInstance& instance, const QaoaParams& params,
                                       const NoiseSpec& noise) {
    const OutcomeDistribution dist = outcome_distribution(instance, params, noise);
    const std::vector<double> cost = cut_table(instance);
    ExpectationEval out;
    const int n = instance.num_vertices();
    double mean = 0.0;
    double second = 0.0;
    std::optional<Bitstring> mode;
    double best_p = -1.0;
    for (std::size_t z = 0; z < cost.size(); ++z) {
        const double p = dist.probs()[z];
        mean += p * cost[z];
        second += p * cost[z] * cost[z];
        const Bitstring b(static_cast<std::uint32_t>(z), n);
        if (p > best_p || (p == best_p && b < *mode)) {
            best_p = p;
            mode = b;
        }
    }
    out.value = mean;
    out.mode = *mode;
    out.mode_cut = cost[mode->index()];
    const double u = instance.total_weight();
    out.var_normalized = u > 0.0 ? std::max(0.0, second - mean * mean) / (u * u) : 0.0;
    out.counts = Counts(n);
    return out;
}

}  // namespace

void GdConfig::validate() const {
    if (iterations < 1) throw std::invalid_argument("GdConfig: iterations must be >= 1");
    if (!(learning_rate >= 0.0)) throw std::invalid_argument("GdConfig: learning_rate must be >= 0");
    if (shots_per_eval < 1) throw std::invalid_argument("GdConfig: shots_per_eval must be >= 1");
    if (final_shots < 1) throw std::invalid_argument("GdConfig: final_shots must be >= 1");
}

ExpectationEval fixed_shot_expectation_eval(const MaxCutInstance& instance, const QaoaParams& params,
                                            std::int64_t shots, const NoiseSpec& noise, std::uint64_t seed,
                                            ResourceLedger& ledger) {
    const OutcomeDistribution dist = outcome_distribution(instance, params, noise);
    ++ledger.circuit_evaluations;
    ExpectationEval out;
    out.counts = sample(dist, shots, seed);
    out.value = expectation_estimate(instance, out.counts);
    out.mode = mode_of(out.counts);
    out.mode_cut = cut_value(instance, out.mode);
    out.var_normalized = normalized_cut_variance(instance, out.counts);
    ledger.classical_count_ops += shots;
    ledger.classical_cut_ops += shots;
    ledger.record_point(shots, out.counts.distinct());
    return out;
}

std::vector<double> parameter_shift_gradient(const MaxCutInstance& instance, const QaoaParams& params,
                                             std::optional<std::int64_t> shots, const NoiseSpec& noise,
                                             std::uint64_t seed, ResourceLedger& ledger) {
    params.validate();
    const int depth = params.depth();
    const int dim = params.dimension();
    constexpr double kShift = std::numbers::pi / 2.0;
    std::vector<double> grad(static_cast<std::size_t>(dim), 0.0);

    for (int k = 0; k < dim; ++k) {
        const int gates = generator_count(instance, depth, k);
        if (shots && *shots < gates) {
            throw std::invalid_argument("parameter_shift_gradient: shot budget smaller than the gate count");
        }
        for (int g = 0; g < gates; ++g) {
            const double jac = gate_angle_derivative(instance, depth, k, g);
            double f_plus = 0.0;
            double f_minus = 0.0;
            if (!shots) {
                f_plus = exact_expectation(instance, outcome_distribution(instance, params, noise,
                                                                          coordinate_gate_shift(depth, k, g, kShift)));
                f_minus = exact_expectation(instance, outcome_distribution(instance, params, noise,
                                                                           coordinate_gate_shift(depth, k, g, -kShift)));
                ledger.circuit_evaluations += 2;
            } else {
                const std::int64_t share = *shots / gates + (g < *shots % gates ? 1 : 0);
                // Common random numbers for the two sides of the shift.
                const std::uint64_t s = derive_seed(seed, {static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(g)});
                for (double sign : {1.0, -1.0}) {
                    const OutcomeDistribution dist =
                        outcome_distribution(instance, params, noise, coordinate_gate_shift(depth, k, g, sign * kShift));
                    ++ledger.circuit_evaluations;
                    const Counts counts = sample(dist, share, s);
                    const double f = expectation_estimate(instance, counts);
                    (sign > 0 ? f_plus : f_minus) = f;
                    ledger.classical_count_ops += share;
                    ledger.classical_cut_ops += share;
                    ledger.record_point(share, counts.distinct());
                }
            }
            grad[static_cast<std::size_t>(k)] += jac * 0.5 * (f_plus - f_minus);
        }
    }
    return grad;
}

RunResult optimize_exp_bo(const MaxCutInstance& instance, int depth, std::int64_t shots_per_eval,
                          const BoSettings& settings, double noise_lambda, std::uint64_t seed) {
    settings.tpe.validate();
    if (settings.stagnation) settings.stagnation->validate();
    if (settings.max_trials < 1) throw std::invalid_argument("optimize_exp_bo: max_trials must be >= 1");
    if (shots_per_eval < 1) throw std::invalid_argument("optimize_exp_bo: shots_per_eval must be >= 1");
    const NoiseSpec noise = NoiseSpec::for_circuit(instance, depth, noise_lambda);
    const std::vector<Interval> bounds = default_bounds(depth);

    RunResult result;
    result.method = "exp_bo";
    for (int t = 1; t <= settings.max_trials; ++t) {
        const auto tt = static_cast<std::uint64_t>(t);
        const QaoaParams params = suggest(result.trials, bounds, settings.tpe, derive_seed(seed, {kSuggest, tt}));
        const ExpectationEval ev = fixed_shot_expectation_eval(instance, params, shots_per_eval, noise,
                                                               derive_seed(seed, {kEvaluate, tt}), result.ledger);
        Trial trial;
        trial.index = t;
        trial.params = params;
        trial.objective = ev.value;
        trial.shots_used = shots_per_eval;
        trial.var_normalized = ev.var_normalized;
        trial.mode = ev.mode;
        trial.mode_cut = ev.mode_cut;
        if (result.trials.empty() || trial.objective > result.best_objective) {
            result.best_objective = trial.objective;
            result.best_params = params;
            result.best_bitstring = ev.mode;
            result.best_trial = t;
        }
        trial.incumbent = result.best_objective;
        result.trials.push_back(std::move(trial));
        if (t < settings.max_trials && settings.stagnation && should_stop(result.trials, *settings.stagnation)) {
            result.stop_reason = StopReason::stagnation;
            break;
        }
    }
    run_final_evaluation(instance, noise, settings.final_shots, kDefaultBootstrapResamples,
                         derive_seed(seed, {kFinal}), result);
    return result;
}

RunResult optimize_exp_gd(const MaxCutInstance& instance, int depth, const GdConfig& cfg, double noise_lambda,
                          std::uint64_t seed) {
    cfg.validate();
    const NoiseSpec noise = NoiseSpec::for_circuit(instance, depth, noise_lambda);
    const std::vector<Interval> bounds = default_bounds(depth);

    std::vector<double> theta(bounds.size());
    Rng init(derive_seed(seed, {kInit}));
    for (std::size_t d = 0; d < bounds.size(); ++d) {
        theta[d] = bounds[d].lo + uniform01(init) * (bounds[d].hi - bounds[d].lo);
    }
    Adam adam(theta.size(), cfg.learning_rate, cfg.adam);
    const std::optional<std::int64_t> grad_shots =
        cfg.exact ? std::nullopt : std::optional<std::int64_t>(cfg.shots_per_eval);
    const auto dim = static_cast<std::int64_t>(theta.size());

    RunResult result;
    result.method = "exp_gd";
    for (int it = 1; it <= cfg.iterations; ++it) {
        const auto tt = static_cast<std::uint64_t>(it);
        const QaoaParams params = QaoaParams::from_theta(theta);
        const ExpectationEval ev =
            cfg.exact ? exact_expectation_eval(instance, params, noise)
                      : fixed_shot_expectation_eval(instance, params, cfg.shots_per_eval, noise,
                                                    derive_seed(seed, {kEvaluate, tt}), result.ledger);
        Trial trial;
        trial.index = it;
        trial.params = params;
        trial.objective = ev.value;
        trial.shots_used = cfg.exact ? 0 : cfg.shots_per_eval * (1 + 2 * dim);
        trial.var_normalized = ev.var_normalized;
        trial.mode = ev.mode;
        trial.mode_cut = ev.mode_cut;
        if (result.trials.empty() || trial.objective > result.best_objective) {
            result.best_objective = trial.objective;
            result.best_params = params;
            result.best_bitstring = ev.mode;
            result.best_trial = it;
        }
        trial.incumbent = result.best_objective;
        result.trials.push_back(std::move(trial));

        const std::vector<double> grad =
            parameter_shift_gradient(instance, params, grad_shots, noise, derive_seed(seed, {kGradient, tt}), result.ledger);
        adam.ascend(theta, grad);
    }
    run_final_evaluation(instance, noise, cfg.final_shots, kDefaultBootstrapResamples, derive_seed(seed, {kFinal}),
                         result);
    return result;
}

}  // namespace modeqaoa
