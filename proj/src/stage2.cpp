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

#include "modeqaoa/stage2.hpp"

#include <numbers>
#include <stdexcept>

#include "modeqaoa/random.hpp"

namespace modeqaoa {

namespace {

constexpr double kShift = std::numbers::pi / 2.0;

double probability_at(const MaxCutInstance& instance, const QaoaParams& params, const Bitstring& target,
                      const NoiseSpec& noise, const std::optional<GateShift>& shift, const ProbabilityMode& mode) {
    const OutcomeDistribution dist = outcome_distribution(instance, params, noise, shift);
    if (const auto* s = std::get_if<SampledProbability>(&mode)) {
        const Counts counts = sample(dist, s->shots, s->seed);
        return static_cast<double>(counts.count(target)) / static_cast<double>(counts.total());
    }
    return dist.prob(target);
}

ProbabilityMode mode_for(const AmplifyConfig& cfg, std::uint64_t seed) {
    if (cfg.use_exact) return ExactProbability{};
    return SampledProbability{cfg.shots_per_shift, seed};
}

}  // namespace

void AmplifyConfig::validate() const {
    if (steps < 0) throw std::invalid_argument("AmplifyConfig: steps must be >= 0");
    if (shots_per_shift < 1) throw std::invalid_argument("AmplifyConfig: shots_per_shift must be >= 1");
    if (reeval_period < 1) throw std::invalid_argument("AmplifyConfig: reeval_period must be >= 1");
    if (!(learning_rate >= 0.0)) throw std::invalid_argument("AmplifyConfig: learning_rate must be >= 0");
}

double target_probability(const MaxCutInstance& instance, const QaoaParams& params, const Bitstring& target,
                          const NoiseSpec& noise, const ProbabilityMode& mode) {
    if (target.size() != instance.num_vertices()) throw std::invalid_argument("target_probability: width mismatch");
    return probability_at(instance, params, target, noise, std::nullopt, mode);
}

double gate_shift_term(const MaxCutInstance& instance, const QaoaParams& params, const Bitstring& target,
                       const NoiseSpec& noise, int coordinate, int gate) {
    const int depth = params.depth();
    const double f_plus = probability_at(instance, params, target, noise,
                                         coordinate_gate_shift(depth, coordinate, gate, kShift), ExactProbability{});
    const double f_minus = probability_at(instance, params, target, noise,
                                          coordinate_gate_shift(depth, coordinate, gate, -kShift), ExactProbability{});
    return gate_angle_derivative(instance, depth, coordinate, gate) * 0.5 * (f_plus - f_minus);
}

ShiftSample randomized_shift_gradient(const MaxCutInstance& instance, const QaoaParams& params,
                                      const Bitstring& target, std::uint64_t step_seed, const AmplifyConfig& cfg,
                                      const NoiseSpec& noise, ResourceLedger& ledger) {
    params.validate();
    if (target.size() != instance.num_vertices()) throw std::invalid_argument("randomized_shift_gradient: width mismatch");
    const int depth = params.depth();
    Rng rng(step_seed);
    ShiftSample out;
    out.coordinate = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(params.dimension())));
    const int gates = generator_count(instance, depth, out.coordinate);
    if (gates == 0) return out;  // edgeless graph: gamma has no effect
    out.gate = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(gates)));

    const ProbabilityMode mode = mode_for(cfg, rng());
    const double f_plus = probability_at(instance, params, target, noise,
                                         coordinate_gate_shift(depth, out.coordinate, out.gate, kShift), mode);
    const double f_minus = probability_at(instance, params, target, noise,
                                          coordinate_gate_shift(depth, out.coordinate, out.gate, -kShift), mode);
    ledger.circuit_evaluations += 2;
    if (!cfg.use_exact) ledger.stage2_shots += 2 * cfg.shots_per_shift;
    out.estimate = static_cast<double>(gates) * gate_angle_derivative(instance, depth, out.coordinate, out.gate) *
                   0.5 * (f_plus - f_minus);
    return out;
}

std::vector<double> full_shift_gradient(const MaxCutInstance& instance, const QaoaParams& params,
                                        const Bitstring& target, const NoiseSpec& noise) {
    params.validate();
    std::vector<double> grad(static_cast<std::size_t>(params.dimension()), 0.0);
    for (int k = 0; k < params.dimension(); ++k) {
        for (int g = 0; g < generator_count(instance, params.depth(), k); ++g) {
            grad[static_cast<std::size_t>(k)] += gate_shift_term(instance, params, target, noise, k, g);
        }
    }
    return grad;
}

AmplifyResult amplify(const MaxCutInstance& instance, const QaoaParams& initial, const Bitstring& target,
                      const AmplifyConfig& cfg, const NoiseSpec& noise, std::uint64_t seed, ResourceLedger& ledger) {
    cfg.validate();
    initial.validate();
    std::uint64_t evals = 0;
    auto measure = [&](const QaoaParams& params) {
        const double p = target_probability(instance, params, target, noise,
                                            mode_for(cfg, derive_seed(seed, {1, evals++})));
        ++ledger.circuit_evaluations;
        if (!cfg.use_exact) ledger.stage2_shots += cfg.shots_per_shift;
        return p;
    };

    AmplifyResult result;
    std::vector<double> theta = initial.theta();
    result.trace.push_back(measure(initial));
    Adam adam(theta.size(), cfg.learning_rate, cfg.adam);
    for (int step = 1; step <= cfg.steps; ++step) {
        const ShiftSample s = randomized_shift_gradient(instance, QaoaParams::from_theta(theta), target,
                                                        derive_seed(seed, {0, static_cast<std::uint64_t>(step)}), cfg,
                                                        noise, ledger);
        adam.ascend_coordinate(theta, static_cast<std::size_t>(s.coordinate), s.estimate);
        if (step % cfg.reeval_period == 0 || step == cfg.steps) {
            result.trace.push_back(measure(QaoaParams::from_theta(theta)));
        }
    }
    result.params = QaoaParams::from_theta(theta);
    return result;
}

}  // namespace modeqaoa
