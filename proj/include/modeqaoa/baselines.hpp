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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modeqaoa/adam.hpp"
#include "modeqaoa/bo.hpp"

namespace modeqaoa {

struct GdConfig {
    int iterations = 50;
    double learning_rate = 0.05;
    AdamConstants adam;
    std::int64_t shots_per_eval = 1000;  // N_fix
    /// Use exact distributions for both the base evaluation and the gradient.
    bool exact = false;
    std::int64_t final_shots = 5000;

    void validate() const;
};

struct ExpectationEval {
    double value = 0.0;
    Bitstring mode;
    double mode_cut = 0.0;
    double var_normalized = 0.0;
    Counts counts{1};
};

/// Fixed-shot expectation estimate. Classical work is charged per shot
/// (N_fix cut evaluations), the conventional cost model.
ExpectationEval fixed_shot_expectation_eval(const MaxCutInstance& instance, const QaoaParams& params,
                                            std::int64_t shots, const NoiseSpec& noise, std::uint64_t seed,
                                            ResourceLedger& ledger);

/// Parameter-shift gradient of the expectation over theta = [betas, gammas].
///
/// Each layer parameter drives several commuting gates (one per vertex for a
/// beta, one per edge for a gamma), so its derivative is the sum of exact
/// per-gate +-pi/2 shift terms scaled by d phi_g / d theta_k. In sampled mode
/// the `shots` budget of each +-shift side is split evenly over the gates of a
/// coordinate, for 2 * d * shots in total; requires shots >= gates per
/// coordinate. With `shots` empty the shifted expectations are exact.
std::vector<double> parameter_shift_gradient(const MaxCutInstance& instance, const QaoaParams& params,
                                             std::optional<std::int64_t> shots, const NoiseSpec& noise,
                                             std::uint64_t seed, ResourceLedger& ledger);

/// Expectation objective at N_fix shots per trial, TPE search.
RunResult optimize_exp_bo(const MaxCutInstance& instance, int depth, std::int64_t shots_per_eval,
                          const BoSettings& settings, double noise_lambda, std::uint64_t seed);

/// Expectation objective, Adam ascent on parameter-shift gradients.
RunResult optimize_exp_gd(const MaxCutInstance& instance, int depth, const GdConfig& cfg, double noise_lambda,
                          std::uint64_t seed);

}  // namespace modeqaoa
