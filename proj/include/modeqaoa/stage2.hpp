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
#include <variant>
#include <vector>

#include "modeqaoa/adam.hpp"
#include "modeqaoa/ledger.hpp"
#include "modeqaoa/run_result.hpp"
#include "modeqaoa/simulator.hpp"

namespace modeqaoa {

struct AmplifyConfig {
    int steps = 150;                   // L
    std::int64_t shots_per_shift = 200;  // N_amp
    double learning_rate = 0.05;
    AdamConstants adam;
    int reeval_period = 10;
    bool use_exact = false;

    void validate() const;
};

struct ExactProbability {};
struct SampledProbability {
    std::int64_t shots = 0;
    std::uint64_t seed = 0;
};
using ProbabilityMode = std::variant<ExactProbability, SampledProbability>;

/// p_theta(z_tar), exactly or as an empirical frequency.
double target_probability(const MaxCutInstance& instance, const QaoaParams& params, const Bitstring& target,
                          const NoiseSpec& noise, const ProbabilityMode& mode);

struct ShiftSample {
    int coordinate = 0;
    int gate = 0;
    double estimate = 0.0;
};

/// Single-gate stochastic estimate of d p(z_tar) / d theta_k: picks k and one
/// of its G_k gates uniformly, shifts only that gate by +-pi/2 and returns
/// G_k * (d phi_g / d theta_k) * (F+ - F-) / 2. Its expectation over the random
/// gate is the exact coordinate derivative. Sampled mode charges 2 * N_amp
/// shots to ledger.stage2_shots.
ShiftSample randomized_shift_gradient(const MaxCutInstance& instance, const QaoaParams& params,
                                      const Bitstring& target, std::uint64_t step_seed, const AmplifyConfig& cfg,
                                      const NoiseSpec& noise, ResourceLedger& ledger);

/// The same single-gate term for a fixed (coordinate, gate), exact mode, without the G_k factor.
double gate_shift_term(const MaxCutInstance& instance, const QaoaParams& params, const Bitstring& target,
                       const NoiseSpec& noise, int coordinate, int gate);

/// Exact gradient of p(z_tar) by enumerating every gate of every coordinate.
std::vector<double> full_shift_gradient(const MaxCutInstance& instance, const QaoaParams& params,
                                        const Bitstring& target, const NoiseSpec& noise);

/// Adam ascent on p(z_tar), one randomized coordinate per step. The trace
/// starts with p at theta0 and gets an entry after every reeval_period-th step
/// and after the last step. In sampled mode every trace entry costs N_amp shots.
AmplifyResult amplify(const MaxCutInstance& instance, const QaoaParams& initial, const Bitstring& target,
                      const AmplifyConfig& cfg, const NoiseSpec& noise, std::uint64_t seed, ResourceLedger& ledger);

}  // namespace modeqaoa
