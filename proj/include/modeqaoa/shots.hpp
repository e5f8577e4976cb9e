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
#include <vector>

#include "modeqaoa/estimators.hpp"
#include "modeqaoa/ledger.hpp"
#include "modeqaoa/simulator.hpp"

namespace modeqaoa {

/// Pilot-and-grow shot schedule with the dual acceptance gate.
struct AdaptiveConfig {
    std::int64_t pilot_shots = 100;  // b1
    double growth = 2.0;             // rho
    std::int64_t max_shots = 1200;   // N_max per point
    double tau_conf = 0.90;
    double tau_var = 0.02;
    int bootstrap_resamples = kDefaultBootstrapResamples;

    void validate() const;
};

struct PointEvaluation {
    QaoaParams params;
    Counts counts{1};
    EvalStats stats;
    std::int64_t shots_used = 0;
    bool accepted = false;
    int rounds = 0;
    std::vector<std::int64_t> batches;
};

/// Size of the next batch: min(round_half_even(rho * b), N_max - spent).
std::int64_t next_batch(std::int64_t current_batch, std::int64_t spent, const AdaptiveConfig& cfg);

/// The full batch sequence when the gate never passes.
std::vector<std::int64_t> batch_schedule(const AdaptiveConfig& cfg);

/// Adaptive evaluation of a fixed outcome distribution. Batches accumulate
/// into one histogram; after each batch the statistics are recomputed and
/// the loop stops once the dual gate passes or N_max shots are spent.
/// Round r samples with derive_seed(seed, {r, 0}) and bootstraps with derive_seed(seed, {r, 1}).
PointEvaluation evaluate_distribution(const MaxCutInstance& instance, const OutcomeDistribution& dist,
                                      const AdaptiveConfig& cfg, std::uint64_t seed, ResourceLedger& ledger);

/// Simulates the circuit once, then runs evaluate_distribution.
PointEvaluation evaluate_point(const MaxCutInstance& instance, const QaoaParams& params, const NoiseSpec& noise,
                               const AdaptiveConfig& cfg, std::uint64_t seed, ResourceLedger& ledger);

}  // namespace modeqaoa
