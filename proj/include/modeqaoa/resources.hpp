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
#include <span>
#include <utility>

#include "modeqaoa/estimators.hpp"
#include "modeqaoa/graph.hpp"
#include "modeqaoa/ledger.hpp"
#include "modeqaoa/run_result.hpp"

namespace modeqaoa {

struct MetricsReport {
    double final_mode_accuracy = 0.0;
    double final_expectation_accuracy = 0.0;
    double final_best_sample_accuracy = 0.0;
    std::int64_t total_shots = 0;
    std::optional<std::int64_t> shots_to_threshold;
    std::optional<double> saving_q;
    std::optional<double> saving_cl;
};

struct AuxAccuracies {
    double expectation = 0.0;
    double best_sample = 0.0;
};

struct SavingRatios {
    double quantum = 0.0;    // S_q
    double classical = 0.0;  // S_cl
};

/// C(final mode) / C(z*). Requires a positive optimum.
double final_mode_accuracy(const MaxCutInstance& instance, const EvalStats& final_eval);

AuxAccuracies aux_accuracies(const MaxCutInstance& instance, const Counts& final_counts);

/// Cumulative optimization shots at the first trial whose incumbent mode cut
/// reaches threshold * optimum. The incumbent is the best-objective trial so
/// far (earliest on ties).
std::optional<std::int64_t> shots_to_threshold(std::span<const Trial> trials, double optimum_value,
                                               double threshold);

/// Quantum and classical saving factors of a mode-objective run relative to
/// a fixed-shot expectation run:
///   S_q  = T_exp N_exp / (T_map N_adp)
///   S_cl = T_exp N_exp m / (T_map N_adp + T_map K m + B T_map K)
/// with N_exp, N_adp and K the per-point averages recorded in the ledgers.
SavingRatios saving_ratios(const ResourceLedger& ledger_exp, std::int64_t trials_exp, const ResourceLedger& ledger_map,
                           std::int64_t trials_map, int num_edges, int bootstrap_resamples);

MetricsReport compute_metrics(const MaxCutInstance& instance, const RunResult& run, double threshold);

}  // namespace modeqaoa
