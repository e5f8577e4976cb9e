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

#include "modeqaoa/graph.hpp"
#include "modeqaoa/run_result.hpp"
#include "modeqaoa/shots.hpp"
#include "modeqaoa/tpe.hpp"

namespace modeqaoa {

struct StagnationConfig {
    int patience = 30;
    double min_delta = 1e-9;

    void validate() const;
};

/// Stage-1 settings shared by the BO-driven methods.
struct BoSettings {
    TpeConfig tpe;
    /// Disabled when empty.
    std::optional<StagnationConfig> stagnation = StagnationConfig{};
    int max_trials = 100;
    std::int64_t final_shots = 5000;
};

/// True when at least `patience` trials exist and the incumbent gained less
/// than min_delta across the last `patience` trials. The reference is the
/// incumbent after trial T - patience, or after the first trial when
/// T == patience.
bool should_stop(std::span<const Trial> history, const StagnationConfig& cfg);

/// Samples `shots` at the chosen parameters and computes full statistics;
/// the shots are charged to ledger.final_eval_shots.
void run_final_evaluation(const MaxCutInstance& instance, const NoiseSpec& noise, std::int64_t shots,
                          int bootstrap_resamples, std::uint64_t seed, RunResult& result);

/// BO-guided mode-objective QAOA with adaptive shots.
RunResult optimize_map_bo(const MaxCutInstance& instance, int depth, const AdaptiveConfig& adaptive,
                          const BoSettings& settings, double noise_lambda, std::uint64_t seed);

}  // namespace modeqaoa
