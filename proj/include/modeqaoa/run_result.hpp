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
#include <string>
#include <vector>

#include "modeqaoa/estimators.hpp"
#include "modeqaoa/ledger.hpp"
#include "modeqaoa/simulator.hpp"

namespace modeqaoa {

/// One outer-loop evaluation. `objective` is what the optimizer maximizes
/// (mode cut for map_bo, expectation estimate for the baselines); `mode_cut`
/// is always the cut of the evaluation's most frequent bitstring.
struct Trial {
    int index = 0;  // 1-based
    QaoaParams params;
    double objective = 0.0;
    std::int64_t shots_used = 0;
    bool accepted = true;
    double confidence = 0.0;
    double var_normalized = 0.0;
    Bitstring mode;
    double mode_cut = 0.0;
    double incumbent = 0.0;  // best objective up to and including this trial
};

enum class StopReason { budget, stagnation };

std::string to_string(StopReason reason);

struct AmplifyResult {
    QaoaParams params;
    std::vector<double> trace;
};

/// Common result schema of every optimizer.
struct RunResult {
    std::string method;
    std::vector<Trial> trials;
    QaoaParams best_params;
    Bitstring best_bitstring;
    double best_objective = 0.0;
    int best_trial = 0;
    EvalStats final_eval;
    Counts final_counts{1};
    ResourceLedger ledger;
    StopReason stop_reason = StopReason::budget;
    std::optional<AmplifyResult> stage2;
};

}  // namespace modeqaoa
