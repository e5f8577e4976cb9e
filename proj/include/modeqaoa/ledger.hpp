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

namespace modeqaoa {

/// Quantum-shot and classical-operation counters for one run.
///
/// Classical work is counted abstractly: one count op per raw shot tallied,
/// one cut op per cut-value evaluation (a pass over the m edges), one
/// bootstrap op per category draw of a multinomial resample.
struct ResourceLedger {
    std::int64_t optimization_shots = 0;
    std::int64_t final_eval_shots = 0;
    std::int64_t stage2_shots = 0;
    std::int64_t circuit_evaluations = 0;
    std::int64_t classical_count_ops = 0;
    std::int64_t classical_cut_ops = 0;
    std::int64_t bootstrap_ops = 0;
    std::vector<std::int64_t> distinct_counts;  // K_i
    std::vector<std::int64_t> per_point_shots;  // N_i

    /// Records one sampled optimization evaluation of N_i shots and K_i distinct outcomes.
    void record_point(std::int64_t shots, std::int64_t distinct);

    std::int64_t total_shots() const { return optimization_shots + final_eval_shots + stage2_shots; }
    /// Mean of per_point_shots (0 when empty).
    double average_point_shots() const;
    /// Mean of distinct_counts (0 when empty).
    double average_distinct() const;

    /// Adds `other` into this ledger. Per-point sequences are concatenated.
    void merge(const ResourceLedger& other);

    friend bool operator==(const ResourceLedger&, const ResourceLedger&) = default;
};

}  // namespace modeqaoa
