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
#include <map>

#include "modeqaoa/counts.hpp"
#include "modeqaoa/graph.hpp"

namespace modeqaoa {

inline constexpr int kDefaultBootstrapResamples = 200;

/// Per-evaluation statistics of a measurement histogram.
struct EvalStats {
    Bitstring mode;
    double mode_cut = 0.0;
    double confidence = 0.0;
    double var_normalized = 0.0;
    double expectation = 0.0;
    std::int64_t distinct = 0;
    std::int64_t shots = 0;
};

/// Cut values of observed bitstrings, each computed at most once.
class CutCache {
public:
    explicit CutCache(const MaxCutInstance& instance) : instance_(&instance) {}
    double operator()(const Bitstring& z);
    /// Number of cut-value evaluations performed so far.
    std::int64_t evaluations() const { return evaluations_; }

private:
    const MaxCutInstance* instance_;
    std::map<Bitstring, double> values_;
    std::int64_t evaluations_ = 0;
};

/// Most frequent bitstring; the lexicographically smallest among ties.
Bitstring mode_of(const Counts& counts);

/// Cut value of the mode.
double map_objective(const MaxCutInstance& instance, const Counts& counts);

/// (1/N) * sum_z n_z C(z), one cut evaluation per distinct key.
double expectation_estimate(const MaxCutInstance& instance, const Counts& counts);

/// Bootstrap probability that a Multinomial(N, p_hat) resample keeps the
/// current mode. Each resample draws the K category counts by sequential
/// conditional binomials, so the cost is O(B * K).
double mode_confidence(const Counts& counts, int resamples, std::uint64_t seed);

/// Empirical cut variance divided by total_weight^2; 0 for an edgeless graph.
double normalized_cut_variance(const MaxCutInstance& instance, const Counts& counts);

/// Acceptance rule: confidence >= tau_conf and var_normalized <= tau_var.
bool dual_gate(double confidence, double var_normalized, double tau_conf, double tau_var);

/// All statistics in one pass. Cut values go through `cache` when provided.
EvalStats compute_eval_stats(const MaxCutInstance& instance, const Counts& counts, int resamples,
                             std::uint64_t seed, CutCache* cache = nullptr);

}  // namespace modeqaoa
