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

#include "modeqaoa/shots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "modeqaoa/random.hpp"

namespace modeqaoa {

namespace {

// Tags separating the sampling and bootstrap streams of one round.
constexpr std::uint64_t kSampleStream = 0;
constexpr std::uint64_t kBootstrapStream = 1;

}  // namespace

void AdaptiveConfig::validate() const {
    if (pilot_shots < 1 || pilot_shots > max_shots) {
        throw std::invalid_argument("AdaptiveConfig: need 1 <= pilot_shots <= max_shots");
    }
    if (!(growth > 1.0)) throw std::invalid_argument("AdaptiveConfig: growth must exceed 1");
    if (!(tau_conf > 0.0 && tau_conf <= 1.0)) throw std::invalid_argument("AdaptiveConfig: tau_conf must lie in (0, 1]");
    if (!(tau_var >= 0.0)) throw std::invalid_argument("AdaptiveConfig: tau_var must be nonnegative");
    if (bootstrap_resamples < 1) throw std::invalid_argument("AdaptiveConfig: need at least one resample");
}

std::int64_t next_batch(std::int64_t current_batch, std::int64_t spent, const AdaptiveConfig& cfg) {
    if (spent >= cfg.max_shots) throw std::invalid_argument("next_batch: per-point budget exhausted");
    // nearbyint under the default rounding mode rounds half to even.
    const auto grown = static_cast<std::int64_t>(std::nearbyint(cfg.growth * static_cast<double>(current_batch)));
    return std::max<std::int64_t>(1, std::min(grown, cfg.max_shots - spent));
}

std::vector<std::int64_t> batch_schedule(const AdaptiveConfig& cfg) {
    cfg.validate();
    std::vector<std::int64_t> out{cfg.pilot_shots};
    std::int64_t spent = cfg.pilot_shots;
    while (spent < cfg.max_shots) {
        out.push_back(next_batch(out.back(), spent, cfg));
        spent += out.back();
    }
    return out;
}

PointEvaluation evaluate_distribution(const MaxCutInstance& instance, const OutcomeDistribution& dist,
                                      const AdaptiveConfig& cfg, std::uint64_t seed, ResourceLedger& ledger) {
    cfg.validate();
    PointEvaluation pe;
    pe.counts = Counts(dist.num_qubits());
    CutCache cuts(instance);

    std::int64_t batch = cfg.pilot_shots;
    while (true) {
        const auto round = static_cast<std::uint64_t>(pe.rounds);
        pe.counts.merge(sample(dist, batch, derive_seed(seed, {round, kSampleStream})));
        pe.shots_used += batch;
        pe.batches.push_back(batch);
        ++pe.rounds;
        ledger.classical_count_ops += batch;

        pe.stats = compute_eval_stats(instance, pe.counts, cfg.bootstrap_resamples,
                                      derive_seed(seed, {round, kBootstrapStream}), &cuts);
        ledger.bootstrap_ops += static_cast<std::int64_t>(cfg.bootstrap_resamples) * pe.counts.distinct();

        if (dual_gate(pe.stats.confidence, pe.stats.var_normalized, cfg.tau_conf, cfg.tau_var)) {
            pe.accepted = true;
            break;
        }
        if (pe.shots_used >= cfg.max_shots) break;
        batch = next_batch(batch, pe.shots_used, cfg);
    }
    ledger.classical_cut_ops += cuts.evaluations();
    ledger.record_point(pe.shots_used, pe.counts.distinct());
    return pe;
}

PointEvaluation evaluate_point(const MaxCutInstance& instance, const QaoaParams& params, const NoiseSpec& noise,
                               const AdaptiveConfig& cfg, std::uint64_t seed, ResourceLedger& ledger) {
    const OutcomeDistribution dist = outcome_distribution(instance, params, noise);
    ++ledger.circuit_evaluations;
    PointEvaluation pe = evaluate_distribution(instance, dist, cfg, seed, ledger);
    pe.params = params;
    return pe;
}

}  // namespace modeqaoa
