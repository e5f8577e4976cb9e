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

#include "modeqaoa/estimators.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include "modeqaoa/random.hpp"

namespace modeqaoa {

namespace {

void require_nonempty(const Counts& counts, const char* who) {
    if (counts.empty()) throw std::invalid_argument(std::string(who) + ": empty counts");
}

struct Moments {
    double mean = 0.0;
    double second = 0.0;
};

template <typename CutFn>
Moments cut_moments(const Counts& counts, CutFn&& cut) {
    Moments m;
    const double n = static_cast<double>(counts.total());
    for (const auto& [z, c] : counts.entries()) {
        const double value = cut(z);
        const double f = static_cast<double>(c) / n;
        m.mean += f * value;
        m.second += f * value * value;
    }
    return m;
}

double normalized_variance(const Moments& m, double total_weight) {
    if (total_weight <= 0.0) return 0.0;
    const double var = std::max(0.0, m.second - m.mean * m.mean);
    return var / (total_weight * total_weight);
}

}  // namespace

double CutCache::operator()(const Bitstring& z) {
    auto [it, inserted] = values_.try_emplace(z, 0.0);
    if (inserted) {
        it->second = cut_value(*instance_, z);
        ++evaluations_;
    }
    return it->second;
}

Bitstring mode_of(const Counts& counts) {
    require_nonempty(counts, "mode_of");
    const Bitstring* best = nullptr;
    std::int64_t best_count = 0;
    // Lexicographic iteration plus strict comparison keeps the smallest tie.
    for (const auto& [z, c] : counts.entries()) {
        if (c > best_count) {
            best_count = c;
            best = &z;
        }
    }
    return *best;
}

double map_objective(const MaxCutInstance& instance, const Counts& counts) {
    return cut_value(instance, mode_of(counts));
}

double expectation_estimate(const MaxCutInstance& instance, const Counts& counts) {
    require_nonempty(counts, "expectation_estimate");
    return cut_moments(counts, [&](const Bitstring& z) { return cut_value(instance, z); }).mean;
}

double mode_confidence(const Counts& counts, int resamples, std::uint64_t seed) {
    require_nonempty(counts, "mode_confidence");
    if (resamples < 1) throw std::invalid_argument("mode_confidence: need at least one resample");

    std::vector<std::int64_t> observed;
    observed.reserve(counts.entries().size());
    std::size_t mode_index = 0;
    for (const auto& [z, c] : counts.entries()) {
        if (observed.empty() || c > observed[mode_index]) mode_index = observed.size();
        observed.push_back(c);
    }
    // tail[k] = sum of observed counts from category k on, for exact conditional probabilities.
    std::vector<std::int64_t> tail(observed.size() + 1, 0);
    for (std::size_t k = observed.size(); k-- > 0;) tail[k] = tail[k + 1] + observed[k];

    const std::int64_t n = counts.total();
    int hits = 0;
    for (int b = 0; b < resamples; ++b) {
        Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(b)}));
        std::int64_t remaining = n;
        std::int64_t best = -1;
        std::size_t best_index = 0;
        for (std::size_t k = 0; k < observed.size() && remaining > 0; ++k) {
            std::int64_t draw = remaining;
            if (k + 1 < observed.size()) {
                const double p = static_cast<double>(observed[k]) / static_cast<double>(tail[k]);
                std::binomial_distribution<std::int64_t> binom(remaining, p);
                draw = binom(rng);
            }
            remaining -= draw;
            if (draw > best) {
                best = draw;
                best_index = k;
            }
        }
        if (best_index == mode_index) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(resamples);
}

double normalized_cut_variance(const MaxCutInstance& instance, const Counts& counts) {
    require_nonempty(counts, "normalized_cut_variance");
    const Moments m = cut_moments(counts, [&](const Bitstring& z) { return cut_value(instance, z); });
    return normalized_variance(m, instance.total_weight());
}

bool dual_gate(double confidence, double var_normalized, double tau_conf, double tau_var) {
    return confidence >= tau_conf && var_normalized <= tau_var;
}

EvalStats compute_eval_stats(const MaxCutInstance& instance, const Counts& counts, int resamples,
                             std::uint64_t seed, CutCache* cache) {
    require_nonempty(counts, "compute_eval_stats");
    CutCache local(instance);
    CutCache& cuts = cache ? *cache : local;
    const Moments m = cut_moments(counts, cuts);

    EvalStats s;
    s.mode = mode_of(counts);
    s.mode_cut = cuts(s.mode);
    s.confidence = mode_confidence(counts, resamples, seed);
    s.var_normalized = normalized_variance(m, instance.total_weight());
    s.expectation = m.mean;
    s.distinct = counts.distinct();
    s.shots = counts.total();
    return s;
}

}  // namespace modeqaoa
