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

#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "modeqaoa/bo.hpp"
#include "modeqaoa/random.hpp"
#include "modeqaoa/resources.hpp"
#include "modeqaoa/tpe.hpp"

namespace modeqaoa {
namespace {

Trial make_trial(int index, double objective, std::vector<double> theta = {0.5, 0.5}) {
    Trial t;
    t.index = index;
    t.objective = objective;
    t.params = QaoaParams::from_theta(theta);
    return t;
}

bool in_bounds(const QaoaParams& q, const std::vector<Interval>& b) {
    const auto theta = q.theta();
    for (std::size_t d = 0; d < theta.size(); ++d) {
        if (!(theta[d] >= b[d].lo && theta[d] < b[d].hi)) return false;
    }
    return true;
}

TEST(Tpe, DefaultBounds) {
    const auto b = default_bounds(2);
    ASSERT_EQ(b.size(), 4U);
    EXPECT_EQ(b[0].hi, std::numbers::pi);
    EXPECT_EQ(b[2].hi, 2 * std::numbers::pi);
    EXPECT_THROW(default_bounds(0), std::invalid_argument);
}

TEST(Tpe, SplitGoodBad) {
    std::vector<Trial> h;
    for (int i = 0; i < 10; ++i) h.push_back(make_trial(i + 1, i));
    auto [good, bad] = split_good_bad(h, 0.25);
    EXPECT_EQ(good, (std::vector<std::size_t>{7, 8, 9}));
    EXPECT_EQ(bad.size(), 7U);

    auto [g1, b1] = split_good_bad(std::span<const Trial>(h.data(), 1), 0.25);
    EXPECT_EQ(g1, (std::vector<std::size_t>{0}));
    EXPECT_TRUE(b1.empty());

    std::vector<Trial> flat;
    for (int i = 0; i < 10; ++i) flat.push_back(make_trial(i + 1, 3.0));
    auto [gf, bf] = split_good_bad(flat, 0.25);
    EXPECT_EQ(gf, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_THROW(split_good_bad({}, 0.25), std::invalid_argument);
}

TEST(Tpe, StartupIsUniformInBounds) {
    const auto b = default_bounds(1);
    std::vector<int> bins(10, 0);
    for (std::uint64_t s = 0; s < 5000; ++s) {
        const QaoaParams q = suggest({}, b, TpeConfig{}, s);
        ASSERT_TRUE(in_bounds(q, b));
        ++bins[static_cast<int>(q.betas[0] / std::numbers::pi * 10)];
    }
    // Chi-square with 9 degrees of freedom; 27.9 is the 0.999 quantile.
    double chi2 = 0.0;
    for (int c : bins) chi2 += (c - 500.0) * (c - 500.0) / 500.0;
    EXPECT_LT(chi2, 27.9);
}

TEST(Tpe, EqualObjectivesStayInBounds) {
    const auto b = default_bounds(2);
    std::vector<Trial> h;
    for (int i = 0; i < 30; ++i) h.push_back(make_trial(i + 1, 1.0, {0.1, 3.0, 6.0, 0.2}));
    for (std::uint64_t s = 0; s < 50; ++s) EXPECT_TRUE(in_bounds(suggest(h, b, TpeConfig{}, s), b));
}

TEST(Tpe, DeterministicPerSeed) {
    const auto b = default_bounds(1);
    std::vector<Trial> h;
    Rng rng(1);
    for (int i = 0; i < 20; ++i) h.push_back(make_trial(i + 1, uniform01(rng), {uniform01(rng), 2 * uniform01(rng)}));
    EXPECT_EQ(suggest(h, b, TpeConfig{}, 42), suggest(h, b, TpeConfig{}, 42));
}

// Sharp single optimum on the depth-1 box.
double sharp_objective(const std::vector<double>& theta) {
    const double db = theta[0] - 2.2, dg = theta[1] - 1.3;
    return std::exp(-(db * db + dg * dg) / (2 * 0.25 * 0.25));
}

TEST(Tpe, ConcentratesOnSharpOptimum) {
    const auto b = default_bounds(1);
    // Top-decile level of the objective under uniform sampling of the box.
    Rng mc(9);
    std::vector<double> vals;
    for (int i = 0; i < 200000; ++i) {
        vals.push_back(sharp_objective({std::numbers::pi * uniform01(mc), 2 * std::numbers::pi * uniform01(mc)}));
    }
    std::nth_element(vals.begin(), vals.begin() + 180000, vals.end());
    const double level = vals[180000];

    int tpe_hits = 0, random_hits = 0;
    const int kRuns = 5;
    for (int run = 0; run < kRuns; ++run) {
        std::vector<Trial> h;
        for (int t = 1; t <= 80; ++t) {
            const QaoaParams q = suggest(h, b, TpeConfig{}, derive_seed(run, {static_cast<std::uint64_t>(t)}));
            const double y = sharp_objective(q.theta());
            if (t > 60 && y >= level) ++tpe_hits;
            h.push_back(make_trial(t, y, q.theta()));
        }
        Rng rr(derive_seed(run, {999}));
        for (int t = 0; t < 20; ++t) {
            if (sharp_objective({std::numbers::pi * uniform01(rr), 2 * std::numbers::pi * uniform01(rr)}) >= level) {
                ++random_hits;
            }
        }
    }
    EXPECT_GE(tpe_hits, static_cast<int>(0.6 * 20 * kRuns));
    EXPECT_GT(tpe_hits, random_hits);
}

TEST(Stagnation, Examples) {
    StagnationConfig cfg{5, 0.5};
    std::vector<Trial> rising;
    for (int i = 0; i < 12; ++i) rising.push_back(make_trial(i + 1, i));
    EXPECT_FALSE(should_stop(rising, cfg));

    std::vector<Trial> flat;
    for (int i = 0; i < 5; ++i) flat.push_back(make_trial(i + 1, 2.0));
    EXPECT_TRUE(should_stop(flat, cfg));
    EXPECT_FALSE(should_stop(std::span<const Trial>(flat.data(), 4), cfg));

    // Gain of exactly min_delta inside the window does not trigger a stop.
    std::vector<Trial> edge;
    for (int i = 0; i < 5; ++i) edge.push_back(make_trial(i + 1, 1.0));
    for (int i = 5; i < 10; ++i) edge.push_back(make_trial(i + 1, i == 5 ? 1.5 : 1.0));
    EXPECT_FALSE(should_stop(edge, cfg));
    edge[5].objective = 1.25;
    EXPECT_TRUE(should_stop(edge, cfg));
}

MaxCutInstance k3() { return MaxCutInstance(3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}}); }

TEST(MapBo, SingleEdge) {
    const MaxCutInstance g(2, {{0, 1, 1.0}});
    BoSettings s;
    s.max_trials = 30;
    const RunResult r = optimize_map_bo(g, 1, {}, s, 0.0, 5);
    EXPECT_EQ(r.best_objective, 1.0);
    const std::string mode = r.final_eval.mode.to_text();
    EXPECT_TRUE(mode == "01" || mode == "10") << mode;
    EXPECT_EQ(r.best_objective, cut_value(g, r.best_bitstring));
}

TEST(MapBo, SingleTrialBudget) {
    BoSettings s;
    s.max_trials = 1;
    const RunResult r = optimize_map_bo(k3(), 1, {}, s, 0.0, 1);
    EXPECT_EQ(r.trials.size(), 1U);
    EXPECT_EQ(r.stop_reason, StopReason::budget);
}

TEST(MapBo, TriangleReachesOptimum) {
    BoSettings s;
    s.max_trials = 40;
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const RunResult r = optimize_map_bo(k3(), 2, {}, s, 0.0, seed);
        hits += final_mode_accuracy(k3(), r.final_eval) == 1.0 ? 1 : 0;
    }
    EXPECT_GE(hits, 9);
}

TEST(MapBo, RunInvariants) {
    const MaxCutInstance g = random_regular(6, 3, 3);
    BoSettings s;
    s.max_trials = 40;
    const RunResult r = optimize_map_bo(g, 2, {}, s, 0.0, 17);
    const auto b = default_bounds(2);
    double prev = -1.0, best = -1.0;
    std::int64_t shots = 0;
    for (std::size_t i = 0; i < r.trials.size(); ++i) {
        const Trial& t = r.trials[i];
        EXPECT_EQ(t.index, static_cast<int>(i) + 1);
        EXPECT_TRUE(in_bounds(t.params, b));
        EXPECT_GE(t.incumbent, prev);
        prev = t.incumbent;
        best = std::max(best, t.objective);
        shots += t.shots_used;
    }
    EXPECT_EQ(r.best_objective, best);
    EXPECT_EQ(cut_value(g, r.best_bitstring), r.best_objective);
    EXPECT_EQ(r.ledger.optimization_shots, shots);
    EXPECT_EQ(r.ledger.total_shots(), shots + s.final_shots);
    EXPECT_EQ(r.ledger.final_eval_shots, s.final_shots);

    const RunResult again = optimize_map_bo(g, 2, {}, s, 0.0, 17);
    EXPECT_EQ(again.ledger, r.ledger);
    EXPECT_EQ(again.best_params, r.best_params);
    EXPECT_EQ(again.final_counts, r.final_counts);
}

TEST(MapBo, StagnationDisabledRunsFullBudget) {
    BoSettings s;
    s.max_trials = 45;
    s.stagnation.reset();
    const RunResult r = optimize_map_bo(k3(), 1, {}, s, 0.0, 2);
    EXPECT_EQ(r.trials.size(), 45U);
    EXPECT_EQ(r.stop_reason, StopReason::budget);
}

TEST(MapBo, FlatObjectiveStopsEarly) {
    const MaxCutInstance flat(3, {{0, 1, 0.0}});
    BoSettings s;
    s.max_trials = 100;
    const RunResult r = optimize_map_bo(flat, 1, {}, s, 0.0, 3);
    EXPECT_LE(static_cast<int>(r.trials.size()), s.tpe.startup_trials + s.stagnation->patience);
    EXPECT_EQ(r.stop_reason, StopReason::stagnation);
}

}  // namespace
}  // namespace modeqaoa
