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

#include <cmath>

#include <gtest/gtest.h>

#include "modeqaoa/estimators.hpp"
#include "modeqaoa/random.hpp"
#include "modeqaoa/simulator.hpp"

namespace modeqaoa {
namespace {

MaxCutInstance k3() { return MaxCutInstance(3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}}); }
MaxCutInstance single_edge() { return MaxCutInstance(2, {{0, 1, 1.0}}); }

double log_factorial(int n) { return std::lgamma(n + 1.0); }

// Exact P(resample mode == current mode) for three categories by enumerating
// every multinomial outcome. Categories are listed in lexicographic order.
double exact_three_category_confidence(const std::array<int, 3>& counts, int mode_index) {
    const int n = counts[0] + counts[1] + counts[2];
    double p[3];
    for (int i = 0; i < 3; ++i) p[i] = static_cast<double>(counts[i]) / n;
    double total = 0.0;
    for (int a = 0; a <= n; ++a) {
        for (int b = 0; a + b <= n; ++b) {
            const int c = n - a - b;
            const int x[3] = {a, b, c};
            int best = 0;
            for (int i = 1; i < 3; ++i) {
                if (x[i] > x[best]) best = i;
            }
            if (best != mode_index) continue;
            double logp = log_factorial(n) - log_factorial(a) - log_factorial(b) - log_factorial(c);
            for (int i = 0; i < 3; ++i) {
                if (x[i] > 0) logp += x[i] * std::log(p[i]);
            }
            total += std::exp(logp);
        }
    }
    return total;
}

// Exact binomial tail P(X >= k) for X ~ Bin(n, q).
double binomial_tail(int n, double q, int k) {
    double s = 0.0;
    for (int x = k; x <= n; ++x) {
        s += std::exp(log_factorial(n) - log_factorial(x) - log_factorial(n - x) + x * std::log(q) +
                      (n - x) * std::log1p(-q));
    }
    return s;
}

TEST(Estimators, ModeOf) {
    EXPECT_EQ(mode_of(Counts::from_text({{"00", 10}, {"11", 30}, {"01", 5}})).to_text(), "11");
    EXPECT_EQ(mode_of(Counts::from_text({{"11", 10}, {"00", 10}})).to_text(), "00");
    EXPECT_EQ(mode_of(Counts::from_text({{"0110", 1}})).to_text(), "0110");
    EXPECT_THROW(mode_of(Counts(2)), std::invalid_argument);
}

TEST(Estimators, MapObjective) {
    EXPECT_EQ(map_objective(k3(), Counts::from_text({{"011", 7}, {"000", 3}})), 2.0);
    EXPECT_EQ(map_objective(k3(), Counts::from_text({{"000", 10}})), 0.0);
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5, 1.0});
        e.push_back({i, i + 5, 1.0});
        e.push_back({5 + i, 5 + (i + 2) % 5, 1.0});
    }
    const MaxCutInstance petersen(10, e);
    const CutOptimum opt = brute_force_optimum(petersen);
    const Counts c = sample(OutcomeDistribution::point_mass(opt.bits), 100, 3);
    EXPECT_EQ(map_objective(petersen, c), 12.0);
}

TEST(Estimators, PiecewiseFlat) {
    Counts a = Counts::from_text({{"011", 7}, {"000", 3}, {"101", 2}});
    const double before = map_objective(k3(), a);
    a.add(Bitstring::from_text("000"), 3);
    a.add(Bitstring::from_text("110"), 4);
    EXPECT_EQ(mode_of(a).to_text(), "011");
    EXPECT_EQ(map_objective(k3(), a), before);
}

TEST(Estimators, ExpectationEstimate) {
    EXPECT_EQ(expectation_estimate(k3(), Counts::from_text({{"011", 5}})), 2.0);
    EXPECT_EQ(expectation_estimate(single_edge(), Counts::from_text({{"00", 50}, {"01", 50}})), 0.5);
    const Counts a = Counts::from_text({{"011", 3}, {"000", 5}, {"111", 1}});
    const Counts b = Counts::from_text({{"010", 7}, {"000", 2}});
    Counts m = a;
    m.merge(b);
    const double weighted = (expectation_estimate(k3(), a) * 9 + expectation_estimate(k3(), b) * 9) / 18;
    EXPECT_NEAR(expectation_estimate(k3(), m), weighted, 1e-12);
}

TEST(Estimators, ExpectationConvergesToExact) {
    const MaxCutInstance g = assign_weights(random_regular(8, 3, 2), WeightScheme::uniform, 3);
    const OutcomeDistribution d = distribution(evolve(g, QaoaParams{{0.7, 1.1}, {0.4, 0.25}}));
    const double mean = exact_expectation(g, d);
    double second = 0.0;
    const auto table = cut_table(g);
    for (std::size_t z = 0; z < table.size(); ++z) second += d.probs()[z] * table[z] * table[z];
    const double sd = std::sqrt((second - mean * mean) / 100000.0);
    EXPECT_NEAR(expectation_estimate(g, sample(d, 100000, 9)), mean, 4 * sd);
}

TEST(Estimators, ConfidenceDegenerate) {
    EXPECT_EQ(mode_confidence(Counts::from_text({{"010", 100}}), 200, 1), 1.0);
    EXPECT_THROW(mode_confidence(Counts::from_text({{"010", 100}}), 0, 1), std::invalid_argument);
    EXPECT_THROW(mode_confidence(Counts(2), 10, 1), std::invalid_argument);
}

TEST(Estimators, ConfidenceBalancedPair) {
    const Counts c = Counts::from_text({{"00", 50}, {"11", 50}});
    const double conf = mode_confidence(c, 200, 4);
    // Ties go to 00, so the exact value is P(Bin(100, 1/2) >= 50).
    const double exact = binomial_tail(100, 0.5, 50);
    EXPECT_NEAR(conf, 0.5, 0.15);
    EXPECT_NEAR(mode_confidence(c, 20000, 5), exact, 4 * std::sqrt(exact * (1 - exact) / 20000));
}

TEST(Estimators, ConfidenceDominantPair) {
    const Counts c = Counts::from_text({{"00", 90}, {"11", 10}});
    const double exact = binomial_tail(100, 0.9, 50);
    EXPECT_GT(exact, 0.99);
    EXPECT_GE(mode_confidence(c, 500, 6), 0.99);
}

TEST(Estimators, ConfidenceMatchesMultinomialEnumeration) {
    const std::vector<std::array<int, 3>> cases{{6, 4, 2}, {5, 5, 2}, {3, 7, 4}, {2, 2, 8}};
    for (const auto& k : cases) {
        const Counts c = Counts::from_text({{"00", k[0]}, {"01", k[1]}, {"11", k[2]}});
        int mode = 0;
        for (int i = 1; i < 3; ++i) {
            if (k[i] > k[mode]) mode = i;
        }
        const double exact = exact_three_category_confidence(k, mode);
        const int b = 20000;
        EXPECT_NEAR(mode_confidence(c, b, 17), exact, 4.5 * std::sqrt(exact * (1 - exact) / b) + 1e-9);
    }
}

TEST(Estimators, ConfidenceMonotoneInDominance) {
    double sum_low = 0.0, sum_high = 0.0;
    for (std::uint64_t s = 0; s < 20; ++s) {
        sum_low += mode_confidence(Counts::from_text({{"00", 40}, {"01", 35}, {"11", 25}}), 200, s);
        sum_high += mode_confidence(Counts::from_text({{"00", 50}, {"01", 35}, {"11", 15}}), 200, s);
    }
    EXPECT_GE(sum_high, sum_low);
}

TEST(Estimators, ConfidenceDeterministicAndOrderInvariant) {
    Counts a(3), b(3);
    a.add(Bitstring::from_text("001"), 30);
    a.add(Bitstring::from_text("110"), 25);
    a.add(Bitstring::from_text("010"), 9);
    b.add(Bitstring::from_text("010"), 9);
    b.add(Bitstring::from_text("110"), 25);
    b.add(Bitstring::from_text("001"), 30);
    EXPECT_EQ(mode_confidence(a, 300, 8), mode_confidence(b, 300, 8));
}

TEST(Estimators, NormalizedVariance) {
    EXPECT_EQ(normalized_cut_variance(k3(), Counts::from_text({{"011", 9}})), 0.0);
    EXPECT_EQ(normalized_cut_variance(single_edge(), Counts::from_text({{"00", 5}, {"01", 5}, {"10", 5}, {"11", 5}})),
              0.25);
    EXPECT_EQ(normalized_cut_variance(k3(), Counts::from_text({{"011", 4}, {"001", 9}})), 0.0);
}

TEST(Estimators, NormalizedVarianceTwoPassOracle) {
    const MaxCutInstance g = assign_weights(random_regular(8, 3, 21), WeightScheme::uniform, 22);
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Counts c(8);
        std::vector<double> cuts;
        const int k = 1 + static_cast<int>(uniform_index(rng, 30));
        for (int i = 0; i < k; ++i) {
            const Bitstring z(static_cast<std::uint32_t>(uniform_index(rng, 256)), 8);
            const int cnt = 1 + static_cast<int>(uniform_index(rng, 20));
            c.add(z, cnt);
            for (int j = 0; j < cnt; ++j) cuts.push_back(cut_value(g, z));
        }
        double mean = 0.0;
        for (double x : cuts) mean += x;
        mean /= static_cast<double>(cuts.size());
        double ss = 0.0;
        for (double x : cuts) ss += (x - mean) * (x - mean);
        const double var = ss / static_cast<double>(cuts.size());
        const double got = normalized_cut_variance(g, c);
        EXPECT_NEAR(got, var / (g.total_weight() * g.total_weight()), 1e-12);
        EXPECT_GE(got, 0.0);
        EXPECT_LE(got, 0.25 + 1e-12);
    }
}

TEST(Estimators, DualGate) {
    EXPECT_TRUE(dual_gate(0.95, 0.01, 0.90, 0.02));
    EXPECT_FALSE(dual_gate(0.95, 0.05, 0.90, 0.02));
    EXPECT_FALSE(dual_gate(0.80, 0.01, 0.90, 0.02));
    EXPECT_TRUE(dual_gate(0.90, 0.02, 0.90, 0.02));
}

TEST(Estimators, EvalStatsAndCutCache) {
    const Counts c = Counts::from_text({{"011", 7}, {"000", 3}, {"101", 2}});
    CutCache cache(k3());
    const EvalStats s = compute_eval_stats(k3(), c, 100, 3, &cache);
    EXPECT_EQ(s.mode.to_text(), "011");
    EXPECT_EQ(s.mode_cut, 2.0);
    EXPECT_EQ(s.distinct, 3);
    EXPECT_EQ(s.shots, 12);
    EXPECT_NEAR(s.expectation, expectation_estimate(k3(), c), 1e-15);
    EXPECT_NEAR(s.var_normalized, normalized_cut_variance(k3(), c), 1e-15);
    EXPECT_EQ(s.confidence, mode_confidence(c, 100, 3));
    EXPECT_EQ(cache.evaluations(), 3);
    compute_eval_stats(k3(), c, 100, 4, &cache);
    EXPECT_EQ(cache.evaluations(), 3);
}

}  // namespace
}  // namespace modeqaoa
