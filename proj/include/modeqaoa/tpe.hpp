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
#include <span>
#include <utility>
#include <vector>

#include "modeqaoa/run_result.hpp"

namespace modeqaoa {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

/// Default QAOA search box over theta = [betas, gammas]:
/// beta in [0, pi), gamma in [0, 2 pi).
std::vector<Interval> default_bounds(int depth);

struct TpeConfig {
    int startup_trials = 10;
    double good_fraction = 0.25;
    int candidates_per_suggest = 24;
    double bandwidth_floor = 0.05;

    void validate() const;
};

/// Indices into `history` of the ceil(good_fraction * T) best trials (ties
/// to the earlier trial) and of the rest, each in ascending index order.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_good_bad(std::span<const Trial> history,
                                                                            double good_fraction);

/// Tree-structured Parzen estimator proposal for maximization. Uniform in
/// the box during the startup phase; afterwards the best of
/// `candidates_per_suggest` draws from the good-group density by the ratio
/// l(x) / g(x) of per-dimension Gaussian kernel densities.
QaoaParams suggest(std::span<const Trial> history, std::span<const Interval> bounds, const TpeConfig& cfg,
                   std::uint64_t seed);

}  // namespace modeqaoa
