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
#include <vector>

#include "modeqaoa/bitstring.hpp"

namespace modeqaoa {

struct Edge {
    int u = 0;
    int v = 0;
    double w = 1.0;
};

/// Exact maximum cut: the lexicographically smallest optimal partition.
struct CutOptimum {
    Bitstring bits;
    double value = 0.0;
};

/// Weighted undirected simple graph. Edges are normalized to u < v and
/// validated on construction; the instance is immutable afterwards.
class MaxCutInstance {
public:
    MaxCutInstance(int num_vertices, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    std::span<const Edge> edges() const { return edges_; }
    /// Sum of all edge weights; the upper bound on any cut value.
    double total_weight() const { return total_weight_; }

    const std::optional<CutOptimum>& cached_optimum() const { return optimum_; }
    /// Returns a copy carrying the brute-force optimum.
    MaxCutInstance with_optimum() const;
    /// Cached optimum if present, brute-forced otherwise.
    CutOptimum optimum() const;

    /// Optional provenance recorded in instance files.
    std::optional<std::uint64_t> seed;

private:
    int n_;
    std::vector<Edge> edges_;
    double total_weight_ = 0.0;
    std::optional<CutOptimum> optimum_;
};

enum class WeightScheme { unit, uniform };

/// Random simple `degree`-regular graph from the pairing model. When no such
/// graph exists (n * degree odd, or n <= degree) the complete graph K_n is
/// returned instead. Throws for n < 2, degree < 1 or degree > n.
MaxCutInstance random_regular(int n, int degree, std::uint64_t seed);

/// Unit weights, or i.i.d. weights drawn from (0, 1].
MaxCutInstance assign_weights(const MaxCutInstance& instance, WeightScheme scheme, std::uint64_t seed);

double cut_value(const MaxCutInstance& instance, const Bitstring& z);

/// Enumerates the 2^(n-1) partitions with vertex 0 on side 0. Limited to n <= 24.
CutOptimum brute_force_optimum(const MaxCutInstance& instance);

/// Cut value of every computational basis index, C(z) for z in [0, 2^n).
std::vector<double> cut_table(const MaxCutInstance& instance);

}  // namespace modeqaoa
