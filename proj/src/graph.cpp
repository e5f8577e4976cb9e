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

#include "modeqaoa/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "modeqaoa/random.hpp"

namespace modeqaoa {

namespace {

constexpr int kMaxEnumerationVertices = 24;
constexpr int kMaxPairingRestarts = 1000;

MaxCutInstance complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
    }
    return MaxCutInstance(n, std::move(edges));
}

// One attempt of the pairing model; empty on a self-loop or repeated edge.
std::optional<std::vector<Edge>> try_pairing(int n, int degree, Rng& rng) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * degree);
    for (int v = 0; v < n; ++v) {
        for (int k = 0; k < degree; ++k) stubs.push_back(v);
    }
    // Fisher-Yates with the portable index generator.
    for (std::size_t i = stubs.size(); i > 1; --i) {
        std::swap(stubs[i - 1], stubs[uniform_index(rng, i)]);
    }
    std::set<std::pair<int, int>> seen;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        int u = stubs[i];
        int v = stubs[i + 1];
        if (u == v) return std::nullopt;
        if (u > v) std::swap(u, v);
        if (!seen.emplace(u, v).second) return std::nullopt;
        edges.push_back({u, v, 1.0});
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    return edges;
}

}  // namespace

MaxCutInstance::MaxCutInstance(int num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
    if (n_ < 2) throw std::invalid_argument("MaxCutInstance: need at least 2 vertices");
    if (n_ > Bitstring::kMaxBits) throw std::invalid_argument("MaxCutInstance: too many vertices");
    std::set<std::pair<int, int>> seen;
    for (Edge& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_) throw std::invalid_argument("MaxCutInstance: edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("MaxCutInstance: self-loop");
        if (!(e.w >= 0.0) || !std::isfinite(e.w)) {
            throw std::invalid_argument("MaxCutInstance: weights must be finite and nonnegative");
        }
        if (!seen.emplace(e.u, e.v).second) throw std::invalid_argument("MaxCutInstance: duplicate edge");
        total_weight_ += e.w;
    }
}

MaxCutInstance MaxCutInstance::with_optimum() const {
    MaxCutInstance copy = *this;
    if (!copy.optimum_) copy.optimum_ = brute_force_optimum(*this);
    return copy;
}

CutOptimum MaxCutInstance::optimum() const {
    return optimum_ ? *optimum_ : brute_force_optimum(*this);
}

MaxCutInstance random_regular(int n, int degree, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random_regular: n must be at least 2");
    if (degree < 1) throw std::invalid_argument("random_regular: degree must be at least 1");
    if (degree > n) throw std::invalid_argument("random_regular: degree must not exceed n");
    if ((n * degree) % 2 != 0 || n <= degree) {
        MaxCutInstance g = complete_graph(n);
        g.seed = seed;
        return g;
    }
    for (std::uint64_t attempt_seed = seed;; attempt_seed = mix64(attempt_seed)) {
        Rng rng(attempt_seed);
        for (int restart = 0; restart < kMaxPairingRestarts; ++restart) {
            if (auto edges = try_pairing(n, degree, rng)) {
                MaxCutInstance g(n, std::move(*edges));
                g.seed = seed;
                return g;
            }
        }
    }
}

MaxCutInstance assign_weights(const MaxCutInstance& instance, WeightScheme scheme, std::uint64_t seed) {
    std::vector<Edge> edges(instance.edges().begin(), instance.edges().end());
    Rng rng(seed);
    for (Edge& e : edges) {
        e.w = scheme == WeightScheme::unit ? 1.0 : 1.0 - uniform01(rng);
    }
    MaxCutInstance out(instance.num_vertices(), std::move(edges));
    out.seed = instance.seed;
    return out;
}

double cut_value(const MaxCutInstance& instance, const Bitstring& z) {
    if (z.size() != instance.num_vertices()) {
        throw std::invalid_argument("cut_value: bitstring length does not match vertex count");
    }
    double c = 0.0;
    for (const Edge& e : instance.edges()) {
        if (z.bit(e.u) != z.bit(e.v)) c += e.w;
    }
    return c;
}

std::vector<double> cut_table(const MaxCutInstance& instance) {
    const int n = instance.num_vertices();
    if (n > kMaxEnumerationVertices) throw std::invalid_argument("cut_table: too many vertices");
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> table(dim, 0.0);
    for (const Edge& e : instance.edges()) {
        for (std::size_t z = 0; z < dim; ++z) {
            if (((z >> e.u) ^ (z >> e.v)) & 1U) table[z] += e.w;
        }
    }
    return table;
}

CutOptimum brute_force_optimum(const MaxCutInstance& instance) {
    const int n = instance.num_vertices();
    if (n > kMaxEnumerationVertices) throw std::invalid_argument("brute_force_optimum: too many vertices");
    // Vertex 0 stays on side 0, so each partition is visited once and the
    // representative is always the lexicographically smaller of z and its
    // complement.
    const std::uint32_t half = 1U << (n - 1);
    std::optional<Bitstring> best;
    double best_value = -1.0;
    for (std::uint32_t k = 0; k < half; ++k) {
        const Bitstring z(k << 1, n);
        const double c = cut_value(instance, z);
        if (c > best_value || (c == best_value && z < *best)) {
            best_value = c;
            best = z;
        }
    }
    return {*best, best_value};
}

}  // namespace modeqaoa
