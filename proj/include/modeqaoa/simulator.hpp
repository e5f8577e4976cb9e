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

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "modeqaoa/counts.hpp"
#include "modeqaoa/graph.hpp"

namespace modeqaoa {

/// Depth-p QAOA angles. The optimizer-facing vector is theta = [betas, gammas].
struct QaoaParams {
    std::vector<double> gammas;
    std::vector<double> betas;

    int depth() const { return static_cast<int>(gammas.size()); }
    int dimension() const { return 2 * depth(); }
    std::vector<double> theta() const;
    static QaoaParams from_theta(const std::vector<double>& theta);
    /// Throws unless gammas and betas are non-empty, equal length and finite.
    void validate() const;

    friend bool operator==(const QaoaParams&, const QaoaParams&) = default;
};

enum class GateKind { cost_edge, mixer_vertex };

/// Adds `delta` to the rotation angle phi of one physical gate
/// exp(-i phi/2 P) in one layer. Cost gates are P = Z_u Z_v with
/// phi = -gamma * w_uv; mixer gates are P = X_v with phi = 2 * beta.
struct GateShift {
    int layer = 0;
    GateKind kind = GateKind::cost_edge;
    int index = 0;  // edge index or vertex
    double delta = 0.0;
};

class StateVector {
public:
    explicit StateVector(std::vector<std::complex<double>> amplitudes);
    int num_qubits() const { return num_qubits_; }
    const std::vector<std::complex<double>>& amplitudes() const { return amps_; }

private:
    int num_qubits_;
    std::vector<std::complex<double>> amps_;
};

class OutcomeDistribution {
public:
    /// Validates nonnegativity and normalization to 1e-10.
    explicit OutcomeDistribution(std::vector<double> probs);
    static OutcomeDistribution uniform(int num_qubits);
    static OutcomeDistribution point_mass(const Bitstring& z);

    int num_qubits() const { return num_qubits_; }
    const std::vector<double>& probs() const { return probs_; }
    double prob(const Bitstring& z) const { return probs_[z.index()]; }

private:
    int num_qubits_;
    std::vector<double> probs_;
};

/// Global depolarizing mixture standing in for per-gate noise of strength
/// lambda over gate_count gates.
struct NoiseSpec {
    double lambda_per_gate = 0.0;
    std::int64_t gate_count = 0;

    /// G = p * (m + n): one ZZ gate per edge and one X rotation per vertex per layer.
    static NoiseSpec for_circuit(const MaxCutInstance& instance, int depth, double lambda);
    /// Effective mixing weight 1 - (1 - lambda)^G.
    double mixing() const;
    void validate() const;
};

inline constexpr int kMaxSimulatedQubits = 24;

StateVector evolve(const MaxCutInstance& instance, const QaoaParams& params,
                   const std::optional<GateShift>& shift = std::nullopt);
OutcomeDistribution distribution(const StateVector& state);
OutcomeDistribution apply_depolarizing(const OutcomeDistribution& dist, const NoiseSpec& noise);

/// evolve + distribution + apply_depolarizing.
OutcomeDistribution outcome_distribution(const MaxCutInstance& instance, const QaoaParams& params,
                                         const NoiseSpec& noise,
                                         const std::optional<GateShift>& shift = std::nullopt);

/// Multinomial draw of `shots` outcomes by inverse-CDF lookup.
Counts sample(const OutcomeDistribution& dist, std::int64_t shots, std::uint64_t seed);

double exact_expectation(const MaxCutInstance& instance, const OutcomeDistribution& dist);

/// Number of physical gates sharing theta coordinate k (n for betas, m for gammas).
int generator_count(const MaxCutInstance& instance, int depth, int coordinate);
/// The shift that moves gate g of theta coordinate k by delta.
GateShift coordinate_gate_shift(int depth, int coordinate, int gate, double delta);
/// d phi_g / d theta_k for gate g under coordinate k: 2 for mixers, -w for cost edges.
double gate_angle_derivative(const MaxCutInstance& instance, int depth, int coordinate, int gate);

}  // namespace modeqaoa
