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

#include "modeqaoa/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "modeqaoa/random.hpp"

namespace modeqaoa {

namespace {

int log2_exact(std::size_t dim) {
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("state dimension must be a power of two >= 2");
    }
    int n = 0;
    while ((std::size_t{1} << n) < dim) ++n;
    return n;
}

// exp(-i beta X) on one qubit, in place.
void apply_mixer(std::vector<std::complex<double>>& amps, int qubit, double beta) {
    const double c = std::cos(beta);
    const std::complex<double> ms(0.0, -std::sin(beta));
    const std::size_t stride = std::size_t{1} << qubit;
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const std::complex<double> a = amps[i];
            const std::complex<double> b = amps[i + stride];
            amps[i] = c * a + ms * b;
            amps[i + stride] = ms * a + c * b;
        }
    }
}

}  // namespace

std::vector<double> QaoaParams::theta() const {
    std::vector<double> t(betas);
    t.insert(t.end(), gammas.begin(), gammas.end());
    return t;
}

QaoaParams QaoaParams::from_theta(const std::vector<double>& theta) {
    if (theta.empty() || theta.size() % 2 != 0) {
        throw std::invalid_argument("QaoaParams::from_theta: length must be a positive even number");
    }
    const auto p = static_cast<std::ptrdiff_t>(theta.size() / 2);
    QaoaParams out;
    out.betas.assign(theta.begin(), theta.begin() + p);
    out.gammas.assign(theta.begin() + p, theta.end());
    return out;
}

void QaoaParams::validate() const {
    if (gammas.empty() || gammas.size() != betas.size()) {
        throw std::invalid_argument("QaoaParams: need p >= 1 gammas and betas of equal length");
    }
    auto finite = [](double x) { return std::isfinite(x); };
    if (!std::all_of(gammas.begin(), gammas.end(), finite) || !std::all_of(betas.begin(), betas.end(), finite)) {
        throw std::invalid_argument("QaoaParams: non-finite angle");
    }
}

StateVector::StateVector(std::vector<std::complex<double>> amplitudes)
    : num_qubits_(log2_exact(amplitudes.size())), amps_(std::move(amplitudes)) {}

OutcomeDistribution::OutcomeDistribution(std::vector<double> probs)
    : num_qubits_(log2_exact(probs.size())), probs_(std::move(probs)) {
    double total = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0)) throw std::invalid_argument("OutcomeDistribution: negative probability");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-10) throw std::invalid_argument("OutcomeDistribution: not normalized");
}

OutcomeDistribution OutcomeDistribution::uniform(int num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    return OutcomeDistribution(std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

OutcomeDistribution OutcomeDistribution::point_mass(const Bitstring& z) {
    std::vector<double> probs(std::size_t{1} << z.size(), 0.0);
    probs[z.index()] = 1.0;
    return OutcomeDistribution(std::move(probs));
}

NoiseSpec NoiseSpec::for_circuit(const MaxCutInstance& instance, int depth, double lambda) {
    NoiseSpec spec{lambda, static_cast<std::int64_t>(depth) * (instance.num_edges() + instance.num_vertices())};
    spec.validate();
    return spec;
}

double NoiseSpec::mixing() const {
    if (lambda_per_gate == 0.0 || gate_count == 0) return 0.0;
    return 1.0 - std::pow(1.0 - lambda_per_gate, static_cast<double>(gate_count));
}

void NoiseSpec::validate() const {
    if (!(lambda_per_gate >= 0.0 && lambda_per_gate <= 1.0)) {
        throw std::invalid_argument("NoiseSpec: lambda must lie in [0, 1]");
    }
    if (gate_count < 0) throw std::invalid_argument("NoiseSpec: negative gate count");
}

StateVector evolve(const MaxCutInstance& instance, const QaoaParams& params, const std::optional<GateShift>& shift) {
    params.validate();
    const int n = instance.num_vertices();
    if (n > kMaxSimulatedQubits) throw std::invalid_argument("evolve: too many qubits");
    const std::size_t dim = std::size_t{1} << n;
    const std::vector<double> cost = cut_table(instance);

    std::vector<std::complex<double>> amps(dim, std::complex<double>(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
    for (int layer = 0; layer < params.depth(); ++layer) {
        const double gamma = params.gammas[static_cast<std::size_t>(layer)];
        for (std::size_t z = 0; z < dim; ++z) {
            amps[z] *= std::polar(1.0, -gamma * cost[z]);
        }
        if (shift && shift->layer == layer && shift->kind == GateKind::cost_edge) {
            // Extra exp(-i delta/2 Z_u Z_v) on the shifted edge.
            const Edge& e = instance.edges()[static_cast<std::size_t>(shift->index)];
            const std::complex<double> same = std::polar(1.0, -0.5 * shift->delta);
            const std::complex<double> diff = std::conj(same);
            for (std::size_t z = 0; z < dim; ++z) {
                amps[z] *= (((z >> e.u) ^ (z >> e.v)) & 1U) ? diff : same;
            }
        }
        const double beta = params.betas[static_cast<std::size_t>(layer)];
        for (int q = 0; q < n; ++q) {
            double angle = beta;
            if (shift && shift->layer == layer && shift->kind == GateKind::mixer_vertex && shift->index == q) {
                angle += 0.5 * shift->delta;
            }
            apply_mixer(amps, q, angle);
        }
    }
    return StateVector(std::move(amps));
}

OutcomeDistribution distribution(const StateVector& state) {
    const auto& amps = state.amplitudes();
    std::vector<double> probs(amps.size());
    std::transform(amps.begin(), amps.end(), probs.begin(), [](std::complex<double> a) { return std::norm(a); });
    // Remove rounding drift so downstream normalization checks stay tight.
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    for (double& p : probs) p /= total;
    return OutcomeDistribution(std::move(probs));
}

OutcomeDistribution apply_depolarizing(const OutcomeDistribution& dist, const NoiseSpec& noise) {
    noise.validate();
    const double mix = noise.mixing();
    if (mix == 0.0) return dist;
    const double floor = mix / static_cast<double>(dist.probs().size());
    std::vector<double> probs(dist.probs());
    for (double& p : probs) p = (1.0 - mix) * p + floor;
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    for (double& p : probs) p /= total;
    return OutcomeDistribution(std::move(probs));
}

OutcomeDistribution outcome_distribution(const MaxCutInstance& instance, const QaoaParams& params,
                                         const NoiseSpec& noise, const std::optional<GateShift>& shift) {
    return apply_depolarizing(distribution(evolve(instance, params, shift)), noise);
}

Counts sample(const OutcomeDistribution& dist, std::int64_t shots, std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("sample: shots must be positive");
    const auto& probs = dist.probs();
    std::vector<double> cdf(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cdf.begin());
    // Zero-probability tail entries must never be selected.
    std::size_t last = probs.size() - 1;
    while (last > 0 && probs[last] == 0.0) --last;

    Rng rng(seed);
    std::vector<std::int64_t> tally(probs.size(), 0);
    for (std::int64_t s = 0; s < shots; ++s) {
        const double u = uniform01(rng) * cdf[last];
        auto idx = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.begin() + static_cast<std::ptrdiff_t>(last), u) - cdf.begin());
        ++tally[idx];
    }
    Counts counts(dist.num_qubits());
    for (std::size_t z = 0; z < tally.size(); ++z) {
        if (tally[z] > 0) counts.add(Bitstring(static_cast<std::uint32_t>(z), dist.num_qubits()), tally[z]);
    }
    return counts;
}

double exact_expectation(const MaxCutInstance& instance, const OutcomeDistribution& dist) {
    if (dist.num_qubits() != instance.num_vertices()) {
        throw std::invalid_argument("exact_expectation: width mismatch");
    }
    const std::vector<double> cost = cut_table(instance);
    double e = 0.0;
    for (std::size_t z = 0; z < cost.size(); ++z) e += dist.probs()[z] * cost[z];
    return e;
}

int generator_count(const MaxCutInstance& instance, int depth, int coordinate) {
    if (coordinate < 0 || coordinate >= 2 * depth) throw std::out_of_range("generator_count: bad coordinate");
    return coordinate < depth ? instance.num_vertices() : instance.num_edges();
}

GateShift coordinate_gate_shift(int depth, int coordinate, int gate, double delta) {
    if (coordinate < 0 || coordinate >= 2 * depth) throw std::out_of_range("coordinate_gate_shift: bad coordinate");
    if (coordinate < depth) return {coordinate, GateKind::mixer_vertex, gate, delta};
    return {coordinate - depth, GateKind::cost_edge, gate, delta};
}

double gate_angle_derivative(const MaxCutInstance& instance, int depth, int coordinate, int gate) {
    if (coordinate < depth) return 2.0;
    return -instance.edges()[static_cast<std::size_t>(gate)].w;
}

}  // namespace modeqaoa
