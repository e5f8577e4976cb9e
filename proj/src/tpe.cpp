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

#include "modeqaoa/tpe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "modeqaoa/random.hpp"

namespace modeqaoa {

namespace {

constexpr double kScottFactor = 1.06;
constexpr int kTruncationTries = 64;

double clamp_into(double x, const Interval& iv) {
    if (x < iv.lo) return iv.lo;
    if (x >= iv.hi) return std::nextafter(iv.hi, iv.lo);
    return x;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

/// One-dimensional Parzen density: Gaussian kernels truncated to the interval
/// plus one uniform prior component.
class ParzenDensity {
public:
    ParzenDensity(std::vector<double> centers, const Interval& iv, double floor) : centers_(std::move(centers)), iv_(iv) {
        const double width = iv.hi - iv.lo;
        const double count = static_cast<double>(centers_.size());
        double sd = width / std::sqrt(12.0);
        if (centers_.size() >= 2) {
            const double mean = std::accumulate(centers_.begin(), centers_.end(), 0.0) / count;
            double ss = 0.0;
            for (double c : centers_) ss += (c - mean) * (c - mean);
            sd = std::sqrt(ss / (count - 1.0));
        }
        bandwidth_ = std::clamp(kScottFactor * sd * std::pow(std::max(count, 1.0), -0.2), floor, width);
        mass_.reserve(centers_.size());
        for (double c : centers_) {
            mass_.push_back(normal_cdf((iv.hi - c) / bandwidth_) - normal_cdf((iv.lo - c) / bandwidth_));
        }
    }

    double log_density(double x) const {
        const double width = iv_.hi - iv_.lo;
        double sum = 1.0 / width;
        for (std::size_t i = 0; i < centers_.size(); ++i) {
            const double z = (x - centers_[i]) / bandwidth_;
            sum += std::exp(-0.5 * z * z) / (bandwidth_ * std::sqrt(2.0 * std::numbers::pi) * mass_[i]);
        }
        return std::log(sum / static_cast<double>(centers_.size() + 1));
    }

    double draw(Rng& rng) const {
        const std::size_t j = uniform_index(rng, centers_.size() + 1);
        if (j == centers_.size()) return clamp_into(iv_.lo + uniform01(rng) * (iv_.hi - iv_.lo), iv_);
        std::normal_distribution<double> gauss(centers_[j], bandwidth_);
        for (int t = 0; t < kTruncationTries; ++t) {
            const double x = gauss(rng);
            if (x >= iv_.lo && x < iv_.hi) return x;
        }
        return clamp_into(centers_[j], iv_);
    }

private:
    std::vector<double> centers_;
    Interval iv_;
    double bandwidth_ = 1.0;
    std::vector<double> mass_;
};

}  // namespace

std::vector<Interval> default_bounds(int depth) {
    if (depth < 1) throw std::invalid_argument("default_bounds: depth must be positive");
    std::vector<Interval> b(static_cast<std::size_t>(depth), Interval{0.0, std::numbers::pi});
    b.resize(static_cast<std::size_t>(2 * depth), Interval{0.0, 2.0 * std::numbers::pi});
    return b;
}

void TpeConfig::validate() const {
    if (startup_trials < 1) throw std::invalid_argument("TpeConfig: startup_trials must be >= 1");
    if (!(good_fraction > 0.0 && good_fraction < 1.0)) throw std::invalid_argument("TpeConfig: good_fraction must lie in (0, 1)");
    if (candidates_per_suggest < 1) throw std::invalid_argument("TpeConfig: candidates_per_suggest must be >= 1");
    if (!(bandwidth_floor > 0.0)) throw std::invalid_argument("TpeConfig: bandwidth_floor must be positive");
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_good_bad(std::span<const Trial> history,
                                                                            double good_fraction) {
    if (history.empty()) throw std::invalid_argument("split_good_bad: empty history");
    std::vector<std::size_t> order(history.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return history[a].objective > history[b].objective; });
    const auto n_good = std::min(
        history.size(), static_cast<std::size_t>(std::ceil(good_fraction * static_cast<double>(history.size()))));
    std::vector<std::size_t> good(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_good));
    std::vector<std::size_t> bad(order.begin() + static_cast<std::ptrdiff_t>(n_good), order.end());
    std::sort(good.begin(), good.end());
    std::sort(bad.begin(), bad.end());
    return {good, bad};
}

QaoaParams suggest(std::span<const Trial> history, std::span<const Interval> bounds, const TpeConfig& cfg,
                   std::uint64_t seed) {
    cfg.validate();
    if (bounds.empty() || bounds.size() % 2 != 0) throw std::invalid_argument("suggest: need an even, non-empty box");
    for (const Interval& iv : bounds) {
        if (!(iv.hi > iv.lo)) throw std::invalid_argument("suggest: empty interval");
    }
    Rng rng(seed);
    const std::size_t dim = bounds.size();

    if (history.size() < static_cast<std::size_t>(cfg.startup_trials)) {
        std::vector<double> theta(dim);
        for (std::size_t d = 0; d < dim; ++d) {
            theta[d] = clamp_into(bounds[d].lo + uniform01(rng) * (bounds[d].hi - bounds[d].lo), bounds[d]);
        }
        return QaoaParams::from_theta(theta);
    }

    const auto [good, bad] = split_good_bad(history, cfg.good_fraction);
    std::vector<ParzenDensity> l;
    std::vector<ParzenDensity> g;
    for (std::size_t d = 0; d < dim; ++d) {
        auto column = [&](const std::vector<std::size_t>& idx) {
            std::vector<double> xs;
            xs.reserve(idx.size());
            for (std::size_t i : idx) {
                const std::vector<double> theta = history[i].params.theta();
                if (theta.size() != dim) throw std::invalid_argument("suggest: history dimension mismatch");
                xs.push_back(theta[d]);
            }
            return xs;
        };
        l.emplace_back(column(good), bounds[d], cfg.bandwidth_floor);
        g.emplace_back(column(bad), bounds[d], cfg.bandwidth_floor);
    }

    std::vector<double> best;
    double best_score = -std::numeric_limits<double>::infinity();
    for (int c = 0; c < cfg.candidates_per_suggest; ++c) {
        std::vector<double> x(dim);
        double score = 0.0;
        for (std::size_t d = 0; d < dim; ++d) {
            x[d] = l[d].draw(rng);
            score += l[d].log_density(x[d]) - g[d].log_density(x[d]);
        }
        if (score > best_score || best.empty()) {
            best_score = score;
            best = std::move(x);
        }
    }
    return QaoaParams::from_theta(best);
}

}  // namespace modeqaoa
