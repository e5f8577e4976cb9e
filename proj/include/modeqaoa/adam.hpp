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

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace modeqaoa {

struct AdamConstants {
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

/// Adam for gradient *ascent*. Each coordinate keeps its own step count so
/// sparse single-coordinate updates get the correct bias correction.
class Adam {
public:
    Adam(std::size_t dim, double learning_rate, AdamConstants constants = {})
        : lr_(learning_rate), c_(constants), m_(dim, 0.0), v_(dim, 0.0), steps_(dim, 0) {}

    void ascend(std::vector<double>& x, std::span<const double> grad) {
        if (grad.size() != x.size() || x.size() != m_.size()) throw std::invalid_argument("Adam: size mismatch");
        for (std::size_t k = 0; k < x.size(); ++k) ascend_coordinate(x, k, grad[k]);
    }

    void ascend_coordinate(std::vector<double>& x, std::size_t k, double grad) {
        const int t = ++steps_.at(k);
        m_[k] = c_.beta1 * m_[k] + (1.0 - c_.beta1) * grad;
        v_[k] = c_.beta2 * v_[k] + (1.0 - c_.beta2) * grad * grad;
        const double m_hat = m_[k] / (1.0 - std::pow(c_.beta1, t));
        const double v_hat = v_[k] / (1.0 - std::pow(c_.beta2, t));
        x.at(k) += lr_ * m_hat / (std::sqrt(v_hat) + c_.eps);
    }

private:
    double lr_;
    AdamConstants c_;
    std::vector<double> m_;
    std::vector<double> v_;
    std::vector<int> steps_;
};

}  // namespace modeqaoa
