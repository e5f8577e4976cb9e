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
#include <initializer_list>
#include <map>
#include <string_view>
#include <utility>

#include "modeqaoa/bitstring.hpp"

namespace modeqaoa {

/// Measurement histogram. Keys iterate in lexicographic bitstring order, so
/// every statistic computed over it is independent of insertion order.
class Counts {
public:
    using Map = std::map<Bitstring, std::int64_t>;

    explicit Counts(int num_bits) : num_bits_(num_bits) {}
    static Counts from_text(std::initializer_list<std::pair<std::string_view, std::int64_t>> entries);

    void add(const Bitstring& z, std::int64_t count = 1);
    void merge(const Counts& other);

    int num_bits() const { return num_bits_; }
    /// N, the number of shots.
    std::int64_t total() const { return total_; }
    /// K, the number of distinct observed bitstrings.
    std::int64_t distinct() const { return static_cast<std::int64_t>(hist_.size()); }
    bool empty() const { return hist_.empty(); }
    std::int64_t count(const Bitstring& z) const;
    const Map& entries() const { return hist_; }

    friend bool operator==(const Counts&, const Counts&) = default;

private:
    int num_bits_;
    std::int64_t total_ = 0;
    Map hist_;
};

}  // namespace modeqaoa
