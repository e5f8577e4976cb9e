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

#include "modeqaoa/counts.hpp"

#include <stdexcept>

namespace modeqaoa {

Counts Counts::from_text(std::initializer_list<std::pair<std::string_view, std::int64_t>> entries) {
    if (entries.size() == 0) throw std::invalid_argument("Counts::from_text: no entries");
    Counts c(static_cast<int>(entries.begin()->first.size()));
    for (const auto& [text, n] : entries) c.add(Bitstring::from_text(text), n);
    return c;
}

void Counts::add(const Bitstring& z, std::int64_t count) {
    if (z.size() != num_bits_) throw std::invalid_argument("Counts::add: bitstring length mismatch");
    if (count < 1) throw std::invalid_argument("Counts::add: count must be positive");
    hist_[z] += count;
    total_ += count;
}

void Counts::merge(const Counts& other) {
    if (other.num_bits_ != num_bits_) throw std::invalid_argument("Counts::merge: width mismatch");
    for (const auto& [z, n] : other.hist_) {
        hist_[z] += n;
    }
    total_ += other.total_;
}

std::int64_t Counts::count(const Bitstring& z) const {
    auto it = hist_.find(z);
    return it == hist_.end() ? 0 : it->second;
}

}  // namespace modeqaoa
