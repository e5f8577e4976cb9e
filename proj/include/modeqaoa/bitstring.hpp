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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace modeqaoa {

/// Assignment of n vertices to the two sides of a cut.
///
/// Internally bit i of `index()` holds z_i for vertex i, which is also the
/// computational-basis index used by the simulator. The canonical text form
/// lists z_0 first ("011" means vertex 0 on side 0, vertices 1 and 2 on side
/// 1). Ordering is lexicographic on the text form, which is the tie-break
/// rule used everywhere a "smallest" bitstring is needed.
class Bitstring {
public:
    static constexpr int kMaxBits = 32;

    Bitstring() = default;
    Bitstring(std::uint32_t index, int num_bits);

    static Bitstring from_text(std::string_view text);

    std::uint32_t index() const { return index_; }
    int size() const { return num_bits_; }
    bool bit(int vertex) const { return (index_ >> vertex) & 1U; }

    Bitstring complement() const;
    std::string to_text() const;

    friend bool operator==(const Bitstring& a, const Bitstring& b) {
        return a.num_bits_ == b.num_bits_ && a.index_ == b.index_;
    }
    friend std::strong_ordering operator<=>(const Bitstring& a, const Bitstring& b) {
        if (auto c = a.num_bits_ <=> b.num_bits_; c != 0) return c;
        return a.lex_key_ <=> b.lex_key_;
    }

private:
    std::uint32_t index_ = 0;
    std::uint32_t lex_key_ = 0;  // index with bit order reversed over num_bits_
    int num_bits_ = 0;
};

}  // namespace modeqaoa
