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

#include "modeqaoa/bitstring.hpp"

#include <stdexcept>

namespace modeqaoa {

namespace {

std::uint32_t reverse_bits(std::uint32_t x, int n) {
    std::uint32_t r = 0;
    for (int i = 0; i < n; ++i) {
        r = (r << 1) | ((x >> i) & 1U);
    }
    return r;
}

}  // namespace

Bitstring::Bitstring(std::uint32_t index, int num_bits) : index_(index), num_bits_(num_bits) {
    if (num_bits < 1 || num_bits > kMaxBits) {
        throw std::invalid_argument("Bitstring: bit count out of range");
    }
    if (num_bits < kMaxBits && (index >> num_bits) != 0) {
        throw std::invalid_argument("Bitstring: index has bits beyond num_bits");
    }
    lex_key_ = reverse_bits(index, num_bits);
}

Bitstring Bitstring::from_text(std::string_view text) {
    if (text.empty() || text.size() > static_cast<std::size_t>(kMaxBits)) {
        throw std::invalid_argument("Bitstring: bad text length");
    }
    std::uint32_t index = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            index |= 1U << i;
        } else if (text[i] != '0') {
            throw std::invalid_argument("Bitstring: text must contain only '0' and '1'");
        }
    }
    return Bitstring(index, static_cast<int>(text.size()));
}

Bitstring Bitstring::complement() const {
    const std::uint32_t mask = num_bits_ == kMaxBits ? ~0U : ((1U << num_bits_) - 1U);
    return Bitstring(~index_ & mask, num_bits_);
}

std::string Bitstring::to_text() const {
    std::string s(static_cast<std::size_t>(num_bits_), '0');
    for (int i = 0; i < num_bits_; ++i) {
        if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

}  // namespace modeqaoa
