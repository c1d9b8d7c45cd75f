// Copyright 2026 The qvarsched Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qvarsched/bitstring.hpp"

#include "qvarsched/errors.hpp"

namespace qvarsched {

Bitstring Bitstring::parse(std::string_view text) {
    Bitstring out(text.size());
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text[k] != '0' && text[k] != '1') {
            throw MalformedBitstring("malformed bitstring: character '" +
                                     std::string(1, text[k]) + "' at position " +
                                     std::to_string(k));
        }
        out.bits_[k] = text[k] == '1' ? 1 : 0;
    }
    return out;
}

Bitstring Bitstring::from_index(std::uint64_t index, std::size_t size) {
    Bitstring out(size);
    for (std::size_t q = 0; q < size; ++q) {
        out.bits_[q] = static_cast<std::uint8_t>((index >> (size - 1 - q)) & 1U);
    }
    return out;
}

std::uint64_t Bitstring::to_index() const noexcept {
    std::uint64_t index = 0;
    for (auto b : bits_) {
        index = (index << 1U) | b;
    }
    return index;
}

std::string Bitstring::str() const {
    std::string s(bits_.size(), '0');
    for (std::size_t k = 0; k < bits_.size(); ++k) {
        if (bits_[k] != 0) {
            s[k] = '1';
        }
    }
    return s;
}

} // namespace qvarsched
