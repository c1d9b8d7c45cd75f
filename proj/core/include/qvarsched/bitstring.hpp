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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qvarsched {

/// Measurement outcome over Q qubits. Character k of the textual form is
/// qubit k; in the integer basis index qubit 0 is the most significant bit.
class Bitstring {
  public:
    Bitstring() = default;
    explicit Bitstring(std::size_t size) : bits_(size, 0) {}

    /// Throws MalformedBitstring on characters other than '0' / '1'.
    [[nodiscard]] static Bitstring parse(std::string_view text);
    [[nodiscard]] static Bitstring from_index(std::uint64_t index,
                                              std::size_t size);

    [[nodiscard]] std::uint64_t to_index() const noexcept;
    [[nodiscard]] std::string str() const;

    [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
    [[nodiscard]] bool operator[](std::size_t qubit) const noexcept {
        return bits_[qubit] != 0;
    }
    void set(std::size_t qubit, bool value) noexcept {
        bits_[qubit] = value ? 1 : 0;
    }

    friend bool operator==(const Bitstring &, const Bitstring &) = default;
    friend auto operator<=>(const Bitstring &, const Bitstring &) = default;

  private:
    std::vector<std::uint8_t> bits_;
};

} // namespace qvarsched
