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

#include "qvarsched/errors.hpp"

namespace qvarsched {

MalformedBitstring::MalformedBitstring(std::size_t expected, std::size_t actual)
    : Error("malformed bitstring: expected " + std::to_string(expected) +
            " bits, got " + std::to_string(actual)) {}

QubitCountExceeded::QubitCountExceeded(std::size_t requested,
                                       std::size_t maximum)
    : Error("qubit count " + std::to_string(requested) +
            " exceeds the configured maximum of " + std::to_string(maximum)),
      requested_(requested), maximum_(maximum) {}

ParseError::ParseError(std::string field, std::size_t line,
                       const std::string &message)
    : Error((line > 0 ? "line " + std::to_string(line) + ": " : std::string{}) +
            (field.empty() ? std::string{} : "field '" + field + "': ") +
            message),
      field_(std::move(field)), line_(line) {}

} // namespace qvarsched
