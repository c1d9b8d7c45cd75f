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
#include <stdexcept>
#include <string>

namespace qvarsched {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A problem instance violates one of its structural invariants.
class InvalidProblem : public Error {
  public:
    using Error::Error;
};

class MalformedBitstring : public Error {
  public:
    MalformedBitstring(std::size_t expected, std::size_t actual);
    MalformedBitstring(const std::string &what) : Error(what) {}
};

/// Raised when a register would exceed the configured simulation limit.
class QubitCountExceeded : public Error {
  public:
    QubitCountExceeded(std::size_t requested, std::size_t maximum);
    [[nodiscard]] std::size_t requested() const noexcept { return requested_; }
    [[nodiscard]] std::size_t maximum() const noexcept { return maximum_; }

  private:
    std::size_t requested_;
    std::size_t maximum_;
};

class UnboundParameter : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class NonFiniteObjective : public Error {
  public:
    using Error::Error;
};

class InstanceMismatch : public Error {
  public:
    using Error::Error;
};

/// Input document could not be parsed. Carries the 1-based line (0 when
/// unknown) and the offending field path.
class ParseError : public Error {
  public:
    ParseError(std::string field, std::size_t line, const std::string &message);
    [[nodiscard]] const std::string &field() const noexcept { return field_; }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::string field_;
    std::size_t line_;
};

} // namespace qvarsched
