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

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qvarsched {

/// Exact arbitrary-precision rational used for gains, penalties and Ising
/// coefficients.
using Rational = boost::multiprecision::cpp_rational;

/// Parses an exact rational from an integer ("3"), a finite decimal
/// ("-2.75", "1e-2") or a fraction ("7/3"). Throws std::invalid_argument.
[[nodiscard]] Rational parse_rational(std::string_view text);

/// Finite decimal when the denominator has only factors 2 and 5, otherwise
/// "p/q". The output always round-trips through parse_rational.
[[nodiscard]] std::string format_rational(const Rational &value);

[[nodiscard]] double to_double(const Rational &value);

} // namespace qvarsched
