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

#include "qvarsched/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qvarsched {
namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

// Boost reads a leading 0 as an octal prefix, so strip it first.
cpp_int decimal_digits(std::string_view digits) {
    while (digits.size() > 1 && digits.front() == '0') {
        digits.remove_prefix(1);
    }
    return cpp_int{std::string(digits)};
}

cpp_int parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw std::invalid_argument("not an integer");
    }
    const cpp_int value = decimal_digits(s);
    return negative ? cpp_int(-value) : value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

cpp_int pow10(long exponent) {
    cpp_int p = 1;
    for (long k = 0; k < exponent; ++k) {
        p *= 10;
    }
    return p;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) {
        throw std::invalid_argument("empty number");
    }
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        cpp_int num = parse_integer(trim(s.substr(0, slash)));
        cpp_int den = parse_integer(trim(s.substr(slash + 1)));
        if (den == 0) {
            throw std::invalid_argument("zero denominator");
        }
        return Rational(num, den);
    }

    bool negative = false;
    if (s.front() == '-' || s.front() == '+') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        cpp_int exp_value = parse_integer(s.substr(e + 1));
        if (exp_value > 64 || exp_value < -64) {
            throw std::invalid_argument("exponent out of range");
        }
        exponent = exp_value.convert_to<long>();
        s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto int_part = s.substr(0, dot);
        auto frac_part = s.substr(dot + 1);
        if ((!int_part.empty() && !all_digits(int_part)) ||
            (!frac_part.empty() && !all_digits(frac_part)) ||
            (int_part.empty() && frac_part.empty())) {
            throw std::invalid_argument("malformed decimal");
        }
        digits = std::string(int_part) + std::string(frac_part);
        exponent -= static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(s)) {
            throw std::invalid_argument("malformed number");
        }
        digits = std::string(s);
    }
    cpp_int mantissa = decimal_digits(digits);
    if (negative) {
        mantissa = -mantissa;
    }
    if (exponent >= 0) {
        return Rational(mantissa * pow10(exponent));
    }
    return Rational(mantissa, pow10(-exponent));
}

std::string format_rational(const Rational &value) {
    cpp_int num = boost::multiprecision::numerator(value);
    cpp_int den = boost::multiprecision::denominator(value);
    if (den == 1) {
        return num.str();
    }
    // Finite decimal iff den = 2^a 5^b; scale to 10^max(a,b).
    cpp_int rest = den;
    unsigned twos = 0;
    unsigned fives = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1) {
        return num.str() + "/" + den.str();
    }
    const unsigned places = std::max(twos, fives);
    cpp_int scaled = num * pow10(places) / den;
    bool negative = scaled < 0;
    if (negative) {
        scaled = -scaled;
    }
    std::string digits = scaled.str();
    if (digits.size() <= places) {
        digits.insert(0, places + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - places, 1, '.');
    return negative ? "-" + digits : digits;
}

double to_double(const Rational &value) { return value.convert_to<double>(); }

} // namespace qvarsched
