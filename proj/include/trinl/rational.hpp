// Copyright 2026 The trinl Authors
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

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>

namespace trinl {

using Rational = mpq_class;

/// Parses "n", "n/d" or a finite decimal such as "-0.125" exactly.
// num/den in lowest terms (the two-argument mpq constructor does not reduce).
inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text);

/// "n" for integers, "n/d" otherwise (always in lowest terms).
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }
inline double to_double(double value) { return value; }

/// Best rational approximation with denominator at most `max_denominator`
/// (continued-fraction convergents and semiconvergents).
Rational snap(double value, unsigned long max_denominator);

/// Rational -> T for T in {Rational, double}.
template <typename T>
T to_scalar(const Rational& value) {
    if constexpr (std::is_same_v<T, double>) {
        return value.get_d();
    } else {
        return value;
    }
}

/// Per-scalar comparison policy: exact for rationals, 1e-12 absolute for doubles.
template <typename T>
struct Arithmetic;

template <>
struct Arithmetic<Rational> {
    static constexpr const char* mode = "rational";
    static bool is_zero(const Rational& v) { return sgn(v) == 0; }
    static bool equal(const Rational& a, const Rational& b) { return a == b; }
    static bool nonnegative(const Rational& v) { return sgn(v) >= 0; }
    static Rational from_ratio(long num, long den) { return make_rational(num, den); }
};

template <>
struct Arithmetic<double> {
    static constexpr const char* mode = "double";
    static constexpr double tolerance = 1e-12;
    static bool is_zero(double v) { return std::abs(v) <= tolerance; }
    static bool equal(double a, double b) { return std::abs(a - b) <= tolerance; }
    static bool nonnegative(double v) { return v >= -tolerance; }
    static double from_ratio(long num, long den) { return static_cast<double>(num) / static_cast<double>(den); }
};

}  // namespace trinl
