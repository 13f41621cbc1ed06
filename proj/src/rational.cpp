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

#include "trinl/rational.hpp"

#include <cctype>
#include <cmath>

#include "trinl/errors.hpp"

namespace trinl {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) throw FormatError("not an integer: '" + std::string(s) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw FormatError("empty rational literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash));
        mpz_class den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (whole == "-" || whole == "+" || whole.empty()) whole = "0";
        mpz_class w = parse_integer(whole);
        if (frac.empty()) return Rational(w);
        mpz_class f = parse_integer(frac);
        if (frac[0] == '-' || frac[0] == '+') throw FormatError("bad decimal '" + std::string(text) + "'");
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Rational q(abs(w) * scale + f, scale);
        q.canonicalize();
        return negative ? Rational(-q) : q;
    }
    return Rational(parse_integer(text));
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational snap(double value, unsigned long max_denominator) {
    if (!std::isfinite(value)) throw FormatError("cannot snap a non-finite value");
    if (max_denominator == 0) throw FormatError("denominator bound must be positive");
    // Exact binary expansion of the double, then bounded continued fraction.
    Rational x(value);
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Rational rest = x;
    for (;;) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
        mpz_class q2 = q0 + a * q1;
        if (q2 > max_denominator) {
            // Best semiconvergent within the bound.
            mpz_class k = (mpz_class(max_denominator) - q0) / q1;
            Rational semi(p0 + k * p1, q0 + k * q1);
            Rational conv(p1, q1);
            semi.canonicalize();
            conv.canonicalize();
            return abs(semi - x) < abs(conv - x) ? semi : conv;
        }
        mpz_class p2 = p0 + a * p1;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        Rational frac = rest - Rational(a);
        if (sgn(frac) == 0) break;
        rest = 1 / frac;
    }
    Rational result(p1, q1);
    result.canonicalize();
    return result;
}

}  // namespace trinl
