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

#include "trinl/expression.hpp"

#include <sstream>

namespace trinl {

namespace {

bool inputs_match(const Triple& term, const Triple& inputs) {
    for (std::size_t k = 0; k < 3; ++k)
        if (term[k] >= 0 && term[k] != inputs[k]) return false;
    return true;
}

}  // namespace

ProbabilityCoefficients to_probability_basis(const CorrelatorCoefficients& c) {
    ProbabilityCoefficients p;
    for (auto& v : p) v = 0;
    for (std::size_t t = 0; t < kCorrelatorTerms; ++t) {
        if (sgn(c[t]) == 0) continue;
        const Triple term = term_of(t);
        const Rational weight = c[t] / Rational(1 << (3 - term_degree(t)));
        for (std::size_t e = 0; e < kEntries; ++e) {
            if (!inputs_match(term, inputs_of(e))) continue;
            if (term_sign(t, outcomes_of(e)) > 0) {
                p[e] += weight;
            } else {
                p[e] -= weight;
            }
        }
    }
    return p;
}

CorrelatorCoefficients to_correlator_basis(const ProbabilityCoefficients& p) {
    CorrelatorCoefficients c;
    for (auto& v : c) v = 0;
    for (std::size_t e = 0; e < kEntries; ++e) {
        if (sgn(p[e]) == 0) continue;
        const Rational weight = p[e] / 8;
        for (std::size_t t = 0; t < kCorrelatorTerms; ++t) {
            if (!inputs_match(term_of(t), inputs_of(e))) continue;
            if (term_sign(t, outcomes_of(e)) > 0) {
                c[t] += weight;
            } else {
                c[t] -= weight;
            }
        }
    }
    return c;
}

BellExpression BellExpression::from_correlators(const CorrelatorCoefficients& coefficients, std::string name) {
    BellExpression e;
    e.name = std::move(name);
    e.native_ = Basis::Correlator;
    e.correlators_ = coefficients;
    e.probabilities_ = to_probability_basis(coefficients);
    return e;
}

BellExpression BellExpression::from_probabilities(const ProbabilityCoefficients& coefficients, std::string name) {
    BellExpression e;
    e.name = std::move(name);
    e.native_ = Basis::Probability;
    e.probabilities_ = coefficients;
    e.correlators_ = to_correlator_basis(coefficients);
    return e;
}

std::string BellExpression::correlator_text() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t t = 0; t < kCorrelatorTerms; ++t) {
        const Rational& c = correlators_[t];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (!first) out << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) out << "-";
        first = false;
        const bool unit = t == 0;
        if (mag != 1 || unit) out << to_string(mag);
        if (!unit) out << "<" << term_label(t) << ">";
    }
    if (first) out << "0";
    return out.str();
}

ProbabilityCoefficients event_coefficients(std::string_view event) {
    const auto bar = event.find('|');
    const std::string_view body = event.substr(0, bar);
    Triple fixed{-1, -1, -1};
    if (bar != std::string_view::npos) {
        const std::size_t cond = parse_term_label(event.substr(bar + 1));
        fixed = term_of(cond);
    }
    const Triple term = term_of(parse_term_label(body));
    for (std::size_t k = 0; k < 3; ++k) {
        if (term[k] >= 0 && fixed[k] >= 0) throw FormatError("event party both measured and conditioned: " + std::string(event));
    }
    int absent = 0;
    for (std::size_t k = 0; k < 3; ++k) absent += term[k] < 0 && fixed[k] < 0;
    const Rational weight(1, 1 << absent);
    ProbabilityCoefficients p;
    for (auto& v : p) v = 0;
    for (std::size_t e = 0; e < kEntries; ++e) {
        const Triple in = inputs_of(e), out = outcomes_of(e);
        bool hit = true;
        for (std::size_t k = 0; k < 3; ++k) {
            if (term[k] >= 0 && (in[k] != term[k] || out[k] != 0)) hit = false;
            if (fixed[k] >= 0 && in[k] != fixed[k]) hit = false;
        }
        if (hit) p[e] += weight;
    }
    return p;
}

ProbabilityCoefficients probability_combination(const std::map<std::string, Rational>& events) {
    ProbabilityCoefficients p;
    for (auto& v : p) v = 0;
    for (const auto& [label, coefficient] : events) {
        const auto ev = event_coefficients(label);
        for (std::size_t e = 0; e < kEntries; ++e) p[e] += coefficient * ev[e];
    }
    return p;
}

BellExpression eq11_expression() {
    auto e = BellExpression::from_probabilities(
        probability_combination({{"A1B1", -2}, {"B1C1", -2}, {"A1C1", -2},
                                 {"A0B0C1", -1}, {"A0B1C0", -1}, {"A1B0C0", -1},
                                 {"A1B1C0", 2}, {"A1B0C1", 2}, {"A0B1C1", 2}, {"A1B1C1", 2}}),
        "I");
    e.bounds["ns2"] = {Rational(0), 0.0, "derived"};
    e.bounds["t2"] = {Rational(0), 0.0, "derived"};
    return e;
}

BellExpression i_a_before_b_expression() {
    return BellExpression::from_probabilities(
        probability_combination({{"A1B1", -1}, {"B1C1|A0", -1}, {"A1C1", -1},
                                 {"A0B0C1", Rational(-1, 2)}, {"A1B0C0", -1}, {"A1B1C0", 1},
                                 {"A1B0C1", 1}, {"A0B1C1", 1}, {"A1B1C1", 1}}),
        "I_{A<B}");
}

BellExpression i_b_before_a_expression() {
    return BellExpression::from_probabilities(
        probability_combination({{"A1B1", -1}, {"A1C1|B0", -1}, {"B1C1", -1},
                                 {"A0B0C1", Rational(-1, 2)}, {"A0B1C0", -1}, {"A1B1C0", 1},
                                 {"A0B1C1", 1}, {"A1B0C1", 1}, {"A1B1C1", 1}}),
        "I_{B<A}");
}

BellExpression oldineq_expression() {
    CorrelatorCoefficients c;
    for (auto& v : c) v = 0;
    c[parse_term_label("A0B0")] = 1;
    c[parse_term_label("A0C0")] = 1;
    c[parse_term_label("B0C1")] = 1;
    c[parse_term_label("A1B1C0")] = -1;
    c[parse_term_label("A1B1C1")] = 1;
    auto e = BellExpression::from_correlators(c, "oldineq");
    e.bounds["t2"] = {Rational(3), 3.0, "derived"};
    return e;
}

}  // namespace trinl
