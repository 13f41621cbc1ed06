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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "trinl/behavior.hpp"

namespace trinl {

using CorrelatorCoefficients = std::array<Rational, kCorrelatorTerms>;
using ProbabilityCoefficients = std::array<Rational, kEntries>;

enum class Basis { Correlator, Probability };

struct DeclaredBound {
    std::optional<Rational> exact;
    double numeric = 0.0;
    std::string provenance;  // "catalog", "quantum-numeric", ...
};

/// A linear functional on behaviors. Both bases are stored; the native one is
/// authoritative and the other is derived from it.
class BellExpression {
   public:
    BellExpression() = default;
    static BellExpression from_correlators(const CorrelatorCoefficients& coefficients, std::string name = {});
    static BellExpression from_probabilities(const ProbabilityCoefficients& coefficients, std::string name = {});

    Basis native_basis() const { return native_; }
    const CorrelatorCoefficients& correlators() const { return correlators_; }
    const ProbabilityCoefficients& probabilities() const { return probabilities_; }

    std::string name;
    std::map<std::string, DeclaredBound> bounds;  // keys: ns2, t2, s2, quantum, quantum_upper

    /// Human-readable correlator form, e.g. "-<A1> + 2<A0B1C1>".
    std::string correlator_text() const;

   private:
    Basis native_ = Basis::Correlator;
    CorrelatorCoefficients correlators_{};
    ProbabilityCoefficients probabilities_{};
};

/// Coefficients on P(abc|XYZ) reproducing the correlator functional, marginals
/// averaged uniformly over the inputs of absent parties.
ProbabilityCoefficients to_probability_basis(const CorrelatorCoefficients& c);
/// Projection onto correlators; exact on no-signalling behaviors.
CorrelatorCoefficients to_correlator_basis(const ProbabilityCoefficients& p);

/// Coefficients of a probability event such as "A1B1" (P(a=0,b=0|X=1,Y=1),
/// averaged over absent inputs) or "B1C1|A0" (the same event with X fixed to 0).
ProbabilityCoefficients event_coefficients(std::string_view event);

/// Sum of coefficient * event over the listed events.
ProbabilityCoefficients probability_combination(const std::map<std::string, Rational>& events);

template <typename T>
T evaluate(const BellExpression& expr, const BasicBehavior<T>& b, Basis basis = Basis::Probability) {
    T value(0);
    if (basis == Basis::Probability) {
        for (std::size_t e = 0; e < kEntries; ++e) {
            if (sgn(expr.probabilities()[e]) != 0) value += T(to_scalar<T>(expr.probabilities()[e])) * b[e];
        }
        return value;
    }
    const CorrelatorForm<T> c = to_correlators(b);
    for (std::size_t t = 0; t < kCorrelatorTerms; ++t) {
        if (sgn(expr.correlators()[t]) != 0) value += T(to_scalar<T>(expr.correlators()[t])) * c[t];
    }
    return value;
}

template <typename T>
T evaluate(const ProbabilityCoefficients& coefficients, const BasicBehavior<T>& b) {
    T value(0);
    for (std::size_t e = 0; e < kEntries; ++e) {
        if (sgn(coefficients[e]) != 0) value += T(to_scalar<T>(coefficients[e])) * b[e];
    }
    return value;
}

// Named expressions.
BellExpression eq11_expression();        // I, bound 0 on NS2 and T2
BellExpression i_a_before_b_expression();  // I_{A<B}
BellExpression i_b_before_a_expression();  // I_{B<A}
BellExpression oldineq_expression();     // <A0B0>+<A0C0>+<B0C1>-<A1B1C0>+<A1B1C1>, bound 3 on T2

template <typename T>
struct SplitValues {
    T total;
    T a_before_b;
    T b_before_a;
};

/// (I, I_{A<B}, I_{B<A}); throws SignallingInput on signalling b and
/// InvariantViolation if the split identity fails.
template <typename T>
SplitValues<T> split_check(const BasicBehavior<T>& b) {
    auto report = no_signalling_report(b);
    if (!report.no_signalling) throw SignallingInput("split identity needs a no-signalling behavior: " + report.violations.front());
    static const BellExpression total = eq11_expression(), ab = i_a_before_b_expression(), ba = i_b_before_a_expression();
    SplitValues<T> s{evaluate(total, b), evaluate(ab, b), evaluate(ba, b)};
    if (!Arithmetic<T>::equal(s.total, T(s.a_before_b + s.b_before_a))) {
        throw InvariantViolation("I differs from I_{A<B} + I_{B<A}: " + format_scalar(s.total) + " vs " +
                                 format_scalar(T(s.a_before_b + s.b_before_a)));
    }
    return s;
}

}  // namespace trinl
