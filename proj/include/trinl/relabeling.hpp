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
#include <cstddef>
#include <gmpxx.h>

#include "trinl/expression.hpp"

namespace trinl {

inline constexpr std::size_t kGroupOrder = 3072;

/// Party permutation, per-party input swap, per-party-per-input output flip.
/// Acts on events as (p, x, a) -> (perm[p], x ^ swap[p], a ^ flip[p][x]).
struct Relabeling {
    std::array<int, 3> perm{0, 1, 2};
    std::array<int, 3> swap{0, 0, 0};
    std::array<std::array<int, 2>, 3> flip{};

    static Relabeling from_index(std::size_t index);
    std::size_t index() const;
    static Relabeling identity() { return {}; }

    /// `after` applied to the result of `*this`.
    Relabeling then(const Relabeling& after) const;
    Relabeling inverse() const;

    std::size_t map_entry(std::size_t entry) const;
    /// Image term index and the sign picked up by the correlator.
    std::pair<std::size_t, int> map_term(std::size_t term) const;

    template <typename T>
    BasicBehavior<T> apply(const BasicBehavior<T>& b) const {
        BasicBehavior<T> out;
        for (std::size_t e = 0; e < kEntries; ++e) out[map_entry(e)] = b[e];
        return out;
    }
    ProbabilityCoefficients apply(const ProbabilityCoefficients& p) const;
    CorrelatorCoefficients apply(const CorrelatorCoefficients& c) const;
    BellExpression apply(const BellExpression& expr) const;

    friend bool operator==(const Relabeling&, const Relabeling&) = default;
};

/// Term order used for canonical comparison: degree, then parties, then inputs.
const std::array<std::size_t, kCorrelatorTerms>& canonical_term_order();

using IntegerVector = std::array<mpz_class, kCorrelatorTerms>;

struct CanonicalForm {
    /// Inequality "sum c_t <t> <= bound" stored as c with unit term c_0 - bound,
    /// scaled by a positive factor to coprime integers, in canonical term order.
    IntegerVector coefficients;
    std::size_t stabilizer = 0;
    std::size_t orbit = 0;
    Relabeling witness;  // maps the input to the representative

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.coefficients == b.coefficients; }
};

CanonicalForm canonicalize(const CorrelatorCoefficients& coefficients, const Rational& bound);
CanonicalForm canonicalize(const BellExpression& expr, const Rational& bound);

/// Positive rescaling of a rational vector to coprime integers (zero vector stays zero).
IntegerVector coprime_integers(const CorrelatorCoefficients& v);

std::string to_string(const CanonicalForm& form);

}  // namespace trinl
