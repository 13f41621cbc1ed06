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
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "trinl/errors.hpp"
#include "trinl/rational.hpp"
#include "trinl/scenario.hpp"

namespace trinl {

inline std::string format_scalar(const Rational& v) { return to_string(v); }
inline std::string format_scalar(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

/// Conditional distribution P(abc|XYZ) of the (3,2,2) scenario.
template <typename T>
class BasicBehavior {
   public:
    using Scalar = T;
    using Table = std::array<T, kEntries>;

    BasicBehavior() { p_.fill(T(0)); }
    explicit BasicBehavior(const Table& p) : p_(p) {}

    static BasicBehavior uniform() {
        BasicBehavior b;
        b.p_.fill(Arithmetic<T>::from_ratio(1, 8));
        return b;
    }

    const T& operator()(int x, int y, int z, int a, int b, int c) const { return p_[entry_index(x, y, z, a, b, c)]; }
    const T& operator()(const Triple& inputs, const Triple& outcomes) const { return p_[entry_index(inputs, outcomes)]; }
    T& at(const Triple& inputs, const Triple& outcomes) { return p_[entry_index(inputs, outcomes)]; }

    const T& operator[](std::size_t entry) const { return p_[entry]; }
    T& operator[](std::size_t entry) { return p_[entry]; }

    const Table& table() const { return p_; }

    friend bool operator==(const BasicBehavior& lhs, const BasicBehavior& rhs) { return lhs.p_ == rhs.p_; }

   private:
    Table p_;
};

using Behavior = BasicBehavior<Rational>;
using RealBehavior = BasicBehavior<double>;

RealBehavior to_real(const Behavior& b);

/// Exact snapping of every entry; the result is not renormalized.
Behavior snap_behavior(const RealBehavior& b, unsigned long max_denominator);

template <typename T>
bool approx_equal(const BasicBehavior<T>& lhs, const BasicBehavior<T>& rhs) {
    for (std::size_t e = 0; e < kEntries; ++e) {
        if (!Arithmetic<T>::equal(lhs[e], rhs[e])) return false;
    }
    return true;
}

/// True iff all entries are nonnegative and every input triple is normalized.
template <typename T>
bool normalize_check(const BasicBehavior<T>& b) {
    for (std::size_t e = 0; e < kEntries; ++e) {
        if (!Arithmetic<T>::nonnegative(b[e])) return false;
    }
    for (std::size_t in = 0; in < kInputTriples; ++in) {
        T sum(0);
        for (std::size_t out = 0; out < 8; ++out) sum += b[in * 8 + out];
        if (!Arithmetic<T>::equal(sum, T(1))) return false;
    }
    return true;
}

/// P(o|inputs) for one party; `inputs` holds the inputs of all three parties.
template <typename T>
std::array<T, 2> marginal(const BasicBehavior<T>& b, Party party, const Triple& inputs) {
    const int k = index_of(party);
    if (k < 0 || k >= kParties) throw InvariantViolation("invalid party id");
    for (int v : inputs) {
        if (v != 0 && v != 1) throw InvariantViolation("inputs must be 0 or 1");
    }
    std::array<T, 2> result{T(0), T(0)};
    for (int out = 0; out < 8; ++out) {
        Triple o = triple_of(static_cast<std::size_t>(out));
        result[static_cast<std::size_t>(o[k])] += b(inputs, o);
    }
    return result;
}

/// Two-party marginal of a bipartition pair, with the traced party's input fixed.
template <typename T>
struct BipartiteMarginal {
    Bipartition pair;
    int traced_input = 0;
    /// q[((x1 * 2 + x2) * 2 + o1) * 2 + o2] for the pair's (first, second) parties.
    std::array<T, 16> q;

    const T& operator()(int x1, int x2, int o1, int o2) const { return q[static_cast<std::size_t>(((x1 * 2 + x2) * 2 + o1) * 2 + o2)]; }
};

template <typename T>
BipartiteMarginal<T> bipartite_marginal(const BasicBehavior<T>& b, Bipartition pair, int traced_input) {
    auto parties = parties_of(pair);
    const int f = index_of(parties.first), s = index_of(parties.second), t = index_of(parties.isolated);
    BipartiteMarginal<T> m{pair, traced_input, {}};
    m.q.fill(T(0));
    for (std::size_t e = 0; e < kEntries; ++e) {
        Triple in = inputs_of(e), out = outcomes_of(e);
        if (in[static_cast<std::size_t>(t)] != traced_input) continue;
        std::size_t idx = static_cast<std::size_t>(((in[f] * 2 + in[s]) * 2 + out[f]) * 2 + out[s]);
        m.q[idx] += b[e];
    }
    return m;
}

/// A homogeneous linear equality over the 64 table entries.
struct LinearEquality {
    std::array<int, kEntries> coefficients{};
    std::string description;
};

/// Every marginal-independence equality (single- and two-party marginals,
/// plus per-input normalization differences); heavily redundant.
const std::vector<LinearEquality>& no_signalling_equalities();

/// A linearly independent subset spanning the same constraints (rank 37).
const std::vector<LinearEquality>& independent_no_signalling_equalities();

template <typename T>
struct NoSignallingReport {
    bool no_signalling = true;
    std::vector<std::string> violations;
};

template <typename T>
NoSignallingReport<T> no_signalling_report(const BasicBehavior<T>& b) {
    NoSignallingReport<T> report;
    for (const auto& eq : no_signalling_equalities()) {
        T value(0);
        for (std::size_t e = 0; e < kEntries; ++e) {
            if (eq.coefficients[e] != 0) value += T(eq.coefficients[e]) * b[e];
        }
        if (!Arithmetic<T>::is_zero(value)) {
            report.no_signalling = false;
            report.violations.push_back(eq.description + " (difference " + format_scalar(value) + ")");
        }
    }
    return report;
}

template <typename T>
bool is_no_signalling(const BasicBehavior<T>& b) {
    return no_signalling_report(b).no_signalling;
}

// Correlator terms are indexed by a triple holding, per party, -1 when the
// party is absent and its input otherwise. Index 0 is the unit term.
inline constexpr std::size_t kCorrelatorTerms = 27;

constexpr std::size_t term_index(const Triple& t) {
    return static_cast<std::size_t>((t[0] + 1) * 9 + (t[1] + 1) * 3 + (t[2] + 1));
}

constexpr Triple term_of(std::size_t index) {
    return {static_cast<int>(index / 9) - 1, static_cast<int>(index / 3 % 3) - 1, static_cast<int>(index % 3) - 1};
}

constexpr int term_degree(std::size_t index) {
    Triple t = term_of(index);
    return (t[0] >= 0) + (t[1] >= 0) + (t[2] >= 0);
}

/// "1", "A0", "B1C0", "A0B1C1", ...
std::string term_label(std::size_t index);
std::size_t parse_term_label(std::string_view label);

/// Full-body correlators <A_x>, <A_xB_y>, <A_xB_yC_z>, ... with the unit term first.
template <typename T>
struct CorrelatorForm {
    std::array<T, kCorrelatorTerms> values;

    const T& operator[](std::size_t term) const { return values[term]; }
    T& operator[](std::size_t term) { return values[term]; }
    friend bool operator==(const CorrelatorForm& lhs, const CorrelatorForm& rhs) { return lhs.values == rhs.values; }
};

/// (-1)^(sum of outcomes of the parties present in `term`).
constexpr int term_sign(std::size_t term, const Triple& outcomes) {
    Triple t = term_of(term);
    int parity = 0;
    for (int k = 0; k < 3; ++k) {
        if (t[static_cast<std::size_t>(k)] >= 0) parity ^= outcomes[static_cast<std::size_t>(k)];
    }
    return parity ? -1 : 1;
}

/// Correlators of a no-signalling behavior. Absent parties are read at input 0.
template <typename T>
CorrelatorForm<T> to_correlators(const BasicBehavior<T>& b) {
    auto report = no_signalling_report(b);
    if (!report.no_signalling) {
        throw SignallingInput("correlator form needs a no-signalling behavior: " + report.violations.front());
    }
    CorrelatorForm<T> c;
    for (std::size_t t = 0; t < kCorrelatorTerms; ++t) {
        Triple term = term_of(t);
        Triple in{term[0] < 0 ? 0 : term[0], term[1] < 0 ? 0 : term[1], term[2] < 0 ? 0 : term[2]};
        T sum(0);
        for (std::size_t out = 0; out < 8; ++out) {
            Triple o = triple_of(out);
            if (term_sign(t, o) > 0) {
                sum += b(in, o);
            } else {
                sum -= b(in, o);
            }
        }
        c[t] = sum;
    }
    return c;
}

template <typename T>
BasicBehavior<T> from_correlators(const CorrelatorForm<T>& c) {
    if (!Arithmetic<T>::equal(c[0], T(1))) throw InvalidCorrelators("unit correlator must equal 1");
    BasicBehavior<T> b;
    for (std::size_t e = 0; e < kEntries; ++e) {
        Triple in = inputs_of(e), out = outcomes_of(e);
        T sum(0);
        for (std::size_t t = 0; t < kCorrelatorTerms; ++t) {
            Triple term = term_of(t);
            bool matches = true;
            for (std::size_t k = 0; k < 3; ++k) {
                if (term[k] >= 0 && term[k] != in[k]) matches = false;
            }
            if (!matches) continue;
            if (term_sign(t, out) > 0) {
                sum += c[t];
            } else {
                sum -= c[t];
            }
        }
        b[e] = sum / T(8);
        if (!Arithmetic<T>::nonnegative(b[e])) {
            throw InvalidCorrelators("correlators give negative probability " + format_scalar(b[e]) + " at entry " + std::to_string(e));
        }
    }
    return b;
}

/// Entrywise p*b1 + (1-p)*b2.
template <typename T>
BasicBehavior<T> mix(const BasicBehavior<T>& b1, const BasicBehavior<T>& b2, const T& p) {
    if (!(p >= T(0) && p <= T(1))) throw InvariantViolation("mixing weight outside [0,1]: " + format_scalar(p));
    BasicBehavior<T> out;
    T q = T(1) - p;
    for (std::size_t e = 0; e < kEntries; ++e) out[e] = p * b1[e] + q * b2[e];
    return out;
}

}  // namespace trinl
