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


#include "trinl/fixtures.hpp"

#include <cmath>
#include <numbers>

#include "trinl/behavior_io.hpp"
#include "trinl/errors.hpp"

namespace trinl {

template <typename T>
void HiddenBitModel<T>::validate() const {
    T total(0);
    for (const auto& a : assignments) {
        if (a.bits.size() != variables.size()) throw InvariantViolation(name + ": assignment has the wrong number of bits");
        if (!Arithmetic<T>::nonnegative(a.weight)) throw InvariantViolation(name + ": negative weight");
        total += a.weight;
    }
    if (!Arithmetic<T>::equal(total, T(1))) throw InvariantViolation(name + ": weights do not sum to 1");
    for (const auto& o : orderings) {
        for (const auto& a : assignments) {
            for (std::size_t in = 0; in < 8; ++in) {
                for (int v : o.rule(a.bits, triple_of(in))) {
                    if (v != 0 && v != 1) throw InvariantViolation(name + ": rule " + o.name + " returned a non-bit");
                }
            }
        }
    }
}

template <typename T>
const typename HiddenBitModel<T>::Ordering& HiddenBitModel<T>::ordering(const std::string& which) const {
    for (const auto& o : orderings) {
        if (o.name == which) return o;
    }
    throw FormatError(name + " has no ordering '" + which + "'");
}

template <typename T>
BasicBehavior<T> HiddenBitModel<T>::simulate_assignment(const std::string& which, std::size_t assignment) const {
    const Rule& rule = ordering(which).rule;
    BasicBehavior<T> b;
    for (std::size_t in = 0; in < 8; ++in) {
        const Triple inputs = triple_of(in);
        b.at(inputs, rule(assignments.at(assignment).bits, inputs)) = T(1);
    }
    return b;
}

template <typename T>
BasicBehavior<T> HiddenBitModel<T>::simulate(const std::string& which) const {
    validate();
    const Rule& rule = ordering(which).rule;
    BasicBehavior<T> b;
    for (const auto& a : assignments) {
        for (std::size_t in = 0; in < 8; ++in) {
            const Triple inputs = triple_of(in);
            b.at(inputs, rule(a.bits, inputs)) += a.weight;
        }
    }
    return b;
}

template struct HiddenBitModel<Rational>;
template struct HiddenBitModel<double>;

Behavior corr1_target() {
    // (coefficient triple over inputs, required input triple (-1 = any), parity)
    struct Constraint {
        Triple input;
        int parity;
    };
    const Constraint constraints[] = {
        {{0, 1, -1}, 0}, {{1, -1, 0}, 0}, {{-1, 0, 1}, 0}, {{0, 0, 0}, 0}, {{1, 1, 1}, 1},
    };
    Behavior b;
    for (std::size_t in = 0; in < 8; ++in) {
        const Triple inputs = triple_of(in);
        std::vector<Triple> allowed;
        for (std::size_t out = 0; out < 8; ++out) {
            const Triple o = triple_of(out);
            bool ok = true;
            for (const auto& c : constraints) {
                int parity = 0;
                bool applies = true;
                for (std::size_t k = 0; k < 3; ++k) {
                    if (c.input[k] < 0) continue;
                    if (c.input[k] != inputs[k]) applies = false;
                    parity ^= o[k];
                }
                if (applies && parity != c.parity) ok = false;
            }
            if (ok) allowed.push_back(o);
        }
        for (const auto& o : allowed) b.at(inputs, o) = Rational(1, static_cast<long>(allowed.size()));
    }
    return b;
}

HiddenBitModel<Rational> corr1_t2_model() {
    HiddenBitModel<Rational> m;
    m.name = "corr1 hidden-bit model";
    m.variables = {"l0", "l1"};
    for (int l0 = 0; l0 < 2; ++l0)
        for (int l1 = 0; l1 < 2; ++l1) m.assignments.push_back({{l0, l1}, Rational(1, 4)});
    m.orderings.push_back({"B<C", [](const std::vector<int>& l, const Triple& in) -> Triple {
                               const int a = in[0] == 0 ? l[0] : l[1];
                               const int b = in[1] == 0 ? l[0] ^ l[1] : l[0];
                               const int c = in[2] == 0 ? l[1] : l[0] ^ l[1] ^ in[1];
                               return {a, b, c};
                           }});
    m.orderings.push_back({"C<B", [](const std::vector<int>& l, const Triple& in) -> Triple {
                               const int a = in[0] == 0 ? l[0] : l[1];
                               const int b = in[1] == 0 ? l[0] ^ l[1] ^ in[2] : l[0];
                               const int c = in[2] == 0 ? l[1] : l[0] ^ l[1] ^ 1;
                               return {a, b, c};
                           }});
    return m;
}

std::vector<std::function<Triple(const Triple&)>> s2_strategies() {
    return {
        [](const Triple& in) -> Triple { return {in[0] + in[2] - in[0] * in[2], 0, 1}; },
        [](const Triple& in) -> Triple { return {1 - in[2] + in[0] * in[2], in[1], 1}; },
        [](const Triple& in) -> Triple { return {0, in[1] - in[1] * in[2], 1 - in[2]}; },
        [](const Triple& in) -> Triple { return {1 - in[0], 1 - in[1] + in[1] * in[2], in[2]}; },
    };
}

Behavior s2_mixture() {
    Behavior b;
    const auto strategies = s2_strategies();
    for (const auto& s : strategies) {
        for (std::size_t in = 0; in < 8; ++in) {
            const Triple inputs = triple_of(in);
            b.at(inputs, s(inputs)) += Rational(1, static_cast<long>(strategies.size()));
        }
    }
    return b;
}

Rational outcome_expectation(const Behavior& b, const std::vector<int>& parties, const Triple& inputs) {
    Rational e(0);
    for (std::size_t out = 0; out < 8; ++out) {
        const Triple o = triple_of(out);
        int product = 1;
        for (int k : parties) product *= o[static_cast<std::size_t>(k)];
        if (product) e += b(inputs, o);
    }
    return e;
}

RealBehavior ghz_oldineq_behavior() { return born_behavior({ghz_state(), ghz_oldineq_settings()}); }

HiddenBitModel<double> ghz_svetlichny_local_model() {
    HiddenBitModel<double> m;
    m.name = "GHZ Svetlichny-local model";
    m.variables = {"c", "r0", "r1"};
    const double c2 = std::pow(std::cos(std::numbers::pi / 8), 2);
    for (int c = 0; c < 2; ++c)
        for (int r0 = 0; r0 < 2; ++r0)
            for (int r1 = 0; r1 < 2; ++r1) m.assignments.push_back({{c, r0, r1}, 0.5 * (r0 == 0 ? c2 : 1.0 - c2) * 0.5});
    // Charles's setting 0 is (sigma_z - sigma_x)/sqrt 2, so the phase bit is z + 1.
    m.orderings.push_back({"C->B", [](const std::vector<int>& h, const Triple& in) -> Triple {
                               const int c = h[0], r0 = h[1], r1 = h[2];
                               const int x = in[0], y = in[1], z = in[2] ^ 1;
                               const int rx = x == 0 ? r0 : r1;
                               if (c == 0) return {rx, r0 ^ (y & (r1 ^ z)), 0};
                               return {rx ^ x ^ 1, r0 ^ 1 ^ (y & (r1 ^ z)), 1};
                           }});
    return m;
}

std::vector<std::filesystem::path> export_fixtures(const std::filesystem::path& directory) {
    std::filesystem::create_directories(directory);
    std::vector<std::filesystem::path> written{directory / "corr1.json", directory / "s2_mixture.json",
                                               directory / "ghz_oldineq.json", directory / "ghz_oldineq_angles.txt"};
    write_behavior_file(written[0], corr1_target());
    write_behavior_file(written[1], s2_mixture());
    write_behavior_file(written[2], ghz_oldineq_behavior());
    write_settings_file(written[3], ghz_oldineq_settings());
    return written;
}

}  // namespace trinl
