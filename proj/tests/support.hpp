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

// Seeded behavior generators shared by the unit tests and the acceptance binary.

#pragma once

#include <random>

#include "trinl/behavior.hpp"
#include "trinl/errors.hpp"
#include "trinl/quantum.hpp"
#include "trinl/seesaw.hpp"
#include "trinl/vertices.hpp"

namespace trinl::testing {

// Mixture of a few NS2 generators, then a small rational nudge on some correlators.
inline Behavior random_ns_behavior(std::mt19937_64& rng, bool perturb = true) {
    const auto& gens = ns2_generators();
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> weight(1, 9);
    std::array<Rational, kCorrelatorTerms> c{};
    Rational total(0);
    std::vector<std::pair<std::size_t, int>> parts;
    for (int k = 0; k < 4; ++k) {
        parts.emplace_back(pick(rng), weight(rng));
        total += parts.back().second;
    }
    Behavior b;
    for (const auto& [g, w] : parts) {
        for (std::size_t e = 0; e < kEntries; ++e) b[e] += Rational(w) / total * gens[g].point[e];
    }
    if (!perturb) return b;
    CorrelatorForm<Rational> corr = to_correlators(b);
    std::uniform_int_distribution<int> nudge(-2, 2);
    std::uniform_int_distribution<std::size_t> term(1, kCorrelatorTerms - 1);
    CorrelatorForm<Rational> moved = corr;
    for (int k = 0; k < 3; ++k) moved[term(rng)] += make_rational(nudge(rng), 64);
    try {
        return from_correlators(moved);
    } catch (const InvalidCorrelators&) {
        return b;
    }
}

inline QuantumState random_pure_state(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Vector8c psi;
    for (int i = 0; i < 8; ++i) psi(i) = Complex(g(rng), g(rng));
    psi.normalize();
    return QuantumState::from_pure(psi, "random");
}

// Quantum correlators under white noise, snapped to a rational grid and pulled towards uniform until valid.
inline Behavior random_noisy_quantum_behavior(std::mt19937_64& rng) {
    const QuantumState state = random_pure_state(rng);
    const Settings settings = random_settings(rng);
    std::uniform_real_distribution<double> visibility(0.2, 1.0);
    const double p = visibility(rng);
    const CorrelatorForm<double> q = quantum_correlators(correlation_tensor(state), settings);
    CorrelatorForm<Rational> c;
    c[0] = 1;
    for (std::size_t t = 1; t < kCorrelatorTerms; ++t) c[t] = snap(p * q[t], 32);
    for (;;) {
        try {
            return from_correlators(c);
        } catch (const InvalidCorrelators&) {
            for (std::size_t t = 1; t < kCorrelatorTerms; ++t) c[t] *= make_rational(3, 4);
        }
    }
}

}  // namespace trinl::testing
