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

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "trinl/behavior.hpp"
#include "trinl/quantum.hpp"

namespace trinl {

/// Shared hidden bits with a distribution, and per-ordering deterministic
/// response rules (outcomes as functions of the hidden bits and all inputs).
template <typename T>
struct HiddenBitModel {
    using Rule = std::function<Triple(const std::vector<int>& hidden, const Triple& inputs)>;
    struct Assignment {
        std::vector<int> bits;
        T weight;
    };
    struct Ordering {
        std::string name;  // "B<C", ...
        Rule rule;
    };

    std::string name;
    std::vector<std::string> variables;
    std::vector<Assignment> assignments;
    std::vector<Ordering> orderings;

    bool ordering_dependent() const { return orderings.size() > 1; }
    /// Weights nonnegative and summing to one; every rule returns bits.
    void validate() const;
    const Ordering& ordering(const std::string& name) const;
    /// Deterministic behavior of one hidden assignment.
    BasicBehavior<T> simulate_assignment(const std::string& ordering, std::size_t assignment) const;
    BasicBehavior<T> simulate(const std::string& ordering) const;
};

/// Uniform over the outcome triples allowed by the parity constraints
/// a0+b1=0, a1+c0=0, b0+c1=0, a0+b0+c0=0, a1+b1+c1=1 that apply at each input.
Behavior corr1_target();
/// Hidden pair (l0, l1), orderings "B<C" and "C<B".
HiddenBitModel<Rational> corr1_t2_model();

/// The four signalling S2 strategies, deterministic, as functions of (X, Y, Z).
std::vector<std::function<Triple(const Triple&)>> s2_strategies();
/// Uniform mixture of s2_strategies().
Behavior s2_mixture();

/// Expectation of the product of the listed parties' 0/1 outcome variables.
Rational outcome_expectation(const Behavior& b, const std::vector<int>& parties, const Triple& inputs);

/// GHZ with ghz_oldineq_settings().
RealBehavior ghz_oldineq_behavior();
/// Hidden bits (c, r0, r1); Charles's outcome c is announced to Bob with his input.
HiddenBitModel<double> ghz_svetlichny_local_model();

/// Writes corr1.json, s2_mixture.json, ghz_oldineq.json and ghz_oldineq_angles.txt.
std::vector<std::filesystem::path> export_fixtures(const std::filesystem::path& directory);

}  // namespace trinl
