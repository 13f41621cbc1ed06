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
#include <optional>
#include <string>
#include <vector>

#include "trinl/expression.hpp"
#include "trinl/lp.hpp"
#include "trinl/vertices.hpp"

namespace trinl {

enum class LocalityClass { Local, NS2, T2, K2, S2, NS };

inline constexpr std::array<LocalityClass, 6> kAllClasses{LocalityClass::Local, LocalityClass::NS2, LocalityClass::T2,
                                                          LocalityClass::K2,    LocalityClass::S2,  LocalityClass::NS};

std::string to_string(LocalityClass cls);
/// Accepts "local", "ns2", "t2", "k2", "s2", "ns" (case-insensitive).
LocalityClass parse_class(std::string_view text);

/// NS2 may be decided by the 160-point hull or by the ordered-decomposition
/// system with the extra bipartite equalities.
enum class Formulation { Default, NS2Constraints };

/// Identifies one weight variable of a class system.
struct WeightKey {
    std::optional<Bipartition> pair;
    std::optional<Direction> direction;  // T2/K2 families: which ordering decomposition
    int isolated = -1;                   // strategy of the third party (lambda) where it indexes a family
    std::string label;
};

/// Equality system over weight columns. Rows: the 64 behavior rows, then
/// class-internal rows (right-hand side 0), then one mass row.
struct ClassSystem {
    LocalityClass cls = LocalityClass::Local;
    Formulation formulation = Formulation::Default;
    std::vector<WeightKey> keys;
    /// Contribution of each column to the behavior (zero for second-ordering columns).
    std::vector<Behavior> points;
    /// The strategy behind each column (equal to `points` except for second-ordering columns).
    std::vector<Behavior> strategy_points;
    /// Sparse internal-row entries per column (row numbers relative to the internal block).
    std::vector<std::vector<std::pair<std::size_t, Rational>>> internal;
    std::vector<int> column_block;  // independent blocks for maximization (bipartition), 0 for single-block classes
    std::vector<int> internal_block;
    std::vector<bool> in_mass;
    std::size_t internal_rows = 0;
    int blocks = 1;
    bool hull = false;  // points are the class generators

    std::size_t columns() const { return keys.size(); }
    std::size_t mass_row() const { return kEntries + internal_rows; }
};

const ClassSystem& class_system(LocalityClass cls, Formulation formulation = Formulation::Default);

/// Membership LP for b: behavior rows = b.
template <typename T>
LpProblem<T> membership_problem(const ClassSystem& system, const BasicBehavior<T>& b);

template <typename T>
struct DecompositionCertificate {
    LocalityClass cls = LocalityClass::Local;
    struct Weight {
        std::size_t column;
        WeightKey key;
        T weight;
    };
    std::vector<Weight> weights;  // nonzero weights only
    /// Hybrid terms P^{AB/C}, P^{AC/B}, P^{BC/A}, as reconstructed by each ordering (T2/K2 and the NS2 constraint form).
    std::array<std::optional<BasicBehavior<T>>, 3> hybrid_first;
    std::array<std::optional<BasicBehavior<T>>, 3> hybrid_second;
    BasicBehavior<T> reconstruction;
};

template <typename T>
struct SeparatingFunctional {
    std::array<T, kEntries> coefficients{};
    T offset{};  // maximum of the functional over the class
    T gap{};     // value on the queried behavior minus offset
};

template <typename T>
struct Classification {
    LocalityClass cls = LocalityClass::Local;
    bool member = false;
    std::optional<DecompositionCertificate<T>> decomposition;
    std::optional<SeparatingFunctional<T>> functional;
};

template <typename T>
Classification<T> classify(const BasicBehavior<T>& b, LocalityClass cls, Formulation formulation = Formulation::Default);

/// Empty string when the certificate checks out against b, else the reason.
template <typename T>
std::string verify_certificate(const BasicBehavior<T>& b, const Classification<T>& result);

template <typename T>
struct MaximizeResult {
    T value{};
    /// Maximizer: a generator point (hull scans) or the LP reconstruction.
    BasicBehavior<T> maximizer;
    std::string witness;  // generator label or block description
};

/// Maximum of sum_e f_e P_e over the class. S2 is taken over its no-signalling
/// part, where correlator expressions are unambiguous; see hull_maximum for the raw hull.
template <typename T>
MaximizeResult<T> class_maximum(const std::array<T, kEntries>& f, LocalityClass cls,
                                Formulation formulation = Formulation::Default);

/// Maximum over the class generators (LOCAL, NS2, S2 hulls only).
template <typename T>
MaximizeResult<T> hull_maximum(const std::array<T, kEntries>& f, LocalityClass cls);

/// Same maximum via the class LP (hull classes: LP over generator weights, no NS restriction).
template <typename T>
MaximizeResult<T> lp_maximum(const std::array<T, kEntries>& f, LocalityClass cls,
                             Formulation formulation = Formulation::Default);

MaximizeResult<Rational> maximize(const BellExpression& expr, LocalityClass cls);
MaximizeResult<double> maximize_double(const BellExpression& expr, LocalityClass cls);

template <typename T>
struct ThresholdResult {
    T p{};       // min(extent, 1)
    T extent{};  // largest q >= 0 with q*b + (1-q)*uniform in the class; may exceed 1
    /// Supporting the class at the extent point; gap measured at the target behavior itself.
    SeparatingFunctional<T> functional;
    std::optional<DecompositionCertificate<T>> boundary;
};

/// Largest p <= 1 with p*b + (1-p)*uniform in the class. The LP is solved without
/// the p <= 1 cap so that the returned functional always supports the class.
template <typename T>
ThresholdResult<T> threshold(const BasicBehavior<T>& b_target, LocalityClass cls);

/// True when the 160 NS2 generators are each outside the hull of the others.
struct ExtremalityReport {
    std::size_t points = 0;
    std::size_t extremal = 0;
    std::vector<std::string> non_extremal;
};
ExtremalityReport ns2_extremality();

}  // namespace trinl
