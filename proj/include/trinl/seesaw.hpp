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

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "trinl/expression.hpp"
#include "trinl/membership.hpp"
#include "trinl/quantum.hpp"

namespace trinl {

using RealCoefficients = std::array<double, kCorrelatorTerms>;

RealCoefficients real_correlators(const BellExpression& expr);
/// Correlator form of a probability-basis functional; agrees with it on
/// no-signalling behaviors.
RealCoefficients correlators_of_functional(const std::array<double, kEntries>& f);

double quantum_value(const RealCoefficients& c, const CorrelationTensor& t, const Settings& observables);

/// Independent Haar-uniform Bloch vectors.
Settings random_settings(std::mt19937_64& rng);
/// Generator for restart `index` under `seed`.
std::mt19937_64 task_rng(std::uint64_t seed, std::uint64_t index);

struct SeesawOptions {
    int restarts = 50;
    std::uint64_t seed = 0;
    /// Also replace the state by the top eigenvector of the Bell operator
    /// after every measurement sweep.
    bool optimize_state = false;
    int max_sweeps = 10000;
    double tolerance = 1e-10;  // relative improvement per sweep
    unsigned threads = 1;
    /// Used as the first restart instead of a random draw.
    std::optional<Settings> start;
};

struct SeesawResult {
    double value = 0.0;
    Settings observables;
    QuantumState state;
    int sweeps = 0;
    int restart = 0;
    /// False if any single update lowered the objective by more than rounding.
    bool monotone = true;
};

/// One ascent from `start`.
SeesawResult seesaw_run(const RealCoefficients& c, const QuantumState& state, const Settings& start,
                        const SeesawOptions& options = {});
SeesawResult seesaw_maximize(const RealCoefficients& c, const QuantumState& state, const SeesawOptions& options = {});
SeesawResult seesaw_maximize(const BellExpression& expr, const QuantumState& state, const SeesawOptions& options = {});

enum class StateFamily { GHZ, W };
StateFamily parse_state_family(std::string_view text);
QuantumState family_state(StateFamily family);

struct ThresholdOptions {
    int restarts = 10;
    std::uint64_t seed = 0;
    int max_rounds = 100;
    double tolerance = 1e-6;
    /// Random seesaw restarts tried on each functional besides the warm start.
    int seesaw_restarts = 4;
    unsigned threads = 1;
    /// Extra starting points: the seesaw optima of the catalog inequalities
    /// carrying a bound for this class, best bound/value ratios first.
    int catalog_seeds = 5;
    int catalog_seesaw_restarts = 5;
};

struct ThresholdSearch {
    double p = 1.0;
    Settings observables;
    SeparatingFunctional<double> functional;
    int rounds = 0;
    std::vector<double> history;  // extent after each round of the winning start
    std::string start;            // "random #k" or "family n"
};

/// Smallest visibility, over projective measurements, at which the noisy
/// state leaves the class.
ThresholdSearch optimize_threshold(const QuantumState& state, LocalityClass cls, const ThresholdOptions& options = {});
ThresholdSearch optimize_threshold(StateFamily family, LocalityClass cls, const ThresholdOptions& options = {});

/// Hyperspherical grid: lambda from four angles in [0, pi/2], phi in [0, pi],
/// `resolution` equally spaced values each, endpoints included.
std::vector<PureStateParams> state_grid(int resolution);

struct ScanOptions {
    int restarts = 10;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    double bound = 0.0;  // violation = best value - bound
};

struct ScanPoint {
    PureStateParams params;
    bool skipped = false;  // not genuinely tripartite entangled
    double best = 0.0;
    Settings observables;
};

struct ScanReport {
    std::vector<ScanPoint> points;
    std::size_t evaluated = 0;
    std::size_t skipped = 0;
    double bound = 0.0;
    double min_violation = 0.0;  // over evaluated points
    std::vector<std::size_t> non_violating;
};

ScanReport scan_pure_states(const BellExpression& expr, int resolution, const ScanOptions& options = {});
ScanReport scan_states(const BellExpression& expr, const std::vector<PureStateParams>& states, const ScanOptions& options = {});
/// One line per point, then a summary line.
std::string scan_report_text(const ScanReport& report);

}  // namespace trinl
