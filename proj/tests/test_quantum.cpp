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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "support.hpp"
#include "trinl/catalog.hpp"
#include "trinl/expression.hpp"
#include "trinl/membership.hpp"
#include "trinl/quantum.hpp"
#include "trinl/relabeling.hpp"
#include "trinl/seesaw.hpp"

namespace trinl {
namespace {

const double kOldTarget = 1.0 + 2.0 * std::sqrt(2.0);

Settings all_z() {
    Settings s;
    for (auto& o : s) o = Observable::sigma_z();
    return s;
}

TEST(State, RejectsInvalidDensities) {
    Matrix8c rho = ghz_state().density();
    Matrix8c skew = rho;
    skew(0, 1) += Complex(0.0, 0.1);
    EXPECT_THROW(QuantumState::from_density(skew), InvariantViolation);
    EXPECT_THROW(QuantumState::from_density(rho * 2.0), InvariantViolation);
    Matrix8c negative = Matrix8c::Zero();
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    EXPECT_THROW(QuantumState::from_density(negative), InvariantViolation);
    EXPECT_NO_THROW(QuantumState::from_density(rho));
}

TEST(State, PureParameters) {
    PureStateParams ghz;
    ghz.lambda = {1 / std::sqrt(2.0), 0, 0, 0, 1 / std::sqrt(2.0)};
    EXPECT_TRUE(ghz.genuinely_tripartite());
    EXPECT_NEAR((ghz.state().density() - ghz_state().density()).norm(), 0.0, 1e-12);
    PureStateParams product;
    EXPECT_FALSE(product.genuinely_tripartite());
    PureStateParams bad;
    bad.lambda = {1, 1, 0, 0, 0};
    EXPECT_THROW(bad.validate(), InvariantViolation);
}

TEST(Observable, ProjectorsResolveIdentity) {
    auto rng = task_rng(1, 0);
    for (const auto& o : random_settings(rng)) {
        EXPECT_NEAR(o.bloch().norm(), 1.0, 1e-12);
        EXPECT_NEAR((o.projector(0) + o.projector(1) - Matrix2c::Identity()).norm(), 0.0, 1e-12);
        EXPECT_NEAR((o.projector(0) - o.projector(0) * o.projector(0)).norm(), 0.0, 1e-12);
    }
    EXPECT_NEAR((Observable::sigma_x().matrix() - pauli(1)).norm(), 0.0, 1e-12);
}

TEST(Born, ProductStateEigenvalue) {
    const RealBehavior b = born_behavior({QuantumState(), all_z()});
    EXPECT_NEAR(b(0, 0, 0, 0, 0, 0), 1.0, 1e-12);
    EXPECT_NEAR(b(1, 1, 1, 0, 0, 0), 1.0, 1e-12);
}

TEST(Born, GhzOldInequality) {
    const RealBehavior b = born_behavior({ghz_state(), ghz_oldineq_settings()});
    EXPECT_NEAR(evaluate(oldineq_expression(), b), kOldTarget, 1e-12);
    EXPECT_NEAR(evaluate(oldineq_expression(), b, Basis::Correlator), kOldTarget, 1e-12);
}

TEST(Born, NormalizedAndNoSignalling) {
    for (std::uint64_t i = 0; i < 25; ++i) {
        auto rng = task_rng(13, i);
        const QuantumState state = testing::random_pure_state(rng).with_white_noise(0.7);
        const RealBehavior b = born_behavior({state, random_settings(rng)});
        EXPECT_TRUE(normalize_check(b));
        EXPECT_TRUE(is_no_signalling(b));
    }
}

TEST(Born, TensorRouteAgrees) {
    for (std::uint64_t i = 0; i < 25; ++i) {
        auto rng = task_rng(14, i);
        const QuantumState state = testing::random_pure_state(rng);
        const Settings settings = random_settings(rng);
        const auto direct = to_correlators(born_behavior({state, settings}));
        const auto tensor = quantum_correlators(correlation_tensor(state), settings);
        for (std::size_t t = 0; t < kCorrelatorTerms; ++t) EXPECT_NEAR(direct[t], tensor[t], 1e-12);
    }
}

TEST(Born, NoiseScalesCorrelators) {
    auto rng = task_rng(15, 0);
    const QuantumState state = testing::random_pure_state(rng);
    const Settings settings = random_settings(rng);
    const auto full = to_correlators(born_behavior({state, settings}));
    for (double p : {0.0, 0.3, 0.85}) {
        const auto noisy = to_correlators(born_behavior({state.with_white_noise(p), settings}));
        for (std::size_t t = 1; t < kCorrelatorTerms; ++t) EXPECT_NEAR(noisy[t], p * full[t], 1e-12);
    }
}

TEST(Born, PartyPermutationSymmetry) {
    const auto& expr = Catalog::standard().at(57).expression;
    auto rng = task_rng(16, 0);
    const QuantumState state = testing::random_pure_state(rng);
    const Settings settings = random_settings(rng);
    const double value = evaluate(expr, born_behavior({state, settings}));
    for (const std::array<int, 3>& perm : {std::array<int, 3>{1, 2, 0}, std::array<int, 3>{0, 2, 1}}) {
        // permuted() puts old party perm[k] in slot k; the relabeling sends party p to slot perm[p], so it takes the inverse.
        Settings moved;
        Relabeling g;
        for (int k = 0; k < 3; ++k) {
            const auto src = static_cast<std::size_t>(perm[static_cast<std::size_t>(k)]);
            moved[2 * static_cast<std::size_t>(k)] = settings[2 * src];
            moved[2 * static_cast<std::size_t>(k) + 1] = settings[2 * src + 1];
            g.perm[src] = k;
        }
        const RealBehavior b = born_behavior({state.permuted(perm), moved});
        EXPECT_NEAR(evaluate(g.apply(expr), b), value, 1e-12);
    }
}

TEST(Born, WhiteStateGivesConstantTerm) {
    const QuantumState white = QuantumState().with_white_noise(0.0);
    auto rng = task_rng(17, 0);
    const auto& expr = Catalog::standard().at(138).expression;
    EXPECT_NEAR(evaluate(expr, born_behavior({white, random_settings(rng)})), expr.correlators()[0].get_d(), 1e-12);
}

TEST(SettingsFile, RoundTrip) {
    const Settings s = ghz_oldineq_settings();
    const Settings back = settings_from_text(settings_to_text(s));
    for (std::size_t k = 0; k < 6; ++k) EXPECT_NEAR((back[k].bloch() - s[k].bloch()).norm(), 0.0, 1e-12);
    EXPECT_THROW(settings_from_text("{\"party\": \"D\", \"setting\": 0, \"theta\": 0, \"phi\": 0}"), FormatError);
}

TEST(Seesaw, SvetlichnyOnGhz) {
    SeesawOptions options;
    options.restarts = 20;
    const auto r = seesaw_maximize(Catalog::standard().at(185).expression, ghz_state(), options);
    EXPECT_NEAR(r.value, 4.0 * std::sqrt(2.0), 1e-4);
    EXPECT_TRUE(r.monotone);
    // The reported settings reproduce the value through the Born rule.
    EXPECT_NEAR(evaluate(Catalog::standard().at(185).expression, born_behavior({ghz_state(), r.observables})), r.value, 1e-9);
}

TEST(Seesaw, PositivityIsTight) {
    SeesawOptions options;
    options.restarts = 10;
    auto rng = task_rng(18, 0);
    for (const QuantumState& s : {ghz_state(), w_state(), testing::random_pure_state(rng)}) {
        EXPECT_NEAR(seesaw_maximize(Catalog::standard().at(1).expression, s, options).value, 1.0, 1e-6);
    }
}

TEST(Seesaw, MonotoneFromRandomStarts) {
    const RealCoefficients c = real_correlators(Catalog::standard().at(99).expression);
    for (std::uint64_t i = 0; i < 10; ++i) {
        auto rng = task_rng(19, i);
        const Settings start = random_settings(rng);
        const auto r = seesaw_run(c, w_state(), start);
        EXPECT_TRUE(r.monotone);
        EXPECT_GE(r.value + 1e-12, quantum_value(c, correlation_tensor(w_state()), start));
    }
}

TEST(Seesaw, BestStateForFamilySix) {
    SeesawOptions options;
    options.restarts = 20;
    options.optimize_state = true;
    const auto r = seesaw_maximize(Catalog::standard().at(6).expression, ghz_state(), options);
    EXPECT_NEAR(r.value, 8.12659, 1e-3);
}

TEST(Seesaw, ReproducibleForSeed) {
    SeesawOptions options;
    options.restarts = 5;
    options.seed = 42;
    const auto a = seesaw_maximize(eq11_expression(), w_state(), options);
    const auto b = seesaw_maximize(eq11_expression(), w_state(), options);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.restart, b.restart);
}

TEST(Seesaw, FunctionalProjectionMatchesExpression) {
    // Probability coefficients of an expression project back onto its correlators.
    const auto& expr = Catalog::standard().at(138).expression;
    std::array<double, kEntries> f{};
    for (std::size_t e = 0; e < kEntries; ++e) f[e] = expr.probabilities()[e].get_d();
    const RealCoefficients from_f = correlators_of_functional(f), direct = real_correlators(expr);
    for (std::size_t t = 0; t < kCorrelatorTerms; ++t) EXPECT_NEAR(from_f[t], direct[t], 1e-12);
}

TEST(Threshold, GhzNs2) {
    ThresholdOptions options;
    options.restarts = 2;
    const auto r = optimize_threshold(StateFamily::GHZ, LocalityClass::NS2, options);
    EXPECT_NEAR(r.p, 1.0 / std::sqrt(2.0), 1e-3);
    for (std::size_t k = 1; k < r.history.size(); ++k) EXPECT_LE(r.history[k], r.history[k - 1] + 1e-9);
}

TEST(Threshold, WFamily138Bound) {
    // The W behavior at the family 138 optimum leaves NS2 at 10/12.4862.
    SeesawOptions options;
    options.restarts = 20;
    const auto best = seesaw_maximize(Catalog::standard().at(138).expression, w_state(), options);
    const auto r = threshold(born_behavior({w_state(), best.observables}), LocalityClass::NS2);
    EXPECT_NEAR(r.p, 10.0 / 12.4862, 2e-3);
}

TEST(Scan, GridGuards) {
    const auto grid = state_grid(2);
    EXPECT_EQ(grid.size(), 32u);
    for (const auto& s : grid) {
        EXPECT_NO_THROW(s.validate());
        EXPECT_TRUE(s.genuinely_tripartite()) << s.describe();
    }
    EXPECT_THROW(state_grid(1), InvariantViolation);
}

TEST(Scan, SmallGridViolates) {
    ScanOptions options;
    options.restarts = 5;
    const auto report = scan_pure_states(eq11_expression(), 2, options);
    EXPECT_EQ(report.evaluated, 32u);
    EXPECT_TRUE(report.non_violating.empty());
    EXPECT_GT(report.min_violation, 0.0);
    EXPECT_NE(scan_report_text(report).find("min"), std::string::npos);
}

TEST(Scan, GhzAndProductPoints) {
    PureStateParams ghz, product;
    ghz.lambda = {1 / std::sqrt(2.0), 0, 0, 0, 1 / std::sqrt(2.0)};
    ScanOptions options;
    options.restarts = 5;
    const auto report = scan_states(eq11_expression(), {ghz, product}, options);
    ASSERT_EQ(report.points.size(), 2u);
    EXPECT_FALSE(report.points[0].skipped);
    EXPECT_GT(report.points[0].best, 0.0);
    EXPECT_TRUE(report.points[1].skipped);
}

}  // namespace
}  // namespace trinl
