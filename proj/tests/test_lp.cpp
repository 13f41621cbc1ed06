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

#include "trinl/catalog.hpp"
#include "trinl/lp.hpp"
#include "trinl/membership.hpp"
#include "trinl/vertices.hpp"

namespace trinl {
namespace {

LpProblem<Rational> hull_feasibility(const std::vector<Generator>& gens, const Behavior& target) {
    LpProblem<Rational> p;
    for (std::size_t e = 0; e < kEntries; ++e) p.add_row(target[e]);
    const std::size_t mass = p.add_row(Rational(1));
    for (const auto& g : gens) {
        LpColumn<Rational> col;
        for (std::size_t e = 0; e < kEntries; ++e)
            if (sgn(g.point[e]) != 0) col.entries.emplace_back(e, g.point[e]);
        col.entries.emplace_back(mass, Rational(1));
        p.add_column(std::move(col));
    }
    return p;
}

TEST(Lp, SingleVariable) {
    LpProblem<Rational> p;
    p.add_row(Rational(1));
    p.add_column({{{0, Rational(1)}}, Rational(1), Rational(0), std::nullopt});
    const auto out = solve(p);
    ASSERT_EQ(out.status, LpStatus::Optimal);
    EXPECT_EQ(out.value, Rational(1));
    EXPECT_EQ(check_outcome(p, out), "");
    const auto d = solve(to_double(p));
    ASSERT_EQ(d.status, LpStatus::Optimal);
    EXPECT_DOUBLE_EQ(d.value, 1.0);
}

TEST(Lp, UniformOverLocalVertices) {
    const auto p = hull_feasibility(local_generators(), Behavior::uniform());
    const auto out = solve(p);
    ASSERT_EQ(out.status, LpStatus::Optimal);
    EXPECT_EQ(check_outcome(p, out), "");
    Behavior rebuilt;
    for (std::size_t c = 0; c < p.columns.size(); ++c) {
        for (std::size_t e = 0; e < kEntries; ++e) rebuilt[e] += out.primal[c] * local_generators()[c].point[e];
    }
    EXPECT_EQ(rebuilt, Behavior::uniform());
}

TEST(Lp, PrBoxIsNotLocal) {
    const Behavior pr = pr_with_deterministic(Bipartition::AB_C, pr_boxes().front(), 0);
    const auto p = hull_feasibility(local_generators(), pr);
    const auto out = solve(p);
    ASSERT_EQ(out.status, LpStatus::Infeasible);
    EXPECT_EQ(check_outcome(p, out), "");
    // Independent Farkas check: z.rhs > 0 while z.A <= 0 on every column.
    Rational zb(0);
    for (std::size_t r = 0; r < p.rows(); ++r) zb += out.dual[r] * p.rhs[r];
    EXPECT_GT(zb, 0);
    for (const auto& col : p.columns) {
        Rational za(0);
        for (const auto& [r, v] : col.entries) za += out.dual[r] * v;
        EXPECT_LE(za, 0);
    }
    EXPECT_EQ(solve(to_double(p)).status, LpStatus::Infeasible);
}

TEST(Lp, Unbounded) {
    LpProblem<Rational> p;
    p.add_row(Rational(1));
    // max y with x - y = 1.
    p.add_column({{{0, Rational(1)}}, Rational(0), Rational(0), std::nullopt});
    p.add_column({{{0, Rational(-1)}}, Rational(1), Rational(0), std::nullopt});
    const auto out = solve(p);
    EXPECT_EQ(out.status, LpStatus::Unbounded);
    EXPECT_EQ(check_outcome(p, out), "");
}

TEST(Lp, BoundsAndFreeColumns) {
    // max x + 2y with x + y = 3, 0 <= y <= 1, x free.
    LpProblem<Rational> p;
    p.add_row(Rational(3));
    p.add_column({{{0, Rational(1)}}, Rational(1), std::nullopt, std::nullopt});
    p.add_column({{{0, Rational(1)}}, Rational(2), Rational(0), Rational(1)});
    const auto out = solve(p);
    ASSERT_EQ(out.status, LpStatus::Optimal);
    EXPECT_EQ(out.value, Rational(4));
    EXPECT_EQ(out.primal[1], Rational(1));
    EXPECT_EQ(check_outcome(p, out), "");
}

TEST(Lp, RejectsBadRows) {
    LpProblem<Rational> p;
    p.add_row(Rational(0));
    p.add_column({{{3, Rational(1)}}, Rational(0), Rational(0), std::nullopt});
    EXPECT_THROW(solve(p), DimensionMismatch);
}

TEST(Lp, TamperedOutcomeIsCaught) {
    const auto p = hull_feasibility(local_generators(), Behavior::uniform());
    auto out = solve(p);
    ASSERT_EQ(out.status, LpStatus::Optimal);
    out.primal[0] += make_rational(1, 64);
    EXPECT_NE(check_outcome(p, out), "");
}

TEST(Lp, Deterministic) {
    const Behavior pr = pr_with_deterministic(Bipartition::BC_A, pr_boxes()[3], 1);
    const auto p = hull_feasibility(ns2_generators(), mix(pr, Behavior::uniform(), make_rational(1, 3)));
    const auto a = solve(p), b = solve(p);
    EXPECT_EQ(a.primal, b.primal);
    EXPECT_EQ(a.dual, b.dual);
}

TEST(Lp, DoubleAndRationalAgreeOnCatalog) {
    const Catalog& catalog = Catalog::standard();
    for (int family : {1, 2, 6, 12, 57, 99, 137, 185}) {
        const auto& expr = catalog.at(family).expression;
        for (LocalityClass cls : {LocalityClass::T2, LocalityClass::K2}) {
            const double exact = to_double(lp_maximum<Rational>(expr.probabilities(), cls).value);
            const double approx = maximize_double(expr, cls).value;
            EXPECT_NEAR(approx, exact, 1e-7 * std::max(1.0, std::abs(exact))) << "family " << family << " " << to_string(cls);
        }
    }
}

}  // namespace
}  // namespace trinl
