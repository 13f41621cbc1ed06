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

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trinl/errors.hpp"
#include "trinl/rational.hpp"

namespace trinl {

template <typename T>
struct LpColumn {
    std::vector<std::pair<std::size_t, T>> entries;  // (row, coefficient)
    T cost{};
    std::optional<T> lower = T(0);  // nullopt: unbounded below
    std::optional<T> upper;
};

/// maximize c.x  subject to  A x = rhs,  lower <= x <= upper.
template <typename T>
struct LpProblem {
    std::vector<T> rhs;
    std::vector<LpColumn<T>> columns;

    std::size_t rows() const { return rhs.size(); }
    std::size_t add_row(T value = T(0)) {
        rhs.push_back(std::move(value));
        return rhs.size() - 1;
    }
    std::size_t add_column(LpColumn<T> column) {
        columns.push_back(std::move(column));
        return columns.size() - 1;
    }
    /// Throws DimensionMismatch on out-of-range rows or inverted bounds.
    void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string to_string(LpStatus status);

template <typename T>
struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    T value{};
    std::vector<T> primal;
    /// Optimal: row duals y with reduced costs c_j - y.A_j of the correct sign for the bound each x_j sits at.
    /// Infeasible: Farkas vector z with z.rhs > max over the bound box of z.A x.
    std::vector<T> dual;
    /// Unbounded: direction d with A d = 0, d inside the recession cone of the bounds, c.d > 0.
    std::vector<T> ray;
    std::size_t pivots = 0;
    bool certified_basis = false;  // rational mode: exact re-solve of the floating basis succeeded
};

struct SolveOptions {
    /// Rational mode only: skip the floating-point basis search and pivot in exact arithmetic throughout.
    bool exact_pivoting = false;
    std::size_t max_pivots = 200000;
};

LpOutcome<double> solve(const LpProblem<double>& problem, const SolveOptions& options = {});
LpOutcome<Rational> solve(const LpProblem<Rational>& problem, const SolveOptions& options = {});

LpProblem<double> to_double(const LpProblem<Rational>& problem);

/// Independent re-substitution check of an outcome. Empty string when valid, else the first failure.
std::string check_outcome(const LpProblem<Rational>& problem, const LpOutcome<Rational>& outcome);
std::string check_outcome(const LpProblem<double>& problem, const LpOutcome<double>& outcome, double tolerance = 1e-9);

}  // namespace trinl
