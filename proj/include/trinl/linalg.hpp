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
#include <vector>

#include "trinl/rational.hpp"

namespace trinl {

using RationalRow = std::vector<Rational>;

/// Incremental row-echelon basis over the rationals.
class EchelonBasis {
   public:
    explicit EchelonBasis(std::size_t columns) : columns_(columns) {}

    /// Adds `row` if it is independent of the rows already present.
    bool insert(RationalRow row);
    std::size_t rank() const { return rows_.size(); }

   private:
    std::size_t columns_;
    std::vector<RationalRow> rows_;
    std::vector<std::size_t> pivots_;
};

std::size_t rank(const std::vector<RationalRow>& rows);

/// Indices of the first maximal independent subset, scanning rows in order.
std::vector<std::size_t> independent_rows(const std::vector<RationalRow>& rows);

/// Dimension of the affine hull of `points` (-1 for an empty set).
long affine_dimension(const std::vector<RationalRow>& points);

}  // namespace trinl
