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

#include "trinl/linalg.hpp"

#include "trinl/errors.hpp"

namespace trinl {

bool EchelonBasis::insert(RationalRow row) {
    if (row.size() != columns_) throw DimensionMismatch("row length does not match basis width");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (sgn(row[p]) == 0) continue;
        Rational factor = row[p];
        const RationalRow& basis_row = rows_[i];
        for (std::size_t j = p; j < columns_; ++j) {
            if (sgn(basis_row[j]) != 0) row[j] -= factor * basis_row[j];
        }
    }
    std::size_t pivot = 0;
    while (pivot < columns_ && sgn(row[pivot]) == 0) ++pivot;
    if (pivot == columns_) return false;
    Rational lead = row[pivot];
    for (std::size_t j = pivot; j < columns_; ++j) {
        if (sgn(row[j]) != 0) row[j] /= lead;
    }
    // Keep earlier rows reduced at the new pivot column.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        RationalRow& other = rows_[i];
        if (sgn(other[pivot]) == 0) continue;
        Rational factor = other[pivot];
        for (std::size_t j = pivot; j < columns_; ++j) {
            if (sgn(row[j]) != 0) other[j] -= factor * row[j];
        }
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
}

std::size_t rank(const std::vector<RationalRow>& rows) {
    if (rows.empty()) return 0;
    EchelonBasis basis(rows.front().size());
    for (const auto& r : rows) basis.insert(r);
    return basis.rank();
}

std::vector<std::size_t> independent_rows(const std::vector<RationalRow>& rows) {
    std::vector<std::size_t> chosen;
    if (rows.empty()) return chosen;
    EchelonBasis basis(rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (basis.insert(rows[i])) chosen.push_back(i);
    }
    return chosen;
}

long affine_dimension(const std::vector<RationalRow>& points) {
    if (points.empty()) return -1;
    const RationalRow& origin = points.front();
    EchelonBasis basis(origin.size());
    for (std::size_t i = 1; i < points.size(); ++i) {
        RationalRow diff(origin.size());
        for (std::size_t j = 0; j < origin.size(); ++j) diff[j] = points[i][j] - origin[j];
        basis.insert(std::move(diff));
    }
    return static_cast<long>(basis.rank());
}

}  // namespace trinl
