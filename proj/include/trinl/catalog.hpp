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
#include <optional>
#include <string>
#include <vector>

#include "trinl/expression.hpp"
#include "trinl/membership.hpp"

namespace trinl {

struct CatalogEntry {
    int family = 0;
    BellExpression expression;  // correlator-native, bounds attached
};

/// Representative inequalities, one per relabeling family. Immutable once loaded.
class Catalog {
   public:
    static Catalog load(const std::filesystem::path& path);
    static Catalog parse(std::string_view jsonl, const std::string& origin = "<memory>");
    /// Loaded once from default_catalog_path().
    static const Catalog& standard();

    std::string serialize() const;
    void save(const std::filesystem::path& path) const;

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    /// Throws CatalogMissing for an unknown id.
    const CatalogEntry& at(int family) const;
    bool contains(int family) const;

   private:
    std::vector<CatalogEntry> entries_;
};

/// $TRINL_DATA_DIR/catalog.jsonl, falling back to the build-time data directory.
std::filesystem::path default_catalog_path();

std::string catalog_record(const CatalogEntry& entry);
CatalogEntry parse_catalog_record(std::string_view line);

struct BoundCheck {
    int family = 0;
    LocalityClass cls = LocalityClass::NS2;
    std::optional<Rational> expected;
    Rational computed;
    std::string witness;
    bool pass = false;
};

/// Recomputes the class bound exactly and compares it with the stored one.
/// Only ns2, t2 and s2 columns exist in the catalog.
BoundCheck verify_bound(const Catalog& catalog, int family, LocalityClass cls);

struct FacetCheck {
    int family = 0;
    Rational bound;
    std::size_t saturating = 0;
    long saturating_dimension = -1;  // affine dimension of the saturating generators
    long polytope_dimension = -1;
    bool valid = false;              // no generator exceeds the bound
    bool facet = false;
};

/// expr <= bound is a facet of the NS2 polytope iff it is valid and the
/// generators reaching the bound span an affine space of dimension 25.
FacetCheck facet_check(const BellExpression& expr, const Rational& bound);
FacetCheck verify_facet(const Catalog& catalog, int family);

/// Dimension of the NS2 polytope, computed from its generators.
long ns2_polytope_dimension();

}  // namespace trinl
