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


#include "trinl/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include "json.hpp"
#include "trinl/behavior_io.hpp"
#include "trinl/linalg.hpp"
#include "trinl/relabeling.hpp"
#include "trinl/vertices.hpp"

namespace trinl {

using nlohmann::ordered_json;

namespace {

Rational json_rational(const ordered_json& v, const std::string& what) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw FormatError(what + ": expected an integer or a \"num/den\" string");
}

ordered_json rational_json(const Rational& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
    return to_string(r);
}

const char* class_key(LocalityClass cls) {
    switch (cls) {
        case LocalityClass::NS2: return "ns2";
        case LocalityClass::T2: return "t2";
        case LocalityClass::S2: return "s2";
        default: return nullptr;
    }
}

}  // namespace

CatalogEntry parse_catalog_record(std::string_view line) {
    ordered_json j;
    try {
        j = ordered_json::parse(line);
    } catch (const ordered_json::parse_error& e) {
        throw FormatError(std::string("catalog record: ") + e.what());
    }
    if (!j.is_object() || !j.contains("family") || !j.contains("terms")) {
        throw FormatError("catalog record needs \"family\" and \"terms\"");
    }
    CatalogEntry entry;
    entry.family = j.at("family").get<int>();
    const std::string tag = "family " + std::to_string(entry.family);
    CorrelatorCoefficients c{};
    for (const auto& [key, value] : j.at("terms").items()) {
        std::size_t t = parse_term_label(key);
        if (sgn(c[t]) != 0) throw FormatError(tag + ": duplicate term " + key);
        c[t] = json_rational(value, tag + " term " + key);
    }
    entry.expression = BellExpression::from_correlators(c, "family " + std::to_string(entry.family));
    if (j.contains("bounds")) {
        for (const auto& [key, value] : j.at("bounds").items()) {
            DeclaredBound bound;
            if (key == "quantum" || key == "quantum_upper") {
                if (!value.is_number()) throw FormatError(tag + ": " + key + " must be a number");
                bound.numeric = value.get<double>();
                bound.provenance = "quantum-numeric";
            } else if (key == "ns2" || key == "t2" || key == "s2") {
                bound.exact = json_rational(value, tag + " bound " + key);
                bound.numeric = bound.exact->get_d();
                bound.provenance = "catalog";
            } else {
                throw FormatError(tag + ": unknown bound '" + key + "'");
            }
            entry.expression.bounds[key] = bound;
        }
    }
    return entry;
}

std::string catalog_record(const CatalogEntry& entry) {
    ordered_json j;
    j["family"] = entry.family;
    ordered_json terms = ordered_json::object();
    for (std::size_t t : canonical_term_order()) {
        const Rational& v = entry.expression.correlators()[t];
        if (sgn(v) != 0) terms[term_label(t)] = rational_json(v);
    }
    j["terms"] = terms;
    ordered_json bounds = ordered_json::object();
    for (const char* key : {"ns2", "t2", "s2", "quantum", "quantum_upper"}) {
        auto it = entry.expression.bounds.find(key);
        if (it == entry.expression.bounds.end()) continue;
        if (it->second.exact) {
            bounds[key] = to_string(*it->second.exact);
        } else {
            bounds[key] = it->second.numeric;
        }
    }
    j["bounds"] = bounds;
    return j.dump();
}

Catalog Catalog::parse(std::string_view jsonl, const std::string& origin) {
    Catalog catalog;
    std::set<int> seen;
    std::istringstream in{std::string(jsonl)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        CatalogEntry entry;
        try {
            entry = parse_catalog_record(line);
        } catch (const FormatError& e) {
            throw FormatError(origin + ":" + std::to_string(number) + ": " + e.what());
        }
        if (!seen.insert(entry.family).second) {
            throw FormatError(origin + ":" + std::to_string(number) + ": duplicate family " +
                              std::to_string(entry.family));
        }
        catalog.entries_.push_back(std::move(entry));
    }
    return catalog;
}

Catalog Catalog::load(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) throw CatalogMissing("catalog not found: " + path.string());
    return parse(read_text_file(path), path.string());
}

const Catalog& Catalog::standard() {
    static std::once_flag once;
    static Catalog catalog;
    std::call_once(once, [] { catalog = load(default_catalog_path()); });
    return catalog;
}

std::string Catalog::serialize() const {
    std::string out;
    for (const auto& e : entries_) out += catalog_record(e) + "\n";
    return out;
}

void Catalog::save(const std::filesystem::path& path) const { write_text_file(path, serialize()); }

const CatalogEntry& Catalog::at(int family) const {
    for (const auto& e : entries_) {
        if (e.family == family) return e;
    }
    throw CatalogMissing("family " + std::to_string(family) + " is not in the catalog");
}

bool Catalog::contains(int family) const {
    for (const auto& e : entries_) {
        if (e.family == family) return true;
    }
    return false;
}

std::filesystem::path default_catalog_path() {
    if (const char* dir = std::getenv("TRINL_DATA_DIR"); dir && *dir) return std::filesystem::path(dir) / "catalog.jsonl";
#ifdef TRINL_DATA_DIR
    return std::filesystem::path(TRINL_DATA_DIR) / "catalog.jsonl";
#else
    return "data/catalog.jsonl";
#endif
}

BoundCheck verify_bound(const Catalog& catalog, int family, LocalityClass cls) {
    const char* key = class_key(cls);
    if (!key) throw FormatError("the catalog stores ns2, t2 and s2 bounds only, not " + to_string(cls));
    const CatalogEntry& entry = catalog.at(family);
    BoundCheck check;
    check.family = family;
    check.cls = cls;
    if (auto it = entry.expression.bounds.find(key); it != entry.expression.bounds.end()) check.expected = it->second.exact;
    MaximizeResult<Rational> m = maximize(entry.expression, cls);
    check.computed = m.value;
    check.witness = m.witness;
    check.pass = check.expected && *check.expected == check.computed;
    return check;
}

long ns2_polytope_dimension() {
    static const long dimension = [] {
        std::vector<RationalRow> points;
        for (const auto& g : ns2_generators()) points.emplace_back(g.point.table().begin(), g.point.table().end());
        return affine_dimension(points);
    }();
    return dimension;
}

FacetCheck facet_check(const BellExpression& expr, const Rational& bound) {
    FacetCheck check;
    check.bound = bound;
    check.polytope_dimension = ns2_polytope_dimension();
    check.valid = true;
    std::vector<RationalRow> saturating;
    for (const auto& g : ns2_generators()) {
        Rational v = evaluate(expr, g.point);
        if (v > bound) check.valid = false;
        if (v == bound) saturating.emplace_back(g.point.table().begin(), g.point.table().end());
    }
    check.saturating = saturating.size();
    check.saturating_dimension = saturating.empty() ? -1 : affine_dimension(saturating);
    check.facet = check.valid && check.saturating_dimension == check.polytope_dimension - 1;
    return check;
}

FacetCheck verify_facet(const Catalog& catalog, int family) {
    const CatalogEntry& entry = catalog.at(family);
    auto it = entry.expression.bounds.find("ns2");
    if (it == entry.expression.bounds.end() || !it->second.exact) {
        throw CatalogMissing("family " + std::to_string(family) + " has no NS2 bound");
    }
    FacetCheck check = facet_check(entry.expression, *it->second.exact);
    check.family = family;
    return check;
}

}  // namespace trinl
