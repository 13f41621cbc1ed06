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
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "trinl/behavior.hpp"

namespace trinl {

/// One party's outcome as a function of all three inputs; bit (4X + 2Y + Z).
struct ResponseTable {
    std::uint8_t bits = 0;

    int operator()(const Triple& inputs) const {
        return (bits >> ((inputs[0] << 2) | (inputs[1] << 1) | inputs[2])) & 1;
    }
    bool depends_on(Party party) const;

    /// Response that reads only `party`'s own input: table bit x gives the outcome.
    static ResponseTable of_own_input(Party party, int table);
    /// Response that reads the inputs of `first` and `second`: bit (2*x_first + x_second).
    static ResponseTable of_pair_inputs(Party first, Party second, int table);
};

enum class StrategyKind { SingleParty, OneWayPair, UnrestrictedPair };

/// Product of deterministic responses; the kind records which inputs each
/// response may read (the tables are validated against it).
struct DeterministicStrategy {
    StrategyKind kind = StrategyKind::SingleParty;
    std::optional<OrderingDirection> ordering;  // OneWayPair
    std::optional<Bipartition> pair;            // OneWayPair and UnrestrictedPair
    std::array<ResponseTable, 3> responses{};

    static DeterministicStrategy local(int a_table, int b_table, int c_table);
    static DeterministicStrategy one_way(OrderingDirection ordering, int sender_table, int receiver_table, int isolated_table);
    static DeterministicStrategy unrestricted(Bipartition pair, int first_table, int second_table, int isolated_table);

    /// Throws InvariantViolation when a response reads an input it may not.
    void validate() const;
    Behavior behavior() const;
    std::string label() const;
};

/// One of the 8 relabelings of the canonical box a + b = XY (mod 2),
/// written as a + b = XY + alpha*X + beta*Y + gamma with variant = 4alpha + 2beta + gamma.
struct PrBox {
    int variant = 0;

    /// P(o1 o2 | x1 x2), indexed ((x1 * 2 + x2) * 2 + o1) * 2 + o2.
    std::array<Rational, 16> table() const;
    std::string label() const;
};

/// The 8 variants, generated as the orbit of the canonical box under local
/// output and input flips, deduplicated and sorted by variant index.
const std::vector<PrBox>& pr_boxes();

/// PR box on `pair`, deterministic `isolated_table` for the remaining party.
Behavior pr_with_deterministic(Bipartition pair, const PrBox& box, int isolated_table);

/// A labeled extremal/generating point; `group` names the bipartition whose
/// hybrid term it belongs to (empty for fully local points).
struct Generator {
    std::string label;
    std::optional<Bipartition> group;
    Behavior point;
};

const std::vector<Generator>& local_generators();
const std::vector<Generator>& ns2_generators();
/// All 3072 (bipartition, pair tables, isolated table) products, duplicates kept.
const std::vector<Generator>& s2_generators();
const std::vector<Generator>& one_way_generators(OrderingDirection ordering);

struct VertexSet {
    std::string tag;
    std::vector<Behavior> points;
    /// Labels of every generator that produced each point.
    std::vector<std::vector<std::string>> provenance;
    std::size_t labeled_count = 0;
};

VertexSet enumerate_local();
VertexSet enumerate_ns2();
VertexSet enumerate_s2_generators();
VertexSet enumerate_one_way(OrderingDirection ordering);

/// Collapses identical tensors, keeping first-occurrence order.
VertexSet make_vertex_set(std::string tag, const std::vector<Generator>& generators);

/// Writes one behavior file per point plus index.txt listing provenance labels.
void dump_vertex_set(const VertexSet& set, const std::filesystem::path& directory);

}  // namespace trinl
