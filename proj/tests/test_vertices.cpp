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

#include <algorithm>
#include <filesystem>
#include <set>

#include "trinl/linalg.hpp"
#include "trinl/membership.hpp"
#include "trinl/vertices.hpp"

namespace trinl {
namespace {

bool all_distinct(const std::vector<Behavior>& points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) return false;
        }
    }
    return true;
}

bool contains(const std::vector<Behavior>& points, const Behavior& b) {
    return std::find(points.begin(), points.end(), b) != points.end();
}

TEST(Vertices, LocalCount) {
    const VertexSet local = enumerate_local();
    EXPECT_EQ(local.points.size(), 64u);
    EXPECT_TRUE(all_distinct(local.points));
    for (const auto& p : local.points) {
        EXPECT_TRUE(normalize_check(p));
        EXPECT_TRUE(is_no_signalling(p));
    }
}

TEST(Vertices, Ns2Count) {
    const VertexSet ns2 = enumerate_ns2();
    EXPECT_EQ(ns2.points.size(), 160u);
    EXPECT_TRUE(all_distinct(ns2.points));
    for (const auto& p : ns2.points) EXPECT_TRUE(is_no_signalling(p));
    for (const auto& p : enumerate_local().points) EXPECT_TRUE(contains(ns2.points, p));
}

TEST(Vertices, PrBoxes) {
    ASSERT_EQ(pr_boxes().size(), 8u);
    for (const auto& box : pr_boxes()) {
        const Behavior b = pr_with_deterministic(Bipartition::AC_B, box, 2);
        for (std::size_t in = 0; in < 8; ++in) {
            EXPECT_EQ(marginal(b, Party::A, triple_of(in))[0], make_rational(1, 2));
            EXPECT_EQ(marginal(b, Party::C, triple_of(in))[0], make_rational(1, 2));
        }
    }
}

TEST(Vertices, PrBoxOutcomeRule) {
    // Relabeled a+b = XY: each input pair fixes the parity, and the four parities sum to 1 mod 2.
    for (const auto& box : pr_boxes()) {
        const auto t = box.table();
        int total = 0;
        for (int x = 0; x < 2; ++x) {
            for (int y = 0; y < 2; ++y) {
                std::set<int> parities;
                for (int a = 0; a < 2; ++a) {
                    for (int b = 0; b < 2; ++b) {
                        const Rational& v = t[static_cast<std::size_t>(((x * 2 + y) * 2 + a) * 2 + b)];
                        if (sgn(v) == 0) continue;
                        EXPECT_EQ(v, make_rational(1, 2));
                        parities.insert(a ^ b);
                    }
                }
                ASSERT_EQ(parities.size(), 1u);
                total ^= *parities.begin();
            }
        }
        EXPECT_EQ(total, 1);
    }
}

TEST(Vertices, S2Generators) {
    const VertexSet s2 = enumerate_s2_generators();
    EXPECT_EQ(s2.labeled_count, 3072u);
    EXPECT_TRUE(all_distinct(s2.points));
    for (const auto& p : enumerate_local().points) EXPECT_TRUE(contains(s2.points, p));
}

TEST(Vertices, MixtureStrategyOneIsAGenerator) {
    // a = X+Z-XZ (that is X or Z), b = 0, c = 1: Alice's response depends on Charles's input.
    Behavior b;
    for (std::size_t e = 0; e < kEntries; ++e) {
        const Triple in = inputs_of(e), out = outcomes_of(e);
        const int a = in[0] | in[2];
        b[e] = (out[0] == a && out[1] == 0 && out[2] == 1) ? 1 : 0;
    }
    EXPECT_TRUE(contains(enumerate_s2_generators().points, b));
    EXPECT_FALSE(contains(enumerate_ns2().points, b));
}

TEST(Vertices, OneWayPoints) {
    const OrderingDirection a_to_b{Bipartition::AB_C, Direction::FirstBeforeSecond};
    const VertexSet set = enumerate_one_way(a_to_b);
    EXPECT_EQ(set.labeled_count, 256u);
    EXPECT_TRUE(all_distinct(set.points));
    bool some_signalling = false;
    for (const auto& p : set.points) {
        for (int x = 0; x < 2; ++x) {
            for (int z = 0; z < 2; ++z) {
                EXPECT_EQ(marginal(p, Party::A, {x, 0, z}), marginal(p, Party::A, {x, 1, z}));
            }
        }
        for (int y = 0; y < 2; ++y) {
            if (marginal(p, Party::B, {0, y, 0}) != marginal(p, Party::B, {1, y, 0})) some_signalling = true;
        }
    }
    EXPECT_TRUE(some_signalling);
}

TEST(Vertices, OneWayIndependentSubfamilyIsLocal) {
    const OrderingDirection a_to_b{Bipartition::AB_C, Direction::FirstBeforeSecond};
    const auto local = enumerate_local().points;
    std::size_t independent = 0;
    for (const auto& p : enumerate_one_way(a_to_b).points) {
        bool depends = false;
        for (int y = 0; y < 2; ++y) {
            if (marginal(p, Party::B, {0, y, 0}) != marginal(p, Party::B, {1, y, 0})) depends = true;
        }
        if (depends) continue;
        ++independent;
        EXPECT_TRUE(contains(local, p));
    }
    EXPECT_EQ(independent, 64u);
}

TEST(Vertices, Ns2AffineRank) {
    std::vector<RationalRow> rows;
    for (const auto& p : enumerate_ns2().points) rows.emplace_back(p.table().begin(), p.table().end());
    EXPECT_EQ(rank(rows), 27u);
    EXPECT_EQ(affine_dimension(rows), 26);
}

TEST(Vertices, LocalAndNs2InsideS2) {
    const VertexSet ns2 = enumerate_ns2();
    for (std::size_t i = 0; i < ns2.points.size(); i += 7) EXPECT_TRUE(classify(ns2.points[i], LocalityClass::S2).member);
}

TEST(Vertices, DumpWritesIndex) {
    const auto dir = std::filesystem::temp_directory_path() / "trinl_vertex_dump";
    std::filesystem::remove_all(dir);
    dump_vertex_set(enumerate_local(), dir);
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) files += entry.is_regular_file();
    EXPECT_EQ(files, 65u);  // one per point plus the index
    std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace trinl
