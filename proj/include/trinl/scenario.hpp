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
#include <cstddef>
#include <string>

// Fixed (3,2,2) scenario: three parties, two inputs each, binary outcomes.
// Table order is p[X][Y][Z][a][b][c], party order A,B,C, outcome 0 first.

namespace trinl {

inline constexpr int kParties = 3;
inline constexpr std::size_t kEntries = 64;
inline constexpr std::size_t kInputTriples = 8;

using Triple = std::array<int, 3>;

enum class Party : int { A = 0, B = 1, C = 2 };

inline constexpr std::array<Party, 3> kAllParties{Party::A, Party::B, Party::C};

constexpr int index_of(Party p) { return static_cast<int>(p); }

constexpr char party_letter(Party p) { return "ABC"[index_of(p)]; }

constexpr std::size_t entry_index(int x, int y, int z, int a, int b, int c) {
    return static_cast<std::size_t>(((((x * 2 + y) * 2 + z) * 2 + a) * 2 + b) * 2 + c);
}

constexpr std::size_t entry_index(const Triple& inputs, const Triple& outcomes) {
    return entry_index(inputs[0], inputs[1], inputs[2], outcomes[0], outcomes[1], outcomes[2]);
}

constexpr Triple inputs_of(std::size_t entry) {
    return {static_cast<int>(entry >> 5) & 1, static_cast<int>(entry >> 4) & 1, static_cast<int>(entry >> 3) & 1};
}

constexpr Triple outcomes_of(std::size_t entry) {
    return {static_cast<int>(entry >> 2) & 1, static_cast<int>(entry >> 1) & 1, static_cast<int>(entry) & 1};
}

constexpr Triple triple_of(std::size_t index) {
    return {static_cast<int>(index >> 2) & 1, static_cast<int>(index >> 1) & 1, static_cast<int>(index) & 1};
}

/// The three bipartitions, named by their pair and the isolated party.
enum class Bipartition : int { AB_C = 0, AC_B = 1, BC_A = 2 };

inline constexpr std::array<Bipartition, 3> kAllBipartitions{Bipartition::AB_C, Bipartition::AC_B, Bipartition::BC_A};

struct BipartitionParties {
    Party first;
    Party second;
    Party isolated;
};

constexpr BipartitionParties parties_of(Bipartition bp) {
    switch (bp) {
        case Bipartition::AB_C:
            return {Party::A, Party::B, Party::C};
        case Bipartition::AC_B:
            return {Party::A, Party::C, Party::B};
        case Bipartition::BC_A:
            break;
    }
    return {Party::B, Party::C, Party::A};
}

inline std::string to_string(Bipartition bp) {
    switch (bp) {
        case Bipartition::AB_C:
            return "AB|C";
        case Bipartition::AC_B:
            return "AC|B";
        case Bipartition::BC_A:
            break;
    }
    return "BC|A";
}

/// Time ordering of the two parties of a pair: which one may signal to the other.
enum class Direction : int { FirstBeforeSecond = 0, SecondBeforeFirst = 1 };

struct OrderingDirection {
    Bipartition pair;
    Direction direction;

    Party sender() const {
        auto parties = parties_of(pair);
        return direction == Direction::FirstBeforeSecond ? parties.first : parties.second;
    }
    Party receiver() const {
        auto parties = parties_of(pair);
        return direction == Direction::FirstBeforeSecond ? parties.second : parties.first;
    }
    std::string label() const {
        return std::string(1, party_letter(sender())) + "<" + std::string(1, party_letter(receiver()));
    }
};

constexpr int index_of_pair_direction(const OrderingDirection& od) {
    return 2 * static_cast<int>(od.pair) + static_cast<int>(od.direction);
}

}  // namespace trinl
