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

#include "trinl/vertices.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <deque>
#include <fstream>
#include <set>
#include <unordered_map>

#include "trinl/behavior_io.hpp"

namespace trinl {

namespace {

std::uint8_t build_bits(auto&& rule) {
    std::uint8_t bits = 0;
    for (std::size_t i = 0; i < kInputTriples; ++i) {
        if (rule(triple_of(i))) bits = static_cast<std::uint8_t>(bits | (1u << i));
    }
    return bits;
}

// Outcomes of `table` listed over the inputs of the parties it reads.
std::string render(const ResponseTable& r, const std::vector<Party>& reads) {
    std::string out;
    const int n = static_cast<int>(reads.size());
    for (int v = 0; v < (1 << n); ++v) {
        Triple in{0, 0, 0};
        for (int i = 0; i < n; ++i) in[static_cast<std::size_t>(index_of(reads[static_cast<std::size_t>(i)]))] = (v >> (n - 1 - i)) & 1;
        out += static_cast<char>('0' + r(in));
    }
    return out;
}

char outcome_letter(Party p) { return "abc"[index_of(p)]; }

}  // namespace

bool ResponseTable::depends_on(Party party) const {
    const std::size_t k = static_cast<std::size_t>(index_of(party));
    for (std::size_t i = 0; i < kInputTriples; ++i) {
        Triple in = triple_of(i);
        Triple flipped = in;
        flipped[k] ^= 1;
        if ((*this)(in) != (*this)(flipped)) return true;
    }
    return false;
}

ResponseTable ResponseTable::of_own_input(Party party, int table) {
    if (table < 0 || table > 3) throw InvariantViolation("single-input response table must be in 0..3");
    const std::size_t k = static_cast<std::size_t>(index_of(party));
    return {build_bits([&](const Triple& in) { return ((table >> in[k]) & 1) != 0; })};
}

ResponseTable ResponseTable::of_pair_inputs(Party first, Party second, int table) {
    if (table < 0 || table > 15) throw InvariantViolation("two-input response table must be in 0..15");
    const std::size_t f = static_cast<std::size_t>(index_of(first)), s = static_cast<std::size_t>(index_of(second));
    return {build_bits([&](const Triple& in) { return ((table >> (2 * in[f] + in[s])) & 1) != 0; })};
}

DeterministicStrategy DeterministicStrategy::local(int a_table, int b_table, int c_table) {
    DeterministicStrategy s;
    s.kind = StrategyKind::SingleParty;
    s.responses = {ResponseTable::of_own_input(Party::A, a_table), ResponseTable::of_own_input(Party::B, b_table),
                   ResponseTable::of_own_input(Party::C, c_table)};
    return s;
}

DeterministicStrategy DeterministicStrategy::one_way(OrderingDirection ordering, int sender_table, int receiver_table,
                                                     int isolated_table) {
    DeterministicStrategy s;
    s.kind = StrategyKind::OneWayPair;
    s.ordering = ordering;
    s.pair = ordering.pair;
    const Party sender = ordering.sender(), receiver = ordering.receiver();
    const Party isolated = parties_of(ordering.pair).isolated;
    s.responses[static_cast<std::size_t>(index_of(sender))] = ResponseTable::of_own_input(sender, sender_table);
    s.responses[static_cast<std::size_t>(index_of(receiver))] = ResponseTable::of_pair_inputs(sender, receiver, receiver_table);
    s.responses[static_cast<std::size_t>(index_of(isolated))] = ResponseTable::of_own_input(isolated, isolated_table);
    return s;
}

DeterministicStrategy DeterministicStrategy::unrestricted(Bipartition pair, int first_table, int second_table,
                                                          int isolated_table) {
    DeterministicStrategy s;
    s.kind = StrategyKind::UnrestrictedPair;
    s.pair = pair;
    const auto parties = parties_of(pair);
    s.responses[static_cast<std::size_t>(index_of(parties.first))] =
        ResponseTable::of_pair_inputs(parties.first, parties.second, first_table);
    s.responses[static_cast<std::size_t>(index_of(parties.second))] =
        ResponseTable::of_pair_inputs(parties.first, parties.second, second_table);
    s.responses[static_cast<std::size_t>(index_of(parties.isolated))] =
        ResponseTable::of_own_input(parties.isolated, isolated_table);
    return s;
}

void DeterministicStrategy::validate() const {
    auto allowed = [&](Party reader, Party input) -> bool {
        if (reader == input) return true;
        switch (kind) {
            case StrategyKind::SingleParty:
                return false;
            case StrategyKind::OneWayPair:
                return ordering && reader == ordering->receiver() && input == ordering->sender();
            case StrategyKind::UnrestrictedPair: {
                if (!pair) return false;
                auto parties = parties_of(*pair);
                return reader != parties.isolated && input != parties.isolated;
            }
        }
        return false;
    };
    for (Party reader : kAllParties) {
        for (Party input : kAllParties) {
            if (!allowed(reader, input) && responses[static_cast<std::size_t>(index_of(reader))].depends_on(input)) {
                throw InvariantViolation(std::string("response of ") + party_letter(reader) + " reads the input of " +
                                         party_letter(input));
            }
        }
    }
}

Behavior DeterministicStrategy::behavior() const {
    Behavior b;
    for (std::size_t i = 0; i < kInputTriples; ++i) {
        Triple in = triple_of(i);
        Triple out{responses[0](in), responses[1](in), responses[2](in)};
        b.at(in, out) = 1;
    }
    return b;
}

std::string DeterministicStrategy::label() const {
    auto own = [](Party p) { return std::vector<Party>{p}; };
    std::string body;
    std::string prefix;
    std::array<std::vector<Party>, 3> reads{own(Party::A), own(Party::B), own(Party::C)};
    if (kind == StrategyKind::OneWayPair && ordering) {
        prefix = ordering->label();
        reads[static_cast<std::size_t>(index_of(ordering->receiver()))] = {ordering->sender(), ordering->receiver()};
    } else if (kind == StrategyKind::UnrestrictedPair && pair) {
        prefix = to_string(*pair);
        auto parties = parties_of(*pair);
        reads[static_cast<std::size_t>(index_of(parties.first))] = {parties.first, parties.second};
        reads[static_cast<std::size_t>(index_of(parties.second))] = {parties.first, parties.second};
    } else {
        prefix = "L";
    }
    for (Party p : kAllParties) {
        if (!body.empty()) body += ",";
        body += std::string(1, outcome_letter(p)) + "=" + render(responses[static_cast<std::size_t>(index_of(p))], reads[static_cast<std::size_t>(index_of(p))]);
    }
    return prefix + "[" + body + "]";
}

std::array<Rational, 16> PrBox::table() const {
    const int alpha = (variant >> 2) & 1, beta = (variant >> 1) & 1, gamma = variant & 1;
    std::array<Rational, 16> t;
    for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 2; ++x2)
            for (int o1 = 0; o1 < 2; ++o1)
                for (int o2 = 0; o2 < 2; ++o2) {
                    const int rhs = (x1 & x2) ^ (alpha & x1) ^ (beta & x2) ^ gamma;
                    t[static_cast<std::size_t>(((x1 * 2 + x2) * 2 + o1) * 2 + o2)] = ((o1 ^ o2) == rhs) ? Rational(1, 2) : Rational(0);
                }
    return t;
}

std::string PrBox::label() const {
    std::string rhs = "xy";
    if (variant & 4) rhs += "+x";
    if (variant & 2) rhs += "+y";
    if (variant & 1) rhs += "+1";
    return "PR[o1+o2=" + rhs + "]";
}

const std::vector<PrBox>& pr_boxes() {
    static const std::vector<PrBox> boxes = [] {
        // Supports as 16-bit masks over ((x1,x2),(o1,o2)).
        auto bit = [](int x1, int x2, int o1, int o2) { return ((x1 * 2 + x2) * 2 + o1) * 2 + o2; };
        auto transform = [&](std::uint16_t mask, auto&& map) {
            std::uint16_t out = 0;
            for (int x1 = 0; x1 < 2; ++x1)
                for (int x2 = 0; x2 < 2; ++x2)
                    for (int o1 = 0; o1 < 2; ++o1)
                        for (int o2 = 0; o2 < 2; ++o2) {
                            if (!((mask >> bit(x1, x2, o1, o2)) & 1)) continue;
                            auto [y1, y2, p1, p2] = map(x1, x2, o1, o2);
                            out = static_cast<std::uint16_t>(out | (1u << bit(y1, y2, p1, p2)));
                        }
            return out;
        };
        using Move = std::array<int, 4>;
        std::vector<std::function<Move(int, int, int, int)>> flips{
            [](int x1, int x2, int o1, int o2) { return Move{x1, x2, o1 ^ (x1 == 0), o2}; },
            [](int x1, int x2, int o1, int o2) { return Move{x1, x2, o1 ^ (x1 == 1), o2}; },
            [](int x1, int x2, int o1, int o2) { return Move{x1, x2, o1, o2 ^ (x2 == 0)}; },
            [](int x1, int x2, int o1, int o2) { return Move{x1, x2, o1, o2 ^ (x2 == 1)}; },
            [](int x1, int x2, int o1, int o2) { return Move{x1 ^ 1, x2, o1, o2}; },
            [](int x1, int x2, int o1, int o2) { return Move{x1, x2 ^ 1, o1, o2}; },
        };
        std::uint16_t canonical = 0;
        for (int x1 = 0; x1 < 2; ++x1)
            for (int x2 = 0; x2 < 2; ++x2)
                for (int o1 = 0; o1 < 2; ++o1)
                    for (int o2 = 0; o2 < 2; ++o2)
                        if ((o1 ^ o2) == (x1 & x2)) canonical = static_cast<std::uint16_t>(canonical | (1u << bit(x1, x2, o1, o2)));
        std::set<std::uint16_t> seen{canonical};
        std::deque<std::uint16_t> queue{canonical};
        while (!queue.empty()) {
            std::uint16_t cur = queue.front();
            queue.pop_front();
            for (const auto& f : flips) {
                std::uint16_t next = transform(cur, f);
                if (seen.insert(next).second) queue.push_back(next);
            }
        }
        std::vector<PrBox> result;
        for (std::uint16_t mask : seen) {
            for (int v = 0; v < 8; ++v) {
                PrBox box{v};
                auto t = box.table();
                std::uint16_t support = 0;
                for (int i = 0; i < 16; ++i)
                    if (sgn(t[static_cast<std::size_t>(i)]) != 0) support = static_cast<std::uint16_t>(support | (1u << i));
                if (support == mask) result.push_back(box);
            }
        }
        if (result.size() != seen.size()) throw InvariantViolation("PR orbit contains an unrecognized box");
        std::sort(result.begin(), result.end(), [](const PrBox& l, const PrBox& r) { return l.variant < r.variant; });
        return result;
    }();
    return boxes;
}

Behavior pr_with_deterministic(Bipartition pair, const PrBox& box, int isolated_table) {
    const auto parties = parties_of(pair);
    const auto t = box.table();
    const std::size_t f = static_cast<std::size_t>(index_of(parties.first)), s = static_cast<std::size_t>(index_of(parties.second)),
                      iso = static_cast<std::size_t>(index_of(parties.isolated));
    Behavior b;
    for (std::size_t e = 0; e < kEntries; ++e) {
        Triple in = inputs_of(e), out = outcomes_of(e);
        if (out[iso] != ((isolated_table >> in[iso]) & 1)) continue;
        b[e] = t[static_cast<std::size_t>(((in[f] * 2 + in[s]) * 2 + out[f]) * 2 + out[s])];
    }
    return b;
}

const std::vector<Generator>& local_generators() {
    static const std::vector<Generator> gens = [] {
        std::vector<Generator> out;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) {
                    auto s = DeterministicStrategy::local(a, b, c);
                    out.push_back({s.label(), std::nullopt, s.behavior()});
                }
        return out;
    }();
    return gens;
}

const std::vector<Generator>& ns2_generators() {
    static const std::vector<Generator> gens = [] {
        std::vector<Generator> out = local_generators();
        for (Bipartition bp : kAllBipartitions) {
            const char iso = outcome_letter(parties_of(bp).isolated);
            for (const PrBox& box : pr_boxes()) {
                for (int s = 0; s < 4; ++s) {
                    std::string label = to_string(bp) + "[" + box.label() + "," + iso + "=" + std::to_string(s & 1) +
                                        std::to_string((s >> 1) & 1) + "]";
                    out.push_back({label, bp, pr_with_deterministic(bp, box, s)});
                }
            }
        }
        return out;
    }();
    return gens;
}

const std::vector<Generator>& s2_generators() {
    static const std::vector<Generator> gens = [] {
        std::vector<Generator> out;
        out.reserve(3072);
        for (Bipartition bp : kAllBipartitions)
            for (int f = 0; f < 16; ++f)
                for (int s = 0; s < 16; ++s)
                    for (int i = 0; i < 4; ++i) {
                        auto strat = DeterministicStrategy::unrestricted(bp, f, s, i);
                        out.push_back({strat.label(), bp, strat.behavior()});
                    }
        return out;
    }();
    return gens;
}

const std::vector<Generator>& one_way_generators(OrderingDirection ordering) {
    static const std::array<std::vector<Generator>, 6> all = [] {
        std::array<std::vector<Generator>, 6> out;
        for (Bipartition bp : kAllBipartitions)
            for (Direction d : {Direction::FirstBeforeSecond, Direction::SecondBeforeFirst}) {
                OrderingDirection od{bp, d};
                auto& list = out[static_cast<std::size_t>(index_of_pair_direction(od))];
                for (int s = 0; s < 4; ++s)
                    for (int r = 0; r < 16; ++r)
                        for (int i = 0; i < 4; ++i) {
                            auto strat = DeterministicStrategy::one_way(od, s, r, i);
                            list.push_back({strat.label(), bp, strat.behavior()});
                        }
            }
        return out;
    }();
    return all[static_cast<std::size_t>(index_of_pair_direction(ordering))];
}

VertexSet make_vertex_set(std::string tag, const std::vector<Generator>& generators) {
    VertexSet set;
    set.tag = std::move(tag);
    set.labeled_count = generators.size();
    std::unordered_map<std::string, std::size_t> index;
    for (const auto& g : generators) {
        std::string key;
        for (std::size_t e = 0; e < kEntries; ++e) {
            key += to_string(g.point[e]);
            key += ';';
        }
        auto [it, inserted] = index.emplace(key, set.points.size());
        if (inserted) {
            set.points.push_back(g.point);
            set.provenance.push_back({g.label});
        } else {
            set.provenance[it->second].push_back(g.label);
        }
    }
    return set;
}

VertexSet enumerate_local() { return make_vertex_set("local", local_generators()); }
VertexSet enumerate_ns2() { return make_vertex_set("ns2", ns2_generators()); }
VertexSet enumerate_s2_generators() { return make_vertex_set("s2-generators", s2_generators()); }
VertexSet enumerate_one_way(OrderingDirection ordering) {
    return make_vertex_set("one-way(" + to_string(ordering.pair) + "," + ordering.label() + ")", one_way_generators(ordering));
}

void dump_vertex_set(const VertexSet& set, const std::filesystem::path& directory) {
    std::filesystem::create_directories(directory);
    std::ofstream index(directory / "index.txt");
    if (!index) throw FormatError("cannot write index in " + directory.string());
    index << "# " << set.tag << " " << set.points.size() << " points, " << set.labeled_count << " labeled\n";
    for (std::size_t i = 0; i < set.points.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "point_%04zu.json", i);
        write_behavior_file(directory / name, set.points[i]);
        index << name;
        for (const auto& label : set.provenance[i]) index << " " << label;
        index << "\n";
    }
}

}  // namespace trinl
