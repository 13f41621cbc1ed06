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

#include "trinl/behavior.hpp"

#include <cctype>

#include "trinl/linalg.hpp"

namespace trinl {

RealBehavior to_real(const Behavior& b) {
    RealBehavior out;
    for (std::size_t e = 0; e < kEntries; ++e) out[e] = b[e].get_d();
    return out;
}

Behavior snap_behavior(const RealBehavior& b, unsigned long max_denominator) {
    Behavior out;
    for (std::size_t e = 0; e < kEntries; ++e) out[e] = snap(b[e], max_denominator);
    return out;
}

std::string term_label(std::size_t index) {
    if (index >= kCorrelatorTerms) throw FormatError("correlator term index out of range");
    if (index == 0) return "1";
    Triple t = term_of(index);
    std::string label;
    for (std::size_t k = 0; k < 3; ++k) {
        if (t[k] < 0) continue;
        label += "ABC"[k];
        label += static_cast<char>('0' + t[k]);
    }
    return label;
}

std::size_t parse_term_label(std::string_view label) {
    if (label == "1") return 0;
    Triple t{-1, -1, -1};
    int last = -1;
    if (label.empty() || label.size() % 2 != 0) throw FormatError("bad correlator term '" + std::string(label) + "'");
    for (std::size_t i = 0; i < label.size(); i += 2) {
        int party = label[i] - 'A';
        int input = label[i + 1] - '0';
        if (party < 0 || party > 2 || party <= last || (input != 0 && input != 1)) {
            throw FormatError("bad correlator term '" + std::string(label) + "'");
        }
        t[static_cast<std::size_t>(party)] = input;
        last = party;
    }
    return term_index(t);
}

namespace {

std::string marginal_name(const std::vector<int>& kept, const Triple& in, const Triple& out) {
    std::string parties, event, given;
    for (int k : kept) {
        parties += "ABC"[k];
        if (!event.empty()) event += ",";
        event += std::string(1, "abc"[k]) + "=" + std::to_string(out[static_cast<std::size_t>(k)]);
        if (!given.empty()) given += ",";
        given += std::string(1, "XYZ"[k]) + "=" + std::to_string(in[static_cast<std::size_t>(k)]);
    }
    return parties + " marginal P(" + event + "|" + given + ")";
}

std::vector<LinearEquality> build_equalities() {
    std::vector<LinearEquality> result;
    // Normalization differences between input triples.
    for (std::size_t in = 1; in < kInputTriples; ++in) {
        LinearEquality eq;
        for (std::size_t out = 0; out < 8; ++out) {
            eq.coefficients[in * 8 + out] += 1;
            eq.coefficients[out] -= 1;
        }
        Triple t = triple_of(in);
        eq.description = "normalization of (X,Y,Z)=(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                         std::to_string(t[2]) + ") differs from (0,0,0)";
        result.push_back(eq);
    }
    // Marginals of every one- and two-party subset against the others' inputs.
    const std::vector<std::vector<int>> subsets{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};
    for (const auto& kept : subsets) {
        std::vector<int> others;
        for (int k = 0; k < 3; ++k) {
            bool in_kept = false;
            for (int j : kept) in_kept |= (j == k);
            if (!in_kept) others.push_back(k);
        }
        const int kept_count = static_cast<int>(kept.size());
        const int other_count = static_cast<int>(others.size());
        for (int kept_inputs = 0; kept_inputs < (1 << kept_count); ++kept_inputs) {
            for (int kept_outs = 0; kept_outs < (1 << kept_count); ++kept_outs) {
                for (int other_inputs = 1; other_inputs < (1 << other_count); ++other_inputs) {
                    LinearEquality eq;
                    Triple in_ref{0, 0, 0}, in_alt{0, 0, 0}, out_fixed{0, 0, 0};
                    for (int i = 0; i < kept_count; ++i) {
                        std::size_t k = static_cast<std::size_t>(kept[static_cast<std::size_t>(i)]);
                        in_ref[k] = in_alt[k] = (kept_inputs >> (kept_count - 1 - i)) & 1;
                        out_fixed[k] = (kept_outs >> (kept_count - 1 - i)) & 1;
                    }
                    for (int i = 0; i < other_count; ++i) {
                        std::size_t k = static_cast<std::size_t>(others[static_cast<std::size_t>(i)]);
                        in_alt[k] = (other_inputs >> (other_count - 1 - i)) & 1;
                    }
                    for (std::size_t out = 0; out < 8; ++out) {
                        Triple o = triple_of(out);
                        bool match = true;
                        for (int k : kept) match &= (o[static_cast<std::size_t>(k)] == out_fixed[static_cast<std::size_t>(k)]);
                        if (!match) continue;
                        eq.coefficients[entry_index(in_alt, o)] += 1;
                        eq.coefficients[entry_index(in_ref, o)] -= 1;
                    }
                    std::string other_names, ref_vals, alt_vals;
                    for (int k : others) {
                        if (!other_names.empty()) {
                            other_names += ",";
                            ref_vals += ",";
                            alt_vals += ",";
                        }
                        other_names += "XYZ"[k];
                        ref_vals += std::to_string(in_ref[static_cast<std::size_t>(k)]);
                        alt_vals += std::to_string(in_alt[static_cast<std::size_t>(k)]);
                    }
                    eq.description = marginal_name(kept, in_ref, out_fixed) + " depends on " + other_names + ": (" +
                                     other_names + ")=(" + ref_vals + ") vs (" + alt_vals + ")";
                    result.push_back(eq);
                }
            }
        }
    }
    return result;
}

}  // namespace

const std::vector<LinearEquality>& no_signalling_equalities() {
    static const std::vector<LinearEquality> equalities = build_equalities();
    return equalities;
}

const std::vector<LinearEquality>& independent_no_signalling_equalities() {
    static const std::vector<LinearEquality> independent = [] {
        const auto& all = no_signalling_equalities();
        std::vector<RationalRow> rows;
        rows.reserve(all.size());
        for (const auto& eq : all) {
            RationalRow r(kEntries);
            for (std::size_t e = 0; e < kEntries; ++e) r[e] = eq.coefficients[e];
            rows.push_back(std::move(r));
        }
        std::vector<LinearEquality> chosen;
        for (std::size_t i : independent_rows(rows)) chosen.push_back(all[i]);
        return chosen;
    }();
    return independent;
}

}  // namespace trinl
