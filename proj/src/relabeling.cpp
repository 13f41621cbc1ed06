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

#include "trinl/relabeling.hpp"

#include <algorithm>
#include <sstream>

namespace trinl {

namespace {

const std::array<std::array<int, 3>, 6> kPermutations{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

}  // namespace

Relabeling Relabeling::from_index(std::size_t index) {
    if (index >= kGroupOrder) throw InvariantViolation("relabeling index out of range");
    Relabeling g;
    g.perm = kPermutations[index / 512];
    const std::size_t swaps = (index / 64) % 8, flips = index % 64;
    for (std::size_t p = 0; p < 3; ++p) {
        g.swap[p] = static_cast<int>((swaps >> (2 - p)) & 1);
        g.flip[p][0] = static_cast<int>((flips >> (5 - 2 * p)) & 1);
        g.flip[p][1] = static_cast<int>((flips >> (4 - 2 * p)) & 1);
    }
    return g;
}

std::size_t Relabeling::index() const {
    const auto it = std::find(kPermutations.begin(), kPermutations.end(), perm);
    std::size_t swaps = 0, flips = 0;
    for (std::size_t p = 0; p < 3; ++p) {
        swaps = swaps * 2 + static_cast<std::size_t>(swap[p]);
        flips = flips * 4 + static_cast<std::size_t>(flip[p][0] * 2 + flip[p][1]);
    }
    return static_cast<std::size_t>(it - kPermutations.begin()) * 512 + swaps * 64 + flips;
}

Relabeling Relabeling::then(const Relabeling& after) const {
    Relabeling g;
    for (std::size_t p = 0; p < 3; ++p) {
        const auto mid = static_cast<std::size_t>(perm[p]);
        g.perm[p] = after.perm[mid];
        g.swap[p] = swap[p] ^ after.swap[mid];
        for (int x = 0; x < 2; ++x) {
            g.flip[p][static_cast<std::size_t>(x)] =
                flip[p][static_cast<std::size_t>(x)] ^ after.flip[mid][static_cast<std::size_t>(x ^ swap[p])];
        }
    }
    return g;
}

Relabeling Relabeling::inverse() const {
    Relabeling g;
    for (std::size_t p = 0; p < 3; ++p) {
        const auto q = static_cast<std::size_t>(perm[p]);
        g.perm[q] = static_cast<int>(p);
        g.swap[q] = swap[p];
        for (int x = 0; x < 2; ++x) g.flip[q][static_cast<std::size_t>(x ^ swap[p])] = flip[p][static_cast<std::size_t>(x)];
    }
    return g;
}

std::size_t Relabeling::map_entry(std::size_t entry) const {
    const Triple in = inputs_of(entry), out = outcomes_of(entry);
    Triple nin{}, nout{};
    for (std::size_t p = 0; p < 3; ++p) {
        const auto q = static_cast<std::size_t>(perm[p]);
        nin[q] = in[p] ^ swap[p];
        nout[q] = out[p] ^ flip[p][static_cast<std::size_t>(in[p])];
    }
    return entry_index(nin, nout);
}

std::pair<std::size_t, int> Relabeling::map_term(std::size_t term) const {
    const Triple t = term_of(term);
    Triple nt{-1, -1, -1};
    int sign = 1;
    for (std::size_t p = 0; p < 3; ++p) {
        if (t[p] < 0) continue;
        nt[static_cast<std::size_t>(perm[p])] = t[p] ^ swap[p];
        if (flip[p][static_cast<std::size_t>(t[p])]) sign = -sign;
    }
    return {term_index(nt), sign};
}

ProbabilityCoefficients Relabeling::apply(const ProbabilityCoefficients& p) const {
    ProbabilityCoefficients out;
    for (std::size_t e = 0; e < kEntries; ++e) out[map_entry(e)] = p[e];
    return out;
}

CorrelatorCoefficients Relabeling::apply(const CorrelatorCoefficients& c) const {
    CorrelatorCoefficients out;
    for (std::size_t t = 0; t < kCorrelatorTerms; ++t) {
        const auto [nt, sign] = map_term(t);
        out[nt] = sign > 0 ? c[t] : Rational(-c[t]);
    }
    return out;
}

BellExpression Relabeling::apply(const BellExpression& expr) const {
    BellExpression out = expr.native_basis() == Basis::Correlator
                             ? BellExpression::from_correlators(apply(expr.correlators()), expr.name)
                             : BellExpression::from_probabilities(apply(expr.probabilities()), expr.name);
    out.bounds = expr.bounds;
    return out;
}

const std::array<std::size_t, kCorrelatorTerms>& canonical_term_order() {
    static const std::array<std::size_t, kCorrelatorTerms> order = [] {
        std::array<std::size_t, kCorrelatorTerms> o{};
        for (std::size_t t = 0; t < kCorrelatorTerms; ++t) o[t] = t;
        auto key = [](std::size_t t) {
            const Triple term = term_of(t);
            std::array<int, 7> k{};
            k[0] = term_degree(t);
            std::size_t pos = 1;
            for (int p = 0; p < 3; ++p)
                if (term[static_cast<std::size_t>(p)] >= 0) k[pos++] = p;
            while (pos < 4) k[pos++] = 9;
            for (int p = 0; p < 3; ++p)
                if (term[static_cast<std::size_t>(p)] >= 0) k[pos++] = term[static_cast<std::size_t>(p)];
            while (pos < 7) k[pos++] = 9;
            return k;
        };
        std::sort(o.begin(), o.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
        return o;
    }();
    return order;
}

IntegerVector coprime_integers(const CorrelatorCoefficients& v) {
    mpz_class lcm = 1, gcd = 0;
    for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    IntegerVector out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].get_num() * (lcm / v[i].get_den());
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), out[i].get_mpz_t());
    }
    if (gcd != 0)
        for (auto& x : out) x /= gcd;
    return out;
}

CanonicalForm canonicalize(const CorrelatorCoefficients& coefficients, const Rational& bound) {
    CorrelatorCoefficients v = coefficients;
    v[0] -= bound;
    const IntegerVector base = coprime_integers(v);
    const auto& order = canonical_term_order();
    CanonicalForm best;
    bool have = false;
    for (std::size_t i = 0; i < kGroupOrder; ++i) {
        const Relabeling g = Relabeling::from_index(i);
        IntegerVector image;
        for (std::size_t t = 0; t < kCorrelatorTerms; ++t) {
            const auto [nt, sign] = g.map_term(t);
            image[nt] = sign > 0 ? base[t] : mpz_class(-base[t]);
        }
        if (image == base) ++best.stabilizer;
        IntegerVector ordered;
        for (std::size_t k = 0; k < kCorrelatorTerms; ++k) ordered[k] = image[order[k]];
        if (!have || ordered < best.coefficients) {
            best.coefficients = ordered;
            best.witness = g;
            have = true;
        }
    }
    best.orbit = kGroupOrder / best.stabilizer;
    return best;
}

CanonicalForm canonicalize(const BellExpression& expr, const Rational& bound) {
    return canonicalize(expr.correlators(), bound);
}

std::string to_string(const CanonicalForm& form) {
    std::ostringstream out;
    const auto& order = canonical_term_order();
    bool first = true;
    for (std::size_t k = 0; k < kCorrelatorTerms; ++k) {
        const mpz_class& c = form.coefficients[k];
        if (c == 0) continue;
        if (!first) out << " ";
        first = false;
        out << (c > 0 ? "+" : "") << c.get_str() << "*" << term_label(order[k]);
    }
    if (first) out << "0";
    out << " <= 0";
    return out.str();
}

}  // namespace trinl
