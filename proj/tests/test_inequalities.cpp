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

#include <filesystem>
#include <random>
#include <set>

#include "support.hpp"
#include "trinl/behavior_io.hpp"
#include "trinl/catalog.hpp"
#include "trinl/expression.hpp"
#include "trinl/fixtures.hpp"
#include "trinl/relabeling.hpp"

namespace trinl {
namespace {

CorrelatorCoefficients zero_correlators() {
    CorrelatorCoefficients c;
    for (auto& v : c) v = 0;
    return c;
}

TEST(Basis, ConstantExpression) {
    CorrelatorCoefficients c = zero_correlators();
    c[0] = 1;
    const auto p = to_probability_basis(c);
    EXPECT_EQ(to_correlator_basis(p), c);
    // Value on any behavior is 1.
    EXPECT_EQ(evaluate(p, corr1_target()), Rational(1));
}

TEST(Basis, TwoPartyEvent) {
    const auto c = to_correlator_basis(event_coefficients("A0B0"));
    CorrelatorCoefficients expected = zero_correlators();
    for (const Triple& t : {Triple{-1, -1, -1}, Triple{0, -1, -1}, Triple{-1, 0, -1}, Triple{0, 0, -1}})
        expected[term_index(t)] = make_rational(1, 4);
    EXPECT_EQ(c, expected);
}

TEST(Basis, RoundTripOnCatalog) {
    for (const auto& entry : Catalog::standard().entries()) {
        const auto& c = entry.expression.correlators();
        EXPECT_EQ(to_correlator_basis(to_probability_basis(c)), c) << "family " << entry.family;
    }
}

TEST(Evaluate, BasesAgreeOnNoSignallingBehaviors) {
    const auto& expr = Catalog::standard().at(138).expression;
    for (std::uint64_t i = 0; i < 10; ++i) {
        auto rng = task_rng(8, i);
        const Behavior b = testing::random_ns_behavior(rng);
        EXPECT_EQ(evaluate(expr, b, Basis::Probability), evaluate(expr, b, Basis::Correlator));
    }
}

TEST(Evaluate, CorrelatorBasisRejectsSignalling) {
    const Behavior b = DeterministicStrategy::unrestricted(Bipartition::AB_C, 0b0110, 0b1010, 1).behavior();
    EXPECT_NO_THROW(evaluate(eq11_expression(), b));
    EXPECT_THROW(evaluate(eq11_expression(), b, Basis::Correlator), SignallingInput);
}

TEST(Evaluate, FamilyOneOnUniform) {
    EXPECT_EQ(evaluate(Catalog::standard().at(1).expression, Behavior::uniform()), Rational(0));
}

TEST(Evaluate, InequalityElevenOnMixture) {
    EXPECT_EQ(evaluate(eq11_expression(), s2_mixture()), make_rational(1, 4));
}

TEST(Evaluate, OldInequalityOnGhzFixture) {
    EXPECT_NEAR(evaluate(oldineq_expression(), ghz_oldineq_behavior()), 1.0 + 2.0 * std::sqrt(2.0), 1e-9);
}

TEST(Split, UniformAndMixture) {
    const auto u = split_check(Behavior::uniform());
    EXPECT_EQ(u.total, u.a_before_b + u.b_before_a);
    // Pair terms weigh -2 at 1/4 each; three-body terms -1 (three) and +2 (four) at 1/8 each.
    EXPECT_EQ(u.total, make_rational(-6, 4) - make_rational(3, 8) + make_rational(8, 8));
    const auto m = split_check(s2_mixture());
    EXPECT_EQ(m.total, make_rational(1, 4));
    EXPECT_EQ(m.a_before_b + m.b_before_a, make_rational(1, 4));
}

TEST(Split, RandomNoSignallingBehaviors) {
    for (std::uint64_t i = 0; i < 40; ++i) {
        auto rng = task_rng(21, i);
        EXPECT_NO_THROW(split_check(testing::random_ns_behavior(rng)));
    }
}

TEST(Split, RejectsSignalling) {
    const Behavior b = DeterministicStrategy::unrestricted(Bipartition::AB_C, 0b0110, 0b1010, 1).behavior();
    EXPECT_THROW(split_check(b), SignallingInput);
}

TEST(Split, OneWayBound) {
    const BellExpression ab = i_a_before_b_expression(), ba = i_b_before_a_expression();
    for (const auto& p : enumerate_one_way({Bipartition::AB_C, Direction::FirstBeforeSecond}).points) EXPECT_LE(evaluate(ab, p), 0);
    for (const auto& p : enumerate_one_way({Bipartition::AB_C, Direction::SecondBeforeFirst}).points) EXPECT_LE(evaluate(ba, p), 0);
}

TEST(Relabeling, GroupStructure) {
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < kGroupOrder; ++i) {
        const Relabeling g = Relabeling::from_index(i);
        EXPECT_EQ(g.index(), i);
        seen.insert(g.index());
    }
    EXPECT_EQ(seen.size(), kGroupOrder);
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<std::size_t> pick(0, kGroupOrder - 1);
    for (int k = 0; k < 200; ++k) {
        const Relabeling g = Relabeling::from_index(pick(rng)), h = Relabeling::from_index(pick(rng));
        EXPECT_LT(g.then(h).index(), kGroupOrder);
        EXPECT_EQ(g.then(g.inverse()), Relabeling::identity());
        const Behavior b = corr1_target();
        EXPECT_EQ(h.apply(g.apply(b)), g.then(h).apply(b));
    }
}

TEST(Relabeling, EvaluationInvariant) {
    const auto& expr = Catalog::standard().at(99).expression;
    auto rng = task_rng(31, 0);
    const Behavior b = testing::random_ns_behavior(rng);
    const Rational value = evaluate(expr, b);
    for (std::size_t i = 0; i < kGroupOrder; ++i) {
        const Relabeling g = Relabeling::from_index(i);
        ASSERT_EQ(evaluate(g.apply(expr), g.apply(b)), value) << "element " << i;
    }
}

TEST(Relabeling, PreservesClassVerdicts) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<std::size_t> pick(0, kGroupOrder - 1);
    for (int k = 0; k < 3; ++k) {
        const Relabeling g = Relabeling::from_index(pick(rng));
        EXPECT_TRUE(classify(g.apply(corr1_target()), LocalityClass::T2).member);
        EXPECT_FALSE(classify(g.apply(corr1_target()), LocalityClass::NS2).member);
    }
}

TEST(Canonical, InequalityElevenIsFamilySix) {
    const auto eq11 = canonicalize(eq11_expression(), Rational(0));
    const auto six = canonicalize(Catalog::standard().at(6).expression, Rational(7));
    EXPECT_EQ(eq11, six);
}

TEST(Canonical, Idempotent) {
    for (int family : {1, 6, 57, 185}) {
        const auto& e = Catalog::standard().at(family).expression;
        const Rational bound = *e.bounds.at("ns2").exact;
        const auto form = canonicalize(e, bound);
        CorrelatorCoefficients c;
        for (std::size_t t = 0; t < kCorrelatorTerms; ++t) c[canonical_term_order()[t]] = Rational(form.coefficients[t]);
        // The unit term already carries minus the bound.
        const auto again = canonicalize(c, Rational(0));
        EXPECT_EQ(again, form) << "family " << family;
    }
}

TEST(Canonical, OrbitTimesStabilizer) {
    for (int family : {1, 164, 185}) {
        const auto& e = Catalog::standard().at(family).expression;
        const auto form = canonicalize(e, *e.bounds.at("ns2").exact);
        // Orbit counted directly from the images of the coefficient vector.
        std::set<std::string> images;
        for (std::size_t i = 0; i < kGroupOrder; ++i) {
            const auto image = Relabeling::from_index(i).apply(e.correlators());
            std::string key;
            for (const auto& v : image) key += to_string(v) + ",";
            images.insert(key);
        }
        EXPECT_EQ(images.size(), form.orbit) << "family " << family;
        EXPECT_EQ(images.size() * form.stabilizer, kGroupOrder) << "family " << family;
    }
}

TEST(Canonical, WitnessMapsToRepresentative) {
    const auto& e = Catalog::standard().at(20).expression;
    const Rational bound = *e.bounds.at("ns2").exact;
    const auto form = canonicalize(e, bound);
    CorrelatorCoefficients moved = form.witness.apply(e.correlators());
    moved[0] -= bound;
    const IntegerVector integers = coprime_integers(moved);
    for (std::size_t k = 0; k < kCorrelatorTerms; ++k) EXPECT_EQ(integers[canonical_term_order()[k]], form.coefficients[k]);
}

TEST(Canonical, DistinctFamilies) {
    const auto& c = Catalog::standard();
    const auto f164 = canonicalize(c.at(164).expression, *c.at(164).expression.bounds.at("ns2").exact);
    const auto f165 = canonicalize(c.at(165).expression, *c.at(165).expression.bounds.at("ns2").exact);
    EXPECT_FALSE(f164 == f165);
}

TEST(Canonical, AllCatalogFamiliesDistinct) {
    std::set<std::string> forms;
    for (const auto& entry : Catalog::standard().entries())
        forms.insert(to_string(canonicalize(entry.expression, *entry.expression.bounds.at("ns2").exact)));
    EXPECT_EQ(forms.size(), Catalog::standard().entries().size());
}

TEST(Canonical, StableUnderRandomRelabelings) {
    const auto& e = Catalog::standard().at(148).expression;
    const Rational bound = *e.bounds.at("ns2").exact;
    const auto form = canonicalize(e, bound);
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::size_t> pick(0, kGroupOrder - 1);
    for (int k = 0; k < 50; ++k) {
        EXPECT_EQ(canonicalize(Relabeling::from_index(pick(rng)).apply(e), bound), form);
    }
}

TEST(Catalog, FamiliesUniqueAndComplete) {
    const auto& c = Catalog::standard();
    EXPECT_EQ(c.entries().size(), 185u);
    std::set<int> ids;
    for (const auto& e : c.entries()) ids.insert(e.family);
    EXPECT_EQ(ids.size(), 185u);
    EXPECT_THROW(c.at(9999), CatalogMissing);
    EXPECT_FALSE(c.contains(0));
}

TEST(Catalog, RoundTrip) {
    const auto& c = Catalog::standard();
    const Catalog again = Catalog::parse(c.serialize());
    ASSERT_EQ(again.entries().size(), c.entries().size());
    for (std::size_t i = 0; i < c.entries().size(); ++i) {
        EXPECT_EQ(again.entries()[i].family, c.entries()[i].family);
        EXPECT_EQ(again.entries()[i].expression.correlators(), c.entries()[i].expression.correlators());
        EXPECT_EQ(catalog_record(again.entries()[i]), catalog_record(c.entries()[i]));
    }
}

TEST(Catalog, MissingFile) {
    EXPECT_THROW(Catalog::load("/nonexistent/catalog.jsonl"), CatalogMissing);
}

TEST(Catalog, BadRecord) {
    EXPECT_THROW(Catalog::parse(R"({"family": 1, "terms": {"A7": 1}, "bounds": {}})"), FormatError);
}

TEST(Catalog, NumericBoundsKeepProvenance) {
    const auto& e = Catalog::standard().at(137).expression;
    ASSERT_TRUE(e.bounds.count("quantum"));
    EXPECT_EQ(e.bounds.at("quantum").provenance, "quantum-numeric");
    EXPECT_FALSE(e.bounds.at("quantum").exact);
    EXPECT_EQ(e.bounds.at("t2").provenance, "catalog");
}

TEST(Catalog, TableValues) {
    const auto& c = Catalog::standard();
    EXPECT_EQ(verify_bound(c, 2, LocalityClass::S2).computed, make_rational(32, 5));
    EXPECT_EQ(verify_bound(c, 12, LocalityClass::T2).computed, Rational(6));
    for (LocalityClass cls : {LocalityClass::NS2, LocalityClass::T2, LocalityClass::S2}) {
        const auto check = verify_bound(c, 185, cls);
        EXPECT_TRUE(check.pass);
        EXPECT_EQ(check.computed, Rational(4));
    }
    EXPECT_THROW(verify_bound(c, 6, LocalityClass::K2), FormatError);
}

TEST(Catalog, TamperedBoundFails) {
    std::string text = catalog_record(Catalog::standard().at(6));
    const auto pos = text.find("\"73/7\"");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 6, "\"74/7\"");
    const Catalog tampered = Catalog::parse(text);
    EXPECT_FALSE(verify_bound(tampered, 6, LocalityClass::S2).pass);
    EXPECT_TRUE(verify_bound(tampered, 6, LocalityClass::T2).pass);
}

TEST(Catalog, SetInclusionOrder) {
    for (const auto& entry : Catalog::standard().entries()) {
        const auto& b = entry.expression.bounds;
        EXPECT_LE(*b.at("ns2").exact, *b.at("t2").exact) << "family " << entry.family;
        EXPECT_LE(*b.at("t2").exact, *b.at("s2").exact) << "family " << entry.family;
    }
}

TEST(Facet, Positivity) {
    const auto check = verify_facet(Catalog::standard(), 1);
    EXPECT_TRUE(check.facet);
    EXPECT_EQ(check.saturating_dimension, 25);
    EXPECT_EQ(check.polytope_dimension, 26);
    EXPECT_EQ(ns2_polytope_dimension(), 26);
}

TEST(Facet, Svetlichny) {
    EXPECT_TRUE(verify_facet(Catalog::standard(), 185).facet);
}

TEST(Facet, WeakenedBound) {
    const auto check = facet_check(Catalog::standard().at(185).expression, Rational(5));
    EXPECT_TRUE(check.valid);
    EXPECT_EQ(check.saturating, 0u);
    EXPECT_FALSE(check.facet);
}

TEST(Facet, InvalidBound) {
    const auto check = facet_check(Catalog::standard().at(185).expression, Rational(3));
    EXPECT_FALSE(check.valid);
    EXPECT_FALSE(check.facet);
}

}  // namespace
}  // namespace trinl
