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

#include <cmath>
#include <iostream>
#include <random>

#include "support.hpp"
#include "trinl/catalog.hpp"
#include "trinl/expression.hpp"
#include "trinl/fixtures.hpp"
#include "trinl/membership.hpp"

namespace trinl {
namespace {

const std::array<LocalityClass, 5> kChain{LocalityClass::Local, LocalityClass::NS2, LocalityClass::T2, LocalityClass::K2,
                                          LocalityClass::S2};

TEST(ClassSystem, Sizes) {
    EXPECT_EQ(class_system(LocalityClass::Local).columns(), 64u);
    EXPECT_EQ(class_system(LocalityClass::NS2).columns(), 160u);
    EXPECT_EQ(class_system(LocalityClass::T2).columns(), 1536u);
    EXPECT_EQ(class_system(LocalityClass::K2).columns(), 1536u);
    EXPECT_EQ(class_system(LocalityClass::S2).columns(), 3072u);
    EXPECT_TRUE(class_system(LocalityClass::Local).hull);
    EXPECT_FALSE(class_system(LocalityClass::T2).hull);
    EXPECT_LT(class_system(LocalityClass::K2).internal_rows, class_system(LocalityClass::T2).internal_rows);
}

TEST(ClassSystem, ParseTags) {
    for (LocalityClass cls : kAllClasses) EXPECT_EQ(parse_class(to_string(cls)), cls);
    EXPECT_EQ(parse_class("t2"), LocalityClass::T2);
    EXPECT_THROW(parse_class("q3"), FormatError);
}

TEST(Classify, UniformEverywhere) {
    for (LocalityClass cls : kAllClasses) {
        const auto r = classify(Behavior::uniform(), cls);
        EXPECT_TRUE(r.member) << to_string(cls);
        EXPECT_EQ(verify_certificate(Behavior::uniform(), r), "") << to_string(cls);
    }
}

TEST(Classify, ParityBehavior) {
    const Behavior b = corr1_target();
    const std::array<bool, 5> expected{false, false, true, true, true};
    for (std::size_t k = 0; k < kChain.size(); ++k) {
        const auto r = classify(b, kChain[k]);
        EXPECT_EQ(r.member, expected[k]) << to_string(kChain[k]);
        EXPECT_EQ(verify_certificate(b, r), "") << to_string(kChain[k]);
    }
}

TEST(Classify, ParityBehaviorT2CertificateHasMatchingHybrids) {
    const auto r = classify(corr1_target(), LocalityClass::T2);
    ASSERT_TRUE(r.decomposition);
    for (std::size_t k = 0; k < 3; ++k) {
        ASSERT_EQ(r.decomposition->hybrid_first[k].has_value(), r.decomposition->hybrid_second[k].has_value());
        if (r.decomposition->hybrid_first[k]) EXPECT_EQ(*r.decomposition->hybrid_first[k], *r.decomposition->hybrid_second[k]);
    }
}

TEST(Classify, ParitySeparatorStaysBelowOffsetOnGenerators) {
    const auto r = classify(corr1_target(), LocalityClass::NS2);
    ASSERT_TRUE(r.functional);
    const auto& f = *r.functional;
    for (const auto& g : ns2_generators()) {
        Rational v(0);
        for (std::size_t e = 0; e < kEntries; ++e) v += f.coefficients[e] * g.point[e];
        EXPECT_LE(v, f.offset) << g.label;
    }
    EXPECT_GT(f.gap, 0);
}

TEST(Classify, NonmemberFunctionalIsIntegral) {
    const auto r = classify(s2_mixture(), LocalityClass::T2);
    ASSERT_FALSE(r.member);
    ASSERT_TRUE(r.functional);
    mpz_class g = 0;
    for (const auto& c : r.functional->coefficients) {
        EXPECT_EQ(c.get_den(), 1);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    }
    EXPECT_EQ(g, 1);
}

TEST(Classify, SvetlichnyMixture) {
    const Behavior b = s2_mixture();
    const auto s2 = classify(b, LocalityClass::S2), t2 = classify(b, LocalityClass::T2);
    EXPECT_TRUE(s2.member);
    EXPECT_FALSE(t2.member);
    EXPECT_EQ(verify_certificate(b, s2), "");
    EXPECT_EQ(verify_certificate(b, t2), "");
}

TEST(Classify, TamperedCertificateFails) {
    const Behavior b = corr1_target();
    auto r = classify(b, LocalityClass::T2);
    ASSERT_TRUE(r.decomposition);
    r.decomposition->weights.front().weight += make_rational(1, 100);
    EXPECT_NE(verify_certificate(b, r), "");
    auto n = classify(b, LocalityClass::NS2);
    ASSERT_TRUE(n.functional);
    n.functional->offset += 1000;
    EXPECT_NE(verify_certificate(b, n), "");
}

TEST(Classify, DoubleMode) {
    const RealBehavior b = to_real(corr1_target());
    EXPECT_TRUE(classify(b, LocalityClass::T2).member);
    const auto ns2 = classify(b, LocalityClass::NS2);
    EXPECT_FALSE(ns2.member);
    EXPECT_EQ(verify_certificate(b, ns2), "");
}

TEST(Maximize, InequalityElevenBounds) {
    const BellExpression eq11 = eq11_expression();
    EXPECT_EQ(maximize(eq11, LocalityClass::T2).value, Rational(0));
    EXPECT_EQ(maximize(eq11, LocalityClass::NS2).value, Rational(0));
    EXPECT_GT(maximize(eq11, LocalityClass::S2).value, Rational(0));
}

TEST(Maximize, FamilySix) {
    const auto& expr = Catalog::standard().at(6).expression;
    EXPECT_EQ(maximize(expr, LocalityClass::NS2).value, Rational(7));
    EXPECT_EQ(maximize(expr, LocalityClass::T2).value, Rational(7));
    EXPECT_EQ(maximize(expr, LocalityClass::S2).value, make_rational(73, 7));
}

TEST(Maximize, OldInequalityT2) {
    EXPECT_EQ(maximize(oldineq_expression(), LocalityClass::T2).value, Rational(3));
}

TEST(Maximize, MaximizerAttainsValue) {
    const auto& expr = Catalog::standard().at(12).expression;
    for (LocalityClass cls : kChain) {
        const auto m = maximize(expr, cls);
        EXPECT_EQ(evaluate(expr, m.maximizer), m.value) << to_string(cls);
        EXPECT_TRUE(classify(m.maximizer, cls).member) << to_string(cls);
    }
}

TEST(Maximize, HullAgreesWithLp) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> coefficient(-4, 4);
    for (int trial = 0; trial < 6; ++trial) {
        std::array<Rational, kEntries> f{};
        for (auto& v : f) v = coefficient(rng);
        for (LocalityClass cls : {LocalityClass::Local, LocalityClass::NS2, LocalityClass::S2}) {
            EXPECT_EQ(hull_maximum(f, cls).value, lp_maximum(f, cls).value) << to_string(cls) << " trial " << trial;
        }
        EXPECT_EQ(hull_maximum(f, LocalityClass::NS2).value, lp_maximum(f, LocalityClass::NS2, Formulation::NS2Constraints).value);
    }
}

TEST(Maximize, BoundsAreOrderedAlongChain) {
    for (int family : {3, 6, 15, 57, 99, 137, 185}) {
        const auto& expr = Catalog::standard().at(family).expression;
        Rational previous = maximize(expr, LocalityClass::Local).value;
        for (std::size_t k = 1; k < kChain.size(); ++k) {
            const Rational v = maximize(expr, kChain[k]).value;
            EXPECT_LE(previous, v) << "family " << family << " " << to_string(kChain[k]);
            previous = v;
        }
    }
}

TEST(Ns2Forms, HullMatchesConstraints) {
    int members = 0;
    for (std::uint64_t i = 0; i < 50; ++i) {
        auto rng = task_rng(50, i);
        // Noisy quantum points rarely leave NS2, so every other sample is a noisy parity behavior.
        const Behavior b = i % 2 == 0 ? testing::random_noisy_quantum_behavior(rng)
                                      : mix(corr1_target(), Behavior::uniform(),
                                            make_rational(std::uniform_int_distribution<long>(4, 16)(rng), 16));
        const auto hull = classify(b, LocalityClass::NS2);
        const auto constraints = classify(b, LocalityClass::NS2, Formulation::NS2Constraints);
        EXPECT_EQ(hull.member, constraints.member) << "behavior " << i;
        EXPECT_EQ(verify_certificate(b, constraints), "") << "behavior " << i;
        members += hull.member;
    }
    // Both verdicts occur in the sample.
    EXPECT_GT(members, 0);
    EXPECT_LT(members, 50);
}

TEST(Ns2Forms, GeneratorsAreExtremal) {
    const auto report = ns2_extremality();
    EXPECT_EQ(report.points, 160u);
    EXPECT_EQ(report.extremal, 160u);
    EXPECT_TRUE(report.non_extremal.empty());
}

TEST(Threshold, UniformTarget) {
    const auto r = threshold(Behavior::uniform(), LocalityClass::NS2);
    EXPECT_EQ(r.p, Rational(1));
}

TEST(Threshold, ExactBoundaryOnParityBehavior) {
    const Behavior b = corr1_target();
    const auto r = threshold(b, LocalityClass::NS2);
    ASSERT_LT(r.p, Rational(1));
    EXPECT_TRUE(classify(mix(b, Behavior::uniform(), r.p), LocalityClass::NS2).member);
    EXPECT_FALSE(classify(mix(b, Behavior::uniform(), Rational(r.p + make_rational(1, 1000000))), LocalityClass::NS2).member);
    // The returned functional is tight at the boundary.
    const Behavior edge = mix(b, Behavior::uniform(), r.p);
    Rational v(0);
    for (std::size_t e = 0; e < kEntries; ++e) v += r.functional.coefficients[e] * edge[e];
    EXPECT_EQ(v, r.functional.offset);
    EXPECT_EQ(threshold(b, LocalityClass::T2).p, Rational(1));
}

TEST(Threshold, DoubleBoundaryOnQuantumBehavior) {
    const RealBehavior b = ghz_oldineq_behavior();
    const RealBehavior u = RealBehavior::uniform();
    for (LocalityClass cls : {LocalityClass::NS2, LocalityClass::T2}) {
        const auto r = threshold(b, cls);
        ASSERT_LT(r.p, 1.0);
        EXPECT_TRUE(classify(mix(b, u, r.p), cls).member) << to_string(cls);
        EXPECT_FALSE(classify(mix(b, u, r.p + 1e-6), cls).member) << to_string(cls);
    }
}

TEST(T2K2, SeparationSearch) {
    // A functional whose K2 maximum exceeds its T2 maximum yields a K2 behavior outside T2.
    std::vector<int> separating;
    for (const auto& entry : Catalog::standard().entries()) {
        const auto& f = entry.expression.probabilities();
        const auto t2 = lp_maximum(f, LocalityClass::T2), k2 = lp_maximum(f, LocalityClass::K2);
        ASSERT_LE(t2.value, k2.value) << "family " << entry.family;
        if (t2.value == k2.value) continue;
        separating.push_back(entry.family);
        const auto in_k2 = classify(k2.maximizer, LocalityClass::K2), in_t2 = classify(k2.maximizer, LocalityClass::T2);
        EXPECT_TRUE(in_k2.member);
        EXPECT_FALSE(in_t2.member);
        EXPECT_EQ(verify_certificate(k2.maximizer, in_k2), "");
        EXPECT_EQ(verify_certificate(k2.maximizer, in_t2), "");
        std::cout << "family " << entry.family << ": T2 max " << to_string(t2.value) << ", K2 max " << to_string(k2.value)
                  << "\n";
    }
    std::cout << separating.size() << " catalog families separate T2 from K2\n";
    EXPECT_FALSE(separating.empty());
}

TEST(T2K2, K2IsStrictlyInsideS2) {
    const auto& expr = Catalog::standard().at(6).expression;
    const auto k2 = maximize(expr, LocalityClass::K2);
    EXPECT_LT(k2.value, make_rational(73, 7));
    EXPECT_FALSE(classify(maximize(expr, LocalityClass::S2).maximizer, LocalityClass::K2).member);
}

TEST(Chain, NoInversionsOnRandomBehaviors) {
    for (std::uint64_t i = 0; i < 25; ++i) {
        auto rng = task_rng(99, i);
        // Odd samples sit between NS2 and T2 for high visibility.
        const Behavior b = i % 2 == 0 ? testing::random_noisy_quantum_behavior(rng)
                                      : mix(corr1_target(), Behavior::uniform(),
                                            make_rational(std::uniform_int_distribution<long>(4, 16)(rng), 16));
        bool previous = false;
        for (LocalityClass cls : kChain) {
            const auto r = classify(b, cls);
            EXPECT_FALSE(previous && !r.member) << "behavior " << i << " " << to_string(cls);
            EXPECT_EQ(verify_certificate(b, r), "");
            previous = r.member;
        }
    }
}

}  // namespace
}  // namespace trinl
