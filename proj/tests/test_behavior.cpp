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

#include "support.hpp"
#include "trinl/behavior.hpp"
#include "trinl/behavior_io.hpp"
#include "trinl/fixtures.hpp"
#include "trinl/vertices.hpp"

namespace trinl {
namespace {

TEST(Behavior, UniformIsNormalized) {
    EXPECT_TRUE(normalize_check(Behavior::uniform()));
    EXPECT_TRUE(normalize_check(RealBehavior::uniform()));
}

TEST(Behavior, NegativeEntryFailsNormalization) {
    RealBehavior b = RealBehavior::uniform();
    b[0] = -0.1;
    b[1] += 0.225;
    EXPECT_FALSE(normalize_check(b));
}

TEST(Behavior, RowSumMustBeOne) {
    Behavior b = Behavior::uniform();
    b[9] += make_rational(1, 100);
    EXPECT_FALSE(normalize_check(b));
}

TEST(Behavior, MixtureFixtureIsNormalized) {
    EXPECT_TRUE(normalize_check(s2_mixture()));
}

TEST(Behavior, MarginalOfUniform) {
    for (std::size_t in = 0; in < 8; ++in) {
        auto m = marginal(Behavior::uniform(), Party::A, triple_of(in));
        EXPECT_EQ(m[0], make_rational(1, 2));
        EXPECT_EQ(m[1], make_rational(1, 2));
    }
}

TEST(Behavior, MarginalOfConstantStrategy) {
    // Table 0 outputs 0 for both inputs.
    const Behavior b = DeterministicStrategy::local(0, 3, 1).behavior();
    for (std::size_t in = 0; in < 8; ++in) {
        auto m = marginal(b, Party::A, triple_of(in));
        EXPECT_EQ(m[0], Rational(1));
        EXPECT_EQ(m[1], Rational(0));
    }
}

TEST(Behavior, MixtureBobMarginal) {
    // Expectation of the 0/1 outcome of Bob is (1+Y)/4.
    const Behavior b = s2_mixture();
    for (int y = 0; y < 2; ++y) {
        for (int x = 0; x < 2; ++x) {
            for (int z = 0; z < 2; ++z) {
                EXPECT_EQ(marginal(b, Party::B, {x, y, z})[1], make_rational(1 + y, 4));
            }
        }
    }
    EXPECT_EQ(marginal(b, Party::B, {0, 0, 0})[0], make_rational(3, 4));
}

TEST(Behavior, MarginalRejectsBadParty) {
    EXPECT_THROW(marginal(Behavior::uniform(), static_cast<Party>(3), {0, 0, 0}), InvariantViolation);
}

TEST(Behavior, NoSignallingUniform) {
    EXPECT_TRUE(is_no_signalling(Behavior::uniform()));
}

TEST(Behavior, OneWayStrategyIsSignalling) {
    // Bob outputs X: his marginal depends on Alice's input.
    const OrderingDirection a_to_b{Bipartition::AB_C, Direction::FirstBeforeSecond};
    // Sender table 0: a = 0. Receiver table over (x, y) with b = x: bit (x*2+y) set when x = 1.
    const Behavior b = DeterministicStrategy::one_way(a_to_b, 0, 0b1100, 2).behavior();
    const auto report = no_signalling_report(b);
    EXPECT_FALSE(report.no_signalling);
    ASSERT_FALSE(report.violations.empty());
    bool names_bob = false;
    for (const auto& v : report.violations) names_bob = names_bob || v.find('B') != std::string::npos;
    EXPECT_TRUE(names_bob);
}

TEST(Behavior, MixtureIsNoSignalling) {
    EXPECT_TRUE(is_no_signalling(s2_mixture()));
}

TEST(Behavior, ZeroCorrelatorsGiveUniform) {
    CorrelatorForm<Rational> c;
    for (auto& v : c.values) v = 0;
    c[0] = 1;
    EXPECT_EQ(from_correlators(c), Behavior::uniform());
}

TEST(Behavior, CorrelatorRoundTrip) {
    for (std::uint64_t i = 0; i < 30; ++i) {
        auto rng = task_rng(3, i);
        const Behavior b = testing::random_ns_behavior(rng);
        ASSERT_TRUE(is_no_signalling(b));
        EXPECT_EQ(from_correlators(to_correlators(b)), b);
    }
}

TEST(Behavior, SignallingInputHasNoCorrelatorForm) {
    const Behavior b = DeterministicStrategy::unrestricted(Bipartition::AB_C, 0b0110, 0b1010, 1).behavior();
    EXPECT_FALSE(is_no_signalling(b));
    EXPECT_THROW(to_correlators(b), SignallingInput);
}

TEST(Behavior, NegativeCorrelatorsRejected) {
    CorrelatorForm<Rational> c;
    for (auto& v : c.values) v = 0;
    c[0] = 1;
    c[term_index({0, -1, -1})] = 2;
    EXPECT_THROW(from_correlators(c), InvalidCorrelators);
}

TEST(Behavior, NoSignallingMatchesRoundTrip) {
    for (std::uint64_t i = 0; i < 20; ++i) {
        auto rng = task_rng(5, i);
        const auto& gens = s2_generators();
        const Behavior& g = gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)].point;
        const Behavior b = mix(g, Behavior::uniform(), make_rational(1, 2));
        bool round_trips = false;
        try {
            round_trips = from_correlators(to_correlators(b)) == b;
        } catch (const SignallingInput&) {
        }
        EXPECT_EQ(round_trips, is_no_signalling(b));
    }
}

TEST(Behavior, MixIdentities) {
    const Behavior b = corr1_target();
    EXPECT_EQ(mix(b, b, make_rational(3, 10)), b);
    EXPECT_EQ(mix(s2_mixture(), Behavior::uniform(), Rational(0)), Behavior::uniform());
    EXPECT_THROW(mix(b, b, make_rational(3, 2)), InvariantViolation);
}

TEST(Behavior, NoiseScalesCorrelators) {
    const Behavior b = corr1_target();
    const Rational p(2, 7);
    const auto c = to_correlators(b), mixed = to_correlators(mix(b, Behavior::uniform(), p));
    EXPECT_EQ(mixed[0], Rational(1));
    for (std::size_t t = 1; t < kCorrelatorTerms; ++t) EXPECT_EQ(mixed[t], p * c[t]);
}

TEST(Behavior, TermLabels) {
    for (std::size_t t = 0; t < kCorrelatorTerms; ++t) EXPECT_EQ(parse_term_label(term_label(t)), t);
    EXPECT_EQ(term_label(0), "1");
    EXPECT_EQ(term_label(term_index({0, 1, 1})), "A0B1C1");
}

TEST(BehaviorFile, RoundTrip) {
    const auto dir = std::filesystem::temp_directory_path() / "trinl_behavior_test";
    std::filesystem::create_directories(dir);
    write_behavior_file(dir / "r.json", s2_mixture());
    EXPECT_EQ(read_rational_behavior_file(dir / "r.json"), s2_mixture());
    RealBehavior d = to_real(corr1_target());
    write_behavior_file(dir / "d.json", d);
    EXPECT_EQ(std::get<RealBehavior>(read_behavior_file(dir / "d.json")), d);
    std::filesystem::remove_all(dir);
}

TEST(BehaviorFile, RejectsWrongLength) {
    EXPECT_THROW(behavior_from_json(R"({"scenario":[3,2,2],"mode":"double","p":[0.5,0.5]})"), FormatError);
    EXPECT_THROW(behavior_from_json("not json"), FormatError);
}

}  // namespace
}  // namespace trinl
