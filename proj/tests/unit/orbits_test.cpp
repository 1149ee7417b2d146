// Copyright 2026 The slocc224 Authors
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

#include <cmath>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "slocc/errors.hpp"
#include "slocc/invariants.hpp"
#include "slocc/orbits.hpp"
#include "slocc/properties.hpp"
#include "test_support.hpp"

namespace slocc {
namespace {

using testing::Diag;
using testing::MatrixNear;
using testing::TwoBellPairs;

const double kS = 1.0 / std::sqrt(2.0);
const Complex kI(0.0, 1.0);

PureState MinorKet() {
    return PureState::from_terms(4, {{{0, 0, 0}, 1.0}, {{0, 1, 1}, 1.0}, {{1, 1, 2}, 1.0}});
}

const WitnessStep& FirstStepOfKind(const OrderEdge& e) { return e.steps.at(e.from == SloccClass::MinorRank3 ? 1 : 0); }

TEST(Representative, Examples) {
    const PureState generic = representative(SloccClass::Generic);
    EXPECT_NEAR(std::abs(generic.at(0, 0, 0) - 0.5), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(generic.at(1, 1, 3) - 0.5), 0.0, 1e-15);
    const PureState major = representative(SloccClass::MajorRank3);
    // |psi|^2 = 1 + 1/2 + 1/2 + 1 = 3 before normalization.
    EXPECT_NEAR(std::abs(major.at(0, 1, 1) - kS / std::sqrt(3.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(major.at(1, 1, 2) - 1.0 / std::sqrt(3.0)), 0.0, 1e-15);
    const PureState w = representative(SloccClass::W);
    EXPECT_NEAR(std::abs(w.at(0, 0, 1) - 1.0 / std::sqrt(3.0)), 0.0, 1e-15);
    for (SloccClass c : kAllClasses) {
        EXPECT_NEAR(representative(c).norm(), 1.0, 1e-15);
        EXPECT_EQ(representative(c).n(), 4);
    }
}

TEST(LocalOpTest, InvertibilityFlags) {
    LocalOp op = LocalOp::identity(4);
    EXPECT_TRUE(op.is_invertible());
    op.m3 = Diag({1.0, 1.0, 1.0, 0.0});
    const auto flags = op.invertible();
    EXPECT_TRUE(flags[0]);
    EXPECT_TRUE(flags[1]);
    EXPECT_FALSE(flags[2]);
    EXPECT_FALSE(LocalOp::on_clare(ComplexMatrix::Ones(2, 4)).is_invertible());
}

TEST(ApplyLocal, Identity) {
    std::mt19937_64 rng(61);
    const PureState psi = random_gaussian_state(5, rng);
    EXPECT_EQ(apply_local(psi, LocalOp::identity(5)), psi);
}

TEST(ApplyLocal, MatchesPartyByPartyApplication) {
    std::mt19937_64 rng(62);
    for (int t = 0; t < 100; ++t) {
        const PureState psi = random_gaussian_state(3, rng);
        const LocalOp op{random_gaussian(2, 2, rng), random_gaussian(2, 2, rng), random_gaussian(3, 3, rng)};
        const PureState a = apply_local(psi, op);
        const PureState b = apply_on_party(apply_on_party(apply_on_party(psi, 1, op.m1), 2, op.m2), 3, op.m3);
        ASSERT_TRUE(MatrixNear(flatten(a), flatten(b), 1e-10 * flatten(a).norm()));
        ASSERT_TRUE(MatrixNear(flatten(a), kron(op.m1, op.m2) * flatten(psi) * op.m3.transpose(), 1e-10 * flatten(a).norm()));
    }
}

TEST(ApplyLocal, ShapeErrors) {
    EXPECT_THROW(apply_local(TwoBellPairs(), LocalOp::identity(3)), ShapeError);
    LocalOp bad = LocalOp::identity(4);
    bad.m1 = ComplexMatrix::Identity(3, 3);
    EXPECT_THROW(apply_local(TwoBellPairs(), bad), ShapeError);
}

TEST(ApplyLocal, RankDeficientClareOnGenericGivesRankThree) {
    const PureState image =
        apply_local(representative(SloccClass::Generic), LocalOp::on_clare(Diag({1.0, 1.0, 1.0, 0.0})));
    const SloccClass c = classify(image).cls;
    EXPECT_TRUE(c == SloccClass::MajorRank3 || c == SloccClass::MinorRank3);
    EXPECT_EQ(c, SloccClass::MinorRank3);
}

TEST(ApplyLocal, InvertibleOpKeepsGhz) {
    std::mt19937_64 rng(63);
    EXPECT_EQ(classify(apply_local(representative(SloccClass::GHZ), random_invertible_op(4, rng))).cls,
              SloccClass::GHZ);
}

TEST(OrbitSample, ClassAndDeterminism) {
    for (SloccClass c : kAllClasses) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const PureState s = random_orbit_sample(c, seed);
            ASSERT_EQ(classify(s).cls, c);
        }
        EXPECT_EQ(random_orbit_sample(c, 7), random_orbit_sample(c, 7));
    }
    EXPECT_EQ(local_ranks(random_orbit_sample(SloccClass::S, 3)), (LocalRanks{1, 1, 1}));
    EXPECT_FALSE(random_orbit_sample(SloccClass::W, 1) == random_orbit_sample(SloccClass::W, 2));
}

TEST(Witnesses, EveryDirectEdgeLandsOnTheTargetRepresentative) {
    EXPECT_EQ(direct_edges().size(), 15u);
    for (const OrderEdge& e : direct_edges()) {
        const PureState image = apply_local(representative(e.from), e.witness);
        EXPECT_EQ(classify(image).cls, e.to) << to_string(e.from) << " -> " << to_string(e.to);
        EXPECT_NEAR(fidelity(image, representative(e.to)), 1.0, 1e-12) << to_string(e.from) << " -> " << to_string(e.to);
        EXPECT_FALSE(e.witness.is_invertible());
        EXPECT_FALSE(e.steps.empty());
    }
}

TEST(Witnesses, MajorToWUsesThePrintedPovmElement) {
    const auto e = conversion_witness(SloccClass::MajorRank3, SloccClass::W);
    ASSERT_TRUE(e.has_value());
    ComplexMatrix printed = ComplexMatrix::Zero(4, 4);
    printed(0, 0) = 1.0;
    printed(1, 1) = 1.0;
    printed(2, 1) = kI;
    const WitnessStep& step = e->steps.front();
    EXPECT_EQ(step.op.m3, printed);
    EXPECT_EQ(step.op.m1, ComplexMatrix::Identity(2, 2));
    EXPECT_EQ(step.op.m2, ComplexMatrix::Identity(2, 2));
    EXPECT_EQ(classify(apply_local(representative(SloccClass::MajorRank3), step.op)).cls, SloccClass::W);
    // POVM element: M^dagger M <= I.
    const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(printed.adjoint() * printed);
    EXPECT_LE(eig.eigenvalues().maxCoeff(), 2.0 + 1e-12);
}

TEST(Witnesses, ProjectionsAreVerbatim) {
    struct Case {
        SloccClass from, to;
        ComplexMatrix projector;
    };
    ComplexMatrix plus12 = ComplexMatrix::Zero(4, 4);
    plus12(0, 0) = 1.0;
    plus12.block(1, 1, 2, 2).setConstant(0.5);
    const std::vector<Case> cases = {
        {SloccClass::MajorRank3, SloccClass::GHZ, Diag({1.0, 0.0, 1.0, 0.0})},
        {SloccClass::MinorRank3, SloccClass::GHZ, Diag({0.0, 1.0, 1.0, 0.0})},
        {SloccClass::MinorRank3, SloccClass::W, plus12},
    };
    for (const Case& c : cases) {
        const auto e = conversion_witness(c.from, c.to);
        ASSERT_TRUE(e.has_value());
        const WitnessStep& step = FirstStepOfKind(*e);
        EXPECT_EQ(step.op.m3, c.projector) << step.description;
        EXPECT_TRUE(MatrixNear(step.op.m3 * step.op.m3, step.op.m3, 1e-15));
    }
    // Verbatim projections act on the major representative and on the
    // minor class's R-normal form.
    EXPECT_EQ(classify(apply_local(representative(SloccClass::MajorRank3), LocalOp::on_clare(cases[0].projector))).cls,
              SloccClass::GHZ);
    EXPECT_EQ(classify(apply_local(minor_normal_form(), LocalOp::on_clare(cases[1].projector))).cls, SloccClass::GHZ);
    EXPECT_EQ(classify(apply_local(minor_normal_form(), LocalOp::on_clare(cases[2].projector))).cls, SloccClass::W);
}

TEST(Witnesses, ProjectionsOnThePrintedMinorKetMiss) {
    // Recorded conflict: on |000> + |011> + |112> these projections give other classes.
    EXPECT_EQ(classify(apply_local(MinorKet(), LocalOp::on_clare(Diag({0.0, 1.0, 1.0, 0.0})))).cls, SloccClass::B2);
}

TEST(MinorNormalForm, RMatrixAndConversion) {
    ComplexMatrix r = ComplexMatrix::Zero(4, 4);
    r(0, 0) = 1.0;
    r(1, 1) = 1.0;
    r(2, 2) = 1.0;
    r(3, 0) = kI;
    EXPECT_TRUE(MatrixNear(r_matrix(minor_normal_form()), r, 1e-15));
    EXPECT_EQ(classify(minor_normal_form()).cls, SloccClass::MinorRank3);
    const LocalOp n = minor_to_normal_form();
    EXPECT_TRUE(n.is_invertible());
    EXPECT_TRUE(MatrixNear(flatten(apply_local(MinorKet(), n)), flatten(minor_normal_form()), 1e-15));
}

TEST(Witnesses, Composites) {
    const auto e = conversion_witness(SloccClass::Generic, SloccClass::S);
    ASSERT_TRUE(e.has_value());
    EXPECT_EQ(classify(apply_local(representative(SloccClass::Generic), e->witness)).cls, SloccClass::S);
    EXPECT_GE(e->steps.size(), 4u);
    const auto identity = conversion_witness(SloccClass::W, SloccClass::W);
    ASSERT_TRUE(identity.has_value());
    EXPECT_TRUE(identity->witness.is_invertible());
    EXPECT_FALSE(conversion_witness(SloccClass::W, SloccClass::Generic).has_value());
    EXPECT_FALSE(conversion_witness(SloccClass::MajorRank3, SloccClass::MinorRank3).has_value());
}

TEST(Witnesses, AllReachablePairsClassifyExactly) {
    int reachable = 0;
    for (SloccClass a : kAllClasses) {
        for (SloccClass b : kAllClasses) {
            const auto e = conversion_witness(a, b);
            if (!e) {
                continue;
            }
            ++reachable;
            EXPECT_EQ(classify(apply_local(representative(a), e->witness)).cls, b)
                << to_string(a) << " -> " << to_string(b);
        }
    }
    EXPECT_EQ(reachable, 9 + 15 + 16);
}

TEST(Dominance, Examples) {
    EXPECT_TRUE(dominates(SloccClass::Generic, SloccClass::S));
    EXPECT_FALSE(dominates(SloccClass::GHZ, SloccClass::W));
    EXPECT_FALSE(dominates(SloccClass::W, SloccClass::GHZ));
    for (SloccClass c : kAllClasses) {
        EXPECT_TRUE(dominates(c, c));
    }
}

TEST(Dominance, ImpliesNecessaryConditionAndIsAntisymmetric) {
    for (SloccClass a : kAllClasses) {
        for (SloccClass b : kAllClasses) {
            if (dominates(a, b)) {
                EXPECT_TRUE(necessary_condition(a, b)) << to_string(a) << " " << to_string(b);
                if (dominates(b, a)) {
                    EXPECT_EQ(a, b);
                }
            }
        }
    }
}

TEST(NecessaryCondition, Examples) {
    EXPECT_EQ(dominance_signature(SloccClass::Generic), (std::array<int, 4>{4, 4, 2, 2}));
    EXPECT_EQ(dominance_signature(SloccClass::MinorRank3), (std::array<int, 4>{3, 2, 2, 2}));
    EXPECT_EQ(dominance_signature(SloccClass::B1), (std::array<int, 4>{2, 0, 1, 2}));
    EXPECT_EQ(dominance_signature(SloccClass::B2), (std::array<int, 4>{2, 0, 2, 1}));
    EXPECT_TRUE(necessary_condition(SloccClass::Generic, SloccClass::MinorRank3));
    EXPECT_FALSE(necessary_condition(SloccClass::W, SloccClass::GHZ));
    EXPECT_FALSE(necessary_condition(SloccClass::B1, SloccClass::B2));
    EXPECT_FALSE(necessary_condition(SloccClass::B2, SloccClass::B1));
    EXPECT_TRUE(necessary_condition(SloccClass::MajorRank3, SloccClass::MinorRank3));
}

TEST(Grade, FiveLevels) {
    EXPECT_EQ(grade(SloccClass::Generic), 5);
    EXPECT_EQ(grade(SloccClass::MajorRank3), 4);
    EXPECT_EQ(grade(SloccClass::MinorRank3), 4);
    EXPECT_EQ(grade(SloccClass::GHZ), 3);
    EXPECT_EQ(grade(SloccClass::W), 3);
    EXPECT_EQ(grade(SloccClass::B1), 2);
    EXPECT_EQ(grade(SloccClass::B2), 2);
    EXPECT_EQ(grade(SloccClass::B3), 2);
    EXPECT_EQ(grade(SloccClass::S), 1);
}

TEST(Monotonicity, NoninvertibleOpsNeverRaiseInvariants) {
    std::mt19937_64 rng(64);
    for (int t = 0; t < 1000; ++t) {
        const SloccClass c = kAllClasses[static_cast<std::size_t>(t) % kAllClasses.size()];
        const PureState psi = random_orbit_sample(c, 2000 + t);
        const LocalOp op = random_noninvertible_op(psi, rng);
        ASSERT_FALSE(op.is_invertible());
        const std::array<int, 4> before = {rank_pair(psi).rank_R, rank_pair(psi).rank_RTR, local_ranks(psi).r1,
                                           local_ranks(psi).r2};
        const PureState image = apply_local(psi, op);
        const std::array<int, 4> after = {rank_pair(image).rank_R, rank_pair(image).rank_RTR,
                                          local_ranks(image).r1, local_ranks(image).r2};
        for (int k = 0; k < 4; ++k) {
            ASSERT_LE(after[k], before[k]) << "trial " << t << " component " << k;
        }
    }
}

TEST(MaximallyEntangled, Examples) {
    EXPECT_TRUE(is_maximally_entangled_rep(TwoBellPairs().normalized()));
    EXPECT_TRUE(is_maximally_entangled_rep(representative(SloccClass::GHZ)));
    EXPECT_FALSE(is_maximally_entangled_rep(PureState::from_terms(4, {{{0, 0, 0}, 1.0}, {{1, 1, 1}, 2.0}}).normalized()));
    EXPECT_FALSE(is_maximally_entangled_rep(representative(SloccClass::W)));
}

TEST(DualTangency, Examples) {
    const PureState dual = PureState::from_terms(4, {{{0, 1, 1}, 1.0}, {{1, 0, 2}, 1.0}, {{1, 1, 3}, 1.0}});
    EXPECT_TRUE(dual_tangency_at_origin(dual));
    EXPECT_EQ(classify(dual).cls, SloccClass::MinorRank3);
    EXPECT_FALSE(dual_tangency_at_origin(PureState::from_terms(4, {{{0, 0, 0}, 1.0}})));
    EXPECT_FALSE(dual_tangency_at_origin(PureState::from_terms(4, {{{0, 0, 2}, 1.0}, {{1, 1, 1}, 1.0}})));
}

TEST(DualTangency, RandomStatesOnTheHyperplaneAreMinor) {
    std::mt19937_64 rng(65);
    for (int t = 0; t < 500; ++t) {
        const PureState psi = random_dual_pattern_state(rng);
        ASSERT_TRUE(dual_tangency_at_origin(psi));
        ASSERT_EQ(classify(psi).cls, SloccClass::MinorRank3);
    }
}

TEST(OrderDot, NineNodesFiveGrades) {
    const std::string dot = order_dot();
    EXPECT_EQ(dot.rfind("digraph", 0), 0u);
    std::size_t nodes = 0, groups = 0, edges = 0;
    for (std::size_t p = dot.find("[label="); p != std::string::npos; p = dot.find("[label=", p + 1)) {
        ++nodes;
    }
    for (std::size_t p = dot.find("rank=same"); p != std::string::npos; p = dot.find("rank=same", p + 1)) {
        ++groups;
    }
    for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) {
        ++edges;
    }
    EXPECT_EQ(nodes, 9u);
    EXPECT_EQ(groups, 5u);
    EXPECT_EQ(edges, 15u);
    EXPECT_NE(dot.find("\"GHZ\\n(2,2,2)\""), std::string::npos);
    EXPECT_NE(dot.find("Clare POVM element"), std::string::npos);
}

}  // namespace
}  // namespace slocc
