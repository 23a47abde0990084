// Copyright 2026 The qutrit-ent Authors
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


#include "qutrit_ent/slocc.h"

#include "gtest/gtest.h"

#include "qutrit_ent/measure.h"
#include "qutrit_ent/patterns.h"
#include "test_util.h"

using namespace qutrit_ent;
using qutrit_ent_test::random_gaussian;
using qutrit_ent_test::ray_distance;

namespace {

PureState uniform(std::string_view cells) {
    std::vector<TermSpec> terms;
    for (auto cell : SupportPattern::parse(cells).cells()) {
        terms.push_back({cell, 1, 0});
    }
    return build_state(terms);
}

/// Random state of the requested Schmidt rank.
PureState random_rank_state(int rank, std::mt19937_64 &rng) {
    Mat3 a = random_gaussian(rng);
    Mat3 b = random_gaussian(rng);
    Mat3 d = Mat3::Zero();
    for (int i = 0; i < rank; i++) {
        d(i, i) = 1;
    }
    return PureState::from_coefficients(a * d * b);
}

/// Soundness oracle: apply the witness with apply_local and compare rays.
double reapplied_distance(const PureState &psi, const PureState &phi, const ILOWitness &w) {
    auto mapped = apply_local(psi, w.qa, w.qb);
    return ray_distance(mapped.coeff(), phi.coeff());
}

}  // namespace

TEST(slocc, schmidt_rank_examples) {
    ASSERT_EQ(schmidt_rank(uniform("U1")), 1);
    ASSERT_EQ(schmidt_rank(uniform("U1,V2")), 2);
    ASSERT_EQ(schmidt_rank(uniform("U1,U2,V1,V3,W2,W3")), 3);
    ASSERT_EQ(schmidt_rank(uniform("U1,U2,V1,V2")), 1);
}

TEST(slocc, class_descriptors) {
    ASSERT_EQ(slocc_class(uniform("U1,V2")).descriptor, RankDescriptor::Rank2);
    ASSERT_EQ(slocc_class(uniform("U1,V2,W3")).descriptor, RankDescriptor::Rank3);
    ASSERT_EQ(slocc_class(uniform("V3")).descriptor, RankDescriptor::Product);
    ASSERT_EQ(format_descriptor(RankDescriptor::Product), "product");
    ASSERT_EQ(format_descriptor(RankDescriptor::Rank2), "rank2_class");
    ASSERT_EQ(format_descriptor(RankDescriptor::Rank3), "rank3_class");
}

TEST(slocc, line_state_witness_to_type1) {
    std::vector<TermSpec> terms{{parse_cell("U1"), 0.5, 0}, {parse_cell("U2"), 0.5, 0}, {parse_cell("V3"), 1 / std::sqrt(2.0), 0}};
    auto psi = build_state(terms);
    auto phi = uniform("U1,V2");
    auto w = ilo_witness(psi, phi);
    ASSERT_TRUE(w.has_value());
    ASSERT_LT(w->residual, 1e-8);
    ASSERT_LT(reapplied_distance(psi, phi, *w), 1e-8);
    ASSERT_GT(smallest_singular_value(w->qa), 1e-10);
    ASSERT_GT(smallest_singular_value(w->qb), 1e-10);
}

TEST(slocc, type2_and_type3_are_equivalent) {
    auto t2 = uniform("U1,V2,W3");
    auto t3 = uniform("U1,U2,V1,V3,W2,W3");
    auto w = ilo_witness(t2, t3);
    ASSERT_TRUE(w.has_value());
    ASSERT_LT(w->residual, 1e-8);
    ASSERT_LT(reapplied_distance(t2, t3, *w), 1e-8);
}

TEST(slocc, unequal_ranks_have_no_witness) {
    ASSERT_FALSE(ilo_witness(uniform("U1"), uniform("U1,V2")).has_value());
    ASSERT_FALSE(ilo_witness(uniform("U1,V2"), uniform("U1,V2,W3")).has_value());
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> pick(1, 3);
    int pairs = 0;
    while (pairs < 500) {
        int ra = pick(rng), rb = pick(rng);
        if (ra == rb) {
            continue;
        }
        ASSERT_FALSE(ilo_witness(random_rank_state(ra, rng), random_rank_state(rb, rng)).has_value());
        pairs++;
    }
}

TEST(slocc, witness_complete_and_sound_for_equal_ranks) {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 1000; trial++) {
        int rank = 1 + trial % 3;
        auto psi = random_rank_state(rank, rng);
        auto phi = random_rank_state(rank, rng);
        auto w = ilo_witness(psi, phi);
        ASSERT_TRUE(w.has_value()) << "trial " << trial;
        ASSERT_LT(w->residual, 1e-8) << "trial " << trial;
        ASSERT_LT(reapplied_distance(psi, phi, *w), 1e-8) << "trial " << trial;
    }
}

TEST(slocc, identical_states_give_identity_like_witness) {
    auto s = random_state(SupportPattern::from_mask(0x1FF), 3);
    auto w = ilo_witness(s, s);
    ASSERT_TRUE(w.has_value());
    ASSERT_LT(w->residual, 1e-12);
    ASSERT_NEAR(w->scale, 1, 1e-12);
}

TEST(slocc, rank_invariant_under_invertible_maps) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; trial++) {
        int rank = 1 + trial % 3;
        auto s = random_rank_state(rank, rng);
        auto moved = apply_local(s, random_gaussian(rng), random_gaussian(rng));
        ASSERT_EQ(schmidt_rank(s), rank);
        ASSERT_EQ(schmidt_rank(moved), rank);
    }
}

TEST(slocc, class_equality_iff_witness) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> pick(1, 3);
    for (int trial = 0; trial < 300; trial++) {
        auto a = random_rank_state(pick(rng), rng);
        auto b = random_rank_state(pick(rng), rng);
        bool same = slocc_class(a).rank == slocc_class(b).rank;
        ASSERT_EQ(same, ilo_witness(a, b).has_value());
    }
}

TEST(slocc, witness_residual_ignores_global_phase) {
    auto s = random_state(SupportPattern::from_mask(0x1FF), 4);
    auto rotated = PureState::from_coefficients(s.coeff() * std::polar(1.0, 1.234));
    ASSERT_LT(witness_residual(s, rotated, Mat3::Identity(), Mat3::Identity()), 1e-14);
    auto other = random_state(SupportPattern::from_mask(0x1FF), 5);
    ASSERT_GT(witness_residual(s, other, Mat3::Identity(), Mat3::Identity()), 1e-3);
}

TEST(slocc, lu_parameter_count) {
    ASSERT_EQ(count_lu_parameters(2), 11);
    ASSERT_EQ(count_lu_parameters(2, 3), 11);
    ASSERT_EQ(count_lu_parameters(1, 3), 2);
    ASSERT_EQ(count_lu_parameters(2, 8), 1);
    ASSERT_EQ(count_lu_parameters(3, 3), 44);
    ASSERT_THROW(count_lu_parameters(0), std::invalid_argument);
    ASSERT_THROW(count_lu_parameters(2, 0), std::invalid_argument);
}
