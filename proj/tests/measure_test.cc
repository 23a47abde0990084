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


#include "qutrit_ent/measure.h"

#include <numbers>

#include "gtest/gtest.h"

#include "test_util.h"

using namespace qutrit_ent;
using qutrit_ent_test::hermitian_eigenvalues;
using qutrit_ent_test::oracle_eta;
using qutrit_ent_test::random_gaussian;
using qutrit_ent_test::random_unitary;

namespace {

PureState uniform(std::string_view cells) {
    std::vector<TermSpec> terms;
    for (auto cell : SupportPattern::parse(cells).cells()) {
        terms.push_back({cell, 1, 0});
    }
    return build_state(terms);
}

const double kLog3of2 = std::log(2.0) / std::log(3.0);

}  // namespace

TEST(measure, cubic_oracle_self_check) {
    Mat3 d = Mat3::Zero();
    d(0, 0) = 0.5;
    d(1, 1) = 0.2;
    d(2, 2) = 0.3;
    auto e = hermitian_eigenvalues(d);
    ASSERT_NEAR(e[0], 0.5, 1e-14);
    ASSERT_NEAR(e[1], 0.3, 1e-14);
    ASSERT_NEAR(e[2], 0.2, 1e-14);
    std::mt19937_64 rng(11);
    Mat3 u = random_unitary(rng);
    auto rotated = hermitian_eigenvalues(u * d * u.adjoint());
    for (int i = 0; i < 3; i++) {
        ASSERT_NEAR(rotated[i], e[i], 1e-13);
    }
}

TEST(measure, canonical_form_values) {
    ASSERT_NEAR(eta(uniform("U1,V2")), 0.63093, 1e-5);
    ASSERT_NEAR(eta(uniform("U1,V2")), kLog3of2, 1e-14);
    ASSERT_NEAR(eta(uniform("U1,V2,W3")), 1.0, 1e-12);
    ASSERT_NEAR(eta(uniform("U1,U2,V1,V3,W2,W3")), 0.78969, 1e-5);
}

TEST(measure, six_term_spectrum_matches_oracle) {
    auto s = uniform("U1,U2,V1,V3,W2,W3");
    auto lib = schmidt(s).sigma_sq();
    Mat3 rho = s.coeff() * s.coeff().adjoint();
    auto oracle = hermitian_eigenvalues(rho);
    std::array<double, 3> expected{2.0 / 3, 1.0 / 6, 1.0 / 6};
    for (int i = 0; i < 3; i++) {
        ASSERT_NEAR(lib[i], expected[i], 1e-9);
        ASSERT_NEAR(oracle[i], expected[i], 1e-9);
    }
    ASSERT_NEAR(eta(s), qutrit_ent_test::entropy3(oracle), 1e-12);
}

TEST(measure, product_states_have_zero_eta) {
    auto p = uniform("U1");
    ASSERT_EQ(eta(p), 0.0);
    auto row = uniform("U1,U2,U3");
    ASSERT_EQ(eta(row), 0.0);
    auto col = uniform("U2,V2,W2");
    ASSERT_EQ(eta(col), 0.0);
    ASSERT_EQ(schmidt(row).rank, 1);
}

TEST(measure, reduced_density_is_a_state) {
    auto s = random_state(SupportPattern::from_mask(0x1FF), 5);
    for (auto party : {Party::A, Party::B}) {
        Mat3 rho = reduced_density(s, party).rho;
        ASSERT_NEAR(rho.trace().real(), 1, 1e-14);
        ASSERT_LT((rho - rho.adjoint()).norm(), 1e-15);
        for (double l : hermitian_eigenvalues(rho)) {
            ASSERT_GT(l, -1e-14);
        }
    }
}

TEST(measure, entropies_agree_with_oracle_on_random_states) {
    for (uint64_t seed = 0; seed < 200; seed++) {
        auto s = random_state(SupportPattern::from_mask(0x1FF), seed);
        ASSERT_NEAR(eta(s), oracle_eta(s.coeff()), 1e-10) << "seed " << seed;
    }
}

TEST(measure, reduced_entropies_are_equal) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> mask(1, 0x1FF);
    for (int trial = 0; trial < 1000; trial++) {
        auto s = random_state(SupportPattern::from_mask(static_cast<uint16_t>(mask(rng))), rng());
        auto r = entropies(s);
        ASSERT_NEAR(r.s_a, r.s_b, 1e-10) << "trial " << trial;
    }
}

TEST(measure, eta_invariant_under_local_unitaries) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; trial++) {
        auto s = PureState::from_coefficients(random_gaussian(rng));
        auto moved = apply_local(s, random_unitary(rng), random_unitary(rng));
        ASSERT_NEAR(eta(s), eta(moved), 1e-9);
    }
}

TEST(measure, schmidt_reconstructs_and_fixes_phases) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; trial++) {
        Mat3 m = random_gaussian(rng);
        auto s = PureState::from_coefficients(m);
        auto sd = schmidt(s);
        Eigen::Vector3d sigma(sd.sigma[0], sd.sigma[1], sd.sigma[2]);
        Mat3 rebuilt = sd.left * sigma.cast<Complex>().asDiagonal() * sd.right.adjoint();
        ASSERT_LT((rebuilt - s.coeff()).norm(), 1e-12);
        ASSERT_GE(sd.sigma[0], sd.sigma[1]);
        ASSERT_GE(sd.sigma[1], sd.sigma[2]);
        for (int c = 0; c < 3; c++) {
            for (int r = 0; r < 3; r++) {
                if (std::abs(sd.left(r, c)) > 1e-12) {
                    ASSERT_GT(sd.left(r, c).real(), 0);
                    ASSERT_NEAR(sd.left(r, c).imag(), 0, 1e-12);
                    break;
                }
            }
        }
        double total = sd.sigma_sq()[0] + sd.sigma_sq()[1] + sd.sigma_sq()[2];
        ASSERT_NEAR(total, 1, 1e-12);
    }
}

TEST(measure, spectrum_entropy) {
    std::array<double, 3> uniform3{1.0 / 3, 1.0 / 3, 1.0 / 3};
    ASSERT_NEAR(spectrum_entropy(uniform3), 1, 1e-14);
    std::array<double, 2> half{0.5, 0.5};
    ASSERT_NEAR(spectrum_entropy(half), kLog3of2, 1e-14);
    ASSERT_NEAR(spectrum_entropy(half, 2.0), 1, 1e-14);
    std::array<double, 3> pure{1, 0, 0};
    ASSERT_EQ(spectrum_entropy(pure), 0);
}
