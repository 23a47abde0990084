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


#include "qutrit_ent/extremal.h"

#include <numbers>

#include "gtest/gtest.h"

#include "qutrit_ent/measure.h"
#include "qutrit_ent/patterns.h"
#include "test_util.h"

using namespace qutrit_ent;

namespace {

constexpr double kPi = std::numbers::pi;
const double kLog3of2 = std::log(2.0) / std::log(3.0);

double circular_distance(double a, double b) {
    return std::abs(std::remainder(a - b, 2 * kPi));
}

ParamPoint random_point(SupportPattern pattern, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> mag(0.2, 1.0), ang(0, 2 * kPi);
    std::vector<double> m, ph;
    for (int i = 0; i < pattern.size(); i++) {
        m.push_back(mag(rng));
        ph.push_back(ang(rng));
    }
    return ParamPoint::make(pattern, m, ph);
}

/// eta after replacing magnitude i with m_i + h (renormalized) or phase i with phi_i + h.
double shifted_eta(const ParamPoint &p, bool phase, size_t i, double h) {
    auto m = p.magnitudes;
    auto ph = p.phases;
    (phase ? ph[i] : m[i]) += h;
    return eta(state_from_params(ParamPoint::make(p.pattern, m, ph)));
}

bool has_interior(const std::vector<ExtremalResult> &results, double eta_value) {
    for (const auto &r : results) {
        if (r.kind == StationaryKind::InteriorStationary && std::abs(r.eta_value - eta_value) < 1e-5) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST(extremal, param_point_normalizes_and_folds_signs) {
    auto pattern = SupportPattern::parse("U1,V2,W3");
    auto p = ParamPoint::make(pattern, {3, -4, 0}, {0.5, 0, 0});
    ASSERT_NEAR(p.magnitudes[0], 0.6, 1e-15);
    ASSERT_NEAR(p.magnitudes[1], 0.8, 1e-15);
    ASSERT_EQ(p.phases[0], 0.0);
    Mat3 m = state_from_params(p).coeff();
    // Global phase removed: relative phase of V2 to U1 is pi - 0.5.
    ASSERT_NEAR(circular_distance(std::arg(m(1, 1) / m(0, 0)), kPi - 0.5), 0, 1e-12);
    ASSERT_THROW(ParamPoint::make(pattern, {1, 2}, {0, 0}), std::invalid_argument);
    ASSERT_THROW(ParamPoint::make(pattern, {0, 0, 0}, {0, 0, 0}), std::invalid_argument);
    auto back = ParamPoint::from_state(state_from_params(p), pattern);
    for (int i = 0; i < 3; i++) {
        ASSERT_NEAR(back.magnitudes[i], p.magnitudes[i], 1e-14);
    }
}

TEST(extremal, cycle_basis_sizes) {
    // cycles = cells - rows used - cols used + components
    ASSERT_TRUE(cycle_basis(SupportPattern::parse("U1,U2,V1")).empty());
    ASSERT_TRUE(cycle_basis(SupportPattern::parse("U1,V2,W3")).empty());
    ASSERT_EQ(cycle_basis(SupportPattern::parse("U1,U2,V1,V2")).size(), 1u);
    ASSERT_EQ(cycle_basis(SupportPattern::parse("U1,U2,V1,V3,W2,W3")).size(), 1u);
    ASSERT_EQ(cycle_basis(SupportPattern::parse("U1,U2,U3,V1,V2,V3")).size(), 2u);
    ASSERT_EQ(cycle_basis(SupportPattern::from_mask(0x1FF)).size(), 4u);
}

TEST(extremal, four_cycle_invariant) {
    auto pattern = SupportPattern::parse("U1,U2,V1,V2");
    double alpha = 0.3, beta = 1.1, gamma = 2.0;
    auto p = ParamPoint::make(pattern, {1, 1, 1, 1}, {0, alpha, beta, gamma});
    auto inv = cycle_invariants(p);
    ASSERT_EQ(inv.size(), 1u);
    double target = alpha + beta - gamma;
    bool matches = circular_distance(inv[0], target) < 1e-12 || circular_distance(inv[0], -target) < 1e-12;
    ASSERT_TRUE(matches);
    ASSERT_GE(inv[0], 0);
    ASSERT_LT(inv[0], 2 * kPi);
}

TEST(extremal, six_cycle_invariant_zero_at_uniform_phases) {
    auto p = ParamPoint::make(representative_of("VI_2"), {1, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 0});
    auto inv = cycle_invariants(p);
    ASSERT_EQ(inv.size(), 1u);
    ASSERT_LT(circular_distance(inv[0], 0), 1e-12);
}

TEST(extremal, gauge_invariance_under_row_and_column_phases) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> ang(0, 2 * kPi);
    std::uniform_int_distribution<int> mask(1, 0x1FF);
    int checked = 0;
    while (checked < 300) {
        auto pattern = SupportPattern::from_mask(static_cast<uint16_t>(mask(rng)));
        auto p = random_point(pattern, rng);
        std::array<double, 3> row{ang(rng), ang(rng), ang(rng)}, col{ang(rng), ang(rng), ang(rng)};
        auto cells = pattern.cells();
        auto ph = p.phases;
        for (size_t i = 0; i < cells.size(); i++) {
            ph[i] += row[cells[i].row] + col[cells[i].col];
        }
        auto q = ParamPoint::make(pattern, p.magnitudes, ph);
        ASSERT_NEAR(eta(state_from_params(p)), eta(state_from_params(q)), 1e-9);
        auto a = cycle_invariants(p), b = cycle_invariants(q);
        ASSERT_EQ(a.size(), b.size());
        for (size_t i = 0; i < a.size(); i++) {
            ASSERT_LT(circular_distance(a[i], b[i]), 1e-9);
        }
        checked++;
    }
}

TEST(extremal, gradient_matches_central_differences) {
    std::mt19937_64 rng(5);
    const double h = 1e-6;
    std::uniform_int_distribution<int> mask(1, 0x1FF);
    int checked = 0;
    while (checked < 100) {
        auto pattern = SupportPattern::from_mask(static_cast<uint16_t>(mask(rng)));
        if (pattern.size() < 2 || forced_separable(pattern)) {
            continue;
        }
        auto p = random_point(pattern, rng);
        if (entropies(state_from_params(p)).s_a < 1e-3) {
            continue;
        }
        auto g = eta_gradient(p);
        std::vector<double> analytic, numeric;
        for (size_t i = 0; i < p.magnitudes.size(); i++) {
            analytic.push_back(g.magnitudes[i]);
            numeric.push_back((shifted_eta(p, false, i, h) - shifted_eta(p, false, i, -h)) / (2 * h));
        }
        for (size_t i = 1; i < p.phases.size(); i++) {
            analytic.push_back(g.phases[i]);
            numeric.push_back((shifted_eta(p, true, i, h) - shifted_eta(p, true, i, -h)) / (2 * h));
        }
        double diff = 0, norm = 0;
        for (size_t i = 0; i < analytic.size(); i++) {
            diff += std::pow(analytic[i] - numeric[i], 2);
            norm += std::pow(analytic[i], 2);
        }
        ASSERT_LT(std::sqrt(diff), 1e-4 * std::max(std::sqrt(norm), 1e-3)) << pattern.to_string();
        ASSERT_EQ(g.phases[0], 0.0);
        checked++;
    }
}

TEST(extremal, gradient_vanishes_at_canonical_points) {
    auto t2 = ParamPoint::make(SupportPattern::parse("U1,V2,W3"), {1, 1, 1}, {0, 0.4, 2.2});
    ASSERT_LT(eta_gradient(t2).norm(), 1e-8);
    auto t1 = ParamPoint::make(SupportPattern::parse("U1,V2"), {1, 1}, {0, 1.3});
    ASSERT_LT(eta_gradient(t1).norm(), 1e-8);
    auto t3 = ParamPoint::make(representative_of("VI_2"), {1, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 0});
    ASSERT_LT(eta_gradient(t3).norm(), 1e-8);
}

TEST(extremal, gradient_errors) {
    auto row = ParamPoint::make(SupportPattern::parse("U1,U2"), {1, 1}, {0, 0});
    ASSERT_THROW(eta_gradient(row), ZeroMeasureError);
    auto tiny = ParamPoint::make(SupportPattern::parse("U1,V2"), {1, 1e-12}, {0, 0});
    ASSERT_THROW(eta_gradient(tiny), std::invalid_argument);
}

TEST(extremal, type2_maximum_found) {
    StationaryOptions options;
    auto results = find_stationary(SupportPattern::parse("U1,V2,W3"), options);
    int interior = 0;
    for (const auto &r : results) {
        if (r.kind == StationaryKind::InteriorStationary) {
            interior++;
            ASSERT_NEAR(r.eta_value, 1, 1e-9);
            for (double m : r.params.magnitudes) {
                ASSERT_NEAR(m, 1 / std::sqrt(3.0), 1e-6);
            }
        }
    }
    ASSERT_EQ(interior, 1);
}

TEST(extremal, four_term_square_point) {
    StationaryOptions options;
    options.starts = 100;
    auto results = find_stationary(representative_of("IV_4"), options);
    bool found = false;
    for (const auto &r : results) {
        if (r.kind != StationaryKind::InteriorStationary || std::abs(r.eta_value - kLog3of2) > 1e-5) {
            continue;
        }
        const auto &m = r.params.magnitudes;
        if (std::abs(m[0] - m[3]) < 1e-5 && std::abs(m[1] - m[2]) < 1e-5 && circular_distance(r.cycle_values[0], kPi) < 1e-5) {
            found = true;
        }
    }
    ASSERT_TRUE(found);
}

TEST(extremal, three_term_line_point_has_half_weight_on_lone_cell) {
    StationaryOptions options;
    auto results = find_stationary(representative_of("III_3"), options);
    bool found = false;
    for (const auto &r : results) {
        if (r.kind == StationaryKind::InteriorStationary) {
            const auto &m = r.params.magnitudes;
            ASSERT_NEAR(m[2] * m[2], 0.5, 1e-6);
            ASSERT_NEAR(m[0] * m[0] + m[1] * m[1], 0.5, 1e-6);
            ASSERT_NEAR(r.eta_value, 0.63093, 1e-5);
            found = true;
        }
    }
    ASSERT_TRUE(found);
}

TEST(extremal, interior_results_reverify_from_scratch) {
    StationaryOptions options;
    for (const char *label : {"IV_4", "V_2", "III_3"}) {
        for (const auto &r : find_stationary(representative_of(label), options)) {
            if (r.kind == StationaryKind::InteriorStationary) {
                auto fresh = ParamPoint::make(r.params.pattern, r.params.magnitudes, r.params.phases);
                ASSERT_LT(eta_gradient(fresh).norm(), options.tol);
                ASSERT_NEAR(eta(state_from_params(fresh)), r.eta_value, 1e-12);
                ASSERT_GE(r.params.min_magnitude(), kBoundaryEpsilon);
            }
        }
    }
}

TEST(extremal, reproducible_and_thread_independent) {
    StationaryOptions a;
    a.starts = 30;
    a.threads = 1;
    StationaryOptions b = a;
    b.threads = 3;
    auto pattern = representative_of("V_2");
    auto ra = find_stationary(pattern, a);
    auto rb = find_stationary(pattern, b);
    auto rc = find_stationary(pattern, a);
    ASSERT_EQ(ra.size(), rb.size());
    ASSERT_EQ(ra.size(), rc.size());
    for (size_t i = 0; i < ra.size(); i++) {
        ASSERT_EQ(ra[i].eta_value, rb[i].eta_value);
        ASSERT_EQ(ra[i].params.magnitudes, rb[i].params.magnitudes);
        ASSERT_EQ(ra[i].params.magnitudes, rc[i].params.magnitudes);
        ASSERT_EQ(ra[i].kind, rc[i].kind);
    }
    StationaryOptions other = a;
    other.seed = 7;
    ASSERT_FALSE(find_stationary(pattern, other).empty());
}

TEST(extremal, results_sorted_and_deduplicated) {
    StationaryOptions options;
    auto runs = stationary_runs(representative_of("IV_4"), options);
    auto dedup = dedup_results(runs);
    ASSERT_LE(dedup.size(), runs.size());
    for (size_t i = 1; i < dedup.size(); i++) {
        ASSERT_GE(dedup[i - 1].eta_value, dedup[i].eta_value);
    }
    auto direct = find_stationary(representative_of("IV_4"), options);
    ASSERT_EQ(direct.size(), dedup.size());
}

TEST(extremal, forced_separable_patterns_are_zero_measure) {
    StationaryOptions options;
    options.starts = 5;
    for (const auto &r : find_stationary(SupportPattern::parse("U1,U2,U3"), options)) {
        ASSERT_EQ(r.kind, StationaryKind::ZeroMeasureRegion);
        ASSERT_EQ(r.eta_value, 0);
    }
}

TEST(extremal, refine_recovers_six_term_saddle) {
    const double s = 1 / std::sqrt(6.0);
    auto start = ParamPoint::make(representative_of("VI_2"), {s + 0.01, s - 0.01, s, s + 0.005, s, s - 0.004}, {0, 0.01, -0.02, 0, 0.01, 0});
    auto r = refine_stationary(start);
    ASSERT_EQ(r.kind, StationaryKind::InteriorStationary);
    ASSERT_NEAR(r.eta_value, 0.78969, 1e-5);
    ASSERT_LT(r.grad_residual, 1e-10);
}

TEST(extremal, interior_extremum_verdicts) {
    auto none = has_interior_extremum(SupportPattern::parse("U1,U2,V1"), 100, 42);
    ASSERT_FALSE(none.found);
    ASSERT_TRUE(none.reportable);
    ASSERT_TRUE(none.interior.empty());
    ASSERT_GT(none.boundary_escapes + none.zero_measure, 0);

    auto found = has_interior_extremum(SupportPattern::parse("U1,V2,W3"), 100, 42);
    ASSERT_TRUE(found.found);
    ASSERT_TRUE(has_interior(found.interior, 1.0));

    auto small = has_interior_extremum(SupportPattern::parse("U1,U2,V1"), 10, 42);
    ASSERT_FALSE(small.reportable);
}

TEST(extremal, format_kind) {
    ASSERT_EQ(format_kind(StationaryKind::InteriorStationary), "interior_stationary");
    ASSERT_EQ(format_kind(StationaryKind::BoundaryEscape), "boundary_escape");
    ASSERT_EQ(format_kind(StationaryKind::ZeroMeasureRegion), "zero_measure_region");
}
