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


#ifndef QUTRIT_ENT_EXTREMAL_H
#define QUTRIT_ENT_EXTREMAL_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qutrit_ent/state_model.h"

namespace qutrit_ent {

/// Raised by eta_gradient inside the region where the measure is identically 0.
struct ZeroMeasureError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Magnitude/phase coordinates of a state supported on a pattern.
///
/// magnitudes[i] and phases[i] belong to the i-th pattern cell in ascending
/// flat-index order. The first phase is the gauge and stays 0.
struct ParamPoint {
    SupportPattern pattern;
    std::vector<double> magnitudes;
    std::vector<double> phases;

    /// Normalizes magnitudes, folds negative magnitudes into phases and fixes
    /// the gauge. Throws std::invalid_argument on size mismatch or zero norm.
    static ParamPoint make(SupportPattern pattern, std::vector<double> magnitudes, std::vector<double> phases);
    /// Reads the coefficients of `state` on the pattern cells.
    static ParamPoint from_state(const PureState &state, SupportPattern pattern);

    double min_magnitude() const;
};

PureState state_from_params(const ParamPoint &p);

/// A cycle of the bipartite row/column incidence graph, as signed cells.
struct Cycle {
    std::vector<std::pair<BasisCell, int>> edges;
};

/// Fundamental cycles of the pattern's incidence graph: a spanning forest is
/// grown over cells in flat-index order and every remaining cell closes one
/// cycle. The closing cell carries sign -1 and signs alternate around the cycle.
std::vector<Cycle> cycle_basis(SupportPattern pattern);

/// Alternating phase sums around the fundamental cycles, in [0, 2pi).
/// Invariant under local diagonal phase unitaries.
std::vector<double> cycle_invariants(const ParamPoint &p);

struct EtaGradient {
    /// Component tangent to the unit sphere of magnitudes.
    std::vector<double> magnitudes;
    /// Phase derivatives; entry 0 (the gauge) is always 0.
    std::vector<double> phases;

    double norm() const;
};

/// Riemannian gradient of eta on (unit sphere) x (torus).
///
/// Throws std::invalid_argument when a magnitude is at or below 1e-9 and
/// ZeroMeasureError when the state lies in the eta == 0 branch.
EtaGradient eta_gradient(const ParamPoint &p);

enum class StationaryKind {
    InteriorStationary,
    BoundaryEscape,
    ZeroMeasureRegion,
};

std::string format_kind(StationaryKind kind);

struct ExtremalResult {
    double eta_value = 0;
    ParamPoint params;
    double grad_residual = 0;
    StationaryKind kind = StationaryKind::BoundaryEscape;
    std::vector<double> cycle_values;
    /// Squared Schmidt coefficients, descending.
    std::array<double, 3> schmidt_sq{};
};

inline constexpr double kBoundaryEpsilon = 1e-6;

/// A converged point whose smallest magnitude is below this margin is reported
/// as boundary_escape rather than interior_stationary. Near a face the gradient
/// vanishes polynomially in the small magnitudes, so points drifting towards a
/// boundary stationary set pass any fixed gradient tolerance long before they
/// reach kBoundaryEpsilon.
inline constexpr double kInteriorMargin = 1e-3;

struct StationaryOptions {
    int starts = 50;
    uint64_t seed = 42;
    /// Bound on the projected gradient norm for interior_stationary.
    double tol = 1e-10;
    /// Worker threads; 0 reads QUTRIT_ENT_THREADS or uses hardware concurrency.
    int threads = 0;
};

/// Multi-start search for stationary points of eta on a pattern.
///
/// Each start draws a seeded random point and runs four searches from it:
/// gradient ascent, gradient descent, a damped Newton search for zeros of the
/// gradient over all parameters, and the same search restricted to real
/// coefficients (all cycle phases 0 or pi, where the phase gradient vanishes
/// by conjugation symmetry). Converged runs are polished with the damped
/// Newton iteration. Results are deduplicated on (eta, Schmidt spectrum,
/// cycle invariants) and sorted by eta descending.
std::vector<ExtremalResult> find_stationary(SupportPattern pattern, const StationaryOptions &options = {});

/// Every run's classified endpoint, in (start, search) order, before
/// deduplication. Runs that neither converge nor leave the interior are omitted.
std::vector<ExtremalResult> stationary_runs(SupportPattern pattern, const StationaryOptions &options = {});

/// Deduplicates on the rounded (kind, eta, Schmidt spectrum, cycle invariants)
/// key and sorts by eta descending.
std::vector<ExtremalResult> dedup_results(std::vector<ExtremalResult> runs);

/// Polishes a starting point with the damped Newton iteration and classifies it.
ExtremalResult refine_stationary(const ParamPoint &start, double tol = 1e-10);

struct InteriorVerdict {
    bool found = false;
    /// none_detected is only meaningful with at least 100 starts.
    bool reportable = false;
    int starts = 0;
    uint64_t seed = 0;
    std::vector<ExtremalResult> interior;
    int boundary_escapes = 0;
    int zero_measure = 0;
};

InteriorVerdict has_interior_extremum(SupportPattern pattern, int starts = 100, uint64_t seed = 42);

}  // namespace qutrit_ent

#endif
