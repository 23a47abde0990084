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


#ifndef QUTRIT_ENT_MEASURE_H
#define QUTRIT_ENT_MEASURE_H

#include <array>

#include "qutrit_ent/state_model.h"

namespace qutrit_ent {

enum class Party { A, B };

/// Reduced density matrices of normalized states; Hermitian with unit trace.
struct DensityMatrix {
    Mat3 rho;
};

DensityMatrix reduced_density(const PureState &state, Party party);

/// -sum_j lambda_j log_base lambda_j. Eigenvalues below 1e-15 contribute 0.
double von_neumann_entropy(const DensityMatrix &rho, double base = 3.0);

/// Threshold below which a reduced entropy counts as zero for eta.
inline constexpr double kEtaZero = 1e-12;

/// Reduced entropies of both parties (base 3) together with eta.
struct EntropyReport {
    double s_a = 0;
    double s_b = 0;
    double eta = 0;
};

EntropyReport entropies(const PureState &state);

/// Entanglement measure: average of the base-3 reduced entropies, or 0 when
/// either reduction is (numerically) pure.
double eta(const PureState &state);

/// Singular value decomposition M = left * diag(sigma) * right^dagger.
///
/// sigma is descending; each left column is phase-fixed so its first entry
/// above 1e-12 in magnitude is real and positive (right columns follow).
struct SchmidtData {
    std::array<double, 3> sigma{};
    Mat3 left;
    Mat3 right;
    int rank = 0;

    std::array<double, 3> sigma_sq() const {
        return {sigma[0] * sigma[0], sigma[1] * sigma[1], sigma[2] * sigma[2]};
    }
};

/// rank counts singular values above tol * sigma_1.
SchmidtData schmidt(const PureState &state, double tol = 1e-10);

/// Same decomposition for a raw coefficient matrix (no normalization).
SchmidtData schmidt(const Mat3 &coeff, double tol = 1e-10);

/// Base-3 Shannon entropy of a probability vector, with the 0 log 0 = 0 rule.
double spectrum_entropy(std::span<const double> probabilities, double base = 3.0);

}  // namespace qutrit_ent

#endif
