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


#ifndef QUTRIT_ENT_SLOCC_H
#define QUTRIT_ENT_SLOCC_H

#include <optional>
#include <string>

#include "qutrit_ent/state_model.h"

namespace qutrit_ent {

/// Invertible local operators (qa, qb) with normalize(qa M_psi qb^T) ~ M_phi.
struct ILOWitness {
    Mat3 qa;
    Mat3 qb;
    /// Norm of qa M_psi qb^T before normalization.
    double scale = 1;
    /// Distance to M_phi after normalization, minimized over a global phase.
    double residual = 0;
};

/// Number of Schmidt coefficients above tol * sigma_1.
int schmidt_rank(const PureState &state, double tol = 1e-10);

enum class RankDescriptor { Product, Rank2, Rank3 };

struct RankClass {
    int rank = 1;
    RankDescriptor descriptor = RankDescriptor::Product;
};

std::string format_descriptor(RankDescriptor d);

RankClass slocc_class(const PureState &state);

/// Residual of applying (qa, qb) to psi against phi, minimized over the
/// global phase of phi.
double witness_residual(const PureState &psi, const PureState &phi, const Mat3 &qa, const Mat3 &qb);

/// Builds a witness from the two singular value decompositions, or returns
/// nullopt when the Schmidt ranks differ.
std::optional<ILOWitness> ilo_witness(const PureState &psi, const PureState &phi, double tol = 1e-10);

/// 2 * 3^N - (N * per_party_group_dim + 1).
long long count_lu_parameters(int n_parties, int per_party_group_dim = 3);

}  // namespace qutrit_ent

#endif
