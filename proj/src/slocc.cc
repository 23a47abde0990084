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

#include <cmath>
#include <limits>

#include "qutrit_ent/measure.h"

namespace qutrit_ent {

int schmidt_rank(const PureState &state, double tol) {
    return schmidt(state, tol).rank;
}

std::string format_descriptor(RankDescriptor d) {
    switch (d) {
        case RankDescriptor::Product:
            return "product";
        case RankDescriptor::Rank2:
            return "rank2_class";
        case RankDescriptor::Rank3:
            return "rank3_class";
    }
    return "unknown";
}

RankClass slocc_class(const PureState &state) {
    RankClass c;
    c.rank = schmidt_rank(state);
    c.descriptor = c.rank <= 1 ? RankDescriptor::Product : c.rank == 2 ? RankDescriptor::Rank2 : RankDescriptor::Rank3;
    return c;
}

double witness_residual(const PureState &psi, const PureState &phi, const Mat3 &qa, const Mat3 &qb) {
    Mat3 mapped = qa * psi.coeff() * qb.transpose();
    double norm = mapped.norm();
    if (!(norm > 0)) {
        return std::numeric_limits<double>::infinity();
    }
    mapped /= norm;
    Complex overlap = (phi.coeff().adjoint() * mapped).trace();
    Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1);
    return (mapped - phase * phi.coeff()).norm();
}

std::optional<ILOWitness> ilo_witness(const PureState &psi, const PureState &phi, double tol) {
    auto a = schmidt(psi, tol);
    auto b = schmidt(phi, tol);
    if (a.rank != b.rank) {
        return std::nullopt;
    }
    Eigen::Vector3cd s;
    for (int i = 0; i < 3; i++) {
        s(i) = i < a.rank ? b.sigma[i] / a.sigma[i] : 1.0;
    }
    ILOWitness w;
    w.qa = b.left * s.asDiagonal() * a.left.adjoint();
    Mat3 qb_transposed = a.right * b.right.adjoint();
    w.qb = qb_transposed.transpose();
    w.scale = (w.qa * psi.coeff() * w.qb.transpose()).norm();
    w.residual = witness_residual(psi, phi, w.qa, w.qb);
    return w;
}

long long count_lu_parameters(int n_parties, int per_party_group_dim) {
    if (n_parties < 1 || per_party_group_dim < 1) {
        throw std::invalid_argument("count_lu_parameters needs n_parties >= 1 and group dimension >= 1");
    }
    long long pow3 = 1;
    for (int i = 0; i < n_parties; i++) {
        pow3 *= 3;
    }
    return 2 * pow3 - (static_cast<long long>(n_parties) * per_party_group_dim + 1);
}

}  // namespace qutrit_ent
