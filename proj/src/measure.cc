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

#include <cmath>

namespace qutrit_ent {

namespace {

constexpr double kEigenFloor = 1e-15;

}  // namespace

DensityMatrix reduced_density(const PureState &state, Party party) {
    const Mat3 &m = state.coeff();
    if (party == Party::A) {
        return {m * m.adjoint()};
    }
    // rho_B[c, c'] = sum_r M[r, c] conj(M[r, c']).
    return {m.transpose() * m.conjugate()};
}

double spectrum_entropy(std::span<const double> probabilities, double base) {
    double s = 0;
    for (double p : probabilities) {
        if (p > kEigenFloor) {
            s -= p * std::log(p);
        }
    }
    return s / std::log(base);
}

double von_neumann_entropy(const DensityMatrix &rho, double base) {
    Eigen::SelfAdjointEigenSolver<Mat3> eig(rho.rho, Eigen::EigenvaluesOnly);
    std::array<double, 3> lambda{};
    for (int i = 0; i < 3; i++) {
        lambda[i] = eig.eigenvalues()(i);
    }
    return spectrum_entropy(lambda, base);
}

EntropyReport entropies(const PureState &state) {
    EntropyReport r;
    r.s_a = von_neumann_entropy(reduced_density(state, Party::A));
    r.s_b = von_neumann_entropy(reduced_density(state, Party::B));
    if (r.s_a <= kEtaZero || r.s_b <= kEtaZero) {
        r.eta = 0;
    } else {
        r.eta = (r.s_a + r.s_b) / 2;
    }
    return r;
}

double eta(const PureState &state) {
    return entropies(state).eta;
}

SchmidtData schmidt(const Mat3 &coeff, double tol) {
    Eigen::JacobiSVD<Mat3> svd(coeff, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SchmidtData out;
    out.left = svd.matrixU();
    out.right = svd.matrixV();
    for (int i = 0; i < 3; i++) {
        out.sigma[i] = svd.singularValues()(i);
    }
    for (int j = 0; j < 3; j++) {
        for (int i = 0; i < 3; i++) {
            Complex z = out.left(i, j);
            if (std::abs(z) > 1e-12) {
                Complex fix = std::conj(z) / std::abs(z);
                out.left.col(j) *= fix;
                out.right.col(j) *= fix;
                break;
            }
        }
    }
    out.rank = 0;
    for (double s : out.sigma) {
        if (s > tol * out.sigma[0]) {
            out.rank++;
        }
    }
    return out;
}

SchmidtData schmidt(const PureState &state, double tol) {
    return schmidt(state.coeff(), tol);
}

}  // namespace qutrit_ent
