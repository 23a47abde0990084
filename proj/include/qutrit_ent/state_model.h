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

#ifndef QUTRIT_ENT_STATE_MODEL_H
#define QUTRIT_ENT_STATE_MODEL_H

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qutrit_ent {

using Complex = std::complex<double>;
using Mat3 = Eigen::Matrix3cd;

/// Raised for malformed user input (cell labels, term lists, state files).
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised by apply_local when an operator is numerically singular.
struct SingularOperatorError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// One of the nine product basis states |r c>.
///
/// Rows and columns are indexed 0, 1, 2 for the single-qutrit labels +1, 0, -1.
/// Row 0/1/2 is the U/V/W family and column 0/1/2 is subscript 1/2/3, so
/// U1 = |1 1>, V2 = |0 0>, W3 = |-1 -1>.
struct BasisCell {
    uint8_t row = 0;
    uint8_t col = 0;

    static BasisCell from_index(int flat);
    int index() const {
        return row * 3 + col;
    }
    /// Single-qutrit label (+1, 0 or -1) of the row or column.
    int row_trit() const {
        return 1 - row;
    }
    int col_trit() const {
        return 1 - col;
    }
    bool operator==(const BasisCell &other) const = default;
    auto operator<=>(const BasisCell &other) const {
        return index() <=> other.index();
    }
};

/// Accepts U1..W3 (case-insensitive) or pair forms like "(+1,-1)".
BasisCell parse_cell(std::string_view label);
std::string format_cell(BasisCell cell);
/// Ket form, e.g. "|1-1>".
std::string format_ket(BasisCell cell);

/// Set of basis cells, stored as a 9-bit mask over flat indices.
class SupportPattern {
   public:
    SupportPattern() = default;
    static SupportPattern from_mask(uint16_t mask);
    static SupportPattern from_cells(std::span<const BasisCell> cells);
    /// Comma/space separated labels, e.g. "U1,U2,V1".
    static SupportPattern parse(std::string_view text);

    uint16_t mask() const {
        return mask_;
    }
    int size() const;
    bool contains(BasisCell cell) const {
        return (mask_ >> cell.index()) & 1;
    }
    /// Cells in ascending flat-index order.
    std::vector<BasisCell> cells() const;
    SupportPattern complement() const;
    std::string to_string() const;

    bool operator==(const SupportPattern &other) const = default;
    auto operator<=>(const SupportPattern &other) const = default;

   private:
    explicit SupportPattern(uint16_t mask) : mask_(mask) {
    }
    uint16_t mask_ = 0;
};

struct TermSpec {
    BasisCell cell;
    double magnitude = 0;
    /// Radians.
    double phase = 0;
};

/// A bipartite qutrit pure state psi = sum_{r,c} M[r,c] |r>|c>.
///
/// Immutable. The coefficient matrix has unit Frobenius norm unless the
/// state was built with normalization disabled.
class PureState {
   public:
    /// Throws ParseError for an all-zero matrix.
    static PureState from_coefficients(const Mat3 &coeff, bool normalize = true);

    const Mat3 &coeff() const {
        return coeff_;
    }
    Complex operator()(BasisCell cell) const {
        return coeff_(cell.row, cell.col);
    }
    /// Frobenius norm of the input before any normalization.
    double input_norm() const {
        return input_norm_;
    }
    /// True when the input norm differed from 1 by more than 1e-9.
    bool norm_warning() const {
        return norm_warning_;
    }
    /// Decomposes the state into per-cell magnitude/phase terms (phases in [0, 2pi)).
    std::vector<TermSpec> terms(double tol = 1e-12) const;

   private:
    PureState(Mat3 coeff, double input_norm, bool warning)
        : coeff_(std::move(coeff)), input_norm_(input_norm), norm_warning_(warning) {
    }
    Mat3 coeff_;
    double input_norm_ = 1;
    bool norm_warning_ = false;
};

/// Throws ParseError on an empty list, duplicate cells, negative magnitudes or
/// an all-zero state.
PureState build_state(std::span<const TermSpec> terms, bool normalize = true);

SupportPattern support_of(const PureState &state, double tol = 1e-12);

/// Gaussian random state on the pattern; identical for identical (pattern, seed).
PureState random_state(SupportPattern pattern, uint64_t seed);

/// Returns (qa (x) qb) psi, i.e. coefficient matrix qa * M * transpose(qb).
///
/// Throws SingularOperatorError when either operator's smallest singular value
/// is at or below 1e-12.
PureState apply_local(const PureState &state, const Mat3 &qa, const Mat3 &qb, bool renormalize = true);

/// Smallest singular value of a 3x3 matrix.
double smallest_singular_value(const Mat3 &m);

/// Reduces an angle to [0, 2pi).
double wrap_angle(double radians);

/// SplitMix64 of (master, index); used to derive per-run and per-trial seeds.
uint64_t derive_seed(uint64_t master, uint64_t index);

}  // namespace qutrit_ent

#endif
