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


#include "qutrit_ent/state_model.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numbers>
#include <random>

#include <fmt/format.h>

namespace qutrit_ent {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

// Parses "+1", "1", "0", "-1" into a row/column index.
int parse_trit(std::string_view s, std::string_view whole) {
    s = trim(s);
    if (s == "+1" || s == "1") {
        return 0;
    }
    if (s == "0" || s == "+0" || s == "-0") {
        return 1;
    }
    if (s == "-1") {
        return 2;
    }
    throw ParseError(fmt::format("unknown basis cell '{}'", whole));
}

}  // namespace

BasisCell BasisCell::from_index(int flat) {
    if (flat < 0 || flat > 8) {
        throw std::out_of_range(fmt::format("basis cell index {} outside 0..8", flat));
    }
    return BasisCell{static_cast<uint8_t>(flat / 3), static_cast<uint8_t>(flat % 3)};
}

BasisCell parse_cell(std::string_view label) {
    std::string_view s = trim(label);
    if (s.size() == 2) {
        char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        char sub = s[1];
        auto fam_pos = std::string_view("UVW").find(fam);
        if (fam_pos != std::string_view::npos && sub >= '1' && sub <= '3') {
            return BasisCell{static_cast<uint8_t>(fam_pos), static_cast<uint8_t>(sub - '1')};
        }
    }
    if (s.size() >= 5 && s.front() == '(' && s.back() == ')') {
        auto inner = s.substr(1, s.size() - 2);
        auto comma = inner.find(',');
        if (comma != std::string_view::npos) {
            int r = parse_trit(inner.substr(0, comma), label);
            int c = parse_trit(inner.substr(comma + 1), label);
            return BasisCell{static_cast<uint8_t>(r), static_cast<uint8_t>(c)};
        }
    }
    throw ParseError(fmt::format("unknown basis cell '{}'", label));
}

std::string format_cell(BasisCell cell) {
    return fmt::format("{}{}", "UVW"[cell.row], cell.col + 1);
}

std::string format_ket(BasisCell cell) {
    return fmt::format("|{}{}>", cell.row_trit(), cell.col_trit());
}

SupportPattern SupportPattern::from_mask(uint16_t mask) {
    if (mask >= (1u << 9)) {
        throw std::out_of_range(fmt::format("pattern mask {} has bits beyond the 9 cells", mask));
    }
    return SupportPattern(mask);
}

SupportPattern SupportPattern::from_cells(std::span<const BasisCell> cells) {
    uint16_t mask = 0;
    for (auto c : cells) {
        mask |= static_cast<uint16_t>(1u << c.index());
    }
    return SupportPattern(mask);
}

SupportPattern SupportPattern::parse(std::string_view text) {
    std::vector<BasisCell> cells;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find_first_of(", ", start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto token = trim(text.substr(start, end - start));
        if (!token.empty()) {
            auto cell = parse_cell(token);
            if (std::find(cells.begin(), cells.end(), cell) != cells.end()) {
                throw ParseError(fmt::format("duplicate cell '{}' in pattern", token));
            }
            cells.push_back(cell);
        }
        start = end + 1;
    }
    if (cells.empty()) {
        throw ParseError("empty cell pattern");
    }
    return from_cells(cells);
}

int SupportPattern::size() const {
    return std::popcount(mask_);
}

std::vector<BasisCell> SupportPattern::cells() const {
    std::vector<BasisCell> out;
    for (int i = 0; i < 9; i++) {
        if ((mask_ >> i) & 1) {
            out.push_back(BasisCell::from_index(i));
        }
    }
    return out;
}

SupportPattern SupportPattern::complement() const {
    return SupportPattern(static_cast<uint16_t>(~mask_ & 0x1FF));
}

std::string SupportPattern::to_string() const {
    std::string out;
    for (auto c : cells()) {
        if (!out.empty()) {
            out += ',';
        }
        out += format_cell(c);
    }
    return out;
}

PureState PureState::from_coefficients(const Mat3 &coeff, bool normalize) {
    double norm = coeff.norm();
    if (!(norm > 0) || !std::isfinite(norm)) {
        throw ParseError("state has no nonzero coefficient");
    }
    bool warning = std::abs(norm - 1) > 1e-9;
    Mat3 m = normalize ? Mat3(coeff / norm) : coeff;
    return PureState(std::move(m), norm, warning);
}

std::vector<TermSpec> PureState::terms(double tol) const {
    std::vector<TermSpec> out;
    for (int i = 0; i < 9; i++) {
        auto cell = BasisCell::from_index(i);
        Complex z = (*this)(cell);
        if (std::abs(z) > tol) {
            out.push_back({cell, std::abs(z), wrap_angle(std::arg(z))});
        }
    }
    return out;
}

PureState build_state(std::span<const TermSpec> terms, bool normalize) {
    if (terms.empty()) {
        throw ParseError("state needs at least one term");
    }
    Mat3 m = Mat3::Zero();
    uint16_t seen = 0;
    for (const auto &t : terms) {
        uint16_t bit = static_cast<uint16_t>(1u << t.cell.index());
        if (seen & bit) {
            throw ParseError(fmt::format("duplicate cell {}", format_cell(t.cell)));
        }
        seen |= bit;
        if (!(t.magnitude >= 0) || !std::isfinite(t.magnitude) || !std::isfinite(t.phase)) {
            throw ParseError(fmt::format("invalid magnitude/phase for cell {}", format_cell(t.cell)));
        }
        m(t.cell.row, t.cell.col) = std::polar(t.magnitude, t.phase);
    }
    if (m.norm() == 0) {
        throw ParseError("all term magnitudes are zero");
    }
    return PureState::from_coefficients(m, normalize);
}

SupportPattern support_of(const PureState &state, double tol) {
    std::vector<BasisCell> cells;
    for (int i = 0; i < 9; i++) {
        auto cell = BasisCell::from_index(i);
        if (std::abs(state(cell)) > tol) {
            cells.push_back(cell);
        }
    }
    return SupportPattern::from_cells(cells);
}

PureState random_state(SupportPattern pattern, uint64_t seed) {
    if (pattern.size() == 0) {
        throw std::invalid_argument("random_state needs a nonempty pattern");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Mat3 m = Mat3::Zero();
    for (auto c : pattern.cells()) {
        double re = normal(rng);
        double im = normal(rng);
        m(c.row, c.col) = Complex(re, im);
    }
    // A Gaussian draw is exactly zero with probability 0, but guard anyway.
    if (m.norm() == 0) {
        m(pattern.cells()[0].row, pattern.cells()[0].col) = 1;
    }
    return PureState::from_coefficients(m, true);
}

double smallest_singular_value(const Mat3 &m) {
    Eigen::JacobiSVD<Mat3> svd(m);
    return svd.singularValues()(2);
}

PureState apply_local(const PureState &state, const Mat3 &qa, const Mat3 &qb, bool renormalize) {
    if (smallest_singular_value(qa) <= 1e-12) {
        throw SingularOperatorError("local operator on particle A is singular");
    }
    if (smallest_singular_value(qb) <= 1e-12) {
        throw SingularOperatorError("local operator on particle B is singular");
    }
    Mat3 out = qa * state.coeff() * qb.transpose();
    return PureState::from_coefficients(out, renormalize);
}

double wrap_angle(double radians) {
    constexpr double two_pi = 2 * std::numbers::pi;
    double r = std::fmod(radians, two_pi);
    if (r < 0) {
        r += two_pi;
    }
    if (r >= two_pi) {
        r -= two_pi;
    }
    return r;
}

uint64_t derive_seed(uint64_t master, uint64_t index) {
    uint64_t z = master + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace qutrit_ent
