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


#ifndef QUTRIT_ENT_PATTERNS_H
#define QUTRIT_ENT_PATTERNS_H

#include <array>
#include <string>
#include <vector>

#include "qutrit_ent/state_model.h"

namespace qutrit_ent {

enum class GroupMode {
    /// Independent row and column permutations (order 36).
    RowCol,
    /// Row/column permutations plus exchange of the two particles (order 72).
    RowColSwap,
};

std::string format_group_mode(GroupMode mode);
/// Accepts "rowcol", "rowcol+swap" and "rowcol_swap".
GroupMode parse_group_mode(std::string_view text);

/// Relabeling symmetries of the 3x3 cell grid, each stored as a permutation of
/// flat cell indices.
class SymmetryGroup {
   public:
    explicit SymmetryGroup(GroupMode mode = GroupMode::RowColSwap);

    GroupMode mode() const {
        return mode_;
    }
    size_t order() const {
        return elements_.size();
    }
    const std::vector<std::array<uint8_t, 9>> &elements() const {
        return elements_;
    }
    SupportPattern apply(size_t element, SupportPattern pattern) const;

   private:
    GroupMode mode_;
    std::vector<std::array<uint8_t, 9>> elements_;
};

/// All C(9, k) patterns with k cells, ascending by mask.
std::vector<SupportPattern> enumerate_patterns(int k);

/// True iff the pattern lies within one row or one column.
bool forced_separable(SupportPattern pattern);

/// Largest Schmidt rank over `trials` seeded random states on the pattern.
int generic_rank(SupportPattern pattern, uint64_t seed = 42, int trials = 8);

/// Minimal mask over the orbit of the pattern.
SupportPattern canonicalize(SupportPattern pattern, const SymmetryGroup &group);

/// The orbit itself, ascending by mask.
std::vector<SupportPattern> orbit_of(SupportPattern pattern, const SymmetryGroup &group);

struct LabelMatch {
    /// False when k is outside 2..6 (no table to compare against).
    bool labeled = false;
    /// Sorted type names such as "IV_4".
    std::vector<std::string> labels;
    /// Set when the orbit does not carry exactly one type name. Separable
    /// orbits are expected to carry none and are not flagged.
    bool discrepancy = false;
};

LabelMatch type_label(SupportPattern pattern, const SymmetryGroup &group);

/// A transcribed representative pattern of a named type.
struct TypeRepresentative {
    std::string label;
    SupportPattern pattern;
};

/// Representative patterns of every named type with 2 to 6 terms.
const std::vector<TypeRepresentative> &type_representatives();

/// First transcribed representative of a type label, e.g. "V_2".
SupportPattern representative_of(std::string_view label);

struct OrbitClass {
    SupportPattern canonical;
    size_t size = 0;
    size_t stabilizer_order = 0;
    std::vector<SupportPattern> members;
    std::vector<std::string> labels;
    bool labeled = false;
    bool discrepancy = false;
    bool forced_separable = false;
    int generic_rank = 0;
};

/// Orbit decomposition of all k-cell patterns, sorted by (size, canonical mask).
std::vector<OrbitClass> census(int k, const SymmetryGroup &group, uint64_t seed = 42);

}  // namespace qutrit_ent

#endif
