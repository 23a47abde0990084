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


#include "qutrit_ent/patterns.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <fmt/format.h>

#include "qutrit_ent/measure.h"

namespace qutrit_ent {

std::string format_group_mode(GroupMode mode) {
    return mode == GroupMode::RowCol ? "rowcol" : "rowcol+swap";
}

GroupMode parse_group_mode(std::string_view text) {
    if (text == "rowcol") {
        return GroupMode::RowCol;
    }
    if (text == "rowcol+swap" || text == "rowcol_swap") {
        return GroupMode::RowColSwap;
    }
    throw ParseError(fmt::format("unknown symmetry group '{}' (expected rowcol or rowcol+swap)", text));
}

SymmetryGroup::SymmetryGroup(GroupMode mode) : mode_(mode) {
    std::array<int, 3> rp{0, 1, 2};
    do {
        std::array<int, 3> cp{0, 1, 2};
        do {
            for (int swap = 0; swap < (mode == GroupMode::RowColSwap ? 2 : 1); swap++) {
                std::array<uint8_t, 9> perm{};
                for (int r = 0; r < 3; r++) {
                    for (int c = 0; c < 3; c++) {
                        int nr = rp[r];
                        int nc = cp[c];
                        if (swap) {
                            std::swap(nr, nc);
                        }
                        perm[r * 3 + c] = static_cast<uint8_t>(nr * 3 + nc);
                    }
                }
                elements_.push_back(perm);
            }
        } while (std::next_permutation(cp.begin(), cp.end()));
    } while (std::next_permutation(rp.begin(), rp.end()));
}

SupportPattern SymmetryGroup::apply(size_t element, SupportPattern pattern) const {
    const auto &perm = elements_.at(element);
    uint16_t out = 0;
    for (int i = 0; i < 9; i++) {
        if ((pattern.mask() >> i) & 1) {
            out |= static_cast<uint16_t>(1u << perm[i]);
        }
    }
    return SupportPattern::from_mask(out);
}

std::vector<SupportPattern> enumerate_patterns(int k) {
    if (k < 1 || k > 9) {
        throw std::invalid_argument(fmt::format("term count {} outside 1..9", k));
    }
    std::vector<SupportPattern> out;
    for (uint16_t mask = 0; mask < (1u << 9); mask++) {
        if (std::popcount(mask) == k) {
            out.push_back(SupportPattern::from_mask(mask));
        }
    }
    return out;
}

bool forced_separable(SupportPattern pattern) {
    if (pattern.size() == 0) {
        throw std::invalid_argument("forced_separable needs a nonempty pattern");
    }
    constexpr uint16_t row0 = 0b000000111;
    constexpr uint16_t col0 = 0b001001001;
    uint16_t m = pattern.mask();
    for (int i = 0; i < 3; i++) {
        if ((m & ~(row0 << (3 * i)) & 0x1FF) == 0 || (m & ~(col0 << i) & 0x1FF) == 0) {
            return true;
        }
    }
    return false;
}

int generic_rank(SupportPattern pattern, uint64_t seed, int trials) {
    if (trials < 1) {
        throw std::invalid_argument("generic_rank needs at least one trial");
    }
    int best = 0;
    for (int t = 0; t < trials; t++) {
        auto s = random_state(pattern, derive_seed(seed, static_cast<uint64_t>(t)));
        best = std::max(best, schmidt(s).rank);
    }
    return best;
}

std::vector<SupportPattern> orbit_of(SupportPattern pattern, const SymmetryGroup &group) {
    std::set<SupportPattern> seen;
    for (size_t g = 0; g < group.order(); g++) {
        seen.insert(group.apply(g, pattern));
    }
    return {seen.begin(), seen.end()};
}

SupportPattern canonicalize(SupportPattern pattern, const SymmetryGroup &group) {
    SupportPattern best = pattern;
    for (size_t g = 0; g < group.order(); g++) {
        best = std::min(best, group.apply(g, pattern));
    }
    return best;
}

const std::vector<TypeRepresentative> &type_representatives() {
    static const std::vector<TypeRepresentative> reps = [] {
        std::vector<std::pair<const char *, const char *>> raw = {
            {"I", "U1,V2"},
            {"III_1", "U1,V2,W3"},
            {"III_2", "U1,U2,V1"},
            {"III_3", "U1,U2,V3"},
            {"IV_1", "U1,U2,U3,V1"},
            {"IV_1", "U1,U2,V1,W1"},
            {"IV_2", "U1,U2,V1,V3"},
            {"IV_2", "U1,U2,V1,W2"},
            {"IV_3", "U1,U2,V1,W3"},
            {"IV_4", "U1,U2,V1,V2"},
            {"IV_5", "U1,U2,V3,W3"},
            {"V_1", "U1,U2,U3,V1,V2"},
            {"V_1", "U1,U2,V1,V2,W1"},
            {"V_2", "U1,U2,V1,V2,W3"},
            {"V_3", "U1,U2,U3,V1,W1"},
            {"V_4", "U1,U2,U3,V1,W2"},
            {"V_4", "U1,U2,V1,V3,W1"},
            {"V_5", "U1,U2,V1,V3,W2"},
            {"V_6", "U1,U2,V1,V3,W3"},
            {"VI_1", "U1,U2,U3,V1,V2,V3"},
            {"VI_1", "U1,U2,V1,V2,W1,W2"},
            {"VI_2", "U1,U2,V1,V3,W2,W3"},
            {"VI_3", "U1,U2,U3,V1,V2,W1"},
            {"VI_4", "U1,U2,U3,V1,V2,W3"},
            {"VI_4", "U1,U2,V1,V2,W1,W3"},
        };
        std::vector<TypeRepresentative> out;
        for (auto [label, cells] : raw) {
            out.push_back({label, SupportPattern::parse(cells)});
        }
        return out;
    }();
    return reps;
}

SupportPattern representative_of(std::string_view label) {
    for (const auto &rep : type_representatives()) {
        if (rep.label == label) {
            return rep.pattern;
        }
    }
    throw std::invalid_argument(fmt::format("no representative for type '{}'", label));
}

LabelMatch type_label(SupportPattern pattern, const SymmetryGroup &group) {
    LabelMatch out;
    int k = pattern.size();
    if (k < 2 || k > 6) {
        return out;
    }
    out.labeled = true;
    auto canon = canonicalize(pattern, group);
    std::set<std::string> labels;
    for (const auto &rep : type_representatives()) {
        if (rep.pattern.size() == k && canonicalize(rep.pattern, group) == canon) {
            labels.insert(rep.label);
        }
    }
    out.labels.assign(labels.begin(), labels.end());
    bool expect_unlabeled = forced_separable(pattern);
    out.discrepancy = expect_unlabeled ? !out.labels.empty() : out.labels.size() != 1;
    return out;
}

std::vector<OrbitClass> census(int k, const SymmetryGroup &group, uint64_t seed) {
    std::map<uint16_t, std::vector<SupportPattern>> by_canon;
    for (auto p : enumerate_patterns(k)) {
        by_canon[canonicalize(p, group).mask()].push_back(p);
    }
    std::vector<OrbitClass> out;
    for (auto &[mask, members] : by_canon) {
        OrbitClass oc;
        oc.canonical = SupportPattern::from_mask(mask);
        oc.size = members.size();
        oc.stabilizer_order = group.order() / oc.size;
        oc.members = std::move(members);
        auto match = type_label(oc.canonical, group);
        oc.labels = match.labels;
        oc.labeled = match.labeled;
        oc.discrepancy = match.discrepancy;
        oc.forced_separable = forced_separable(oc.canonical);
        oc.generic_rank = generic_rank(oc.canonical, seed);
        out.push_back(std::move(oc));
    }
    std::stable_sort(out.begin(), out.end(), [](const OrbitClass &a, const OrbitClass &b) {
        if (a.size != b.size) {
            return a.size < b.size;
        }
        return a.canonical.mask() < b.canonical.mask();
    });
    return out;
}

}  // namespace qutrit_ent
