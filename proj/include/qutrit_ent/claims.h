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


#ifndef QUTRIT_ENT_CLAIMS_H
#define QUTRIT_ENT_CLAIMS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qutrit_ent {

inline constexpr const char *kVersion = "0.1.0";

enum class ClaimStatus {
    /// The tool reproduces the stated number within tolerance.
    Pass,
    /// The tool disagrees with a reproducible number.
    Fail,
    /// The tool's mathematics disagrees with the stated classification.
    Discrepancy,
    /// Negative search evidence; not a proof.
    SupportedHeuristic,
    /// The stated condition is wrong or incomplete as printed; the corrected
    /// condition is checked instead.
    Corrected,
};

std::string format_status(ClaimStatus status);

struct Claim {
    /// Stable key, e.g. "forms.type3.eta".
    std::string id;
    std::string description;
    /// Location in the source text plus the quoted formula being checked.
    std::string source;
    nlohmann::json expected;
    nlohmann::json actual;
    /// Absent for exact comparisons.
    std::optional<double> tolerance;
    ClaimStatus status = ClaimStatus::Fail;
    /// Supporting data: witnesses, search statistics, seeds.
    nlohmann::json evidence = nlohmann::json::object();
};

struct Report {
    /// Sorted by id.
    std::vector<Claim> claims;
    uint64_t seed = 42;
    std::string version = kVersion;
    double wallclock = 0;

    int count(ClaimStatus status) const;
};

/// Evaluates every claim. Deterministic for a fixed seed apart from wallclock.
Report run_ledger(uint64_t seed = 42);

nlohmann::json claim_to_json(const Claim &claim);
nlohmann::json report_to_json(const Report &report);

}  // namespace qutrit_ent

#endif
