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


#ifndef QUTRIT_ENT_JSON_IO_H
#define QUTRIT_ENT_JSON_IO_H

#include <filesystem>
#include <vector>

#include "json.hpp"
#include "qutrit_ent/extremal.h"
#include "qutrit_ent/patterns.h"
#include "qutrit_ent/slocc.h"
#include "qutrit_ent/state_model.h"

namespace qutrit_ent {

/// Parses {"terms":[{"cell":"U1","magnitude":0.7,"phase":0.0}, ...]}.
///
/// "phase" defaults to 0. Unknown keys and malformed values raise ParseError.
/// The state is normalized; PureState::norm_warning() reports a non-unit input.
PureState state_from_json(const nlohmann::json &doc);
PureState load_state_file(const std::filesystem::path &path);

nlohmann::json state_to_json(const PureState &state);

nlohmann::json matrix_to_json(const Mat3 &m);
nlohmann::json witness_to_json(const ILOWitness &w);
nlohmann::json extremal_to_json(const ExtremalResult &r);
nlohmann::json orbit_to_json(const OrbitClass &oc);
nlohmann::json census_to_json(const std::vector<OrbitClass> &orbits);

}  // namespace qutrit_ent

#endif
