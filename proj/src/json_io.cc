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


#include "qutrit_ent/json_io.h"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace qutrit_ent {

using nlohmann::json;

PureState state_from_json(const json &doc) {
    if (!doc.is_object()) {
        throw ParseError("state file must be a JSON object");
    }
    for (const auto &[key, value] : doc.items()) {
        if (key != "terms") {
            throw ParseError(fmt::format("unknown key '{}' in state file", key));
        }
    }
    if (!doc.contains("terms") || !doc["terms"].is_array()) {
        throw ParseError("state file needs a 'terms' array");
    }
    std::vector<TermSpec> terms;
    for (const auto &t : doc["terms"]) {
        if (!t.is_object()) {
            throw ParseError("each term must be an object");
        }
        for (const auto &[key, value] : t.items()) {
            if (key != "cell" && key != "magnitude" && key != "phase") {
                throw ParseError(fmt::format("unknown key '{}' in term", key));
            }
        }
        if (!t.contains("cell") || !t["cell"].is_string()) {
            throw ParseError("term needs a string 'cell'");
        }
        if (!t.contains("magnitude") || !t["magnitude"].is_number()) {
            throw ParseError("term needs a numeric 'magnitude'");
        }
        if (t.contains("phase") && !t["phase"].is_number()) {
            throw ParseError("term 'phase' must be numeric");
        }
        TermSpec spec;
        spec.cell = parse_cell(t["cell"].get<std::string>());
        spec.magnitude = t["magnitude"].get<double>();
        spec.phase = t.value("phase", 0.0);
        terms.push_back(spec);
    }
    return build_state(terms, true);
}

PureState load_state_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(fmt::format("cannot open state file '{}'", path.string()));
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ParseError(fmt::format("invalid JSON in '{}': {}", path.string(), e.what()));
    }
    return state_from_json(doc);
}

json state_to_json(const PureState &state) {
    json terms = json::array();
    for (const auto &t : state.terms()) {
        terms.push_back({{"cell", format_cell(t.cell)}, {"magnitude", t.magnitude}, {"phase", t.phase}});
    }
    return {{"terms", terms}};
}

json matrix_to_json(const Mat3 &m) {
    json rows = json::array();
    for (int r = 0; r < 3; r++) {
        json row = json::array();
        for (int c = 0; c < 3; c++) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        rows.push_back(row);
    }
    return rows;
}

json witness_to_json(const ILOWitness &w) {
    return {{"qA", matrix_to_json(w.qa)}, {"qB", matrix_to_json(w.qb)}, {"scale", w.scale}, {"residual", w.residual}};
}

json extremal_to_json(const ExtremalResult &r) {
    return {
        {"pattern", r.params.pattern.to_string()},
        {"eta", r.eta_value},
        {"magnitudes", r.params.magnitudes},
        {"phases", r.params.phases},
        {"cycle_invariants", r.cycle_values},
        {"schmidt_sq", r.schmidt_sq},
        {"kind", format_kind(r.kind)},
        {"grad_residual", r.grad_residual},
    };
}

json orbit_to_json(const OrbitClass &oc) {
    return {
        {"canonical", oc.canonical.to_string()},
        {"size", oc.size},
        {"labels", oc.labels},
        {"forced_separable", oc.forced_separable},
        {"generic_rank", oc.generic_rank},
        {"discrepancy", oc.discrepancy},
    };
}

json census_to_json(const std::vector<OrbitClass> &orbits) {
    json out = json::array();
    for (const auto &oc : orbits) {
        out.push_back(orbit_to_json(oc));
    }
    return out;
}

}  // namespace qutrit_ent
