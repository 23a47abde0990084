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


#include "qutrit_ent/cli.h"

#include <algorithm>
#include <fstream>
#include <optional>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "CLI11.hpp"
#include "qutrit_ent/claims.h"
#include "qutrit_ent/extremal.h"
#include "qutrit_ent/json_io.h"
#include "qutrit_ent/measure.h"
#include "qutrit_ent/patterns.h"
#include "qutrit_ent/slocc.h"

namespace qutrit_ent {

using nlohmann::json;

namespace {

struct GlobalFlags {
    bool json = false;
    uint64_t seed = 42;
    std::optional<double> tol;
    std::string group = "rowcol+swap";
    bool strict = false;
};

std::string fixed(double x) {
    // Avoid printing "-0.000000".
    if (std::abs(x) < 5e-7) {
        x = 0;
    }
    return fmt::format("{:.6f}", x);
}

std::string fixed_list(const auto &values) {
    std::vector<std::string> parts;
    for (double v : values) {
        parts.push_back(fixed(v));
    }
    return fmt::format("[{}]", fmt::join(parts, ", "));
}

int cmd_eta(const std::string &path, const GlobalFlags &g, std::ostream &out, std::ostream &err) {
    auto state = load_state_file(path);
    if (state.norm_warning()) {
        err << fmt::format("warning: input norm {:.9f} differs from 1; state was normalized\n", state.input_norm());
    }
    auto report = entropies(state);
    auto sd = schmidt(state);
    if (g.json) {
        json j = {{"eta", report.eta}, {"s_a", report.s_a}, {"s_b", report.s_b}, {"schmidt_sq", sd.sigma_sq()}, {"rank", sd.rank},
                  {"product_state", report.eta == 0.0}, {"state", state_to_json(state)}};
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "eta = " << fixed(report.eta) << (report.eta == 0.0 ? " (product state)" : "") << "\n";
    out << "S_A = " << fixed(report.s_a) << "\n";
    out << "S_B = " << fixed(report.s_b) << "\n";
    out << "schmidt_sq = " << fixed_list(sd.sigma_sq()) << "\n";
    out << "rank = " << sd.rank << "\n";
    return kExitOk;
}

int cmd_census(int terms, const GlobalFlags &g, std::ostream &out) {
    SymmetryGroup group(parse_group_mode(g.group));
    auto orbits = census(terms, group, g.seed);
    bool any_discrepancy = std::any_of(orbits.begin(), orbits.end(), [](const OrbitClass &oc) { return oc.discrepancy; });
    if (g.json) {
        json j = {{"terms", terms}, {"group", format_group_mode(group.mode())}, {"group_order", group.order()}, {"seed", g.seed},
                  {"orbits", census_to_json(orbits)}};
        out << j.dump(2) << "\n";
    } else {
        size_t total = 0, separable = 0;
        for (const auto &oc : orbits) {
            total += oc.size;
            separable += oc.forced_separable ? oc.size : 0;
        }
        out << fmt::format("census: {} terms, group {} (order {}), {} patterns in {} orbits\n", terms, format_group_mode(group.mode()),
                           group.order(), total, orbits.size());
        out << fmt::format("patterns: {} forced separable, {} entangled\n", separable, total - separable);
        out << fmt::format("{:<28} {:>5} {:>5} {:>10}  {}\n", "canonical", "size", "rank", "separable", "labels");
        for (const auto &oc : orbits) {
            std::string labels = oc.labels.empty() ? "-" : fmt::format("{}", fmt::join(oc.labels, ","));
            if (oc.discrepancy) {
                labels += "  [discrepancy]";
            }
            out << fmt::format("{:<28} {:>5} {:>5} {:>10}  {}\n", oc.canonical.to_string(), oc.size, oc.generic_rank,
                               oc.forced_separable ? "yes" : "no", labels);
        }
        if (any_discrepancy) {
            out << "discrepancy: an orbit does not carry exactly one listed type\n";
        }
    }
    return (g.strict && any_discrepancy) ? kExitVerification : kExitOk;
}

int cmd_extremize(const std::string &pattern_text, int starts, const GlobalFlags &g, std::ostream &out) {
    auto pattern = SupportPattern::parse(pattern_text);
    StationaryOptions options;
    options.starts = starts;
    options.seed = g.seed;
    if (g.tol) {
        options.tol = *g.tol;
    }
    auto results = find_stationary(pattern, options);
    std::vector<const ExtremalResult *> interior;
    for (const auto &r : results) {
        if (r.kind == StationaryKind::InteriorStationary) {
            interior.push_back(&r);
        }
    }
    if (g.json) {
        json list = json::array();
        for (const auto &r : results) {
            list.push_back(extremal_to_json(r));
        }
        json j = {{"pattern", pattern.to_string()}, {"starts", starts}, {"seed", g.seed}, {"tol", options.tol}, {"results", list}};
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << fmt::format("pattern {} ({} starts, seed {})\n", pattern.to_string(), starts, g.seed);
    if (interior.empty()) {
        out << "no interior stationary point detected\n";
    }
    for (const auto *r : interior) {
        out << fmt::format("eta={} grad={:.2e} magnitudes={} phases={} cycles={} schmidt_sq={}\n", fixed(r->eta_value), r->grad_residual,
                           fixed_list(r->params.magnitudes), fixed_list(r->params.phases), fixed_list(r->cycle_values),
                           fixed_list(r->schmidt_sq));
    }
    int escapes = 0, zero = 0;
    for (const auto &r : results) {
        escapes += r.kind == StationaryKind::BoundaryEscape;
        zero += r.kind == StationaryKind::ZeroMeasureRegion;
    }
    out << fmt::format("distinct endpoints: {} interior_stationary, {} boundary_escape, {} zero_measure_region\n", interior.size(), escapes, zero);
    return kExitOk;
}

void print_matrix(std::ostream &out, const char *name, const Mat3 &m) {
    out << name << " =\n";
    for (int r = 0; r < 3; r++) {
        std::vector<std::string> cells;
        for (int c = 0; c < 3; c++) {
            cells.push_back(fmt::format("{:>10}{:+.6f}i", fixed(m(r, c).real()), std::abs(m(r, c).imag()) < 5e-7 ? 0.0 : m(r, c).imag()));
        }
        out << "  " << fmt::format("{}", fmt::join(cells, "  ")) << "\n";
    }
}

int cmd_witness(const std::string &path_a, const std::string &path_b, const GlobalFlags &g, std::ostream &out) {
    auto a = load_state_file(path_a);
    auto b = load_state_file(path_b);
    double tol = g.tol.value_or(1e-10);
    int ra = schmidt_rank(a, tol);
    int rb = schmidt_rank(b, tol);
    auto w = ilo_witness(a, b, tol);
    if (g.json) {
        json j = {{"rank_a", ra}, {"rank_b", rb}, {"equivalent", w.has_value()}};
        j["witness"] = w ? witness_to_json(*w) : json(nullptr);
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << fmt::format("rank A = {}, rank B = {}\n", ra, rb);
    if (!w) {
        out << fmt::format("inequivalent (ranks {} vs {})\n", ra, rb);
        return kExitOk;
    }
    out << fmt::format("equivalent (rank {})\n", ra);
    print_matrix(out, "qA", w->qa);
    print_matrix(out, "qB", w->qb);
    out << fmt::format("scale = {:.9g}\nresidual = {:.3e}\n", w->scale, w->residual);
    return kExitOk;
}

int cmd_verify(const std::string &json_path, const GlobalFlags &g, std::ostream &out) {
    auto report = run_ledger(g.seed);
    auto j = report_to_json(report);
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) {
            throw std::runtime_error("cannot write " + json_path);
        }
        f << j.dump(2) << "\n";
    }
    if (g.json && json_path.empty()) {
        out << j.dump(2) << "\n";
    } else {
        out << fmt::format("claims ledger v{} (seed {}): {} claims\n", report.version, report.seed, report.claims.size());
        for (const auto &c : report.claims) {
            out << fmt::format("  {:<20} {}\n", format_status(c.status), c.id);
        }
        bool header = false;
        for (const auto &c : report.claims) {
            if (c.status == ClaimStatus::Discrepancy || c.status == ClaimStatus::Corrected || c.status == ClaimStatus::Fail) {
                if (!header) {
                    out << "attention:\n";
                    header = true;
                }
                out << fmt::format("  {} [{}]: {}\n", c.id, format_status(c.status), c.description);
            }
        }
        out << fmt::format("summary: {} pass, {} fail, {} discrepancy, {} supported_heuristic, {} corrected ({:.1f} s)\n",
                           report.count(ClaimStatus::Pass), report.count(ClaimStatus::Fail), report.count(ClaimStatus::Discrepancy),
                           report.count(ClaimStatus::SupportedHeuristic), report.count(ClaimStatus::Corrected), report.wallclock);
    }
    if (report.count(ClaimStatus::Fail) > 0) {
        return kExitVerification;
    }
    if (g.strict && report.count(ClaimStatus::Discrepancy) > 0) {
        return kExitVerification;
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entanglement analysis of bipartite qutrit pure states", "qutrit-ent"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags g;
    double tol = 0;
    app.add_flag("--json", g.json, "Emit JSON instead of text");
    app.add_option("--seed", g.seed, "Master seed for randomized searches (default 42)");
    auto *tol_opt = app.add_option("--tol", tol, "Stationarity tolerance (extremize) or rank tolerance (witness)")->check(CLI::PositiveNumber);
    app.add_option("--group", g.group, "Symmetry group for census: rowcol or rowcol+swap")->check(CLI::IsMember({"rowcol", "rowcol+swap", "rowcol_swap"}));
    app.add_flag("--strict", g.strict, "Exit 2 when a discrepancy is flagged");

    auto *eta_cmd = app.add_subcommand("eta", "Print eta, entropies and Schmidt data of a state file");
    std::string state_path;
    eta_cmd->add_option("state", state_path, "State file (JSON)")->required();

    auto *census_cmd = app.add_subcommand("census", "Orbit census of k-term support patterns");
    int terms = 0;
    census_cmd->add_option("--terms", terms, "Number of terms k (1..9)")->required();

    auto *extremize_cmd = app.add_subcommand("extremize", "Search for stationary points of eta on a support pattern");
    std::string pattern_text;
    int starts = 50;
    extremize_cmd->add_option("--pattern", pattern_text, "Cells, e.g. \"U1,U2,V1,V2\"")->required();
    extremize_cmd->add_option("--starts", starts, "Random starts (default 50)")->check(CLI::PositiveNumber);

    auto *witness_cmd = app.add_subcommand("witness", "Decide SLOCC equivalence of two state files");
    std::string path_a, path_b;
    witness_cmd->add_option("--state-a", path_a, "First state file")->required();
    witness_cmd->add_option("--state-b", path_b, "Second state file")->required();

    auto *verify_cmd = app.add_subcommand("verify", "Evaluate the claims ledger");
    std::string report_path;
    verify_cmd->add_option("--json", report_path, "Write the JSON report to this path");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "error: " << e.what() << "\n";
        const CLI::App *shown = &app;
        for (auto *sub : app.get_subcommands()) {
            shown = sub;
        }
        err << shown->help();
        return kExitUsage;
    }
    if (*tol_opt) {
        g.tol = tol;
    }

    try {
        if (*eta_cmd) {
            return cmd_eta(state_path, g, out, err);
        }
        if (*census_cmd) {
            if (terms < 1 || terms > 9) {
                err << "error: --terms must be between 1 and 9\n";
                return kExitUsage;
            }
            return cmd_census(terms, g, out);
        }
        if (*extremize_cmd) {
            return cmd_extremize(pattern_text, starts, g, out);
        }
        if (*witness_cmd) {
            return cmd_witness(path_a, path_b, g, out);
        }
        if (*verify_cmd) {
            return cmd_verify(report_path, g, out);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace qutrit_ent
