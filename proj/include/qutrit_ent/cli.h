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


#ifndef QUTRIT_ENT_CLI_H
#define QUTRIT_ENT_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace qutrit_ent {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

/// Runs the command line tool. `args` excludes the program name.
///
/// Subcommands: eta, census, extremize, witness, verify. Returns 0 on success,
/// 1 on usage or input errors, 2 on verification failure (or a flagged
/// discrepancy under --strict).
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qutrit_ent

#endif
