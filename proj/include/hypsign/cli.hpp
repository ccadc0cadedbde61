// Copyright 2026 The hypsign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Subcommands: decide, witness, enumerate, verify,
// certify, report. Exit status 0 on success, 1 on rejected input (parse
// errors, incompatible couples, a witness that fails verification), 2 on
// internal errors.

#ifndef HYPSIGN_CLI_HPP
#define HYPSIGN_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hypsign/decision.hpp"
#include "hypsign/witness.hpp"

namespace hypsign::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;
inline constexpr int kExitInternal = 2;

/// Defaults that a bare invocation uses. A key=value file can override
/// them (keys: seed, budget, ladder_ratios, perturbation_scale, rules,
/// threads, archive, certificate_count); command-line flags win over both.
struct RunConfig {
    std::uint64_t seed = 1;
    SearchBudget budget;
    RuleSet rules = RuleSet::Reconciled;
    unsigned threads = 1;
    std::optional<std::filesystem::path> archive;  ///< empty: WitnessArchive::default_path()
    std::size_t certificate_count = 2000;
};

/// Applies key=value lines ('#' starts a comment). Throws ParseError naming the line.
void apply_config_text(RunConfig &config, const std::string &text, const std::string &source = "config");

/// args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace hypsign::cli

#endif  // HYPSIGN_CLI_HPP
