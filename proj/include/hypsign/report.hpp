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

#ifndef HYPSIGN_REPORT_HPP
#define HYPSIGN_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include "hypsign/decision.hpp"
#include "hypsign/witness.hpp"

namespace hypsign {

struct ReportOptions {
    std::uint64_t seed = 1;
    RuleSet rules = RuleSet::Reconciled;
    std::size_t max_degree = 8;          ///< decision tables cover degrees 1..max_degree
    std::size_t certificate_count = 2000; ///< samples per lemma region
    SearchBudget budget;                  ///< witness gallery; budget.seed is replaced by seed
    unsigned threads = 1;
};

/// Markdown document: worked examples, decision tables, counterexamples,
/// a witness gallery and certificate summaries. Contains no timings or
/// paths, so equal options give byte-identical output.
std::string render_report(const ReportOptions &options);

}  // namespace hypsign

#endif  // HYPSIGN_REPORT_HPP
