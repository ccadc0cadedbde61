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

// Realizability decisions for couples whose Z2 x Z2 orbit contains a
// pattern with one sign change (S(m,n)) or with two sign changes, the last
// block being a single sign (S(m,n,1)).
//
// Two rule sets are available. Published applies the classification as
// originally stated. Reconciled (the default) differs in three places:
//   * S(m,n) with m <= n requires gamma_{d-2m+1} < alpha_1, the image of
//     the m >= n clause under i_r; the literal index d-2m is not orbit
//     invariant and admits S(1,3) with NPN, which no cubic realizes.
//   * S(2,n,1) with n >= 5 additionally requires alpha_1 < gamma_1, the
//     i_r image of gamma_n < alpha_2 for S(1,n,2) used to bound nu there.
//   * Couples with an exact witness that contradicts the literal
//     statement are Realizable (see known_counterexamples()).

#ifndef HYPSIGN_DECISION_HPP
#define HYPSIGN_DECISION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypsign/patterns.hpp"
#include "hypsign/polyalgebra.hpp"

namespace hypsign {

enum class Status { Realizable, NonRealizable, OutOfScope };
enum class RuleSet { Reconciled, Published };

std::string_view to_string(Status s);
std::string_view to_string(RuleSet r);
Status parse_status(std::string_view text);
RuleSet parse_rule_set(std::string_view text);

enum class Transform { Identity, InvolutionM, InvolutionR, InvolutionMR };
std::string_view to_string(Transform t);
Couple apply(Transform t, const Couple &couple);

struct Verdict {
    Status status = Status::OutOfScope;
    /// Deciding clause, e.g. "Thm1", "Thm2(8)", "Rem1(1)"; empty iff OutOfScope.
    std::string clause;
    Transform transform = Transform::Identity;
    /// The orbit element the clause was applied to.
    std::optional<Couple> decided;
    std::string note;
};

/// (m, n) when the pattern is S(m,n).
std::optional<std::pair<int, int>> one_change_shape(const SignPattern &pattern);
/// (m, n) when the pattern is S(m,n,1).
std::optional<std::pair<int, int>> two_change_shape(const SignPattern &pattern);

/// Pattern S(m,n), one P. Throws DomainError for any other shape.
Verdict decide_one_change(const Couple &couple, RuleSet rules = RuleSet::Reconciled);
/// Pattern S(m,n,1), two P. Throws DomainError for any other shape.
Verdict decide_two_change(const Couple &couple, RuleSet rules = RuleSet::Reconciled);

/// Rigid-order and canonical-pattern fast paths, then the first supported
/// orbit element in the order identity, i_r, i_m, i_m i_r.
Verdict decide(const Couple &couple, RuleSet rules = RuleSet::Reconciled);

/// A couple whose exact witness contradicts the literal clause that would decide it.
struct KnownCounterexample {
    Couple couple;
    RootConfiguration roots;
    std::string contradicts;
};
const std::vector<KnownCounterexample> &known_counterexamples();

enum class ShapeFilter { OneChange, TwoChange, Supported, All };
std::string_view to_string(ShapeFilter f);
ShapeFilter parse_shape_filter(std::string_view text);
bool matches(ShapeFilter filter, const SignPattern &pattern);

struct EnumerationRow {
    Couple couple;
    Verdict verdict;
};

struct PatternTally {
    SignPattern pattern;
    std::size_t compatible = 0;
    std::size_t realizable = 0;
    std::size_t non_realizable = 0;
    std::size_t out_of_scope = 0;
};

struct Enumeration {
    std::size_t degree = 0;
    ShapeFilter filter = ShapeFilter::TwoChange;
    RuleSet rules = RuleSet::Reconciled;
    std::vector<EnumerationRow> rows;   ///< pattern order of all_patterns(), then all_orders()
    std::vector<PatternTally> tallies;  ///< one per matching pattern
};

/// Every compatible couple of degree d whose pattern matches the filter, decided.
/// threads == 0 picks the hardware concurrency; output order never depends on it.
Enumeration enumerate(std::size_t degree, ShapeFilter filter, RuleSet rules = RuleSet::Reconciled,
                      unsigned threads = 1);

}  // namespace hypsign

#endif  // HYPSIGN_DECISION_HPP
