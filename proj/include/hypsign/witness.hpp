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

// Explicit witnesses: root configurations whose exact expansion realizes a
// given couple, and a search that tries to construct one.

#ifndef HYPSIGN_WITNESS_HPP
#define HYPSIGN_WITNESS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypsign/patterns.hpp"
#include "hypsign/polyalgebra.hpp"
#include "hypsign/rational.hpp"

namespace hypsign {

enum class Strategy { Given, Archive, Ladder, FlatExtension, PerturbedMultiple, Annealing };
std::string_view to_string(Strategy s);
Strategy parse_strategy(std::string_view text);

struct WitnessRecord {
    Couple couple;
    RootConfiguration roots;
    Polynomial poly;
    Strategy strategy = Strategy::Given;
    bool verified = false;
    std::size_t trials = 0;  ///< search trials spent when the record was found
};

/// Record with poly = expand(roots); verified stays false until verify().
WitnessRecord make_record(const Couple &couple, RootConfiguration roots, Strategy strategy = Strategy::Given);

struct VerifyReport {
    bool ok = false;
    /// One line per discrepancy: stored vs recomputed coefficient, sign of
    /// x^j, order letter at a position, or non-genericity.
    std::vector<std::string> mismatches;
};

/// Re-expands exactly, re-classifies and compares with record.couple.
VerifyReport check(const WitnessRecord &record);
/// check() and store the outcome in record.verified.
bool verify(WitnessRecord &record);

/// q_flat with alpha1 adjoined as a new smallest positive root.
/// Throws DomainError unless 0 < alpha1 < every modulus of q_flat.
RootConfiguration construct_flat_extension(const RootConfiguration &q_flat, const Rational &alpha1);

/// Each k-fold modulus of the negative roots becomes k distinct values
/// gamma + spread * (2i - k + 1) / k, i = 0..k-1, all inside (gamma - spread, gamma + spread).
/// spread == 0 returns the base unchanged. Throws DomainError if spread < 0,
/// if no negative modulus is repeated, or if a value would leave (0, inf).
RootConfiguration construct_perturbed_multiple(const RootConfiguration &base, const Rational &spread);

/// Strategy bits for SearchBudget::strategies.
inline constexpr unsigned kUseArchive = 1U << 0;
inline constexpr unsigned kUseLadder = 1U << 1;
inline constexpr unsigned kUseFlatExtension = 1U << 2;
inline constexpr unsigned kUsePerturbedMultiple = 1U << 3;
inline constexpr unsigned kUseAnnealing = 1U << 4;
inline constexpr unsigned kAllStrategies = 0x1FU;

struct SearchBudget {
    std::size_t max_trials = 100000;
    std::vector<Rational> ladder_ratios{Rational(2), Rational(3, 2), Rational(11, 10), Rational(101, 100)};
    /// Initial cluster spread, relative to the closest distinct moduli.
    Rational perturbation_scale{1, 4};
    std::uint64_t seed = 0;
    unsigned strategies = kAllStrategies;

    /// Throws DomainError if max_trials == 0 or a ratio is <= 1.
    void validate() const;
};

class WitnessArchive;

struct SearchOutcome {
    std::optional<WitnessRecord> witness;  ///< verified when present
    std::size_t trials = 0;
    /// Empty on success; otherwise why the search stopped.
    std::string exhausted;
};

/// Tries archive lookup, geometric ladder, flat extension, perturbed
/// multiple roots and simulated annealing, in that order, within
/// budget.max_trials trials. Deterministic for a given couple and budget.
SearchOutcome search(const Couple &couple, const SearchBudget &budget = {}, const WitnessArchive *archive = nullptr);

/// 64-bit FNV-1a of the couple text, xor the budget seed.
std::uint64_t search_seed(const Couple &couple, std::uint64_t seed);

/// Flat JSON file keyed by couple text. Lookups re-verify; inserts are serialized.
class WitnessArchive {
public:
    WitnessArchive() = default;
    /// Loads the file if it exists.
    explicit WitnessArchive(std::filesystem::path path);

    /// HYPSIGN_ARCHIVE if set, else "witnesses.json".
    static std::filesystem::path default_path();

    const std::filesystem::path &path() const { return path_; }
    std::size_t size() const;

    /// Stored record for the couple, only if it still verifies.
    std::optional<WitnessRecord> lookup(const Couple &couple) const;
    /// Replaces any existing entry. Throws DomainError for an unverified record.
    void insert(const WitnessRecord &record);
    /// Writes atomically (temporary file and rename).
    void save() const;

private:
    std::filesystem::path path_;
    mutable std::mutex mutex_;
    std::map<std::string, WitnessRecord> records_;
};

}  // namespace hypsign

#endif  // HYPSIGN_WITNESS_HPP
