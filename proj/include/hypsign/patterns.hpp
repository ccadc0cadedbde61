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

// Sign patterns, change-preservation patterns, order words and couples.
//
// A degree-d monic polynomial has a sign pattern of length d+1 (leading
// sign first, always +). Reading consecutive pairs gives the
// change-preservation word of length d: 'c' where the sign flips, 'p'
// where it is kept. An order word lists, by increasing modulus, whether
// each root is positive ('P') or negative ('N').

#ifndef HYPSIGN_PATTERNS_HPP
#define HYPSIGN_PATTERNS_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypsign {

enum class Sign : signed char { Minus = -1, Plus = 1 };
enum class Step : char { Change = 'c', Preservation = 'p' };
enum class Root : char { Positive = 'P', Negative = 'N' };

class SignPattern {
public:
    /// Requires at least two signs, the first being Plus.
    explicit SignPattern(std::vector<Sign> signs);

    /// Sigma_{i1,...,is}: i1 signs +, then i2 signs -, and so on.
    static SignPattern from_blocks(std::span<const int> blocks);
    static SignPattern from_blocks(std::initializer_list<int> blocks) {
        return from_blocks(std::span<const int>(blocks.begin(), blocks.size()));
    }

    /// Accepts raw sign strings ("++---+") and block notation ("S(2,3,1)").
    static SignPattern parse(std::string_view text);

    std::size_t degree() const { return signs_.size() - 1; }
    std::span<const Sign> signs() const { return signs_; }
    std::vector<int> blocks() const;
    int changes() const;
    int preservations() const { return static_cast<int>(degree()) - changes(); }

    std::string str() const;
    std::string block_str() const;

    friend bool operator==(const SignPattern &, const SignPattern &) = default;
    friend auto operator<=>(const SignPattern &, const SignPattern &) = default;

private:
    std::vector<Sign> signs_;
};

class CpPattern {
public:
    explicit CpPattern(std::vector<Step> steps);
    static CpPattern parse(std::string_view text);

    std::size_t degree() const { return steps_.size(); }
    std::span<const Step> steps() const { return steps_; }
    int changes() const;
    int preservations() const { return static_cast<int>(degree()) - changes(); }
    std::string str() const;

    friend bool operator==(const CpPattern &, const CpPattern &) = default;
    friend auto operator<=>(const CpPattern &, const CpPattern &) = default;

private:
    std::vector<Step> steps_;
};

class OrderWord {
public:
    explicit OrderWord(std::vector<Root> letters);
    static OrderWord parse(std::string_view text);
    /// Word of length d with P exactly at the given 1-based positions.
    static OrderWord from_positive_positions(std::size_t degree, std::span<const int> positions);

    std::size_t degree() const { return letters_.size(); }
    std::span<const Root> letters() const { return letters_; }
    int positives() const;
    int negatives() const { return static_cast<int>(degree()) - positives(); }
    /// 1-based positions of the P letters, increasing.
    std::vector<int> positive_positions() const;
    std::string str() const;

    friend bool operator==(const OrderWord &, const OrderWord &) = default;
    friend auto operator<=>(const OrderWord &, const OrderWord &) = default;

private:
    std::vector<Root> letters_;
};

/// Compatible (sign pattern, order) pair: #changes == #P and #preservations == #N.
class Couple {
public:
    /// Throws DomainError naming the mismatch when the two are incompatible.
    Couple(SignPattern pattern, OrderWord order);
    static Couple parse(std::string_view pattern, std::string_view order);

    const SignPattern &pattern() const { return pattern_; }
    const OrderWord &order() const { return order_; }
    std::size_t degree() const { return order_.degree(); }

    /// "S(2,3,1)/PPNNN"; used as the archive key.
    std::string str() const;

    friend bool operator==(const Couple &, const Couple &) = default;
    friend auto operator<=>(const Couple &, const Couple &) = default;

private:
    SignPattern pattern_;
    OrderWord order_;
};

/// Empty optional when compatible; otherwise a human-readable reason.
std::optional<std::string> incompatibility(const SignPattern &pattern, const OrderWord &order);

CpPattern sign_to_cp(const SignPattern &pattern);
SignPattern cp_to_sign(const CpPattern &cp);

/// Read the cp word from the right, c -> P and p -> N.
OrderWord canonical_order(const SignPattern &pattern);
/// The unique pattern whose canonical order is the given word.
SignPattern pattern_with_canonical_order(const OrderWord &order);

/// No four consecutive signs ++--, --++, +--+ or -++-.
bool is_canonical_pattern(const SignPattern &pattern);
/// True iff some interior cp letter differs from both of its neighbours.
bool has_isolated_step(const CpPattern &cp);

/// All-P, all-N, or strictly alternating.
bool is_rigid_order(const OrderWord &order);

/// Q(x) -> (-1)^d Q(-x): swaps c/p and P/N.
Couple involution_m(const Couple &couple);
/// Q(x) -> x^d Q(1/x) / Q(0): reverses both words.
Couple involution_r(const Couple &couple);
/// {C, i_m C, i_r C, i_m i_r C} without duplicates, sorted.
std::vector<Couple> orbit(const Couple &couple);

/// Number of N letters before the second P; empty unless the word has exactly two P letters.
std::optional<int> nu_of_order(const OrderWord &order);

/// All sign patterns of degree d, in lexicographic order of their sign strings (+ before -).
std::vector<SignPattern> all_patterns(std::size_t degree);
/// All order words of length d with k letters P, ordered by their P positions.
std::vector<OrderWord> all_orders(std::size_t degree, int positives);

}  // namespace hypsign

#endif  // HYPSIGN_PATTERNS_HPP
