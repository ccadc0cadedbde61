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

#include "hypsign/patterns.hpp"

#include <algorithm>
#include <cctype>

#include "hypsign/errors.hpp"

namespace hypsign {

namespace {

Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
Step flip(Step s) { return s == Step::Change ? Step::Preservation : Step::Change; }
Root flip(Root r) { return r == Root::Positive ? Root::Negative : Root::Positive; }

SignPattern parse_blocks(std::string_view text) {
    // S(i1,i2,...,is)
    std::size_t pos = 0;
    auto fail = [&](const char *what) { throw ParseError(what, std::string(text), pos); };
    if (text.size() < 2 || text[0] != 'S' || text[1] != '(') fail("expected \"S(\"");
    pos = 2;
    std::vector<int> blocks;
    for (;;) {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected block length");
        int value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 10000) fail("block length too large");
            ++pos;
        }
        if (value == 0) {
            --pos;
            fail("block length must be positive");
        }
        blocks.push_back(value);
        if (pos >= text.size()) fail("unterminated block list");
        if (text[pos] == ',') {
            ++pos;
            continue;
        }
        if (text[pos] == ')') break;
        fail("unexpected character");
    }
    if (pos + 1 != text.size()) {
        ++pos;
        fail("trailing characters");
    }
    if (blocks.size() == 1 && blocks[0] < 2) {
        pos = 2;
        fail("pattern needs degree >= 1");
    }
    return SignPattern::from_blocks(blocks);
}

}  // namespace

// --- SignPattern -----------------------------------------------------------

SignPattern::SignPattern(std::vector<Sign> signs) : signs_(std::move(signs)) {
    if (signs_.size() < 2) throw DomainError("sign pattern needs at least two signs");
    if (signs_.front() != Sign::Plus) throw DomainError("sign pattern must start with + (monic)");
}

SignPattern SignPattern::from_blocks(std::span<const int> blocks) {
    std::vector<Sign> signs;
    Sign current = Sign::Plus;
    for (int b : blocks) {
        if (b <= 0) throw DomainError("block lengths must be positive");
        signs.insert(signs.end(), static_cast<std::size_t>(b), current);
        current = flip(current);
    }
    return SignPattern(std::move(signs));
}

SignPattern SignPattern::parse(std::string_view text) {
    if (!text.empty() && text.front() == 'S') return parse_blocks(text);
    std::vector<Sign> signs;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '+')
            signs.push_back(Sign::Plus);
        else if (text[i] == '-')
            signs.push_back(Sign::Minus);
        else
            throw ParseError("expected '+' or '-'", std::string(text), i);
    }
    if (signs.size() < 2) throw ParseError("sign pattern needs at least two signs", std::string(text), signs.size());
    if (signs.front() != Sign::Plus) throw ParseError("sign pattern must start with '+'", std::string(text), 0);
    return SignPattern(std::move(signs));
}

std::vector<int> SignPattern::blocks() const {
    std::vector<int> out{1};
    for (std::size_t i = 1; i < signs_.size(); ++i) {
        if (signs_[i] == signs_[i - 1])
            ++out.back();
        else
            out.push_back(1);
    }
    return out;
}

int SignPattern::changes() const {
    int c = 0;
    for (std::size_t i = 1; i < signs_.size(); ++i) c += signs_[i] != signs_[i - 1];
    return c;
}

std::string SignPattern::str() const {
    std::string s;
    for (Sign x : signs_) s.push_back(x == Sign::Plus ? '+' : '-');
    return s;
}

std::string SignPattern::block_str() const {
    std::string s = "S(";
    bool first = true;
    for (int b : blocks()) {
        if (!first) s.push_back(',');
        s += std::to_string(b);
        first = false;
    }
    s.push_back(')');
    return s;
}

// --- CpPattern -------------------------------------------------------------

CpPattern::CpPattern(std::vector<Step> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw DomainError("change-preservation pattern must be non-empty");
}

CpPattern CpPattern::parse(std::string_view text) {
    std::vector<Step> steps;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == 'c')
            steps.push_back(Step::Change);
        else if (text[i] == 'p')
            steps.push_back(Step::Preservation);
        else
            throw ParseError("expected 'c' or 'p'", std::string(text), i);
    }
    if (steps.empty()) throw ParseError("empty change-preservation pattern", std::string(text), 0);
    return CpPattern(std::move(steps));
}

int CpPattern::changes() const {
    return static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::Change));
}

std::string CpPattern::str() const {
    std::string s;
    for (Step x : steps_) s.push_back(static_cast<char>(x));
    return s;
}

// --- OrderWord -------------------------------------------------------------

OrderWord::OrderWord(std::vector<Root> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw DomainError("order word must be non-empty");
}

OrderWord OrderWord::parse(std::string_view text) {
    std::vector<Root> letters;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == 'P')
            letters.push_back(Root::Positive);
        else if (text[i] == 'N')
            letters.push_back(Root::Negative);
        else
            throw ParseError("expected 'P' or 'N'", std::string(text), i);
    }
    if (letters.empty()) throw ParseError("empty order word", std::string(text), 0);
    return OrderWord(std::move(letters));
}

OrderWord OrderWord::from_positive_positions(std::size_t degree, std::span<const int> positions) {
    std::vector<Root> letters(degree, Root::Negative);
    for (int p : positions) {
        if (p < 1 || static_cast<std::size_t>(p) > degree) throw DomainError("position out of range");
        letters[static_cast<std::size_t>(p - 1)] = Root::Positive;
    }
    return OrderWord(std::move(letters));
}

int OrderWord::positives() const {
    return static_cast<int>(std::count(letters_.begin(), letters_.end(), Root::Positive));
}

std::vector<int> OrderWord::positive_positions() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i] == Root::Positive) out.push_back(static_cast<int>(i) + 1);
    return out;
}

std::string OrderWord::str() const {
    std::string s;
    for (Root x : letters_) s.push_back(static_cast<char>(x));
    return s;
}

// --- Couple ----------------------------------------------------------------

std::optional<std::string> incompatibility(const SignPattern &pattern, const OrderWord &order) {
    if (pattern.degree() != order.degree())
        return "length mismatch: pattern has degree " + std::to_string(pattern.degree()) +
               " but order has " + std::to_string(order.degree()) + " letters";
    if (pattern.changes() != order.positives())
        return "count mismatch: pattern has " + std::to_string(pattern.changes()) +
               " sign changes but order has " + std::to_string(order.positives()) + " letters P";
    return std::nullopt;
}

Couple::Couple(SignPattern pattern, OrderWord order)
    : pattern_(std::move(pattern)), order_(std::move(order)) {
    if (auto why = incompatibility(pattern_, order_)) throw DomainError("incompatible couple: " + *why);
}

Couple Couple::parse(std::string_view pattern, std::string_view order) {
    return Couple(SignPattern::parse(pattern), OrderWord::parse(order));
}

std::string Couple::str() const { return pattern_.block_str() + "/" + order_.str(); }

// --- operations --------------------------------------------------------------

CpPattern sign_to_cp(const SignPattern &pattern) {
    auto s = pattern.signs();
    std::vector<Step> steps;
    steps.reserve(pattern.degree());
    for (std::size_t j = 1; j < s.size(); ++j)
        steps.push_back(s[j] != s[j - 1] ? Step::Change : Step::Preservation);
    return CpPattern(std::move(steps));
}

SignPattern cp_to_sign(const CpPattern &cp) {
    std::vector<Sign> signs{Sign::Plus};
    for (Step st : cp.steps()) signs.push_back(st == Step::Change ? flip(signs.back()) : signs.back());
    return SignPattern(std::move(signs));
}

OrderWord canonical_order(const SignPattern &pattern) {
    auto cp = sign_to_cp(pattern);
    std::vector<Root> letters;
    auto steps = cp.steps();
    for (auto it = steps.rbegin(); it != steps.rend(); ++it)
        letters.push_back(*it == Step::Change ? Root::Positive : Root::Negative);
    return OrderWord(std::move(letters));
}

SignPattern pattern_with_canonical_order(const OrderWord &order) {
    std::vector<Step> steps;
    auto letters = order.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        steps.push_back(*it == Root::Positive ? Step::Change : Step::Preservation);
    return cp_to_sign(CpPattern(std::move(steps)));
}

bool is_canonical_pattern(const SignPattern &pattern) {
    auto s = pattern.signs();
    for (std::size_t i = 0; i + 3 < s.size(); ++i) {
        // ++-- and --++ : equal, flip, equal.  +--+ and -++- : flip, equal, flip.
        bool a = s[i] == s[i + 1], b = s[i + 1] == s[i + 2], c = s[i + 2] == s[i + 3];
        if (a && !b && c) return false;
        if (!a && b && !c) return false;
    }
    return true;
}

bool has_isolated_step(const CpPattern &cp) {
    auto st = cp.steps();
    for (std::size_t i = 1; i + 1 < st.size(); ++i)
        if (st[i] != st[i - 1] && st[i] != st[i + 1]) return true;
    return false;
}

bool is_rigid_order(const OrderWord &order) {
    auto w = order.letters();
    bool uniform = std::all_of(w.begin(), w.end(), [&](Root r) { return r == w[0]; });
    if (uniform) return true;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1]) return false;
    return true;
}

Couple involution_m(const Couple &couple) {
    auto cp = sign_to_cp(couple.pattern());
    std::vector<Step> steps(cp.steps().begin(), cp.steps().end());
    for (auto &s : steps) s = flip(s);
    std::vector<Root> letters(couple.order().letters().begin(), couple.order().letters().end());
    for (auto &r : letters) r = flip(r);
    return Couple(cp_to_sign(CpPattern(std::move(steps))), OrderWord(std::move(letters)));
}

Couple involution_r(const Couple &couple) {
    auto cp = sign_to_cp(couple.pattern());
    std::vector<Step> steps(cp.steps().rbegin(), cp.steps().rend());
    std::vector<Root> letters(couple.order().letters().rbegin(), couple.order().letters().rend());
    return Couple(cp_to_sign(CpPattern(std::move(steps))), OrderWord(std::move(letters)));
}

std::vector<Couple> orbit(const Couple &couple) {
    auto r = involution_r(couple);
    std::vector<Couple> out{couple, involution_m(couple), r, involution_m(r)};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<int> nu_of_order(const OrderWord &order) {
    auto pos = order.positive_positions();
    if (pos.size() != 2) return std::nullopt;
    return pos[1] - 2;
}

std::vector<SignPattern> all_patterns(std::size_t degree) {
    if (degree < 1 || degree > 30) throw DomainError("degree out of range for enumeration");
    std::vector<SignPattern> out;
    const std::size_t count = std::size_t{1} << degree;
    out.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::vector<Sign> signs{Sign::Plus};
        for (std::size_t j = 0; j < degree; ++j)
            signs.push_back((mask >> (degree - 1 - j)) & 1U ? Sign::Minus : Sign::Plus);
        out.emplace_back(std::move(signs));
    }
    return out;
}

std::vector<OrderWord> all_orders(std::size_t degree, int positives) {
    std::vector<OrderWord> out;
    if (positives < 0 || static_cast<std::size_t>(positives) > degree) return out;
    // Walk P-position tuples in lexicographic order.
    std::vector<int> pos(static_cast<std::size_t>(positives));
    for (int i = 0; i < positives; ++i) pos[static_cast<std::size_t>(i)] = i + 1;
    const int d = static_cast<int>(degree);
    for (;;) {
        out.push_back(OrderWord::from_positive_positions(degree, pos));
        int i = positives - 1;
        while (i >= 0 && pos[static_cast<std::size_t>(i)] == d - positives + i + 1) --i;
        if (i < 0) break;
        ++pos[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < positives; ++j)
            pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace hypsign
