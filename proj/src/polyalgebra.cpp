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

#include "hypsign/polyalgebra.hpp"

#include <algorithm>

#include "hypsign/errors.hpp"

namespace hypsign {

std::vector<Rational> elementary_symmetric_upto(std::span<const Rational> values, std::size_t k) {
    k = std::min(k, values.size());
    std::vector<Rational> e(k + 1, Rational(0));
    e[0] = Rational(1);
    // Multiply prod (1 + v t) one factor at a time, truncated at t^k.
    std::size_t filled = 0;
    for (const auto &v : values) {
        filled = std::min(filled + 1, k);
        for (std::size_t j = filled; j >= 1; --j) e[j] += v * e[j - 1];
    }
    return e;
}

Rational elementary_symmetric(std::span<const Rational> values, int j) {
    if (j < 0 || static_cast<std::size_t>(j) > values.size()) return Rational(0);
    return elementary_symmetric_upto(values, static_cast<std::size_t>(j))[static_cast<std::size_t>(j)];
}

// --- RootConfiguration -----------------------------------------------------

RootConfiguration::RootConfiguration(std::vector<Rational> alpha, std::vector<Rational> gamma)
    : alpha_(std::move(alpha)), gamma_(std::move(gamma)) {
    for (const auto &a : alpha_)
        if (a.sign() <= 0) throw DomainError("positive roots must be > 0, got " + a.str());
    for (const auto &g : gamma_)
        if (g.sign() <= 0) throw DomainError("negative-root moduli must be > 0, got " + g.str());
    std::sort(alpha_.begin(), alpha_.end());
    std::sort(gamma_.begin(), gamma_.end());
}

std::vector<Rational> RootConfiguration::signed_roots() const {
    std::vector<Rational> out(alpha_);
    for (const auto &g : gamma_) out.push_back(-g);
    return out;
}

std::optional<OrderWord> RootConfiguration::order() const {
    if (degree() == 0 || !tied_moduli().empty()) return std::nullopt;
    std::vector<Root> letters;
    std::size_t i = 0, j = 0;
    while (i < alpha_.size() || j < gamma_.size()) {
        if (j == gamma_.size() || (i < alpha_.size() && alpha_[i] < gamma_[j])) {
            letters.push_back(Root::Positive);
            ++i;
        } else {
            letters.push_back(Root::Negative);
            ++j;
        }
    }
    return OrderWord(std::move(letters));
}

std::vector<Rational> RootConfiguration::tied_moduli() const {
    std::vector<Rational> all(alpha_);
    all.insert(all.end(), gamma_.begin(), gamma_.end());
    std::sort(all.begin(), all.end());
    std::vector<Rational> tied;
    for (std::size_t k = 1; k < all.size(); ++k)
        if (all[k] == all[k - 1] && (tied.empty() || tied.back() != all[k])) tied.push_back(all[k]);
    return tied;
}

RootConfiguration configuration_from_order(const OrderWord &order, std::span<const Rational> moduli) {
    if (moduli.size() != order.degree()) throw DomainError("need one modulus per order letter");
    std::vector<Rational> alpha, gamma;
    auto letters = order.letters();
    for (std::size_t k = 0; k < letters.size(); ++k)
        (letters[k] == Root::Positive ? alpha : gamma).push_back(moduli[k]);
    return RootConfiguration(std::move(alpha), std::move(gamma));
}

// --- Polynomial ------------------------------------------------------------

Polynomial::Polynomial(std::vector<Rational> coefficients_leading_first)
    : coeffs_(std::move(coefficients_leading_first)) {
    if (coeffs_.empty()) throw DomainError("polynomial needs at least one coefficient");
    if (coeffs_.front() != Rational(1)) throw DomainError("polynomial must be monic");
}

Rational Polynomial::evaluate(const Rational &x) const {
    Rational acc(0);
    for (const auto &c : coeffs_) acc = acc * x + c;
    return acc;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial expand(const RootConfiguration &roots) {
    std::vector<Rational> c{Rational(1)};
    c.reserve(roots.degree() + 1);
    for (const auto &r : roots.signed_roots()) {
        // (c_0 x^k + ... + c_k) * (x - r)
        c.emplace_back(0);
        for (std::size_t k = c.size() - 1; k >= 1; --k) c[k] -= r * c[k - 1];
    }
    return Polynomial(std::move(c));
}

std::string Genericity::describe() const {
    if (generic()) return "generic";
    std::string s;
    if (!vanishing_powers.empty()) {
        s += "vanishing coefficient(s) of x^";
        for (std::size_t i = 0; i < vanishing_powers.size(); ++i) {
            if (i) s += ", x^";
            s += std::to_string(vanishing_powers[i]);
        }
    }
    if (!tied_moduli.empty()) {
        if (!s.empty()) s += "; ";
        s += "tied moduli";
        for (const auto &t : tied_moduli) s += " " + t.str();
    }
    return s;
}

std::optional<SignPattern> sign_pattern_of(const Polynomial &poly) {
    std::vector<Sign> signs;
    for (const auto &c : poly.coefficients()) {
        if (c.is_zero()) return std::nullopt;
        signs.push_back(c.sign() > 0 ? Sign::Plus : Sign::Minus);
    }
    if (signs.size() < 2) return std::nullopt;
    return SignPattern(std::move(signs));
}

Classification classify(const Polynomial &poly, const RootConfiguration &roots) {
    if (poly.degree() != roots.degree()) throw DomainError("polynomial and configuration degrees differ");
    Classification out;
    for (std::size_t power = poly.degree() + 1; power-- > 0;)
        if (poly.coefficient(power).is_zero()) out.genericity.vanishing_powers.push_back(power);
    out.genericity.tied_moduli = roots.tied_moduli();
    if (out.genericity.generic()) {
        auto pattern = sign_pattern_of(poly);
        auto order = roots.order();
        if (pattern && order) {
            // Descartes' rule makes these compatible for real-rooted input; a
            // mismatch would mean poly is not the expansion of roots.
            if (auto why = incompatibility(*pattern, *order))
                throw DomainError("polynomial does not match its roots: " + *why);
            out.couple.emplace(*pattern, *order);
        }
    }
    return out;
}

Classification classify(const RootConfiguration &roots) { return classify(expand(roots), roots); }

Polynomial deflate_root(const Polynomial &poly, const Rational &root) {
    if (poly.degree() == 0) throw DomainError("cannot deflate a constant");
    auto c = poly.coefficients();
    // Synthetic division; the last carry is the remainder poly(root).
    std::vector<Rational> q;
    q.reserve(c.size() - 1);
    Rational carry(0);
    for (std::size_t k = 0; k < c.size(); ++k) {
        carry = carry * root + c[k];
        if (k + 1 < c.size()) q.push_back(carry);
    }
    if (!carry.is_zero())
        throw DomainError("x - (" + root.str() + ") does not divide the polynomial (remainder " +
                          carry.str() + ")");
    return Polynomial(std::move(q));
}

}  // namespace hypsign
