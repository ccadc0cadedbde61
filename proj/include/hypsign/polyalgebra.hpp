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

// Exact polynomial algebra over the rationals, root-first: configurations of
// positive roots and negative-root moduli are expanded into monic
// polynomials, then classified into (sign pattern, order) couples.

#ifndef HYPSIGN_POLYALGEBRA_HPP
#define HYPSIGN_POLYALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypsign/patterns.hpp"
#include "hypsign/rational.hpp"

namespace hypsign {

/// e_j of the values; e_0 = 1, and e_j = 0 for j < 0 or j > values.size().
Rational elementary_symmetric(std::span<const Rational> values, int j);

/// e_0 .. e_k in one pass (k clamped to values.size()).
std::vector<Rational> elementary_symmetric_upto(std::span<const Rational> values, std::size_t k);

/// Positive roots alpha (increasing) and moduli gamma (increasing) of the
/// negative roots -gamma. Repeated entries encode multiplicity.
class RootConfiguration {
public:
    RootConfiguration() = default;
    /// Sorts both lists; every entry must be > 0.
    RootConfiguration(std::vector<Rational> alpha, std::vector<Rational> gamma);

    const std::vector<Rational> &alpha() const { return alpha_; }
    const std::vector<Rational> &gamma() const { return gamma_; }
    std::size_t degree() const { return alpha_.size() + gamma_.size(); }

    /// Signed roots: alpha as is, gamma negated.
    std::vector<Rational> signed_roots() const;

    /// Order word of the moduli, or empty if two moduli coincide.
    std::optional<OrderWord> order() const;
    /// Moduli that occur more than once (each listed once, increasing).
    std::vector<Rational> tied_moduli() const;

    friend bool operator==(const RootConfiguration &, const RootConfiguration &) = default;

private:
    std::vector<Rational> alpha_;
    std::vector<Rational> gamma_;
};

/// Configuration with the given order word and moduli listed by increasing position.
RootConfiguration configuration_from_order(const OrderWord &order, std::span<const Rational> moduli);

/// Monic polynomial; coefficients stored leading first (a_d, a_{d-1}, ..., a_0).
class Polynomial {
public:
    /// Requires a non-empty list whose first entry is 1.
    explicit Polynomial(std::vector<Rational> coefficients_leading_first);

    std::size_t degree() const { return coeffs_.size() - 1; }
    std::span<const Rational> coefficients() const { return coeffs_; }
    /// a_j, the coefficient of x^j.
    const Rational &coefficient(std::size_t power) const { return coeffs_[degree() - power]; }

    Rational evaluate(const Rational &x) const;

    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
    std::vector<Rational> coeffs_;
};

/// prod (x - alpha_i) * prod (x + gamma_j), by incremental linear factors.
Polynomial expand(const RootConfiguration &roots);

/// Why a configuration is not generic.
struct Genericity {
    std::vector<std::size_t> vanishing_powers;  ///< j with a_j == 0, decreasing
    std::vector<Rational> tied_moduli;

    bool generic() const { return vanishing_powers.empty() && tied_moduli.empty(); }
    std::string describe() const;
};

struct Classification {
    std::optional<Couple> couple;  ///< present iff genericity.generic()
    Genericity genericity;
};

/// Sign pattern of a polynomial with no vanishing coefficient.
std::optional<SignPattern> sign_pattern_of(const Polynomial &poly);

/// (sigma(poly), order of moduli), or the genericity failure.
Classification classify(const Polynomial &poly, const RootConfiguration &roots);
Classification classify(const RootConfiguration &roots);

/// Q1 with poly == (x - root) * Q1. Throws DomainError if root is not a root of poly.
Polynomial deflate_root(const Polynomial &poly, const Rational &root);
/// Q1 with poly == (x + gamma) * Q1.
inline Polynomial deflate_negative_root(const Polynomial &poly, const Rational &gamma) {
    return deflate_root(poly, -gamma);
}

}  // namespace hypsign

#endif  // HYPSIGN_POLYALGEBRA_HPP
