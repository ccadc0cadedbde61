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


#include <doctest.h>

#include <random>

#include "hypsign/errors.hpp"
#include "hypsign/polyalgebra.hpp"

using namespace hypsign;

namespace {

Rational q(const char *text) { return Rational::parse(text); }

std::vector<Rational> coeffs(const Polynomial &p) { return {p.coefficients().begin(), p.coefficients().end()}; }

// a_{d-j} = (-1)^j * sum over j-subsets of the product of the signed roots.
std::vector<Rational> vieta_by_subsets(const std::vector<Rational> &roots) {
    const std::size_t d = roots.size();
    std::vector<Rational> out(d + 1, Rational(0));
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        Rational prod(1);
        int size = 0;
        for (std::size_t i = 0; i < d; ++i)
            if (mask & (1u << i)) {
                prod *= roots[i];
                ++size;
            }
        out[size] += size % 2 ? -prod : prod;
    }
    return out;
}

RootConfiguration random_roots(std::mt19937_64 &rng, std::size_t positives, std::size_t negatives) {
    std::uniform_int_distribution<long> num(1, 400), den(1, 40);
    std::vector<Rational> a, g;
    for (std::size_t i = 0; i < positives; ++i) a.emplace_back(num(rng), den(rng));
    for (std::size_t i = 0; i < negatives; ++i) g.emplace_back(num(rng), den(rng));
    return RootConfiguration(a, g);
}

}  // namespace

TEST_CASE("degree 5 worked example") {
    RootConfiguration roots({q("0.5"), q("1")}, {q("1.1"), q("1.2"), q("1.3")});
    auto p = expand(roots);
    CHECK(coeffs(p) == std::vector<Rational>{1, q("21/10"), q("-59/100"), q("-2949/1000"), q("-419/1000"),
                                             q("429/500")});
    auto cls = classify(p, roots);
    REQUIRE(cls.couple);
    CHECK(cls.couple->str() == "S(2,3,1)/PPNNN");
}

TEST_CASE("degree 7 example with a five-fold root") {
    const Rational g = q("1.01");
    RootConfiguration roots({q("0.1"), q("1")}, {g, g, g, g, g});
    auto p = expand(roots);
    CHECK(p.coefficient(7) == Rational(1));
    CHECK(p.coefficient(2) == q("-36420110049/10000000000"));
    CHECK(p.coefficient(1) == q("-63580905011/100000000000"));
    CHECK(p.coefficient(0) == q("10510100501/100000000000"));
    auto cls = classify(p, roots);
    CHECK_FALSE(cls.couple.has_value());
    CHECK(cls.genericity.tied_moduli == std::vector<Rational>{g});
    CHECK(cls.genericity.vanishing_powers.empty());
    REQUIRE(sign_pattern_of(p));
    CHECK(sign_pattern_of(p)->block_str() == "S(3,4,1)");
}

TEST_CASE("elementary symmetric functions") {
    std::vector<Rational> v{1, 2, 3, 4};
    CHECK(elementary_symmetric(v, 0) == Rational(1));
    CHECK(elementary_symmetric(v, 1) == Rational(10));
    CHECK(elementary_symmetric(v, 2) == Rational(35));
    CHECK(elementary_symmetric(v, 3) == Rational(50));
    CHECK(elementary_symmetric(v, 4) == Rational(24));
    CHECK(elementary_symmetric(v, 5) == Rational(0));
    CHECK(elementary_symmetric(v, -1) == Rational(0));
    CHECK(elementary_symmetric_upto(v, 9) == std::vector<Rational>{1, 10, 35, 50, 24});
    std::vector<Rational> ones(6, Rational(1));
    CHECK(elementary_symmetric(ones, 3) == Rational(20));
}

TEST_CASE("expansion matches a subset-sum Vieta oracle") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        auto roots = random_roots(rng, rng() % 5, rng() % 6);
        if (roots.degree() == 0) continue;
        CHECK(coeffs(expand(roots)) == vieta_by_subsets(roots.signed_roots()));
    }
}

TEST_CASE("expansion is multiplicative over root splits") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        auto a = random_roots(rng, 1 + rng() % 3, 1 + rng() % 3);
        auto b = random_roots(rng, 1 + rng() % 3, 1 + rng() % 3);
        auto alpha = a.alpha(), gamma = a.gamma();
        alpha.insert(alpha.end(), b.alpha().begin(), b.alpha().end());
        gamma.insert(gamma.end(), b.gamma().begin(), b.gamma().end());
        CHECK(expand(RootConfiguration(alpha, gamma)) == expand(a) * expand(b));
    }
}

TEST_CASE("deflation undoes adjoining a root") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
        auto roots = random_roots(rng, 1 + rng() % 3, 1 + rng() % 4);
        auto p = expand(roots);
        for (const auto &g : roots.gamma()) {
            auto rest = roots.gamma();
            rest.erase(std::find(rest.begin(), rest.end(), g));
            CHECK(deflate_negative_root(p, g) == expand(RootConfiguration(roots.alpha(), rest)));
        }
        CHECK(deflate_root(p, roots.alpha().front()) * Polynomial({1, -roots.alpha().front()}) == p);
    }
    CHECK_THROWS_AS(deflate_root(Polynomial({1, 0, -1}), Rational(2)), DomainError);
}

TEST_CASE("generic configurations satisfy Descartes with equality") {
    std::mt19937_64 rng(13);
    int generic = 0;
    for (int t = 0; t < 300; ++t) {
        auto roots = random_roots(rng, rng() % 5, rng() % 5);
        if (roots.degree() == 0) continue;
        auto cls = classify(roots);
        if (!cls.couple) continue;
        ++generic;
        CHECK(cls.couple->pattern().changes() == static_cast<int>(roots.alpha().size()));
        CHECK(cls.couple->order() == *roots.order());
    }
    CHECK(generic > 100);
}

TEST_CASE("non-generic configuration reports every failure") {
    RootConfiguration roots({Rational(1)}, {Rational(1)});
    auto p = expand(roots);
    CHECK(coeffs(p) == std::vector<Rational>{1, 0, -1});
    auto cls = classify(p, roots);
    CHECK_FALSE(cls.couple);
    CHECK(cls.genericity.vanishing_powers == std::vector<std::size_t>{1});
    CHECK(cls.genericity.tied_moduli == std::vector<Rational>{1});
    CHECK_FALSE(cls.genericity.describe().empty());
    CHECK_FALSE(sign_pattern_of(p));
}

TEST_CASE("configuration_from_order places moduli by position") {
    std::vector<Rational> m{1, 2, 3, 4};
    auto roots = configuration_from_order(OrderWord::parse("NPNP"), m);
    CHECK(roots.alpha() == std::vector<Rational>{2, 4});
    CHECK(roots.gamma() == std::vector<Rational>{1, 3});
    CHECK(roots.order()->str() == "NPNP");
    CHECK_THROWS(RootConfiguration({Rational(0)}, {}));
}
