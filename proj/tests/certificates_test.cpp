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

#include "hypsign/certificates.hpp"
#include "hypsign/errors.hpp"
#include "hypsign/polyalgebra.hpp"

using namespace hypsign;

TEST_CASE("Lemma 1 quantities at a small point") {
    auto r = eval_lemma1({2, {Rational(1), Rational(1)}, Rational(1, 2)});
    CHECK(r.e == std::vector<Rational>{1, 2, 1});
    CHECK(r.t_next == Rational(-1));
    CHECK(r.G == Rational(2));
    CHECK(r.slack == Rational(0));
    CHECK_FALSE(r.violation);
    CHECK_THROWS_AS(eval_lemma1({2, {Rational(1), Rational(1)}, Rational(2)}), DomainError);
    CHECK_THROWS_AS(eval_lemma1({2, {Rational(1)}, Rational(1, 2)}), DomainError);
}

TEST_CASE("Lemma 6 at the all-ones corner") {
    auto r = eval_lemma6({5, std::vector<Rational>(6, Rational(1)), Rational(1, 2)});
    CHECK(r.e[2] == Rational(15));
    CHECK(r.s_minus1 == Rational(6));
    CHECK(r.reduced_margin == Rational(-14));
    CHECK(r.reciprocal_bound == false);  // 1/alpha_1 = 2 < 6
    // With seven unit values the same expression is C(8,4) = 70.
    std::vector<Rational> seven(7, Rational(1));
    auto e = elementary_symmetric_upto(seven, 7);
    CHECK(Rational(7) * (e[4] - e[2]) - e[3] + e[1] == Rational(70));
    CHECK_THROWS_AS(eval_lemma6({5, std::vector<Rational>(6, Rational(1, 2)), Rational(1, 2)}), DomainError);
}

TEST_CASE("Lemma 7 corner has a closed form") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> num(1, 300);
    for (int t = 0; t < 200; ++t) {
        Rational g1(num(rng), 100), extra(num(rng), 100);
        Rational g4 = g1 + extra;
        auto r = eval_lemma7({g1, Rational(2) * g1 + g4, {g1, g1, g1, g4}});
        CHECK(r.c_top == Rational(0));
        CHECK(r.c2_over_delta == Rational(3) / (g4 * (g4 + Rational(2) * g1)));
        CHECK_FALSE(r.violation);
    }
    CHECK_THROWS_AS(eval_lemma7({Rational(5), Rational(6), {Rational(1), Rational(2), Rational(3), Rational(4)}}),
                    DomainError);
}

TEST_CASE("Lemma 8 reduced polynomial") {
    CHECK(lemma8_K(Rational(1), Rational(1)) == Rational(-8));
    auto c = eval_lemma8_corner(Rational(1), Rational(1));
    CHECK(c.a == Rational(5));
    CHECK(c.identity_holds);
    std::mt19937_64 rng(55);
    std::uniform_int_distribution<long> rn(20, 100), wn(100, 400);
    for (int t = 0; t < 300; ++t) {
        Rational r(rn(rng), 100), w(wn(rng), 100);
        auto corner = eval_lemma8_corner(r, w);
        CHECK(corner.identity_holds);
        CHECK(corner.a * Rational::pow(r, 3) * w * corner.c3_over_delta == Rational(-2) * corner.K);
    }
}

TEST_CASE("Lemma 8 quantities") {
    std::vector<Rational> g(5, Rational(1, 2));
    g.push_back(Rational(2));
    auto r = eval_lemma8({Rational(4), g});
    CHECK(r.A1 == Rational(5));
    CHECK(r.H1 == Rational(9, 2));
    CHECK(r.c7 == Rational(-1, 2));
    CHECK(r.violation == (r.c3.sign() < 0));
}

TEST_CASE("sampling arguments are validated") {
    CHECK_THROWS_AS(sample_region(2, 5, 10, 1), DomainError);
    CHECK_THROWS_AS(sample_region(1, 1, 10, 1), DomainError);
    CHECK_THROWS_AS(sample_region(6, 4, 10, 1), DomainError);
    CHECK_THROWS_AS(sample_region(7, 3, 10, 1), DomainError);
    CHECK_THROWS_AS(sample_region(8, 6, 10, 1), DomainError);
    CHECK_THROWS_AS(sample_region(1, 2, 0, 1), DomainError);
}

TEST_CASE("a single sample is a complete report") {
    for (auto [lemma, n] : std::vector<std::pair<int, int>>{{1, 3}, {6, 5}, {7, 4}, {8, 5}}) {
        auto r = sample_region(lemma, n, 1, 99);
        CHECK(r.count == 1);
        CHECK(r.violations <= 1);
        CHECK(r.extremal_index == 0);
        CHECK_FALSE(r.extremal_sample.empty());
        CHECK_FALSE(r.margin_quantity.empty());
    }
}

TEST_CASE("reports do not depend on the thread count") {
    for (auto [lemma, n] : std::vector<std::pair<int, int>>{{1, 4}, {6, 5}, {7, 5}, {8, 5}}) {
        auto a = sample_region(lemma, n, 3000, 20261018, 1);
        auto b = sample_region(lemma, n, 3000, 20261018, 3);
        CHECK(a == b);
        CHECK(sample_region(lemma, n, 3000, 20261019, 1).seed == 20261019);
    }
}

TEST_CASE("Lemma 8 sampling covers the reduced corner") {
    auto r = sample_region(8, 5, 2000, 3);
    CHECK(r.counter("corner_samples") > 0);
    CHECK(r.counter("corner_identity_failures") == 0);
    REQUIRE(r.value("K(1,1)"));
    CHECK(*r.value("K(1,1)") == Rational(-8));
    CHECK(r.value("no such value") == nullptr);
}
