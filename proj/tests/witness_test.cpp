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

#include <algorithm>
#include <cstdio>
#include <filesystem>

#include "hypsign/decision.hpp"
#include "hypsign/errors.hpp"
#include "hypsign/witness.hpp"

using namespace hypsign;

namespace {

Rational q(const char *text) { return Rational::parse(text); }

RootConfiguration degree5_roots() { return RootConfiguration({q("0.5"), q("1")}, {q("1.1"), q("1.2"), q("1.3")}); }

bool mentions(const VerifyReport &r, const std::string &needle) {
    return std::any_of(r.mismatches.begin(), r.mismatches.end(),
                       [&](const std::string &m) { return m.find(needle) != std::string::npos; });
}

SearchBudget budget_of(std::size_t trials, unsigned strategies = kAllStrategies & ~kUseArchive) {
    SearchBudget b;
    b.max_trials = trials;
    b.strategies = strategies;
    return b;
}

}  // namespace

TEST_CASE("worked record verifies") {
    auto rec = make_record(Couple::parse("S(2,3,1)", "PPNNN"), degree5_roots());
    CHECK_FALSE(rec.verified);
    CHECK(verify(rec));
    CHECK(rec.verified);
    CHECK(check(rec).mismatches.empty());
}

TEST_CASE("wrong order letter is reported by position") {
    auto rec = make_record(Couple::parse("S(2,3,1)", "PNPNN"), degree5_roots());
    auto rep = check(rec);
    CHECK_FALSE(rep.ok);
    CHECK(mentions(rep, "order position 2: roots give P, couple has N"));
    CHECK(mentions(rep, "order position 3"));
    CHECK_FALSE(verify(rec));
}

TEST_CASE("wrong pattern and tampered coefficients are reported") {
    auto rec = make_record(Couple::parse("S(3,2,1)", "PPNNN"), degree5_roots());
    CHECK(mentions(check(rec), "coefficient of x^3 has sign -, pattern expects +"));

    auto good = make_record(Couple::parse("S(2,3,1)", "PPNNN"), degree5_roots());
    auto c = std::vector<Rational>(good.poly.coefficients().begin(), good.poly.coefficients().end());
    c[2] = c[2] + Rational(1, 1000);
    good.poly = Polynomial(c);
    CHECK(mentions(check(good), "stored coefficient of x^3"));
}

TEST_CASE("non-generic roots are reported") {
    const Rational g = q("1.01");
    auto rec = make_record(Couple::parse("S(3,4,1)", "PPNNNNN"), RootConfiguration({q("0.1"), q("1")}, {g, g, g, g, g}));
    auto rep = check(rec);
    CHECK_FALSE(rep.ok);
    CHECK(mentions(rep, "non-generic"));
}

TEST_CASE("flat extension") {
    // S(2,2) realized by x^3 + x^2 - x - 1 style roots: one positive, two negative.
    RootConfiguration flat({Rational(1)}, {Rational(2), Rational(3)});
    CHECK_THROWS_AS(construct_flat_extension(flat, Rational(0)), DomainError);
    CHECK_THROWS_AS(construct_flat_extension(flat, Rational(1)), DomainError);
    CHECK_THROWS_AS(construct_flat_extension(flat, Rational(3, 2)), DomainError);
    auto ext = construct_flat_extension(flat, Rational(1, 100));
    CHECK(ext.alpha() == std::vector<Rational>{Rational(1, 100), Rational(1)});
    CHECK(ext.gamma() == flat.gamma());
    CHECK(deflate_root(expand(ext), Rational(1, 100)) == expand(flat));
    // A tiny positive root appends a sign change at the constant term.
    auto base = sign_pattern_of(expand(flat));
    auto grown = sign_pattern_of(expand(ext));
    REQUIRE(base);
    REQUIRE(grown);
    auto b = base->blocks(), g = grown->blocks();
    b.push_back(1);
    CHECK(g == b);
}

TEST_CASE("perturbed multiple root") {
    const Rational g = q("1.01");
    RootConfiguration base({q("0.1"), q("1")}, {g, g, g, g, g});
    CHECK(construct_perturbed_multiple(base, Rational(0)) == base);
    CHECK(classify(construct_perturbed_multiple(base, Rational(0))).genericity.tied_moduli.size() == 1);
    CHECK_THROWS_AS(construct_perturbed_multiple(base, Rational(-1, 10)), DomainError);
    CHECK_THROWS_AS(construct_perturbed_multiple(degree5_roots(), Rational(1, 10)), DomainError);

    auto spread = construct_perturbed_multiple(base, Rational(1, 1000));
    CHECK(spread.gamma().size() == 5);
    for (const auto &x : spread.gamma()) {
        CHECK(x > g - Rational(1, 1000));
        CHECK(x < g + Rational(1, 1000));
    }
    auto cls = classify(spread);
    REQUIRE(cls.couple);
    CHECK(cls.couple->str() == "S(3,4,1)/PPNNNNN");
}

TEST_CASE("search finds realizable couples and exhausts on others") {
    auto found = search(Couple::parse("S(2,3,1)", "PNNNP"), budget_of(100000));
    REQUIRE(found.witness);
    CHECK(found.witness->verified);
    CHECK(found.exhausted.empty());
    CHECK(found.trials <= 100000);

    auto none = search(Couple::parse("S(2,3,1)", "NNPPN"), budget_of(3000));
    CHECK_FALSE(none.witness);
    CHECK(none.trials <= 3000);
    CHECK_FALSE(none.exhausted.empty());

    auto linear = search(Couple::parse("+-", "P"), budget_of(100));
    REQUIRE(linear.witness);
    CHECK(linear.witness->poly.degree() == 1);
    CHECK(linear.witness->poly.coefficient(0).sign() < 0);
}

TEST_CASE("each strategy works on its own where it applies") {
    auto c = Couple::parse("S(2,3,1)", "PPNNN");
    for (unsigned s : {kUseLadder, kUseFlatExtension, kUsePerturbedMultiple, kUseAnnealing}) {
        auto out = search(c, budget_of(100000, s));
        if (out.witness) CHECK(out.witness->verified);
    }
    auto annealed = search(Couple::parse("S(2,4,1)", "PNNNPN"), budget_of(100000, kUseAnnealing));
    REQUIRE(annealed.witness);
    CHECK(annealed.witness->strategy == Strategy::Annealing);
}

TEST_CASE("search is deterministic and seed-dependent in its stream") {
    auto c = Couple::parse("S(2,4,1)", "PNNNNP");
    auto a = search(c, budget_of(100000));
    auto b = search(c, budget_of(100000));
    REQUIRE(a.witness);
    REQUIRE(b.witness);
    CHECK(a.witness->roots == b.witness->roots);
    CHECK(a.trials == b.trials);
    CHECK(search_seed(c, 0) != search_seed(c, 1));
    CHECK(search_seed(c, 7) == search_seed(c, 7));
}

TEST_CASE("budget validation") {
    SearchBudget b;
    CHECK_NOTHROW(b.validate());
    b.max_trials = 0;
    CHECK_THROWS_AS(b.validate(), DomainError);
    b.max_trials = 10;
    b.ladder_ratios = {Rational(1)};
    CHECK_THROWS_AS(b.validate(), DomainError);
}

TEST_CASE("archive round trip") {
    auto path = std::filesystem::temp_directory_path() / "hypsign_witness_test_archive.json";
    std::filesystem::remove(path);
    auto rec = make_record(Couple::parse("S(2,3,1)", "PPNNN"), degree5_roots());
    {
        WitnessArchive archive(path);
        CHECK(archive.size() == 0);
        CHECK_THROWS_AS(archive.insert(make_record(Couple::parse("S(2,3,1)", "PNNNP"), degree5_roots())),
                        DomainError);
        REQUIRE(verify(rec));
        archive.insert(rec);
        archive.save();
    }
    WitnessArchive reloaded(path);
    CHECK(reloaded.size() == 1);
    auto hit = reloaded.lookup(rec.couple);
    REQUIRE(hit);
    CHECK(hit->roots == rec.roots);
    CHECK_FALSE(reloaded.lookup(Couple::parse("S(2,3,1)", "PNNNP")));

    auto out = search(rec.couple, SearchBudget{}, &reloaded);
    REQUIRE(out.witness);
    CHECK(out.witness->strategy == Strategy::Archive);
    std::filesystem::remove(path);
}

TEST_CASE("strategy names round-trip") {
    for (Strategy s : {Strategy::Given, Strategy::Archive, Strategy::Ladder, Strategy::FlatExtension,
                       Strategy::PerturbedMultiple, Strategy::Annealing})
        CHECK(parse_strategy(to_string(s)) == s);
}
