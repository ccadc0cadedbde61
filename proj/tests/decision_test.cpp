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
#include <set>

#include "hypsign/decision.hpp"
#include "hypsign/errors.hpp"
#include "hypsign/polyalgebra.hpp"

using namespace hypsign;

namespace {

Status status_of(const char *pattern, const char *order, RuleSet rules = RuleSet::Reconciled) {
    return decide(Couple::parse(pattern, order), rules).status;
}

std::set<std::string> realizable_orders(std::size_t d, const SignPattern &pattern, RuleSet rules) {
    std::set<std::string> out;
    for (const auto &row : enumerate(d, ShapeFilter::All, rules).rows)
        if (row.couple.pattern() == pattern && row.verdict.status == Status::Realizable)
            out.insert(row.couple.order().str());
    return out;
}

}  // namespace

TEST_CASE("one sign change, m >= n") {
    // S(4,2): d = 5, alpha_1 below gamma_3
    CHECK(status_of("S(4,2)", "PNNNN") == Status::Realizable);
    CHECK(status_of("S(4,2)", "NNPNN") == Status::Realizable);
    CHECK(status_of("S(4,2)", "NNNPN") == Status::NonRealizable);
    CHECK(status_of("S(4,2)", "NNNNP") == Status::NonRealizable);
    auto v = decide_one_change(Couple::parse("S(4,2)", "NNNPN"));
    CHECK(v.clause == "Thm1");
}

TEST_CASE("one sign change, m < n, both rule sets") {
    // Reconciled: gamma_{d-2m+1} < alpha_1.
    auto c = Couple::parse("S(1,3)", "NPN");
    CHECK(decide_one_change(c, RuleSet::Reconciled).status == Status::NonRealizable);
    CHECK(decide_one_change(c, RuleSet::Published).status == Status::Realizable);
    CHECK(decide_one_change(Couple::parse("S(1,3)", "NNP")).status == Status::Realizable);
    // Full decision sees NPN as a rigid order whose pattern is S(2,2).
    CHECK(status_of("S(1,3)", "NPN", RuleSet::Published) == Status::NonRealizable);

    CHECK(status_of("S(2,5)", "NNNPNN") == Status::Realizable);
    CHECK(status_of("S(2,5)", "NNPNNN") == Status::NonRealizable);
    CHECK(status_of("S(2,5)", "NNPNNN", RuleSet::Published) == Status::Realizable);
}

TEST_CASE("shape helpers reject other shapes") {
    CHECK(one_change_shape(SignPattern::parse("S(2,3)")) == std::pair{2, 3});
    CHECK_FALSE(one_change_shape(SignPattern::parse("S(2,3,1)")).has_value());
    CHECK(two_change_shape(SignPattern::parse("S(2,3,1)")) == std::pair{2, 3});
    CHECK_FALSE(two_change_shape(SignPattern::parse("S(2,3,2)")).has_value());
    CHECK_THROWS_AS(decide_one_change(Couple::parse("S(2,3,1)", "PPNNN")), DomainError);
    CHECK_THROWS_AS(decide_two_change(Couple::parse("S(2,3)", "PNNN")), DomainError);
}

TEST_CASE("small two-change tables") {
    using V = std::set<std::string>;
    CHECK(realizable_orders(5, SignPattern::from_blocks({2, 3, 1}), RuleSet::Reconciled) ==
          V{"NPPNN", "PPNNN", "PNPNN", "PNNPN", "PNNNP"});
    CHECK(realizable_orders(6, SignPattern::from_blocks({2, 4, 1}), RuleSet::Reconciled) ==
          V{"PNNPNN", "PNNNPN", "PNNNNP"});
    CHECK(realizable_orders(7, SignPattern::from_blocks({3, 4, 1}), RuleSet::Reconciled) ==
          V{"PPNNNNN", "PNPNNNN", "PNNPNNN", "PNNNPNN", "PNNNNPN", "PNNNNNP"});
    CHECK(decide(Couple::parse("S(2,4,1)", "PNNPNN")).clause == "Thm2(8)");
}

TEST_CASE("m > n with nu too large") {
    auto v = decide(Couple::parse("S(5,4,1)", "PNNNNNNNP"));
    CHECK(v.status == Status::NonRealizable);
    CHECK(v.clause == "Thm2(2)");
    CHECK(decide(Couple::parse("S(5,4,1)", "PNNNNNNPN")).status == Status::Realizable);
}

TEST_CASE("S(2,5,1): literal clause against the reconciled one") {
    auto s = SignPattern::from_blocks({2, 5, 1});
    CHECK(realizable_orders(7, s, RuleSet::Published).size() == 15);
    CHECK(realizable_orders(7, s, RuleSet::Reconciled) == std::set<std::string>{"PNNNPNN", "PNNNNPN", "PNNNNNP"});
}

TEST_CASE("known counterexamples are exact and decided by witness") {
    REQUIRE(known_counterexamples().size() == 2);
    for (const auto &ce : known_counterexamples()) {
        auto cls = classify(ce.roots);
        REQUIRE(cls.couple);
        CHECK(*cls.couple == ce.couple);
        CHECK(nu_of_order(ce.couple.order()) == 0);
        auto v = decide(ce.couple);
        CHECK(v.status == Status::Realizable);
        CHECK(v.clause == "Witness");
        CHECK(decide(ce.couple, RuleSet::Published).status == Status::NonRealizable);
    }
}

TEST_CASE("verdicts are constant on orbits up to degree 8") {
    for (std::size_t d = 1; d <= 8; ++d) {
        for (const auto &row : enumerate(d, ShapeFilter::Supported).rows) {
            for (const auto &img : orbit(row.couple)) {
                INFO(row.couple.str() << " vs " << img.str());
                CHECK(decide(img).status == row.verdict.status);
            }
        }
    }
}

TEST_CASE("canonical orders are realizable") {
    for (std::size_t d = 1; d <= 8; ++d) {
        for (const auto &p : all_patterns(d)) {
            auto v = decide(Couple(p, canonical_order(p)));
            if (v.status == Status::OutOfScope) continue;
            INFO(p.block_str());
            CHECK(v.status == Status::Realizable);
        }
    }
}

TEST_CASE("rigid orders realize only their canonical pattern") {
    for (std::size_t d = 1; d <= 8; ++d)
        for (const auto &p : all_patterns(d))
            for (const auto &w : all_orders(d, p.changes()))
                if (is_rigid_order(w))
                    CHECK((decide(Couple(p, w)).status == Status::Realizable) == (w == canonical_order(p)));
}

TEST_CASE("enumeration output does not depend on threads") {
    auto a = enumerate(7, ShapeFilter::Supported, RuleSet::Reconciled, 1);
    auto b = enumerate(7, ShapeFilter::Supported, RuleSet::Reconciled, 4);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].couple == b.rows[i].couple);
        CHECK(a.rows[i].verdict.status == b.rows[i].verdict.status);
        CHECK(a.rows[i].verdict.clause == b.rows[i].verdict.clause);
    }
    std::size_t total = 0;
    for (const auto &t : a.tallies) {
        CHECK(t.compatible == t.realizable + t.non_realizable + t.out_of_scope);
        total += t.compatible;
    }
    CHECK(total == a.rows.size());
}

TEST_CASE("names round-trip") {
    for (Status s : {Status::Realizable, Status::NonRealizable, Status::OutOfScope}) CHECK(parse_status(to_string(s)) == s);
    for (RuleSet r : {RuleSet::Reconciled, RuleSet::Published}) CHECK(parse_rule_set(to_string(r)) == r);
    for (ShapeFilter f : {ShapeFilter::OneChange, ShapeFilter::TwoChange, ShapeFilter::Supported, ShapeFilter::All})
        CHECK(parse_shape_filter(to_string(f)) == f);
    CHECK_THROWS(parse_rule_set("strict"));
}
