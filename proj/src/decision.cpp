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

#include "hypsign/decision.hpp"

#include <algorithm>
#include <array>

#include "hypsign/errors.hpp"
#include "hypsign/parallel.hpp"

namespace hypsign {

namespace {

Verdict make(bool realizable, std::string clause) {
    Verdict v;
    v.status = realizable ? Status::Realizable : Status::NonRealizable;
    v.clause = std::move(clause);
    return v;
}

std::string exceptional_order(std::size_t degree) {
    // gamma_1 < alpha_1 < alpha_2 < gamma_2 < ... < gamma_{d-2}
    return "NPP" + std::string(degree - 3, 'N');
}

bool in_table(const std::string &order, std::initializer_list<const char *> table) {
    return std::any_of(table.begin(), table.end(), [&](const char *w) { return order == w; });
}

SignPattern pattern_m(const SignPattern &p) {
    auto cp = sign_to_cp(p);
    std::vector<Step> steps;
    for (Step s : cp.steps()) steps.push_back(s == Step::Change ? Step::Preservation : Step::Change);
    return cp_to_sign(CpPattern(std::move(steps)));
}

SignPattern pattern_r(const SignPattern &p) {
    auto cp = sign_to_cp(p);
    return cp_to_sign(CpPattern(std::vector<Step>(cp.steps().rbegin(), cp.steps().rend())));
}

bool supported_shape(const SignPattern &p) {
    return one_change_shape(p).has_value() || two_change_shape(p).has_value();
}

}  // namespace

std::string_view to_string(Status s) {
    switch (s) {
        case Status::Realizable: return "Realizable";
        case Status::NonRealizable: return "NonRealizable";
        case Status::OutOfScope: return "OutOfScope";
    }
    return "?";
}

Status parse_status(std::string_view text) {
    for (Status s : {Status::Realizable, Status::NonRealizable, Status::OutOfScope})
        if (to_string(s) == text) return s;
    throw ParseError("unknown status", std::string(text), 0);
}

std::string_view to_string(RuleSet r) { return r == RuleSet::Reconciled ? "reconciled" : "published"; }

RuleSet parse_rule_set(std::string_view text) {
    if (text == "reconciled") return RuleSet::Reconciled;
    if (text == "published") return RuleSet::Published;
    throw ParseError("unknown rule set (expected reconciled or published)", std::string(text), 0);
}

std::string_view to_string(Transform t) {
    switch (t) {
        case Transform::Identity: return "identity";
        case Transform::InvolutionM: return "i_m";
        case Transform::InvolutionR: return "i_r";
        case Transform::InvolutionMR: return "i_m*i_r";
    }
    return "?";
}

Couple apply(Transform t, const Couple &couple) {
    switch (t) {
        case Transform::Identity: return couple;
        case Transform::InvolutionM: return involution_m(couple);
        case Transform::InvolutionR: return involution_r(couple);
        case Transform::InvolutionMR: return involution_m(involution_r(couple));
    }
    return couple;
}

std::optional<std::pair<int, int>> one_change_shape(const SignPattern &pattern) {
    auto b = pattern.blocks();
    if (b.size() != 2) return std::nullopt;
    return std::pair{b[0], b[1]};
}

std::optional<std::pair<int, int>> two_change_shape(const SignPattern &pattern) {
    auto b = pattern.blocks();
    if (b.size() != 3 || b[2] != 1) return std::nullopt;
    return std::pair{b[0], b[1]};
}

Verdict decide_one_change(const Couple &couple, RuleSet rules) {
    auto shape = one_change_shape(couple.pattern());
    if (!shape) throw DomainError("decide_one_change: pattern " + couple.pattern().block_str() + " is not S(m,n)");
    const auto [m, n] = *shape;
    const int d = m + n - 1;
    const int p = couple.order().positive_positions().at(0);
    Verdict v;
    if (n <= m) {
        // alpha_1 < gamma_{2n-1}: at most 2n-2 moduli of negative roots below alpha_1.
        v = make(p <= 2 * n - 1, "Thm1");
    } else if (rules == RuleSet::Published) {
        v = make(p >= d - 2 * m + 1, "Thm1");
    } else {
        // gamma_{d-2m+1} < alpha_1
        v = make(p >= d - 2 * m + 2, "Thm1");
    }
    v.decided = couple;
    return v;
}

const std::vector<KnownCounterexample> &known_counterexamples() {
    static const std::vector<KnownCounterexample> table = [] {
        std::vector<KnownCounterexample> out;
        // S(n-1,n,1) with nu = 0: alpha_1 small, alpha_2 = 1 and 2n-3 negative
        // roots clustered just beyond -1.
        for (int n : {5, 6}) {
            std::vector<Rational> gamma;
            for (int k = 1; k <= 2 * n - 3; ++k) gamma.emplace_back(1000 + k, 1000);
            RootConfiguration roots({Rational(1, 10L * n), Rational(1)}, std::move(gamma));
            Couple couple(SignPattern::from_blocks({n - 1, n, 1}),
                          OrderWord::parse("PP" + std::string(static_cast<std::size_t>(2 * n - 3), 'N')));
            out.push_back({std::move(couple), std::move(roots), "Thm2(7)"});
        }
        return out;
    }();
    return table;
}

Verdict decide_two_change(const Couple &couple, RuleSet rules) {
    auto shape = two_change_shape(couple.pattern());
    if (!shape)
        throw DomainError("decide_two_change: pattern " + couple.pattern().block_str() + " is not S(m,n,1)");
    const auto [m, n] = *shape;
    const auto d = couple.degree();
    const auto pos = couple.order().positive_positions();
    const int p1 = pos.at(0);
    const int nu = pos.at(1) - 2;
    const std::string order = couple.order().str();
    const bool alpha1_first = p1 == 1;

    auto finish = [&](Verdict v) {
        v.decided = couple;
        return v;
    };

    if (rules == RuleSet::Reconciled) {
        for (const auto &ce : known_counterexamples()) {
            if (ce.couple == couple) {
                Verdict v = make(true, "Witness");
                v.note = "exact witness contradicts " + ce.contradicts;
                return finish(std::move(v));
            }
        }
    }

    if (m > n) {
        if (n == 1) return finish(make(couple.order() == canonical_order(couple.pattern()), "Thm2(1)"));
        if (n >= 4) return finish(make(alpha1_first && nu <= 2 * n - 2, "Thm2(2)"));
        return finish(make((alpha1_first && nu <= 2 * n - 2) || order == exceptional_order(d), "Thm2(3)"));
    }
    if (m == n) {
        if (n == 1) return finish(make(true, "Thm2(8)"));  // d = 2, the order PP
        if (n >= 4) return finish(make(alpha1_first, "Thm2(4)"));
        return finish(make(alpha1_first || order == exceptional_order(d), "Thm2(5)"));
    }
    // m < n
    if (m == 1 && n >= 3) return finish(make(couple.order() == canonical_order(couple.pattern()), "Thm2(6)"));
    if (m >= 2 && n >= 5) {
        bool ok = nu >= n - m;
        if (rules == RuleSet::Reconciled && m == 2) ok = ok && alpha1_first;
        return finish(make(ok, "Thm2(7)"));
    }
    if (m == 1 && n == 2) return finish(make(true, "Thm2(8)"));
    if (m == 2 && n == 3)
        return finish(make(in_table(order, {"NPPNN", "PPNNN", "PNPNN", "PNNPN", "PNNNP"}), "Thm2(8)"));
    if (m == 2 && n == 4) return finish(make(in_table(order, {"PNNPNN", "PNNNPN", "PNNNNP"}), "Thm2(8)"));
    if (m == 3 && n == 4)
        return finish(make(in_table(order, {"PPNNNNN", "PNPNNNN", "PNNPNNN", "PNNNPNN", "PNNNNPN", "PNNNNNP"}),
                           "Thm2(8)"));
    throw DomainError("decide_two_change: no clause for " + couple.str());  // unreachable
}

Verdict decide(const Couple &couple, RuleSet rules) {
    const auto &pattern = couple.pattern();
    const auto &order = couple.order();
    if (is_rigid_order(order)) {
        Verdict v = make(pattern == pattern_with_canonical_order(order), "Rem1(2)");
        v.decided = couple;
        return v;
    }
    if (is_canonical_pattern(pattern)) {
        Verdict v = make(order == canonical_order(pattern), "Rem1(1)");
        v.decided = couple;
        return v;
    }
    for (Transform t : {Transform::Identity, Transform::InvolutionR, Transform::InvolutionM, Transform::InvolutionMR}) {
        Couple image = apply(t, couple);
        std::optional<Verdict> v;
        if (one_change_shape(image.pattern()))
            v = decide_one_change(image, rules);
        else if (two_change_shape(image.pattern()))
            v = decide_two_change(image, rules);
        if (v) {
            v->transform = t;
            return *v;
        }
    }
    return Verdict{};
}

std::string_view to_string(ShapeFilter f) {
    switch (f) {
        case ShapeFilter::OneChange: return "mn";
        case ShapeFilter::TwoChange: return "mn1";
        case ShapeFilter::Supported: return "supported";
        case ShapeFilter::All: return "all";
    }
    return "?";
}

ShapeFilter parse_shape_filter(std::string_view text) {
    for (ShapeFilter f : {ShapeFilter::OneChange, ShapeFilter::TwoChange, ShapeFilter::Supported, ShapeFilter::All})
        if (to_string(f) == text) return f;
    throw ParseError("unknown shape filter (expected mn, mn1, supported or all)", std::string(text), 0);
}

bool matches(ShapeFilter filter, const SignPattern &pattern) {
    switch (filter) {
        case ShapeFilter::OneChange: return one_change_shape(pattern).has_value();
        case ShapeFilter::TwoChange: return two_change_shape(pattern).has_value();
        case ShapeFilter::Supported: {
            auto r = pattern_r(pattern);
            return supported_shape(pattern) || supported_shape(r) || supported_shape(pattern_m(pattern)) ||
                   supported_shape(pattern_m(r));
        }
        case ShapeFilter::All: return true;
    }
    return false;
}

Enumeration enumerate(std::size_t degree, ShapeFilter filter, RuleSet rules, unsigned threads) {
    if (degree < 1) throw DomainError("enumerate: degree must be >= 1");
    Enumeration out;
    out.degree = degree;
    out.filter = filter;
    out.rules = rules;
    std::vector<Couple> couples;
    for (const auto &pattern : all_patterns(degree)) {
        if (!matches(filter, pattern)) continue;
        for (auto &order : all_orders(degree, pattern.changes())) couples.emplace_back(pattern, std::move(order));
    }
    std::vector<Verdict> verdicts(couples.size());
    parallel_for(couples.size(), threads, [&](std::size_t i) { verdicts[i] = decide(couples[i], rules); });

    out.rows.reserve(couples.size());
    for (std::size_t i = 0; i < couples.size(); ++i) {
        const auto &c = couples[i];
        if (out.tallies.empty() || out.tallies.back().pattern != c.pattern()) out.tallies.push_back({c.pattern()});
        auto &t = out.tallies.back();
        ++t.compatible;
        switch (verdicts[i].status) {
            case Status::Realizable: ++t.realizable; break;
            case Status::NonRealizable: ++t.non_realizable; break;
            case Status::OutOfScope: ++t.out_of_scope; break;
        }
        out.rows.push_back({c, std::move(verdicts[i])});
    }
    return out;
}

}  // namespace hypsign
