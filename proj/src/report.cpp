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

#include "hypsign/report.hpp"

#include <map>
#include <sstream>

#include "hypsign/certificates.hpp"
#include "hypsign/parallel.hpp"

namespace hypsign {

namespace {

std::string join(const std::vector<std::string> &items, const char *sep) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + items[i];
    return s;
}

std::string rationals(const std::vector<Rational> &v) {
    std::vector<std::string> parts;
    for (const auto &q : v) parts.push_back(q.str());
    return "[" + join(parts, ", ") + "]";
}

void example(std::ostream &out, const char *title, const RootConfiguration &roots) {
    auto poly = expand(roots);
    auto cls = classify(poly, roots);
    out << "- " << title << "\n"
        << "  - roots: alpha = " << rationals(roots.alpha()) << ", gamma = " << rationals(roots.gamma()) << "\n"
        << "  - coefficients (leading first): "
        << rationals(std::vector<Rational>(poly.coefficients().begin(), poly.coefficients().end())) << "\n";
    if (cls.couple)
        out << "  - couple: " << cls.couple->str() << "\n";
    else
        out << "  - sign pattern: " << (sign_pattern_of(poly) ? sign_pattern_of(poly)->block_str() : "-")
            << ", non-generic (" << cls.genericity.describe() << ")\n";
}

void decision_tables(std::ostream &out, const ReportOptions &opt) {
    out << "## Decision tables\n\n"
        << "Every compatible order of every S(m,n) and S(m,n,1) pattern up to degree " << opt.max_degree
        << ". Orders are listed when at most 10 are realizable.\n\n"
        << "| degree | pattern | compatible | realizable | non-realizable | realizable orders |\n"
        << "|---|---|---|---|---|---|\n";
    for (std::size_t d = 1; d <= opt.max_degree; ++d) {
        for (ShapeFilter f : {ShapeFilter::OneChange, ShapeFilter::TwoChange}) {
            if (f == ShapeFilter::TwoChange && d < 2) continue;
            auto table = enumerate(d, f, opt.rules, opt.threads);
            std::map<std::string, std::vector<std::string>> orders;
            for (const auto &row : table.rows)
                if (row.verdict.status == Status::Realizable)
                    orders[row.couple.pattern().str()].push_back(row.couple.order().str());
            for (const auto &t : table.tallies) {
                const auto &list = orders[t.pattern.str()];
                out << "| " << d << " | " << t.pattern.block_str() << " | " << t.compatible << " | " << t.realizable
                    << " | " << t.non_realizable << " | " << (list.size() <= 10 ? join(list, " ") : "...")
                    << " |\n";
            }
        }
    }
    out << "\n";

    out << "### Orbit consistency\n\n";
    std::size_t couples = 0, orbits_checked = 0, disagreements = 0, out_of_scope = 0;
    for (std::size_t d = 1; d <= opt.max_degree; ++d) {
        auto table = enumerate(d, ShapeFilter::Supported, opt.rules, opt.threads);
        for (const auto &row : table.rows) {
            ++couples;
            if (row.verdict.status == Status::OutOfScope) {
                ++out_of_scope;
                continue;
            }
            ++orbits_checked;
            for (const auto &img : orbit(row.couple))
                if (decide(img, opt.rules).status != row.verdict.status) {
                    ++disagreements;
                    break;
                }
        }
    }
    out << "- couples in supported orbits, degree <= " << opt.max_degree << ": " << couples << "\n"
        << "- decided: " << orbits_checked << ", out of scope: " << out_of_scope << "\n"
        << "- couples whose orbit has a different status: " << disagreements << "\n\n";
}

void counterexamples(std::ostream &out) {
    out << "## Exact witnesses with nu = 0 for S(n-1,n,1)\n\n";
    for (const auto &ce : known_counterexamples()) {
        WitnessRecord rec = make_record(ce.couple, ce.roots);
        bool ok = verify(rec);
        out << "- " << ce.couple.str() << ": alpha = " << rationals(ce.roots.alpha())
            << ", gamma = " << rationals(ce.roots.gamma()) << ", verified = " << (ok ? "yes" : "no") << "\n";
    }
    out << "\n";
}

void gallery(std::ostream &out, const ReportOptions &opt) {
    std::vector<Couple> couples;
    for (std::size_t d = 2; d <= 7; ++d) {
        for (const auto &row : enumerate(d, ShapeFilter::TwoChange, opt.rules).rows) {
            auto shape = two_change_shape(row.couple.pattern());
            const auto [m, n] = *shape;
            bool listed = (m == 1 && n == 2) || (m == 2 && n == 3) || (m == 2 && n == 4) || (m == 3 && n == 4) ||
                          (m == 2 && n == 5);
            if (listed && row.verdict.status == Status::Realizable) couples.push_back(row.couple);
        }
    }
    SearchBudget budget = opt.budget;
    budget.seed = opt.seed;
    budget.strategies &= ~kUseArchive;
    std::vector<SearchOutcome> found(couples.size());
    parallel_for(couples.size(), opt.threads, [&](std::size_t i) { found[i] = search(couples[i], budget); });

    out << "## Witness gallery\n\n"
        << "| couple | strategy | trials | alpha | gamma |\n|---|---|---|---|---|\n";
    for (std::size_t i = 0; i < couples.size(); ++i) {
        const auto &o = found[i];
        if (o.witness)
            out << "| " << couples[i].str() << " | " << to_string(o.witness->strategy) << " | " << o.trials << " | "
                << rationals(o.witness->roots.alpha()) << " | " << rationals(o.witness->roots.gamma()) << " |\n";
        else
            out << "| " << couples[i].str() << " | none | " << o.trials << " | - | - |\n";
    }
    out << "\n";
}

void certificates(std::ostream &out, const ReportOptions &opt) {
    out << "## Certificate sampling\n\n"
        << opt.certificate_count << " exact samples per region.\n\n"
        << "| lemma | n | violations | quantity | extremal value | counters |\n|---|---|---|---|---|---|\n";
    const std::vector<std::pair<int, int>> regions{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {6, 5}, {6, 6}, {6, 7},
                                                   {6, 8}, {7, 4}, {7, 5}, {7, 6}, {7, 7}, {7, 8}, {8, 5}};
    for (const auto &[lemma, n] : regions) {
        auto r = sample_region(lemma, n, opt.certificate_count, opt.seed, opt.threads);
        std::vector<std::string> extras;
        for (const auto &[k, v] : r.counters) extras.push_back(k + "=" + std::to_string(v));
        for (const auto &[k, v] : r.values) extras.push_back(k + "=" + v.str());
        out << "| " << lemma << " | " << n << " | " << r.violations << " | " << r.margin_quantity << " | "
            << r.extremal_margin.str() << " | " << join(extras, ", ") << " |\n";
    }
    out << "\n";
}

}  // namespace

std::string render_report(const ReportOptions &opt) {
    std::ostringstream out;
    out << "# hypsign report\n\n"
        << "- seed: " << opt.seed << "\n"
        << "- rules: " << to_string(opt.rules) << "\n"
        << "- search budget: " << opt.budget.max_trials << " trials\n\n";

    out << "## Worked examples\n\n";
    example(out, "degree 5",
            RootConfiguration({Rational::parse("0.5"), Rational(1)},
                              {Rational::parse("1.1"), Rational::parse("1.2"), Rational::parse("1.3")}));
    const Rational g = Rational::parse("1.01");
    example(out, "degree 7 with a five-fold negative root",
            RootConfiguration({Rational::parse("0.1"), Rational(1)}, {g, g, g, g, g}));
    out << "\n";

    decision_tables(out, opt);
    counterexamples(out);
    gallery(out, opt);
    certificates(out, opt);
    return out.str();
}

}  // namespace hypsign
