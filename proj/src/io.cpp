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

#include "hypsign/io.hpp"

#include <sstream>

#include "hypsign/errors.hpp"

namespace hypsign::io {

namespace {

template <typename T>
T field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"", j.dump(), 0);
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception &e) {
        throw ParseError(std::string("bad field \"") + key + "\": " + e.what(), j.dump(), 0);
    }
}

Json rationals(const std::vector<Rational> &v) {
    Json out = Json::array();
    for (const auto &q : v) out.push_back(to_json(q));
    return out;
}

std::vector<Rational> rationals_from(const Json &j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals", j.dump(), 0);
    std::vector<Rational> out;
    for (const auto &x : j) out.push_back(rational_from_json(x));
    return out;
}

}  // namespace

void expect_schema(const Json &doc, std::string_view schema) {
    auto got = field<std::string>(doc, "schema");
    if (got != schema)
        throw ParseError("unexpected schema (expected " + std::string(schema) + ")", got, 0);
}

Json to_json(const Rational &q) { return q.str(); }

Rational rational_from_json(const Json &j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("expected a rational string such as \"3/2\"", j.dump(), 0);
}

Json to_json(const RootConfiguration &roots) {
    Json j;
    j["alpha"] = rationals(roots.alpha());
    j["gamma"] = rationals(roots.gamma());
    return j;
}

RootConfiguration configuration_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("alpha") || !j.contains("gamma"))
        throw ParseError("root configuration needs \"alpha\" and \"gamma\"", j.dump(), 0);
    try {
        return RootConfiguration(rationals_from(j.at("alpha")), rationals_from(j.at("gamma")));
    } catch (const DomainError &e) {
        throw ParseError(e.what(), j.dump(), 0);
    }
}

Json to_json(const Polynomial &poly) {
    return rationals(std::vector<Rational>(poly.coefficients().begin(), poly.coefficients().end()));
}

Polynomial polynomial_from_json(const Json &j) {
    try {
        return Polynomial(rationals_from(j));
    } catch (const DomainError &e) {
        throw ParseError(e.what(), j.dump(), 0);
    }
}

Json to_json(const Couple &couple) {
    Json j;
    j["pattern"] = couple.pattern().block_str();
    j["order"] = couple.order().str();
    return j;
}

Couple couple_from_json(const Json &j) {
    return Couple::parse(field<std::string>(j, "pattern"), field<std::string>(j, "order"));
}

Json to_json(const WitnessRecord &record) {
    Json j;
    j["schema"] = kWitnessSchema;
    j["couple"] = to_json(record.couple);
    j["roots"] = to_json(record.roots);
    j["poly"] = to_json(record.poly);
    j["strategy"] = to_string(record.strategy);
    j["verified"] = record.verified;
    j["trials"] = record.trials;
    return j;
}

WitnessRecord record_from_json(const Json &j) {
    expect_schema(j, kWitnessSchema);
    if (!j.contains("couple") || !j.contains("roots")) throw ParseError("witness needs \"couple\" and \"roots\"", j.dump(), 0);
    WitnessRecord rec = make_record(couple_from_json(j.at("couple")), configuration_from_json(j.at("roots")));
    if (j.contains("poly")) rec.poly = polynomial_from_json(j.at("poly"));
    if (j.contains("strategy")) rec.strategy = parse_strategy(field<std::string>(j, "strategy"));
    if (j.contains("verified")) rec.verified = field<bool>(j, "verified");
    if (j.contains("trials")) rec.trials = field<std::size_t>(j, "trials");
    return rec;
}

Json to_json(const Couple &couple, const Verdict &verdict) {
    Json j;
    j["schema"] = kVerdictSchema;
    j["couple"] = to_json(couple);
    j["status"] = to_string(verdict.status);
    j["clause"] = verdict.clause;
    if (verdict.decided) {
        Json r;
        r["transform"] = to_string(verdict.transform);
        r["couple"] = to_json(*verdict.decided);
        j["reduction"] = std::move(r);
    } else {
        j["reduction"] = nullptr;
    }
    if (!verdict.note.empty()) j["note"] = verdict.note;
    return j;
}

Verdict verdict_from_json(const Json &j) {
    expect_schema(j, kVerdictSchema);
    Verdict v;
    v.status = parse_status(field<std::string>(j, "status"));
    v.clause = field<std::string>(j, "clause");
    if (j.contains("reduction") && !j.at("reduction").is_null()) {
        const auto &r = j.at("reduction");
        auto t = field<std::string>(r, "transform");
        bool known = false;
        for (Transform x : {Transform::Identity, Transform::InvolutionM, Transform::InvolutionR, Transform::InvolutionMR}) {
            if (to_string(x) == t) {
                v.transform = x;
                known = true;
            }
        }
        if (!known) throw ParseError("unknown transform", t, 0);
        v.decided = couple_from_json(r.at("couple"));
    }
    if (j.contains("note")) v.note = field<std::string>(j, "note");
    return v;
}

Json to_json(const SearchOutcome &outcome, const Couple &couple) {
    Json j;
    j["schema"] = kSearchSchema;
    j["couple"] = to_json(couple);
    j["found"] = outcome.witness.has_value();
    j["trials"] = outcome.trials;
    if (outcome.witness)
        j["witness"] = to_json(*outcome.witness);
    else
        j["exhausted"] = outcome.exhausted;
    return j;
}

Json to_json(const Enumeration &table) {
    Json j;
    j["schema"] = kEnumerationSchema;
    j["degree"] = table.degree;
    j["shape"] = to_string(table.filter);
    j["rules"] = to_string(table.rules);
    Json tallies = Json::array();
    for (const auto &t : table.tallies) {
        Json x;
        x["pattern"] = t.pattern.block_str();
        x["compatible"] = t.compatible;
        x["realizable"] = t.realizable;
        x["non_realizable"] = t.non_realizable;
        x["out_of_scope"] = t.out_of_scope;
        tallies.push_back(std::move(x));
    }
    j["tallies"] = std::move(tallies);
    Json rows = Json::array();
    for (const auto &row : table.rows) rows.push_back(to_json(row.couple, row.verdict));
    j["rows"] = std::move(rows);
    return j;
}

std::string to_csv(const Enumeration &table, const WitnessArchive *archive) {
    std::ostringstream out;
    out << "degree,pattern,order,status,clause,nu,p1,p2,witness_ref\n";
    for (const auto &row : table.rows) {
        const auto &c = row.couple;
        auto pos = c.order().positive_positions();
        auto nu = nu_of_order(c.order());
        std::string ref;
        if (archive != nullptr && archive->lookup(c)) ref = c.str();
        // Block notation contains commas, so it is quoted.
        out << c.degree() << ",\"" << c.pattern().block_str() << "\"," << c.order().str() << ','
            << to_string(row.verdict.status) << ',' << row.verdict.clause << ',' << (nu ? std::to_string(*nu) : "")
            << ',' << (!pos.empty() ? std::to_string(pos[0]) : "") << ','
            << (pos.size() > 1 ? std::to_string(pos[1]) : "") << ',' << (ref.empty() ? "" : "\"" + ref + "\"")
            << '\n';
    }
    return out.str();
}

Json to_json(const CertificateReport &report) {
    Json j;
    j["schema"] = kCertificateSchema;
    j["lemma"] = report.lemma;
    j["n"] = report.n;
    j["count"] = report.count;
    j["seed"] = report.seed;
    j["violations"] = report.violations;
    j["margin_quantity"] = report.margin_quantity;
    j["extremal_margin"] = to_json(report.extremal_margin);
    j["extremal_index"] = report.extremal_index;
    Json sample;
    for (const auto &[k, v] : report.extremal_sample) sample[k] = rationals(v);
    j["extremal_sample"] = std::move(sample);
    Json counters = Json::object();
    for (const auto &[k, v] : report.counters) counters[k] = v;
    j["counters"] = std::move(counters);
    Json values = Json::object();
    for (const auto &[k, v] : report.values) values[k] = to_json(v);
    j["values"] = std::move(values);
    return j;
}

CertificateReport certificate_report_from_json(const Json &j) {
    expect_schema(j, kCertificateSchema);
    CertificateReport r;
    r.lemma = field<int>(j, "lemma");
    r.n = field<int>(j, "n");
    r.count = field<std::size_t>(j, "count");
    r.seed = field<std::uint64_t>(j, "seed");
    r.violations = field<std::size_t>(j, "violations");
    r.margin_quantity = field<std::string>(j, "margin_quantity");
    r.extremal_margin = rational_from_json(j.at("extremal_margin"));
    r.extremal_index = field<std::size_t>(j, "extremal_index");
    for (const auto &[k, v] : j.at("extremal_sample").items()) r.extremal_sample.emplace_back(k, rationals_from(v));
    for (const auto &[k, v] : j.at("counters").items()) r.counters.emplace_back(k, v.get<std::size_t>());
    for (const auto &[k, v] : j.at("values").items()) r.values.emplace_back(k, rational_from_json(v));
    return r;
}

}  // namespace hypsign::io
