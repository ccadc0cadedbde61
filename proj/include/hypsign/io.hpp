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

// JSON and CSV encodings. Rationals are always "num/den" strings; documents
// carry a "schema" tag ("hypsign.<kind>/<version>") that readers check.

#ifndef HYPSIGN_IO_HPP
#define HYPSIGN_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "hypsign/certificates.hpp"
#include "hypsign/decision.hpp"
#include "hypsign/patterns.hpp"
#include "hypsign/polyalgebra.hpp"
#include "hypsign/rational.hpp"
#include "hypsign/witness.hpp"

namespace hypsign::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kWitnessSchema = "hypsign.witness/1";
inline constexpr std::string_view kArchiveSchema = "hypsign.archive/1";
inline constexpr std::string_view kVerdictSchema = "hypsign.verdict/1";
inline constexpr std::string_view kEnumerationSchema = "hypsign.enumeration/1";
inline constexpr std::string_view kCertificateSchema = "hypsign.certificate/1";
inline constexpr std::string_view kSearchSchema = "hypsign.search/1";

/// Throws ParseError when a document carries a different schema tag.
void expect_schema(const Json &doc, std::string_view schema);

Json to_json(const Rational &q);
Rational rational_from_json(const Json &j);

Json to_json(const RootConfiguration &roots);
RootConfiguration configuration_from_json(const Json &j);

/// Coefficient list, leading first.
Json to_json(const Polynomial &poly);
Polynomial polynomial_from_json(const Json &j);

/// {"pattern": "S(2,3,1)", "order": "PPNNN"}
Json to_json(const Couple &couple);
Couple couple_from_json(const Json &j);

Json to_json(const WitnessRecord &record);
/// "poly" may be omitted, in which case it is recomputed from the roots.
WitnessRecord record_from_json(const Json &j);

/// {schema, couple, status, clause, reduction: {transform, couple}, note}
Json to_json(const Couple &couple, const Verdict &verdict);
Verdict verdict_from_json(const Json &j);

Json to_json(const SearchOutcome &outcome, const Couple &couple);

Json to_json(const Enumeration &table);
/// Header: degree,pattern,order,status,clause,nu,p1,p2,witness_ref.
/// witness_ref is the archive key when `archive` holds a verified record.
std::string to_csv(const Enumeration &table, const WitnessArchive *archive = nullptr);

Json to_json(const CertificateReport &report);
CertificateReport certificate_report_from_json(const Json &j);

}  // namespace hypsign::io

#endif  // HYPSIGN_IO_HPP
