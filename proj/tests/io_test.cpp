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

#include "hypsign/errors.hpp"
#include "hypsign/io.hpp"

using namespace hypsign;

TEST_CASE("rationals are num/den strings") {
    CHECK(io::to_json(Rational(-3, 6)) == "-1/2");
    CHECK(io::rational_from_json(io::Json("21/10")) == Rational(21, 10));
    CHECK_THROWS_AS(io::rational_from_json(io::Json(0.5)), std::invalid_argument);
}

TEST_CASE("witness record round trip") {
    auto rec = make_record(Couple::parse("S(2,3,1)", "PPNNN"),
                           RootConfiguration({Rational(1, 2), Rational(1)},
                                             {Rational(11, 10), Rational(12, 10), Rational(13, 10)}));
    REQUIRE(verify(rec));
    auto j = io::to_json(rec);
    CHECK(j["schema"] == "hypsign.witness/1");
    CHECK(j["couple"]["pattern"] == "S(2,3,1)");
    CHECK(j["couple"]["order"] == "PPNNN");
    CHECK(j["poly"][1] == "21/10");
    auto back = io::record_from_json(j);
    CHECK(back.couple == rec.couple);
    CHECK(back.roots == rec.roots);
    CHECK(back.poly == rec.poly);

    j.erase("poly");
    CHECK(io::record_from_json(j).poly == rec.poly);

    j["schema"] = "hypsign.witness/99";
    CHECK_THROWS_AS(io::record_from_json(j), ParseError);
}

TEST_CASE("verdict round trip") {
    auto c = Couple::parse("S(1,4,2)", "PNNNNP");
    auto v = decide(c);
    auto j = io::to_json(c, v);
    CHECK(j["schema"] == "hypsign.verdict/1");
    auto back = io::verdict_from_json(j);
    CHECK(back.status == v.status);
    CHECK(back.clause == v.clause);
    CHECK(back.transform == v.transform);
    CHECK(back.decided == v.decided);
}

TEST_CASE("enumeration CSV") {
    auto table = enumerate(6, ShapeFilter::TwoChange);
    auto csv = io::to_csv(table);
    CHECK(csv.rfind("degree,pattern,order,status,clause,nu,p1,p2,witness_ref\n", 0) == 0);
    CHECK(csv.find("6,\"S(2,4,1)\",PNNPNN,Realizable,Thm2(8),2,1,4,\n") != std::string::npos);
    std::size_t lines = 0;
    for (char ch : csv) lines += ch == '\n';
    CHECK(lines == table.rows.size() + 1);
    auto j = io::to_json(table);
    CHECK(j["schema"] == "hypsign.enumeration/1");
}

TEST_CASE("certificate report round trip") {
    auto r = sample_region(8, 5, 200, 4);
    auto j = io::to_json(r);
    CHECK(j["schema"] == "hypsign.certificate/1");
    CHECK(io::certificate_report_from_json(j) == r);
    CHECK(io::certificate_report_from_json(io::Json::parse(j.dump())) == r);
}
