// Copyright 2026 The qcalc Authors
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

#include "qcalc/errors.hpp"
#include "qcalc/io.hpp"
#include "qcalc/reports.hpp"
#include "support.hpp"

using namespace qcalc;

namespace {

std::string parseMessage(const std::string& text) {
    try {
        io::setFromJson(io::parse(text, "in.json"));
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("set round trip is bit exact") {
    for (const auto& s : {buildGasket(3), buildCarpet(2), qtest::circle(64),
                          buildDumbbell(1.0, 0.1, 0.2).sample}) {
        const auto text = io::dump(io::toJson(s));
        const auto back = io::setFromJson(io::parse(text, "mem"));
        CHECK(back == s);
        CHECK(back.fingerprint() == s.fingerprint());
        CHECK(io::dump(io::toJson(back)) == text);
    }
}

TEST_CASE("field round trips") {
    const auto g = buildGasket(2);
    const auto f = sampleScalar(g, [](auto p) { return p[0] / 3.0; });
    const auto back = std::get<ScalarField>(io::scalarFieldFromJson(io::toJson(f)));
    CHECK(back.values == f.values);
    CHECK(back.setRef == g.fingerprint());

    const auto a = sampleCovector(g, [](auto p, std::span<double> out) {
        out[0] = p[1];
        out[1] = -p[0] / 7.0;
    });
    const auto ab = std::get<CovectorField>(io::covectorFieldFromJson(io::toJson(a)));
    CHECK(ab.data == a.data);
    CHECK(ab.dim == 2);

    const auto z = sampleComplex(g, [](std::complex<double> w) { return w * w; });
    const auto zb = std::get<ComplexScalarField>(io::scalarFieldFromJson(io::toJson(z)));
    CHECK(zb.values == z.values);

    const auto za = sampleComplexCovector(g, [](std::complex<double> w) { return 2.0 * w; });
    const auto zab = std::get<ComplexCovectorField>(io::covectorFieldFromJson(io::toJson(za)));
    CHECK(zab.values == za.values);
}

TEST_CASE("multivector json") {
    const auto m = Multivector::generator(3, 2) * 2.5 + Multivector::blade(3, 0b101, -1.0);
    const auto doc = io::toJson(m);
    CHECK(doc["coeffs"].size() == 8);
    CHECK(doc["coeffs"][2] == 2.5);   // e2
    CHECK(doc["coeffs"][5] == -1.0);  // e13
    CHECK(io::multivectorFromJson(doc) == m);
}

TEST_CASE("parse errors name the offending field") {
    CHECK(parseMessage("{not json").find("in.json") != std::string::npos);
    CHECK(parseMessage(R"({"ambient_dim":2,"points":[],"edges":[]})").find("\"version\"") != std::string::npos);
    CHECK(parseMessage(R"({"version":2,"ambient_dim":2,"points":[],"edges":[]})").find("\"version\"") !=
          std::string::npos);
    CHECK(parseMessage(R"({"version":1,"ambient_dim":2,"points":[[0,0],[1,"a"]],"edges":[]})")
              .find("\"points[1][1]\"") != std::string::npos);
    CHECK(parseMessage(R"({"version":1,"ambient_dim":2,"points":[[0,0],[1,0]],"edges":[[0,1]]})")
              .find("\"edges[0]\"") != std::string::npos);
    CHECK(parseMessage(R"({"version":1,"ambient_dim":2,"points":[[0,0]],"edges":[[0,-1,1]]})")
              .find("\"edges[0][1]\"") != std::string::npos);

    CHECK_THROWS_AS(io::columnsFromJson(io::parse(R"({"dim":2,"columns":[{"dim":2,"coeffs":[1,2]}]})", "c")),
                    ParseError);
    CHECK_THROWS_AS(io::columnsFromJson(io::parse(R"({"dim":9,"columns":[]})", "c")), ParseError);
}

TEST_CASE("pairs csv") {
    CHECK(reports::pairsCsv({}) == "dist,remainder,bound\n");
    const std::vector<RemainderPair> three{{0, 1, 0.5, 0.1, 0.2}, {0, 2, 1.0, 0.2, 0.4}, {1, 2, 1.5, 0.0, 0.0}};
    const auto csv = reports::pairsCsv(three);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    CHECK(csv.find("0.5,0.1,0.2\n") != std::string::npos);
}

TEST_CASE("numbers print shortest round trip") {
    CHECK(reports::formatNumber(0.1) == "0.1");
    CHECK(reports::formatNumber(1.0) == "1");
    CHECK(std::stod(reports::formatNumber(1.0 / 3.0)) == 1.0 / 3.0);
}

}
