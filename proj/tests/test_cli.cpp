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

#include <algorithm>
#include <filesystem>

#include "cli_support.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path& fixtureDir() {
    static const fs::path dir = [] {
        const fs::path d = fs::temp_directory_path() / ("qcalc_cli_tests_" + std::to_string(::getpid()));
        qtest::writeFixtures(d);
        return d;
    }();
    return dir;
}

std::size_t lines(const std::string& s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("build writes the set file") {
    const auto r = qtest::runCli(fixtureDir(), "build gasket --level 2 --out g.json");
    CHECK(r.exit == 0);
    const auto doc = qcalc::io::readFile((fixtureDir() / "g.json").string());
    CHECK(doc["points"].size() == 15);
    CHECK(r.out.find("\"points\": 15") != std::string::npos);

    const auto k = qtest::runCli(fixtureDir(), "k-estimate g.json --exhaustive");
    CHECK(k.exit == 0);
    CHECK(k.out.find("\"k_hat\"") != std::string::npos);
}

TEST_CASE("verification failure exits 1 and lists violations") {
    const auto r = qtest::runCli(fixtureDir(), "remainder-check gasket.json f.json A_shifted.json");
    CHECK(r.exit == 1);
    CHECK(r.out.find("\"status\": \"fail\"") != std::string::npos);
    CHECK(r.out.find("\"violations\": [\n    {") != std::string::npos);

    const auto ok = qtest::runCli(fixtureDir(), "remainder-check gasket.json f.json A.json");
    CHECK(ok.exit == 0);
}

TEST_CASE("usage and input errors exit 2") {
    const auto broken = qtest::runCli(fixtureDir(), "k-estimate broken.json");
    CHECK(broken.exit == 2);
    CHECK(broken.err.find("broken.json") != std::string::npos);
    CHECK(broken.err.find("points[1][1]") != std::string::npos);

    CHECK(qtest::runCli(fixtureDir(), "--tol nonsense=1 k-estimate gasket.json").exit == 2);
    CHECK(qtest::runCli(fixtureDir(), "--tol abs=x k-estimate gasket.json").exit == 2);
    CHECK(qtest::runCli(fixtureDir(), "frobnicate").exit == 2);
    CHECK(qtest::runCli(fixtureDir(), "k-estimate missing.json").exit == 2);
    CHECK(qtest::runCli(fixtureDir(), "build gasket --level 12").exit == 2);
    // A field sampled on another set.
    CHECK(qtest::runCli(fixtureDir(), "remainder-check segment.json f.json A.json").exit == 2);
    // Pair CSV requested from a command without pair data.
    CHECK(qtest::runCli(fixtureDir(), "--csv x.csv k-estimate gasket.json").exit == 2);
}

TEST_CASE("csv output") {
    const auto r = qtest::runCli(fixtureDir(), "--csv pairs.csv remainder-check gasket.json f.json A.json");
    CHECK(r.exit == 0);
    const std::string csv = qtest::slurp(fixtureDir() / "pairs.csv");
    const std::size_t v = 42;  // gasket level 3
    CHECK(csv.rfind("dist,remainder,bound\n", 0) == 0);
    CHECK(lines(csv) == v * (v - 1) / 2 + 1);
    double last = 0.0;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        const double d = std::stod(line.substr(0, line.find(',')));
        CHECK(d >= last);
        last = d;
    }
}

TEST_CASE("tolerance overrides reach the checks") {
    CHECK(qtest::runCli(fixtureDir(), "ftc segment.json sin.json cos.json").exit == 1);
    CHECK(qtest::runCli(fixtureDir(), "ftc segment.json sin.json cos.json --tol ftc=1e-6").exit == 0);
}

TEST_CASE("every subcommand is byte deterministic") {
    for (const auto& args : qtest::everySubcommand()) {
        CAPTURE(args);
        const auto a = qtest::runCli(fixtureDir(), args);
        const auto b = qtest::runCli(fixtureDir(), args);
        CHECK(a.exit <= 1);
        CHECK(a.exit == b.exit);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("out flag writes the report") {
    const auto r = qtest::runCli(fixtureDir(), "--out report.json clifford dimension --dim 3");
    CHECK(r.exit == 0);
    CHECK(r.out.empty());
    CHECK(qtest::slurp(fixtureDir() / "report.json").find("\"monogenic_dimension\": 16") != std::string::npos);
    const auto p = qtest::runCli(fixtureDir(), "geodesic gasket.json 0 3 --path path.json");
    CHECK(p.exit == 0);
    CHECK(qtest::slurp(fixtureDir() / "path.json").find("\"vertices\"") != std::string::npos);
}

}
