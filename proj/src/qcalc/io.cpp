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

#include "qcalc/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qcalc/errors.hpp"

namespace qcalc::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw ParseError("field \"" + field + "\": " + what);
}

const Json& member(const Json& doc, const std::string& key, const std::string& prefix = "") {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (!doc.is_object()) {
        fail(prefix.empty() ? "<root>" : prefix, "expected an object");
    }
    auto it = doc.find(key);
    if (it == doc.end()) {
        fail(name, "missing");
    }
    return *it;
}

double number(const Json& v, const std::string& where) {
    if (!v.is_number()) {
        fail(where, "expected a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        fail(where, "not finite");
    }
    return x;
}

std::size_t index(const Json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        fail(where, "expected a nonnegative integer");
    }
    return v.get<std::size_t>();
}

const Json& array(const Json& v, const std::string& where) {
    if (!v.is_array()) {
        fail(where, "expected an array");
    }
    return v;
}

void checkVersion(const Json& doc) {
    const Json& v = member(doc, "version");
    if (!v.is_number_integer()) {
        fail("version", "expected an integer");
    }
    if (v.get<long long>() != kFormatVersion) {
        fail("version", "unsupported version " + v.dump());
    }
}

std::string setRef(const Json& doc) {
    const Json& s = member(doc, "set");
    if (!s.is_string()) {
        fail("set", "expected a string");
    }
    return s.get<std::string>();
}

std::string at(const std::string& name, std::size_t i) {
    return name + "[" + std::to_string(i) + "]";
}

std::complex<double> complexValue(const Json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2) {
        fail(where, "expected [re, im]");
    }
    return {number(v[0], at(where, 0)), number(v[1], at(where, 1))};
}

Json complexJson(std::complex<double> z) {
    return Json::array({z.real(), z.imag()});
}

} // namespace

Json toJson(const SetSample& sample) {
    Json doc;
    doc["version"] = kFormatVersion;
    doc["ambient_dim"] = sample.ambientDim();
    Json points = Json::array();
    for (std::size_t i = 0; i < sample.pointCount(); ++i) {
        const auto p = sample.point(i);
        points.push_back(Json(std::vector<double>(p.begin(), p.end())));
    }
    doc["points"] = std::move(points);
    Json edges = Json::array();
    for (const Edge& e : sample.edges()) {
        edges.push_back(Json::array({e.a, e.b, e.length}));
    }
    doc["edges"] = std::move(edges);
    doc["label"] = sample.label();
    return doc;
}

SetSample setFromJson(const Json& doc) {
    checkVersion(doc);
    const std::size_t dim = index(member(doc, "ambient_dim"), "ambient_dim");
    if (dim == 0) {
        fail("ambient_dim", "must be positive");
    }
    const Json& points = array(member(doc, "points"), "points");
    std::vector<double> coords;
    coords.reserve(points.size() * dim);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Json& p = array(points[i], at("points", i));
        if (p.size() != dim) {
            fail(at("points", i), "expected " + std::to_string(dim) + " coordinates");
        }
        for (std::size_t k = 0; k < dim; ++k) {
            coords.push_back(number(p[k], at(at("points", i), k)));
        }
    }
    const Json& edgesJson = array(member(doc, "edges"), "edges");
    std::vector<Edge> edges;
    edges.reserve(edgesJson.size());
    for (std::size_t e = 0; e < edgesJson.size(); ++e) {
        const Json& triple = array(edgesJson[e], at("edges", e));
        if (triple.size() != 3) {
            fail(at("edges", e), "expected [i, j, length]");
        }
        edges.push_back({index(triple[0], at(at("edges", e), 0)), index(triple[1], at(at("edges", e), 1)),
                         number(triple[2], at(at("edges", e), 2))});
    }
    std::string label;
    if (auto it = doc.find("label"); it != doc.end()) {
        if (!it->is_string()) {
            fail("label", "expected a string");
        }
        label = it->get<std::string>();
    }
    return SetSample(dim, std::move(coords), std::move(edges), std::move(label));
}

Json toJson(const ScalarField& f) {
    Json doc;
    doc["version"] = kFormatVersion;
    doc["set"] = f.setRef;
    doc["values"] = f.values;
    return doc;
}

Json toJson(const ComplexScalarField& f) {
    Json doc;
    doc["version"] = kFormatVersion;
    doc["set"] = f.setRef;
    Json values = Json::array();
    for (auto z : f.values) {
        values.push_back(complexJson(z));
    }
    doc["values"] = std::move(values);
    return doc;
}

Json toJson(const CovectorField& a) {
    Json doc;
    doc["version"] = kFormatVersion;
    doc["set"] = a.setRef;
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto c = a.at(i);
        rows.push_back(Json(std::vector<double>(c.begin(), c.end())));
    }
    doc["covectors"] = std::move(rows);
    return doc;
}

Json toJson(const ComplexCovectorField& a) {
    Json doc;
    doc["version"] = kFormatVersion;
    doc["set"] = a.setRef;
    Json rows = Json::array();
    for (auto z : a.values) {
        rows.push_back(complexJson(z));
    }
    doc["complex_covectors"] = std::move(rows);
    return doc;
}

AnyScalarField scalarFieldFromJson(const Json& doc) {
    checkVersion(doc);
    const std::string ref = setRef(doc);
    const Json& values = array(member(doc, "values"), "values");
    if (!values.empty() && values[0].is_array()) {
        ComplexScalarField f{ref, {}};
        for (std::size_t i = 0; i < values.size(); ++i) {
            f.values.push_back(complexValue(values[i], at("values", i)));
        }
        return f;
    }
    ScalarField f{ref, {}};
    for (std::size_t i = 0; i < values.size(); ++i) {
        f.values.push_back(number(values[i], at("values", i)));
    }
    return f;
}

AnyCovectorField covectorFieldFromJson(const Json& doc) {
    checkVersion(doc);
    const std::string ref = setRef(doc);
    if (auto it = doc.find("complex_covectors"); it != doc.end()) {
        const Json& rows = array(*it, "complex_covectors");
        ComplexCovectorField a{ref, {}};
        for (std::size_t i = 0; i < rows.size(); ++i) {
            a.values.push_back(complexValue(rows[i], at("complex_covectors", i)));
        }
        return a;
    }
    const Json& rows = array(member(doc, "covectors"), "covectors");
    CovectorField a{ref, 0, {}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Json& row = array(rows[i], at("covectors", i));
        if (i == 0) {
            a.dim = row.size();
            if (a.dim == 0) {
                fail(at("covectors", 0), "empty covector");
            }
        } else if (row.size() != a.dim) {
            fail(at("covectors", i), "expected " + std::to_string(a.dim) + " entries");
        }
        for (std::size_t k = 0; k < row.size(); ++k) {
            a.data.push_back(number(row[k], at(at("covectors", i), k)));
        }
    }
    return a;
}

Json toJson(const Multivector& m) {
    Json doc;
    doc["dim"] = m.dim();
    doc["coeffs"] = m.gradedCoefficients();
    return doc;
}

Multivector multivectorFromJson(const Json& doc, const std::string& where) {
    const std::string prefix = where;
    const std::size_t dim = index(member(doc, "dim", prefix), prefix.empty() ? "dim" : prefix + ".dim");
    if (dim == 0 || dim > kMaxCliffordDim) {
        fail(prefix.empty() ? "dim" : prefix + ".dim", "must be between 1 and " + std::to_string(kMaxCliffordDim));
    }
    const std::string coeffName = prefix.empty() ? "coeffs" : prefix + ".coeffs";
    const Json& coeffs = array(member(doc, "coeffs", prefix), coeffName);
    if (coeffs.size() != (std::size_t{1} << dim)) {
        fail(coeffName, "expected " + std::to_string(std::size_t{1} << dim) + " coefficients");
    }
    std::vector<double> values;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        values.push_back(number(coeffs[k], at(coeffName, k)));
    }
    return Multivector::fromGraded(dim, values);
}

Json toJson(const LinearCliffordMap& map) {
    Json doc;
    doc["dim"] = map.dim;
    Json columns = Json::array();
    for (const auto& c : map.columns) {
        columns.push_back(toJson(c));
    }
    doc["columns"] = std::move(columns);
    return doc;
}

ColumnList columnsFromJson(const Json& doc) {
    ColumnList list;
    list.dim = index(member(doc, "dim"), "dim");
    if (list.dim == 0 || list.dim > kMaxCliffordDim) {
        fail("dim", "must be between 1 and " + std::to_string(kMaxCliffordDim));
    }
    const Json& columns = array(member(doc, "columns"), "columns");
    for (std::size_t i = 0; i < columns.size(); ++i) {
        list.columns.push_back(multivectorFromJson(columns[i], at("columns", i)));
        if (list.columns.back().dim() != list.dim) {
            fail(at("columns", i) + ".dim", "differs from the list dimension");
        }
    }
    return list;
}

Json toJson(const PolylinePath& path) {
    Json doc;
    doc["version"] = kFormatVersion;
    doc["set"] = path.setRef;
    doc["vertices"] = path.vertices;
    doc["cumulative_length"] = path.cumulativeLength;
    return doc;
}

Json parse(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(source + ": malformed JSON: " + e.what());
    }
}

Json readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(path + ": cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path);
}

void writeFile(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InvalidArgument(path + ": cannot open for writing");
    }
    out << text;
    if (!out) {
        throw InvalidArgument(path + ": write failed");
    }
}

std::string dump(const Json& doc) {
    return doc.dump(2) + "\n";
}

} // namespace qcalc::io
