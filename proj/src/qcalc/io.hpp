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

#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qcalc/clifford.hpp"
#include "qcalc/fields.hpp"
#include "qcalc/geometry.hpp"

namespace qcalc::io {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// Sets: {"version":1,"ambient_dim":n,"points":[[...]],"edges":[[i,j,len]],"label":"..."}
Json toJson(const SetSample& sample);
SetSample setFromJson(const Json& doc);

// Scalar fields: {"version":1,"set":"<fingerprint>","values":[...]}; complex
// values are [re, im] pairs.
// Covector fields: {"version":1,"set":...,"covectors":[[...]]}; complex-linear
// ones use "complex_covectors":[[re, im], ...].
Json toJson(const ScalarField& f);
Json toJson(const ComplexScalarField& f);
Json toJson(const CovectorField& a);
Json toJson(const ComplexCovectorField& a);

using AnyScalarField = std::variant<ScalarField, ComplexScalarField>;
using AnyCovectorField = std::variant<CovectorField, ComplexCovectorField>;

AnyScalarField scalarFieldFromJson(const Json& doc);
AnyCovectorField covectorFieldFromJson(const Json& doc);

// Multivectors: {"dim":n,"coeffs":[2^n reals in graded-lex order]}
Json toJson(const Multivector& m);
Multivector multivectorFromJson(const Json& doc, const std::string& where = "");

// Column lists: {"dim":n,"columns":[<multivector>, ...]}
Json toJson(const LinearCliffordMap& map);
struct ColumnList {
    std::size_t dim = 0;
    std::vector<Multivector> columns;
};
ColumnList columnsFromJson(const Json& doc);

Json toJson(const PolylinePath& path);

/// Parses text; ParseError messages name `source` and the offending field.
Json parse(const std::string& text, const std::string& source);
Json readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& text);

/// Compact-but-readable, byte-stable rendering used for every document.
std::string dump(const Json& doc);

} // namespace qcalc::io
