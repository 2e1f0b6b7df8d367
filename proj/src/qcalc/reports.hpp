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

#include <cstddef>
#include <string>
#include <vector>

#include "qcalc/calculus.hpp"
#include "qcalc/clifford.hpp"
#include "qcalc/io.hpp"
#include "qcalc/metric.hpp"
#include "qcalc/whitney.hpp"

namespace qcalc::reports {

using io::Json;

/// Every report carries this schema tag, the command that produced it and a
/// "status" of "pass" or "fail".
inline constexpr const char* kSchema = "qcalc.report/1";

Json envelope(const std::string& command, bool passed);

Json validation(const SetSample& sample, const std::vector<Violation>& violations);
Json build(const SetSample& sample, const std::string& kind);
Json chordArc(const ChordArcReport& report);
Json geodesic(std::size_t i, std::size_t j, double distance, const PolylinePath& path);
Json localToGlobal(const LocalToGlobalReport& report);
Json ftc(std::size_t from, std::size_t to, double integral, double change, double residual,
         const PolylinePath& path, double tol);
Json reconstruction(const Reconstruction& result, double tol);
Json remainderBound(const RemainderBoundReport& report, std::size_t maxListed);
Json holderFit(const ModulusReport& report);
Json whitneyC1(const WhitneyC1Report& report);
Json flatness(const FlatnessReport& flat, const DeterminedSubspace* subspace,
              const StabilityReport* stability);
Json cliffordCheck(const LinearCliffordMap& map, const MonogenicCheck& left, const MonogenicCheck& right,
                   const std::string& side);
Json cliffordComplete(const LinearCliffordMap& map, const MonogenicCheck& check);
Json cliffordDimension(std::size_t dim, std::size_t dimension);
Json graphDerivative(const GraphDerivativeReport& report);

/// Header `dist,remainder,bound`, one row per pair in the given order.
std::string pairsCsv(const std::vector<RemainderPair>& pairs);

/// Shortest round-trip decimal form, independent of locale.
std::string formatNumber(double value);

} // namespace qcalc::reports
