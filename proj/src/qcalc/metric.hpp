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
#include <cstdint>
#include <vector>

#include "qcalc/fields.hpp"
#include "qcalc/geometry.hpp"

namespace qcalc {

/// Single-source shortest paths over the edge graph.
///
/// Among equally short routes the predecessor with the smaller vertex index
/// wins, which makes every extracted path reproducible.
struct ShortestPathTree {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t source = 0;
    std::vector<double> distance;
    std::vector<std::size_t> predecessor;
    /// Vertices in the order they were settled; source first.
    std::vector<std::size_t> settled;

    bool reaches(std::size_t v) const { return predecessor[v] != npos || v == source; }
};

ShortestPathTree shortestPathTree(const SetSample& sample, std::size_t source);

/// Path from the tree's source to `target`. Throws Disconnected if unreachable.
PolylinePath pathFromTree(const SetSample& sample, const ShortestPathTree& tree, std::size_t target);

/// Intrinsic distance. Always measured from the smaller index so that the
/// result is exactly symmetric.
double geodesicDistance(const SetSample& sample, std::size_t i, std::size_t j);

/// A shortest edge path from i to j.
PolylinePath shortestPath(const SetSample& sample, std::size_t i, std::size_t j);

/// Dense symmetric matrix of intrinsic distances, entry (i, j) taken from the
/// tree rooted at min(i, j). Quadratic memory; meant for small samples.
std::vector<double> allPairsGeodesics(const SetSample& sample);

enum class ChordArcMethod { Exhaustive, Sampled };

struct ChordArcOptions {
    ChordArcMethod method = ChordArcMethod::Exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t pairBudget = 0;
};

/// Largest geodesic-to-chord ratio over vertex pairs. Any k >= kHat is an
/// admissible chord-arc constant for the sample.
struct ChordArcReport {
    double kHat = 1.0;
    std::size_t witnessI = 0;
    std::size_t witnessJ = 0;
    double witnessGeodesic = 0.0;
    double witnessChord = 0.0;
    std::uint64_t pairCount = 0;
    ChordArcMethod method = ChordArcMethod::Exhaustive;
    std::uint64_t seed = 0;
};

ChordArcReport estimateChordArc(const SetSample& sample, const ChordArcOptions& options = {});

struct PairExcess {
    std::size_t i = 0;
    std::size_t j = 0;
    double distance = 0.0;
    double difference = 0.0;
};

/// max |f(x) - f(y)| / |x - y| over pairs with |x - y| <= radius.
double localLipschitzConstant(const SetSample& sample, const ScalarField& f, double radius);

struct LocalToGlobalReport {
    double radius = 0.0;
    double localConstant = 0.0;  // C as supplied
    double k = 0.0;
    bool hypothesisHolds = true;
    std::vector<PairExcess> localViolations;
    double measuredLocal = 0.0;
    double globalConstant = 0.0;
    std::size_t globalWitnessI = 0;
    std::size_t globalWitnessJ = 0;
    double bound = 0.0;  // k * C
    bool passed = false;
};

/// Checks that a field which is C-Lipschitz on Euclidean balls of `radius` is
/// globally kC-Lipschitz. `radius <= 0` selects twice the longest edge.
LocalToGlobalReport verifyLocalToGlobal(const SetSample& sample, const ScalarField& f, double radius,
                                        double localConstant, double k, double tol = 1e-9);

} // namespace qcalc
