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
#include <optional>
#include <vector>

#include "qcalc/fields.hpp"
#include "qcalc/geometry.hpp"

namespace qcalc {

/// Quadrature along straight segments. A is linearly interpolated between
/// the endpoint samples, so both rules integrate the interpolant exactly.
struct Quadrature {
    enum class Rule { Trapezoid, Midpoint };
    Rule rule = Rule::Trapezoid;
    unsigned subdivisions = 1;  // midpoint rule only

    static Quadrature trapezoid() { return {}; }
    static Quadrature midpoint(unsigned subdivisions) { return {Rule::Midpoint, subdivisions}; }
};

/// Integral of <A(p(t)), p'(t)> over the segment from vertex u to vertex v.
double segmentIntegral(const SetSample& sample, const CovectorField& a, std::size_t u, std::size_t v,
                       const Quadrature& quadrature = {});

/// Sum of segment integrals along the path.
///
/// Positive and negative contributions are summed separately in order of
/// magnitude, so reversing the path negates the result exactly.
double pathIntegral(const SetSample& sample, const CovectorField& a, const PolylinePath& path,
                    const Quadrature& quadrature = {});

/// |f(end) - f(start) - integral of A along the path|.
double verifyFtc(const SetSample& sample, const ScalarField& f, const CovectorField& a,
                 const PolylinePath& path, const Quadrature& quadrature = {});

/// Integral of A around a closed path. Throws InvalidArgument when the path
/// does not return to its start.
double loopDefect(const SetSample& sample, const CovectorField& a, const PolylinePath& cycle,
                  const Quadrature& quadrature = {});

/// A one-form given directly on edges: value(e) is the increment from
/// edges()[e].a to edges()[e].b.
struct EdgeOneForm {
    std::string setRef;
    std::vector<double> value;
};

EdgeOneForm edgeDifferences(const SetSample& sample, const ScalarField& f);
double pathIntegral(const SetSample& sample, const EdgeOneForm& form, const PolylinePath& path);

/// Per-vertex least-squares covector fitting the differences of f along the
/// incident edges.
CovectorField liftEdgeDifferences(const SetSample& sample, const ScalarField& f);

struct Reconstruction {
    ScalarField field;
    std::size_t basepoint = 0;
    std::size_t cyclesChecked = 0;
    double worstDefect = 0.0;
    /// Edge closing the worst fundamental cycle, when there is one.
    std::optional<std::pair<std::size_t, std::size_t>> worstEdge;
    bool integrable = true;
};

/// f(v) = baseValue + integral of A along the shortest path from basepoint to
/// v. Every edge outside the shortest-path tree closes one fundamental cycle;
/// if any of those has a defect above tol, the result is flagged
/// non-integrable.
Reconstruction reconstruct(const SetSample& sample, const CovectorField& a, std::size_t basepoint,
                           double baseValue, double tol = 1e-9);

/// |f(y) - f(x) - A(x)(y - x)|
double whitneyRemainder(const SetSample& sample, const ScalarField& f, const CovectorField& a,
                        std::size_t x, std::size_t y);

/// max |A(w) - A(x)| over sample points w with |x - w| <= radius.
double oscillation(const SetSample& sample, const CovectorField& a, std::size_t x, double radius);

struct RemainderPair {
    std::size_t x = 0;
    std::size_t y = 0;
    double distance = 0.0;
    double remainder = 0.0;
    double bound = 0.0;  // k |x - y| osc(A, x, k |x - y|)
};

struct RemainderBoundReport {
    double k = 0.0;
    double tol = 0.0;
    std::size_t orderedPairs = 0;
    std::vector<RemainderPair> violations;  // sorted by (x, y)
    /// Largest remainder / bound over pairs with a positive bound.
    double maxSlackRatio = 0.0;
    /// For each unordered pair the orientation with the larger remainder
    /// excess, sorted by distance then indices. Filled on request.
    std::vector<RemainderPair> pairs;
    bool passed = true;
};

/// Checks the first-order remainder against k |x - y| times the oscillation of
/// A on the ball of radius k |x - y| for every ordered vertex pair.
RemainderBoundReport verifyRemainderBound(const SetSample& sample, const ScalarField& f,
                                          const CovectorField& a, double k, double tol = 1e-9,
                                          bool keepPairs = false);

struct AffineRigidityReport {
    bool trivial = false;
    bool hypothesisHolds = false;
    double spread = 0.0;  // max |A(v) - A(0)|
    double intercept = 0.0;
    std::vector<double> gradient;
    double maxResidual = 0.0;
    bool passed = false;
};

/// Least-squares affine fit b + <c, x> to f, meaningful when A is constant
/// to within tolIn.
AffineRigidityReport affineRigidityTest(const SetSample& sample, const ScalarField& f,
                                        const CovectorField& a, double tolIn = 1e-9,
                                        double tolOut = 1e-9);

/// Pairs grouped by dyadic distance [2^e, 2^(e+1)), with the supremum of some
/// pair quantity and the distance of the pair attaining it.
struct ScaleBucket {
    int exponent = 0;
    std::size_t pairs = 0;
    double supremum = 0.0;
    double witnessDistance = 0.0;
};

/// Power law sup ~ constant * distance^alpha fitted on (log distance, log sup).
struct ModulusFit {
    bool exact = false;  // every bucket supremum vanished
    double alphaHat = 0.0;
    double constantHat = 0.0;
    double fitResidual = 0.0;  // max |log residual|
    bool inHolderRange = false;  // 0 < alphaHat <= 1.01
    std::vector<ScaleBucket> scales;
};

struct ModulusReport {
    double k = 0.0;
    ModulusFit remainder;     // sup of remainder / (k |x - y|)
    ModulusFit differential;  // sup of |A(x) - A(y)|
};

/// Groups ordered (or unordered) pair values into dyadic buckets, dropping
/// buckets with fewer than minPairs entries. `value(x, y, d)` is evaluated for
/// x != y.
template<typename Fn>
std::vector<ScaleBucket> dyadicBuckets(const SetSample& sample, bool ordered, std::size_t minPairs,
                                       Fn&& value);

ModulusFit fitPowerLaw(std::vector<ScaleBucket> buckets, double exactTol = 1e-13);

ModulusReport fitHolderModulus(const SetSample& sample, const ScalarField& f, const CovectorField& a,
                               double k, std::size_t minPairs = 8);

int dyadicExponent(double distance);

} // namespace qcalc

#include "qcalc/calculus_impl.hpp"
