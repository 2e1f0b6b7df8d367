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
#include <vector>

#include "qcalc/calculus.hpp"
#include "qcalc/fields.hpp"
#include "qcalc/geometry.hpp"

namespace qcalc {

/// Sample points w with |w - x| <= radius (1 + 1e-12), x included, in index order.
std::vector<std::size_t> ballMembers(const SetSample& sample, std::size_t x, double radius);

/// Singular spectrum of a neighborhood centered at its mean and divided by the
/// radius. A score near 0 means the neighborhood nearly lies in a hyperplane
/// whose normal is `thinDirection`.
struct FlatnessReport {
    std::size_t center = 0;
    double radius = 0.0;
    std::size_t neighbors = 0;
    std::vector<double> singularValues;  // nonincreasing, n entries
    std::vector<double> thinDirection;   // unit, largest |entry| positive
    double flatnessScore = 0.0;          // smallest / largest singular value
    double slack = 0.0;
    bool approximatelyFlat = false;      // score <= slack
};

FlatnessReport localFlatness(const SetSample& sample, std::size_t x, double radius, double slack = 1e-6);

/// Directions in which the data f(w) - f(x), w in the ball, pin the
/// differential at x: right singular vectors of the matrix of (w - x) / radius
/// whose singular value exceeds `slack` times the largest one.
struct DeterminedSubspace {
    std::size_t dimension = 0;
    std::vector<std::vector<double>> basis;
    std::vector<double> singularValues;          // of (w - x) / radius
    std::vector<double> relativeSingularValues;  // divided by the largest
    double slack = 0.0;
    /// Minimum-norm least-squares differential; it lies in the subspace.
    std::vector<double> differential;
    std::size_t neighbors = 0;
};

DeterminedSubspace determinedSubspace(const SetSample& sample, const ScalarField& f, std::size_t x,
                                      double radius, double slack = 1e-6);

/// Condition number of the local least-squares system for the differential.
/// `unique` is false when some relative singular value is at most rankTol,
/// in which case the differential is not determined and no number is given.
struct StabilityReport {
    bool unique = false;
    double conditionNumber = 0.0;
    std::vector<double> singularValues;
    double rankTol = 0.0;
};

StabilityReport differentialStability(const SetSample& sample, const ScalarField& f, std::size_t x,
                                      double radius, double rankTol = 1e-12);

/// Supremum of remainder / |x - y| per dyadic distance bucket, smallest
/// scales first. Passes when the smallest-scale ratio is at most
/// decayConstant times that bucket's upper edge and the ratios do not
/// increase toward small scales across the three smallest buckets.
struct WhitneyC1Report {
    std::vector<ScaleBucket> buckets;
    double smallestScale = 0.0;
    double smallestRatio = 0.0;
    double decayConstant = 0.0;
    double threshold = 0.0;
    bool belowThreshold = false;
    bool nonincreasing = false;
    bool passed = false;
};

/// `maxBuckets` keeps only that many of the smallest populated buckets (0
/// keeps all); fewer than three raises Undersampled.
WhitneyC1Report checkWhitneyC1(const SetSample& sample, const ScalarField& f, const CovectorField& a,
                               std::size_t maxBuckets = 0, double decayConstant = 1.0,
                               double tol = 1e-9, std::size_t minPairs = 8);

} // namespace qcalc
