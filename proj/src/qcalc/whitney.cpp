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

#include "qcalc/whitney.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "qcalc/errors.hpp"

namespace qcalc {

namespace {

using Eigen::Index;

std::vector<std::size_t> requireNeighborhood(const SetSample& sample, std::size_t x, double radius) {
    if (x >= sample.pointCount()) {
        throw InvalidArgument("vertex index " + std::to_string(x) + " out of range");
    }
    if (!(radius > 0.0)) {
        throw InvalidArgument("radius must be positive");
    }
    auto members = ballMembers(sample, x, radius);
    if (members.size() < sample.ambientDim() + 1) {
        throw Underdetermined("ball of radius " + std::to_string(radius) + " around vertex " +
                              std::to_string(x) + " holds " + std::to_string(members.size()) +
                              " points; need " + std::to_string(sample.ambientDim() + 1));
    }
    return members;
}

std::vector<double> column(const Eigen::MatrixXd& m, Index c) {
    std::vector<double> out(static_cast<std::size_t>(m.rows()));
    for (Index r = 0; r < m.rows(); ++r) {
        out[static_cast<std::size_t>(r)] = m(r, c);
    }
    // Sign convention: the entry of largest magnitude is positive.
    std::size_t lead = 0;
    for (std::size_t k = 1; k < out.size(); ++k) {
        if (std::abs(out[k]) > std::abs(out[lead])) {
            lead = k;
        }
    }
    if (out[lead] < 0.0) {
        for (double& v : out) {
            v = -v;
        }
    }
    return out;
}

std::vector<double> singularValues(const Eigen::JacobiSVD<Eigen::MatrixXd>& svd, std::size_t dim) {
    std::vector<double> out(dim, 0.0);
    const auto& s = svd.singularValues();
    for (Index k = 0; k < s.size() && static_cast<std::size_t>(k) < dim; ++k) {
        out[static_cast<std::size_t>(k)] = s(k);
    }
    return out;
}

// Rows (w - x) / radius for w != x in the ball.
Eigen::MatrixXd differenceMatrix(const SetSample& sample, std::size_t x, double radius,
                                 const std::vector<std::size_t>& members) {
    const std::size_t dim = sample.ambientDim();
    Eigen::MatrixXd m(static_cast<Index>(members.size() - 1), static_cast<Index>(dim));
    Index row = 0;
    for (std::size_t w : members) {
        if (w == x) {
            continue;
        }
        for (std::size_t k = 0; k < dim; ++k) {
            m(row, static_cast<Index>(k)) = (sample.point(w)[k] - sample.point(x)[k]) / radius;
        }
        ++row;
    }
    return m;
}

} // namespace

std::vector<std::size_t> ballMembers(const SetSample& sample, std::size_t x, double radius) {
    std::vector<std::size_t> members;
    for (std::size_t w = 0; w < sample.pointCount(); ++w) {
        if (sample.distance(x, w) <= radius * (1.0 + 1e-12)) {
            members.push_back(w);
        }
    }
    return members;
}

FlatnessReport localFlatness(const SetSample& sample, std::size_t x, double radius, double slack) {
    const auto members = requireNeighborhood(sample, x, radius);
    const std::size_t dim = sample.ambientDim();

    Eigen::MatrixXd points(static_cast<Index>(members.size()), static_cast<Index>(dim));
    for (std::size_t r = 0; r < members.size(); ++r) {
        for (std::size_t k = 0; k < dim; ++k) {
            points(static_cast<Index>(r), static_cast<Index>(k)) = sample.point(members[r])[k];
        }
    }
    const Eigen::RowVectorXd mean = points.colwise().mean();
    points.rowwise() -= mean;
    points /= radius;

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(points, Eigen::ComputeFullV);
    FlatnessReport report;
    report.center = x;
    report.radius = radius;
    report.neighbors = members.size();
    report.singularValues = singularValues(svd, dim);
    report.thinDirection = column(svd.matrixV(), static_cast<Index>(dim) - 1);
    const double largest = report.singularValues.front();
    report.flatnessScore = largest > 0.0 ? report.singularValues.back() / largest : 0.0;
    report.slack = slack;
    report.approximatelyFlat = report.flatnessScore <= slack;
    return report;
}

DeterminedSubspace determinedSubspace(const SetSample& sample, const ScalarField& f, std::size_t x,
                                      double radius, double slack) {
    checkField(sample, f);
    const auto members = requireNeighborhood(sample, x, radius);
    const std::size_t dim = sample.ambientDim();
    const Eigen::MatrixXd directions = differenceMatrix(sample, x, radius, members);

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(directions, Eigen::ComputeThinU | Eigen::ComputeFullV);
    DeterminedSubspace out;
    out.neighbors = members.size();
    out.slack = slack;
    out.singularValues = singularValues(svd, dim);
    const double largest = out.singularValues.front();
    for (std::size_t k = 0; k < dim; ++k) {
        const double rel = largest > 0.0 ? out.singularValues[k] / largest : 0.0;
        out.relativeSingularValues.push_back(rel);
        if (rel > slack) {
            ++out.dimension;
            out.basis.push_back(column(svd.matrixV(), static_cast<Index>(k)));
        }
    }

    // Least squares on difference quotients, restricted to the determined
    // directions: the data carry no information about the others.
    Eigen::VectorXd rise(directions.rows());
    Index row = 0;
    for (std::size_t w : members) {
        if (w != x) {
            rise(row++) = (f.values[w] - f.values[x]) / radius;
        }
    }
    Eigen::VectorXd solution = Eigen::VectorXd::Zero(static_cast<Index>(dim));
    const Eigen::VectorXd projected = svd.matrixU().transpose() * rise;
    for (std::size_t k = 0; k < out.dimension; ++k) {
        const auto kk = static_cast<Index>(k);
        solution += svd.matrixV().col(kk) * (projected(kk) / svd.singularValues()(kk));
    }
    out.differential.assign(solution.data(), solution.data() + solution.size());
    return out;
}

StabilityReport differentialStability(const SetSample& sample, const ScalarField& f, std::size_t x,
                                      double radius, double rankTol) {
    checkField(sample, f);
    const auto members = requireNeighborhood(sample, x, radius);
    const Eigen::MatrixXd directions = differenceMatrix(sample, x, radius, members);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(directions);

    StabilityReport report;
    report.rankTol = rankTol;
    report.singularValues = singularValues(svd, sample.ambientDim());
    const double largest = report.singularValues.front();
    const double smallest = report.singularValues.back();
    report.unique = largest > 0.0 && smallest / largest > rankTol;
    if (report.unique) {
        report.conditionNumber = largest / smallest;
    }
    return report;
}

WhitneyC1Report checkWhitneyC1(const SetSample& sample, const ScalarField& f, const CovectorField& a,
                               std::size_t maxBuckets, double decayConstant, double tol,
                               std::size_t minPairs) {
    checkField(sample, f);
    checkField(sample, a);
    WhitneyC1Report report;
    report.decayConstant = decayConstant;
    report.buckets = dyadicBuckets(sample, true, minPairs, [&](std::size_t x, std::size_t y, double d) {
        return whitneyRemainder(sample, f, a, x, y) / d;
    });
    if (maxBuckets > 0 && report.buckets.size() > maxBuckets) {
        report.buckets.resize(maxBuckets);
    }
    if (report.buckets.size() < 3) {
        throw Undersampled("need at least 3 populated dyadic scales, have " +
                           std::to_string(report.buckets.size()));
    }
    const auto& b = report.buckets;
    report.smallestScale = std::ldexp(1.0, b[0].exponent + 1);
    report.smallestRatio = b[0].supremum;
    report.threshold = decayConstant * report.smallestScale;
    report.belowThreshold = report.smallestRatio <= report.threshold + tol;
    report.nonincreasing = b[0].supremum <= b[1].supremum + tol && b[1].supremum <= b[2].supremum + tol;
    report.passed = report.belowThreshold && report.nonincreasing;
    return report;
}

} // namespace qcalc
