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
#include <span>
#include <string>
#include <vector>

namespace qcalc {

/// An undirected straight segment between two sample points.
struct Edge {
    std::size_t a = 0;
    std::size_t b = 0;
    double length = 0.0;

    bool operator==(const Edge&) const = default;
};

/// A finite geometric graph standing in for a closed set E in R^n.
///
/// Points are stored flat, `ambient_dim` coordinates per point. Edges are
/// straight segments assumed to lie in the set, so every path statement is
/// made on this graph. Instances are built once and then only read.
class SetSample {
public:
    SetSample() = default;
    SetSample(std::size_t ambientDim, std::vector<double> coords, std::vector<Edge> edges,
              std::string label);

    std::size_t ambientDim() const { return ambientDim_; }
    std::size_t pointCount() const { return ambientDim_ == 0 ? 0 : coords_.size() / ambientDim_; }
    std::size_t edgeCount() const { return edges_.size(); }

    std::span<const double> point(std::size_t i) const {
        return {coords_.data() + i * ambientDim_, ambientDim_};
    }
    const std::vector<double>& coords() const { return coords_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& label() const { return label_; }

    /// Neighbor lists in edge order; entry is (neighbor, edge index).
    const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& adjacency() const {
        return adjacency_;
    }

    /// Euclidean distance between two stored points.
    double distance(std::size_t i, std::size_t j) const;

    double maxEdgeLength() const;
    double minEdgeLength() const;

    /// 16 hex digits identifying the coordinates and edges bit for bit.
    /// Fields and paths carry this to detect use with the wrong set.
    const std::string& fingerprint() const { return fingerprint_; }

    bool operator==(const SetSample& other) const {
        return ambientDim_ == other.ambientDim_ && coords_ == other.coords_ &&
               edges_ == other.edges_ && label_ == other.label_;
    }

private:
    std::size_t ambientDim_ = 0;
    std::vector<double> coords_;
    std::vector<Edge> edges_;
    std::string label_;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency_;
    std::string fingerprint_;
};

/// Euclidean distance between two coordinate tuples of equal length.
double euclidean(std::span<const double> x, std::span<const double> y);

/// A path through a set: consecutive vertices are joined by edges, and the
/// cumulative arc length is stored per vertex starting at 0.
struct PolylinePath {
    std::string setRef;
    std::vector<std::size_t> vertices;
    std::vector<double> cumulativeLength;

    double length() const { return cumulativeLength.empty() ? 0.0 : cumulativeLength.back(); }
    bool closed() const { return vertices.size() > 1 && vertices.front() == vertices.back(); }
};

/// Builds a path along the given vertex chain. Throws InvalidArgument when two
/// consecutive vertices are not adjacent.
PolylinePath makePath(const SetSample& sample, std::vector<std::size_t> vertices);

PolylinePath reversed(const SetSample& sample, const PolylinePath& path);

/// Joins `first` and `second`; the last vertex of `first` must be the first
/// vertex of `second`.
PolylinePath concatenate(const SetSample& sample, const PolylinePath& first,
                         const PolylinePath& second);

struct BuildLimits {
    unsigned gasketLevelCap = 8;
    unsigned carpetLevelCap = 5;
};

/// Chains consecutive points with edges. `coords` holds `dim` values per
/// point. Rejects fewer than two points and repeated consecutive points.
SetSample buildPolyline(std::size_t dim, std::span<const double> coords, std::string label = "polyline");

/// Edge network of all level-`level` triangles of the unit Sierpinski gasket
/// with corners (0,0), (1,0), (1/2, sqrt(3)/2). Vertices are ordered by
/// height, then by abscissa.
SetSample buildGasket(unsigned level, const BuildLimits& limits = {});

/// Cell-center sample of the unit Sierpinski carpet: one point per retained
/// level-`level` cell, edges between cells sharing a side. Row-major order.
SetSample buildCarpet(unsigned level, const BuildLimits& limits = {});

/// Graph of a piecewise-linear function on [spanLo, spanHi] with phi(spanLo) = 0.
/// The span is split into equal pieces, one per slope. The grid uses
/// ceil(width / gridStep) equal steps, so the effective step never exceeds
/// `gridStep`.
struct LipschitzGraph {
    SetSample sample;
    std::vector<double> slopes;
    double spanLo = 0.0;
    double spanHi = 0.0;
    double step = 0.0;
    double lipschitzConstant = 0.0;
};

LipschitzGraph buildLipschitzGraph(std::span<const double> slopes, double gridStep, double spanLo,
                                   double spanHi);

/// Two polygonal circles of radius `bubbleRadius` facing each other across a
/// gap of `neckWidth`, joined at their facing poles through a midpoint vertex.
/// The left bubble's far pole is vertex 0; `poles` reports the four poles.
struct Dumbbell {
    SetSample sample;
    std::size_t leftFarPole = 0;
    std::size_t leftNearPole = 0;
    std::size_t rightNearPole = 0;
    std::size_t rightFarPole = 0;
    std::size_t neckMidpoint = 0;
    std::size_t verticesPerBubble = 0;
};

Dumbbell buildDumbbell(double bubbleRadius, double neckWidth, double step);

/// One broken invariant found by validate().
struct Violation {
    std::string kind;  // "dimension", "index", "edge-length", "duplicate-point", "connectivity", "non-finite"
    std::vector<std::size_t> indices;
    std::string detail;
};

/// Lists every invariant violation; empty iff the sample is valid.
std::vector<Violation> validate(const SetSample& sample, double relTol = 1e-12);

/// Connected components of the edge graph as a label per vertex.
std::vector<std::size_t> componentLabels(const SetSample& sample);

} // namespace qcalc
