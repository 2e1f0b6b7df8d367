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

#include "qcalc/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <string>

#include "qcalc/errors.hpp"
#include "qcalc/parallel.hpp"

namespace qcalc {

namespace {

void requireIndex(const SetSample& sample, std::size_t i) {
    if (i >= sample.pointCount()) {
        throw InvalidArgument("vertex index " + std::to_string(i) + " out of range");
    }
}

// Route lengths closer than this are treated as ties.
double tieTolerance(double length) {
    return 1e-12 * std::max(1.0, length);
}

// Uniform index in [0, bound) from the top 53 bits; mt19937_64 output is
// fully specified, so the draw sequence is portable.
std::size_t drawIndex(std::mt19937_64& rng, std::size_t bound) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return std::min(bound - 1, static_cast<std::size_t>(u * static_cast<double>(bound)));
}

} // namespace

ShortestPathTree shortestPathTree(const SetSample& sample, std::size_t source) {
    requireIndex(sample, source);
    const std::size_t n = sample.pointCount();
    ShortestPathTree tree;
    tree.source = source;
    tree.distance.assign(n, std::numeric_limits<double>::infinity());
    tree.predecessor.assign(n, ShortestPathTree::npos);
    tree.settled.reserve(n);

    std::vector<bool> done(n, false);
    using Entry = std::pair<double, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    tree.distance[source] = 0.0;
    queue.emplace(0.0, source);

    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (done[u] || d > tree.distance[u]) {
            continue;
        }
        done[u] = true;
        tree.settled.push_back(u);
        for (const auto& [v, e] : sample.adjacency()[u]) {
            if (done[v]) {
                continue;
            }
            const double candidate = d + sample.edges()[e].length;
            double& best = tree.distance[v];
            std::size_t& pred = tree.predecessor[v];
            if (candidate < best - tieTolerance(candidate)) {
                best = candidate;
                pred = u;
                queue.emplace(candidate, v);
            } else if (std::abs(candidate - best) <= tieTolerance(candidate) && u < pred) {
                pred = u;
                if (candidate < best) {
                    best = candidate;
                    queue.emplace(candidate, v);
                }
            }
        }
    }
    return tree;
}

PolylinePath pathFromTree(const SetSample& sample, const ShortestPathTree& tree, std::size_t target) {
    requireIndex(sample, target);
    if (!tree.reaches(target)) {
        throw Disconnected("vertex " + std::to_string(target) + " is unreachable from " +
                           std::to_string(tree.source));
    }
    std::vector<std::size_t> vertices;
    for (std::size_t v = target; v != tree.source; v = tree.predecessor[v]) {
        vertices.push_back(v);
    }
    vertices.push_back(tree.source);
    std::reverse(vertices.begin(), vertices.end());
    return makePath(sample, std::move(vertices));
}

double geodesicDistance(const SetSample& sample, std::size_t i, std::size_t j) {
    requireIndex(sample, i);
    requireIndex(sample, j);
    if (i == j) {
        return 0.0;
    }
    const auto tree = shortestPathTree(sample, std::min(i, j));
    const std::size_t target = std::max(i, j);
    if (!tree.reaches(target)) {
        throw Disconnected("vertices " + std::to_string(i) + " and " + std::to_string(j) +
                           " are not connected");
    }
    return tree.distance[target];
}

PolylinePath shortestPath(const SetSample& sample, std::size_t i, std::size_t j) {
    const auto tree = shortestPathTree(sample, i);
    return pathFromTree(sample, tree, j);
}

std::vector<double> allPairsGeodesics(const SetSample& sample) {
    const std::size_t n = sample.pointCount();
    std::vector<double> matrix(n * n, 0.0);
    detail::parallelFor(n, [&](std::size_t i) {
        const auto tree = shortestPathTree(sample, i);
        for (std::size_t j = i + 1; j < n; ++j) {
            matrix[i * n + j] = tree.distance[j];
        }
    });
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!std::isfinite(matrix[i * n + j])) {
                throw Disconnected("vertices " + std::to_string(i) + " and " + std::to_string(j) +
                                   " are not connected");
            }
            matrix[j * n + i] = matrix[i * n + j];
        }
    }
    return matrix;
}

namespace {

struct RatioCandidate {
    double ratio = -1.0;
    std::size_t i = 0;
    std::size_t j = 0;
    double geodesic = 0.0;
    double chord = 0.0;
};

// Strictly larger ratio wins, then lexicographically smaller pair.
void offer(RatioCandidate& best, const RatioCandidate& c) {
    if (c.ratio > best.ratio ||
        (c.ratio == best.ratio && std::tie(c.i, c.j) < std::tie(best.i, best.j))) {
        best = c;
    }
}

ChordArcReport toReport(const RatioCandidate& best, std::uint64_t pairs, const ChordArcOptions& options) {
    ChordArcReport report;
    report.kHat = best.ratio;
    report.witnessI = best.i;
    report.witnessJ = best.j;
    report.witnessGeodesic = best.geodesic;
    report.witnessChord = best.chord;
    report.pairCount = pairs;
    report.method = options.method;
    report.seed = options.seed;
    return report;
}

} // namespace

ChordArcReport estimateChordArc(const SetSample& sample, const ChordArcOptions& options) {
    const std::size_t n = sample.pointCount();
    if (n < 2) {
        throw InvalidArgument("chord-arc estimation needs at least two points");
    }

    auto candidate = [&](const ShortestPathTree& tree, std::size_t j) {
        const std::size_t i = tree.source;
        if (!tree.reaches(j)) {
            throw Disconnected("vertices " + std::to_string(i) + " and " + std::to_string(j) +
                               " are not connected");
        }
        RatioCandidate c;
        c.i = i;
        c.j = j;
        c.geodesic = tree.distance[j];
        c.chord = sample.distance(i, j);
        c.ratio = c.geodesic / c.chord;
        return c;
    };

    if (options.method == ChordArcMethod::Exhaustive) {
        std::vector<RatioCandidate> perSource(n - 1);
        detail::parallelFor(n - 1, [&](std::size_t i) {
            const auto tree = shortestPathTree(sample, i);
            for (std::size_t j = i + 1; j < n; ++j) {
                offer(perSource[i], candidate(tree, j));
            }
        });
        RatioCandidate best;
        for (const auto& c : perSource) {
            offer(best, c);
        }
        const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        return toReport(best, pairs, options);
    }

    if (options.pairBudget == 0) {
        throw InvalidArgument("sampled chord-arc estimation needs a positive pair budget");
    }
    std::mt19937_64 rng(options.seed);
    std::map<std::size_t, std::vector<std::size_t>> targetsBySource;
    for (std::uint64_t k = 0; k < options.pairBudget; ++k) {
        const std::size_t a = drawIndex(rng, n);
        std::size_t b = drawIndex(rng, n - 1);
        if (b >= a) {
            ++b;
        }
        targetsBySource[std::min(a, b)].push_back(std::max(a, b));
    }
    RatioCandidate best;
    for (const auto& [source, targets] : targetsBySource) {
        const auto tree = shortestPathTree(sample, source);
        for (std::size_t j : targets) {
            offer(best, candidate(tree, j));
        }
    }
    return toReport(best, options.pairBudget, options);
}

double localLipschitzConstant(const SetSample& sample, const ScalarField& f, double radius) {
    checkField(sample, f);
    const std::size_t n = sample.pointCount();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = sample.distance(i, j);
            if (d <= radius * (1.0 + 1e-12)) {
                best = std::max(best, std::abs(f.values[i] - f.values[j]) / d);
            }
        }
    }
    return best;
}

LocalToGlobalReport verifyLocalToGlobal(const SetSample& sample, const ScalarField& f, double radius,
                                        double localConstant, double k, double tol) {
    checkField(sample, f);
    if (!(localConstant >= 0.0)) {
        throw InvalidArgument("local Lipschitz constant must be nonnegative");
    }
    LocalToGlobalReport report;
    report.radius = radius > 0.0 ? radius : 2.0 * sample.maxEdgeLength();
    report.localConstant = localConstant;
    report.k = k;
    report.bound = k * localConstant;

    const std::size_t n = sample.pointCount();
    double global = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = sample.distance(i, j);
            const double diff = std::abs(f.values[i] - f.values[j]);
            const double ratio = diff / d;
            if (d <= report.radius * (1.0 + 1e-12)) {
                report.measuredLocal = std::max(report.measuredLocal, ratio);
                if (diff > localConstant * d + tol) {
                    report.localViolations.push_back({i, j, d, diff});
                }
            }
            if (ratio > global) {
                global = ratio;
                report.globalWitnessI = i;
                report.globalWitnessJ = j;
            }
        }
    }
    report.globalConstant = global;
    report.hypothesisHolds = report.localViolations.empty();
    report.passed = report.hypothesisHolds && global <= report.bound + tol;
    return report;
}

} // namespace qcalc
