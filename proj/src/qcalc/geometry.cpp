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

#include "qcalc/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>
#include <utility>

#include "qcalc/errors.hpp"

namespace qcalc {

namespace {

// FNV-1a over raw bytes.
class Fnv1a {
public:
    void add(const void* data, std::size_t size) {
        const auto* bytes = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < size; ++i) {
            hash_ ^= bytes[i];
            hash_ *= 0x100000001b3ull;
        }
    }
    template<typename T>
    void add(const T& value) {
        add(&value, sizeof(T));
    }
    std::string hex() const {
        static constexpr char digits[] = "0123456789abcdef";
        std::string out(16, '0');
        std::uint64_t h = hash_;
        for (int i = 15; i >= 0; --i) {
            out[static_cast<std::size_t>(i)] = digits[h & 0xf];
            h >>= 4;
        }
        return out;
    }

private:
    std::uint64_t hash_ = 0xcbf29ce484222325ull;
};

std::string formatIndex(std::size_t i) {
    return std::to_string(i);
}

} // namespace

double euclidean(std::span<const double> x, std::span<const double> y) {
    double sum = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double d = x[k] - y[k];
        sum += d * d;
    }
    return std::sqrt(sum);
}

SetSample::SetSample(std::size_t ambientDim, std::vector<double> coords, std::vector<Edge> edges,
                     std::string label)
    : ambientDim_(ambientDim)
    , coords_(std::move(coords))
    , edges_(std::move(edges))
    , label_(std::move(label)) {

    const std::size_t n = pointCount();
    adjacency_.resize(n);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& edge = edges_[e];
        // Out-of-range edges are kept for validate() to report.
        if (edge.a < n && edge.b < n && edge.a != edge.b) {
            adjacency_[edge.a].emplace_back(edge.b, e);
            adjacency_[edge.b].emplace_back(edge.a, e);
        }
    }

    Fnv1a hash;
    hash.add(static_cast<std::uint64_t>(ambientDim_));
    for (double c : coords_) {
        hash.add(std::bit_cast<std::uint64_t>(c));
    }
    for (const Edge& edge : edges_) {
        hash.add(static_cast<std::uint64_t>(edge.a));
        hash.add(static_cast<std::uint64_t>(edge.b));
        hash.add(std::bit_cast<std::uint64_t>(edge.length));
    }
    fingerprint_ = hash.hex();
}

double SetSample::distance(std::size_t i, std::size_t j) const {
    return euclidean(point(i), point(j));
}

double SetSample::maxEdgeLength() const {
    double best = 0.0;
    for (const Edge& e : edges_) {
        best = std::max(best, e.length);
    }
    return best;
}

double SetSample::minEdgeLength() const {
    if (edges_.empty()) {
        return 0.0;
    }
    double best = edges_.front().length;
    for (const Edge& e : edges_) {
        best = std::min(best, e.length);
    }
    return best;
}

PolylinePath makePath(const SetSample& sample, std::vector<std::size_t> vertices) {
    PolylinePath path;
    path.setRef = sample.fingerprint();
    if (vertices.empty()) {
        throw InvalidArgument("path has no vertices");
    }
    const std::size_t n = sample.pointCount();
    path.cumulativeLength.reserve(vertices.size());
    path.cumulativeLength.push_back(0.0);
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        if (vertices[k] >= n) {
            throw InvalidArgument("path vertex " + formatIndex(vertices[k]) + " out of range");
        }
        if (k == 0) {
            continue;
        }
        const std::size_t u = vertices[k - 1];
        const std::size_t v = vertices[k];
        const auto& nbrs = sample.adjacency()[u];
        auto it = std::find_if(nbrs.begin(), nbrs.end(), [v](const auto& p) { return p.first == v; });
        if (it == nbrs.end()) {
            throw InvalidArgument("path vertices " + formatIndex(u) + " and " + formatIndex(v) +
                                  " are not adjacent");
        }
        path.cumulativeLength.push_back(path.cumulativeLength.back() +
                                        sample.edges()[it->second].length);
    }
    path.vertices = std::move(vertices);
    return path;
}

PolylinePath reversed(const SetSample& sample, const PolylinePath& path) {
    std::vector<std::size_t> vertices(path.vertices.rbegin(), path.vertices.rend());
    return makePath(sample, std::move(vertices));
}

PolylinePath concatenate(const SetSample& sample, const PolylinePath& first,
                         const PolylinePath& second) {
    if (first.vertices.empty() || second.vertices.empty() ||
        first.vertices.back() != second.vertices.front()) {
        throw InvalidArgument("paths do not meet end to start");
    }
    std::vector<std::size_t> vertices = first.vertices;
    vertices.insert(vertices.end(), second.vertices.begin() + 1, second.vertices.end());
    return makePath(sample, std::move(vertices));
}

namespace {

std::vector<Edge> chainEdges(std::size_t dim, const std::vector<double>& coords) {
    const std::size_t n = coords.size() / dim;
    std::vector<Edge> edges;
    edges.reserve(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::span<const double> a(coords.data() + i * dim, dim);
        std::span<const double> b(coords.data() + (i + 1) * dim, dim);
        edges.push_back({i, i + 1, euclidean(a, b)});
    }
    return edges;
}

Edge makeEdge(const std::vector<double>& coords, std::size_t dim, std::size_t a, std::size_t b) {
    if (a > b) {
        std::swap(a, b);
    }
    std::span<const double> pa(coords.data() + a * dim, dim);
    std::span<const double> pb(coords.data() + b * dim, dim);
    return {a, b, euclidean(pa, pb)};
}

} // namespace

SetSample buildPolyline(std::size_t dim, std::span<const double> coords, std::string label) {
    if (dim == 0) {
        throw InvalidArgument("ambient dimension must be positive");
    }
    if (coords.size() % dim != 0) {
        throw InvalidArgument("coordinate count is not a multiple of the dimension");
    }
    const std::size_t n = coords.size() / dim;
    if (n < 2) {
        throw InvalidArgument("a polyline needs at least two points");
    }
    for (double c : coords) {
        if (!std::isfinite(c)) {
            throw InvalidArgument("non-finite coordinate");
        }
    }
    std::vector<double> stored(coords.begin(), coords.end());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::span<const double> a(stored.data() + i * dim, dim);
        std::span<const double> b(stored.data() + (i + 1) * dim, dim);
        if (euclidean(a, b) == 0.0) {
            throw InvalidArgument("duplicate consecutive points at index " + formatIndex(i + 1));
        }
    }
    auto edges = chainEdges(dim, stored);
    return SetSample(dim, std::move(stored), std::move(edges), std::move(label));
}

SetSample buildGasket(unsigned level, const BuildLimits& limits) {
    if (level > limits.gasketLevelCap) {
        throw ResourceLimit("gasket level " + std::to_string(level) + " exceeds cap " +
                            std::to_string(limits.gasketLevelCap));
    }
    // Lattice coordinates (i, j) stand for i*u + j*v with u = (1, 0) / 2^m and
    // v = (1/2, sqrt(3)/2) / 2^m; keyed as (j, i) so map order is row order.
    using Key = std::pair<long long, long long>;
    std::map<Key, std::size_t> vertexIds;
    std::vector<std::pair<Key, Key>> edgeKeys;

    const long long side = 1ll << level;
    struct Triangle {
        long long i, j, size;
    };
    std::vector<Triangle> stack{{0, 0, side}};
    while (!stack.empty()) {
        Triangle t = stack.back();
        stack.pop_back();
        if (t.size == 1) {
            const Key a{t.j, t.i};
            const Key b{t.j, t.i + 1};
            const Key c{t.j + 1, t.i};
            vertexIds.emplace(a, 0);
            vertexIds.emplace(b, 0);
            vertexIds.emplace(c, 0);
            edgeKeys.emplace_back(a, b);
            edgeKeys.emplace_back(a, c);
            edgeKeys.emplace_back(b, c);
            continue;
        }
        const long long h = t.size / 2;
        stack.push_back({t.i, t.j + h, h});
        stack.push_back({t.i + h, t.j, h});
        stack.push_back({t.i, t.j, h});
    }

    const double unit = std::ldexp(1.0, -static_cast<int>(level));
    const double rise = std::sqrt(3.0) / 2.0;
    std::vector<double> coords;
    coords.reserve(vertexIds.size() * 2);
    std::size_t next = 0;
    for (auto& [key, id] : vertexIds) {
        id = next++;
        const auto [j, i] = key;
        coords.push_back((static_cast<double>(i) + 0.5 * static_cast<double>(j)) * unit);
        coords.push_back(static_cast<double>(j) * rise * unit);
    }

    std::vector<Edge> edges;
    edges.reserve(edgeKeys.size());
    for (const auto& [ka, kb] : edgeKeys) {
        edges.push_back(makeEdge(coords, 2, vertexIds.at(ka), vertexIds.at(kb)));
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& x, const Edge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    return SetSample(2, std::move(coords), std::move(edges), "gasket-" + std::to_string(level));
}

namespace {

bool carpetRetains(long long i, long long j) {
    while (i > 0 || j > 0) {
        if (i % 3 == 1 && j % 3 == 1) {
            return false;
        }
        i /= 3;
        j /= 3;
    }
    return true;
}

} // namespace

SetSample buildCarpet(unsigned level, const BuildLimits& limits) {
    if (level > limits.carpetLevelCap) {
        throw ResourceLimit("carpet level " + std::to_string(level) + " exceeds cap " +
                            std::to_string(limits.carpetLevelCap));
    }
    long long cells = 1;
    for (unsigned k = 0; k < level; ++k) {
        cells *= 3;
    }
    const double pitch = 1.0 / static_cast<double>(cells);

    std::vector<long long> ids(static_cast<std::size_t>(cells * cells), -1);
    std::vector<double> coords;
    long long next = 0;
    for (long long j = 0; j < cells; ++j) {
        for (long long i = 0; i < cells; ++i) {
            if (!carpetRetains(i, j)) {
                continue;
            }
            ids[static_cast<std::size_t>(j * cells + i)] = next++;
            coords.push_back((static_cast<double>(i) + 0.5) * pitch);
            coords.push_back((static_cast<double>(j) + 0.5) * pitch);
        }
    }

    std::vector<Edge> edges;
    for (long long j = 0; j < cells; ++j) {
        for (long long i = 0; i < cells; ++i) {
            const long long here = ids[static_cast<std::size_t>(j * cells + i)];
            if (here < 0) {
                continue;
            }
            if (i + 1 < cells) {
                const long long right = ids[static_cast<std::size_t>(j * cells + i + 1)];
                if (right >= 0) {
                    edges.push_back(makeEdge(coords, 2, static_cast<std::size_t>(here),
                                             static_cast<std::size_t>(right)));
                }
            }
            if (j + 1 < cells) {
                const long long up = ids[static_cast<std::size_t>((j + 1) * cells + i)];
                if (up >= 0) {
                    edges.push_back(makeEdge(coords, 2, static_cast<std::size_t>(here),
                                             static_cast<std::size_t>(up)));
                }
            }
        }
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& x, const Edge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    return SetSample(2, std::move(coords), std::move(edges), "carpet-" + std::to_string(level));
}

LipschitzGraph buildLipschitzGraph(std::span<const double> slopes, double gridStep, double spanLo,
                                   double spanHi) {
    if (slopes.empty()) {
        throw InvalidArgument("at least one slope is required");
    }
    for (double s : slopes) {
        if (!std::isfinite(s)) {
            throw InvalidArgument("slopes must be finite");
        }
    }
    if (!(gridStep > 0.0) || !std::isfinite(gridStep)) {
        throw InvalidArgument("grid step must be positive");
    }
    if (!(spanHi > spanLo) || !std::isfinite(spanLo) || !std::isfinite(spanHi)) {
        throw InvalidArgument("empty span");
    }

    const double width = spanHi - spanLo;
    const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil(width / gridStep - 1e-9)));
    const double step = width / static_cast<double>(steps);
    const std::size_t pieces = slopes.size();
    const double pieceWidth = width / static_cast<double>(pieces);

    // Heights at piece boundaries.
    std::vector<double> knotHeight(pieces + 1, 0.0);
    for (std::size_t p = 0; p < pieces; ++p) {
        knotHeight[p + 1] = knotHeight[p] + slopes[p] * pieceWidth;
    }
    auto phi = [&](double x) {
        const double t = x - spanLo;
        auto piece = static_cast<std::size_t>(std::max(0.0, std::floor(t / pieceWidth)));
        piece = std::min(piece, pieces - 1);
        return knotHeight[piece] + slopes[piece] * (t - static_cast<double>(piece) * pieceWidth);
    };

    std::vector<double> coords;
    coords.reserve(2 * (steps + 1));
    for (std::size_t j = 0; j <= steps; ++j) {
        const double x = j == steps ? spanHi : spanLo + static_cast<double>(j) * step;
        coords.push_back(x);
        coords.push_back(phi(x));
    }
    auto edges = chainEdges(2, coords);

    LipschitzGraph graph;
    graph.slopes.assign(slopes.begin(), slopes.end());
    graph.spanLo = spanLo;
    graph.spanHi = spanHi;
    graph.step = step;
    for (double s : slopes) {
        graph.lipschitzConstant = std::max(graph.lipschitzConstant, std::abs(s));
    }
    graph.sample = SetSample(2, std::move(coords), std::move(edges), "lipschitz-graph");
    return graph;
}

Dumbbell buildDumbbell(double bubbleRadius, double neckWidth, double step) {
    if (!(neckWidth > 0.0) || !(neckWidth < bubbleRadius) || !std::isfinite(bubbleRadius)) {
        throw InvalidArgument("dumbbell needs 0 < neck_width < bubble_radius");
    }
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw InvalidArgument("angular step must be positive");
    }
    const double pi = std::numbers::pi;
    // Even vertex count so both poles of each bubble are vertices.
    const auto half = static_cast<std::size_t>(std::max(2.0, std::round(pi / step)));
    const std::size_t perBubble = 2 * half;
    const double delta = 2.0 * pi / static_cast<double>(perBubble);

    const double leftCenter = -0.5 * neckWidth - bubbleRadius;
    const double rightCenter = 0.5 * neckWidth + bubbleRadius;

    std::vector<double> coords;
    coords.reserve(2 * (2 * perBubble + 1));
    // Both bubbles start at angle pi and run counterclockwise.
    auto addBubble = [&](double center) {
        for (std::size_t k = 0; k < perBubble; ++k) {
            if (k == 0) {
                coords.push_back(center - bubbleRadius);
                coords.push_back(0.0);
            } else if (k == half) {
                coords.push_back(center + bubbleRadius);
                coords.push_back(0.0);
            } else {
                const double angle = pi + static_cast<double>(k) * delta;
                coords.push_back(center + bubbleRadius * std::cos(angle));
                coords.push_back(bubbleRadius * std::sin(angle));
            }
        }
    };
    addBubble(leftCenter);
    addBubble(rightCenter);
    coords.push_back(0.0);
    coords.push_back(0.0);

    Dumbbell bell;
    bell.verticesPerBubble = perBubble;
    bell.leftFarPole = 0;
    bell.leftNearPole = half;
    bell.rightNearPole = perBubble;
    bell.rightFarPole = perBubble + half;
    bell.neckMidpoint = 2 * perBubble;

    std::vector<Edge> edges;
    for (std::size_t offset : {std::size_t{0}, perBubble}) {
        for (std::size_t k = 0; k < perBubble; ++k) {
            edges.push_back(makeEdge(coords, 2, offset + k, offset + (k + 1) % perBubble));
        }
    }
    edges.push_back(makeEdge(coords, 2, bell.leftNearPole, bell.neckMidpoint));
    edges.push_back(makeEdge(coords, 2, bell.rightNearPole, bell.neckMidpoint));
    std::sort(edges.begin(), edges.end(),
              [](const Edge& x, const Edge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    bell.sample = SetSample(2, std::move(coords), std::move(edges), "dumbbell");
    return bell;
}

std::vector<std::size_t> componentLabels(const SetSample& sample) {
    const std::size_t n = sample.pointCount();
    std::vector<std::size_t> label(n, n);
    std::vector<std::size_t> stack;
    for (std::size_t root = 0; root < n; ++root) {
        if (label[root] != n) {
            continue;
        }
        label[root] = root;
        stack.push_back(root);
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (const auto& [v, e] : sample.adjacency()[u]) {
                if (label[v] == n) {
                    label[v] = root;
                    stack.push_back(v);
                }
            }
        }
    }
    return label;
}

std::vector<Violation> validate(const SetSample& sample, double relTol) {
    std::vector<Violation> report;
    const std::size_t dim = sample.ambientDim();
    if (dim == 0) {
        report.push_back({"dimension", {}, "ambient dimension must be positive"});
        return report;
    }
    if (sample.coords().size() % dim != 0) {
        report.push_back({"dimension", {}, "coordinate count is not a multiple of the dimension"});
        return report;
    }
    const std::size_t n = sample.pointCount();
    if (n == 0) {
        report.push_back({"dimension", {}, "sample has no points"});
        return report;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (double c : sample.point(i)) {
            if (!std::isfinite(c)) {
                report.push_back({"non-finite", {i}, "coordinate is not finite"});
                break;
            }
        }
    }

    bool indicesOk = true;
    for (std::size_t e = 0; e < sample.edgeCount(); ++e) {
        const Edge& edge = sample.edges()[e];
        if (edge.a >= n || edge.b >= n || edge.a == edge.b) {
            report.push_back({"index", {e, edge.a, edge.b}, "edge endpoints out of range or equal"});
            indicesOk = false;
            continue;
        }
        const double actual = sample.distance(edge.a, edge.b);
        if (!(std::abs(edge.length - actual) <= relTol * std::max(actual, 1e-300))) {
            std::ostringstream detail;
            detail.precision(17);
            detail << "stored length " << edge.length << " but endpoints are " << actual << " apart";
            report.push_back({"edge-length", {e, edge.a, edge.b}, detail.str()});
        }
    }

    // Duplicate points: sweep along the first coordinate.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return sample.point(x)[0] < sample.point(y)[0] || (sample.point(x)[0] == sample.point(y)[0] && x < y);
    });
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const std::size_t i = order[a];
            const std::size_t j = order[b];
            if (sample.point(j)[0] - sample.point(i)[0] > relTol) {
                break;
            }
            if (sample.distance(i, j) <= relTol) {
                report.push_back({"duplicate-point", {std::min(i, j), std::max(i, j)},
                                  "points coincide"});
            }
        }
    }

    if (indicesOk) {
        const auto labels = componentLabels(sample);
        std::vector<std::size_t> roots;
        for (std::size_t i = 0; i < n; ++i) {
            if (labels[i] == i) {
                roots.push_back(i);
            }
        }
        if (roots.size() > 1) {
            report.push_back({"connectivity", roots,
                              "edge graph has " + std::to_string(roots.size()) + " components"});
        }
    }
    return report;
}

} // namespace qcalc
