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

// Shared fixtures, generators and brute-force oracles for the test binaries.
// The oracles deliberately avoid the library's own algorithms: geodesics come
// from Floyd-Warshall, counts from direct recursive enumeration.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "qcalc/geometry.hpp"

namespace qtest {

using qcalc::SetSample;

/// Seeded generator with the few draws the tests need.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline SetSample segment(std::size_t points, double length = 1.0) {
    std::vector<double> c;
    for (std::size_t i = 0; i < points; ++i) {
        c.push_back(length * static_cast<double>(i) / static_cast<double>(points - 1));
        c.push_back(0.0);
    }
    return qcalc::buildPolyline(2, c, "segment");
}

inline SetSample lPolyline() {
    const std::vector<double> c{0, 0, 1, 0, 1, 1};
    return qcalc::buildPolyline(2, c, "L");
}

/// Closed regular n-gon on the circle; vertex 0 at (radius, 0).
inline SetSample circle(std::size_t n, double radius = 1.0) {
    std::vector<double> c;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
        c.push_back(radius * std::cos(t));
        c.push_back(radius * std::sin(t));
    }
    std::vector<qcalc::Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const double len = std::hypot(c[2 * i] - c[2 * j], c[2 * i + 1] - c[2 * j + 1]);
        edges.push_back({std::min(i, j), std::max(i, j), len});
    }
    return SetSample(2, std::move(c), std::move(edges), "circle");
}

/// Unit square loop (0,0) (1,0) (1,1) (0,1).
inline SetSample squareLoop() {
    const std::vector<double> c{0, 0, 1, 0, 1, 1, 0, 1};
    return SetSample(2, c, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {0, 3, 1.0}}, "square");
}

/// Random connected geometric graph: a random spanning tree plus extra edges.
inline SetSample randomGraph(Gen& g, std::size_t n, std::size_t dim, std::size_t extra) {
    std::vector<double> c;
    for (std::size_t i = 0; i < n * dim; ++i) {
        c.push_back(g.uniform(-1.0, 1.0));
    }
    std::vector<qcalc::Edge> edges;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    auto add = [&](std::size_t a, std::size_t b) {
        if (a == b) {
            return;
        }
        auto key = std::minmax(a, b);
        if (seen.insert(key).second) {
            double s = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                const double d = c[a * dim + k] - c[b * dim + k];
                s += d * d;
            }
            edges.push_back({key.first, key.second, std::sqrt(s)});
        }
    };
    for (std::size_t i = 1; i < n; ++i) {
        add(i, g.index(i));
    }
    for (std::size_t e = 0; e < extra; ++e) {
        add(g.index(n), g.index(n));
    }
    return SetSample(dim, std::move(c), std::move(edges), "random");
}

/// Floyd-Warshall over the stored edge lengths.
inline std::vector<double> floydWarshall(const SetSample& s) {
    const std::size_t n = s.pointCount();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> d(n * n, inf);
    for (std::size_t i = 0; i < n; ++i) {
        d[i * n + i] = 0.0;
    }
    for (const auto& e : s.edges()) {
        d[e.a * n + e.b] = std::min(d[e.a * n + e.b], e.length);
        d[e.b * n + e.a] = std::min(d[e.b * n + e.a], e.length);
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
            }
        }
    }
    return d;
}

/// max geodesic / chord over all pairs, via Floyd-Warshall.
inline double bruteChordArc(const SetSample& s) {
    const auto d = floydWarshall(s);
    const std::size_t n = s.pointCount();
    double best = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            best = std::max(best, d[i * n + j] / s.distance(i, j));
        }
    }
    return best;
}

/// Distinct vertices and edges of the level-m gasket by recursive
/// subdivision on an integer lattice of step 2^-m.
inline std::pair<std::size_t, std::size_t> gasketCounts(unsigned m) {
    using P = std::pair<long, long>;
    std::set<P> vertices;
    std::set<std::pair<P, P>> edges;
    auto edge = [&](P a, P b) { edges.insert(std::minmax(a, b)); };
    auto rec = [&](auto&& self, P a, P b, P c, unsigned level) -> void {
        if (level == 0) {
            vertices.insert(a);
            vertices.insert(b);
            vertices.insert(c);
            edge(a, b);
            edge(b, c);
            edge(a, c);
            return;
        }
        auto mid = [](P u, P v) { return P{(u.first + v.first) / 2, (u.second + v.second) / 2}; };
        const P ab = mid(a, b), bc = mid(b, c), ac = mid(a, c);
        self(self, a, ab, ac, level - 1);
        self(self, ab, b, bc, level - 1);
        self(self, ac, bc, c, level - 1);
    };
    const long side = 2L << m;
    rec(rec, P{0, 0}, P{side, 0}, P{side / 2, side}, m);
    return {vertices.size(), edges.size()};
}

/// Retained carpet cells by explicit recursive removal of middle cells.
inline std::size_t carpetCells(unsigned m) {
    std::size_t count = 0;
    auto rec = [&](auto&& self, unsigned level) -> void {
        if (level == 0) {
            ++count;
            return;
        }
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                if (r != 1 || c != 1) {
                    self(self, level - 1);
                }
            }
        }
    };
    rec(rec, m);
    return count;
}

/// Applies x -> R x + t with R a random rotation (Gram-Schmidt on a random
/// matrix) to every point, keeping edges.
inline SetSample rigidMotion(const SetSample& s, Gen& g) {
    const std::size_t n = s.ambientDim();
    std::vector<std::vector<double>> r(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            r[i][j] = g.uniform(-1.0, 1.0);
        }
        for (std::size_t p = 0; p < i; ++p) {
            double dot = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                dot += r[i][j] * r[p][j];
            }
            for (std::size_t j = 0; j < n; ++j) {
                r[i][j] -= dot * r[p][j];
            }
        }
        double norm = 0.0;
        for (double v : r[i]) {
            norm += v * v;
        }
        for (double& v : r[i]) {
            v /= std::sqrt(norm);
        }
    }
    std::vector<double> t(n);
    for (double& v : t) {
        v = g.uniform(-3.0, 3.0);
    }
    std::vector<double> c;
    for (std::size_t p = 0; p < s.pointCount(); ++p) {
        const auto x = s.point(p);
        for (std::size_t i = 0; i < n; ++i) {
            double v = t[i];
            for (std::size_t j = 0; j < n; ++j) {
                v += r[i][j] * x[j];
            }
            c.push_back(v);
        }
    }
    return SetSample(n, std::move(c), s.edges(), s.label());
}

} // namespace qtest
