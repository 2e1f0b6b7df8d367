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

// Acceptance suite: one PASS/FAIL line per criterion, tolerances fixed here.
// Exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <unistd.h>

#include <Eigen/Dense>

#include "cli_support.hpp"
#include "clifford_support.hpp"
#include "qcalc/calculus.hpp"
#include "qcalc/clifford.hpp"
#include "qcalc/metric.hpp"
#include "qcalc/whitney.hpp"
#include "support.hpp"

using namespace qcalc;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            if (!detail.empty()) {
                detail += "; ";
            }
            detail += what;
        }
    }
};

std::string fmt(const char* format, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

struct Geometry {
    std::string name;
    SetSample sample;
};

std::vector<Geometry> geometries() {
    qtest::Gen gen(2024);
    const std::vector<double> half{0.5};
    return {
        {"segment", qtest::segment(33)},
        {"L", qtest::lPolyline()},
        {"circle", qtest::circle(256)},
        {"gasket3", buildGasket(3)},
        {"carpet2", buildCarpet(2)},
        {"dumbbell", buildDumbbell(1.0, 0.1, std::numbers::pi / 32.0).sample},
        {"graph", buildLipschitzGraph(half, 1.0 / 32.0, 0.0, 1.0).sample},
        {"random3d", qtest::randomGraph(gen, 40, 3, 30)},
    };
}

CovectorField constant(const SetSample& s, const std::vector<double>& v) {
    return sampleCovector(s, [&](auto, std::span<double> out) { std::copy(v.begin(), v.end(), out.begin()); });
}

double dot(std::span<const double> a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

// 1. Chord-arc estimator.
Outcome chordArc() {
    Outcome o;
    const double seg = estimateChordArc(qtest::segment(11)).kHat;
    o.require(std::abs(seg - 1.0) <= 1e-12, fmt("segment k_hat %.17g", seg));
    const double l = estimateChordArc(qtest::lPolyline()).kHat;
    o.require(std::abs(l - std::sqrt(2.0)) <= 1e-9, fmt("L k_hat %.17g", l));
    const auto c = qtest::circle(256);
    const double kc = estimateChordArc(c).kHat;
    o.require(std::abs(kc - std::numbers::pi / 2.0) <= 1e-3, fmt("256-gon k_hat %.17g", kc));
    o.require(std::abs(kc - qtest::bruteChordArc(c)) <= 1e-12, "256-gon disagrees with brute force");

    for (unsigned m = 0; m <= 4; ++m) {
        const auto g = buildGasket(m);
        const auto a = estimateChordArc(g);
        const auto b = estimateChordArc(g);
        const double brute = qtest::bruteChordArc(g);
        const auto d = qtest::floydWarshall(g);
        const double witnessRatio = d[a.witnessI * g.pointCount() + a.witnessJ] / g.distance(a.witnessI, a.witnessJ);
        o.require(std::isfinite(a.kHat) && a.kHat >= 1.0, fmt("gasket m=%u k_hat %.17g", m, a.kHat));
        o.require(std::abs(a.kHat - brute) <= 1e-12, fmt("gasket m=%u k_hat %.17g vs brute %.17g", m, a.kHat, brute));
        o.require(std::abs(witnessRatio - brute) <= 1e-12, fmt("gasket m=%u witness ratio %.17g", m, witnessRatio));
        o.require(a.witnessI == b.witnessI && a.witnessJ == b.witnessJ && a.kHat == b.kHat,
                  fmt("gasket m=%u witness not reproducible", m));
    }
    if (o.passed) {
        o.detail = fmt("segment 1, L %.12g, 256-gon %.9f, gaskets m<=4 match brute force", l, kc);
    }
    return o;
}

// 2. Local-to-global Lipschitz bound.
Outcome localToGlobal() {
    Outcome o;
    using Field = std::function<double(std::span<const double>)>;
    const std::vector<Field> fields{
        [](auto p) { return p[0]; },
        [](auto p) { return p[1]; },
        [](auto p) { return 0.3 * p[0] - 0.7 * p[1]; },
        [](auto p) { return std::sin(3.0 * p[0]); },
        [](auto p) { return std::cos(2.0 * p[1]) + p[0]; },
        [](auto p) { return p[0] * p[0] + p[1] * p[1]; },
        [](auto p) { return std::exp(p[0]) * std::cos(p[1]); },
        [](auto p) { return std::abs(p[0] - 0.3); },
        [](auto p) { return std::atan(4.0 * (p[0] + p[1])); },
        [](auto p) { return std::hypot(p[0] - 0.2, p[1] + 0.1); },
        [](auto p) { return std::max(p[0], p[1]); },
        [](auto p) { return std::sin(5.0 * p[0]) * std::cos(5.0 * p[1]); },
    };
    const std::vector<Geometry> sets{
        {"circle", qtest::circle(256)},
        {"gasket3", buildGasket(3)},
        {"dumbbell", buildDumbbell(1.0, 0.1, std::numbers::pi / 32.0).sample},
    };
    std::size_t cases = 0;
    double worst = 0.0;
    for (const auto& [name, s] : sets) {
        const double k = estimateChordArc(s).kHat;
        const double radius = 2.0 * s.maxEdgeLength();
        for (std::size_t fi = 0; fi < fields.size(); ++fi) {
            const auto f = sampleScalar(s, fields[fi]);
            const double c = localLipschitzConstant(s, f, radius);
            const auto r = verifyLocalToGlobal(s, f, radius, c, k);
            ++cases;
            worst = std::max(worst, r.globalConstant / (k * c));
            o.require(r.hypothesisHolds, fmt("%s field %zu: local hypothesis", name.c_str(), fi));
            o.require(r.globalConstant <= k * c + 1e-9,
                      fmt("%s field %zu: global %.17g > %.17g", name.c_str(), fi, r.globalConstant, k * c));
            o.require(r.passed, fmt("%s field %zu: report failed", name.c_str(), fi));
        }
    }
    if (o.passed) {
        o.detail = fmt("%zu/%zu cases, worst global/(k C) = %.4f", cases, cases, worst);
    }
    return o;
}

// 3. Path integrals: exact for affine data, second order for sin.
Outcome ftc() {
    Outcome o;
    double worst = 0.0;
    qtest::Gen gen(3);
    for (const auto& [name, s] : geometries()) {
        const std::size_t n = s.ambientDim();
        std::vector<double> grad(n);
        for (double& v : grad) {
            v = gen.uniform(-2.0, 2.0);
        }
        const auto f = sampleScalar(s, [&](auto p) { return 0.7 + dot(p, grad); });
        const auto a = constant(s, grad);
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t i = gen.index(s.pointCount());
            const std::size_t j = gen.index(s.pointCount());
            if (i == j) {
                continue;
            }
            const double r = verifyFtc(s, f, a, shortestPath(s, i, j));
            worst = std::max(worst, r);
            o.require(r <= 1e-12, fmt("%s %zu->%zu residual %.3g", name.c_str(), i, j, r));
        }
    }
    std::vector<double> residuals;
    for (int level = 3; level <= 8; ++level) {
        const std::size_t n = (std::size_t{1} << level) + 1;
        const auto s = qtest::segment(n);
        const auto f = sampleScalar(s, [](auto p) { return std::sin(p[0]); });
        const auto a = sampleCovector(s, [](auto p, std::span<double> out) {
            out[0] = std::cos(p[0]);
            out[1] = 0.0;
        });
        residuals.push_back(verifyFtc(s, f, a, shortestPath(s, 0, n - 1)));
    }
    std::string ratios;
    for (std::size_t i = 1; i < residuals.size(); ++i) {
        const double ratio = residuals[i - 1] / residuals[i];
        ratios += fmt("%s%.3f", i > 1 ? "," : "", ratio);
        o.require(ratio >= 3.5 && ratio <= 4.5, fmt("sin ratio %.4f at level %zu", ratio, i + 3));
    }
    if (o.passed) {
        o.detail = fmt("affine worst %.2g; sin ratios ", worst) + ratios;
    }
    return o;
}

struct SmoothField {
    const char* name;
    std::function<double(double, double)> f;
    std::function<void(double, double, std::span<double>)> grad;
};

std::vector<SmoothField> remainderFields() {
    return {
        {"x^2", [](double x, double) { return x * x; },
         [](double x, double, std::span<double> g) { g[0] = 2 * x, g[1] = 0; }},
        {"xy", [](double x, double y) { return x * y; },
         [](double x, double y, std::span<double> g) { g[0] = y, g[1] = x; }},
        {"sin x + y^2", [](double x, double y) { return std::sin(x) + y * y; },
         [](double x, double y, std::span<double> g) { g[0] = std::cos(x), g[1] = 2 * y; }},
    };
}

// 4. First-order remainder bound, with a shifted-gradient negative.
Outcome remainderBound() {
    Outcome o;
    auto run = [](const SetSample& s, double k, const SmoothField& sf, double shift) {
        const auto f = sampleScalar(s, [&](auto p) { return sf.f(p[0], p[1]); });
        const auto a = sampleCovector(s, [&](auto p, std::span<double> g) {
            sf.grad(p[0], p[1], g);
            g[0] += shift;
        });
        return verifyRemainderBound(s, f, a, k);
    };
    const std::vector<Geometry> positives{{"gasket4", buildGasket(4)}, {"carpet3", buildCarpet(3)}};
    double slack = 0.0;
    for (const auto& [name, s] : positives) {
        const double k = estimateChordArc(s).kHat;
        for (const auto& sf : remainderFields()) {
            const auto r = run(s, k, sf, 0.0);
            slack = std::max(slack, r.maxSlackRatio);
            o.require(r.passed && r.violations.empty(),
                      fmt("%s %s: %zu violations", name.c_str(), sf.name, r.violations.size()));
        }
    }
    // A shift c adds c |y - x| to the remainder while the bound scales like
    // |y - x|^2, so the negative needs pairs closer than about c / (2 k^2 L).
    // The level-4 carpet (spacing 1/81) resolves a 0.1 shift.
    const auto fine = buildCarpet(4);
    const double kFine = estimateChordArc(fine).kHat;
    std::size_t caught = 0;
    for (const auto& sf : remainderFields()) {
        const auto r = run(fine, kFine, sf, 0.1);
        o.require(!r.passed, fmt("carpet4 %s: shifted gradient not rejected", sf.name));
        caught += r.passed ? 0 : 1;
    }
    std::string coarse;
    for (const auto& [name, s] : positives) {
        const double k = estimateChordArc(s).kHat;
        std::size_t missed = 0;
        for (const auto& sf : remainderFields()) {
            missed += run(s, k, sf, 0.1).passed ? 1 : 0;
        }
        coarse += fmt(" %s misses %zu/3;", name.c_str(), missed);
    }
    if (o.passed) {
        o.detail = fmt("gradients pass (max slack %.3f); shifted rejected on carpet4 %zu/3;", slack, caught) + coarse;
    }
    return o;
}

// 5. Constant differentials reconstruct affine functions.
Outcome affineRigidity() {
    Outcome o;
    qtest::Gen gen(5);
    double worst = 0.0;
    for (const auto& [name, s] : geometries()) {
        std::vector<double> c(s.ambientDim());
        for (double& v : c) {
            v = gen.uniform(-2.0, 2.0);
        }
        const auto a = constant(s, c);
        const double base = gen.uniform(-1.0, 1.0);
        const auto rec = reconstruct(s, a, 0, base);
        const auto r = affineRigidityTest(s, rec.field, a);
        // Independent route: f(v) = base + <c, v - v0>.
        double direct = 0.0;
        const auto x0 = s.point(0);
        for (std::size_t v = 0; v < s.pointCount(); ++v) {
            const auto x = s.point(v);
            double expect = base;
            for (std::size_t i = 0; i < c.size(); ++i) {
                expect += c[i] * (x[i] - x0[i]);
            }
            direct = std::max(direct, std::abs(rec.field.values[v] - expect));
        }
        worst = std::max({worst, r.maxResidual, direct});
        o.require(rec.integrable, name + ": not integrable");
        o.require(r.passed && r.maxResidual <= 1e-9, fmt("%s: affine residual %.3g", name.c_str(), r.maxResidual));
        o.require(direct <= 1e-9, fmt("%s: differs from direct affine formula by %.3g", name.c_str(), direct));
    }
    if (o.passed) {
        o.detail = fmt("%zu geometries, sup residual %.2g", geometries().size(), worst);
    }
    return o;
}

// 6. Reconstruction round trip and loop defect.
Outcome reconstructionRoundTrip() {
    Outcome o;
    qtest::Gen gen(6);
    double worst = 0.0;
    for (const auto& [name, s] : geometries()) {
        const std::size_t n = s.ambientDim();
        std::vector<double> q(n * n), b(n);
        for (double& v : q) {
            v = gen.uniform(-1.0, 1.0);
        }
        for (double& v : b) {
            v = gen.uniform(-1.0, 1.0);
        }
        // f = <x, Q x> + <b, x>; its exact gradient integrates exactly along
        // every edge under the trapezoid rule.
        const auto f = sampleScalar(s, [&](auto p) {
            double v = dot(p, b);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    v += q[i * n + j] * p[i] * p[j];
                }
            }
            return v;
        });
        const auto a = sampleCovector(s, [&](auto p, std::span<double> g) {
            for (std::size_t i = 0; i < n; ++i) {
                g[i] = b[i];
                for (std::size_t j = 0; j < n; ++j) {
                    g[i] += (q[i * n + j] + q[j * n + i]) * p[j];
                }
            }
        });
        const std::size_t base = gen.index(s.pointCount());
        const auto rec = reconstruct(s, a, base, 0.0);
        const double shift = f.values[base];
        double sup = 0.0;
        for (std::size_t v = 0; v < s.pointCount(); ++v) {
            sup = std::max(sup, std::abs(rec.field.values[v] + shift - f.values[v]));
        }
        worst = std::max(worst, sup);
        o.require(rec.integrable, name + ": flagged non-integrable");
        o.require(sup <= 1e-9, fmt("%s: round trip error %.3g", name.c_str(), sup));
    }
    const auto sq = qtest::squareLoop();
    const auto rot = sampleCovector(sq, [](auto p, std::span<double> g) {
        g[0] = -p[1];
        g[1] = p[0];
    });
    const double defect = loopDefect(sq, rot, makePath(sq, {0, 1, 2, 3, 0}));
    o.require(std::abs(defect - 2.0) <= 1e-9, fmt("square loop defect %.17g", defect));
    const auto r = reconstruct(sq, rot, 0, 0.0);
    o.require(!r.integrable && std::abs(r.worstDefect - 2.0) <= 1e-9, "square loop not flagged");
    if (o.passed) {
        o.detail = fmt("round trip sup %.2g; square loop defect %.12g", worst, defect);
    }
    return o;
}

// 7. Hölder exponent recovery.
Outcome holderFit() {
    Outcome o;
    for (double alpha : {0.5, 1.0}) {
        const std::size_t points = 4097;
        const auto s = qtest::segment(points);
        const auto f = sampleScalar(s, [&](auto p) { return std::pow(p[0], alpha + 1.0) / (alpha + 1.0); });
        const auto a = sampleCovector(s, [&](auto p, std::span<double> g) {
            g[0] = std::pow(p[0], alpha);
            g[1] = 0.0;
        });
        const auto fit = fitHolderModulus(s, f, a, 1.0).differential;
        double lo = 1e300, hi = 0.0;
        for (const auto& b : fit.scales) {
            lo = std::min(lo, b.witnessDistance);
            hi = std::max(hi, b.witnessDistance);
        }
        const double decades = std::log10(hi / lo);
        o.require(decades >= 3.0, fmt("alpha %.1f: fit spans only %.2f decades", alpha, decades));
        o.require(std::abs(fit.alphaHat - alpha) <= 0.1, fmt("alpha %.1f: alpha_hat %.4f", alpha, fit.alphaHat));
        o.detail += fmt("%salpha %.1f -> %.4f over %.1f decades", o.detail.empty() ? "" : "; ", alpha,
                        fit.alphaHat, decades);
    }
    return o;
}

// 8. Flatness and determined subspaces.
Outcome flatness() {
    Outcome o;
    std::vector<double> line;
    for (int i = 0; i <= 10; ++i) {
        line.push_back(0.6 * i);
        line.push_back(0.8 * i);
    }
    const SetSample cloud(2, line, {}, "line");
    const auto f = sampleScalar(cloud, [](auto p) { return p[0] + 2.0 * p[1]; });
    const auto fl = localFlatness(cloud, 5, 10.0);
    const auto ds = determinedSubspace(cloud, f, 5, 10.0);
    o.require(fl.flatnessScore <= 1e-12, fmt("collinear flatness %.3g", fl.flatnessScore));
    o.require(ds.dimension == 1, fmt("collinear dimension %zu", ds.dimension));

    const auto g = buildGasket(3);
    const auto gf = sampleScalar(g, [](auto p) { return p[0] * p[1]; });
    std::size_t interior = 0;
    for (std::size_t c = 3; c < g.pointCount(); ++c) {
        const auto d = determinedSubspace(g, gf, c, 0.25);
        o.require(d.dimension == 2, fmt("gasket vertex %zu dimension %zu", c, d.dimension));
        ++interior;
    }

    qtest::Gen gen(8);
    double drift = 0.0;
    const std::vector<std::size_t> centers{3, 10, 20, 33};
    for (int trial = 0; trial < 10; ++trial) {
        const auto moved = qtest::rigidMotion(g, gen);
        const auto mf = sampleScalar(moved, [](auto) { return 0.0; });
        const auto zf = sampleScalar(g, [](auto) { return 0.0; });
        for (std::size_t c : centers) {
            drift = std::max(drift, std::abs(localFlatness(moved, c, 0.25).flatnessScore -
                                             localFlatness(g, c, 0.25).flatnessScore));
            drift = std::max(drift, std::abs(differentialStability(moved, mf, c, 0.25).conditionNumber -
                                             differentialStability(g, zf, c, 0.25).conditionNumber));
        }
    }
    o.require(drift <= 1e-9, fmt("rigid motion drift %.3g", drift));
    if (o.passed) {
        o.detail = fmt("collinear score %.2g dim 1; %zu gasket vertices dim 2; motion drift %.2g", fl.flatnessScore,
                       interior, drift);
    }
    return o;
}

// 9. Clifford completion, monogenic dimension, complex specialization.
Outcome clifford() {
    Outcome o;
    qtest::Gen gen(9);
    double worst = 0.0;
    std::size_t exact = 0, trials = 0;
    for (std::size_t n = 2; n <= 4; ++n) {
        for (Side side : {Side::Left, Side::Right}) {
            for (int t = 0; t < 100; ++t) {
                const auto full = qtest::randomMonogenic(gen, n, side);
                const std::vector<Multivector> partial(full.columns.begin(), full.columns.end() - 1);
                const auto done = completeFromHyperplane(n, partial, side);
                double err = 0.0;
                for (std::uint32_t m = 0; m < full.columns.back().size(); ++m) {
                    err = std::max(err, std::abs(done.columns.back()[m] - full.columns.back()[m]));
                }
                worst = std::max(worst, err);
                exact += err <= 1e-12 ? 1 : 0;
                ++trials;
            }
        }
    }
    o.require(exact == trials, fmt("%zu/%zu round trips within 1e-12", exact, trials));
    for (std::size_t n = 2; n <= 5; ++n) {
        const Eigen::MatrixXd m = monogenicConstraintMatrix(n);
        const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
        const auto kernel = static_cast<std::size_t>(m.cols() - qr.rank());
        const std::size_t expected = (n - 1) * (std::size_t{1} << n);
        o.require(kernel == expected && monogenicSpaceDimension(n) == expected,
                  fmt("n=%zu: dimension %zu, QR kernel %zu, expected %zu", n, monogenicSpaceDimension(n), kernel,
                      expected));
    }
    double complexErr = 0.0;
    for (int t = 0; t < 100; ++t) {
        const std::complex<double> c(gen.uniform(-2, 2), gen.uniform(-2, 2));
        const auto m = completeFromHyperplane(2, {embedComplex(c)}, Side::Left);
        complexErr = std::max(complexErr, std::abs(extractComplex(m.columns[1]) - complexComplete(c)));
    }
    o.require(complexErr <= 1e-12, fmt("complex path differs by %.3g", complexErr));
    if (o.passed) {
        o.detail = fmt("%zu/%zu round trips (max err %.2g); dims (n-1)2^n for n=2..5; complex err %.2g", exact,
                       trials, worst, complexErr);
    }
    return o;
}

// 10. Tangential derivative on a Lipschitz graph.
std::vector<double> graphResiduals(std::complex<double> (*f)(std::complex<double>),
                                   std::complex<double> (*df)(std::complex<double>)) {
    const std::vector<double> half{0.5};
    std::vector<double> residuals;
    for (int level = 4; level <= 8; ++level) {
        const auto g = buildLipschitzGraph(half, std::ldexp(1.0, -level), 0.0, 1.0).sample;
        residuals.push_back(
            tangentialDerivativeOnGraph(g, sampleComplex(g, f), sampleComplexCovector(g, df)).maxResidual);
    }
    return residuals;
}

std::string ratioText(const std::vector<double>& residuals, Outcome* o) {
    std::string text = "residuals";
    for (double r : residuals) {
        text += fmt(" %.3g", r);
    }
    text += "; ratios";
    for (std::size_t i = 1; i < residuals.size(); ++i) {
        if (residuals[i] == 0.0) {
            text += " undefined";
            if (o != nullptr) {
                o->passed = false;
            }
            continue;
        }
        const double ratio = residuals[i - 1] / residuals[i];
        text += fmt(" %.3f", ratio);
        if (o != nullptr && !(ratio >= 3.5 && ratio <= 4.5)) {
            o->passed = false;
        }
    }
    return text;
}

Outcome graphDerivative() {
    Outcome o;
    using C = std::complex<double>;
    const auto square = graphResiduals([](C z) { return z * z; }, [](C z) { return 2.0 * z; });
    o.detail = "z^2: " + ratioText(square, &o);
    // Control on the same graphs: the centered difference of z^3 along a
    // straight graph has an h^2 error term, so its ratios show the check
    // resolves second-order decay.
    const auto cube = graphResiduals([](C z) { return z * z * z; }, [](C z) { return 3.0 * z * z; });
    o.detail += " | control z^3: " + ratioText(cube, nullptr);
    return o;
}

// 11. CLI determinism.
Outcome cliDeterminism() {
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path() / ("qcalc_acceptance_" + std::to_string(::getpid()));
    qtest::writeFixtures(dir);
    const auto commands = qtest::everySubcommand();
    std::size_t same = 0;
    for (const auto& args : commands) {
        const auto a = qtest::runCli(dir, args);
        const auto b = qtest::runCli(dir, args);
        const bool ok = a.exit <= 1 && a.exit == b.exit && a.out == b.out && !a.out.empty();
        o.require(ok, "'" + args + "' differs or errored");
        same += ok ? 1 : 0;
    }
    std::filesystem::remove_all(dir);
    if (o.passed) {
        o.detail = fmt("%zu/%zu subcommands byte-identical", same, commands.size());
    }
    return o;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"chord-arc estimator", chordArc},
        {"local-to-global Lipschitz", localToGlobal},
        {"path integrals", ftc},
        {"remainder bound", remainderBound},
        {"affine rigidity", affineRigidity},
        {"reconstruction round trip", reconstructionRoundTrip},
        {"holder fit", holderFit},
        {"whitney flatness", flatness},
        {"clifford", clifford},
        {"lipschitz-graph derivative", graphDerivative},
        {"cli determinism", cliDeterminism},
    };
    int failures = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2d %-28s (%.1fs) %s\n", o.passed ? "PASS" : "FAIL", index, c.name, secs, o.detail.c_str());
        std::fflush(stdout);
        failures += o.passed ? 0 : 1;
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
