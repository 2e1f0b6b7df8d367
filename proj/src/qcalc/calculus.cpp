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

#include "qcalc/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "qcalc/errors.hpp"
#include "qcalc/metric.hpp"
#include "qcalc/parallel.hpp"

namespace qcalc {

namespace {

void requirePathOn(const SetSample& sample, const PolylinePath& path) {
    if (path.setRef != sample.fingerprint()) {
        throw SetMismatch("path belongs to set " + path.setRef + ", not " + sample.fingerprint());
    }
}

void requireIndex(const SetSample& sample, std::size_t i) {
    if (i >= sample.pointCount()) {
        throw InvalidArgument("vertex index " + std::to_string(i) + " out of range");
    }
}

// Sign-symmetric summation: the same multiset with all signs flipped sums to
// exactly the negated value.
double oddSum(std::vector<double> terms) {
    std::vector<double> positive;
    std::vector<double> negative;
    for (double t : terms) {
        if (t > 0.0) {
            positive.push_back(t);
        } else if (t < 0.0) {
            negative.push_back(-t);
        }
    }
    std::sort(positive.begin(), positive.end());
    std::sort(negative.begin(), negative.end());
    double p = 0.0;
    for (double t : positive) {
        p += t;
    }
    double q = 0.0;
    for (double t : negative) {
        q += t;
    }
    return p - q;
}

// Closed balls get a relative sliver of slack so the pair's own endpoint is
// never lost to rounding.
bool insideBall(double distance, double radius) {
    return distance <= radius * (1.0 + 1e-12);
}

} // namespace

void checkField(const SetSample& sample, const ScalarField& f) {
    if (f.setRef != sample.fingerprint()) {
        throw SetMismatch("scalar field belongs to set " + f.setRef + ", not " + sample.fingerprint());
    }
    if (f.values.size() != sample.pointCount()) {
        throw SetMismatch("scalar field has " + std::to_string(f.values.size()) + " values for " +
                          std::to_string(sample.pointCount()) + " points");
    }
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        if (!std::isfinite(f.values[i])) {
            throw InvalidArgument("scalar field value " + std::to_string(i) + " is not finite");
        }
    }
}

void checkField(const SetSample& sample, const ComplexScalarField& f) {
    if (f.setRef != sample.fingerprint()) {
        throw SetMismatch("complex field belongs to set " + f.setRef + ", not " + sample.fingerprint());
    }
    if (f.values.size() != sample.pointCount()) {
        throw SetMismatch("complex field size does not match the set");
    }
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        if (!std::isfinite(f.values[i].real()) || !std::isfinite(f.values[i].imag())) {
            throw InvalidArgument("complex field value " + std::to_string(i) + " is not finite");
        }
    }
}

void checkField(const SetSample& sample, const CovectorField& a) {
    if (a.setRef != sample.fingerprint()) {
        throw SetMismatch("covector field belongs to set " + a.setRef + ", not " + sample.fingerprint());
    }
    if (a.dim != sample.ambientDim() || a.data.size() != sample.pointCount() * sample.ambientDim()) {
        throw SetMismatch("covector field shape does not match the set");
    }
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        if (!std::isfinite(a.data[i])) {
            throw InvalidArgument("covector entry " + std::to_string(i) + " is not finite");
        }
    }
}

void checkField(const SetSample& sample, const ComplexCovectorField& a) {
    if (a.setRef != sample.fingerprint()) {
        throw SetMismatch("complex covector field belongs to set " + a.setRef + ", not " +
                          sample.fingerprint());
    }
    if (a.values.size() != sample.pointCount()) {
        throw SetMismatch("complex covector field size does not match the set");
    }
}

double segmentIntegral(const SetSample& sample, const CovectorField& a, std::size_t u, std::size_t v,
                       const Quadrature& quadrature) {
    const auto pu = sample.point(u);
    const auto pv = sample.point(v);
    const auto au = a.at(u);
    const auto av = a.at(v);
    const std::size_t dim = sample.ambientDim();

    if (quadrature.rule == Quadrature::Rule::Trapezoid) {
        double sum = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            sum += 0.5 * (au[k] + av[k]) * (pv[k] - pu[k]);
        }
        return sum;
    }

    const unsigned pieces = std::max(1u, quadrature.subdivisions);
    double sum = 0.0;
    for (unsigned s = 0; s < pieces; ++s) {
        const double t = (static_cast<double>(s) + 0.5) / static_cast<double>(pieces);
        for (std::size_t k = 0; k < dim; ++k) {
            const double ak = (1.0 - t) * au[k] + t * av[k];
            sum += ak * (pv[k] - pu[k]);
        }
    }
    return sum / static_cast<double>(pieces);
}

double pathIntegral(const SetSample& sample, const CovectorField& a, const PolylinePath& path,
                    const Quadrature& quadrature) {
    checkField(sample, a);
    requirePathOn(sample, path);
    std::vector<double> terms;
    terms.reserve(path.vertices.size());
    for (std::size_t k = 1; k < path.vertices.size(); ++k) {
        const std::size_t u = path.vertices[k - 1];
        const std::size_t v = path.vertices[k];
        // Orient each segment canonically so both traversal directions
        // produce bitwise opposite terms.
        const double t = u < v ? segmentIntegral(sample, a, u, v, quadrature)
                               : -segmentIntegral(sample, a, v, u, quadrature);
        terms.push_back(t);
    }
    return oddSum(std::move(terms));
}

double verifyFtc(const SetSample& sample, const ScalarField& f, const CovectorField& a,
                 const PolylinePath& path, const Quadrature& quadrature) {
    checkField(sample, f);
    const double integral = pathIntegral(sample, a, path, quadrature);
    const double change = f.values[path.vertices.back()] - f.values[path.vertices.front()];
    return std::abs(change - integral);
}

double loopDefect(const SetSample& sample, const CovectorField& a, const PolylinePath& cycle,
                  const Quadrature& quadrature) {
    if (cycle.vertices.empty() || cycle.vertices.front() != cycle.vertices.back()) {
        throw InvalidArgument("loop defect needs a closed path");
    }
    return pathIntegral(sample, a, cycle, quadrature);
}

EdgeOneForm edgeDifferences(const SetSample& sample, const ScalarField& f) {
    checkField(sample, f);
    EdgeOneForm form{sample.fingerprint(), {}};
    form.value.reserve(sample.edgeCount());
    for (const Edge& e : sample.edges()) {
        form.value.push_back(f.values[e.b] - f.values[e.a]);
    }
    return form;
}

double pathIntegral(const SetSample& sample, const EdgeOneForm& form, const PolylinePath& path) {
    requirePathOn(sample, path);
    if (form.setRef != sample.fingerprint() || form.value.size() != sample.edgeCount()) {
        throw SetMismatch("edge form does not belong to this set");
    }
    std::vector<double> terms;
    for (std::size_t k = 1; k < path.vertices.size(); ++k) {
        const std::size_t u = path.vertices[k - 1];
        const std::size_t v = path.vertices[k];
        for (const auto& [w, e] : sample.adjacency()[u]) {
            if (w == v) {
                terms.push_back(sample.edges()[e].a == u ? form.value[e] : -form.value[e]);
                break;
            }
        }
    }
    return oddSum(std::move(terms));
}

CovectorField liftEdgeDifferences(const SetSample& sample, const ScalarField& f) {
    checkField(sample, f);
    const std::size_t dim = sample.ambientDim();
    CovectorField a{sample.fingerprint(), dim, std::vector<double>(sample.pointCount() * dim, 0.0)};
    for (std::size_t v = 0; v < sample.pointCount(); ++v) {
        const auto& nbrs = sample.adjacency()[v];
        if (nbrs.empty()) {
            continue;
        }
        Eigen::MatrixXd directions(static_cast<Eigen::Index>(nbrs.size()), static_cast<Eigen::Index>(dim));
        Eigen::VectorXd rise(static_cast<Eigen::Index>(nbrs.size()));
        for (std::size_t r = 0; r < nbrs.size(); ++r) {
            const std::size_t w = nbrs[r].first;
            for (std::size_t k = 0; k < dim; ++k) {
                directions(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) =
                    sample.point(w)[k] - sample.point(v)[k];
            }
            rise(static_cast<Eigen::Index>(r)) = f.values[w] - f.values[v];
        }
        const Eigen::VectorXd slope = directions.completeOrthogonalDecomposition().solve(rise);
        for (std::size_t k = 0; k < dim; ++k) {
            a.data[v * dim + k] = slope(static_cast<Eigen::Index>(k));
        }
    }
    return a;
}

Reconstruction reconstruct(const SetSample& sample, const CovectorField& a, std::size_t basepoint,
                           double baseValue, double tol) {
    checkField(sample, a);
    requireIndex(sample, basepoint);
    const auto tree = shortestPathTree(sample, basepoint);
    if (tree.settled.size() != sample.pointCount()) {
        throw Disconnected("sample is not connected; cannot reconstruct from vertex " +
                           std::to_string(basepoint));
    }

    Reconstruction out;
    out.basepoint = basepoint;
    out.field.setRef = sample.fingerprint();
    out.field.values.assign(sample.pointCount(), 0.0);
    out.field.values[basepoint] = baseValue;
    for (std::size_t v : tree.settled) {
        if (v == basepoint) {
            continue;
        }
        const std::size_t u = tree.predecessor[v];
        const double step = u < v ? segmentIntegral(sample, a, u, v) : -segmentIntegral(sample, a, v, u);
        out.field.values[v] = out.field.values[u] + step;
    }

    for (const Edge& e : sample.edges()) {
        if (tree.predecessor[e.b] == e.a || tree.predecessor[e.a] == e.b) {
            continue;
        }
        ++out.cyclesChecked;
        const double closing = segmentIntegral(sample, a, e.a, e.b);
        const double defect = std::abs(out.field.values[e.a] + closing - out.field.values[e.b]);
        if (!out.worstEdge || defect > out.worstDefect) {
            out.worstDefect = defect;
            out.worstEdge = std::make_pair(e.a, e.b);
        }
    }
    out.integrable = out.worstDefect <= tol;
    return out;
}

double whitneyRemainder(const SetSample& sample, const ScalarField& f, const CovectorField& a,
                        std::size_t x, std::size_t y) {
    const auto px = sample.point(x);
    const auto py = sample.point(y);
    const auto ax = a.at(x);
    double linear = 0.0;
    for (std::size_t k = 0; k < px.size(); ++k) {
        linear += ax[k] * (py[k] - px[k]);
    }
    return std::abs(f.values[y] - f.values[x] - linear);
}

double oscillation(const SetSample& sample, const CovectorField& a, std::size_t x, double radius) {
    checkField(sample, a);
    requireIndex(sample, x);
    if (!(radius >= 0.0)) {
        throw InvalidArgument("oscillation radius must be nonnegative");
    }
    double best = 0.0;
    for (std::size_t w = 0; w < sample.pointCount(); ++w) {
        if (insideBall(sample.distance(x, w), radius)) {
            best = std::max(best, euclidean(a.at(w), a.at(x)));
        }
    }
    return best;
}

RemainderBoundReport verifyRemainderBound(const SetSample& sample, const ScalarField& f,
                                          const CovectorField& a, double k, double tol,
                                          bool keepPairs) {
    checkField(sample, f);
    checkField(sample, a);
    if (!(k >= 1.0 - 1e-12)) {
        throw InvalidArgument("chord-arc constant k must be at least 1");
    }
    const std::size_t n = sample.pointCount();

    struct RowResult {
        std::vector<RemainderPair> violations;
        std::vector<RemainderPair> checked;  // every y != x
        double maxRatio = 0.0;
    };
    std::vector<RowResult> rows(n);

    detail::parallelFor(n, [&](std::size_t x) {
        // Oscillation for any radius by a prefix maximum over sorted distances.
        std::vector<std::pair<double, double>> ring;
        ring.reserve(n);
        for (std::size_t w = 0; w < n; ++w) {
            ring.emplace_back(sample.distance(x, w), euclidean(a.at(w), a.at(x)));
        }
        std::sort(ring.begin(), ring.end());
        std::vector<double> distances(n);
        std::vector<double> prefixMax(n);
        double running = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            distances[r] = ring[r].first;
            running = std::max(running, ring[r].second);
            prefixMax[r] = running;
        }

        RowResult& row = rows[x];
        for (std::size_t y = 0; y < n; ++y) {
            if (y == x) {
                continue;
            }
            const double d = sample.distance(x, y);
            const double radius = k * d;
            const auto end = std::upper_bound(distances.begin(), distances.end(), radius * (1.0 + 1e-12));
            const double osc = end == distances.begin() ? 0.0 : prefixMax[static_cast<std::size_t>(end - distances.begin()) - 1];
            RemainderPair pair{x, y, d, whitneyRemainder(sample, f, a, x, y), k * d * osc};
            if (pair.bound > 0.0) {
                row.maxRatio = std::max(row.maxRatio, pair.remainder / pair.bound);
            }
            if (pair.remainder > pair.bound + tol) {
                row.violations.push_back(pair);
            }
            if (keepPairs) {
                row.checked.push_back(pair);
            }
        }
    });

    RemainderBoundReport report;
    report.k = k;
    report.tol = tol;
    report.orderedPairs = n * (n - 1);
    for (std::size_t x = 0; x < n; ++x) {
        report.maxSlackRatio = std::max(report.maxSlackRatio, rows[x].maxRatio);
        report.violations.insert(report.violations.end(), rows[x].violations.begin(),
                                 rows[x].violations.end());
    }
    report.passed = report.violations.empty();

    if (keepPairs) {
        for (std::size_t x = 0; x < n; ++x) {
            for (const RemainderPair& p : rows[x].checked) {
                if (p.x > p.y) {
                    continue;
                }
                // The reverse orientation sits in row y at position x (or x - 1
                // past the skipped diagonal entry).
                const RemainderPair& q = rows[p.y].checked[p.x < p.y ? p.x : p.x - 1];
                const double excessP = p.remainder - p.bound;
                const double excessQ = q.remainder - q.bound;
                report.pairs.push_back(excessQ > excessP ? q : p);
            }
        }
        std::sort(report.pairs.begin(), report.pairs.end(), [](const RemainderPair& l, const RemainderPair& r) {
            return std::tie(l.distance, l.x, l.y) < std::tie(r.distance, r.x, r.y);
        });
    }
    return report;
}

AffineRigidityReport affineRigidityTest(const SetSample& sample, const ScalarField& f,
                                        const CovectorField& a, double tolIn, double tolOut) {
    checkField(sample, f);
    checkField(sample, a);
    const std::size_t n = sample.pointCount();
    const std::size_t dim = sample.ambientDim();
    AffineRigidityReport report;
    report.gradient.assign(dim, 0.0);

    for (std::size_t v = 1; v < n; ++v) {
        report.spread = std::max(report.spread, euclidean(a.at(v), a.at(0)));
    }
    report.hypothesisHolds = report.spread <= tolIn;

    if (n <= 1) {
        report.trivial = true;
        report.intercept = n == 1 ? f.values[0] : 0.0;
        report.passed = true;
        return report;
    }

    Eigen::VectorXd mean = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t k = 0; k < dim; ++k) {
            mean(static_cast<Eigen::Index>(k)) += sample.point(v)[k];
        }
    }
    mean /= static_cast<double>(n);

    Eigen::MatrixXd design(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(dim + 1));
    Eigen::VectorXd values(static_cast<Eigen::Index>(n));
    for (std::size_t v = 0; v < n; ++v) {
        const auto row = static_cast<Eigen::Index>(v);
        design(row, 0) = 1.0;
        for (std::size_t k = 0; k < dim; ++k) {
            design(row, static_cast<Eigen::Index>(k + 1)) = sample.point(v)[k] - mean(static_cast<Eigen::Index>(k));
        }
        values(row) = f.values[v];
    }
    const Eigen::VectorXd coef = design.completeOrthogonalDecomposition().solve(values);
    const Eigen::VectorXd residual = design * coef - values;
    report.maxResidual = residual.cwiseAbs().maxCoeff();

    report.intercept = coef(0);
    for (std::size_t k = 0; k < dim; ++k) {
        report.gradient[k] = coef(static_cast<Eigen::Index>(k + 1));
        report.intercept -= report.gradient[k] * mean(static_cast<Eigen::Index>(k));
    }
    report.passed = report.hypothesisHolds && report.maxResidual <= tolOut;
    return report;
}

int dyadicExponent(double distance) {
    // Distances a rounding error short of a power of two count as that power.
    int exponent = 0;
    std::frexp(distance * (1.0 + 1e-12), &exponent);
    return exponent - 1;
}

ModulusFit fitPowerLaw(std::vector<ScaleBucket> buckets, double exactTol) {
    ModulusFit fit;
    fit.scales = std::move(buckets);
    if (fit.scales.size() < 3) {
        throw Undersampled("need at least 3 populated dyadic scales, have " +
                           std::to_string(fit.scales.size()));
    }
    double largest = 0.0;
    for (const auto& b : fit.scales) {
        largest = std::max(largest, b.supremum);
    }
    if (largest <= exactTol) {
        fit.exact = true;
        fit.inHolderRange = true;
        return fit;
    }

    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& b : fit.scales) {
        if (b.supremum > exactTol && b.witnessDistance > 0.0) {
            xs.push_back(std::log(b.witnessDistance));
            ys.push_back(std::log(b.supremum));
        }
    }
    if (xs.size() < 3) {
        throw Undersampled("fewer than 3 scales with a nonzero supremum");
    }
    const double count = static_cast<double>(xs.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= count;
    my /= count;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx <= 0.0) {
        throw Undersampled("scales do not span a range of distances");
    }
    fit.alphaHat = sxy / sxx;
    const double intercept = my - fit.alphaHat * mx;
    fit.constantHat = std::exp(intercept);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        fit.fitResidual = std::max(fit.fitResidual, std::abs(ys[i] - (intercept + fit.alphaHat * xs[i])));
    }
    fit.inHolderRange = fit.alphaHat > 0.0 && fit.alphaHat <= 1.01;
    return fit;
}

ModulusReport fitHolderModulus(const SetSample& sample, const ScalarField& f, const CovectorField& a,
                               double k, std::size_t minPairs) {
    checkField(sample, f);
    checkField(sample, a);
    if (!(k > 0.0)) {
        throw InvalidArgument("k must be positive");
    }
    ModulusReport report;
    report.k = k;
    report.remainder = fitPowerLaw(dyadicBuckets(sample, true, minPairs, [&](std::size_t x, std::size_t y, double d) {
        return whitneyRemainder(sample, f, a, x, y) / (k * d);
    }));
    report.differential = fitPowerLaw(dyadicBuckets(sample, false, minPairs, [&](std::size_t x, std::size_t y, double) {
        return euclidean(a.at(x), a.at(y));
    }));
    return report;
}

} // namespace qcalc
