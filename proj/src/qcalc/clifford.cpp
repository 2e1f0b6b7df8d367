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

#include "qcalc/clifford.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <mutex>

#include <Eigen/LU>

#include "qcalc/errors.hpp"

namespace qcalc {

namespace {

void requireDim(std::size_t dim) {
    if (dim == 0 || dim > kMaxCliffordDim) {
        throw InvalidArgument("Clifford dimension must be between 1 and " +
                              std::to_string(kMaxCliffordDim) + ", got " + std::to_string(dim));
    }
}

void requireSameDim(const Multivector& a, const Multivector& b) {
    if (a.dim() != b.dim()) {
        throw InvalidArgument("Clifford dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                              std::to_string(b.dim()));
    }
}

// Generator list of a mask, ascending.
std::vector<int> generators(std::uint32_t mask) {
    std::vector<int> out;
    for (int k = 0; mask != 0; ++k, mask >>= 1) {
        if (mask & 1u) {
            out.push_back(k);
        }
    }
    return out;
}

Multivector vectorElement(std::size_t dim, std::span<const double> v) {
    Multivector m(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        m[1u << k] = v[k];
    }
    return m;
}

} // namespace

Multivector::Multivector(std::size_t dim)
    : dim_(dim) {
    requireDim(dim);
    coeffs_.assign(std::size_t{1} << dim, 0.0);
}

Multivector Multivector::scalar(std::size_t dim, double value) {
    Multivector m(dim);
    m.coeffs_[0] = value;
    return m;
}

Multivector Multivector::generator(std::size_t dim, std::size_t index) {
    if (index == 0 || index > dim) {
        throw InvalidArgument("generator index " + std::to_string(index) + " outside 1.." +
                              std::to_string(dim));
    }
    return blade(dim, 1u << (index - 1));
}

Multivector Multivector::blade(std::size_t dim, std::uint32_t mask, double coefficient) {
    Multivector m(dim);
    if (mask >= m.size()) {
        throw InvalidArgument("blade mask out of range");
    }
    m.coeffs_[mask] = coefficient;
    return m;
}

Multivector Multivector::fromGraded(std::size_t dim, std::span<const double> coefficients) {
    Multivector m(dim);
    if (coefficients.size() != m.size()) {
        throw InvalidArgument("expected " + std::to_string(m.size()) + " coefficients for dimension " +
                              std::to_string(dim) + ", got " + std::to_string(coefficients.size()));
    }
    const auto& order = gradedOrder(dim);
    for (std::size_t k = 0; k < order.size(); ++k) {
        m.coeffs_[order[k]] = coefficients[k];
    }
    return m;
}

std::vector<double> Multivector::gradedCoefficients() const {
    std::vector<double> out;
    out.reserve(coeffs_.size());
    for (std::uint32_t mask : gradedOrder(dim_)) {
        out.push_back(coeffs_[mask]);
    }
    return out;
}

double Multivector::norm() const {
    double sum = 0.0;
    for (double c : coeffs_) {
        sum += c * c;
    }
    return std::sqrt(sum);
}

Multivector& Multivector::operator+=(const Multivector& other) {
    requireSameDim(*this, other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += other.coeffs_[k];
    }
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) {
    requireSameDim(*this, other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= other.coeffs_[k];
    }
    return *this;
}

Multivector& Multivector::operator*=(double s) {
    for (double& c : coeffs_) {
        c *= s;
    }
    return *this;
}

double bladeProductSign(std::uint32_t a, std::uint32_t b) {
    // Moving each generator of b leftward past the larger generators of a.
    int swaps = 0;
    for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
        const std::uint32_t bit = rest & (~rest + 1);
        swaps += std::popcount(a & ~((bit << 1) - 1));
    }
    // Every shared generator squares to -1.
    swaps += std::popcount(a & b);
    return (swaps & 1) ? -1.0 : 1.0;
}

const std::vector<std::uint32_t>& gradedOrder(std::size_t dim) {
    requireDim(dim);
    static std::array<std::vector<std::uint32_t>, kMaxCliffordDim + 1> cache;
    static std::once_flag once;
    std::call_once(once, [] {
        for (std::size_t n = 1; n <= kMaxCliffordDim; ++n) {
            std::vector<std::uint32_t> masks(std::size_t{1} << n);
            for (std::uint32_t m = 0; m < masks.size(); ++m) {
                masks[m] = m;
            }
            std::sort(masks.begin(), masks.end(), [](std::uint32_t x, std::uint32_t y) {
                const int gx = std::popcount(x);
                const int gy = std::popcount(y);
                if (gx != gy) {
                    return gx < gy;
                }
                return generators(x) < generators(y);
            });
            cache[n] = std::move(masks);
        }
    });
    return cache[dim];
}

std::string bladeName(std::uint32_t mask) {
    if (mask == 0) {
        return "1";
    }
    std::string name = "e";
    for (int k : generators(mask)) {
        name += std::to_string(k + 1);
    }
    return name;
}

Multivector geometricProduct(const Multivector& a, const Multivector& b) {
    requireSameDim(a, b);
    Multivector out(a.dim());
    const auto size = static_cast<std::uint32_t>(a.size());
    for (std::uint32_t i = 0; i < size; ++i) {
        if (a[i] == 0.0) {
            continue;
        }
        for (std::uint32_t j = 0; j < size; ++j) {
            if (b[j] == 0.0) {
                continue;
            }
            out[i ^ j] += bladeProductSign(i, j) * a[i] * b[j];
        }
    }
    return out;
}

Multivector LinearCliffordMap::apply(std::span<const double> x) const {
    if (x.size() != dim || columns.size() != dim) {
        throw InvalidArgument("argument length does not match the map dimension");
    }
    Multivector out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        out += x[i] * columns[i];
    }
    return out;
}

namespace {

void requireMap(const LinearCliffordMap& map) {
    requireDim(map.dim);
    if (map.columns.size() != map.dim) {
        throw InvalidArgument("a linear Clifford map needs one column per generator");
    }
    for (const auto& c : map.columns) {
        if (c.dim() != map.dim) {
            throw InvalidArgument("column dimension differs from the map dimension");
        }
    }
}

MonogenicCheck check(const LinearCliffordMap& map, Side side, double tol) {
    MonogenicCheck result;
    result.side = side;
    result.defect = diracImage(map, side).norm();
    result.passed = result.defect <= tol;
    return result;
}

} // namespace

Multivector diracImage(const LinearCliffordMap& map, Side side) {
    requireMap(map);
    Multivector sum(map.dim);
    for (std::size_t i = 0; i < map.dim; ++i) {
        const auto e = Multivector::generator(map.dim, i + 1);
        sum += side == Side::Left ? e * map.columns[i] : map.columns[i] * e;
    }
    return sum;
}

MonogenicCheck isLeftMonogenic(const LinearCliffordMap& map, double tol) {
    return check(map, Side::Left, tol);
}

MonogenicCheck isRightMonogenic(const LinearCliffordMap& map, double tol) {
    return check(map, Side::Right, tol);
}

LinearCliffordMap completeFromHyperplane(std::size_t dim, const std::vector<Multivector>& partial,
                                         Side side) {
    requireDim(dim);
    if (dim < 2) {
        throw InvalidArgument("hyperplane completion needs dimension at least 2");
    }
    if (partial.size() != dim - 1) {
        throw InvalidArgument("expected " + std::to_string(dim - 1) + " partial columns, got " +
                              std::to_string(partial.size()));
    }
    Multivector sum(dim);
    for (std::size_t i = 0; i + 1 < dim; ++i) {
        if (partial[i].dim() != dim) {
            throw InvalidArgument("partial column dimension differs from the map dimension");
        }
        const auto e = Multivector::generator(dim, i + 1);
        sum += side == Side::Left ? e * partial[i] : partial[i] * e;
    }
    const auto last = Multivector::generator(dim, dim);
    LinearCliffordMap map{dim, partial};
    map.columns.push_back(side == Side::Left ? last * sum : sum * last);
    return map;
}

LinearCliffordMap completeOnHyperplane(std::span<const double> normal,
                                       const std::vector<std::vector<double>>& tangentBasis,
                                       const std::vector<Multivector>& values, Side side) {
    const std::size_t dim = normal.size();
    requireDim(dim);
    if (dim < 2 || tangentBasis.size() != dim - 1 || values.size() != dim - 1) {
        throw InvalidArgument("need n - 1 tangent vectors and values for a hyperplane in R^n");
    }
    // Orthonormal frame check.
    std::vector<std::vector<double>> frame = tangentBasis;
    frame.emplace_back(normal.begin(), normal.end());
    for (std::size_t a = 0; a < dim; ++a) {
        if (frame[a].size() != dim) {
            throw InvalidArgument("frame vector has the wrong length");
        }
        for (std::size_t b = a; b < dim; ++b) {
            double dot = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                dot += frame[a][k] * frame[b][k];
            }
            if (std::abs(dot - (a == b ? 1.0 : 0.0)) > 1e-9) {
                throw InvalidArgument("tangent basis and normal are not orthonormal");
            }
        }
    }

    Multivector sum(dim);
    for (std::size_t j = 0; j + 1 < dim; ++j) {
        const auto u = vectorElement(dim, tangentBasis[j]);
        sum += side == Side::Left ? u * values[j] : values[j] * u;
    }
    const auto nu = vectorElement(dim, normal);
    const Multivector onNormal = side == Side::Left ? nu * sum : sum * nu;

    LinearCliffordMap map;
    map.dim = dim;
    for (std::size_t i = 0; i < dim; ++i) {
        Multivector column = normal[i] * onNormal;
        for (std::size_t j = 0; j + 1 < dim; ++j) {
            column += tangentBasis[j][i] * values[j];
        }
        map.columns.push_back(std::move(column));
    }
    return map;
}

Eigen::MatrixXd monogenicConstraintMatrix(std::size_t dim, Side side) {
    requireDim(dim);
    const auto blades = static_cast<Eigen::Index>(std::size_t{1} << dim);
    Eigen::MatrixXd matrix = Eigen::MatrixXd::Zero(blades, static_cast<Eigen::Index>(dim) * blades);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::uint32_t e = 1u << i;
        for (std::uint32_t m = 0; m < static_cast<std::uint32_t>(blades); ++m) {
            const double sign = side == Side::Left ? bladeProductSign(e, m) : bladeProductSign(m, e);
            matrix(static_cast<Eigen::Index>(m ^ e), static_cast<Eigen::Index>(i) * blades + m) = sign;
        }
    }
    return matrix;
}

std::size_t monogenicSpaceDimension(std::size_t dim) {
    if (dim < 2 || dim > kMaxCliffordDim) {
        throw InvalidArgument("monogenic space dimension is defined for 2 <= n <= " +
                              std::to_string(kMaxCliffordDim));
    }
    const Eigen::MatrixXd matrix = monogenicConstraintMatrix(dim, Side::Left);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(matrix);
    return static_cast<std::size_t>(matrix.cols()) - static_cast<std::size_t>(lu.rank());
}

Multivector embedComplex(std::complex<double> z) {
    // e21 = -e12
    Multivector m(2);
    m[0] = z.real();
    m[0b11] = -z.imag();
    return m;
}

std::complex<double> extractComplex(const Multivector& m) {
    if (m.dim() != 2) {
        throw InvalidArgument("complex numbers live in Cl_2");
    }
    return {m[0], -m[0b11]};
}

std::complex<double> complexComplete(std::complex<double> onReals) {
    return std::complex<double>(0.0, 1.0) * onReals;
}

GraphDerivativeReport tangentialDerivativeOnGraph(const SetSample& sample, const ComplexScalarField& f,
                                                  const ComplexCovectorField& a,
                                                  double curvatureConstant, double tol) {
    checkField(sample, f);
    checkField(sample, a);
    const std::size_t n = sample.pointCount();
    if (sample.ambientDim() != 2 || n < 3 || sample.edgeCount() != n - 1) {
        throw InvalidArgument("non-graph sample: need a chain of at least 3 points in R^2");
    }
    for (std::size_t e = 0; e < sample.edgeCount(); ++e) {
        const Edge& edge = sample.edges()[e];
        if (edge.a != e || edge.b != e + 1) {
            throw InvalidArgument("non-graph sample: edges must chain consecutive points");
        }
    }
    const double step = sample.point(1)[0] - sample.point(0)[0];
    for (std::size_t j = 1; j < n; ++j) {
        const double dx = sample.point(j)[0] - sample.point(j - 1)[0];
        if (!(dx > 0.0) || std::abs(dx - step) > 1e-9 * step) {
            throw InvalidArgument("non-graph sample: abscissae must increase on a uniform grid");
        }
    }

    GraphDerivativeReport report;
    report.step = step;
    report.curvatureConstant = curvatureConstant;
    for (std::size_t j = 1; j < n; ++j) {
        const double slope = (sample.point(j)[1] - sample.point(j - 1)[1]) /
                             (sample.point(j)[0] - sample.point(j - 1)[0]);
        report.lipschitzConstant = std::max(report.lipschitzConstant, std::abs(slope));
    }
    const std::complex<double> i(0.0, 1.0);
    for (std::size_t j = 1; j + 1 < n; ++j) {
        const double width = sample.point(j + 1)[0] - sample.point(j - 1)[0];
        const std::complex<double> difference = (f.values[j + 1] - f.values[j - 1]) / width;
        const double slope = (sample.point(j + 1)[1] - sample.point(j - 1)[1]) / width;
        const double residual = std::abs(difference - a.values[j] * (1.0 + i * slope));
        report.nodes.push_back(j);
        report.residuals.push_back(residual);
        if (residual > report.maxResidual) {
            report.maxResidual = residual;
            report.worstNode = j;
        }
    }
    report.bound = curvatureConstant * step * step + tol;
    report.passed = report.maxResidual <= report.bound;
    return report;
}

} // namespace qcalc
