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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qcalc/fields.hpp"
#include "qcalc/geometry.hpp"

namespace qcalc {

inline constexpr std::size_t kMaxCliffordDim = 6;

/// Element of the Clifford algebra Cl_n with generators e_1..e_n,
/// e_i e_i = -1 and e_i e_j = -e_j e_i for i != j.
///
/// Coefficients are addressed by blade bitmask internally (bit k set means
/// e_{k+1} is a factor); the serialized order is graded lexicographic:
/// 1, e1, .., en, e12, e13, .., e(n-1)n, .., e1..n.
class Multivector {
public:
    Multivector() = default;
    explicit Multivector(std::size_t dim);

    static Multivector scalar(std::size_t dim, double value);
    /// e_{index}, 1-based to match the usual notation.
    static Multivector generator(std::size_t dim, std::size_t index);
    static Multivector blade(std::size_t dim, std::uint32_t mask, double coefficient = 1.0);
    static Multivector fromGraded(std::size_t dim, std::span<const double> coefficients);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return coeffs_.size(); }

    double operator[](std::uint32_t mask) const { return coeffs_[mask]; }
    double& operator[](std::uint32_t mask) { return coeffs_[mask]; }

    std::vector<double> gradedCoefficients() const;

    /// Euclidean norm of the coefficient vector.
    double norm() const;

    Multivector& operator+=(const Multivector& other);
    Multivector& operator-=(const Multivector& other);
    Multivector& operator*=(double s);

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(Multivector a, double s) { return a *= s; }
    friend Multivector operator*(double s, Multivector a) { return a *= s; }
    friend Multivector operator-(Multivector a) { return a *= -1.0; }

    bool operator==(const Multivector&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<double> coeffs_;
};

/// Sign of blade(a) * blade(b) = sign * blade(a ^ b).
double bladeProductSign(std::uint32_t a, std::uint32_t b);

/// Blade masks in graded lexicographic order.
const std::vector<std::uint32_t>& gradedOrder(std::size_t dim);

/// "1", "e1", "e12", ...
std::string bladeName(std::uint32_t mask);

Multivector geometricProduct(const Multivector& a, const Multivector& b);

inline Multivector operator*(const Multivector& a, const Multivector& b) {
    return geometricProduct(a, b);
}

/// Real-linear L : R^n -> Cl_n, L(x) = sum_i x_i c_i.
struct LinearCliffordMap {
    std::size_t dim = 0;
    std::vector<Multivector> columns;

    Multivector apply(std::span<const double> x) const;
};

enum class Side { Left, Right };

/// sum_i e_i c_i (left) or sum_i c_i e_i (right); zero exactly for
/// monogenic maps.
Multivector diracImage(const LinearCliffordMap& map, Side side);

struct MonogenicCheck {
    Side side = Side::Left;
    double defect = 0.0;
    bool passed = false;
};

MonogenicCheck isLeftMonogenic(const LinearCliffordMap& map, double tol = 1e-12);
MonogenicCheck isRightMonogenic(const LinearCliffordMap& map, double tol = 1e-12);

/// Recovers c_n from c_1..c_{n-1} on {x_n = 0}: c_n = e_n sum_{i<n} e_i c_i
/// for the left side, c_n = (sum_{i<n} c_i e_i) e_n for the right side.
LinearCliffordMap completeFromHyperplane(std::size_t dim, const std::vector<Multivector>& partial,
                                         Side side);

/// Same for an arbitrary hyperplane with unit normal `normal`, given L on an
/// orthonormal basis of the hyperplane. Returns the map in the standard basis.
LinearCliffordMap completeOnHyperplane(std::span<const double> normal,
                                       const std::vector<std::vector<double>>& tangentBasis,
                                       const std::vector<Multivector>& values, Side side);

/// Real 2^n x n 2^n matrix of the Dirac constraint acting on the stacked
/// coefficients of c_1..c_n (bitmask order within each column).
Eigen::MatrixXd monogenicConstraintMatrix(std::size_t dim, Side side = Side::Left);

/// Real dimension of the space of left-monogenic linear maps, from the rank
/// of the constraint matrix.
std::size_t monogenicSpaceDimension(std::size_t dim);

/// a + b i  ->  a + b e21, the embedding of C into Cl_2 under which
/// complex-linear maps are the left-monogenic ones.
Multivector embedComplex(std::complex<double> z);
std::complex<double> extractComplex(const Multivector& m);

/// The complex-linear map on R^2 = C with A(1) = c; returns A(i) = i c.
std::complex<double> complexComplete(std::complex<double> onReals);

/// Per-node check on a Lipschitz graph {x + i phi(x)} that the centered
/// difference of f(x + i phi(x)) matches A(z) (1 + i phi'(x)), with phi' the
/// centered slope at the node.
struct GraphDerivativeReport {
    double step = 0.0;
    double lipschitzConstant = 0.0;
    std::vector<std::size_t> nodes;   // interior nodes checked
    std::vector<double> residuals;
    double maxResidual = 0.0;
    std::size_t worstNode = 0;
    double curvatureConstant = 0.0;
    double bound = 0.0;  // curvatureConstant * step^2 + tol
    bool passed = false;
};

/// Throws InvalidArgument for a sample that is not a uniformly spaced
/// function graph in R^2 chained left to right.
GraphDerivativeReport tangentialDerivativeOnGraph(const SetSample& sample, const ComplexScalarField& f,
                                                  const ComplexCovectorField& a,
                                                  double curvatureConstant = 1.0, double tol = 1e-12);

} // namespace qcalc
