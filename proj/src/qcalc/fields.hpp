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
#include <span>
#include <string>
#include <vector>

#include "qcalc/geometry.hpp"

namespace qcalc {

/// f : E -> R sampled at every point of a set.
struct ScalarField {
    std::string setRef;
    std::vector<double> values;
};

/// f : E -> C, used on planar sets identified with the complex plane.
struct ComplexScalarField {
    std::string setRef;
    std::vector<std::complex<double>> values;
};

/// A(x) in (R^n)^*, stored as the representing vector under the standard
/// inner product, `dim` entries per point.
struct CovectorField {
    std::string setRef;
    std::size_t dim = 0;
    std::vector<double> data;

    std::size_t size() const { return dim == 0 ? 0 : data.size() / dim; }
    std::span<const double> at(std::size_t i) const { return {data.data() + i * dim, dim}; }
};

/// Complex-linear differentials on R^2 = C: A(x) acts by v -> a(x) * v.
struct ComplexCovectorField {
    std::string setRef;
    std::vector<std::complex<double>> values;
};

/// Throws SetMismatch when the field was sampled on another set or has the
/// wrong length, InvalidArgument when a value is not finite.
void checkField(const SetSample& sample, const ScalarField& f);
void checkField(const SetSample& sample, const ComplexScalarField& f);
void checkField(const SetSample& sample, const CovectorField& a);
void checkField(const SetSample& sample, const ComplexCovectorField& a);

template<typename Fn>
ScalarField sampleScalar(const SetSample& sample, Fn&& fn) {
    ScalarField f{sample.fingerprint(), {}};
    f.values.reserve(sample.pointCount());
    for (std::size_t i = 0; i < sample.pointCount(); ++i) {
        f.values.push_back(fn(sample.point(i)));
    }
    return f;
}

/// `fn(point, out)` writes the covector at `point` into `out`.
template<typename Fn>
CovectorField sampleCovector(const SetSample& sample, Fn&& fn) {
    CovectorField a{sample.fingerprint(), sample.ambientDim(), {}};
    a.data.resize(sample.pointCount() * sample.ambientDim(), 0.0);
    for (std::size_t i = 0; i < sample.pointCount(); ++i) {
        fn(sample.point(i), std::span<double>(a.data.data() + i * a.dim, a.dim));
    }
    return a;
}

template<typename Fn>
ComplexScalarField sampleComplex(const SetSample& sample, Fn&& fn) {
    ComplexScalarField f{sample.fingerprint(), {}};
    for (std::size_t i = 0; i < sample.pointCount(); ++i) {
        const auto p = sample.point(i);
        f.values.push_back(fn(std::complex<double>(p[0], p[1])));
    }
    return f;
}

template<typename Fn>
ComplexCovectorField sampleComplexCovector(const SetSample& sample, Fn&& fn) {
    ComplexCovectorField a{sample.fingerprint(), {}};
    for (std::size_t i = 0; i < sample.pointCount(); ++i) {
        const auto p = sample.point(i);
        a.values.push_back(fn(std::complex<double>(p[0], p[1])));
    }
    return a;
}

} // namespace qcalc
