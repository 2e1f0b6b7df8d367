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

#include <Eigen/Dense>

#include "qcalc/clifford.hpp"
#include "support.hpp"

namespace qtest {

// Random monogenic map: random columns projected onto the kernel of
// the constraint matrix (an independent linear-algebra route).
inline qcalc::LinearCliffordMap randomMonogenic(Gen& g, std::size_t dim, qcalc::Side side) {
    const Eigen::MatrixXd m = qcalc::monogenicConstraintMatrix(dim, side);
    Eigen::VectorXd v(m.cols());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v[i] = g.uniform(-1.0, 1.0);
    }
    const Eigen::VectorXd projected = v - m.transpose() * (m * m.transpose()).ldlt().solve(m * v);
    qcalc::LinearCliffordMap map{dim, {}};
    const std::size_t blades = std::size_t{1} << dim;
    for (std::size_t c = 0; c < dim; ++c) {
        qcalc::Multivector col(dim);
        for (std::uint32_t mask = 0; mask < blades; ++mask) {
            col[mask] = projected[static_cast<Eigen::Index>(c * blades + mask)];
        }
        map.columns.push_back(col);
    }
    return map;
}

} // namespace qtest
