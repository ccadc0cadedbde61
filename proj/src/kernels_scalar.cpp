// Copyright 2026 The hypsign Authors
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

#include <algorithm>
#include <cmath>

#include "hypsign/kernels.hpp"

namespace hypsign::kernels {

void expand_scalar(std::span<const double> roots, std::size_t degree, std::size_t lanes,
                   std::span<double> coeffs, std::span<double> magnitudes) {
    std::fill(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>((degree + 1) * lanes), 0.0);
    std::fill(magnitudes.begin(), magnitudes.begin() + static_cast<std::ptrdiff_t>((degree + 1) * lanes), 0.0);
    for (std::size_t l = 0; l < lanes; ++l) {
        coeffs[l] = 1.0;
        magnitudes[l] = 1.0;
    }
    for (std::size_t j = 0; j < degree; ++j) {
        const double *r = roots.data() + j * lanes;
        for (std::size_t k = j + 1; k >= 1; --k) {
            double *c = coeffs.data() + k * lanes;
            const double *cp = coeffs.data() + (k - 1) * lanes;
            double *m = magnitudes.data() + k * lanes;
            const double *mp = magnitudes.data() + (k - 1) * lanes;
            for (std::size_t l = 0; l < lanes; ++l) {
                double t = r[l] * cp[l];
                c[l] = c[l] - t;
                double u = std::fabs(r[l]) * mp[l];
                m[l] = m[l] + u;
            }
        }
    }
}

void penalty_scalar(std::span<const double> coeffs, std::span<const double> magnitudes,
                    std::span<const double> target, std::size_t degree, std::size_t lanes, double margin,
                    std::span<double> penalty) {
    for (std::size_t l = 0; l < lanes; ++l) penalty[l] = 0.0;
    for (std::size_t k = 0; k <= degree; ++k) {
        const double t = target[k];
        const double *c = coeffs.data() + k * lanes;
        const double *m = magnitudes.data() + k * lanes;
        for (std::size_t l = 0; l < lanes; ++l) {
            double v = (t * c[l]) / m[l];
            double gap = margin - v;
            penalty[l] = penalty[l] + (gap > 0.0 ? gap : 0.0);
        }
    }
}

}  // namespace hypsign::kernels
