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

// Built with -mavx2 only; callers must check kernels::available(Isa::Avx2).

#include "hypsign/kernels.hpp"

#if defined(HYPSIGN_HAVE_AVX2)

#include <immintrin.h>

namespace hypsign::kernels {

namespace {

// Tail lanes (lanes % 4) fall back to the scalar formula, written out here
// so the operation order matches expand_scalar / penalty_scalar exactly.
inline double abs_bits(double x) { return x < 0.0 ? -x : x; }

}  // namespace

void expand_avx2(std::span<const double> roots, std::size_t degree, std::size_t lanes,
                 std::span<double> coeffs, std::span<double> magnitudes) {
    const std::size_t vec_end = lanes - lanes % 4;
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d sign_mask = _mm256_set1_pd(-0.0);

    for (std::size_t k = 0; k <= degree; ++k) {
        double *c = coeffs.data() + k * lanes;
        double *m = magnitudes.data() + k * lanes;
        const __m256d init = k == 0 ? one : zero;
        std::size_t l = 0;
        for (; l < vec_end; l += 4) {
            _mm256_storeu_pd(c + l, init);
            _mm256_storeu_pd(m + l, init);
        }
        for (; l < lanes; ++l) c[l] = m[l] = k == 0 ? 1.0 : 0.0;
    }

    for (std::size_t j = 0; j < degree; ++j) {
        const double *r = roots.data() + j * lanes;
        for (std::size_t k = j + 1; k >= 1; --k) {
            double *c = coeffs.data() + k * lanes;
            const double *cp = coeffs.data() + (k - 1) * lanes;
            double *m = magnitudes.data() + k * lanes;
            const double *mp = magnitudes.data() + (k - 1) * lanes;
            std::size_t l = 0;
            for (; l < vec_end; l += 4) {
                __m256d rv = _mm256_loadu_pd(r + l);
                __m256d t = _mm256_mul_pd(rv, _mm256_loadu_pd(cp + l));
                _mm256_storeu_pd(c + l, _mm256_sub_pd(_mm256_loadu_pd(c + l), t));
                __m256d u = _mm256_mul_pd(_mm256_andnot_pd(sign_mask, rv), _mm256_loadu_pd(mp + l));
                _mm256_storeu_pd(m + l, _mm256_add_pd(_mm256_loadu_pd(m + l), u));
            }
            for (; l < lanes; ++l) {
                double t = r[l] * cp[l];
                c[l] = c[l] - t;
                double u = abs_bits(r[l]) * mp[l];
                m[l] = m[l] + u;
            }
        }
    }
}

void penalty_avx2(std::span<const double> coeffs, std::span<const double> magnitudes,
                  std::span<const double> target, std::size_t degree, std::size_t lanes, double margin,
                  std::span<double> penalty) {
    const std::size_t vec_end = lanes - lanes % 4;
    const __m256d zero = _mm256_setzero_pd();
    const __m256d marg = _mm256_set1_pd(margin);
    for (std::size_t l = 0; l < lanes; ++l) penalty[l] = 0.0;
    for (std::size_t k = 0; k <= degree; ++k) {
        const double t = target[k];
        const __m256d tv = _mm256_set1_pd(t);
        const double *c = coeffs.data() + k * lanes;
        const double *m = magnitudes.data() + k * lanes;
        std::size_t l = 0;
        for (; l < vec_end; l += 4) {
            __m256d v = _mm256_div_pd(_mm256_mul_pd(tv, _mm256_loadu_pd(c + l)), _mm256_loadu_pd(m + l));
            __m256d gap = _mm256_sub_pd(marg, v);
            // max_pd(gap, 0) == (gap > 0 ? gap : 0)
            __m256d acc = _mm256_add_pd(_mm256_loadu_pd(penalty.data() + l), _mm256_max_pd(gap, zero));
            _mm256_storeu_pd(penalty.data() + l, acc);
        }
        for (; l < lanes; ++l) {
            double v = (t * c[l]) / m[l];
            double gap = margin - v;
            penalty[l] = penalty[l] + (gap > 0.0 ? gap : 0.0);
        }
    }
}

}  // namespace hypsign::kernels

#endif  // HYPSIGN_HAVE_AVX2
