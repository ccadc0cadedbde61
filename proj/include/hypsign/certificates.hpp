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

// Symmetric-function inequalities behind the non-existence results, in
// exact arithmetic, plus seeded samplers that look for points where a
// conjunction claimed impossible does hold.
//
// Lemma 1: 0 < alpha_1 < gamma_1 <= ... <= gamma_{2n-2} <= 1.
//   t_{n+1} > 0 together with 1/alpha_1 >= sum 1/gamma_j is claimed impossible.
// Lemma 6: S(n-1,n,1), nu = 0, normalized gamma_1 = alpha_2 = 1; the free
//   moduli gamma_2..gamma_{2n-3} are >= 1. coeff_margin < 0 with 1/alpha_1 > S_{-1}
//   is claimed impossible.
// Lemma 7: S(1,n,2) with gamma_1 <= gamma_2 <= gamma_3 <= alpha_1 <= gamma_4
//   <= ... <= gamma_n. c_{n+1} <= 0 together with c_2 < 0 is claimed impossible.
// Lemma 8: S(1,5,3) with alpha_1 = 1, gamma_1..gamma_5 <= 1 <= gamma_6 <= alpha_2.
//   c_7 < 0 together with c_3 < 0 is claimed impossible.

#ifndef HYPSIGN_CERTIFICATES_HPP
#define HYPSIGN_CERTIFICATES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hypsign/rational.hpp"

namespace hypsign {

struct Lemma1Sample {
    int n = 2;
    std::vector<Rational> gammas;  ///< 2n-2 values in (0, 1]
    Rational alpha1;
};

struct Lemma1Quantities {
    std::vector<Rational> e;  ///< e_0 .. e_{2n-2} of the gammas
    Rational t_next;          ///< -alpha_1 e_{n-1} + e_n + alpha_1 e_{n-3} - e_{n-2}
    Rational slack;           ///< 1/alpha_1 - G
    Rational G;               ///< sum 1/gamma_j
    Rational tau;             ///< -e_{n-1} + e_{n-3} - G (e_{n-2} - e_n)
    bool violation = false;   ///< t_next > 0 and slack >= 0
    bool auxiliary_ok = true; ///< e_{n-2} >= e_n
};

/// Throws DomainError for a sample outside the region.
Lemma1Quantities eval_lemma1(const Lemma1Sample &sample);

struct Lemma6Sample {
    int n = 5;
    std::vector<Rational> gammas;  ///< gamma_2 .. gamma_{2n-3}, each >= 1
    Rational alpha1;               ///< in (0, 1)
};

struct Lemma6Quantities {
    std::vector<Rational> e;  ///< e_0 .. e_{2n-4} of the gammas
    Rational s_minus1;        ///< sum 1/gamma_j
    Rational coeff_margin;           ///< e_{n-1} - alpha_1 e_{n-2} - e_{n-3} + alpha_1 e_{n-4}
    Rational reduced_margin;           ///< S_{-1}(e_{n-1} - e_{n-3}) - e_{n-2} + e_{n-4}
    bool reciprocal_bound = false;        ///< 1/alpha_1 > S_{-1}
    bool violation = false;   ///< coeff_margin < 0 and reciprocal_bound
};

Lemma6Quantities eval_lemma6(const Lemma6Sample &sample);

struct Lemma7Sample {
    Rational alpha1, alpha2;
    std::vector<Rational> gammas;  ///< n >= 4 values, increasing
};

struct Lemma7Quantities {
    Rational A1, Am1, Am2;  ///< alpha_1 + alpha_2, 1/alpha_1 + 1/alpha_2, 1/(alpha_1 alpha_2)
    Rational G1, Gm1;       ///< over gamma_1..gamma_3
    Rational H1, Hm1;       ///< over gamma_4..gamma_n
    Rational Lm2;           ///< e_2 of all 1/gamma_j
    Rational delta;         ///< alpha_1 alpha_2 prod gamma_j
    Rational c_top;         ///< c_{n+1} = -A1 + G1 + H1
    Rational c2_over_delta; ///< -Am1 (Gm1 + Hm1) + Am2 + Lm2
    Rational c2;
    bool violation = false; ///< c_top <= 0 and c2 < 0
};

Lemma7Quantities eval_lemma7(const Lemma7Sample &sample);

struct Lemma8Sample {
    Rational alpha2;               ///< alpha_1 is 1
    std::vector<Rational> gammas;  ///< 6 values
};

struct Lemma8Quantities {
    Rational A1, Am1, Am2;
    Rational H1, Hm1, Hm2, Hm3;  ///< over all six gammas
    Rational delta;
    Rational c7;                 ///< -A1 + H1
    Rational c3_over_delta;      ///< -Am1 Hm2 + Am2 Hm1 + Hm3
    Rational c3;
    bool violation = false;      ///< c7 < 0 and c3 < 0
};

Lemma8Quantities eval_lemma8(const Lemma8Sample &sample);

/// K(r, w) = 12r^3 + 25r^2 w + 5r w^2 - 25r^2 - 30r w - 5w^2 + 5r + 5w.
Rational lemma8_K(const Rational &r, const Rational &w);

/// gamma_1..gamma_5 = r, gamma_6 = w, alpha_2 = a = 5r + w - 1 (so c_7 = 0).
struct Lemma8Corner {
    Rational r, w, a, K, c3_over_delta;
    bool identity_holds = false;  ///< a r^3 w (c3/delta) == -2K
};

Lemma8Corner eval_lemma8_corner(const Rational &r, const Rational &w);

/// Aggregated sampling evidence. All values exact.
struct CertificateReport {
    int lemma = 1;
    int n = 2;
    std::size_t count = 0;
    std::uint64_t seed = 0;
    std::size_t violations = 0;
    /// Name of the quantity whose sign the conjunction hinges on, and its
    /// value closest to (or beyond) the forbidden side.
    std::string margin_quantity;
    Rational extremal_margin;
    std::size_t extremal_index = 0;
    std::vector<std::pair<std::string, std::vector<Rational>>> extremal_sample;
    std::vector<std::pair<std::string, std::size_t>> counters;
    std::vector<std::pair<std::string, Rational>> values;

    std::size_t counter(const std::string &name) const;
    const Rational *value(const std::string &name) const;

    friend bool operator==(const CertificateReport &, const CertificateReport &) = default;
};

/// Lemma ids 1, 6, 7, 8. Valid n: lemma 1 n >= 2, lemma 6 n >= 5, lemma 7 n >= 4,
/// lemma 8 n == 5. Samples are uniform on a 1/10^4 grid of the constraint
/// intervals, with extra mass on equality corners. Per-shard seeding makes
/// the report independent of `threads`.
CertificateReport sample_region(int lemma, int n, std::size_t count, std::uint64_t seed, unsigned threads = 1);

}  // namespace hypsign

#endif  // HYPSIGN_CERTIFICATES_HPP
