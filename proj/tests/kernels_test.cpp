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


#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "hypsign/kernels.hpp"
#include "hypsign/polyalgebra.hpp"

using namespace hypsign;
using namespace hypsign::kernels;

namespace {

struct Batch {
    std::size_t degree, lanes;
    std::vector<double> roots, coeffs, mags, target, penalty;
};

Batch random_batch(std::mt19937_64 &rng, std::size_t degree, std::size_t lanes) {
    Batch b{degree, lanes, {}, {}, {}, {}, {}};
    std::uniform_real_distribution<double> mod(-3.0, 3.0);
    std::bernoulli_distribution neg(0.5);
    for (std::size_t i = 0; i < degree * lanes; ++i) {
        double r = std::exp(mod(rng));
        b.roots.push_back(neg(rng) ? -r : r);
    }
    for (std::size_t k = 0; k <= degree; ++k) b.target.push_back(neg(rng) ? -1.0 : 1.0);
    b.coeffs.assign((degree + 1) * lanes, 0.0);
    b.mags.assign((degree + 1) * lanes, 0.0);
    b.penalty.assign(lanes, 0.0);
    return b;
}

void run(const KernelSet &ks, Batch &b, double margin) {
    ks.expand(b.roots, b.degree, b.lanes, b.coeffs, b.mags);
    ks.penalty(b.coeffs, b.mags, b.target, b.degree, b.lanes, margin, b.penalty);
}

bool same_bits(const std::vector<double> &a, const std::vector<double> &b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("scalar kernels agree with exact expansion") {
    std::mt19937_64 rng(21);
    const auto &ks = kernels_for(Isa::Scalar);
    for (std::size_t degree = 1; degree <= 12; ++degree) {
        Batch b = random_batch(rng, degree, 5);
        run(ks, b, 1e-10);
        for (std::size_t l = 0; l < b.lanes; ++l) {
            std::vector<Rational> alpha, gamma;
            for (std::size_t k = 0; k < degree; ++k) {
                double r = b.roots[k * b.lanes + l];
                Rational exact = Rational(mpq_class(r));
                if (r > 0)
                    alpha.push_back(exact);
                else
                    gamma.push_back(-exact);
            }
            auto p = expand(RootConfiguration(alpha, gamma));
            for (std::size_t k = 0; k <= degree; ++k) {
                double want = p.coefficients()[k].to_double();
                double got = b.coeffs[k * b.lanes + l];
                double scale = b.mags[k * b.lanes + l];
                CHECK(std::abs(got - want) <= 1e-12 * scale);
                CHECK(scale >= std::abs(got));
            }
        }
    }
}

TEST_CASE("penalty is zero exactly when every sign meets the margin") {
    const auto &ks = kernels_for(Isa::Scalar);
    // (x - 1)(x + 2) = x^2 + x - 2
    Batch b{2, 1, {1.0, -2.0}, std::vector<double>(3), std::vector<double>(3), {1, 1, -1}, std::vector<double>(1)};
    run(ks, b, 1e-10);
    CHECK(b.coeffs == std::vector<double>{1, 1, -2});
    CHECK(b.mags == std::vector<double>{1, 3, 2});
    CHECK(b.penalty[0] == 0.0);
    b.target = {1, -1, -1};
    ks.penalty(b.coeffs, b.mags, b.target, 2, 1, 1e-10, b.penalty);
    CHECK(b.penalty[0] > 0.0);
}

TEST_CASE("AVX2 kernels are bit-identical to scalar") {
    if (!available(Isa::Avx2)) {
        MESSAGE("AVX2 unavailable on this host; only the scalar path is exercised");
        CHECK_THROWS_AS(kernels_for(Isa::Avx2), std::runtime_error);
        return;
    }
    std::mt19937_64 rng(34);
    for (std::size_t lanes : {1u, 3u, 4u, 7u, 32u, 33u}) {
        for (std::size_t degree = 1; degree <= 16; ++degree) {
            Batch a = random_batch(rng, degree, lanes);
            Batch b = a;
            run(kernels_for(Isa::Scalar), a, 1e-10);
            run(kernels_for(Isa::Avx2), b, 1e-10);
            CHECK(same_bits(a.coeffs, b.coeffs));
            CHECK(same_bits(a.mags, b.mags));
            CHECK(same_bits(a.penalty, b.penalty));
        }
    }
}

TEST_CASE("dispatch") {
    CHECK(available(Isa::Scalar));
    CHECK(to_string(Isa::Scalar) == "scalar");
    const auto &ks = active_kernels();
    CHECK(available(ks.isa));
}
