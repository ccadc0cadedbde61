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

// Batched double-precision Vieta expansion used as a screening filter by the
// witness search. Every candidate that passes is re-checked exactly, so these
// kernels never decide anything on their own.
//
// Batches are structure-of-arrays: entry k of lane l lives at [k * lanes + l].
// The scalar and AVX2 variants perform the same operations in the same order
// (no fused multiply-add), so their outputs are bit-identical; the search
// relies on this to stay reproducible across machines.

#ifndef HYPSIGN_KERNELS_HPP
#define HYPSIGN_KERNELS_HPP

#include <cstddef>
#include <span>
#include <string_view>

namespace hypsign::kernels {

/// roots: degree x lanes signed roots. coeffs, magnitudes: (degree+1) x lanes.
/// coeffs[k] is the coefficient of x^(degree-k) of prod (x - r); magnitudes[k]
/// is the same with every root replaced by -|r|, i.e. e_k(|r|) >= |coeffs[k]|.
using ExpandFn = void (*)(std::span<const double> roots, std::size_t degree, std::size_t lanes,
                          std::span<double> coeffs, std::span<double> magnitudes);

/// penalty[l] = sum_k max(0, margin - target[k] * coeffs[k][l] / magnitudes[k][l]).
/// Zero iff every coefficient has its target sign with relative margin `margin`.
using PenaltyFn = void (*)(std::span<const double> coeffs, std::span<const double> magnitudes,
                           std::span<const double> target, std::size_t degree, std::size_t lanes, double margin,
                           std::span<double> penalty);

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

void expand_scalar(std::span<const double> roots, std::size_t degree, std::size_t lanes,
                   std::span<double> coeffs, std::span<double> magnitudes);
void penalty_scalar(std::span<const double> coeffs, std::span<const double> magnitudes,
                    std::span<const double> target, std::size_t degree, std::size_t lanes, double margin,
                    std::span<double> penalty);

#if defined(HYPSIGN_HAVE_AVX2)
void expand_avx2(std::span<const double> roots, std::size_t degree, std::size_t lanes,
                 std::span<double> coeffs, std::span<double> magnitudes);
void penalty_avx2(std::span<const double> coeffs, std::span<const double> magnitudes,
                  std::span<const double> target, std::size_t degree, std::size_t lanes, double margin,
                  std::span<double> penalty);
#endif

struct KernelSet {
    Isa isa;
    ExpandFn expand;
    PenaltyFn penalty;
};

/// Compiled in and supported by the running CPU.
bool available(Isa isa);
/// Throws std::runtime_error when the ISA is unavailable.
const KernelSet &kernels_for(Isa isa);
/// Best available set; HYPSIGN_ISA=scalar in the environment forces the scalar path.
const KernelSet &active_kernels();

}  // namespace hypsign::kernels

#endif  // HYPSIGN_KERNELS_HPP
