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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "hypsign/kernels.hpp"

namespace hypsign::kernels {

namespace {

constexpr KernelSet kScalar{Isa::Scalar, &expand_scalar, &penalty_scalar};
#if defined(HYPSIGN_HAVE_AVX2)
constexpr KernelSet kAvx2{Isa::Avx2, &expand_avx2, &penalty_avx2};
#endif

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool available(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2:
#if defined(HYPSIGN_HAVE_AVX2)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

const KernelSet &kernels_for(Isa isa) {
    if (!available(isa)) throw std::runtime_error("kernel set " + std::string(to_string(isa)) + " is not available");
#if defined(HYPSIGN_HAVE_AVX2)
    if (isa == Isa::Avx2) return kAvx2;
#endif
    return kScalar;
}

const KernelSet &active_kernels() {
    static const KernelSet &chosen = [] () -> const KernelSet & {
        const char *forced = std::getenv("HYPSIGN_ISA");
        if (forced != nullptr && std::string_view(forced) == "scalar") return kScalar;
        if (available(Isa::Avx2)) return kernels_for(Isa::Avx2);
        return kScalar;
    }();
    return chosen;
}

}  // namespace hypsign::kernels
