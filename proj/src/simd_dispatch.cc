// Copyright 2026 The dpsmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <cstdlib>
#include <string>

#include "dpsmap/simd.h"

namespace dpsmap::simd {

namespace {

Isa detect() {
    if (const char *env = std::getenv("DPSMAP_SIMD")) {
        if (std::string(env) == "scalar") {
            return Isa::Scalar;
        }
    }
    return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa> &current() {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

bool isa_supported(Isa isa) {
    if (isa == Isa::Scalar) {
        return true;
    }
#if defined(DPSMAP_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa active_isa() {
    return current().load(std::memory_order_relaxed);
}

Isa force_isa(Isa isa) {
    Isa chosen = isa_supported(isa) ? isa : Isa::Scalar;
    current().store(chosen, std::memory_order_relaxed);
    return chosen;
}

#ifdef DPSMAP_HAVE_AVX2_KERNELS
#define DPSMAP_DISPATCH(fn, ...)      \
    if (active_isa() == Isa::Avx2) {  \
        return avx2::fn(__VA_ARGS__); \
    }                                 \
    return scalar::fn(__VA_ARGS__)
#else
#define DPSMAP_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#endif

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
    DPSMAP_DISPATCH(dot, a, b);
}

cplx dotc(std::span<const cplx> a, std::span<const cplx> b) {
    DPSMAP_DISPATCH(dotc, a, b);
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    DPSMAP_DISPATCH(axpy, alpha, x, y);
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
    DPSMAP_DISPATCH(max_abs_diff, a, b);
}

}  // namespace dpsmap::simd
