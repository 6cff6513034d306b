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

#ifndef DPSMAP_SIMD_H
#define DPSMAP_SIMD_H

#include <complex>
#include <span>
#include <string_view>

namespace dpsmap::simd {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// The instruction set used by the dispatching entry points below. Chosen once
/// from CPU features; `DPSMAP_SIMD=scalar` in the environment pins the scalar path.
Isa active_isa();

/// Overrides the dispatch choice. Requesting an ISA the CPU lacks falls back to
/// scalar. Returns the ISA actually selected.
Isa force_isa(Isa isa);

bool isa_supported(Isa isa);

// Dispatching entry points. All spans must have equal length.

/// sum_i a[i] * b[i]
cplx dot(std::span<const cplx> a, std::span<const cplx> b);
/// sum_i conj(a[i]) * b[i]
cplx dotc(std::span<const cplx> a, std::span<const cplx> b);
/// y += alpha * x
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);
/// max_i |a[i] - b[i]|
double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);

namespace scalar {
cplx dot(std::span<const cplx> a, std::span<const cplx> b);
cplx dotc(std::span<const cplx> a, std::span<const cplx> b);
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);
double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);
}  // namespace scalar

#ifdef DPSMAP_HAVE_AVX2_KERNELS
namespace avx2 {
cplx dot(std::span<const cplx> a, std::span<const cplx> b);
cplx dotc(std::span<const cplx> a, std::span<const cplx> b);
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);
double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);
}  // namespace avx2
#endif

}  // namespace dpsmap::simd

#endif
