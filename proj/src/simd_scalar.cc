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

#include <algorithm>
#include <cmath>

#include "dpsmap/simd.h"

namespace dpsmap::simd::scalar {

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
    double re = 0, im = 0;
    for (size_t i = 0; i < a.size(); i++) {
        re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    }
    return {re, im};
}

cplx dotc(std::span<const cplx> a, std::span<const cplx> b) {
    double re = 0, im = 0;
    for (size_t i = 0; i < a.size(); i++) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    for (size_t i = 0; i < x.size(); i++) {
        y[i] += alpha * x[i];
    }
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
    double m = 0;
    for (size_t i = 0; i < a.size(); i++) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

}  // namespace dpsmap::simd::scalar
