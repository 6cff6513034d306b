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

// Built with -mavx2 -mfma; only reached through the dispatcher after a CPU check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "dpsmap/simd.h"

namespace dpsmap::simd::avx2 {

namespace {

inline const double *raw(std::span<const cplx> v) {
    return reinterpret_cast<const double *>(v.data());
}

inline double *raw(std::span<cplx> v) {
    return reinterpret_cast<double *>(v.data());
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// Lanes hold (re0, im0, re1, im1).
inline __m256d swap_re_im(__m256d v) {
    return _mm256_permute_pd(v, 0b0101);
}

}  // namespace

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
    const double *pa = raw(a);
    const double *pb = raw(b);
    size_t n = a.size();
    __m256d prod = _mm256_setzero_pd();   // (ar*br, ai*bi, ...)
    __m256d cross = _mm256_setzero_pd();  // (ar*bi, ai*br, ...)
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        prod = _mm256_fmadd_pd(va, vb, prod);
        cross = _mm256_fmadd_pd(va, swap_re_im(vb), cross);
    }
    alignas(32) double p[4];
    _mm256_store_pd(p, prod);
    double re = (p[0] - p[1]) + (p[2] - p[3]);
    double im = hsum(cross);
    for (; i < n; i++) {
        re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    }
    return {re, im};
}

cplx dotc(std::span<const cplx> a, std::span<const cplx> b) {
    const double *pa = raw(a);
    const double *pb = raw(b);
    size_t n = a.size();
    __m256d prod = _mm256_setzero_pd();
    __m256d cross = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        prod = _mm256_fmadd_pd(va, vb, prod);
        cross = _mm256_fmadd_pd(va, swap_re_im(vb), cross);
    }
    double re = hsum(prod);
    alignas(32) double c[4];
    _mm256_store_pd(c, cross);
    double im = (c[0] - c[1]) + (c[2] - c[3]);
    for (; i < n; i++) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    const double *px = raw(x);
    double *py = raw(y);
    size_t n = x.size();
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_setr_pd(-alpha.imag(), alpha.imag(), -alpha.imag(), alpha.imag());
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(px + 2 * i);
        __m256d vy = _mm256_loadu_pd(py + 2 * i);
        vy = _mm256_fmadd_pd(vx, ar, vy);
        vy = _mm256_fmadd_pd(swap_re_im(vx), ai, vy);
        _mm256_storeu_pd(py + 2 * i, vy);
    }
    for (; i < n; i++) {
        y[i] += alpha * x[i];
    }
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
    const double *pa = raw(a);
    const double *pb = raw(b);
    size_t n = a.size();
    __m256d best = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(pa + 2 * i), _mm256_loadu_pd(pb + 2 * i));
        __m256d sq = _mm256_mul_pd(d, d);
        // (re0^2+im0^2, same, re1^2+im1^2, same)
        __m256d mag2 = _mm256_add_pd(sq, swap_re_im(sq));
        best = _mm256_max_pd(best, mag2);
    }
    alignas(32) double m[4];
    _mm256_store_pd(m, best);
    double result = std::sqrt(std::max(std::max(m[0], m[1]), std::max(m[2], m[3])));
    for (; i < n; i++) {
        result = std::max(result, std::abs(a[i] - b[i]));
    }
    return result;
}

}  // namespace dpsmap::simd::avx2
