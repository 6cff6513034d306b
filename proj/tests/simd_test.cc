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

#include "dpsmap/simd.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "dpsmap/kernel.h"
#include "dpsmap/states.h"

using namespace dpsmap;
using dpsmap::simd::cplx;

namespace {

std::vector<cplx> random_vec(size_t len, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> v(len);
    for (cplx &x : v) {
        x = {g(rng), g(rng)};
    }
    return v;
}

class IsaGuard {
   public:
    IsaGuard() : saved_(simd::active_isa()) {}
    ~IsaGuard() { simd::force_isa(saved_); }

   private:
    simd::Isa saved_;
};

}  // namespace

TEST(simd, names) {
    EXPECT_EQ(simd::isa_name(simd::Isa::Scalar), "scalar");
    EXPECT_EQ(simd::isa_name(simd::Isa::Avx2), "avx2");
    EXPECT_TRUE(simd::isa_supported(simd::Isa::Scalar));
}

TEST(simd, env_override) {
    const char *env = std::getenv("DPSMAP_SIMD");
    if (env == nullptr || std::string(env) != "scalar") {
        GTEST_SKIP() << "run with DPSMAP_SIMD=scalar";
    }
    EXPECT_EQ(simd::active_isa(), simd::Isa::Scalar);
}

TEST(simd, scalar_reference_values) {
    std::vector<cplx> a{{1, 2}, {3, -1}, {0, 1}};
    std::vector<cplx> b{{2, 0}, {1, 1}, {-1, 0}};
    EXPECT_EQ(simd::scalar::dot(a, b), cplx(2, 4) + cplx(4, 2) + cplx(0, -1));
    EXPECT_EQ(simd::scalar::dotc(a, b), cplx(2, -4) + cplx(2, 4) + cplx(0, 1));
    std::vector<cplx> y = b;
    simd::scalar::axpy({0, 1}, a, y);
    EXPECT_EQ(y[0], cplx(0, 1));
    EXPECT_EQ(y[1], cplx(2, 4));
    EXPECT_EQ(y[2], cplx(-2, 0));
    EXPECT_EQ(simd::scalar::max_abs_diff(a, a), 0.0);
    EXPECT_DOUBLE_EQ(simd::scalar::max_abs_diff(std::vector<cplx>{{3, 4}}, std::vector<cplx>{{0, 0}}), 5.0);
}

#ifdef DPSMAP_HAVE_AVX2_KERNELS
TEST(simd, avx2_matches_scalar) {
    if (!simd::isa_supported(simd::Isa::Avx2)) {
        GTEST_SKIP() << "cpu lacks avx2";
    }
    std::mt19937_64 rng(4);
    for (size_t len : {0, 1, 2, 3, 4, 5, 7, 8, 16, 31, 64, 255, 1024}) {
        std::vector<cplx> a = random_vec(len, rng), b = random_vec(len, rng);
        double scale = 1e-13 * std::max<size_t>(1, len);
        EXPECT_LT(std::abs(simd::avx2::dot(a, b) - simd::scalar::dot(a, b)), scale) << len;
        EXPECT_LT(std::abs(simd::avx2::dotc(a, b) - simd::scalar::dotc(a, b)), scale) << len;
        std::vector<cplx> y1 = b, y2 = b;
        simd::avx2::axpy({0.3, -1.2}, a, y1);
        simd::scalar::axpy({0.3, -1.2}, a, y2);
        EXPECT_LT(simd::scalar::max_abs_diff(y1, y2), 1e-14) << len;
        EXPECT_NEAR(simd::avx2::max_abs_diff(a, b), simd::scalar::max_abs_diff(a, b), 1e-14) << len;
    }
}
#endif

TEST(simd, dispatch_results_agree_end_to_end) {
    IsaGuard guard;
    FieldContext ctx(3);
    std::mt19937_64 rng(8);
    Operator op = random_hermitian(8, rng);
    KernelSet k = KernelSet::build(ctx, 1, PhaseConvention::tomographic(1), spin_coherent(ctx, default_zeta()));
    simd::force_isa(simd::Isa::Scalar);
    ASSERT_EQ(simd::active_isa(), simd::Isa::Scalar);
    PhaseSpaceFunction ws = forward_map_direct(k, op);
    simd::force_isa(simd::Isa::Avx2);
    PhaseSpaceFunction wv = forward_map_direct(k, op);
    EXPECT_LT(simd::scalar::max_abs_diff(ws.grid, wv.grid), 1e-12);
}

TEST(simd, force_falls_back_when_unsupported) {
    IsaGuard guard;
    simd::Isa got = simd::force_isa(simd::Isa::Avx2);
    EXPECT_EQ(got, simd::isa_supported(simd::Isa::Avx2) ? simd::Isa::Avx2 : simd::Isa::Scalar);
    EXPECT_EQ(simd::active_isa(), got);
}
