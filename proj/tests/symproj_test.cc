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

#include "dpsmap/symproj.h"

#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "dpsmap/errors.h"
#include "dpsmap/states.h"

using namespace dpsmap;

namespace {

PhaseSpaceFunction symbol(const FieldContext &ctx, double s, const PhaseConvention &conv, const Operator &op) {
    return forward_map(KernelSet::build(ctx, s, conv, spin_coherent(ctx, default_zeta())), op);
}

uint32_t swap_bits(uint32_t c, unsigned n, unsigned i, unsigned j) {
    uint32_t bi = (c >> (n - i)) & 1, bj = (c >> (n - j)) & 1;
    c &= ~((1u << (n - i)) | (1u << (n - j)));
    return c | (bj << (n - i)) | (bi << (n - j));
}

}  // namespace

TEST(symproj, r_factor_small_cases) {
    EXPECT_EQ(r_factor(2, 1, 1, 2), 2u);
    EXPECT_EQ(r_factor(2, 1, 1, 1), 0u);
    EXPECT_EQ(r_factor(2, 0, 0, 0), 1u);
    EXPECT_EQ(r_factor(3, 1, 1, 0), 3u);
    EXPECT_EQ(r_factor(3, 2, 2, 2), 6u);
    EXPECT_EQ(r_factor(2, 3, 0, 3), 0u);
    EXPECT_EQ(r_factor(2, -1, 1, 2), 0u);
    EXPECT_FALSE(in_support(2, 1, 1, 1));
    EXPECT_TRUE(in_support(4, 2, 2, 4));
}

TEST(symproj, r_factor_counts_orbits) {
    for (unsigned n = 1; n <= 8; n++) {
        uint64_t total = 0;
        std::map<MnkKey, uint64_t> counts;
        uint32_t size = 1u << n;
        for (uint32_t a = 0; a < size; a++) {
            for (uint32_t b = 0; b < size; b++) {
                counts[{unsigned(std::popcount(a)), unsigned(std::popcount(b)), unsigned(std::popcount(a ^ b))}]++;
            }
        }
        for (int m = 0; m <= int(n); m++) {
            for (int nn = 0; nn <= int(n); nn++) {
                for (int k = 0; k <= int(n); k++) {
                    uint64_t r = r_factor(n, m, nn, k);
                    total += r;
                    auto it = counts.find({unsigned(m), unsigned(nn), unsigned(k)});
                    ASSERT_EQ(r, it == counts.end() ? 0u : it->second) << n << " " << m << nn << k;
                }
            }
        }
        EXPECT_EQ(total, uint64_t(1) << (2 * n));
    }
}

TEST(symproj, projection_preserves_total) {
    std::mt19937_64 rng(1);
    for (unsigned n = 1; n <= 4; n++) {
        FieldContext ctx(n);
        PhaseSpaceFunction w = symbol(ctx, 0, PhaseConvention::tomographic(1), random_hermitian(ctx.size(), rng));
        ProjectedFunction p = project(ctx, w);
        EXPECT_LT(std::abs(p.total() - w.total()), 1e-10);
        for (const auto &[key, v] : p.entries) {
            EXPECT_GT(r_factor(n, key[0], key[1], key[2]), 0u);
        }
        EXPECT_EQ(p.at(n + 1, 0, 0), cplx(0));
    }
    FieldContext c2(2);
    PhaseSpaceFunction bad = symbol(FieldContext(1), 0, PhaseConvention::tomographic(1), Operator::identity(2));
    EXPECT_THROW(project(c2, bad), PreconditionError);
}

TEST(symproj, invariant_kernels) {
    for (unsigned n = 1; n <= 4; n++) {
        FieldContext ctx(n);
        for (const PhaseConvention &conv : {PhaseConvention::perm_sqrt(), PhaseConvention::perm_factorized()}) {
            KernelSet k = KernelSet::build(ctx, 0, conv, spin_coherent(ctx, default_zeta()));
            InvarianceReport r = check_kernel_invariance(k);
            EXPECT_TRUE(r.invariant());
            EXPECT_TRUE(k.permutation_invariant());
            EXPECT_EQ(r.transpositions_tested, size_t(n * (n - 1) / 2));
        }
    }
}

TEST(symproj, tomographic_kernel_breaks_invariance) {
    for (unsigned n = 3; n <= 4; n++) {
        FieldContext ctx(n);
        KernelSet k = KernelSet::build(ctx, 0, PhaseConvention::tomographic(1), spin_coherent(ctx, default_zeta()));
        InvarianceReport r = check_kernel_invariance(k);
        EXPECT_FALSE(r.invariant());
        EXPECT_FALSE(k.permutation_invariant());
        ASSERT_TRUE(r.witness.has_value());
        Operator pi = permutation_op(ctx, r.witness->i, r.witness->j);
        Operator lhs = pi * k.at(r.witness->alpha, r.witness->beta) * pi;
        Operator rhs = k.at(ctx.transpose(r.witness->alpha, r.witness->i, r.witness->j),
                            ctx.transpose(r.witness->beta, r.witness->i, r.witness->j));
        EXPECT_GT(max_abs_diff(lhs, rhs), 1e-3);
    }
}

TEST(symproj, symmetric_average_matches_trace) {
    std::mt19937_64 rng(2);
    for (unsigned n = 1; n <= 4; n++) {
        FieldContext ctx(n);
        Ket fid = spin_coherent(ctx, default_zeta());
        for (const PhaseConvention &conv : {PhaseConvention::perm_sqrt(), PhaseConvention::perm_factorized()}) {
            for (double s : {-1.0, 0.0, 1.0}) {
                KernelSet kp = KernelSet::build(ctx, s, conv, fid);
                KernelSet km = KernelSet::build(ctx, -s, conv, fid);
                double prefactor = overlap_check(kp, km).convolution_prefactor();
                Operator rho = symmetrize(random_ket(ctx.size(), rng).projector());
                Operator op = symmetrize(random_hermitian(ctx.size(), rng));
                PhaseSpaceFunction wr = forward_map(kp, rho), wo = forward_map(km, op);
                ASSERT_TRUE(symbol_depends_only_on_h(ctx, wr).ok);
                ASSERT_TRUE(symbol_depends_only_on_h(ctx, wo).ok);
                cplx got = symmetric_average(project(ctx, wr), project(ctx, wo), prefactor);
                EXPECT_LT(std::abs(got - trace_product(rho, op)), 1e-10) << "n=" << n << " s=" << s;
            }
        }
    }
}

TEST(symproj, symmetric_average_preconditions) {
    FieldContext ctx(4);
    Operator ghz = ghz_state(ctx).projector();
    ProjectedFunction f0 = project(ctx, symbol(ctx, 0, PhaseConvention::perm_factorized(), ghz));
    ProjectedFunction f1 = project(ctx, symbol(ctx, 1, PhaseConvention::perm_factorized(), ghz));
    ProjectedFunction s0 = project(ctx, symbol(ctx, 0, PhaseConvention::perm_sqrt(), ghz));
    ProjectedFunction t0 = project(ctx, symbol(ctx, 0, PhaseConvention::tomographic(1), ghz));
    EXPECT_NO_THROW(symmetric_average(f0, f0, 1.0 / 16));
    EXPECT_THROW(symmetric_average(f0, f1, 1.0 / 16), PreconditionError);
    EXPECT_THROW(symmetric_average(f0, s0, 1.0 / 16), PreconditionError);
    EXPECT_THROW(symmetric_average(t0, t0, 1.0 / 16), PreconditionError);
    EXPECT_NEAR(symmetric_average(f0, f0, 1.0 / 16).real(), 1.0, 1e-10);
}

TEST(symproj, h_dependence_detects_asymmetry) {
    FieldContext ctx(3);
    Operator asym = logical_state(ctx, SelfDualCoords::parse("100")).projector();
    HDependence h = symbol_depends_only_on_h(ctx, symbol(ctx, 0, PhaseConvention::perm_factorized(), asym));
    EXPECT_FALSE(h.ok);
    ASSERT_TRUE(h.witness.has_value());
    EXPECT_GT(h.max_deviation, 0.1);
}

TEST(symproj, theorem_witness_flips_sign) {
    for (unsigned n = 4; n <= 8; n++) {
        FieldContext ctx(n);
        std::optional<TheoremWitness> w = find_theorem_witness(ctx);
        ASSERT_TRUE(w.has_value()) << "n=" << n;
        EXPECT_TRUE(w->flips());
        EXPECT_EQ(w->alpha, ctx.square(ctx.theta(w->p)));
        EXPECT_EQ(ctx.mul(w->xi, w->eps), ctx.one());
        EXPECT_EQ(ctx.trace(ctx.mul(ctx.theta(w->r), w->alpha)), ctx.trace(ctx.mul(ctx.theta(w->s), w->alpha)));
        // Transpose by swapping coordinate bits directly.
        FieldElement factors[4] = {w->alpha, w->beta, ctx.mul(w->alpha, w->xi), ctx.mul(w->beta, w->xi)};
        FieldElement before = ctx.one(), after = ctx.one();
        for (FieldElement f : factors) {
            before = ctx.mul(before, f);
            after = ctx.mul(after, ctx.at_index(swap_bits(ctx.index(f), n, w->r, w->s)));
        }
        EXPECT_EQ(ctx.chi(after), -ctx.chi(before)) << "n=" << n;
    }
    EXPECT_THROW(find_theorem_witness(FieldContext(3)), PreconditionError);
    EXPECT_THROW(theorem_witness(FieldContext(4), 1, 1, 2, 3), PreconditionError);
    EXPECT_THROW(theorem_witness(FieldContext(4), 1, 2, 3, 5), PreconditionError);
}

TEST(symproj, tomographic_invariant_phases_exist_only_below_four) {
    for (unsigned n = 1; n <= 5; n++) {
        FieldContext ctx(n);
        TomographicSearch t = search_tomographic_invariant_phases(ctx);
        EXPECT_EQ(t.consistent, n <= 3) << "n=" << n;
        EXPECT_EQ(t.example.has_value(), n <= 3);
        if (!t.example) {
            continue;
        }
        KernelSet k = KernelSet::build(ctx, 0, *t.example, spin_coherent(ctx, default_zeta()));
        EXPECT_TRUE(check_kernel_invariance(k).invariant());
        MubFamily fam = mub_family(ctx, *t.example);
        std::mt19937_64 rng(n);
        Operator rho = random_ket(ctx.size(), rng).projector();
        PhaseSpaceFunction w = forward_map(k, rho);
        for (FieldElement xi : ctx.elements()) {
            for (FieldElement nu : ctx.elements()) {
                ASSERT_LT(tomographic_check(w, rho, LineSpec::sloped(xi, nu), fam, ctx).deviation, 1e-10);
            }
        }
    }
}
