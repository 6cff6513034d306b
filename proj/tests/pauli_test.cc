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

#include "dpsmap/pauli.h"

#include <gtest/gtest.h>

#include <numbers>

#include "dpsmap/errors.h"
#include "oracle.h"

using namespace dpsmap;

namespace {

Operator from_eigen(const oracle::Mat &m) {
    Operator op(m.rows());
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            op(r, c) = m(r, c);
        }
    }
    return op;
}

oracle::Field oracle_field(const FieldContext &ctx) {
    oracle::Field f{ctx.n(), ctx.poly_bits(), {}};
    for (FieldElement t : ctx.selfdual_basis()) {
        f.basis.push_back(t.bits);
    }
    return f;
}

std::vector<PhaseConvention> hermitian_conventions(unsigned n) {
    std::vector<PhaseConvention> out;
    for (unsigned p = 1; p <= (1u << (n - 1)); p <<= 1) {
        out.push_back(PhaseConvention::tomographic(p));
    }
    out.push_back(PhaseConvention::graph(+1));
    out.push_back(PhaseConvention::graph(-1));
    out.push_back(PhaseConvention::perm_sqrt());
    out.push_back(PhaseConvention::perm_factorized());
    out.push_back(PhaseConvention::perm_factorized(std::vector<std::array<uint8_t, 4>>(n, {0, 0, 0, 1})));
    return out;
}

}  // namespace

TEST(pauli, single_qubit_z_and_x) {
    FieldContext ctx(1);
    EXPECT_LT(max_abs_diff(build_Z(ctx, ctx.one()), from_eigen(oracle::pauli('Z'))), 1e-15);
    EXPECT_LT(max_abs_diff(build_X(ctx, ctx.one()), from_eigen(oracle::pauli('X'))), 1e-15);
    EXPECT_LT(max_abs_diff(build_Z(ctx, FieldElement(0)), Operator::identity(2)), 1e-15);
    EXPECT_LT(max_abs_diff(build_X(ctx, FieldElement(0)), Operator::identity(2)), 1e-15);
}

TEST(pauli, monomials_match_kron_oracle) {
    for (unsigned n = 1; n <= 3; n++) {
        FieldContext ctx(n);
        oracle::Field of = oracle_field(ctx);
        for (FieldElement g : ctx.elements()) {
            for (FieldElement d : ctx.elements()) {
                Operator zx = build_Z(ctx, g) * build_X(ctx, d);
                ASSERT_LT(max_abs_diff(zx, from_eigen(oracle::zx(of, g.bits, d.bits))), 1e-14);
            }
        }
    }
}

TEST(pauli, commutation_phase) {
    FieldContext ctx(2);
    for (FieldElement a : ctx.elements()) {
        for (FieldElement b : ctx.elements()) {
            Operator lhs = build_Z(ctx, a) * build_X(ctx, b);
            Operator rhs = build_X(ctx, b) * build_Z(ctx, a);
            rhs *= double(ctx.chi(ctx.mul(a, b)));
            ASSERT_LT(max_abs_diff(lhs, rhs), 1e-15);
        }
    }
}

TEST(pauli, phase_values) {
    FieldContext ctx(1);
    FieldElement one = ctx.one();
    EXPECT_EQ(PhaseConvention::tomographic(1).value(ctx, one, one), cplx(0, -1));
    EXPECT_EQ(PhaseConvention::perm_factorized().value(ctx, one, one), cplx(0, 1));
    for (unsigned n = 1; n <= 4; n++) {
        FieldContext c(n);
        for (const PhaseConvention &conv : hermitian_conventions(n)) {
            for (FieldElement x : c.elements()) {
                ASSERT_EQ(conv.value(c, FieldElement(0), x), cplx(1)) << conv.id();
                ASSERT_EQ(conv.value(c, x, FieldElement(0)), cplx(1)) << conv.id();
            }
            EXPECT_TRUE(is_hermitian_convention(c, conv)) << conv.id();
        }
    }
}

TEST(pauli, tomographic_p1_matches_oracle_phase) {
    for (unsigned n = 1; n <= 4; n++) {
        FieldContext ctx(n);
        oracle::Field of = oracle_field(ctx);
        for (FieldElement g : ctx.elements()) {
            for (FieldElement d : ctx.elements()) {
                ASSERT_EQ(PhaseConvention::tomographic(1).value(ctx, g, d), oracle::phase_tomo_p1(of, g.bits, d.bits));
                ASSERT_EQ(PhaseConvention::perm_factorized().value(ctx, g, d),
                          oracle::phase_factorized(of, g.bits, d.bits));
            }
        }
    }
}

TEST(pauli, invalid_power_rejected) {
    FieldContext ctx(3);
    EXPECT_THROW(PhaseConvention::tomographic(3).validate(ctx), ConfigError);
    EXPECT_THROW(PhaseConvention::tomographic(8).validate(ctx), ConfigError);
    EXPECT_NO_THROW(PhaseConvention::tomographic(4).validate(ctx));
    EXPECT_THROW(PhaseConvention::perm_factorized({{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}).validate(ctx),
                 ConfigError);
}

TEST(pauli, parse_round_trip) {
    for (const PhaseConvention &conv : hermitian_conventions(3)) {
        EXPECT_EQ(PhaseConvention::parse(conv.id(), 3).id(), conv.id());
    }
    EXPECT_THROW(PhaseConvention::parse("bogus", 3), ConfigError);
    EXPECT_THROW(PhaseConvention::parse("perminv-f01", 3), ConfigError);
}

TEST(pauli, single_qubit_displacements) {
    FieldContext ctx(1);
    FieldElement one = ctx.one();
    Operator d1 = displacement(ctx, PhaseConvention::tomographic(1), one, one);
    EXPECT_LT(max_abs_diff(d1, from_eigen(oracle::pauli('Y'))), 1e-15);
    Operator df = displacement(ctx, PhaseConvention::perm_factorized(), one, one);
    EXPECT_LT(max_abs_diff(df, from_eigen(-oracle::pauli('Y'))), 1e-15);
    EXPECT_LT(max_abs_diff(displacement(ctx, PhaseConvention::graph(1), FieldElement(0), FieldElement(0)),
                           Operator::identity(2)),
              1e-15);
}

TEST(pauli, displacements_unitary_and_hermitian_iff) {
    for (unsigned n = 1; n <= 3; n++) {
        FieldContext ctx(n);
        auto convs = hermitian_conventions(n);
        std::vector<cplx> table(size_t(ctx.size()) * ctx.size(), 1.0);
        for (uint32_t g = 1; g < ctx.size(); g++) {
            for (uint32_t d = 1; d < ctx.size(); d++) {
                table[g * ctx.size() + d] = std::polar(1.0, 0.7 * (g + d));
            }
        }
        convs.push_back(PhaseConvention::custom(table, "twisted"));
        for (const PhaseConvention &conv : convs) {
            for (FieldElement g : ctx.elements()) {
                for (FieldElement d : ctx.elements()) {
                    Operator D = displacement(ctx, conv, g, d);
                    ASSERT_TRUE(D.is_unitary(1e-12));
                    cplx phi = conv.value(ctx, g, d);
                    bool squared = std::abs(phi * phi - double(ctx.chi(ctx.mul(g, d)))) < 1e-12;
                    ASSERT_EQ(D.is_hermitian(1e-12), squared) << conv.id();
                }
            }
        }
        EXPECT_FALSE(is_hermitian_convention(ctx, convs.back()) && n > 0 && ctx.size() > 1);
    }
}

TEST(pauli, group_law_up_to_phase) {
    FieldContext ctx(2);
    PhaseConvention conv = PhaseConvention::tomographic(1);
    for (FieldElement g1 : ctx.elements()) {
        for (FieldElement d1 : ctx.elements()) {
            for (FieldElement g2 : ctx.elements()) {
                for (FieldElement d2 : ctx.elements()) {
                    Operator prod = displacement(ctx, conv, g1, d1) * displacement(ctx, conv, g2, d2);
                    Operator target = displacement(ctx, conv, g1 + g2, d1 + d2);
                    cplx ratio = trace_product(target.dagger(), prod) / 4.0;
                    ASSERT_NEAR(std::abs(ratio), 1.0, 1e-12);
                    ASSERT_LT(max_abs_diff(prod, ratio * target), 1e-12);
                }
            }
        }
    }
}

TEST(pauli, expectation_fast_path) {
    FieldContext ctx(3);
    Ket psi = spin_coherent(ctx, std::polar(0.5, std::numbers::pi / 4));
    for (const PhaseConvention &conv : hermitian_conventions(3)) {
        for (FieldElement g : ctx.elements()) {
            for (FieldElement d : ctx.elements()) {
                cplx direct = psi.inner(displacement(ctx, conv, g, d) * psi);
                ASSERT_LT(std::abs(direct - displacement_expectation(ctx, conv, psi, g, d)), 1e-14);
            }
        }
    }
}

TEST(pauli, permutation_invariance_of_phases) {
    for (unsigned n = 2; n <= 4; n++) {
        FieldContext ctx(n);
        EXPECT_TRUE(is_permutation_invariant(ctx, PhaseConvention::perm_sqrt()));
        EXPECT_TRUE(is_permutation_invariant(ctx, PhaseConvention::perm_factorized()));
    }
    FieldContext ctx4(4);
    EXPECT_FALSE(is_permutation_invariant(ctx4, PhaseConvention::tomographic(2)));
    EXPECT_FALSE(is_permutation_invariant(ctx4, PhaseConvention::tomographic(1)));
}

TEST(pauli, spin_coherent_states) {
    FieldContext ctx(3);
    Ket zero = spin_coherent(ctx, 0.0);
    EXPECT_LT(max_abs_diff(zero, Ket::basis(8, 0)), 1e-15);
    Ket flat = spin_coherent(ctx, 1.0);
    for (size_t i = 0; i < 8; i++) {
        EXPECT_NEAR(flat[i].real(), 1.0 / std::sqrt(8.0), 1e-15);
    }
    cplx zeta = std::polar(0.5, std::numbers::pi / 4);
    Ket psi = spin_coherent(ctx, zeta);
    oracle::Vec ref = oracle::spin_coherent(3, zeta);
    for (size_t i = 0; i < 8; i++) {
        EXPECT_LT(std::abs(psi[i] - ref(i)), 1e-15);
    }
    EXPECT_TRUE(is_symmetric_state(psi));
    FieldContext c1(1);
    Ket one = spin_coherent(c1, zeta);
    for (char p : {'X', 'Y', 'Z'}) {
        oracle::Vec v(2);
        v << one[0], one[1];
        EXPECT_GT(std::abs(v.dot(oracle::pauli(p) * v)), 0.1) << p;
    }
}

TEST(pauli, fiducial_checks) {
    FieldContext ctx(2);
    PhaseConvention conv = PhaseConvention::tomographic(1);
    EXPECT_FALSE(check_fiducial(ctx, conv, spin_coherent(ctx, 0.0)).ok);
    FiducialReport flat = check_fiducial(ctx, conv, spin_coherent(ctx, 1.0));
    EXPECT_FALSE(flat.ok);
    EXPECT_FALSE(flat.violations.empty());
    FiducialReport good = check_fiducial(ctx, conv, spin_coherent(ctx, std::polar(0.5, std::numbers::pi / 4)));
    EXPECT_TRUE(good.ok);
    EXPECT_TRUE(good.violations.empty());
}

TEST(pauli, permutation_operators) {
    FieldContext ctx(2);
    Operator P = permutation_op(ctx, 1, 2);
    Ket k01 = Ket::basis(4, 1);
    EXPECT_LT(max_abs_diff(P * k01, Ket::basis(4, 2)), 1e-15);
    EXPECT_LT(max_abs_diff(P * P, Operator::identity(4)), 1e-15);
    FieldElement w(2), w2(3);
    EXPECT_LT(max_abs_diff(P * build_Z(ctx, w) * P, build_Z(ctx, w2)), 1e-15);
    EXPECT_THROW(permutation_op(ctx, 1, 1), PreconditionError);
}

TEST(pauli, symmetrize) {
    FieldContext ctx(2);
    Operator proj = Ket::basis(4, 1).projector();
    Operator sym = symmetrize(proj);
    Operator want(4);
    want(1, 1) = 0.5;
    want(2, 2) = 0.5;
    EXPECT_LT(max_abs_diff(sym, want), 1e-15);
    EXPECT_LT(max_abs_diff(symmetrize(sym), sym), 1e-15);
    FieldContext c3(3);
    Operator r(8);
    for (size_t i = 0; i < 8; i++) {
        for (size_t j = 0; j < 8; j++) {
            r(i, j) = cplx(std::sin(1.0 + i * 3 + j), std::cos(2.0 * i - j));
        }
    }
    Operator s = symmetrize(r);
    for (unsigned i = 1; i <= 3; i++) {
        for (unsigned j = i + 1; j <= 3; j++) {
            EXPECT_LT(max_abs_diff(commutator(s, permutation_op(c3, i, j)), Operator(8)), 1e-12);
        }
    }
}
