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

#include "dpsmap/mub.h"

#include <gtest/gtest.h>

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

std::vector<RotationCoefficients> all_families(const FieldContext &ctx, FieldElement xi) {
    std::vector<RotationCoefficients> out;
    for (unsigned p = 1; p <= (1u << (ctx.n() - 1)); p <<= 1) {
        out.push_back(coeffs_closed_form(ctx, xi, p));
    }
    out.push_back(coeffs_graph(ctx, xi, +1));
    out.push_back(coeffs_graph(ctx, xi, -1));
    return out;
}

}  // namespace

TEST(mub, recurrence_exact_for_all_families) {
    for (unsigned n = 1; n <= 4; n++) {
        FieldContext ctx(n);
        for (FieldElement xi : ctx.elements()) {
            for (const RotationCoefficients &c : all_families(ctx, xi)) {
                ASSERT_EQ(recurrence_violations(ctx, c), 0u) << "n=" << n << " xi=" << xi.bits;
            }
        }
    }
}

TEST(mub, recurrence_detects_bad_coefficients) {
    FieldContext ctx(2);
    RotationCoefficients c = coeffs_closed_form(ctx, FieldElement(2), 1);
    c.quarter_turns[1] = (c.quarter_turns[1] + 1) % 4;
    EXPECT_GT(recurrence_violations(ctx, c), 0u);
    EXPECT_THROW(build_V(ctx, c), PreconditionError);
}

TEST(mub, coefficients_follow_the_phase) {
    FieldContext ctx(3);
    PhaseConvention conv = PhaseConvention::tomographic(1);
    for (FieldElement xi : ctx.elements()) {
        RotationCoefficients c = coeffs_from_phase(ctx, conv, xi);
        RotationCoefficients closed = coeffs_closed_form(ctx, xi, 1);
        EXPECT_EQ(c.quarter_turns, closed.quarter_turns);
    }
    EXPECT_THROW(coeffs_from_phase(ctx, PhaseConvention::perm_factorized(), FieldElement(3)), PreconditionError);
}

TEST(mub, v_zero_is_identity) {
    for (unsigned n = 1; n <= 3; n++) {
        FieldContext ctx(n);
        EXPECT_LT(
            max_abs_diff(build_V(ctx, coeffs_closed_form(ctx, FieldElement(0), 1)), Operator::identity(ctx.size())),
            1e-15);
    }
}

TEST(mub, single_qubit_rotation) {
    FieldContext ctx(1);
    Operator V = build_V(ctx, coeffs_closed_form(ctx, ctx.one(), 1));
    Operator Z = from_eigen(oracle::pauli('Z')), X = from_eigen(oracle::pauli('X'));
    Operator want = Z * X;
    want *= cplx(0, -1);
    EXPECT_LT(max_abs_diff(V * Z * V.dagger(), want), 1e-15);
    EXPECT_LT(max_abs_diff(V * V, X), 1e-15);
}

TEST(mub, rotation_identities) {
    for (unsigned n = 1; n <= 3; n++) {
        FieldContext ctx(n);
        for (FieldElement xi : ctx.elements()) {
            for (const RotationCoefficients &c : all_families(ctx, xi)) {
                Operator V = build_V(ctx, c);
                ASSERT_TRUE(V.is_unitary(1e-12));
                ASSERT_LT(max_abs_diff(V * V, build_X(ctx, ctx.sqrt(xi))), 1e-12);
                for (FieldElement a : ctx.elements()) {
                    Operator Xa = build_X(ctx, a);
                    ASSERT_LT(max_abs_diff(V * Xa, Xa * V), 1e-12);
                    Operator rhs = build_Z(ctx, a) * build_X(ctx, ctx.mul(a, xi));
                    rhs *= c.value(a);
                    ASSERT_LT(max_abs_diff(V * build_Z(ctx, a) * V.dagger(), rhs), 1e-12);
                }
            }
        }
    }
}

TEST(mub, p1_rotation_factorizes) {
    FieldContext ctx(3);
    Operator V = build_V(ctx, coeffs_closed_form(ctx, ctx.one(), 1));
    FieldContext c1(1);
    Operator v1 = build_V(c1, coeffs_closed_form(c1, c1.one(), 1));
    EXPECT_LT(max_abs_diff(V, kron(kron(v1, v1), v1)), 1e-14);
}

TEST(mub, line_states) {
    FieldContext ctx(2);
    auto logical = line_states(ctx, coeffs_closed_form(ctx, FieldElement(0), 1));
    for (FieldElement nu : ctx.elements()) {
        EXPECT_LT(max_abs_diff(logical[nu.bits], Ket::basis(4, ctx.index(nu))), 1e-15);
    }
    FieldContext c1(1);
    auto ys = line_states(c1, coeffs_closed_form(c1, c1.one(), 1));
    Operator Y = from_eigen(oracle::pauli('Y'));
    for (const Ket &k : ys) {
        cplx ev = k.inner(Y * k);
        EXPECT_NEAR(std::abs(ev), 1.0, 1e-15);
    }
    for (unsigned n = 1; n <= 3; n++) {
        FieldContext c(n);
        for (FieldElement xi : c.elements()) {
            RotationCoefficients co = coeffs_closed_form(c, xi, 1);
            auto states = line_states(c, co);
            for (FieldElement nu : c.elements()) {
                const Ket &psi = states[nu.bits];
                for (FieldElement a : c.elements()) {
                    Operator S = build_Z(c, a) * build_X(c, c.mul(a, xi));
                    S *= co.value(a);
                    Ket img = S * psi;
                    cplx lambda = psi.inner(img);
                    Ket resid = img;
                    for (size_t i = 0; i < resid.dim(); i++) {
                        resid[i] -= lambda * psi[i];
                    }
                    ASSERT_LT(resid.norm(), 1e-12);
                    ASSERT_NEAR(lambda.real(), double(c.chi(c.mul(a, nu))), 1e-12);
                }
            }
        }
    }
}

TEST(mub, unbiasedness) {
    FieldContext c1(1);
    std::vector<Ket> zbasis{Ket::basis(2, 0), Ket::basis(2, 1)};
    auto ybasis = line_states(c1, coeffs_closed_form(c1, c1.one(), 1));
    EXPECT_LT(check_unbiased(zbasis, ybasis), 1e-15);
    EXPECT_THROW(check_unbiased(zbasis, zbasis), PreconditionError);
    for (unsigned n = 1; n <= 3; n++) {
        FieldContext ctx(n);
        for (const PhaseConvention &conv : {PhaseConvention::tomographic(1), PhaseConvention::graph(-1)}) {
            MubFamily fam = mub_family(ctx, conv);
            auto bases = fam.bases();
            ASSERT_EQ(bases.size(), ctx.size() + 1);
            for (size_t i = 0; i < bases.size(); i++) {
                for (size_t j = i + 1; j < bases.size(); j++) {
                    ASSERT_LT(check_unbiased(*bases[i], *bases[j]), 1e-10);
                }
            }
        }
    }
}

TEST(mub, family_needs_rotation_recurrence) {
    FieldContext ctx(2);
    EXPECT_THROW(mub_family(ctx, PhaseConvention::perm_factorized()), PreconditionError);
}

TEST(mub, lines) {
    FieldContext ctx(2);
    LineSpec l = LineSpec::sloped(FieldElement(2), FieldElement(1));
    auto pts = l.points(ctx);
    ASSERT_EQ(pts.size(), 4u);
    for (auto [a, b] : pts) {
        EXPECT_TRUE(l.contains(ctx, a, b));
        EXPECT_EQ(b, ctx.mul(FieldElement(2), a) + FieldElement(1));
    }
    LineSpec v = LineSpec::vertical_at(FieldElement(3));
    for (auto [a, b] : v.points(ctx)) {
        EXPECT_EQ(a, FieldElement(3));
    }
}
