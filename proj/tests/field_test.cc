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

#include "dpsmap/field.h"

#include <gtest/gtest.h>

#include <random>

#include "dpsmap/errors.h"
#include "oracle.h"

using namespace dpsmap;

namespace {

oracle::Field oracle_field(const FieldContext &ctx) {
    oracle::Field f{ctx.n(), ctx.poly_bits(), {}};
    for (FieldElement t : ctx.selfdual_basis()) {
        f.basis.push_back(t.bits);
    }
    return f;
}

}  // namespace

TEST(field, multiplication_matches_carryless_oracle) {
    for (unsigned n = 1; n <= 8; n++) {
        FieldContext ctx(n);
        std::mt19937 rng(n);
        uint32_t limit = n <= 4 ? ctx.size() * ctx.size() : 5000;
        for (uint32_t t = 0; t < limit; t++) {
            uint32_t a = n <= 4 ? t / ctx.size() : rng() % ctx.size();
            uint32_t b = n <= 4 ? t % ctx.size() : rng() % ctx.size();
            ASSERT_EQ(ctx.mul(FieldElement(a), FieldElement(b)).bits, oracle::gf_mul(a, b, ctx.poly_bits(), n))
                << "n=" << n << " a=" << a << " b=" << b;
        }
    }
}

TEST(field, omega_squared) {
    FieldContext ctx(2);
    FieldElement w(2);
    EXPECT_EQ(ctx.mul(w, w), FieldElement(3));
    EXPECT_EQ(ctx.mul(w, FieldElement(0)), FieldElement(0));
    EXPECT_EQ(ctx.mul(w, ctx.one()), w);
}

TEST(field, inverse) {
    for (unsigned n = 1; n <= 8; n++) {
        FieldContext ctx(n);
        for (FieldElement x : ctx.elements()) {
            if (!x.is_zero()) {
                ASSERT_EQ(ctx.mul(x, ctx.inv(x)), ctx.one());
            }
        }
    }
}

TEST(field, trace_values) {
    FieldContext f2(2), f1(1);
    EXPECT_EQ(f2.trace(FieldElement(2)), 1);
    EXPECT_EQ(f2.trace(FieldElement(0)), 0);
    EXPECT_EQ(f2.trace(f2.one()), 0);
    EXPECT_EQ(f1.trace(f1.one()), 1);
    EXPECT_EQ(f2.chi(FieldElement(0)), 1);
    EXPECT_EQ(f2.chi(FieldElement(2)), -1);
    EXPECT_EQ(f2.chi(f2.one()), 1);
}

TEST(field, trace_matches_oracle_and_is_linear) {
    for (unsigned n = 1; n <= 8; n++) {
        FieldContext ctx(n);
        for (FieldElement x : ctx.elements()) {
            ASSERT_EQ(ctx.trace(x), oracle::gf_trace(x.bits, ctx.poly_bits(), n));
            ASSERT_EQ(ctx.trace(x), ctx.trace(ctx.square(x)));
        }
        if (n <= 4) {
            for (FieldElement x : ctx.elements()) {
                for (FieldElement y : ctx.elements()) {
                    ASSERT_EQ(ctx.trace(x + y), ctx.trace(x) ^ ctx.trace(y));
                    ASSERT_EQ(ctx.chi(x + y), ctx.chi(x) * ctx.chi(y));
                }
            }
        }
    }
}

TEST(field, sqrt) {
    FieldContext f2(2);
    EXPECT_EQ(f2.sqrt(FieldElement(0)), FieldElement(0));
    EXPECT_EQ(f2.sqrt(f2.one()), f2.one());
    EXPECT_EQ(f2.sqrt(FieldElement(2)), FieldElement(3));
    for (unsigned n = 1; n <= 8; n++) {
        FieldContext ctx(n);
        for (FieldElement x : ctx.elements()) {
            ASSERT_EQ(ctx.square(ctx.sqrt(x)), x);
            ASSERT_EQ(ctx.sqrt(ctx.square(x)), x);
        }
    }
}

TEST(field, selfdual_basis) {
    EXPECT_EQ(FieldContext(1).selfdual_basis(), std::vector<FieldElement>{FieldElement(1)});
    std::vector<FieldElement> b2{FieldElement(2), FieldElement(3)};
    EXPECT_EQ(FieldContext(2).selfdual_basis(), b2);
    for (unsigned n = 1; n <= 8; n++) {
        FieldContext ctx(n);
        auto basis = ctx.selfdual_basis();
        ASSERT_EQ(basis.size(), n);
        for (unsigned i = 0; i < n; i++) {
            for (unsigned j = 0; j < n; j++) {
                ASSERT_EQ(oracle::gf_trace(oracle::gf_mul(basis[i].bits, basis[j].bits, ctx.poly_bits(), n),
                                           ctx.poly_bits(), n),
                          i == j ? 1 : 0)
                    << "n=" << n;
            }
        }
        EXPECT_EQ(FieldContext(n).selfdual_basis(), basis);
    }
}

TEST(field, reducible_polynomial_rejected) {
    EXPECT_THROW(FieldContext(2, 0x5), ConfigError);
    EXPECT_THROW(FieldContext(3, 0x9), ConfigError);
    EXPECT_THROW(FieldContext(9), ConfigError);
    EXPECT_THROW(FieldContext(0), ConfigError);
    EXPECT_NO_THROW(FieldContext(3, 0xD));
    EXPECT_TRUE(FieldContext::is_irreducible(0x11B));
    EXPECT_FALSE(FieldContext::is_irreducible(0x105));
}

TEST(field, stored_basis_is_checked) {
    EXPECT_NO_THROW(FieldContext(2, 0x7, {2, 3}));
    EXPECT_THROW(FieldContext(2, 0x7, {1, 2}), ConfigError);
}

TEST(field, coordinates) {
    FieldContext ctx(2);
    EXPECT_EQ(ctx.coords(FieldElement(2)).str(), "10");
    EXPECT_EQ(ctx.coords(ctx.one()).str(), "11");
    EXPECT_EQ(ctx.coords(FieldElement(0)).str(), "00");
    EXPECT_EQ(ctx.hweight(FieldElement(0)), 0);
    EXPECT_EQ(ctx.hweight(FieldElement(2)), 1);
    EXPECT_EQ(ctx.hweight(ctx.one()), 2);
    for (unsigned n = 1; n <= 8; n++) {
        FieldContext c(n);
        oracle::Field of = oracle_field(c);
        for (FieldElement x : c.elements()) {
            ASSERT_EQ(c.index(x), of.coords(x.bits));
            ASSERT_EQ(c.from_coords(c.coords(x)), x);
            ASSERT_EQ(c.at_index(c.index(x)), x);
        }
        EXPECT_EQ(c.coords(c.one()).packed, c.size() - 1);
    }
}

TEST(field, trace_of_product_is_coordinate_dot) {
    for (unsigned n = 1; n <= 4; n++) {
        FieldContext ctx(n);
        for (FieldElement x : ctx.elements()) {
            for (FieldElement y : ctx.elements()) {
                int dot = std::popcount(ctx.index(x) & ctx.index(y));
                ASSERT_EQ(ctx.trace(ctx.mul(x, y)), dot & 1);
                int gap = ctx.hweight(x) + ctx.hweight(y) - ctx.hweight(x + y);
                ASSERT_EQ(gap, 2 * dot);
            }
        }
    }
}

TEST(field, transposition) {
    FieldContext ctx(2);
    FieldElement x = ctx.from_coords(SelfDualCoords::parse("10"));
    EXPECT_EQ(ctx.coords(ctx.transpose(x, 1, 2)).str(), "01");
    EXPECT_EQ(ctx.transpose(ctx.one(), 1, 2), ctx.one());
    for (unsigned n = 2; n <= 6; n++) {
        FieldContext c(n);
        for (FieldElement y : c.elements()) {
            for (unsigned i = 1; i <= n; i++) {
                for (unsigned j = i + 1; j <= n; j++) {
                    FieldElement t = c.transpose(y, i, j);
                    ASSERT_EQ(c.transpose(t, i, j), y);
                    ASSERT_EQ(c.hweight(t), c.hweight(y));
                    ASSERT_EQ(c.coords(t)[i], c.coords(y)[j]);
                    ASSERT_EQ(c.coords(t)[j], c.coords(y)[i]);
                }
            }
        }
    }
}

TEST(field, coords_parse) {
    EXPECT_EQ(SelfDualCoords::parse("101").packed, 5u);
    EXPECT_THROW(SelfDualCoords::parse("12"), ConfigError);
    EXPECT_THROW(SelfDualCoords::parse(""), ConfigError);
    FieldContext ctx(3);
    EXPECT_THROW(ctx.element(8), std::invalid_argument);
}
