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

#include <bit>
#include <string>

#include "dpsmap/errors.h"

namespace dpsmap {

namespace {

int degree(uint32_t poly) {
    return poly == 0 ? -1 : 31 - std::countl_zero(poly);
}

uint32_t poly_mod(uint32_t a, uint32_t m) {
    int dm = degree(m);
    for (int d = degree(a); d >= dm; d = degree(a)) {
        a ^= m << (d - dm);
    }
    return a;
}

uint32_t clmul_mod(uint32_t a, uint32_t b, uint32_t m) {
    uint32_t acc = 0;
    for (int i = 0; b >> i; i++) {
        if ((b >> i) & 1) {
            acc ^= a << i;
        }
    }
    return poly_mod(acc, m);
}

}  // namespace

std::string SelfDualCoords::str() const {
    std::string s;
    for (unsigned i = 1; i <= n; i++) {
        s.push_back((*this)[i] ? '1' : '0');
    }
    return s;
}

SelfDualCoords SelfDualCoords::parse(const std::string &bits) {
    if (bits.empty() || bits.size() > FieldContext::kMaxQubits) {
        throw ConfigError("coordinate string must have 1..8 bits: '" + bits + "'");
    }
    SelfDualCoords c{0, static_cast<unsigned>(bits.size())};
    for (char ch : bits) {
        if (ch != '0' && ch != '1') {
            throw ConfigError("coordinate string must contain only 0/1: '" + bits + "'");
        }
        c.packed = (c.packed << 1) | static_cast<uint32_t>(ch - '0');
    }
    return c;
}

uint32_t FieldContext::default_polynomial(unsigned n) {
    // Conway polynomials C(2, n).
    static constexpr uint32_t table[] = {0, 0x3, 0x7, 0xB, 0x13, 0x25, 0x5B, 0x83, 0x11D};
    if (n < 1 || n > kMaxQubits) {
        throw ConfigError("qubit count must be in 1..8, got " + std::to_string(n));
    }
    return table[n];
}

bool FieldContext::is_irreducible(uint32_t poly_bits) {
    int d = degree(poly_bits);
    if (d < 1) {
        return false;
    }
    for (uint32_t f = 2; degree(f) <= d / 2; f++) {
        if (poly_mod(poly_bits, f) == 0) {
            return false;
        }
    }
    return true;
}

FieldContext::FieldContext(unsigned n) : FieldContext(n, default_polynomial(n)) {}

FieldContext::FieldContext(unsigned n, uint32_t poly_bits) : n_(n), size_(0), poly_(poly_bits) {
    if (n < 1 || n > kMaxQubits) {
        throw ConfigError("qubit count must be in 1..8, got " + std::to_string(n));
    }
    if (degree(poly_bits) != static_cast<int>(n)) {
        throw ConfigError("polynomial degree does not match qubit count");
    }
    if (!is_irreducible(poly_bits)) {
        throw ConfigError("polynomial is reducible over GF(2)");
    }
    size_ = 1u << n;
    build_tables();
    find_basis();
    build_coordinates();
    check_basis();
}

FieldContext::FieldContext(unsigned n, uint32_t poly_bits, const std::vector<uint32_t> &basis_bits)
    : n_(n), size_(0), poly_(poly_bits) {
    if (n < 1 || n > kMaxQubits) {
        throw ConfigError("qubit count must be in 1..8, got " + std::to_string(n));
    }
    if (degree(poly_bits) != static_cast<int>(n) || !is_irreducible(poly_bits)) {
        throw ConfigError("polynomial must be irreducible of degree n");
    }
    if (basis_bits.size() != n) {
        throw ConfigError("self-dual basis must have exactly n elements");
    }
    size_ = 1u << n;
    build_tables();
    for (uint32_t b : basis_bits) {
        if (b >= size_) {
            throw ConfigError("basis element out of range");
        }
        basis_.emplace_back(b);
    }
    check_basis();
    build_coordinates();
}

void FieldContext::build_tables() {
    mul_.assign(size_t(size_) * size_, 0);
    for (uint32_t a = 0; a < size_; a++) {
        for (uint32_t b = 0; b < size_; b++) {
            mul_[(a << n_) | b] = static_cast<uint8_t>(clmul_mod(a, b, poly_));
        }
    }
    inv_.assign(size_, 0);
    for (uint32_t a = 1; a < size_; a++) {
        for (uint32_t b = 1; b < size_; b++) {
            if (mul_[(a << n_) | b] == 1) {
                inv_[a] = static_cast<uint8_t>(b);
                break;
            }
        }
    }
    trace_.assign(size_, 0);
    for (uint32_t a = 0; a < size_; a++) {
        FieldElement x(a), t;
        for (unsigned i = 0; i < n_; i++) {
            t += x;
            x = square(x);
        }
        // The absolute trace always lands in the prime field.
        trace_[a] = static_cast<uint8_t>(t.bits);
    }
}

void FieldContext::find_basis() {
    // Lexicographically smallest increasing tuple with tr(t_i t_j) = delta_ij,
    // found by depth-first search over candidates with tr(t^2) = 1.
    std::vector<FieldElement> candidates;
    for (uint32_t a = 1; a < size_; a++) {
        if (trace(square(FieldElement(a))) == 1) {
            candidates.emplace_back(a);
        }
    }
    std::vector<FieldElement> chosen;
    auto dfs = [&](auto &self, size_t start) -> bool {
        if (chosen.size() == n_) {
            return true;
        }
        for (size_t c = start; c < candidates.size(); c++) {
            bool orthogonal = true;
            for (FieldElement t : chosen) {
                if (trace(mul(t, candidates[c])) != 0) {
                    orthogonal = false;
                    break;
                }
            }
            if (!orthogonal) {
                continue;
            }
            chosen.push_back(candidates[c]);
            if (self(self, c + 1)) {
                return true;
            }
            chosen.pop_back();
        }
        return false;
    };
    if (!dfs(dfs, 0)) {
        throw ConfigError("no self-dual basis found");
    }
    basis_ = chosen;
}

void FieldContext::check_basis() const {
    for (unsigned i = 0; i < n_; i++) {
        for (unsigned j = 0; j < n_; j++) {
            if (trace(mul(basis_[i], basis_[j])) != (i == j ? 1 : 0)) {
                throw ConfigError("basis is not self-dual");
            }
        }
    }
}

void FieldContext::build_coordinates() {
    coord_of_.assign(size_, 0);
    elem_of_.assign(size_, 0);
    for (uint32_t a = 0; a < size_; a++) {
        uint32_t packed = 0;
        for (unsigned i = 0; i < n_; i++) {
            packed = (packed << 1) | static_cast<uint32_t>(trace(mul(FieldElement(a), basis_[i])));
        }
        coord_of_[a] = packed;
    }
    for (uint32_t packed = 0; packed < size_; packed++) {
        FieldElement x;
        for (unsigned i = 0; i < n_; i++) {
            if ((packed >> (n_ - 1 - i)) & 1) {
                x += basis_[i];
            }
        }
        elem_of_[packed] = x.bits;
    }
}

FieldElement FieldContext::element(uint32_t bits) const {
    if (bits >= size_) {
        throw PreconditionError("field element out of range: " + std::to_string(bits));
    }
    return FieldElement(bits);
}

std::vector<FieldElement> FieldContext::elements() const {
    std::vector<FieldElement> out;
    out.reserve(size_);
    for (uint32_t a = 0; a < size_; a++) {
        out.emplace_back(a);
    }
    return out;
}

FieldElement FieldContext::inv(FieldElement x) const {
    if (x.is_zero()) {
        throw PreconditionError("zero has no multiplicative inverse");
    }
    return FieldElement(inv_[x.bits]);
}

FieldElement FieldContext::pow(FieldElement x, uint64_t e) const {
    FieldElement result = one();
    FieldElement base = x;
    while (e) {
        if (e & 1) {
            result = mul(result, base);
        }
        base = square(base);
        e >>= 1;
    }
    return result;
}

FieldElement FieldContext::frobenius(FieldElement x, unsigned k) const {
    for (unsigned i = 0; i < k % n_; i++) {
        x = square(x);
    }
    return x;
}

std::vector<std::vector<int>> FieldContext::gram() const {
    std::vector<std::vector<int>> g(n_, std::vector<int>(n_));
    for (unsigned i = 0; i < n_; i++) {
        for (unsigned j = 0; j < n_; j++) {
            g[i][j] = trace(mul(basis_[i], basis_[j]));
        }
    }
    return g;
}

FieldElement FieldContext::from_coords(SelfDualCoords c) const {
    if (c.n != n_ || c.packed >= size_) {
        throw PreconditionError("coordinates do not match the field size");
    }
    return FieldElement(elem_of_[c.packed]);
}

int FieldContext::hweight(FieldElement x) const {
    return std::popcount(coord_of_[x.bits]);
}

FieldElement FieldContext::transpose(FieldElement x, unsigned i, unsigned j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_ || i == j) {
        throw PreconditionError("transposition indices must be distinct and in 1..n");
    }
    FieldElement eps = basis_[i - 1] + basis_[j - 1];
    return trace(mul(x, eps)) ? x + eps : x;
}

std::vector<uint32_t> FieldContext::coord_matrix() const {
    // a_i = tr(x theta_i) is linear in the polynomial bits of x.
    std::vector<uint32_t> rows(n_, 0);
    for (unsigned i = 0; i < n_; i++) {
        for (unsigned b = 0; b < n_; b++) {
            if (trace(mul(FieldElement(1u << b), basis_[i]))) {
                rows[i] |= 1u << b;
            }
        }
    }
    return rows;
}

}  // namespace dpsmap
