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

#ifndef DPSMAP_FIELD_H
#define DPSMAP_FIELD_H

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace dpsmap {

/// An element of GF(2^N) as its coefficient bits in the polynomial basis
/// (bit j is the coefficient of x^j). Addition is XOR.
struct FieldElement {
    uint32_t bits = 0;

    constexpr FieldElement() = default;
    constexpr explicit FieldElement(uint32_t b) : bits(b) {}

    constexpr bool is_zero() const { return bits == 0; }
    friend constexpr FieldElement operator+(FieldElement a, FieldElement b) { return FieldElement(a.bits ^ b.bits); }
    friend constexpr FieldElement operator-(FieldElement a, FieldElement b) { return a + b; }
    constexpr FieldElement &operator+=(FieldElement o) {
        bits ^= o.bits;
        return *this;
    }
    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Coordinates (a_1, ..., a_N) of an element in the self-dual basis, packed
/// with a_1 as the most significant of the N bits. The packed value doubles as
/// the computational-basis index of |a_1 ... a_N>.
struct SelfDualCoords {
    uint32_t packed = 0;
    unsigned n = 0;

    /// a_i for 1 <= i <= n.
    int operator[](unsigned i) const { return static_cast<int>((packed >> (n - i)) & 1u); }
    /// Bit string "a_1a_2...a_N".
    std::string str() const;
    static SelfDualCoords parse(const std::string &bits);
    friend bool operator==(const SelfDualCoords &, const SelfDualCoords &) = default;
};

/// Arithmetic tables for GF(2^N), 1 <= N <= 8, with a verified self-dual basis.
/// Immutable after construction.
class FieldContext {
   public:
    static constexpr unsigned kMaxQubits = 8;

    /// Built-in irreducible (Conway) polynomial for n, as bits including x^n.
    static uint32_t default_polynomial(unsigned n);
    static bool is_irreducible(uint32_t poly_bits);

    explicit FieldContext(unsigned n);
    /// Throws ConfigError if n is out of range or the polynomial has the wrong
    /// degree or is reducible.
    FieldContext(unsigned n, uint32_t poly_bits);
    /// Rebuilds a context from a serialized record, checking that the stored
    /// basis is self-dual. Throws ConfigError otherwise.
    FieldContext(unsigned n, uint32_t poly_bits, const std::vector<uint32_t> &basis_bits);

    unsigned n() const { return n_; }
    uint32_t size() const { return size_; }
    uint32_t poly_bits() const { return poly_; }

    /// Validated element construction; throws PreconditionError if bits >= 2^N.
    FieldElement element(uint32_t bits) const;
    FieldElement one() const { return FieldElement(1); }
    std::vector<FieldElement> elements() const;

    FieldElement mul(FieldElement x, FieldElement y) const { return FieldElement(mul_[(x.bits << n_) | y.bits]); }
    FieldElement square(FieldElement x) const { return mul(x, x); }
    /// Multiplicative inverse; throws PreconditionError on zero.
    FieldElement inv(FieldElement x) const;
    FieldElement div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }
    FieldElement pow(FieldElement x, uint64_t e) const;
    /// x^(2^k), k taken mod N.
    FieldElement frobenius(FieldElement x, unsigned k) const;
    /// The unique square root x^(2^(N-1)).
    FieldElement sqrt(FieldElement x) const { return frobenius(x, n_ - 1); }

    /// Absolute trace sum_{i=0}^{N-1} x^(2^i), in {0, 1}.
    int trace(FieldElement x) const { return trace_[x.bits]; }
    /// Additive character (-1)^tr(x).
    int chi(FieldElement x) const { return 1 - 2 * trace_[x.bits]; }

    const std::vector<FieldElement> &selfdual_basis() const { return basis_; }
    /// theta_i, 1-based.
    FieldElement theta(unsigned i) const { return basis_.at(i - 1); }
    /// Gram matrix tr(theta_i theta_j).
    std::vector<std::vector<int>> gram() const;

    SelfDualCoords coords(FieldElement x) const { return {coord_of_[x.bits], n_}; }
    FieldElement from_coords(SelfDualCoords c) const;
    /// Packed self-dual coordinates; the Hilbert-space index of |x>.
    uint32_t index(FieldElement x) const { return coord_of_[x.bits]; }
    FieldElement at_index(uint32_t index) const { return FieldElement(elem_of_[index]); }

    /// h(x) = number of nonzero self-dual coordinates.
    int hweight(FieldElement x) const;
    /// x + eps * tr(x * eps) with eps = theta_i + theta_j: swaps coordinates i and j.
    FieldElement transpose(FieldElement x, unsigned i, unsigned j) const;

    /// Row r is the bit mask of polynomial-basis bits whose parity gives a_{r+1}.
    std::vector<uint32_t> coord_matrix() const;

   private:
    void build_tables();
    void find_basis();
    void build_coordinates();
    void check_basis() const;

    unsigned n_ = 0;
    uint32_t size_ = 0;
    uint32_t poly_ = 0;
    std::vector<uint8_t> mul_;
    std::vector<uint8_t> inv_;
    std::vector<uint8_t> trace_;
    std::vector<FieldElement> basis_;
    std::vector<uint32_t> coord_of_;
    std::vector<uint32_t> elem_of_;
};

}  // namespace dpsmap

#endif
