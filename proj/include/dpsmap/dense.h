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

#ifndef DPSMAP_DENSE_H
#define DPSMAP_DENSE_H

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace dpsmap {

using cplx = std::complex<double>;

class Operator;

/// A state vector in the 2^N-dimensional qubit space. Index i holds the
/// amplitude of |k_1 ... k_N>, with k_1 the most significant bit of i.
class Ket {
   public:
    Ket() = default;
    explicit Ket(size_t dim) : amps_(dim, cplx{0, 0}) {}
    explicit Ket(std::vector<cplx> amps) : amps_(std::move(amps)) {}

    static Ket basis(size_t dim, size_t index);

    size_t dim() const { return amps_.size(); }
    cplx &operator[](size_t i) { return amps_[i]; }
    const cplx &operator[](size_t i) const { return amps_[i]; }
    std::span<const cplx> amplitudes() const { return amps_; }
    std::span<cplx> amplitudes() { return amps_; }

    double norm() const;
    Ket normalized() const;
    /// <this|other>
    cplx inner(const Ket &other) const;
    /// |this><other|
    Operator outer(const Ket &other) const;
    /// |this><this|
    Operator projector() const;

   private:
    std::vector<cplx> amps_;
};

/// Dense square complex matrix, row-major.
class Operator {
   public:
    Operator() = default;
    explicit Operator(size_t dim) : dim_(dim), data_(dim * dim, cplx{0, 0}) {}
    Operator(size_t dim, std::vector<cplx> data);

    static Operator identity(size_t dim);
    static Operator diagonal(std::span<const cplx> diag);

    size_t dim() const { return dim_; }
    cplx &operator()(size_t r, size_t c) { return data_[r * dim_ + c]; }
    const cplx &operator()(size_t r, size_t c) const { return data_[r * dim_ + c]; }
    std::span<const cplx> data() const { return data_; }
    std::span<cplx> data() { return data_; }
    std::span<const cplx> row(size_t r) const { return std::span<const cplx>(data_).subspan(r * dim_, dim_); }
    std::span<cplx> row(size_t r) { return std::span<cplx>(data_).subspan(r * dim_, dim_); }

    Operator dagger() const;
    Operator transpose() const;
    cplx trace() const;

    Operator operator*(const Operator &rhs) const;
    Ket operator*(const Ket &ket) const;
    Operator operator+(const Operator &rhs) const;
    Operator operator-(const Operator &rhs) const;
    Operator &operator+=(const Operator &rhs);
    Operator &operator-=(const Operator &rhs);
    Operator &operator*=(cplx scale);
    friend Operator operator*(cplx scale, Operator op) { return op *= scale; }

    /// this += scale * other
    void add_scaled(cplx scale, const Operator &other);

    bool is_hermitian(double tol) const;
    bool is_unitary(double tol) const;

   private:
    size_t dim_ = 0;
    std::vector<cplx> data_;
};

/// Tr(a * b) without forming the product.
cplx trace_product(const Operator &a, const Operator &b);
/// Tr(a^dagger * b), the Hilbert-Schmidt inner product.
cplx hs_inner(const Operator &a, const Operator &b);
/// max |a_ij - b_ij|
double max_abs_diff(const Operator &a, const Operator &b);
double max_abs_diff(const Ket &a, const Ket &b);
/// a (x) b, with a acting on the more significant index bits.
Operator kron(const Operator &a, const Operator &b);
Ket kron(const Ket &a, const Ket &b);
Operator commutator(const Operator &a, const Operator &b);

}  // namespace dpsmap

#endif
