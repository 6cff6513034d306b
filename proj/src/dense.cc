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

#include "dpsmap/dense.h"

#include <cmath>
#include <stdexcept>

#include "dpsmap/errors.h"
#include "dpsmap/simd.h"

namespace dpsmap {

Ket Ket::basis(size_t dim, size_t index) {
    Ket k(dim);
    k[index] = 1.0;
    return k;
}

double Ket::norm() const {
    return std::sqrt(simd::dotc(amps_, amps_).real());
}

Ket Ket::normalized() const {
    double n = norm();
    if (n == 0) {
        throw PreconditionError("cannot normalize the zero vector");
    }
    Ket out(*this);
    for (auto &a : out.amps_) {
        a /= n;
    }
    return out;
}

cplx Ket::inner(const Ket &other) const {
    if (other.dim() != dim()) {
        throw PreconditionError("ket dimension mismatch");
    }
    return simd::dotc(amps_, other.amps_);
}

Operator Ket::outer(const Ket &other) const {
    if (other.dim() != dim()) {
        throw PreconditionError("ket dimension mismatch");
    }
    Operator out(dim());
    for (size_t r = 0; r < dim(); r++) {
        for (size_t c = 0; c < dim(); c++) {
            out(r, c) = amps_[r] * std::conj(other.amps_[c]);
        }
    }
    return out;
}

Operator Ket::projector() const {
    return outer(*this);
}

Operator::Operator(size_t dim, std::vector<cplx> data) : dim_(dim), data_(std::move(data)) {
    if (data_.size() != dim * dim) {
        throw PreconditionError("operator data size does not match dimension");
    }
}

Operator Operator::identity(size_t dim) {
    Operator out(dim);
    for (size_t i = 0; i < dim; i++) {
        out(i, i) = 1.0;
    }
    return out;
}

Operator Operator::diagonal(std::span<const cplx> diag) {
    Operator out(diag.size());
    for (size_t i = 0; i < diag.size(); i++) {
        out(i, i) = diag[i];
    }
    return out;
}

Operator Operator::dagger() const {
    Operator out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Operator Operator::transpose() const {
    Operator out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

cplx Operator::trace() const {
    cplx t = 0;
    for (size_t i = 0; i < dim_; i++) {
        t += (*this)(i, i);
    }
    return t;
}

Operator Operator::operator*(const Operator &rhs) const {
    if (rhs.dim_ != dim_) {
        throw PreconditionError("operator dimension mismatch");
    }
    Operator out(dim_);
    for (size_t i = 0; i < dim_; i++) {
        auto dst = out.row(i);
        for (size_t k = 0; k < dim_; k++) {
            cplx a = (*this)(i, k);
            if (a != cplx{0, 0}) {
                simd::axpy(a, rhs.row(k), dst);
            }
        }
    }
    return out;
}

Ket Operator::operator*(const Ket &ket) const {
    if (ket.dim() != dim_) {
        throw PreconditionError("operator/ket dimension mismatch");
    }
    Ket out(dim_);
    for (size_t i = 0; i < dim_; i++) {
        out[i] = simd::dot(row(i), ket.amplitudes());
    }
    return out;
}

Operator Operator::operator+(const Operator &rhs) const {
    Operator out(*this);
    out += rhs;
    return out;
}

Operator Operator::operator-(const Operator &rhs) const {
    Operator out(*this);
    out -= rhs;
    return out;
}

Operator &Operator::operator+=(const Operator &rhs) {
    add_scaled(1.0, rhs);
    return *this;
}

Operator &Operator::operator-=(const Operator &rhs) {
    add_scaled(-1.0, rhs);
    return *this;
}

Operator &Operator::operator*=(cplx scale) {
    for (auto &v : data_) {
        v *= scale;
    }
    return *this;
}

void Operator::add_scaled(cplx scale, const Operator &other) {
    if (other.dim_ != dim_) {
        throw PreconditionError("operator dimension mismatch");
    }
    simd::axpy(scale, other.data_, data_);
}

bool Operator::is_hermitian(double tol) const {
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = r; c < dim_; c++) {
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool Operator::is_unitary(double tol) const {
    return max_abs_diff(dagger() * *this, identity(dim_)) <= tol;
}

cplx trace_product(const Operator &a, const Operator &b) {
    if (a.dim() != b.dim()) {
        throw PreconditionError("operator dimension mismatch");
    }
    // Tr(ab) = sum_ij a_ij b_ji
    Operator bt = b.transpose();
    return simd::dot(a.data(), bt.data());
}

cplx hs_inner(const Operator &a, const Operator &b) {
    if (a.dim() != b.dim()) {
        throw PreconditionError("operator dimension mismatch");
    }
    return simd::dotc(a.data(), b.data());
}

double max_abs_diff(const Operator &a, const Operator &b) {
    if (a.dim() != b.dim()) {
        throw PreconditionError("operator dimension mismatch");
    }
    return simd::max_abs_diff(a.data(), b.data());
}

double max_abs_diff(const Ket &a, const Ket &b) {
    if (a.dim() != b.dim()) {
        throw PreconditionError("ket dimension mismatch");
    }
    return simd::max_abs_diff(a.amplitudes(), b.amplitudes());
}

Operator kron(const Operator &a, const Operator &b) {
    size_t da = a.dim(), db = b.dim();
    Operator out(da * db);
    for (size_t r1 = 0; r1 < da; r1++) {
        for (size_t c1 = 0; c1 < da; c1++) {
            cplx s = a(r1, c1);
            for (size_t r2 = 0; r2 < db; r2++) {
                for (size_t c2 = 0; c2 < db; c2++) {
                    out(r1 * db + r2, c1 * db + c2) = s * b(r2, c2);
                }
            }
        }
    }
    return out;
}

Ket kron(const Ket &a, const Ket &b) {
    Ket out(a.dim() * b.dim());
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = 0; j < b.dim(); j++) {
            out[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return out;
}

Operator commutator(const Operator &a, const Operator &b) {
    return a * b - b * a;
}

}  // namespace dpsmap
