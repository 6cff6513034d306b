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

#ifndef DPSMAP_KERNEL_H
#define DPSMAP_KERNEL_H

#include <string>
#include <vector>

#include "dpsmap/dense.h"
#include "dpsmap/field.h"
#include "dpsmap/mub.h"
#include "dpsmap/pauli.h"

namespace dpsmap {

inline constexpr unsigned kMaxDenseKernelQubits = 4;
inline constexpr unsigned kMaxLazyKernelQubits = 6;

enum class KernelMode { DenseTable, Lazy };

/// A complex function on the 2^N x 2^N phase-space grid. Values are stored
/// row-major over (alpha, beta) in polynomial-basis order.
struct PhaseSpaceFunction {
    unsigned n = 0;
    double s = 0;
    std::string convention;
    std::string fiducial;
    std::string provenance;
    bool invariant_kernel = false;
    std::vector<cplx> grid;

    size_t side() const { return size_t(1) << n; }
    cplx &at(FieldElement alpha, FieldElement beta) { return grid[alpha.bits * side() + beta.bits]; }
    cplx at(FieldElement alpha, FieldElement beta) const { return grid[alpha.bits * side() + beta.bits]; }
    cplx total() const;
    double max_imag() const;
};

/// The operator family Delta^(s)(alpha, beta).
///
/// Built from the character-sum form
///   Delta(a, b) = 2^-N sum_{g,d} chi(a d + b g) <xi|D(g,d)|xi>^(-s) D(g, d),
/// stored as the per-monomial weights w(g, d) = <xi|D|xi>^(-s) phi(g, d) and
/// their Walsh-Hadamard transforms, so that any single operator or the full
/// forward map costs O(4^N N). DenseTable mode also materializes all 4^N operators.
class KernelSet {
   public:
    /// Throws ConfigError for size caps or, when s > 0, a fiducial with a
    /// vanishing overlap. For s < 0 vanishing overlaps contribute zero weight.
    static KernelSet build(const FieldContext &ctx, double s, const PhaseConvention &conv, const Ket &fiducial,
                           KernelMode mode = KernelMode::Lazy, std::string fiducial_label = "custom");

    /// Wraps an explicit operator table (row-major over (alpha, beta)).
    static KernelSet from_table(const FieldContext &ctx, double s, const PhaseConvention &conv,
                                std::vector<Operator> table, std::string fiducial_label);

    const FieldContext &ctx() const { return ctx_; }
    double s() const { return s_; }
    const PhaseConvention &conv() const { return conv_; }
    const Ket &fiducial() const { return fiducial_; }
    const std::string &fiducial_label() const { return fiducial_label_; }
    KernelMode mode() const { return mode_; }
    bool has_weights() const { return !weights_.empty(); }

    Operator at(FieldElement alpha, FieldElement beta) const;
    /// w(g, d); requires has_weights().
    cplx weight(FieldElement gamma, FieldElement delta) const;

    /// Delta(tau a, tau b) == Pi Delta(a, b) Pi for every qubit transposition.
    /// Equivalent to w(tau g, tau d) == w(g, d).
    bool permutation_invariant() const { return invariant_; }

   private:
    KernelSet(const FieldContext &ctx) : ctx_(ctx) {}
    Operator from_weights(uint32_t a_idx, uint32_t b_idx) const;

    FieldContext ctx_;
    double s_ = 0;
    PhaseConvention conv_;
    Ket fiducial_;
    std::string fiducial_label_;
    KernelMode mode_ = KernelMode::Lazy;
    bool invariant_ = false;
    // Coordinate-indexed: weights_[g * 2^N + d], weights_hat_[d * 2^N + x].
    std::vector<cplx> weights_;
    std::vector<cplx> weights_hat_;
    std::vector<Operator> table_;
};

KernelSet build_kernel(const FieldContext &ctx, double s, const PhaseConvention &conv, const Ket &fiducial,
                       KernelMode mode = KernelMode::Lazy);

/// W(a, b) = Tr[op Delta(a, b)], via Walsh-Hadamard transforms when the kernel
/// carries weights, else by direct traces.
PhaseSpaceFunction forward_map(const KernelSet &kernel, const Operator &op, std::string provenance = "operator");

/// W(a, b) = Tr[op Delta(a, b)] by explicit operator traces.
PhaseSpaceFunction forward_map_direct(const KernelSet &kernel, const Operator &op, std::string provenance = "operator");

/// op = 2^-N sum W(a, b) Delta^(-s)(a, b). `kernel_minus_s` must be the dual of
/// the kernel that produced w.
Operator inverse_map(const KernelSet &kernel_minus_s, const PhaseSpaceFunction &w);

struct OverlapReport {
    /// Mean of Tr[Delta^(s)(p) Delta^(-s)(p)] over points p.
    double constant = 0;
    double max_diagonal_deviation = 0;
    double max_off_diagonal = 0;
    /// 1 / constant, the factor in Tr(fg) = prefactor sum W_f W_g.
    double convolution_prefactor() const { return 1.0 / constant; }
};

OverlapReport overlap_check(const KernelSet &kernel_a, const KernelSet &kernel_b);

/// prefactor * sum W_f^(s) W_g^(-s) with prefactor = 1 / overlap_constant.
cplx trace_convolution(const PhaseSpaceFunction &wf, const PhaseSpaceFunction &wg, double overlap_constant);

/// Delta(a, b) = |a~><a~| + sum_xi |psi^xi_{b + xi a}><..| - I.
KernelSet wootters_kernel(const FieldContext &ctx, const MubFamily &mubs);

struct TomographicCheck {
    double lhs = 0;
    double rhs = 0;
    double deviation = 0;
};

/// 2^-N sum over the line of W_rho versus <psi_line|rho|psi_line>.
TomographicCheck tomographic_check(const KernelSet &kernel, const Operator &rho, const LineSpec &line,
                                   const MubFamily &mubs);
TomographicCheck tomographic_check(const PhaseSpaceFunction &w, const Operator &rho, const LineSpec &line,
                                   const MubFamily &mubs, const FieldContext &ctx);

/// D(a, b)|xi>.
Ket coherent_state(const KernelSet &kernel, FieldElement alpha, FieldElement beta);

/// Rank of the Gram matrix of the 4^N coherent-state projectors.
size_t coherent_projector_rank(const KernelSet &kernel, double tol = 1e-9);

/// In-place Walsh-Hadamard transform: v[y] <- sum_x (-1)^popcount(x & y) v[x].
void walsh_hadamard(std::vector<cplx> &v);

}  // namespace dpsmap

#endif
