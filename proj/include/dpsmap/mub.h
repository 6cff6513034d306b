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

#ifndef DPSMAP_MUB_H
#define DPSMAP_MUB_H

#include <cstdint>
#include <utility>
#include <vector>

#include "dpsmap/dense.h"
#include "dpsmap/field.h"
#include "dpsmap/pauli.h"

namespace dpsmap {

/// A line beta = slope * alpha + intercept, or the vertical line alpha = intercept.
struct LineSpec {
    bool vertical = false;
    FieldElement slope;
    FieldElement intercept;

    static LineSpec sloped(FieldElement slope, FieldElement intercept) { return {false, slope, intercept}; }
    static LineSpec vertical_at(FieldElement alpha) { return {true, FieldElement(), alpha}; }

    bool contains(const FieldContext &ctx, FieldElement alpha, FieldElement beta) const;
    /// The 2^N points on the line, ordered by the free coordinate.
    std::vector<std::pair<FieldElement, FieldElement>> points(const FieldContext &ctx) const;
};

enum class CoefficientSource { ClosedForm, Graph, Verified };

/// c_{kappa,xi} = i^quarter_turns[kappa.bits], for a fixed slope xi.
struct RotationCoefficients {
    FieldElement xi;
    std::vector<uint8_t> quarter_turns;
    CoefficientSource source = CoefficientSource::Verified;
    unsigned p = 0;
    int sign = 0;

    cplx value(FieldElement kappa) const;
};

/// c_{a,xi} = (-i)^h(a^p xi^(p/2)), p a power of two <= 2^(N-1).
RotationCoefficients coeffs_closed_form(const FieldContext &ctx, FieldElement xi, unsigned p);
/// c_{a,xi} = (sign i)^(a^T Gamma a), Gamma_pq = tr(xi theta_p theta_q).
RotationCoefficients coeffs_graph(const FieldContext &ctx, FieldElement xi, int sign);
/// c_{t,xi} = phi(t, xi t) read off a tomographic-family phase convention.
RotationCoefficients coeffs_from_phase(const FieldContext &ctx, const PhaseConvention &conv, FieldElement xi);

/// Number of (kappa, alpha) pairs violating c_{k+a} c_k^* = chi(xi a k) c_a,
/// plus one if c_0 != 1. Exact integer arithmetic on the exponents.
size_t recurrence_violations(const FieldContext &ctx, const RotationCoefficients &coeffs);

/// |k~> = 2^(-N/2) sum_mu chi(k mu) |mu>, the X_b eigenstate with eigenvalue chi(b k).
Ket dual_basis_state(const FieldContext &ctx, FieldElement kappa);

/// V_xi = sum_k c_k |k~><k~|. Throws PreconditionError if the coefficients
/// fail the recurrence.
Operator build_V(const FieldContext &ctx, const RotationCoefficients &coeffs);

/// |psi_nu^xi> = V_xi X_nu |0>, indexed by nu.bits.
std::vector<Ket> line_states(const FieldContext &ctx, const RotationCoefficients &coeffs);

/// max over pairs of | |<a|b>|^2 - 1/dim |.
double check_unbiased(const std::vector<Ket> &basis_a, const std::vector<Ket> &basis_b);

/// The 2^N + 1 bases associated with the lines: the dual basis for the
/// vertical direction and V_xi-rotated bases for every slope xi.
struct MubFamily {
    PhaseConvention conv;
    std::vector<Ket> vertical;
    std::vector<std::vector<Ket>> sloped;

    const Ket &state(const LineSpec &line) const;
    /// Every basis, vertical first, then slopes in element order.
    std::vector<const std::vector<Ket> *> bases() const;
};

/// Builds the family whose rotation coefficients are wired to the convention.
/// Throws PreconditionError when the convention violates the rotation recurrence
/// along some ray.
MubFamily mub_family(const FieldContext &ctx, const PhaseConvention &conv);

}  // namespace dpsmap

#endif
