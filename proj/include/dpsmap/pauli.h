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

#ifndef DPSMAP_PAULI_H
#define DPSMAP_PAULI_H

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dpsmap/dense.h"
#include "dpsmap/field.h"

namespace dpsmap {

/// Largest qubit count for which 2^N x 2^N operators are materialized.
inline constexpr unsigned kMaxOperatorQubits = 6;

/// Exponent of i in the closed-form rotation coefficient
/// c_{alpha,xi} = (-i)^h(alpha^p xi^(p/2)), reduced mod 4.
int closed_form_quarter_turns(const FieldContext &ctx, FieldElement alpha, FieldElement xi, unsigned p);

/// alpha^T Gamma alpha mod 4 with Gamma_pq = tr(xi theta_p theta_q), coordinates
/// and matrix entries taken as 0/1 integers.
int graph_quadratic_form(const FieldContext &ctx, FieldElement xi, FieldElement alpha);

/// The rule phi(gamma, delta) fixing the phase of the displacement operators.
class PhaseConvention {
   public:
    /// phi(a, b) = (-i)^h((ab)^(p/2)), with (.)^(1/2) the field square root.
    struct Tomographic {
        unsigned p = 1;
    };
    /// phi(a, b) = +-sqrt(chi(ab)); pairs listed in `negative` take the minus root.
    struct PermInvariantSqrt {
        std::set<std::pair<uint32_t, uint32_t>> negative;
    };
    /// phi(a, b) = (-1)^(sum_i f_i(a_i, b_i)) i^(sum_i a_i b_i). f[i][2a + b] is
    /// qubit i's table; an empty list means f = 0.
    struct PermInvariantFactorized {
        std::vector<std::array<uint8_t, 4>> f;
    };
    /// phi(t, u) = (+-i)^(t^T Gamma(u/t) t), the graph-state coefficients along
    /// each ray.
    struct GraphPhase {
        int sign = +1;
    };
    /// Arbitrary unit phases, indexed gamma * 2^N + delta.
    struct Custom {
        std::vector<cplx> table;
        std::string label;
    };
    using Rule = std::variant<Tomographic, PermInvariantSqrt, PermInvariantFactorized, GraphPhase, Custom>;

    PhaseConvention() : rule_(Tomographic{1}) {}
    explicit PhaseConvention(Rule rule) : rule_(std::move(rule)) {}

    static PhaseConvention tomographic(unsigned p) { return PhaseConvention(Tomographic{p}); }
    static PhaseConvention perm_sqrt() { return PhaseConvention(PermInvariantSqrt{}); }
    static PhaseConvention perm_factorized() { return PhaseConvention(PermInvariantFactorized{}); }
    static PhaseConvention perm_factorized(std::vector<std::array<uint8_t, 4>> f) {
        return PhaseConvention(PermInvariantFactorized{std::move(f)});
    }
    static PhaseConvention graph(int sign) { return PhaseConvention(GraphPhase{sign}); }
    static PhaseConvention custom(std::vector<cplx> table, std::string label) {
        return PhaseConvention(Custom{std::move(table), std::move(label)});
    }

    /// Inverse of id() for the named rules: tomo-p<p>, perminv-sqrt,
    /// perminv-f0, perminv-f<N bits>, graph+, graph-.
    static PhaseConvention parse(const std::string &id, unsigned n);

    const Rule &rule() const { return rule_; }

    /// Throws ConfigError when the parameters are inconsistent with ctx.
    void validate(const FieldContext &ctx) const;

    cplx value(const FieldContext &ctx, FieldElement gamma, FieldElement delta) const;
    /// e with phi = i^e when the phase is a fourth root of unity.
    std::optional<int> quarter_turns(const FieldContext &ctx, FieldElement gamma, FieldElement delta) const;

    /// Short stable identifier, e.g. "tomo-p1", "perminv-f0", "graph+".
    std::string id() const;

    /// True for the families wired to rotation coefficients (phi(t,u) = c_{t,u/t}).
    bool is_tomographic_family() const;

   private:
    Rule rule_;
};

/// phi^2(g, d) == chi(g d) for every pair (exact for fourth-root phases).
bool is_hermitian_convention(const FieldContext &ctx, const PhaseConvention &conv);

/// phi(tau(g), tau(d)) == phi(g, d) for every coordinate transposition tau.
bool is_permutation_invariant(const FieldContext &ctx, const PhaseConvention &conv);

Operator build_Z(const FieldContext &ctx, FieldElement alpha);
Operator build_X(const FieldContext &ctx, FieldElement beta);
/// D(g, d) = phi(g, d) Z_g X_d.
Operator displacement(const FieldContext &ctx, const PhaseConvention &conv, FieldElement gamma, FieldElement delta);
/// <psi| D(g, d) |psi> in O(2^N).
cplx displacement_expectation(const FieldContext &ctx, const PhaseConvention &conv, const Ket &psi, FieldElement gamma,
                              FieldElement delta);

/// (|0> + zeta |1>)^{(x)N} / (1 + |zeta|^2)^(N/2).
Ket spin_coherent(const FieldContext &ctx, cplx zeta);

struct FiducialReport {
    bool ok = false;
    double min_abs_overlap = 0;
    std::vector<std::pair<FieldElement, FieldElement>> violations;
};

/// Checks |<xi|D(g,d)|xi>| > tol for all 4^N pairs.
FiducialReport check_fiducial(const FieldContext &ctx, const PhaseConvention &conv, const Ket &fiducial,
                              double tol = 1e-10);

/// Swaps qubits i and j (1-based).
Operator permutation_op(const FieldContext &ctx, unsigned i, unsigned j);

/// Average of P op P^dagger over all N! qubit permutations. N <= 5.
Operator symmetrize(const Operator &op);

/// True iff the ket is unchanged by every qubit transposition.
bool is_symmetric_state(const Ket &ket, double tol = 1e-12);

/// Number of qubits n with 2^n == dim; throws PreconditionError otherwise.
unsigned qubits_for_dim(size_t dim);

}  // namespace dpsmap

#endif
