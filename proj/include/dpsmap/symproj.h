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

#ifndef DPSMAP_SYMPROJ_H
#define DPSMAP_SYMPROJ_H

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dpsmap/field.h"
#include "dpsmap/kernel.h"
#include "dpsmap/pauli.h"

namespace dpsmap {

/// Lattice point (m, n, k) = (h(alpha), h(beta), h(alpha + beta)).
using MnkKey = std::array<unsigned, 3>;

/// Sparse function on the symmetric-measurement lattice.
struct ProjectedFunction {
    unsigned n = 0;
    double s = 0;
    std::string convention;
    std::string fiducial;
    std::string provenance;
    bool invariant_kernel = false;
    std::map<MnkKey, cplx> entries;

    cplx at(unsigned m, unsigned nn, unsigned k) const;
    cplx total() const;
};

/// N! / (x! y! z! w!) with x = (m+n-k)/2, y = (m-n+k)/2, z = (n-m+k)/2,
/// w = N - (m+n+k)/2; zero off the integral support.
uint64_t r_factor(unsigned n, int m, int nn, int k);
bool in_support(unsigned n, int m, int nn, int k);

ProjectedFunction project(const FieldContext &ctx, const PhaseSpaceFunction &w);

/// prefactor * sum W~_rho W~_S / R_mnk. Exact for symmetric S when both
/// symbols come from permutation-invariant dual kernels.
cplx symmetric_average(const ProjectedFunction &rho, const ProjectedFunction &op, double prefactor);

struct InvarianceWitness {
    unsigned i = 0, j = 0;
    FieldElement alpha, beta;
};

struct InvarianceReport {
    std::string convention;
    size_t transpositions_tested = 0;
    double max_deviation = 0;
    std::optional<InvarianceWitness> witness;
    bool invariant(double tol = 1e-12) const { return max_deviation <= tol; }
};

/// Compares Pi_ij Delta(a, b) Pi_ij against Delta(tau a, tau b) for every
/// transposition and grid point.
InvarianceReport check_kernel_invariance(const KernelSet &kernel, double tol = 1e-12);

struct HDependence {
    bool ok = true;
    double max_deviation = 0;
    std::optional<std::array<FieldElement, 4>> witness;  // alpha, beta, alpha', beta'
};

/// True iff w is constant on every (m, n, k) orbit within tol.
HDependence symbol_depends_only_on_h(const FieldContext &ctx, const PhaseSpaceFunction &w, double tol = 1e-10);

struct TheoremWitness {
    unsigned p = 0, q = 0, r = 0, s = 0;
    FieldElement alpha, beta, xi, eps;
    bool trace_condition = false;
    int before = 0;  // chi(alpha beta (alpha xi)(beta xi))
    int after = 0;   // same product after the (r, s) transposition of each factor
    bool flips() const { return trace_condition && after == -before; }
};

/// Indices are 1-based and must be distinct; requires N >= 4.
TheoremWitness theorem_witness(const FieldContext &ctx, unsigned p, unsigned q, unsigned r, unsigned s);

/// All index tuples meeting the trace condition, flipping ones first.
std::vector<TheoremWitness> theorem_witness_search(const FieldContext &ctx);
std::optional<TheoremWitness> find_theorem_witness(const FieldContext &ctx);

/// Search over Hermitian permutation-invariant phases phi = i^(tr(gd) + 2u),
/// with u a function of the (m, n, k) orbit, for phases meeting the
/// tomographic condition on every line. Solved exactly as a GF(2) system.
struct TomographicSearch {
    unsigned n = 0;
    size_t unknowns = 0;
    size_t equations = 0;
    size_t rank = 0;
    bool consistent = false;
    /// log2 of the number of solutions; meaningful when consistent.
    size_t free_bits = 0;
    std::optional<PhaseConvention> example;
};

TomographicSearch search_tomographic_invariant_phases(const FieldContext &ctx);

}  // namespace dpsmap

#endif
