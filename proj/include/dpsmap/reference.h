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

#ifndef DPSMAP_REFERENCE_H
#define DPSMAP_REFERENCE_H

#include <string>
#include <utility>
#include <vector>

#include "dpsmap/field.h"
#include "dpsmap/kernel.h"
#include "dpsmap/symproj.h"

namespace dpsmap {

/// Closed-form symbol catalog.
///   ghz_q_proj     projected s = -1 symbol of GHZ, fiducial modulus xi_abs
///   ghz_w0         s = 0 GHZ symbol, tomographic p = 1 phase
///   wstate_w0      s = 0 W-state symbol, tomographic p = 1 phase
///   equatorial_w0  s = 0 symbol of the zeta = 1 coherent state
///   su2_element    s = 0 symbol of exp(i phi Sz) exp(i theta Sx) exp(i psi Sz), f = 0 phase
///   ghz_w0_proj    projected s = 0 GHZ symbol, f = 0 phase
inline const std::vector<std::string> &reference_ids() {
    static const std::vector<std::string> ids{"ghz_q_proj",    "ghz_w0",      "wstate_w0",
                                              "equatorial_w0", "su2_element", "ghz_w0_proj"};
    return ids;
}

struct ReferenceParams {
    double xi_abs = 0.5;
    double phi = 0;
    double theta = 0;
    double psi = 0;
};

enum class ReferenceVariant { AsPrinted, Normalized };

struct ReferenceSymbol {
    std::string id;
    ReferenceVariant variant = ReferenceVariant::AsPrinted;
    bool projected = false;
    PhaseSpaceFunction grid;
    ProjectedFunction proj;
    /// Set when the printed expression and the normalized variant differ.
    std::string note;
};

ReferenceSymbol reference_symbol(const FieldContext &ctx, const std::string &id, const ReferenceParams &params = {},
                                 ReferenceVariant variant = ReferenceVariant::AsPrinted);

/// The delta-comb and interference terms of the printed projected GHZ symbol.
std::pair<ProjectedFunction, ProjectedFunction> ghz_w0_proj_terms(unsigned n);

/// exp(i phi Sz) exp(i theta Sx) exp(i psi Sz) with S = sum of Pauli matrices.
Operator su2_group_element(const FieldContext &ctx, double phi, double theta, double psi);

struct ScaleFit {
    cplx constant = 0;
    double residual = 0;
};

/// Least-squares c minimizing |numeric - c * reference|; residual is the max deviation.
ScaleFit fit_scale(const ProjectedFunction &numeric, const ProjectedFunction &reference);
ScaleFit fit_scale(const PhaseSpaceFunction &numeric, const PhaseSpaceFunction &reference);

ProjectedFunction subtract(const ProjectedFunction &a, const ProjectedFunction &b);

}  // namespace dpsmap

#endif
