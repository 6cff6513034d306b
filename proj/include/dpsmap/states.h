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

#ifndef DPSMAP_STATES_H
#define DPSMAP_STATES_H

#include <random>
#include <string>

#include "dpsmap/dense.h"
#include "dpsmap/field.h"

namespace dpsmap {

/// Default fiducial parameter 0.5 exp(i pi / 4).
cplx default_zeta();

/// (|0> + |1_F>) / sqrt(2), with 1_F the field unit.
Ket ghz_state(const FieldContext &ctx);

/// N^(-1/2) sum_i |theta_i>.
Ket w_state(const FieldContext &ctx);

/// |kappa> for kappa given in self-dual coordinates.
Ket logical_state(const FieldContext &ctx, const SelfDualCoords &coords);

/// Parses "re,im", a bare real, or "mag@deg".
cplx parse_complex(const std::string &text);

/// Parses a JSON amplitude list: numbers or [re, im] pairs. The result is
/// normalized; throws ConfigError on a zero vector or a non power-of-two length.
Ket parse_amplitudes(const std::string &json_text);

/// Builds a named state: ghz, w, coherent (uses zeta), logical:<bits>.
Ket named_state(const FieldContext &ctx, const std::string &spec, cplx zeta);

/// Haar-like random pure state (normalized complex Gaussian vector).
Ket random_ket(size_t dim, std::mt19937_64 &rng);

/// Random Hermitian operator with Gaussian entries.
Operator random_hermitian(size_t dim, std::mt19937_64 &rng);

}  // namespace dpsmap

#endif
