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

#ifndef DPSMAP_EXPORT_H
#define DPSMAP_EXPORT_H

#include <string>

#include "dpsmap/field.h"
#include "dpsmap/kernel.h"
#include "dpsmap/mub.h"
#include "dpsmap/symproj.h"
#include "json.hpp"

namespace dpsmap {

inline constexpr const char *kVersion = "0.1.0";

/// {n, poly_bits, selfdual_basis}.
nlohmann::json field_json(const FieldContext &ctx);
FieldContext field_from_json(const nlohmann::json &j);

/// Metadata block shared by all exports; `extra` is merged in (config, constants).
nlohmann::json function_metadata(const PhaseSpaceFunction &w, const nlohmann::json &extra);
nlohmann::json function_metadata(const ProjectedFunction &p, const nlohmann::json &extra);

/// Columns a_coords, b_coords, re, im; metadata as leading '#' lines.
std::string format_csv(const FieldContext &ctx, const PhaseSpaceFunction &w, const nlohmann::json &extra = {});
std::string format_json(const FieldContext &ctx, const PhaseSpaceFunction &w, const nlohmann::json &extra = {});
/// Gnuplot matrix: one block per alpha, columns alpha-index beta-index re im.
std::string format_dat(const FieldContext &ctx, const PhaseSpaceFunction &w, const nlohmann::json &extra = {});

/// Columns m, n, k, re, im, R_mnk in lexicographic order.
std::string format_csv(const ProjectedFunction &p, const nlohmann::json &extra = {});
std::string format_json(const ProjectedFunction &p, const nlohmann::json &extra = {});
std::string format_dat(const ProjectedFunction &p, const nlohmann::json &extra = {});

/// JSON array of bases, each an array of amplitude lists of [re, im] pairs.
/// The vertical basis comes first, then slopes in polynomial order.
nlohmann::json mub_json(const FieldContext &ctx, const MubFamily &family);

struct DiffReport {
    std::string kind;  // "grid" or "projected"
    size_t compared = 0;
    double max_deviation = 0;
    double mean_deviation = 0;
};

/// Compares two JSON exports of the same kind.
DiffReport diff_exports(const nlohmann::json &a, const nlohmann::json &b);

}  // namespace dpsmap

#endif
