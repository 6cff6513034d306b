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

#include "dpsmap/states.h"

#include <cmath>
#include <numbers>

#include "dpsmap/errors.h"
#include "dpsmap/pauli.h"
#include "json.hpp"

namespace dpsmap {

cplx default_zeta() {
    return std::polar(0.5, std::numbers::pi / 4);
}

Ket ghz_state(const FieldContext &ctx) {
    Ket k(ctx.size());
    k[ctx.index(FieldElement(0))] = 1.0 / std::sqrt(2.0);
    k[ctx.index(ctx.one())] = 1.0 / std::sqrt(2.0);
    return k;
}

Ket w_state(const FieldContext &ctx) {
    Ket k(ctx.size());
    for (unsigned i = 1; i <= ctx.n(); i++) {
        k[ctx.index(ctx.theta(i))] = 1.0 / std::sqrt(double(ctx.n()));
    }
    return k;
}

Ket logical_state(const FieldContext &ctx, const SelfDualCoords &coords) {
    if (coords.n != ctx.n()) {
        throw ConfigError("logical state needs " + std::to_string(ctx.n()) + " coordinate bits");
    }
    return Ket::basis(ctx.size(), coords.packed);
}

cplx parse_complex(const std::string &text) {
    auto number = [&](const std::string &part) {
        size_t used = 0;
        double v;
        try {
            v = std::stod(part, &used);
        } catch (const std::exception &) {
            throw ConfigError("cannot parse complex number '" + text + "'");
        }
        if (used != part.size()) {
            throw ConfigError("cannot parse complex number '" + text + "'");
        }
        return v;
    };
    if (auto at = text.find('@'); at != std::string::npos) {
        double mag = number(text.substr(0, at));
        double deg = number(text.substr(at + 1));
        return std::polar(mag, deg * std::numbers::pi / 180.0);
    }
    if (auto comma = text.find(','); comma != std::string::npos) {
        return {number(text.substr(0, comma)), number(text.substr(comma + 1))};
    }
    return number(text);
}

Ket parse_amplitudes(const std::string &json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("invalid amplitude JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty()) {
        throw ConfigError("amplitude list must be a non-empty JSON array");
    }
    std::vector<cplx> amps;
    for (const auto &v : j) {
        if (v.is_number()) {
            amps.emplace_back(v.get<double>(), 0.0);
        } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
            amps.emplace_back(v[0].get<double>(), v[1].get<double>());
        } else {
            throw ConfigError("amplitudes must be numbers or [re, im] pairs");
        }
    }
    if ((amps.size() & (amps.size() - 1)) != 0 || amps.size() < 2) {
        throw ConfigError("amplitude count must be a power of two >= 2");
    }
    Ket k(std::move(amps));
    if (k.norm() == 0) {
        throw ConfigError("amplitude list is the zero vector");
    }
    return k.normalized();
}

Ket named_state(const FieldContext &ctx, const std::string &spec, cplx zeta) {
    if (spec == "ghz") {
        return ghz_state(ctx);
    }
    if (spec == "w") {
        return w_state(ctx);
    }
    if (spec == "coherent") {
        return spin_coherent(ctx, zeta);
    }
    auto wrapped = [&](const std::string &name) {
        return spec.size() > name.size() + 2 && spec.rfind(name + "(", 0) == 0 && spec.back() == ')';
    };
    if (wrapped("coherent")) {
        return spin_coherent(ctx, parse_complex(spec.substr(9, spec.size() - 10)));
    }
    const bool call_form = wrapped("logical");
    if (call_form || spec.rfind("logical:", 0) == 0) {
        SelfDualCoords c;
        try {
            c = SelfDualCoords::parse(call_form ? spec.substr(8, spec.size() - 9) : spec.substr(8));
        } catch (const std::invalid_argument &e) {
            throw ConfigError(e.what());
        }
        return logical_state(ctx, c);
    }
    throw ConfigError("unknown state '" + spec + "' (expected ghz, w, coherent, coherent(<zeta>), logical:<bits>, logical(<bits>))");
}

Ket random_ket(size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Ket k(dim);
    for (size_t i = 0; i < dim; i++) {
        k[i] = {g(rng), g(rng)};
    }
    return k.normalized();
}

Operator random_hermitian(size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Operator op(dim);
    for (size_t r = 0; r < dim; r++) {
        op(r, r) = g(rng);
        for (size_t c = r + 1; c < dim; c++) {
            cplx v(g(rng), g(rng));
            op(r, c) = v;
            op(c, r) = std::conj(v);
        }
    }
    return op;
}

}  // namespace dpsmap
