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

#include "dpsmap/mub.h"

#include <cmath>

#include "dpsmap/errors.h"

namespace dpsmap {

namespace {

constexpr cplx kQuarterTurns[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

bool LineSpec::contains(const FieldContext &ctx, FieldElement alpha, FieldElement beta) const {
    if (vertical) {
        return alpha == intercept;
    }
    return beta == ctx.mul(slope, alpha) + intercept;
}

std::vector<std::pair<FieldElement, FieldElement>> LineSpec::points(const FieldContext &ctx) const {
    std::vector<std::pair<FieldElement, FieldElement>> out;
    out.reserve(ctx.size());
    for (FieldElement t : ctx.elements()) {
        if (vertical) {
            out.emplace_back(intercept, t);
        } else {
            out.emplace_back(t, ctx.mul(slope, t) + intercept);
        }
    }
    return out;
}

cplx RotationCoefficients::value(FieldElement kappa) const {
    return kQuarterTurns[quarter_turns.at(kappa.bits) & 3];
}

RotationCoefficients coeffs_closed_form(const FieldContext &ctx, FieldElement xi, unsigned p) {
    RotationCoefficients c;
    c.xi = xi;
    c.source = CoefficientSource::ClosedForm;
    c.p = p;
    c.quarter_turns.resize(ctx.size());
    for (FieldElement a : ctx.elements()) {
        c.quarter_turns[a.bits] = static_cast<uint8_t>(closed_form_quarter_turns(ctx, a, xi, p));
    }
    return c;
}

RotationCoefficients coeffs_graph(const FieldContext &ctx, FieldElement xi, int sign) {
    if (sign != 1 && sign != -1) {
        throw ConfigError("graph coefficient sign must be +1 or -1");
    }
    RotationCoefficients c;
    c.xi = xi;
    c.source = CoefficientSource::Graph;
    c.sign = sign;
    c.quarter_turns.resize(ctx.size());
    for (FieldElement a : ctx.elements()) {
        int q = graph_quadratic_form(ctx, xi, a);
        c.quarter_turns[a.bits] = static_cast<uint8_t>(((sign * q) % 4 + 4) % 4);
    }
    return c;
}

RotationCoefficients coeffs_from_phase(const FieldContext &ctx, const PhaseConvention &conv, FieldElement xi) {
    RotationCoefficients c;
    c.xi = xi;
    c.source = CoefficientSource::Verified;
    c.quarter_turns.resize(ctx.size());
    for (FieldElement t : ctx.elements()) {
        auto e = conv.quarter_turns(ctx, t, ctx.mul(xi, t));
        if (!e) {
            throw PreconditionError("phase convention is not a fourth root of unity along the ray");
        }
        c.quarter_turns[t.bits] = static_cast<uint8_t>(*e);
    }
    if (recurrence_violations(ctx, c) != 0) {
        throw PreconditionError("phase convention " + conv.id() + " does not satisfy the rotation recurrence");
    }
    return c;
}

size_t recurrence_violations(const FieldContext &ctx, const RotationCoefficients &coeffs) {
    size_t bad = coeffs.quarter_turns.at(0) % 4 == 0 ? 0 : 1;
    for (FieldElement k : ctx.elements()) {
        for (FieldElement a : ctx.elements()) {
            int lhs = coeffs.quarter_turns[(k + a).bits] - coeffs.quarter_turns[k.bits];
            int rhs = coeffs.quarter_turns[a.bits] + 2 * ctx.trace(ctx.mul(coeffs.xi, ctx.mul(a, k)));
            if (((lhs - rhs) % 4 + 4) % 4 != 0) {
                bad++;
            }
        }
    }
    return bad;
}

Ket dual_basis_state(const FieldContext &ctx, FieldElement kappa) {
    double scale = 1.0 / std::sqrt(double(ctx.size()));
    Ket out(ctx.size());
    for (FieldElement mu : ctx.elements()) {
        out[ctx.index(mu)] = scale * double(ctx.chi(ctx.mul(kappa, mu)));
    }
    return out;
}

Operator build_V(const FieldContext &ctx, const RotationCoefficients &coeffs) {
    if (ctx.n() > kMaxOperatorQubits) {
        throw ConfigError("dense operators are limited to N <= 6");
    }
    if (coeffs.quarter_turns.size() != ctx.size() || recurrence_violations(ctx, coeffs) != 0) {
        throw PreconditionError("rotation coefficients fail the recurrence");
    }
    // V_{mu,nu} = 2^-N sum_k c_k chi(k (mu + nu))
    std::vector<cplx> column_sum(ctx.size());
    for (FieldElement s : ctx.elements()) {
        cplx acc = 0;
        for (FieldElement k : ctx.elements()) {
            acc += coeffs.value(k) * double(ctx.chi(ctx.mul(k, s)));
        }
        column_sum[s.bits] = acc / double(ctx.size());
    }
    Operator v(ctx.size());
    for (FieldElement mu : ctx.elements()) {
        for (FieldElement nu : ctx.elements()) {
            v(ctx.index(mu), ctx.index(nu)) = column_sum[(mu + nu).bits];
        }
    }
    return v;
}

std::vector<Ket> line_states(const FieldContext &ctx, const RotationCoefficients &coeffs) {
    Operator v = build_V(ctx, coeffs);
    std::vector<Ket> out(ctx.size());
    for (FieldElement nu : ctx.elements()) {
        Ket psi(ctx.size());
        uint32_t col = ctx.index(nu);
        for (uint32_t r = 0; r < ctx.size(); r++) {
            psi[r] = v(r, col);
        }
        out[nu.bits] = std::move(psi);
    }
    return out;
}

double check_unbiased(const std::vector<Ket> &basis_a, const std::vector<Ket> &basis_b) {
    if (basis_a.empty() || basis_b.empty()) {
        throw PreconditionError("bases must be non-empty");
    }
    if (&basis_a == &basis_b) {
        throw PreconditionError("unbiasedness compares two different bases");
    }
    double target = 1.0 / double(basis_a.front().dim());
    double worst = 0;
    for (const Ket &a : basis_a) {
        for (const Ket &b : basis_b) {
            worst = std::max(worst, std::abs(std::norm(a.inner(b)) - target));
        }
    }
    return worst;
}

const Ket &MubFamily::state(const LineSpec &line) const {
    if (line.vertical) {
        return vertical.at(line.intercept.bits);
    }
    return sloped.at(line.slope.bits).at(line.intercept.bits);
}

std::vector<const std::vector<Ket> *> MubFamily::bases() const {
    std::vector<const std::vector<Ket> *> out{&vertical};
    for (const auto &b : sloped) {
        out.push_back(&b);
    }
    return out;
}

MubFamily mub_family(const FieldContext &ctx, const PhaseConvention &conv) {
    conv.validate(ctx);
    MubFamily family;
    family.conv = conv;
    for (FieldElement k : ctx.elements()) {
        family.vertical.push_back(dual_basis_state(ctx, k));
    }
    for (FieldElement xi : ctx.elements()) {
        family.sloped.push_back(line_states(ctx, coeffs_from_phase(ctx, conv, xi)));
    }
    return family;
}

}  // namespace dpsmap
