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

#include "dpsmap/reference.h"

#include <cmath>
#include <numbers>
#include <set>

#include "dpsmap/errors.h"

namespace dpsmap {

namespace {

constexpr double kPi = std::numbers::pi;

cplx ipow(int e) {
    constexpr cplx q[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return q[((e % 4) + 4) % 4];
}

cplx cpow_int(cplx base, unsigned e) {
    cplx out = 1;
    for (unsigned i = 0; i < e; i++) {
        out *= base;
    }
    return out;
}

double binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    double r = 1;
    for (unsigned i = 1; i <= k; i++) {
        r = r * double(n - k + i) / double(i);
    }
    return r;
}

PhaseSpaceFunction blank_grid(const FieldContext &ctx, const std::string &id, const std::string &conv) {
    PhaseSpaceFunction w;
    w.n = ctx.n();
    w.s = 0;
    w.convention = conv;
    w.fiducial = "none";
    w.provenance = "reference:" + id;
    w.invariant_kernel = conv != "tomo-p1";
    w.grid.assign(size_t(ctx.size()) * ctx.size(), 0);
    return w;
}

ProjectedFunction blank_proj(unsigned n, double s, const std::string &id, const std::string &conv) {
    ProjectedFunction p;
    p.n = n;
    p.s = s;
    p.convention = conv;
    p.fiducial = "none";
    p.provenance = "reference:" + id;
    p.invariant_kernel = true;
    return p;
}

template <typename F>
void for_support(unsigned n, F &&f) {
    for (unsigned m = 0; m <= n; m++) {
        for (unsigned nn = 0; nn <= n; nn++) {
            for (unsigned k = 0; k <= n; k++) {
                if (in_support(n, m, nn, k)) {
                    f(m, nn, k);
                }
            }
        }
    }
}

}  // namespace

std::pair<ProjectedFunction, ProjectedFunction> ghz_w0_proj_terms(unsigned n) {
    ProjectedFunction comb = blank_proj(n, 0, "ghz_w0_proj", "perminv-f0");
    ProjectedFunction interference = comb;
    cplx one_plus_i_n = cpow_int({1, 1}, n);
    for_support(n, [&](unsigned m, unsigned nn, unsigned k) {
        double c = 0;
        if (nn == 0 && m == k) {
            c += 0.5 * binomial(n, k);
        }
        if (nn == n && m == n - k) {
            c += 0.5 * binomial(n, m);
        }
        comb.entries[{m, nn, k}] = c;
        double sign = ((m + nn) % 2) ? -1.0 : 1.0;
        interference.entries[{m, nn, k}] =
            double(r_factor(n, m, nn, k)) * sign * (one_plus_i_n * ipow(static_cast<int>(nn))).real();
    });
    return {comb, interference};
}

ReferenceSymbol reference_symbol(const FieldContext &ctx, const std::string &id, const ReferenceParams &params,
                                 ReferenceVariant variant) {
    const unsigned n = ctx.n();
    const double dim = double(ctx.size());
    ReferenceSymbol out;
    out.id = id;
    out.variant = variant;
    const std::string suffix = variant == ReferenceVariant::Normalized ? ":normalized" : "";

    if (id == "ghz_q_proj") {
        out.projected = true;
        out.proj = blank_proj(n, -1, id, "hermitian");
        double x = params.xi_abs;
        if (x <= 0) {
            throw ConfigError("ghz_q_proj needs xi_abs > 0");
        }
        double pre = std::pow(x, n) / (2.0 * std::pow(1.0 + x * x, n));
        for_support(n, [&](unsigned m, unsigned nn, unsigned k) {
            int e = int(n) - 2 * int(nn);
            double bracket = std::pow(x, e) + std::pow(x, -e) + 2.0 * ((m % 2) ? -1.0 : 1.0) * std::cos(kPi / 4 * e);
            out.proj.entries[{m, nn, k}] = double(r_factor(n, m, nn, k)) * pre * bracket;
        });
        out.proj.fiducial = "zeta=" + std::to_string(x) + "@45";
    } else if (id == "ghz_w0") {
        out.grid = blank_grid(ctx, id, "tomo-p1");
        cplx base = cpow_int({1, -1}, n);
        for (FieldElement a : ctx.elements()) {
            for (FieldElement b : ctx.elements()) {
                double v = 0;
                if (b.is_zero() || b == ctx.one()) {
                    v += 0.5;
                }
                v += ctx.chi(a) * (base * ipow(ctx.hweight(ctx.sqrt(b)))).real() / dim;
                out.grid.at(a, b) = v;
            }
        }
    } else if (id == "wstate_w0") {
        out.grid = blank_grid(ctx, id, "tomo-p1");
        cplx pre = cpow_int({1, -1}, n) / (dim * n);
        for (FieldElement a : ctx.elements()) {
            SelfDualCoords ac = ctx.coords(a);
            for (FieldElement b : ctx.elements()) {
                cplx v = 0;
                for (unsigned p = 1; p <= n; p++) {
                    if (b == ctx.theta(p)) {
                        v += 1.0 / n;
                    }
                    for (unsigned q = 1; q <= n; q++) {
                        if (p == q) {
                            continue;
                        }
                        FieldElement ratio = ctx.div(b + ctx.theta(p), ctx.theta(q) + ctx.theta(p));
                        double sign = ((ac[p] + ac[q]) % 2) ? -1.0 : 1.0;
                        v += pre * sign * ipow(ctx.hweight(ctx.sqrt(ratio)));
                    }
                }
                out.grid.at(a, b) = v;
            }
        }
    } else if (id == "equatorial_w0") {
        out.grid = blank_grid(ctx, id, "perminv-f0");
        for (FieldElement b : ctx.elements()) {
            out.grid.at(FieldElement(0), b) = 1.0;
        }
    } else if (id == "su2_element") {
        out.grid = blank_grid(ctx, id, "perminv-f0");
        double c = std::cos(params.theta), s = std::sin(params.theta);
        cplx e_plus = std::polar(1.0, params.phi + params.psi);
        cplx e_minus = std::conj(e_plus);
        cplx cm = cplx(0, std::sqrt(2.0) * s * std::cos(params.phi - params.psi - kPi / 4));
        cplx cp = cplx(0, std::sqrt(2.0) * s * std::cos(params.phi - params.psi + kPi / 4));
        // cos^N theta folded into each bracket.
        cplx b00 = c * e_plus + cm, b01 = c * e_minus + cp, b10 = c * e_plus - cm, b11 = c * e_minus - cp;
        for (FieldElement a : ctx.elements()) {
            for (FieldElement b : ctx.elements()) {
                unsigned m = ctx.hweight(a), nn = ctx.hweight(b), k = ctx.hweight(a + b);
                unsigned x = (m + nn - k) / 2, y = (m + k - nn) / 2, z = (nn + k - m) / 2, w = n - (m + nn + k) / 2;
                out.grid.at(a, b) = cpow_int(b00, w) * cpow_int(b01, z) * cpow_int(b10, y) * cpow_int(b11, x);
            }
        }
    } else if (id == "ghz_w0_proj") {
        out.projected = true;
        auto [comb, interference] = ghz_w0_proj_terms(n);
        out.proj = comb;
        double scale = variant == ReferenceVariant::Normalized ? 1.0 / dim : 1.0;
        for (auto &[key, v] : out.proj.entries) {
            v += scale * interference.at(key[0], key[1], key[2]);
        }
        out.note = "interference term as printed is 2^N times the value computed from the kernel";
    } else {
        throw ConfigError("unsupported reference id '" + id + "'");
    }
    if (out.projected) {
        out.proj.provenance += suffix;
    } else {
        out.grid.provenance += suffix;
    }
    return out;
}

Operator su2_group_element(const FieldContext &ctx, double phi, double theta, double psi) {
    if (ctx.n() > kMaxOperatorQubits) {
        throw ConfigError("operator construction supports N <= 6");
    }
    // e^{i phi sz} e^{i theta sx} e^{i psi sz} for one qubit.
    cplx c = std::cos(theta), is = cplx(0, std::sin(theta));
    cplx ep = std::polar(1.0, phi), eq = std::polar(1.0, psi);
    Operator single(2,
                    {ep * c * eq, ep * is * std::conj(eq), std::conj(ep) * is * eq, std::conj(ep) * c * std::conj(eq)});
    Operator out = single;
    for (unsigned i = 1; i < ctx.n(); i++) {
        out = kron(out, single);
    }
    return out;
}

ScaleFit fit_scale(const ProjectedFunction &numeric, const ProjectedFunction &reference) {
    std::set<MnkKey> keys;
    for (const auto &[k, v] : numeric.entries) {
        keys.insert(k);
    }
    for (const auto &[k, v] : reference.entries) {
        keys.insert(k);
    }
    cplx num = 0;
    double den = 0;
    for (const MnkKey &k : keys) {
        cplx r = reference.at(k[0], k[1], k[2]);
        num += std::conj(r) * numeric.at(k[0], k[1], k[2]);
        den += std::norm(r);
    }
    ScaleFit fit;
    fit.constant = den > 0 ? num / den : cplx{0, 0};
    for (const MnkKey &k : keys) {
        fit.residual = std::max(fit.residual,
                                std::abs(numeric.at(k[0], k[1], k[2]) - fit.constant * reference.at(k[0], k[1], k[2])));
    }
    return fit;
}

ScaleFit fit_scale(const PhaseSpaceFunction &numeric, const PhaseSpaceFunction &reference) {
    if (numeric.grid.size() != reference.grid.size()) {
        throw PreconditionError("grids have different sizes");
    }
    cplx num = 0;
    double den = 0;
    for (size_t i = 0; i < numeric.grid.size(); i++) {
        num += std::conj(reference.grid[i]) * numeric.grid[i];
        den += std::norm(reference.grid[i]);
    }
    ScaleFit fit;
    fit.constant = den > 0 ? num / den : cplx{0, 0};
    for (size_t i = 0; i < numeric.grid.size(); i++) {
        fit.residual = std::max(fit.residual, std::abs(numeric.grid[i] - fit.constant * reference.grid[i]));
    }
    return fit;
}

ProjectedFunction subtract(const ProjectedFunction &a, const ProjectedFunction &b) {
    ProjectedFunction out = a;
    for (const auto &[k, v] : b.entries) {
        out.entries[k] -= v;
    }
    return out;
}

}  // namespace dpsmap
