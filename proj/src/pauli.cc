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

#include "dpsmap/pauli.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "dpsmap/errors.h"

namespace dpsmap {

namespace {

constexpr cplx kQuarterTurns[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int mod4(int x) {
    return ((x % 4) + 4) % 4;
}

bool is_power_of_two(unsigned p) {
    return p != 0 && (p & (p - 1)) == 0;
}

uint32_t swap_index_bits(uint32_t index, unsigned n, unsigned i, unsigned j) {
    unsigned bi = n - i, bj = n - j;
    uint32_t a = (index >> bi) & 1u, b = (index >> bj) & 1u;
    if (a != b) {
        index ^= (1u << bi) | (1u << bj);
    }
    return index;
}

}  // namespace

unsigned qubits_for_dim(size_t dim) {
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw PreconditionError("dimension is not a power of two");
    }
    return static_cast<unsigned>(std::countr_zero(dim));
}

int closed_form_quarter_turns(const FieldContext &ctx, FieldElement alpha, FieldElement xi, unsigned p) {
    if (!is_power_of_two(p) || p > (1u << (ctx.n() - 1))) {
        throw ConfigError("rotation power p must be a power of two <= 2^(N-1), got " + std::to_string(p));
    }
    unsigned j = static_cast<unsigned>(std::countr_zero(p));
    FieldElement alpha_p = ctx.frobenius(alpha, j);
    FieldElement xi_half = ctx.frobenius(xi, j + ctx.n() - 1);
    return mod4(-ctx.hweight(ctx.mul(alpha_p, xi_half)));
}

int graph_quadratic_form(const FieldContext &ctx, FieldElement xi, FieldElement alpha) {
    SelfDualCoords a = ctx.coords(alpha);
    int q = 0;
    for (unsigned p = 1; p <= ctx.n(); p++) {
        if (!a[p]) {
            continue;
        }
        for (unsigned r = 1; r <= ctx.n(); r++) {
            if (a[r]) {
                q += ctx.trace(ctx.mul(xi, ctx.mul(ctx.theta(p), ctx.theta(r))));
            }
        }
    }
    return mod4(q);
}

void PhaseConvention::validate(const FieldContext &ctx) const {
    std::visit(
        [&](const auto &r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Tomographic>) {
                if (!is_power_of_two(r.p) || r.p > (1u << (ctx.n() - 1))) {
                    throw ConfigError("tomographic power p must be a power of two <= 2^(N-1), got " +
                                      std::to_string(r.p));
                }
            } else if constexpr (std::is_same_v<T, PermInvariantSqrt>) {
                for (auto [g, d] : r.negative) {
                    if (g >= ctx.size() || d >= ctx.size()) {
                        throw ConfigError("sign assignment references an element outside the field");
                    }
                    if (g == 0 || d == 0) {
                        throw ConfigError("phi(0, d) and phi(g, 0) must equal 1");
                    }
                }
            } else if constexpr (std::is_same_v<T, PermInvariantFactorized>) {
                if (!r.f.empty() && r.f.size() != ctx.n()) {
                    throw ConfigError("factorized phase needs one f-table per qubit");
                }
                for (const auto &t : r.f) {
                    if ((t[0] | t[1] | t[2]) & 1) {
                        throw ConfigError("f_i(0, b) and f_i(a, 0) must vanish so that phi(0, d) = phi(g, 0) = 1");
                    }
                }
            } else if constexpr (std::is_same_v<T, GraphPhase>) {
                if (r.sign != 1 && r.sign != -1) {
                    throw ConfigError("graph phase sign must be +1 or -1");
                }
            } else {
                if (r.table.size() != size_t(ctx.size()) * ctx.size()) {
                    throw ConfigError("custom phase table must have 4^N entries");
                }
                for (uint32_t g = 0; g < ctx.size(); g++) {
                    for (uint32_t d = 0; d < ctx.size(); d++) {
                        cplx v = r.table[g * ctx.size() + d];
                        if (std::abs(std::abs(v) - 1.0) > 1e-12) {
                            throw ConfigError("custom phases must have unit modulus");
                        }
                        if ((g == 0 || d == 0) && std::abs(v - 1.0) > 1e-12) {
                            throw ConfigError("phi(0, d) and phi(g, 0) must equal 1");
                        }
                    }
                }
            }
        },
        rule_);
}

std::optional<int> PhaseConvention::quarter_turns(const FieldContext &ctx, FieldElement gamma,
                                                  FieldElement delta) const {
    return std::visit(
        [&](const auto &r) -> std::optional<int> {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Tomographic>) {
                if (gamma.is_zero()) {
                    return 0;
                }
                return closed_form_quarter_turns(ctx, gamma, ctx.div(delta, gamma), r.p);
            } else if constexpr (std::is_same_v<T, PermInvariantSqrt>) {
                int e = ctx.trace(ctx.mul(gamma, delta));
                if (r.negative.count({gamma.bits, delta.bits})) {
                    e += 2;
                }
                return mod4(e);
            } else if constexpr (std::is_same_v<T, PermInvariantFactorized>) {
                SelfDualCoords a = ctx.coords(gamma), b = ctx.coords(delta);
                int e = 0;
                for (unsigned i = 1; i <= ctx.n(); i++) {
                    e += a[i] * b[i];
                    if (!r.f.empty()) {
                        e += 2 * (r.f[i - 1][2 * a[i] + b[i]] & 1);
                    }
                }
                return mod4(e);
            } else if constexpr (std::is_same_v<T, GraphPhase>) {
                if (gamma.is_zero()) {
                    return 0;
                }
                int q = graph_quadratic_form(ctx, ctx.div(delta, gamma), gamma);
                return mod4(r.sign * q);
            } else {
                cplx v = r.table[gamma.bits * ctx.size() + delta.bits];
                for (int e = 0; e < 4; e++) {
                    if (v == kQuarterTurns[e]) {
                        return e;
                    }
                }
                return std::nullopt;
            }
        },
        rule_);
}

cplx PhaseConvention::value(const FieldContext &ctx, FieldElement gamma, FieldElement delta) const {
    if (const auto *c = std::get_if<Custom>(&rule_)) {
        return c->table[gamma.bits * ctx.size() + delta.bits];
    }
    return kQuarterTurns[*quarter_turns(ctx, gamma, delta)];
}

std::string PhaseConvention::id() const {
    return std::visit(
        [](const auto &r) -> std::string {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Tomographic>) {
                return "tomo-p" + std::to_string(r.p);
            } else if constexpr (std::is_same_v<T, PermInvariantSqrt>) {
                return r.negative.empty() ? "perminv-sqrt" : "perminv-sqrt-custom";
            } else if constexpr (std::is_same_v<T, PermInvariantFactorized>) {
                bool zero = std::all_of(r.f.begin(), r.f.end(), [](const auto &t) { return t[3] == 0; });
                if (zero) {
                    return "perminv-f0";
                }
                std::string s = "perminv-f";
                for (const auto &t : r.f) {
                    s.push_back(t[3] ? '1' : '0');
                }
                return s;
            } else if constexpr (std::is_same_v<T, GraphPhase>) {
                return r.sign > 0 ? "graph+" : "graph-";
            } else {
                return "custom:" + r.label;
            }
        },
        rule_);
}

PhaseConvention PhaseConvention::parse(const std::string &id, unsigned n) {
    if (id.rfind("tomo-p", 0) == 0) {
        try {
            size_t used = 0;
            unsigned long p = std::stoul(id.substr(6), &used);
            if (used == id.size() - 6) {
                return tomographic(static_cast<unsigned>(p));
            }
        } catch (const std::exception &) {
        }
    } else if (id == "perminv-sqrt") {
        return perm_sqrt();
    } else if (id == "perminv-f0") {
        return perm_factorized();
    } else if (id.rfind("perminv-f", 0) == 0 && id.size() == 9 + n) {
        std::vector<std::array<uint8_t, 4>> f;
        for (char c : id.substr(9)) {
            if (c != '0' && c != '1') {
                throw ConfigError("unknown phase convention '" + id + "'");
            }
            f.push_back({0, 0, 0, static_cast<uint8_t>(c - '0')});
        }
        return perm_factorized(std::move(f));
    } else if (id == "graph+") {
        return graph(+1);
    } else if (id == "graph-") {
        return graph(-1);
    }
    throw ConfigError("unknown phase convention '" + id +
                      "' (expected tomo-p<p>, perminv-sqrt, perminv-f0, perminv-f<bits>, graph+, graph-)");
}

bool PhaseConvention::is_tomographic_family() const {
    return std::holds_alternative<Tomographic>(rule_) || std::holds_alternative<GraphPhase>(rule_);
}

bool is_hermitian_convention(const FieldContext &ctx, const PhaseConvention &conv) {
    for (FieldElement g : ctx.elements()) {
        for (FieldElement d : ctx.elements()) {
            auto e = conv.quarter_turns(ctx, g, d);
            int chi = ctx.chi(ctx.mul(g, d));
            if (e) {
                if (mod4(2 * *e) != (chi == 1 ? 0 : 2)) {
                    return false;
                }
            } else {
                cplx v = conv.value(ctx, g, d);
                if (std::abs(v * v - double(chi)) > 1e-12) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_permutation_invariant(const FieldContext &ctx, const PhaseConvention &conv) {
    for (unsigned i = 1; i <= ctx.n(); i++) {
        for (unsigned j = i + 1; j <= ctx.n(); j++) {
            for (FieldElement g : ctx.elements()) {
                for (FieldElement d : ctx.elements()) {
                    if (conv.value(ctx, g, d) != conv.value(ctx, ctx.transpose(g, i, j), ctx.transpose(d, i, j))) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

namespace {

void check_operator_size(const FieldContext &ctx) {
    if (ctx.n() > kMaxOperatorQubits) {
        throw ConfigError("dense operators are limited to N <= " + std::to_string(kMaxOperatorQubits));
    }
}

}  // namespace

Operator build_Z(const FieldContext &ctx, FieldElement alpha) {
    check_operator_size(ctx);
    std::vector<cplx> diag(ctx.size());
    for (FieldElement k : ctx.elements()) {
        diag[ctx.index(k)] = double(ctx.chi(ctx.mul(alpha, k)));
    }
    return Operator::diagonal(diag);
}

Operator build_X(const FieldContext &ctx, FieldElement beta) {
    check_operator_size(ctx);
    Operator out(ctx.size());
    for (FieldElement k : ctx.elements()) {
        out(ctx.index(k + beta), ctx.index(k)) = 1.0;
    }
    return out;
}

Operator displacement(const FieldContext &ctx, const PhaseConvention &conv, FieldElement gamma, FieldElement delta) {
    check_operator_size(ctx);
    cplx phi = conv.value(ctx, gamma, delta);
    Operator out(ctx.size());
    for (FieldElement k : ctx.elements()) {
        FieldElement target = k + delta;
        out(ctx.index(target), ctx.index(k)) = phi * double(ctx.chi(ctx.mul(gamma, target)));
    }
    return out;
}

cplx displacement_expectation(const FieldContext &ctx, const PhaseConvention &conv, const Ket &psi, FieldElement gamma,
                              FieldElement delta) {
    if (psi.dim() != ctx.size()) {
        throw PreconditionError("ket dimension does not match the field");
    }
    cplx acc = 0;
    for (FieldElement k : ctx.elements()) {
        FieldElement target = k + delta;
        acc += std::conj(psi[ctx.index(target)]) * double(ctx.chi(ctx.mul(gamma, target))) * psi[ctx.index(k)];
    }
    return conv.value(ctx, gamma, delta) * acc;
}

Ket spin_coherent(const FieldContext &ctx, cplx zeta) {
    check_operator_size(ctx);
    double scale = 1.0 / std::sqrt(1.0 + std::norm(zeta));
    Ket out(ctx.size());
    for (uint32_t idx = 0; idx < ctx.size(); idx++) {
        cplx amp = 1.0;
        for (unsigned q = 0; q < ctx.n(); q++) {
            amp *= ((idx >> q) & 1u) ? zeta * scale : cplx(scale);
        }
        out[idx] = amp;
    }
    return out;
}

FiducialReport check_fiducial(const FieldContext &ctx, const PhaseConvention &conv, const Ket &fiducial, double tol) {
    FiducialReport report;
    report.min_abs_overlap = INFINITY;
    for (FieldElement g : ctx.elements()) {
        for (FieldElement d : ctx.elements()) {
            double m = std::abs(displacement_expectation(ctx, conv, fiducial, g, d));
            report.min_abs_overlap = std::min(report.min_abs_overlap, m);
            if (m <= tol) {
                report.violations.emplace_back(g, d);
            }
        }
    }
    report.ok = report.violations.empty();
    return report;
}

Operator permutation_op(const FieldContext &ctx, unsigned i, unsigned j) {
    check_operator_size(ctx);
    if (i < 1 || j < 1 || i > ctx.n() || j > ctx.n() || i == j) {
        throw PreconditionError("transposition indices must be distinct and in 1..n");
    }
    Operator out(ctx.size());
    for (uint32_t idx = 0; idx < ctx.size(); idx++) {
        out(swap_index_bits(idx, ctx.n(), i, j), idx) = 1.0;
    }
    return out;
}

Operator symmetrize(const Operator &op) {
    unsigned n = qubits_for_dim(op.dim());
    if (n > 5) {
        throw PreconditionError("symmetrize supports N <= 5");
    }
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<uint32_t> map(op.dim());
    Operator out(op.dim());
    size_t count = 0;
    do {
        for (uint32_t idx = 0; idx < op.dim(); idx++) {
            uint32_t m = 0;
            for (unsigned q = 0; q < n; q++) {
                m |= ((idx >> q) & 1u) << perm[q];
            }
            map[idx] = m;
        }
        for (size_t r = 0; r < op.dim(); r++) {
            for (size_t c = 0; c < op.dim(); c++) {
                out(map[r], map[c]) += op(r, c);
            }
        }
        count++;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out *= 1.0 / double(count);
    return out;
}

bool is_symmetric_state(const Ket &ket, double tol) {
    unsigned n = qubits_for_dim(ket.dim());
    for (unsigned i = 1; i < n; i++) {
        for (uint32_t idx = 0; idx < ket.dim(); idx++) {
            if (std::abs(ket[idx] - ket[swap_index_bits(idx, n, i, i + 1)]) > tol) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace dpsmap
