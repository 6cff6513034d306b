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

#include "dpsmap/kernel.h"

#include <Eigen/Dense>
#include <bit>
#include <cmath>

#include "dpsmap/errors.h"
#include "dpsmap/parallel.h"
#include "dpsmap/simd.h"

namespace dpsmap {

namespace {

inline double parity_sign(uint32_t x) {
    return (std::popcount(x) & 1) ? -1.0 : 1.0;
}

uint32_t swap_index_bits(uint32_t index, unsigned n, unsigned i, unsigned j) {
    unsigned bi = n - i, bj = n - j;
    if (((index >> bi) ^ (index >> bj)) & 1u) {
        index ^= (1u << bi) | (1u << bj);
    }
    return index;
}

cplx overlap_power(cplx overlap, double s) {
    if (s == 0) {
        return 1.0;
    }
    if (s == -1) {
        return overlap;
    }
    if (s == 1) {
        return 1.0 / overlap;
    }
    if (std::abs(overlap) == 0) {
        return 0.0;
    }
    // Principal branch.
    return std::exp(-s * std::log(overlap));
}

void check_dual_pair(double s_a, double s_b) {
    if (std::abs(s_a + s_b) > 1e-12) {
        throw PreconditionError("kernels are not a dual pair (s and -s)");
    }
}

}  // namespace

void walsh_hadamard(std::vector<cplx> &v) {
    size_t n = v.size();
    for (size_t h = 1; h < n; h <<= 1) {
        for (size_t i = 0; i < n; i += h << 1) {
            for (size_t j = i; j < i + h; j++) {
                cplx x = v[j], y = v[j + h];
                v[j] = x + y;
                v[j + h] = x - y;
            }
        }
    }
}

cplx PhaseSpaceFunction::total() const {
    cplx acc = 0, comp = 0;
    for (const cplx &v : grid) {
        // Neumaier summation on each component.
        cplx t = acc + v;
        double cr = std::abs(acc.real()) >= std::abs(v.real()) ? (acc.real() - t.real()) + v.real()
                                                               : (v.real() - t.real()) + acc.real();
        double ci = std::abs(acc.imag()) >= std::abs(v.imag()) ? (acc.imag() - t.imag()) + v.imag()
                                                               : (v.imag() - t.imag()) + acc.imag();
        comp += cplx(cr, ci);
        acc = t;
    }
    return acc + comp;
}

double PhaseSpaceFunction::max_imag() const {
    double m = 0;
    for (const cplx &v : grid) {
        m = std::max(m, std::abs(v.imag()));
    }
    return m;
}

KernelSet KernelSet::build(const FieldContext &ctx, double s, const PhaseConvention &conv, const Ket &fiducial,
                           KernelMode mode, std::string fiducial_label) {
    unsigned cap = mode == KernelMode::DenseTable ? kMaxDenseKernelQubits : kMaxLazyKernelQubits;
    if (ctx.n() > cap) {
        throw ConfigError("kernel mode supports N <= " + std::to_string(cap));
    }
    if (fiducial.dim() != ctx.size()) {
        throw PreconditionError("fiducial dimension does not match the field");
    }
    conv.validate(ctx);

    KernelSet k(ctx);
    k.s_ = s;
    k.conv_ = conv;
    k.fiducial_ = fiducial;
    k.fiducial_label_ = std::move(fiducial_label);
    k.mode_ = mode;

    const uint32_t size = ctx.size();
    k.weights_.assign(size_t(size) * size, 0);
    for (FieldElement g : ctx.elements()) {
        for (FieldElement d : ctx.elements()) {
            cplx overlap = displacement_expectation(ctx, conv, fiducial, g, d);
            if (s > 0 && std::abs(overlap) <= 1e-10) {
                throw ConfigError("fiducial has a vanishing overlap with D(" + ctx.coords(g).str() + ", " +
                                  ctx.coords(d).str() + "); s > 0 kernels are undefined");
            }
            k.weights_[size_t(ctx.index(g)) * size + ctx.index(d)] = overlap_power(overlap, s) * conv.value(ctx, g, d);
        }
    }

    k.weights_hat_.assign(size_t(size) * size, 0);
    std::vector<cplx> column(size);
    for (uint32_t d = 0; d < size; d++) {
        for (uint32_t g = 0; g < size; g++) {
            column[g] = k.weights_[size_t(g) * size + d];
        }
        walsh_hadamard(column);
        std::copy(column.begin(), column.end(), k.weights_hat_.begin() + size_t(d) * size);
    }

    double scale = 0;
    for (const cplx &w : k.weights_) {
        scale = std::max(scale, std::abs(w));
    }
    k.invariant_ = true;
    for (unsigned i = 1; i <= ctx.n() && k.invariant_; i++) {
        for (unsigned j = i + 1; j <= ctx.n() && k.invariant_; j++) {
            for (uint32_t g = 0; g < size && k.invariant_; g++) {
                for (uint32_t d = 0; d < size; d++) {
                    cplx a = k.weights_[size_t(g) * size + d];
                    cplx b = k.weights_[size_t(swap_index_bits(g, ctx.n(), i, j)) * size +
                                        swap_index_bits(d, ctx.n(), i, j)];
                    if (std::abs(a - b) > 1e-12 * std::max(1.0, scale)) {
                        k.invariant_ = false;
                        break;
                    }
                }
            }
        }
    }

    if (mode == KernelMode::DenseTable) {
        k.table_.resize(size_t(size) * size);
        parallel_for(k.table_.size(), [&](size_t p) {
            FieldElement a(static_cast<uint32_t>(p / size)), b(static_cast<uint32_t>(p % size));
            k.table_[p] = k.from_weights(ctx.index(a), ctx.index(b));
        });
    }
    return k;
}

KernelSet KernelSet::from_table(const FieldContext &ctx, double s, const PhaseConvention &conv,
                                std::vector<Operator> table, std::string fiducial_label) {
    if (ctx.n() > kMaxDenseKernelQubits) {
        throw ConfigError("explicit kernel tables support N <= 4");
    }
    const uint32_t size = ctx.size();
    if (table.size() != size_t(size) * size) {
        throw PreconditionError("kernel table must hold 4^N operators");
    }
    KernelSet k(ctx);
    k.s_ = s;
    k.conv_ = conv;
    k.fiducial_label_ = std::move(fiducial_label);
    k.mode_ = KernelMode::DenseTable;
    k.table_ = std::move(table);
    k.invariant_ = true;
    for (unsigned i = 1; i <= ctx.n() && k.invariant_; i++) {
        for (unsigned j = i + 1; j <= ctx.n() && k.invariant_; j++) {
            for (FieldElement a : ctx.elements()) {
                for (FieldElement b : ctx.elements()) {
                    const Operator &lhs = k.table_[a.bits * size + b.bits];
                    const Operator &rhs = k.table_[ctx.transpose(a, i, j).bits * size + ctx.transpose(b, i, j).bits];
                    for (uint32_t r = 0; r < size && k.invariant_; r++) {
                        for (uint32_t c = 0; c < size; c++) {
                            if (std::abs(lhs(r, c) - rhs(swap_index_bits(r, ctx.n(), i, j),
                                                         swap_index_bits(c, ctx.n(), i, j))) > 1e-12) {
                                k.invariant_ = false;
                                break;
                            }
                        }
                    }
                }
            }
        }
    }
    return k;
}

Operator KernelSet::from_weights(uint32_t a_idx, uint32_t b_idx) const {
    const uint32_t size = ctx_.size();
    const double norm = 1.0 / double(size);
    Operator out(size);
    // Delta_{k^d, k} = 2^-N (-1)^(a.d) what_d(b ^ k ^ d)
    for (uint32_t d = 0; d < size; d++) {
        double sign = parity_sign(a_idx & d) * norm;
        const cplx *hat = weights_hat_.data() + size_t(d) * size;
        for (uint32_t kk = 0; kk < size; kk++) {
            uint32_t mu = kk ^ d;
            out(mu, kk) = sign * hat[b_idx ^ mu];
        }
    }
    return out;
}

Operator KernelSet::at(FieldElement alpha, FieldElement beta) const {
    if (!table_.empty()) {
        return table_[alpha.bits * ctx_.size() + beta.bits];
    }
    return from_weights(ctx_.index(alpha), ctx_.index(beta));
}

cplx KernelSet::weight(FieldElement gamma, FieldElement delta) const {
    if (weights_.empty()) {
        throw PreconditionError("kernel was built from an explicit table and carries no weights");
    }
    return weights_[size_t(ctx_.index(gamma)) * ctx_.size() + ctx_.index(delta)];
}

KernelSet build_kernel(const FieldContext &ctx, double s, const PhaseConvention &conv, const Ket &fiducial,
                       KernelMode mode) {
    return KernelSet::build(ctx, s, conv, fiducial, mode);
}

namespace {

PhaseSpaceFunction empty_function(const KernelSet &kernel, std::string provenance) {
    PhaseSpaceFunction w;
    w.n = kernel.ctx().n();
    w.s = kernel.s();
    w.convention = kernel.conv().id();
    w.fiducial = kernel.fiducial_label();
    w.provenance = std::move(provenance);
    w.invariant_kernel = kernel.permutation_invariant();
    w.grid.assign(size_t(kernel.ctx().size()) * kernel.ctx().size(), 0);
    return w;
}

}  // namespace

PhaseSpaceFunction forward_map_direct(const KernelSet &kernel, const Operator &op, std::string provenance) {
    const FieldContext &ctx = kernel.ctx();
    if (op.dim() != ctx.size()) {
        throw PreconditionError("operator dimension does not match the kernel");
    }
    PhaseSpaceFunction w = empty_function(kernel, std::move(provenance));
    Operator op_t = op.transpose();
    parallel_for(w.grid.size(), [&](size_t p) {
        FieldElement a(static_cast<uint32_t>(p / ctx.size())), b(static_cast<uint32_t>(p % ctx.size()));
        // Tr(op Delta) = sum_ij op_ji Delta_ij
        w.grid[p] = simd::dot(op_t.data(), kernel.at(a, b).data());
    });
    return w;
}

PhaseSpaceFunction forward_map(const KernelSet &kernel, const Operator &op, std::string provenance) {
    if (!kernel.has_weights()) {
        return forward_map_direct(kernel, op, std::move(provenance));
    }
    const FieldContext &ctx = kernel.ctx();
    const uint32_t size = ctx.size();
    if (op.dim() != size) {
        throw PreconditionError("operator dimension does not match the kernel");
    }
    // m[d][g] = w(g, d) Tr[op Z_g X_d], with Tr[op Z_g X_d] = sum_mu op(mu ^ d, mu) (-1)^(g.mu).
    std::vector<std::vector<cplx>> m(size, std::vector<cplx>(size));
    for (uint32_t d = 0; d < size; d++) {
        auto &v = m[d];
        for (uint32_t mu = 0; mu < size; mu++) {
            v[mu] = op(mu ^ d, mu);
        }
        walsh_hadamard(v);
        for (uint32_t g = 0; g < size; g++) {
            v[g] *= kernel.weight(ctx.at_index(g), ctx.at_index(d));
        }
        // sum over g against (-1)^(b.g)
        walsh_hadamard(v);
    }
    PhaseSpaceFunction w = empty_function(kernel, std::move(provenance));
    std::vector<cplx> col(size);
    const double norm = 1.0 / double(size);
    for (uint32_t b = 0; b < size; b++) {
        for (uint32_t d = 0; d < size; d++) {
            col[d] = m[d][b];
        }
        walsh_hadamard(col);
        FieldElement beta = ctx.at_index(b);
        for (uint32_t a = 0; a < size; a++) {
            w.at(ctx.at_index(a), beta) = col[a] * norm;
        }
    }
    return w;
}

Operator inverse_map(const KernelSet &kernel_minus_s, const PhaseSpaceFunction &w) {
    const FieldContext &ctx = kernel_minus_s.ctx();
    if (w.n != ctx.n() || w.grid.size() != size_t(ctx.size()) * ctx.size()) {
        throw PreconditionError("phase-space function does not match the kernel size");
    }
    check_dual_pair(w.s, kernel_minus_s.s());
    if (w.convention != kernel_minus_s.conv().id()) {
        throw PreconditionError("phase-space function and kernel use different conventions");
    }
    Operator out(ctx.size());
    for (FieldElement a : ctx.elements()) {
        for (FieldElement b : ctx.elements()) {
            cplx v = w.at(a, b);
            if (v != cplx{0, 0}) {
                out.add_scaled(v, kernel_minus_s.at(a, b));
            }
        }
    }
    out *= 1.0 / double(ctx.size());
    return out;
}

OverlapReport overlap_check(const KernelSet &kernel_a, const KernelSet &kernel_b) {
    check_dual_pair(kernel_a.s(), kernel_b.s());
    const FieldContext &ctx = kernel_a.ctx();
    if (kernel_b.ctx().n() != ctx.n()) {
        throw PreconditionError("kernels act on different qubit counts");
    }
    const size_t points = size_t(ctx.size()) * ctx.size();
    std::vector<Operator> a_ops(points), b_t(points);
    parallel_for(points, [&](size_t p) {
        FieldElement a(static_cast<uint32_t>(p / ctx.size())), b(static_cast<uint32_t>(p % ctx.size()));
        a_ops[p] = kernel_a.at(a, b);
        b_t[p] = kernel_b.at(a, b).transpose();
    });
    std::vector<cplx> diag(points);
    std::vector<double> off(points);
    parallel_for(points, [&](size_t p) {
        double worst = 0;
        for (size_t q = 0; q < points; q++) {
            cplx t = simd::dot(a_ops[p].data(), b_t[q].data());
            if (q == p) {
                diag[p] = t;
            } else {
                worst = std::max(worst, std::abs(t));
            }
        }
        off[p] = worst;
    });
    OverlapReport report;
    double sum = 0;
    for (const cplx &d : diag) {
        sum += d.real();
    }
    report.constant = sum / double(points);
    for (size_t p = 0; p < points; p++) {
        report.max_diagonal_deviation = std::max(report.max_diagonal_deviation, std::abs(diag[p] - report.constant));
        report.max_off_diagonal = std::max(report.max_off_diagonal, off[p]);
    }
    return report;
}

cplx trace_convolution(const PhaseSpaceFunction &wf, const PhaseSpaceFunction &wg, double overlap_constant) {
    if (wf.n != wg.n || wf.grid.size() != wg.grid.size()) {
        throw PreconditionError("phase-space functions have different sizes");
    }
    check_dual_pair(wf.s, wg.s);
    if (wf.convention != wg.convention) {
        throw PreconditionError("phase-space functions use different conventions");
    }
    if (overlap_constant == 0) {
        throw PreconditionError("overlap constant must be nonzero");
    }
    return simd::dot(wf.grid, wg.grid) / overlap_constant;
}

KernelSet wootters_kernel(const FieldContext &ctx, const MubFamily &mubs) {
    const uint32_t size = ctx.size();
    if (mubs.vertical.size() != size || mubs.sloped.size() != size) {
        throw PreconditionError("incomplete MUB family");
    }
    for (const auto &basis : mubs.sloped) {
        if (basis.size() != size) {
            throw PreconditionError("incomplete MUB family");
        }
    }
    std::vector<Operator> vertical_proj(size);
    std::vector<std::vector<Operator>> sloped_proj(size, std::vector<Operator>(size));
    for (uint32_t k = 0; k < size; k++) {
        vertical_proj[k] = mubs.vertical[k].projector();
        for (uint32_t xi = 0; xi < size; xi++) {
            sloped_proj[xi][k] = mubs.sloped[xi][k].projector();
        }
    }
    std::vector<Operator> table(size_t(size) * size);
    Operator identity = Operator::identity(size);
    for (FieldElement a : ctx.elements()) {
        for (FieldElement b : ctx.elements()) {
            Operator delta = vertical_proj[a.bits] - identity;
            for (FieldElement xi : ctx.elements()) {
                delta += sloped_proj[xi.bits][(b + ctx.mul(xi, a)).bits];
            }
            table[a.bits * size + b.bits] = std::move(delta);
        }
    }
    return KernelSet::from_table(ctx, 0.0, mubs.conv, std::move(table), "lines");
}

TomographicCheck tomographic_check(const PhaseSpaceFunction &w, const Operator &rho, const LineSpec &line,
                                   const MubFamily &mubs, const FieldContext &ctx) {
    if (w.s != 0) {
        throw PreconditionError("tomographic check needs an s = 0 symbol");
    }
    double sum = 0;
    for (auto [a, b] : line.points(ctx)) {
        sum += w.at(a, b).real();
    }
    TomographicCheck out;
    out.lhs = sum / double(ctx.size());
    const Ket &psi = mubs.state(line);
    out.rhs = psi.inner(rho * psi).real();
    out.deviation = std::abs(out.lhs - out.rhs);
    return out;
}

TomographicCheck tomographic_check(const KernelSet &kernel, const Operator &rho, const LineSpec &line,
                                   const MubFamily &mubs) {
    if (kernel.s() != 0) {
        throw PreconditionError("tomographic check needs an s = 0 kernel");
    }
    return tomographic_check(forward_map(kernel, rho, "rho"), rho, line, mubs, kernel.ctx());
}

Ket coherent_state(const KernelSet &kernel, FieldElement alpha, FieldElement beta) {
    return displacement(kernel.ctx(), kernel.conv(), alpha, beta) * kernel.fiducial();
}

size_t coherent_projector_rank(const KernelSet &kernel, double tol) {
    const FieldContext &ctx = kernel.ctx();
    const size_t points = size_t(ctx.size()) * ctx.size();
    std::vector<Ket> states;
    states.reserve(points);
    for (FieldElement a : ctx.elements()) {
        for (FieldElement b : ctx.elements()) {
            states.push_back(coherent_state(kernel, a, b));
        }
    }
    // Tr(P_p P_q) = |<c_p|c_q>|^2
    Eigen::MatrixXd gram(points, points);
    for (size_t p = 0; p < points; p++) {
        for (size_t q = p; q < points; q++) {
            double v = std::norm(states[p].inner(states[q]));
            gram(p, q) = v;
            gram(q, p) = v;
        }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
    lu.setThreshold(tol);
    return static_cast<size_t>(lu.rank());
}

}  // namespace dpsmap
