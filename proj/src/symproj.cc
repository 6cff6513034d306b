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

#include "dpsmap/symproj.h"

#include <algorithm>
#include <cmath>

#include "dpsmap/errors.h"

namespace dpsmap {

namespace {

// Neumaier accumulator for complex sums.
struct CompensatedSum {
    cplx sum = 0;
    cplx comp = 0;

    static void step(double &s, double &c, double v) {
        double t = s + v;
        if (std::abs(s) >= std::abs(v)) {
            c += (s - t) + v;
        } else {
            c += (v - t) + s;
        }
        s = t;
    }

    void add(cplx v) {
        double sr = sum.real(), si = sum.imag(), cr = comp.real(), ci = comp.imag();
        step(sr, cr, v.real());
        step(si, ci, v.imag());
        sum = {sr, si};
        comp = {cr, ci};
    }

    cplx value() const { return sum + comp; }
};

uint64_t factorial(unsigned k) {
    uint64_t f = 1;
    for (unsigned i = 2; i <= k; i++) {
        f *= i;
    }
    return f;
}

uint32_t swap_index_bits(uint32_t index, unsigned n, unsigned i, unsigned j) {
    unsigned bi = n - i, bj = n - j;
    if (((index >> bi) ^ (index >> bj)) & 1u) {
        index ^= (1u << bi) | (1u << bj);
    }
    return index;
}

MnkKey key_of(const FieldContext &ctx, FieldElement a, FieldElement b) {
    return {static_cast<unsigned>(ctx.hweight(a)), static_cast<unsigned>(ctx.hweight(b)),
            static_cast<unsigned>(ctx.hweight(a + b))};
}

}  // namespace

cplx ProjectedFunction::at(unsigned m, unsigned nn, unsigned k) const {
    auto it = entries.find({m, nn, k});
    return it == entries.end() ? cplx{0, 0} : it->second;
}

cplx ProjectedFunction::total() const {
    CompensatedSum acc;
    for (const auto &[key, v] : entries) {
        acc.add(v);
    }
    return acc.value();
}

bool in_support(unsigned n, int m, int nn, int k) {
    int N = static_cast<int>(n);
    if (m < 0 || nn < 0 || k < 0 || m > N || nn > N || k > N) {
        return false;
    }
    if ((m + nn + k) % 2 != 0) {
        return false;
    }
    return k >= std::abs(m - nn) && k <= std::min(m + nn, 2 * N - m - nn);
}

uint64_t r_factor(unsigned n, int m, int nn, int k) {
    if (!in_support(n, m, nn, k)) {
        return 0;
    }
    unsigned x = static_cast<unsigned>((m + nn - k) / 2);
    unsigned y = static_cast<unsigned>((m - nn + k) / 2);
    unsigned z = static_cast<unsigned>((nn - m + k) / 2);
    unsigned w = n - static_cast<unsigned>((m + nn + k) / 2);
    return factorial(n) / (factorial(x) * factorial(y) * factorial(z) * factorial(w));
}

ProjectedFunction project(const FieldContext &ctx, const PhaseSpaceFunction &w) {
    if (w.n != ctx.n() || w.grid.size() != size_t(ctx.size()) * ctx.size()) {
        throw PreconditionError("phase-space function does not match the field");
    }
    std::map<MnkKey, CompensatedSum> acc;
    for (FieldElement a : ctx.elements()) {
        for (FieldElement b : ctx.elements()) {
            acc[key_of(ctx, a, b)].add(w.at(a, b));
        }
    }
    ProjectedFunction out;
    out.n = w.n;
    out.s = w.s;
    out.convention = w.convention;
    out.fiducial = w.fiducial;
    out.provenance = w.provenance;
    out.invariant_kernel = w.invariant_kernel;
    for (const auto &[key, sum] : acc) {
        out.entries[key] = sum.value();
    }
    return out;
}

cplx symmetric_average(const ProjectedFunction &rho, const ProjectedFunction &op, double prefactor) {
    if (rho.n != op.n) {
        throw PreconditionError("projected functions have different qubit counts");
    }
    if (std::abs(rho.s + op.s) > 1e-12) {
        throw PreconditionError("projected functions are not a dual pair (s and -s)");
    }
    if (rho.convention != op.convention) {
        throw PreconditionError("projected functions use different conventions");
    }
    if (!rho.invariant_kernel || !op.invariant_kernel) {
        throw PreconditionError("projection requires a permutation-invariant kernel");
    }
    CompensatedSum acc;
    for (const auto &[key, v] : rho.entries) {
        uint64_t r = r_factor(rho.n, key[0], key[1], key[2]);
        if (r == 0) {
            continue;
        }
        acc.add(v * op.at(key[0], key[1], key[2]) / double(r));
    }
    return prefactor * acc.value();
}

InvarianceReport check_kernel_invariance(const KernelSet &kernel, double tol) {
    const FieldContext &ctx = kernel.ctx();
    const unsigned n = ctx.n();
    const uint32_t size = ctx.size();
    InvarianceReport report;
    report.convention = kernel.conv().id();
    for (unsigned i = 1; i <= n; i++) {
        for (unsigned j = i + 1; j <= n; j++) {
            report.transpositions_tested++;
            for (FieldElement a : ctx.elements()) {
                for (FieldElement b : ctx.elements()) {
                    Operator lhs = kernel.at(a, b);
                    Operator rhs = kernel.at(ctx.transpose(a, i, j), ctx.transpose(b, i, j));
                    double dev = 0;
                    for (uint32_t r = 0; r < size; r++) {
                        for (uint32_t c = 0; c < size; c++) {
                            dev = std::max(dev, std::abs(lhs(swap_index_bits(r, n, i, j), swap_index_bits(c, n, i, j)) -
                                                         rhs(r, c)));
                        }
                    }
                    if (dev > report.max_deviation) {
                        report.max_deviation = dev;
                        if (dev > tol && !report.witness) {
                            report.witness = InvarianceWitness{i, j, a, b};
                        }
                    }
                }
            }
        }
    }
    return report;
}

HDependence symbol_depends_only_on_h(const FieldContext &ctx, const PhaseSpaceFunction &w, double tol) {
    std::map<MnkKey, std::pair<FieldElement, FieldElement>> first;
    HDependence out;
    for (FieldElement a : ctx.elements()) {
        for (FieldElement b : ctx.elements()) {
            auto [it, inserted] = first.try_emplace(key_of(ctx, a, b), a, b);
            if (inserted) {
                continue;
            }
            double dev = std::abs(w.at(a, b) - w.at(it->second.first, it->second.second));
            out.max_deviation = std::max(out.max_deviation, dev);
            if (dev > tol && out.ok) {
                out.ok = false;
                out.witness = std::array<FieldElement, 4>{it->second.first, it->second.second, a, b};
            }
        }
    }
    return out;
}

TheoremWitness theorem_witness(const FieldContext &ctx, unsigned p, unsigned q, unsigned r, unsigned s) {
    const unsigned n = ctx.n();
    if (n < 4) {
        throw PreconditionError("the witness construction needs N >= 4");
    }
    std::array<unsigned, 4> idx{p, q, r, s};
    for (unsigned a = 0; a < 4; a++) {
        if (idx[a] < 1 || idx[a] > n) {
            throw PreconditionError("witness indices must lie in 1..N");
        }
        for (unsigned b = a + 1; b < 4; b++) {
            if (idx[a] == idx[b]) {
                throw PreconditionError("witness indices must be distinct");
            }
        }
    }
    TheoremWitness w;
    w.p = p;
    w.q = q;
    w.r = r;
    w.s = s;
    FieldElement tp = ctx.theta(p);
    w.alpha = ctx.square(tp);
    w.beta = tp + ctx.theta(q);
    w.eps = ctx.theta(r) + ctx.theta(s);
    w.xi = ctx.inv(w.eps);
    w.trace_condition = ctx.trace(ctx.mul(ctx.theta(r), w.alpha)) == ctx.trace(ctx.mul(ctx.theta(s), w.alpha));

    std::array<FieldElement, 4> factors{w.alpha, w.beta, ctx.mul(w.alpha, w.xi), ctx.mul(w.beta, w.xi)};
    FieldElement before = ctx.one(), after = ctx.one();
    for (FieldElement f : factors) {
        before = ctx.mul(before, f);
        after = ctx.mul(after, ctx.transpose(f, r, s));
    }
    w.before = ctx.chi(before);
    w.after = ctx.chi(after);
    return w;
}

std::vector<TheoremWitness> theorem_witness_search(const FieldContext &ctx) {
    const unsigned n = ctx.n();
    if (n < 4) {
        throw PreconditionError("the witness construction needs N >= 4");
    }
    std::vector<TheoremWitness> flipping, other;
    for (unsigned p = 1; p <= n; p++) {
        for (unsigned q = 1; q <= n; q++) {
            for (unsigned r = 1; r <= n; r++) {
                for (unsigned s = r + 1; s <= n; s++) {
                    if (p == q || p == r || p == s || q == r || q == s) {
                        continue;
                    }
                    TheoremWitness w = theorem_witness(ctx, p, q, r, s);
                    if (!w.trace_condition) {
                        continue;
                    }
                    (w.flips() ? flipping : other).push_back(w);
                }
            }
        }
    }
    flipping.insert(flipping.end(), other.begin(), other.end());
    return flipping;
}

std::optional<TheoremWitness> find_theorem_witness(const FieldContext &ctx) {
    for (const TheoremWitness &w : theorem_witness_search(ctx)) {
        if (w.flips()) {
            return w;
        }
    }
    return std::nullopt;
}

TomographicSearch search_tomographic_invariant_phases(const FieldContext &ctx) {
    const unsigned n = ctx.n();
    TomographicSearch out;
    out.n = n;

    // One unknown per orbit with m, n > 0.
    std::map<MnkKey, size_t> unknown_of;
    for (FieldElement a : ctx.elements()) {
        for (FieldElement b : ctx.elements()) {
            if (!a.is_zero() && !b.is_zero()) {
                unknown_of.try_emplace(key_of(ctx, a, b), unknown_of.size());
            }
        }
    }
    out.unknowns = unknown_of.size();
    auto var = [&](FieldElement a, FieldElement b) -> std::optional<size_t> {
        if (a.is_zero() || b.is_zero()) {
            return std::nullopt;
        }
        return unknown_of.at(key_of(ctx, a, b));
    };

    // Rows hold coefficient bits followed by the constant.
    const size_t width = out.unknowns + 1;
    std::vector<std::vector<uint8_t>> rows;
    for (FieldElement xi : ctx.elements()) {
        if (xi.is_zero()) {
            continue;
        }
        auto t = [&](FieldElement a) { return ctx.trace(ctx.mul(xi, ctx.square(a))); };
        for (FieldElement a : ctx.elements()) {
            for (FieldElement k : ctx.elements()) {
                if (k.bits <= a.bits) {
                    continue;
                }
                // u(a+k) + u(a) + u(k) = t(a) t(k) + tr(xi a k)
                std::vector<uint8_t> row(width, 0);
                for (FieldElement x : {a + k, a, k}) {
                    if (auto v = var(x, ctx.mul(xi, x))) {
                        row[*v] ^= 1;
                    }
                }
                row[out.unknowns] = static_cast<uint8_t>((t(a) * t(k) + ctx.trace(ctx.mul(xi, ctx.mul(a, k)))) & 1);
                rows.push_back(std::move(row));
            }
        }
    }
    out.equations = rows.size();

    size_t rank = 0;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < out.unknowns && rank < rows.size(); col++) {
        size_t piv = rank;
        while (piv < rows.size() && !rows[piv][col]) {
            piv++;
        }
        if (piv == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[piv]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && rows[r][col]) {
                for (size_t c = col; c < width; c++) {
                    rows[r][c] ^= rows[rank][c];
                }
            }
        }
        pivot_col.push_back(col);
        rank++;
    }
    out.rank = rank;
    out.consistent = true;
    for (size_t r = rank; r < rows.size(); r++) {
        if (rows[r][out.unknowns]) {
            out.consistent = false;
        }
    }
    if (!out.consistent) {
        return out;
    }
    out.free_bits = out.unknowns - rank;

    // Particular solution with free variables set to zero.
    std::vector<uint8_t> u(out.unknowns, 0);
    for (size_t r = 0; r < rank; r++) {
        u[pivot_col[r]] = rows[r][out.unknowns];
    }
    const cplx quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::vector<cplx> table(size_t(ctx.size()) * ctx.size());
    for (FieldElement g : ctx.elements()) {
        for (FieldElement d : ctx.elements()) {
            int e = ctx.trace(ctx.mul(g, d));
            if (auto v = var(g, d)) {
                e += 2 * u[*v];
            }
            table[g.bits * ctx.size() + d.bits] = quarter[e & 3];
        }
    }
    out.example = PhaseConvention::custom(std::move(table), "tomo-perminv");
    return out;
}

}  // namespace dpsmap
