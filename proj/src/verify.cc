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

#include "dpsmap/verify.h"

#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "dpsmap/errors.h"
#include "dpsmap/field.h"
#include "dpsmap/kernel.h"
#include "dpsmap/mub.h"
#include "dpsmap/pauli.h"
#include "dpsmap/simd.h"
#include "dpsmap/states.h"
#include "dpsmap/symproj.h"

namespace dpsmap {

using nlohmann::json;

namespace {

constexpr double kTol = 1e-10;

class Recorder {
   public:
    explicit Recorder(SuiteReport &report) : report_(report) {}

    void bound(const std::string &name, double value, double threshold, std::string detail = "") {
        report_.checks.push_back({name, value <= threshold, value, threshold, std::move(detail), false});
    }
    void count(const std::string &name, size_t violations, std::string detail = "") {
        report_.checks.push_back({name, violations == 0, double(violations), 0, std::move(detail), false});
    }
    void flag(const std::string &name, bool ok, std::string detail = "") {
        report_.checks.push_back({name, ok, ok ? 1.0 : 0.0, 1, std::move(detail), false});
    }
    void info(const std::string &name, double value, std::string detail = "") {
        report_.checks.push_back({name, true, value, 0, std::move(detail), true});
    }

   private:
    SuiteReport &report_;
};

std::vector<PhaseConvention> hermitian_conventions(const FieldContext &ctx) {
    std::vector<PhaseConvention> out;
    for (unsigned p = 1; p <= (1u << (ctx.n() - 1)); p <<= 1) {
        out.push_back(PhaseConvention::tomographic(p));
    }
    out.push_back(PhaseConvention::graph(+1));
    out.push_back(PhaseConvention::graph(-1));
    out.push_back(PhaseConvention::perm_sqrt());
    out.push_back(PhaseConvention::perm_factorized());
    out.push_back(PhaseConvention::perm_factorized(std::vector<std::array<uint8_t, 4>>(ctx.n(), {0, 0, 0, 1})));
    return out;
}

std::vector<PhaseConvention> invariant_conventions(const FieldContext &ctx) {
    return {PhaseConvention::perm_sqrt(), PhaseConvention::perm_factorized(),
            PhaseConvention::perm_factorized(std::vector<std::array<uint8_t, 4>>(ctx.n(), {0, 0, 0, 1}))};
}

PhaseConvention non_hermitian_convention(const FieldContext &ctx) {
    std::vector<cplx> table(size_t(ctx.size()) * ctx.size(), 1.0);
    for (uint32_t g = 1; g < ctx.size(); g++) {
        for (uint32_t d = 1; d < ctx.size(); d++) {
            table[g * ctx.size() + d] = std::polar(1.0, std::numbers::pi / 3);
        }
    }
    return PhaseConvention::custom(std::move(table), "third-turn");
}

FieldElement random_element(const FieldContext &ctx, std::mt19937_64 &rng) {
    return FieldElement(static_cast<uint32_t>(rng() % ctx.size()));
}

std::vector<LineSpec> all_lines(const FieldContext &ctx) {
    std::vector<LineSpec> lines;
    for (FieldElement a : ctx.elements()) {
        lines.push_back(LineSpec::vertical_at(a));
    }
    for (FieldElement xi : ctx.elements()) {
        for (FieldElement nu : ctx.elements()) {
            lines.push_back(LineSpec::sloped(xi, nu));
        }
    }
    return lines;
}

void field_suite(const FieldContext &ctx, std::mt19937_64 &rng, Recorder &rec) {
    const bool exhaustive = ctx.n() <= 4;
    size_t axioms = 0;
    auto check_triple = [&](FieldElement x, FieldElement y, FieldElement z) {
        if (ctx.mul(x, ctx.mul(y, z)) != ctx.mul(ctx.mul(x, y), z)) {
            axioms++;
        }
        if (ctx.mul(x, y) != ctx.mul(y, x)) {
            axioms++;
        }
        if (ctx.mul(x, y + z) != ctx.mul(x, y) + ctx.mul(x, z)) {
            axioms++;
        }
    };
    if (exhaustive) {
        for (FieldElement x : ctx.elements()) {
            for (FieldElement y : ctx.elements()) {
                for (FieldElement z : ctx.elements()) {
                    check_triple(x, y, z);
                }
            }
        }
    } else {
        for (int i = 0; i < 20000; i++) {
            check_triple(random_element(ctx, rng), random_element(ctx, rng), random_element(ctx, rng));
        }
    }
    rec.count(exhaustive ? "field axioms (exhaustive)" : "field axioms (20000 samples)", axioms);

    size_t inv_bad = 0, tr_bad = 0, sqrt_bad = 0, coord_bad = 0, h_bad = 0, tp_bad = 0;
    for (FieldElement x : ctx.elements()) {
        if (!x.is_zero() && ctx.mul(x, ctx.inv(x)) != ctx.one()) {
            inv_bad++;
        }
        if (ctx.trace(x) != ctx.trace(ctx.square(x))) {
            tr_bad++;
        }
        if (ctx.square(ctx.sqrt(x)) != x) {
            sqrt_bad++;
        }
        if (ctx.from_coords(ctx.coords(x)) != x) {
            coord_bad++;
        }
        for (unsigned i = 1; i <= ctx.n(); i++) {
            for (unsigned j = i + 1; j <= ctx.n(); j++) {
                FieldElement t = ctx.transpose(x, i, j);
                SelfDualCoords a = ctx.coords(x), b = ctx.coords(t);
                if (ctx.transpose(t, i, j) != x || ctx.hweight(t) != ctx.hweight(x) || a[i] != b[j] || a[j] != b[i]) {
                    tp_bad++;
                }
            }
        }
    }
    rec.count("multiplicative inverses", inv_bad);
    rec.count("tr(x) = tr(x^2)", tr_bad);
    rec.count("sqrt(x)^2 = x", sqrt_bad);
    rec.count("coordinate round trip", coord_bad);
    rec.count("transposition swaps coordinates", tp_bad);

    size_t lin_bad = 0;
    auto check_pair = [&](FieldElement x, FieldElement y) {
        if (ctx.trace(x + y) != (ctx.trace(x) ^ ctx.trace(y))) {
            lin_bad++;
        }
        uint32_t common = ctx.index(x) & ctx.index(y);
        if (ctx.trace(ctx.mul(x, y)) != (std::popcount(common) & 1)) {
            lin_bad++;
        }
        if (ctx.hweight(x) + ctx.hweight(y) - ctx.hweight(x + y) != 2 * std::popcount(common)) {
            h_bad++;
        }
    };
    if (exhaustive) {
        for (FieldElement x : ctx.elements()) {
            for (FieldElement y : ctx.elements()) {
                check_pair(x, y);
            }
        }
    } else {
        for (int i = 0; i < 20000; i++) {
            check_pair(random_element(ctx, rng), random_element(ctx, rng));
        }
    }
    rec.count("trace linearity and tr(xy) = sum a_i b_i", lin_bad);
    rec.count("h(a) + h(b) - h(a+b) = 2 sum a_i b_i", h_bad);

    size_t gram_bad = 0;
    auto g = ctx.gram();
    for (unsigned i = 0; i < ctx.n(); i++) {
        for (unsigned j = 0; j < ctx.n(); j++) {
            gram_bad += g[i][j] != (i == j ? 1 : 0);
        }
    }
    rec.count("self-dual Gram matrix = I", gram_bad);
}

void pauli_suite(const FieldContext &ctx, std::mt19937_64 &rng, Recorder &rec) {
    auto convs = hermitian_conventions(ctx);
    convs.push_back(non_hermitian_convention(ctx));
    const size_t dim = ctx.size();
    for (const PhaseConvention &conv : convs) {
        size_t boundary = 0, unitary = 0, iff = 0;
        for (FieldElement g : ctx.elements()) {
            for (FieldElement d : ctx.elements()) {
                if ((g.is_zero() || d.is_zero()) && std::abs(conv.value(ctx, g, d) - 1.0) > 1e-15) {
                    boundary++;
                }
                Operator D = displacement(ctx, conv, g, d);
                if (!D.is_unitary(kTol)) {
                    unitary++;
                }
                cplx phi = conv.value(ctx, g, d);
                bool squared = std::abs(phi * phi - double(ctx.chi(ctx.mul(g, d)))) < 1e-12;
                if (D.is_hermitian(kTol) != squared) {
                    iff++;
                }
            }
        }
        rec.count("phi(0,d) = phi(g,0) = 1 [" + conv.id() + "]", boundary);
        rec.count("D unitary [" + conv.id() + "]", unitary);
        rec.count("D Hermitian iff phi^2 = chi(gd) [" + conv.id() + "]", iff);
    }

    size_t comm = 0;
    for (FieldElement a : ctx.elements()) {
        for (FieldElement b : ctx.elements()) {
            Operator zx = build_Z(ctx, a) * build_X(ctx, b);
            Operator xz = build_X(ctx, b) * build_Z(ctx, a);
            xz *= double(ctx.chi(ctx.mul(a, b)));
            if (max_abs_diff(zx, xz) > kTol) {
                comm++;
            }
        }
    }
    rec.count("Z_a X_b = chi(ab) X_b Z_a", comm);

    double group = 0;
    PhaseConvention p1 = PhaseConvention::tomographic(1);
    for (int t = 0; t < 100; t++) {
        FieldElement g1 = random_element(ctx, rng), d1 = random_element(ctx, rng);
        FieldElement g2 = random_element(ctx, rng), d2 = random_element(ctx, rng);
        Operator prod = displacement(ctx, p1, g1, d1) * displacement(ctx, p1, g2, d2);
        Operator target = displacement(ctx, p1, g1 + g2, d1 + d2);
        cplx ratio = trace_product(target.dagger(), prod) / double(dim);
        group = std::max(group, std::abs(std::abs(ratio) - 1.0) + max_abs_diff(prod, ratio * target));
    }
    rec.bound("D(g,d) D(g',d') proportional to D(g+g',d+d')", group, kTol);

    for (const PhaseConvention &conv : invariant_conventions(ctx)) {
        rec.flag("permutation-invariant phase [" + conv.id() + "]", is_permutation_invariant(ctx, conv));
        rec.flag("Hermitian phase [" + conv.id() + "]", is_hermitian_convention(ctx, conv));
    }
    if (ctx.n() >= 4) {
        rec.flag("tomo-p2 phase is not permutation invariant",
                 !is_permutation_invariant(ctx, PhaseConvention::tomographic(2)));
    }

    double perm = 0;
    for (unsigned i = 1; i <= ctx.n(); i++) {
        for (unsigned j = i + 1; j <= ctx.n(); j++) {
            Operator P = permutation_op(ctx, i, j);
            perm = std::max(perm, max_abs_diff(P * P, Operator::identity(dim)));
            for (FieldElement a : ctx.elements()) {
                perm = std::max(perm, max_abs_diff(P * build_Z(ctx, a) * P, build_Z(ctx, ctx.transpose(a, i, j))));
            }
        }
    }
    rec.bound("Pi_ij Z_a Pi_ij = Z_a'", perm, kTol);

    Ket flat(dim);
    for (size_t i = 0; i < dim; i++) {
        flat[i] = 1.0 / std::sqrt(double(dim));
    }
    rec.bound("|zeta = 1> is the uniform superposition", max_abs_diff(spin_coherent(ctx, 1.0), flat), kTol);
    rec.flag("default fiducial has nonzero overlaps",
             check_fiducial(ctx, PhaseConvention::tomographic(1), spin_coherent(ctx, default_zeta())).ok);
}

void mub_suite(const FieldContext &ctx, Recorder &rec) {
    std::vector<std::pair<std::string, std::function<RotationCoefficients(FieldElement)>>> families;
    for (unsigned p = 1; p <= (1u << (ctx.n() - 1)); p <<= 1) {
        families.push_back(
            {"closed p=" + std::to_string(p), [&ctx, p](FieldElement xi) { return coeffs_closed_form(ctx, xi, p); }});
    }
    families.push_back({"graph+", [&ctx](FieldElement xi) { return coeffs_graph(ctx, xi, +1); }});
    families.push_back({"graph-", [&ctx](FieldElement xi) { return coeffs_graph(ctx, xi, -1); }});

    for (const auto &[name, make] : families) {
        size_t rec_bad = 0;
        double square = 0, commute = 0, rotate = 0;
        for (FieldElement xi : ctx.elements()) {
            RotationCoefficients c = make(xi);
            rec_bad += recurrence_violations(ctx, c);
            Operator V = build_V(ctx, c);
            square = std::max(square, max_abs_diff(V * V, build_X(ctx, ctx.sqrt(xi))));
            Operator Vd = V.dagger();
            for (FieldElement a : ctx.elements()) {
                Operator Xa = build_X(ctx, a);
                commute = std::max(commute, max_abs_diff(V * Xa, Xa * V));
                Operator lhs = V * build_Z(ctx, a) * Vd;
                Operator rhs = build_Z(ctx, a) * build_X(ctx, ctx.mul(a, xi));
                rhs *= c.value(a);
                rotate = std::max(rotate, max_abs_diff(lhs, rhs));
            }
        }
        rec.count("rotation recurrence exact [" + name + "]", rec_bad);
        rec.bound("V_xi^2 = X_sqrt(xi) [" + name + "]", square, kTol);
        rec.bound("[V_xi, X_nu] = 0 [" + name + "]", commute, kTol);
        rec.bound("V Z_a V^dag = c_a Z_a X_(a xi) [" + name + "]", rotate, kTol);
    }

    for (const PhaseConvention &conv : {PhaseConvention::tomographic(1), PhaseConvention::graph(+1)}) {
        MubFamily fam = mub_family(ctx, conv);
        std::vector<Ket> logical;
        for (FieldElement nu : ctx.elements()) {
            logical.push_back(Ket::basis(ctx.size(), ctx.index(nu)));
        }
        double worst = 0;
        std::vector<const std::vector<Ket> *> all(fam.bases());
        for (size_t i = 0; i < all.size(); i++) {
            for (size_t j = i + 1; j < all.size(); j++) {
                worst = std::max(worst, check_unbiased(*all[i], *all[j]));
            }
        }
        rec.bound("2^N + 1 bases pairwise unbiased [" + conv.id() + "]", worst, kTol);
        rec.bound(
            "slope 0 basis is the logical basis [" + conv.id() + "]",
            [&] {
                double d = 0;
                for (size_t i = 0; i < ctx.size(); i++) {
                    d = std::max(d, max_abs_diff(fam.sloped[0][i], logical[i]));
                }
                return d;
            }(),
            kTol);
    }
}

void kernel_suite(const FieldContext &ctx, std::mt19937_64 &rng, Recorder &rec) {
    const size_t dim = ctx.size();
    Ket fid = spin_coherent(ctx, default_zeta());
    Operator identity = Operator::identity(dim);
    for (const PhaseConvention &conv : {PhaseConvention::tomographic(1), PhaseConvention::perm_factorized(),
                                        PhaseConvention::perm_sqrt(), PhaseConvention::graph(+1)}) {
        std::map<double, KernelSet> kernels;
        for (double s : {-1.0, 0.0, 1.0}) {
            kernels.emplace(s, KernelSet::build(ctx, s, conv, fid, KernelMode::DenseTable, "default"));
        }
        for (auto &[s, k] : kernels) {
            std::string tag = " [" + conv.id() + ", s=" + std::to_string(int(s)) + "]";
            Operator sum(dim);
            double herm = 0, trace = 0;
            for (FieldElement a : ctx.elements()) {
                for (FieldElement b : ctx.elements()) {
                    Operator d = k.at(a, b);
                    sum += d;
                    herm = std::max(herm, max_abs_diff(d, d.dagger()));
                    trace = std::max(trace, std::abs(d.trace() - 1.0));
                }
            }
            sum *= 1.0 / double(dim);
            rec.bound("sum of kernel = 2^N I" + tag, max_abs_diff(sum, identity), kTol);
            rec.bound("kernel Hermitian" + tag, herm, kTol);
            rec.bound("Tr kernel = 1" + tag, trace, kTol);

            double cov = 0;
            for (int t = 0; t < 50; t++) {
                FieldElement kap = random_element(ctx, rng), lam = random_element(ctx, rng);
                FieldElement a = random_element(ctx, rng), b = random_element(ctx, rng);
                Operator D = displacement(ctx, conv, kap, lam);
                cov = std::max(cov, max_abs_diff(D * k.at(a, b) * D.dagger(), k.at(a + kap, b + lam)));
            }
            rec.bound("covariance on 50 random tuples" + tag, cov, kTol);

            double round = 0, fast = 0;
            const KernelSet &dual = kernels.at(-s);
            for (int t = 0; t < 20; t++) {
                Operator op = random_hermitian(dim, rng);
                PhaseSpaceFunction w = forward_map(k, op);
                fast = std::max(fast, simd::max_abs_diff(w.grid, forward_map_direct(k, op).grid));
                round = std::max(round, max_abs_diff(inverse_map(dual, w), op));
            }
            rec.bound("inverse(forward(op)) = op on 20 random Hermitian" + tag, round, kTol);
            rec.bound("transform-based forward map = direct traces" + tag, fast, kTol);

            OverlapReport ov = overlap_check(k, dual);
            rec.bound("overlap relation off-diagonal" + tag, ov.max_off_diagonal, kTol);
            rec.bound("overlap relation diagonal spread" + tag, ov.max_diagonal_deviation, kTol);
            rec.info("fitted overlap constant" + tag, ov.constant);

            double conv_err = 0;
            for (int t = 0; t < 5; t++) {
                Operator f = random_hermitian(dim, rng), g = random_hermitian(dim, rng);
                cplx direct = trace_product(f, g);
                cplx via = trace_convolution(forward_map(k, f), forward_map(dual, g), ov.constant);
                conv_err = std::max(conv_err, std::abs(direct - via) / std::max(1.0, std::abs(direct)));
            }
            rec.bound("trace convolution matches Tr(fg)" + tag, conv_err, kTol);
        }

        const KernelSet &q = kernels.at(-1.0);
        double coh = 0;
        for (FieldElement a : ctx.elements()) {
            for (FieldElement b : ctx.elements()) {
                coh = std::max(coh, max_abs_diff(q.at(a, b), coherent_state(q, a, b).projector()));
            }
        }
        rec.bound("s = -1 kernel = coherent-state projectors [" + conv.id() + "]", coh, kTol);
        if (ctx.n() <= 3) {
            size_t rank = coherent_projector_rank(q);
            rec.bound("coherent projectors span operator space [" + conv.id() + "]", double(dim * dim - rank), 0,
                      "rank " + std::to_string(rank));
        }
    }
}

void tomographic_suite(const FieldContext &ctx, std::mt19937_64 &rng, Recorder &rec) {
    const size_t dim = ctx.size();
    Ket fid = spin_coherent(ctx, default_zeta());
    auto lines = all_lines(ctx);
    std::vector<PhaseConvention> convs;
    for (unsigned p = 1; p <= (1u << (ctx.n() - 1)); p <<= 1) {
        convs.push_back(PhaseConvention::tomographic(p));
    }
    convs.push_back(PhaseConvention::graph(+1));
    convs.push_back(PhaseConvention::graph(-1));
    for (const PhaseConvention &conv : convs) {
        KernelSet k = KernelSet::build(ctx, 0, conv, fid, KernelMode::DenseTable, "default");
        MubFamily fam = mub_family(ctx, conv);
        double worst = 0;
        for (int t = 0; t < 10; t++) {
            Operator rho = random_ket(dim, rng).projector();
            PhaseSpaceFunction w = forward_map(k, rho);
            for (const LineSpec &line : lines) {
                worst = std::max(worst, tomographic_check(w, rho, line, fam, ctx).deviation);
            }
        }
        rec.bound("line sums = MUB probabilities, 10 random states [" + conv.id() + "]", worst, kTol);

        double delta = 0;
        for (const LineSpec &line : lines) {
            PhaseSpaceFunction w = forward_map(k, fam.state(line).projector());
            for (FieldElement a : ctx.elements()) {
                for (FieldElement b : ctx.elements()) {
                    delta = std::max(delta, std::abs(w.at(a, b) - (line.contains(ctx, a, b) ? 1.0 : 0.0)));
                }
            }
        }
        rec.bound("line-state symbols are lines [" + conv.id() + "]", delta, kTol);

        KernelSet lk = wootters_kernel(ctx, fam);
        double eq = 0;
        for (FieldElement a : ctx.elements()) {
            for (FieldElement b : ctx.elements()) {
                eq = std::max(eq, max_abs_diff(lk.at(a, b), k.at(a, b)));
            }
        }
        rec.bound("line-projector kernel = character-sum kernel [" + conv.id() + "]", eq, kTol);
    }

    // Factorized phases keep the factorized bases but not the sloped lines in general.
    KernelSet fk = KernelSet::build(ctx, 0, PhaseConvention::perm_factorized(), fid, KernelMode::DenseTable, "default");
    MubFamily fam = mub_family(ctx, PhaseConvention::tomographic(1));
    double factor = 0;
    for (FieldElement kap : ctx.elements()) {
        PhaseSpaceFunction wz = forward_map(fk, Ket::basis(dim, ctx.index(kap)).projector());
        PhaseSpaceFunction wd = forward_map(fk, dual_basis_state(ctx, kap).projector());
        PhaseSpaceFunction wv =
            forward_map(fk, line_states(ctx, coeffs_closed_form(ctx, ctx.one(), 1))[kap.bits].projector());
        for (FieldElement a : ctx.elements()) {
            for (FieldElement b : ctx.elements()) {
                factor = std::max(factor, std::abs(wz.at(a, b) - (b == kap ? 1.0 : 0.0)));
                factor = std::max(factor, std::abs(wd.at(a, b) - (a == kap ? 1.0 : 0.0)));
                factor = std::max(factor, std::abs(wv.at(a, b) - (a + b == kap + ctx.one() ? 1.0 : 0.0)));
            }
        }
    }
    rec.bound("factorized bases map to lines [perminv-f0]", factor, kTol);
    double generic = 0;
    Operator rho = random_ket(dim, rng).projector();
    PhaseSpaceFunction w = forward_map(fk, rho);
    for (const LineSpec &line : lines) {
        generic = std::max(generic, tomographic_check(w, rho, line, fam, ctx).deviation);
    }
    rec.info("largest line-sum deviation for a random state [perminv-f0]", generic);
}

void symmetric_suite(const FieldContext &ctx, std::mt19937_64 &rng, Recorder &rec) {
    const size_t dim = ctx.size();
    Ket fid = spin_coherent(ctx, default_zeta());
    for (const PhaseConvention &conv : invariant_conventions(ctx)) {
        KernelSet k0 = KernelSet::build(ctx, 0, conv, fid, KernelMode::DenseTable, "default");
        InvarianceReport inv = check_kernel_invariance(k0);
        rec.bound("kernel permutation covariance [" + conv.id() + "]", inv.max_deviation, 1e-12);
        rec.flag("kernel flagged invariant [" + conv.id() + "]", k0.permutation_invariant());

        std::map<double, KernelSet> kernels;
        for (double s : {-1.0, 0.0, 1.0}) {
            kernels.emplace(s, KernelSet::build(ctx, s, conv, fid, KernelMode::DenseTable, "default"));
        }
        size_t not_h = 0;
        double avg = 0;
        for (int t = 0; t < 50; t++) {
            Operator S = symmetrize(random_hermitian(dim, rng));
            for (auto &[s, k] : kernels) {
                if (!symbol_depends_only_on_h(ctx, forward_map(k, S)).ok) {
                    not_h++;
                }
            }
            if (t < 20) {
                Operator rho = random_ket(dim, rng).projector();
                for (auto &[s, k] : kernels) {
                    const KernelSet &dual = kernels.at(-s);
                    double c = double(dim);
                    cplx got = symmetric_average(project(ctx, forward_map(k, rho)), project(ctx, forward_map(dual, S)),
                                                 1.0 / c);
                    cplx want = trace_product(rho, S);
                    avg = std::max(avg, std::abs(got - want) / std::max(1.0, std::abs(want)));
                }
            }
        }
        rec.count("symmetric symbols depend only on (m,n,k), 50 operators [" + conv.id() + "]", not_h);
        rec.bound("projected convolution = Tr(rho S), 20 pairs [" + conv.id() + "]", avg, kTol);
    }
    if (ctx.n() >= 4) {
        KernelSet kt =
            KernelSet::build(ctx, 0, PhaseConvention::tomographic(1), fid, KernelMode::DenseTable, "default");
        InvarianceReport inv = check_kernel_invariance(kt);
        std::string detail;
        if (inv.witness) {
            detail = "transposition (" + std::to_string(inv.witness->i) + "," + std::to_string(inv.witness->j) +
                     ") at a=" + ctx.coords(inv.witness->alpha).str() + " b=" + ctx.coords(inv.witness->beta).str();
        }
        rec.flag("tomographic kernel is not permutation covariant [tomo-p1]", inv.witness.has_value(), detail);
    }
}

void theorem_suite(const FieldContext &ctx, Recorder &rec) {
    if (ctx.n() >= 4) {
        auto w = find_theorem_witness(ctx);
        std::string detail;
        if (w) {
            detail = "p,q,r,s=" + std::to_string(w->p) + "," + std::to_string(w->q) + "," + std::to_string(w->r) + "," +
                     std::to_string(w->s) + " alpha=" + ctx.coords(w->alpha).str() +
                     " beta=" + ctx.coords(w->beta).str() + " xi=" + ctx.coords(w->xi).str() + " sign " +
                     std::to_string(w->before) + " -> " + std::to_string(w->after);
        }
        rec.flag("sign-flip witness under a qubit transposition", w.has_value(), detail);
    }
    if (ctx.n() <= 5) {
        TomographicSearch search = search_tomographic_invariant_phases(ctx);
        rec.info("invariant Hermitian phases meeting every line condition (log2 count, -1 if none)",
                 search.consistent ? double(search.free_bits) : -1.0,
                 std::to_string(search.unknowns) + " orbit unknowns, rank " + std::to_string(search.rank));
    }
}

}  // namespace

bool SuiteReport::passed() const {
    for (const CheckResult &c : checks) {
        if (!c.informational && !c.passed) {
            return false;
        }
    }
    return true;
}

json SuiteReport::to_json() const {
    json list = json::array();
    for (const CheckResult &c : checks) {
        json j = {{"name", c.name}, {"passed", c.passed}, {"value", c.value}, {"threshold", c.threshold}};
        if (!c.detail.empty()) {
            j["detail"] = c.detail;
        }
        if (c.informational) {
            j["informational"] = true;
        }
        list.push_back(j);
    }
    return {{"suite", suite}, {"n", n}, {"passed", passed()}, {"seconds", seconds}, {"checks", list}};
}

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names{"field",       "pauli",     "mub",     "kernel",
                                                "tomographic", "symmetric", "theorem", "all"};
    return names;
}

unsigned suite_max_qubits(const std::string &suite) {
    if (suite == "field" || suite == "theorem") {
        return FieldContext::kMaxQubits;
    }
    if (suite == "pauli" || suite == "mub") {
        return 5;
    }
    if (suite == "kernel" || suite == "tomographic" || suite == "symmetric" || suite == "all") {
        return kMaxDenseKernelQubits;
    }
    throw ConfigError("unknown suite '" + suite + "'");
}

std::vector<SuiteReport> run_suite(const std::string &suite, unsigned n, uint64_t seed) {
    unsigned cap = suite_max_qubits(suite);
    if (n < 1 || n > cap) {
        throw ConfigError("suite '" + suite + "' supports 1 <= n <= " + std::to_string(cap));
    }
    std::vector<std::string> todo;
    if (suite == "all") {
        todo.assign(suite_names().begin(), suite_names().end() - 1);
    } else {
        todo.push_back(suite);
    }
    FieldContext ctx(n);
    std::vector<SuiteReport> out;
    for (const std::string &name : todo) {
        SuiteReport report;
        report.suite = name;
        report.n = n;
        Recorder rec(report);
        std::mt19937_64 rng(seed);
        auto start = std::chrono::steady_clock::now();
        if (name == "field") {
            field_suite(ctx, rng, rec);
        } else if (name == "pauli") {
            pauli_suite(ctx, rng, rec);
        } else if (name == "mub") {
            mub_suite(ctx, rec);
        } else if (name == "kernel") {
            kernel_suite(ctx, rng, rec);
        } else if (name == "tomographic") {
            tomographic_suite(ctx, rng, rec);
        } else if (name == "symmetric") {
            symmetric_suite(ctx, rng, rec);
        } else {
            theorem_suite(ctx, rec);
        }
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(report));
    }
    return out;
}

}  // namespace dpsmap
