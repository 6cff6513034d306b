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

// Command-line front end.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dpsmap/errors.h"
#include "dpsmap/export.h"
#include "dpsmap/field.h"
#include "dpsmap/kernel.h"
#include "dpsmap/mub.h"
#include "dpsmap/pauli.h"
#include "dpsmap/reference.h"
#include "dpsmap/states.h"
#include "dpsmap/symproj.h"
#include "dpsmap/verify.h"

using namespace dpsmap;
using nlohmann::json;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot write '" + path + "'");
    }
    out << text;
}

std::string with_suffix(const std::string &path, const std::string &suffix) {
    if (path.empty() || path == "-") {
        return path;
    }
    auto dot = path.find_last_of('.');
    auto slash = path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return path + suffix;
    }
    return path.substr(0, dot) + suffix + path.substr(dot);
}

struct MapConfig {
    unsigned n = 2;
    int s = 0;
    std::string conv = "tomo-p1";
    std::string state = "ghz";
    std::string zeta = "1,0";
    std::string fiducial = "0.5@45";
    std::string format = "csv";
    std::string out;
    bool project = false;

    json to_json() const {
        return {{"n", n},           {"s", s},
                {"conv", conv},     {"state", state},
                {"zeta", zeta},     {"fiducial", fiducial},
                {"format", format}, {"project", project}};
    }
};

void apply_config_file(MapConfig &cfg, const std::string &path, const CLI::App &cmd) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::exception &e) {
        throw ConfigError(std::string("invalid config file: ") + e.what());
    }
    if (!j.is_object()) {
        throw ConfigError("config file must hold a JSON object");
    }
    auto given = [&](const char *opt) { return cmd.get_option(opt)->count() > 0; };
    try {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string &k = it.key();
            if (k == "n" && !given("--n")) {
                cfg.n = it->get<unsigned>();
            } else if (k == "s" && !given("--s")) {
                cfg.s = it->get<int>();
            } else if (k == "conv" && !given("--conv")) {
                cfg.conv = it->get<std::string>();
            } else if (k == "state" && !given("--state")) {
                cfg.state = it->get<std::string>();
            } else if (k == "zeta" && !given("--zeta")) {
                cfg.zeta = it->get<std::string>();
            } else if (k == "fiducial" && !given("--fiducial")) {
                cfg.fiducial = it->get<std::string>();
            } else if (k == "format" && !given("--format")) {
                cfg.format = it->get<std::string>();
            } else if (k == "out" && !given("--out")) {
                cfg.out = it->get<std::string>();
            } else if (k == "project" && !given("--project")) {
                cfg.project = it->get<bool>();
            } else if (k != "n" && k != "s" && k != "conv" && k != "state" && k != "zeta" && k != "fiducial" &&
                       k != "format" && k != "out" && k != "project") {
                throw ConfigError("unknown config key '" + k + "'");
            }
        }
    } catch (const json::exception &e) {
        throw ConfigError(std::string("invalid config value: ") + e.what());
    }
}

int cmd_field(unsigned n, const std::string &out) {
    FieldContext ctx(n);
    json j = field_json(ctx);
    auto gram = ctx.gram();
    bool identity = true;
    for (unsigned i = 0; i < n; i++) {
        for (unsigned k = 0; k < n; k++) {
            identity &= gram[i][k] == (i == k ? 1 : 0);
        }
    }
    json basis_coords = json::array();
    for (FieldElement t : ctx.selfdual_basis()) {
        basis_coords.push_back(ctx.coords(t).str());
    }
    json elements = json::array();
    for (FieldElement x : ctx.elements()) {
        elements.push_back({{"bits", x.bits},
                            {"coords", ctx.coords(x).str()},
                            {"trace", ctx.trace(x)},
                            {"h", ctx.hweight(x)},
                            {"sqrt", ctx.sqrt(x).bits},
                            {"inverse", x.is_zero() ? json(nullptr) : json(ctx.inv(x).bits)}});
    }
    j["selfdual_basis_coords"] = basis_coords;
    j["gram"] = gram;
    j["gram_is_identity"] = identity;
    j["elements"] = elements;
    j["version"] = kVersion;
    emit(out, j.dump(2) + "\n");
    return identity ? 0 : kExitVerifyFailed;
}

int cmd_map(MapConfig cfg) {
    if (cfg.s < -1 || cfg.s > 1) {
        throw ConfigError("--s must be -1, 0 or 1");
    }
    if (cfg.n < 1 || cfg.n > 5 || (cfg.n == 5 && cfg.s != 0)) {
        throw ConfigError("map supports 1 <= n <= 4, or n = 5 with s = 0");
    }
    if (cfg.format != "csv" && cfg.format != "json" && cfg.format != "dat") {
        throw ConfigError("--format must be csv, json or dat");
    }
    FieldContext ctx(cfg.n);
    PhaseConvention conv = PhaseConvention::parse(cfg.conv, cfg.n);
    conv.validate(ctx);
    cplx zeta = parse_complex(cfg.zeta);
    cplx fid_zeta = parse_complex(cfg.fiducial);
    Ket fiducial = spin_coherent(ctx, fid_zeta);

    Ket psi;
    const bool from_file = cfg.state.rfind("file:", 0) == 0;
    if (from_file || cfg.state.rfind('[', 0) == 0) {
        psi = parse_amplitudes(from_file ? read_file(cfg.state.substr(5)) : cfg.state);
        if (psi.dim() != ctx.size()) {
            throw ConfigError("state has " + std::to_string(psi.dim()) + " amplitudes, expected " +
                              std::to_string(ctx.size()));
        }
    } else {
        psi = named_state(ctx, cfg.state, zeta);
    }

    if (cfg.s != 0) {
        FiducialReport rep = check_fiducial(ctx, conv, fiducial);
        if (!rep.ok) {
            throw ConfigError("fiducial " + cfg.fiducial + " has " + std::to_string(rep.violations.size()) +
                              " vanishing displacement overlaps; s = +-1 needs all nonzero");
        }
    }

    std::string label = "zeta=" + cfg.fiducial;
    KernelSet kernel = KernelSet::build(ctx, cfg.s, conv, fiducial, KernelMode::Lazy, label);
    PhaseSpaceFunction w = forward_map(kernel, psi.projector(), "state:" + cfg.state);

    json extra = {{"config", cfg.to_json()}};
    if (cfg.n <= 4) {
        KernelSet dual = KernelSet::build(ctx, -cfg.s, conv, fiducial, KernelMode::Lazy, label);
        OverlapReport ov = overlap_check(kernel, dual);
        extra["overlap_constant"] = ov.constant;
        extra["convolution_prefactor"] = ov.convolution_prefactor();
        extra["overlap_max_off_diagonal"] = ov.max_off_diagonal;
    } else {
        extra["overlap_constant"] = nullptr;
    }

    std::string text;
    if (cfg.format == "csv") {
        text = format_csv(ctx, w, extra);
    } else if (cfg.format == "json") {
        text = format_json(ctx, w, extra);
    } else {
        text = format_dat(ctx, w, extra);
    }
    emit(cfg.out, text);

    if (cfg.project) {
        ProjectedFunction p = project(ctx, w);
        json pextra = extra;
        pextra["projection_exact"] = p.invariant_kernel;
        std::string ptext;
        if (cfg.format == "csv") {
            ptext = format_csv(p, pextra);
        } else if (cfg.format == "json") {
            ptext = format_json(p, pextra);
        } else {
            ptext = format_dat(p, pextra);
        }
        if (cfg.out.empty() || cfg.out == "-") {
            std::cout << "\n";
        }
        emit(with_suffix(cfg.out, ".proj"), ptext);
    }
    return 0;
}

int cmd_verify(const std::string &suite, unsigned n, const std::string &out) {
    auto reports = run_suite(suite, n);
    json j = json::array();
    bool ok = true;
    for (const SuiteReport &r : reports) {
        j.push_back(r.to_json());
        ok &= r.passed();
        std::cerr << (r.passed() ? "PASS " : "FAIL ") << r.suite << " n=" << r.n << " (" << r.checks.size()
                  << " checks)\n";
        for (const CheckResult &c : r.checks) {
            if (!c.passed && !c.informational) {
                std::cerr << "  failed: " << c.name << " value=" << c.value << "\n";
            }
        }
    }
    json report = {{"suite", suite}, {"n", n}, {"passed", ok}, {"version", kVersion}, {"reports", j}};
    emit(out, report.dump(2) + "\n");
    return ok ? 0 : kExitVerifyFailed;
}

int cmd_mub(unsigned n, const std::string &conv_id, const std::string &out) {
    if (n < 1 || n > 5) {
        throw ConfigError("mub supports 1 <= n <= 5");
    }
    FieldContext ctx(n);
    PhaseConvention conv = PhaseConvention::parse(conv_id, n);
    if (!conv.is_tomographic_family()) {
        throw ConfigError("mub needs a tomographic convention (tomo-p<p>, graph+, graph-)");
    }
    MubFamily fam = mub_family(ctx, conv);
    json j = {{"n", n}, {"convention", conv.id()}, {"field", field_json(ctx)}, {"bases", mub_json(ctx, fam)}};
    emit(out, j.dump(2) + "\n");
    return 0;
}

int cmd_diff(const std::string &a, const std::string &b, double tol) {
    json ja, jb;
    try {
        ja = json::parse(read_file(a));
        jb = json::parse(read_file(b));
    } catch (const json::exception &e) {
        throw ConfigError(std::string("diff needs JSON exports: ") + e.what());
    }
    DiffReport r = diff_exports(ja, jb);
    json j = {{"kind", r.kind},
              {"compared", r.compared},
              {"max_deviation", r.max_deviation},
              {"mean_deviation", r.mean_deviation},
              {"tolerance", tol},
              {"within_tolerance", r.max_deviation <= tol}};
    std::cout << j.dump(2) << "\n";
    return r.max_deviation <= tol ? 0 : kExitVerifyFailed;
}

int cmd_reference(const std::string &id, unsigned n, const ReferenceParams &params, bool normalized,
                  const std::string &format, const std::string &out) {
    if (n < 1 || n > 5) {
        throw ConfigError("reference supports 1 <= n <= 5");
    }
    if (format != "csv" && format != "json" && format != "dat") {
        throw ConfigError("--format must be csv, json or dat");
    }
    FieldContext ctx(n);
    ReferenceSymbol ref =
        reference_symbol(ctx, id, params, normalized ? ReferenceVariant::Normalized : ReferenceVariant::AsPrinted);
    json extra = {
        {"reference", id},
        {"variant", normalized ? "normalized" : "as-printed"},
        {"params", {{"xi_abs", params.xi_abs}, {"phi", params.phi}, {"theta", params.theta}, {"psi", params.psi}}}};
    if (!ref.note.empty()) {
        extra["note"] = ref.note;
    }
    std::string text;
    if (ref.projected) {
        text = format == "csv"    ? format_csv(ref.proj, extra)
               : format == "json" ? format_json(ref.proj, extra)
                                  : format_dat(ref.proj, extra);
    } else {
        text = format == "csv"    ? format_csv(ctx, ref.grid, extra)
               : format == "json" ? format_json(ctx, ref.grid, extra)
                                  : format_dat(ctx, ref.grid, extra);
    }
    emit(out, text);
    return 0;
}

int cmd_theorem(unsigned n, const std::string &out) {
    FieldContext ctx(n);
    json j = {{"n", n}, {"version", kVersion}};
    if (n >= 4) {
        json list = json::array();
        size_t flipping = 0;
        for (const TheoremWitness &w : theorem_witness_search(ctx)) {
            flipping += w.flips();
            list.push_back({{"p", w.p},
                            {"q", w.q},
                            {"r", w.r},
                            {"s", w.s},
                            {"alpha", ctx.coords(w.alpha).str()},
                            {"beta", ctx.coords(w.beta).str()},
                            {"xi", ctx.coords(w.xi).str()},
                            {"sign_before", w.before},
                            {"sign_after", w.after},
                            {"flips", w.flips()}});
        }
        j["candidates"] = list;
        j["flipping"] = flipping;
    }
    if (n <= 5) {
        TomographicSearch search = search_tomographic_invariant_phases(ctx);
        j["invariant_phase_search"] = {{"orbit_unknowns", search.unknowns},
                                       {"equations", search.equations},
                                       {"rank", search.rank},
                                       {"solvable", search.consistent},
                                       {"log2_solutions", search.consistent ? json(search.free_bits) : json(nullptr)}};
    }
    emit(out, j.dump(2) + "\n");
    return n < 4 || j["flipping"].get<size_t>() > 0 ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Discrete phase-space maps for N-qubit systems over GF(2^N)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    unsigned field_n = 2;
    std::string field_out;
    auto *field = app.add_subcommand("field", "Field tables and self-dual basis");
    field->add_option("--n", field_n, "Qubit count (1..8)")->required();
    field->add_option("--out", field_out, "Output path (default stdout)");

    MapConfig cfg;
    std::string config_path;
    auto *map = app.add_subcommand("map", "Compute and export a phase-space symbol");
    map->add_option("--n", cfg.n, "Qubit count");
    map->add_option("--s", cfg.s, "Kernel parameter s in {-1, 0, 1}");
    map->add_option("--conv", cfg.conv, "Phase convention id");
    map->add_option("--state", cfg.state, "ghz, w, coherent[(zeta)], logical:<bits>, logical(<bits>), [amplitudes], file:<amplitudes.json>");
    map->add_option("--zeta", cfg.zeta, "Coherent-state parameter (re,im or mag@deg)");
    map->add_option("--fiducial", cfg.fiducial, "Fiducial spin-coherent parameter (re,im or mag@deg)");
    map->add_option("--format", cfg.format, "csv, json or dat");
    map->add_option("--out", cfg.out, "Output path; the projection goes to <out>.proj");
    map->add_flag("--project", cfg.project, "Also export the (m,n,k) projection");
    map->add_option("--config", config_path, "JSON config file (explicit flags take precedence)");

    std::string suite = "all", verify_out;
    unsigned verify_n = 2;
    auto *verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "field, pauli, mub, kernel, tomographic, symmetric, theorem, all");
    verify->add_option("--n", verify_n, "Qubit count");
    verify->add_option("--out", verify_out, "JSON report path (default stdout)");

    unsigned mub_n = 2;
    std::string mub_conv = "tomo-p1", mub_out;
    auto *mub = app.add_subcommand("mub", "Dump the mutually unbiased bases as JSON");
    mub->add_option("--n", mub_n, "Qubit count");
    mub->add_option("--conv", mub_conv, "Tomographic convention id");
    mub->add_option("--out", mub_out, "Output path");

    std::string diff_a, diff_b;
    double diff_tol = 1e-10;
    auto *diff = app.add_subcommand("diff", "Compare two JSON exports");
    diff->add_option("a", diff_a)->required();
    diff->add_option("b", diff_b)->required();
    diff->add_option("--tol", diff_tol, "Tolerance for a zero exit code");

    std::string ref_id, ref_format = "csv", ref_out;
    unsigned ref_n = 2;
    ReferenceParams ref_params;
    bool ref_normalized = false;
    auto *ref = app.add_subcommand("reference", "Export a closed-form reference symbol");
    ref->add_option("--id", ref_id, "ghz_q_proj, ghz_w0, wstate_w0, equatorial_w0, su2_element, ghz_w0_proj")
        ->required();
    ref->add_option("--n", ref_n, "Qubit count");
    ref->add_option("--xi-abs", ref_params.xi_abs, "Fiducial modulus for ghz_q_proj");
    ref->add_option("--phi", ref_params.phi, "Euler angle phi");
    ref->add_option("--theta", ref_params.theta, "Euler angle theta");
    ref->add_option("--psi", ref_params.psi, "Euler angle psi");
    ref->add_flag("--normalized", ref_normalized, "Rescale to match the computed symbol");
    ref->add_option("--format", ref_format, "csv, json or dat");
    ref->add_option("--out", ref_out, "Output path");

    unsigned thm_n = 4;
    std::string thm_out;
    auto *thm = app.add_subcommand("theorem", "Witness search for the permutation sign flip");
    thm->add_option("--n", thm_n, "Qubit count");
    thm->add_option("--out", thm_out, "Output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*field) {
            return cmd_field(field_n, field_out);
        }
        if (*map) {
            if (!config_path.empty()) {
                apply_config_file(cfg, config_path, *map);
            }
            return cmd_map(cfg);
        }
        if (*verify) {
            return cmd_verify(suite, verify_n, verify_out);
        }
        if (*mub) {
            return cmd_mub(mub_n, mub_conv, mub_out);
        }
        if (*diff) {
            return cmd_diff(diff_a, diff_b, diff_tol);
        }
        if (*ref) {
            return cmd_reference(ref_id, ref_n, ref_params, ref_normalized, ref_format, ref_out);
        }
        if (*thm) {
            return cmd_theorem(thm_n, thm_out);
        }
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return 0;
}
