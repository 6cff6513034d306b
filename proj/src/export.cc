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

#include "dpsmap/export.h"

#include <cstdio>
#include <sstream>

#include "dpsmap/errors.h"

namespace dpsmap {

using nlohmann::json;

namespace {

// Round-trip precision, locale independent.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json complex_pair(cplx v) {
    return json::array({v.real(), v.imag()});
}

void write_comment_block(std::ostringstream &os, const json &meta) {
    for (auto it = meta.begin(); it != meta.end(); ++it) {
        os << "# " << it.key() << ": " << it.value().dump() << "\n";
    }
}

cplx read_pair(const json &v) {
    return {v.at(0).get<double>(), v.at(1).get<double>()};
}

}  // namespace

json field_json(const FieldContext &ctx) {
    json basis = json::array();
    for (FieldElement t : ctx.selfdual_basis()) {
        basis.push_back(t.bits);
    }
    return {{"n", ctx.n()}, {"poly_bits", ctx.poly_bits()}, {"selfdual_basis", basis}};
}

FieldContext field_from_json(const json &j) {
    try {
        unsigned n = j.at("n").get<unsigned>();
        uint32_t poly = j.at("poly_bits").get<uint32_t>();
        if (j.contains("selfdual_basis")) {
            return FieldContext(n, poly, j.at("selfdual_basis").get<std::vector<uint32_t>>());
        }
        return FieldContext(n, poly);
    } catch (const json::exception &e) {
        throw ConfigError(std::string("invalid field record: ") + e.what());
    }
}

json function_metadata(const PhaseSpaceFunction &w, const json &extra) {
    json meta = {{"kind", "grid"},
                 {"n", w.n},
                 {"s", w.s},
                 {"convention", w.convention},
                 {"fiducial", w.fiducial},
                 {"provenance", w.provenance},
                 {"permutation_invariant_kernel", w.invariant_kernel},
                 {"version", kVersion}};
    if (extra.is_object()) {
        meta.update(extra);
    }
    return meta;
}

json function_metadata(const ProjectedFunction &p, const json &extra) {
    json meta = {{"kind", "projected"},
                 {"n", p.n},
                 {"s", p.s},
                 {"convention", p.convention},
                 {"fiducial", p.fiducial},
                 {"provenance", p.provenance},
                 {"permutation_invariant_kernel", p.invariant_kernel},
                 {"version", kVersion}};
    if (extra.is_object()) {
        meta.update(extra);
    }
    return meta;
}

std::string format_csv(const FieldContext &ctx, const PhaseSpaceFunction &w, const json &extra) {
    std::ostringstream os;
    write_comment_block(os, function_metadata(w, extra));
    os << "a_coords,b_coords,re,im\n";
    for (FieldElement a : ctx.elements()) {
        for (FieldElement b : ctx.elements()) {
            cplx v = w.at(a, b);
            os << ctx.coords(a).str() << "," << ctx.coords(b).str() << "," << fmt(v.real()) << "," << fmt(v.imag())
               << "\n";
        }
    }
    return os.str();
}

std::string format_json(const FieldContext &ctx, const PhaseSpaceFunction &w, const json &extra) {
    json values = json::array();
    for (FieldElement a : ctx.elements()) {
        for (FieldElement b : ctx.elements()) {
            values.push_back(
                {{"a", ctx.coords(a).str()}, {"b", ctx.coords(b).str()}, {"value", complex_pair(w.at(a, b))}});
        }
    }
    json out = {{"metadata", function_metadata(w, extra)}, {"field", field_json(ctx)}, {"values", values}};
    return out.dump(2) + "\n";
}

std::string format_dat(const FieldContext &ctx, const PhaseSpaceFunction &w, const json &extra) {
    std::ostringstream os;
    write_comment_block(os, function_metadata(w, extra));
    os << "# columns: alpha_index beta_index re im (self-dual coordinate order)\n";
    for (uint32_t a = 0; a < ctx.size(); a++) {
        for (uint32_t b = 0; b < ctx.size(); b++) {
            cplx v = w.at(ctx.at_index(a), ctx.at_index(b));
            os << a << " " << b << " " << fmt(v.real()) << " " << fmt(v.imag()) << "\n";
        }
        os << "\n";
    }
    return os.str();
}

std::string format_csv(const ProjectedFunction &p, const json &extra) {
    std::ostringstream os;
    write_comment_block(os, function_metadata(p, extra));
    os << "m,n,k,re,im,R_mnk\n";
    for (const auto &[key, v] : p.entries) {
        os << key[0] << "," << key[1] << "," << key[2] << "," << fmt(v.real()) << "," << fmt(v.imag()) << ","
           << r_factor(p.n, key[0], key[1], key[2]) << "\n";
    }
    return os.str();
}

std::string format_json(const ProjectedFunction &p, const json &extra) {
    json values = json::array();
    for (const auto &[key, v] : p.entries) {
        values.push_back({{"m", key[0]},
                          {"n", key[1]},
                          {"k", key[2]},
                          {"value", complex_pair(v)},
                          {"R_mnk", r_factor(p.n, key[0], key[1], key[2])}});
    }
    json out = {{"metadata", function_metadata(p, extra)}, {"values", values}};
    return out.dump(2) + "\n";
}

std::string format_dat(const ProjectedFunction &p, const json &extra) {
    std::ostringstream os;
    write_comment_block(os, function_metadata(p, extra));
    os << "# columns: m n k re im R_mnk\n";
    for (const auto &[key, v] : p.entries) {
        os << key[0] << " " << key[1] << " " << key[2] << " " << fmt(v.real()) << " " << fmt(v.imag()) << " "
           << r_factor(p.n, key[0], key[1], key[2]) << "\n";
    }
    return os.str();
}

json mub_json(const FieldContext &ctx, const MubFamily &family) {
    auto basis_json = [](const std::vector<Ket> &basis) {
        json b = json::array();
        for (const Ket &k : basis) {
            json amps = json::array();
            for (cplx v : k.amplitudes()) {
                amps.push_back(complex_pair(v));
            }
            b.push_back(amps);
        }
        return b;
    };
    json out = json::array();
    out.push_back({{"slope", "vertical"}, {"states", basis_json(family.vertical)}});
    for (FieldElement xi : ctx.elements()) {
        out.push_back({{"slope", ctx.coords(xi).str()}, {"states", basis_json(family.sloped[xi.bits])}});
    }
    return out;
}

DiffReport diff_exports(const json &a, const json &b) {
    DiffReport report;
    try {
        std::string ka = a.at("metadata").at("kind"), kb = b.at("metadata").at("kind");
        if (ka != kb) {
            throw ConfigError("cannot compare a " + ka + " export with a " + kb + " export");
        }
        report.kind = ka;
        std::map<std::string, cplx> left;
        auto key_of = [&](const json &v) {
            if (ka == "grid") {
                return v.at("a").get<std::string>() + "|" + v.at("b").get<std::string>();
            }
            return std::to_string(v.at("m").get<int>()) + "," + std::to_string(v.at("n").get<int>()) + "," +
                   std::to_string(v.at("k").get<int>());
        };
        for (const json &v : a.at("values")) {
            left[key_of(v)] = read_pair(v.at("value"));
        }
        std::map<std::string, cplx> right;
        for (const json &v : b.at("values")) {
            right[key_of(v)] = read_pair(v.at("value"));
        }
        for (const auto &[k, v] : right) {
            left.try_emplace(k, 0.0);
        }
        double sum = 0;
        for (const auto &[k, v] : left) {
            auto it = right.find(k);
            double d = std::abs(v - (it == right.end() ? cplx{0, 0} : it->second));
            report.max_deviation = std::max(report.max_deviation, d);
            sum += d;
            report.compared++;
        }
        report.mean_deviation = report.compared ? sum / double(report.compared) : 0;
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed export: ") + e.what());
    }
    return report;
}

}  // namespace dpsmap
