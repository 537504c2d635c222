// singlab: exact invariants of diagonal hypersurface singularities.
//
// Batch front end over the core library. Every subcommand prints a report
// on stdout, either as a fixed-width table (default) or as JSON
// (--format json, schema "singlab/1"). Exit codes: 0 success, 1 input
// error, 2 success with a declared-incomplete result.

#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "singlab/hochschild.hpp"
#include "singlab/maslov.hpp"
#include "singlab/monodromy.hpp"
#include "singlab/resolutions.hpp"
#include "singlab/singularity.hpp"
#include "singlab/smith.hpp"

using json = nlohmann::ordered_json;
using namespace singlab;

namespace {

struct Options {
    std::string format = "table";
    unsigned threads = 1;
};

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidInput(std::string("bad ") + what + " entry '" + item + "'");
        }
    }
    if (out.empty()) throw InvalidInput(std::string("empty ") + what + " list");
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text, const char* what) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_rational(item));
    if (out.empty()) throw InvalidInput(std::string("empty ") + what + " list");
    return out;
}

DegreeWindow parse_window(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw InvalidInput("window must be LO:HI, got '" + text + "'");
    try {
        std::int64_t lo = std::stoll(text.substr(0, colon));
        std::int64_t hi = std::stoll(text.substr(colon + 1));
        if (lo > hi) throw InvalidInput("window low end above high end");
        return DegreeWindow{lo, hi};
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw InvalidInput("window must be LO:HI, got '" + text + "'");
    }
}

PlaneCurveFactorization parse_factors(const std::string& text) {
    std::vector<CurveFactor> fs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "t") {
            fs.push_back(FactorVarT{});
        } else if (item == "z") {
            fs.push_back(FactorVarZ{});
        } else {
            auto colon = item.find(':');
            if (colon == std::string::npos)
                throw InvalidInput("factor must be 't', 'z' or 'P:Q', got '" + item + "'");
            try {
                std::int64_t p = std::stoll(item.substr(0, colon));
                std::int64_t q = std::stoll(item.substr(colon + 1));
                fs.push_back(FactorBinomial{p, q});
            } catch (const std::exception&) {
                throw InvalidInput("bad binomial factor '" + item + "'");
            }
        }
    }
    return PlaneCurveFactorization(std::move(fs));
}

AnglePath load_angle_path(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw InvalidInput("cannot open path file '" + file + "'");
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw InvalidInput("bad JSON in '" + file + "': " + e.what());
    }
    if (!doc.contains("coordinates") || !doc["coordinates"].is_array())
        throw InvalidInput("path document needs a 'coordinates' array");
    std::vector<AnglePath::Breakpoints> coords;
    for (const auto& coord : doc["coordinates"]) {
        AnglePath::Breakpoints bps;
        for (const auto& bp : coord) {
            if (!bp.is_array() || bp.size() != 2)
                throw InvalidInput("each breakpoint must be a [time, turns] pair");
            bps.emplace_back(parse_rational(bp[0].get<std::string>()),
                             parse_rational(bp[1].get<std::string>()));
        }
        coords.push_back(std::move(bps));
    }
    return AnglePath(std::move(coords));
}

json exponents_json(const std::vector<std::int64_t>& a) {
    json arr = json::array();
    for (auto v : a) arr.push_back(v);
    return arr;
}

json report_envelope(const std::string& subcommand, json inputs) {
    json r;
    r["schema"] = "singlab/1";
    r["subcommand"] = subcommand;
    r["inputs"] = std::move(inputs);
    return r;
}

json classification_json(const LinkClassification& c) {
    json out;
    switch (c.kind) {
        case LinkClassification::Kind::Sphere:
            out["kind"] = "sphere";
            out["dimension"] = c.sphere_dim;
            break;
        case LinkClassification::Kind::ConnectedSumS2xS3:
            out["kind"] = "connected_sum_s2xs3";
            out["copies"] = c.connected_sum_count;
            break;
        case LinkClassification::Kind::FreePlusTorsion: {
            out["kind"] = "free_plus_torsion";
            out["free_rank"] = c.free_rank;
            json t = json::array();
            for (const auto& d : c.torsion) t.push_back(d.str());
            out["torsion"] = t;  // divisors of T, the group being T + T
            break;
        }
        case LinkClassification::Kind::Unsupported:
            out["kind"] = "unsupported";
            out["reason"] = c.reason;
            break;
    }
    out["display"] = to_string(c);
    return out;
}

json gamma_monomial_json(const GammaMonomial& g) {
    json out;
    out["residues"] = g.gamma.residues;
    out["type"] = to_string(g.type);
    out["b0"] = g.b0;
    out["x0_raw"] = g.x0_raw;
    out["exponents"] = g.exponents;
    out["weight"] = g.weight;
    out["negativity"] = g.negativity;
    out["degree"] = g.degree;
    return out;
}

json completeness_json(const HHTable& t) {
    json c;
    c["complete"] = t.complete;
    c["b0_raw_bound"] = t.b0_raw_bound;
    c["sigma"] = rational_to_string(t.sigma);
    if (t.derived_raw_bound)
        c["derived_raw_bound"] = *t.derived_raw_bound;
    return c;
}

json hh_table_json(const HHTable& t, bool with_generators) {
    json out;
    out["window"] = {t.window.lo, t.window.hi};
    json dims = json::array();
    for (std::int64_t d = t.window.hi; d >= t.window.lo; --d) {
        json row;
        row["degree"] = d;
        row["dim"] = t.dimension(d);
        if (with_generators) {
            json gens = json::array();
            auto it = t.generators.find(d);
            if (it != t.generators.end())
                for (const auto& g : it->second) gens.push_back(gamma_monomial_json(g));
            row["generators"] = gens;
        }
        dims.push_back(std::move(row));
    }
    out["dimensions"] = std::move(dims);
    return out;
}

// ---- plain-text rendering ----------------------------------------------

void print_kv(const std::string& k, const std::string& v) {
    std::printf("%-22s %s\n", (k + ":").c_str(), v.c_str());
}

void print_table(const json& r) {
    const std::string& sub = r["subcommand"].get_ref<const std::string&>();
    const json& res = r["results"];
    if (sub == "hh" || sub == "sh") {
        if (res.contains("refusal")) {
            print_kv("verdict", "refused");
            print_kv("reason", res["refusal"].get<std::string>());
            return;
        }
        if (res.contains("provenance"))
            print_kv("note", res["provenance"].get<std::string>());
        const json& table = res.contains("table") ? res["table"] : res;
        std::printf("%8s %8s\n", "degree", "dim");
        for (const auto& row : table["dimensions"])
            std::printf("%8" PRId64 " %8" PRId64 "\n", row["degree"].get<std::int64_t>(),
                        row["dim"].get<std::int64_t>());
        const json& c = r["completeness"];
        print_kv("complete", c["complete"].get<bool>() ? "yes" : "no");
        print_kv("b0 raw bound", std::to_string(c["b0_raw_bound"].get<std::int64_t>()));
        return;
    }
    if (sub == "bigraded") {
        std::printf("%8s %12s %12s %8s\n", "degree", "first", "second", "b0");
        for (const auto& row : res["degrees"])
            for (const auto& e : row["entries"])
                std::printf("%8" PRId64 " %12s %12s %8" PRId64 "\n",
                            row["degree"].get<std::int64_t>(),
                            e["first"].get<std::string>().c_str(),
                            e["second"].get<std::string>().c_str(),
                            e["b0"].get<std::int64_t>());
        return;
    }
    if (sub == "charpoly") {
        std::printf("%8s %14s\n", "order", "multiplicity");
        for (const auto& row : res["factors"])
            std::printf("%8" PRId64 " %14" PRId64 "\n", row["order"].get<std::int64_t>(),
                        row["multiplicity"].get<std::int64_t>());
        if (res.contains("expanded")) {
            std::string poly;
            const auto& coeffs = res["expanded"];
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                if (i) poly += " + ";
                poly += coeffs[i].get<std::string>() + "*t^" + std::to_string(i);
            }
            print_kv("expanded", poly);
        }
        print_kv("mu", res["mu"].get<std::string>());
        return;
    }
    if (sub == "monodromy") {
        for (const auto& row : res["matrix"]) {
            for (const auto& v : row) std::printf("%4" PRId64, v.get<std::int64_t>());
            std::printf("\n");
        }
        return;
    }
    if (sub == "jacobian") {
        for (const auto& m : res["monomials"]) {
            std::string mon;
            for (const auto& e : m) mon += (mon.empty() ? "" : ",") +
                                           std::to_string(e.get<std::int64_t>());
            std::printf("(%s)\n", mon.c_str());
        }
        print_kv("count", std::to_string(res["count"].get<std::int64_t>()));
        return;
    }
    if (sub == "maslov") {
        print_kv("index", res["index"].get<std::string>());
        if (res.contains("loop_winding"))
            print_kv("loop winding", res["loop_winding"].get<std::string>());
        std::printf("%12s %6s %6s %9s\n", "time", "coord", "slope", "boundary");
        for (const auto& c : res["crossings"])
            std::printf("%12s %6" PRId64 " %6d %9s\n",
                        c["time"].get<std::string>().c_str(),
                        c["coordinate"].get<std::int64_t>(), c["slope_sign"].get<int>(),
                        c["boundary"].get<bool>() ? "yes" : "no");
        return;
    }
    // generic: flat key/value dump of the results object
    for (const auto& [k, v] : res.items()) {
        if (v.is_string()) print_kv(k, v.get<std::string>());
        else print_kv(k, v.dump());
    }
}

void emit(const json& r, const Options& opt, int exit_code = 0) {
    if (opt.format == "json") {
        std::cout << r.dump(2) << "\n";
    } else {
        print_table(r);
    }
    std::exit(exit_code);
}

int incomplete_exit(const json& r) {
    if (r.contains("completeness") && !r["completeness"]["complete"].get<bool>()) return 2;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of diagonal hypersurface singularities"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    app.add_option("--threads", opt.threads, "worker count for parallel enumerations")
        ->check(CLI::Range(1u, 64u))
        ->capture_default_str();

    std::string exponents, exponents2, matrix_rows, window_text, subset_text, a_list;
    std::string degrees_text, scale_text, md_text, duval_text, factors_text, path_file;
    std::int64_t b0_max = -1, orbit = 0, fermat_m = 0, fermat_n = 0, cox_m = 0, round_n = 0;
    bool with_generators = false;

    auto* c_weights = app.add_subcommand("weights", "weight system and amplitude");
    c_weights->add_option("--exponents", exponents, "diagonal exponents a_1,..,a_{m+1}");
    c_weights->add_option("--matrix", matrix_rows,
                          "exponent matrix rows 'a,b;c,d' (general invertible form)");

    auto* c_milnor = app.add_subcommand("milnor", "Milnor number");
    c_milnor->add_option("--exponents", exponents)->required();

    auto* c_jac = app.add_subcommand("jacobian", "monomial basis of the Jacobian ring");
    c_jac->add_option("--exponents", exponents)->required();
    c_jac->add_option("--subset", subset_text, "1-based variable indices (default: all)");

    auto* c_mono = app.add_subcommand("monodromy", "integral monodromy matrix");
    c_mono->add_option("--exponents", exponents)->required();

    auto* c_char = app.add_subcommand("charpoly", "characteristic polynomial of the monodromy");
    c_char->add_option("--exponents", exponents)->required();

    auto* c_link = app.add_subcommand("link", "topological classification of the link");
    c_link->add_option("--exponents", exponents)->required();

    auto* c_maslov = app.add_subcommand("maslov", "crossing index of an angle path");
    c_maslov->add_option("--path", path_file, "JSON file with the angle path")->required();

    auto* c_cz = app.add_subcommand("cz", "Conley-Zehnder index of an ellipsoid orbit");
    c_cz->add_option("--a", a_list, "ellipsoid parameters, rationals")->required();
    c_cz->add_option("--orbit", orbit, "1-based orbit index");
    c_cz->add_option("--round", round_n, "instead: simple orbit on the round S^{2n-1}");

    auto* c_mi = app.add_subcommand("mi", "minimal orbit index and index positivity");
    c_mi->add_option("--a", a_list, "ellipsoid parameters, rationals")->required();

    auto* c_bridge = app.add_subcommand("bridge", "minimal discrepancy to hmi bridge");
    c_bridge->add_option("--md", md_text, "minimal discrepancy (rational)")->required();

    auto* c_hh = app.add_subcommand("hh", "Hochschild cohomology dimension table");
    c_hh->add_option("--exponents", exponents)->required();
    c_hh->add_option("--window", window_text, "degree window LO:HI")->required();
    c_hh->add_option("--b0-max", b0_max, "explicit raw x0 bound");
    c_hh->add_flag("--generators", with_generators, "list the generators per degree");

    auto* c_big = app.add_subcommand("bigraded", "bigraded generators per degree");
    c_big->add_option("--exponents", exponents)->required();
    c_big->add_option("--degrees", degrees_text, "degrees, comma separated")->required();
    c_big->add_option("--scale", scale_text, "second-degree scale (default: n)");
    c_big->add_option("--b0-max", b0_max, "explicit raw x0 bound");

    auto* c_dist = app.add_subcommand("distinguish", "compare bigradings of two links");
    c_dist->add_option("--exponents", exponents)->required();
    c_dist->add_option("--exponents2", exponents2)->required();
    c_dist->add_option("--window", window_text, "degree window LO:HI")->required();
    c_dist->add_option("--b0-max", b0_max, "explicit raw x0 bound");

    auto* c_sh = app.add_subcommand("sh", "symplectic cohomology via the Hochschild table");
    c_sh->add_option("--exponents", exponents)->required();
    c_sh->add_option("--window", window_text, "degree window LO:HI")->required();
    c_sh->add_option("--b0-max", b0_max, "explicit raw x0 bound");
    c_sh->add_flag("--generators", with_generators, "list the generators per degree");

    auto* c_cox = app.add_subcommand("coxeter", "Coxeter number of a du Val type");
    c_cox->add_option("--type", duval_text, "A<n>, D<n>, E6, E7 or E8")->required();
    c_cox->add_option("--m", cox_m, "also decide the t^m substitution");

    auto* c_katz = app.add_subcommand("katz", "branch counting small-resolution criterion");
    c_katz->add_option("--factors", factors_text, "factors: t, z or P:Q binomials")
        ->required();

    auto* c_fermat = app.add_subcommand("fermat", "link of x1^2+x2^2+x3^m+x4^n");
    c_fermat->add_option("--m", fermat_m)->required();
    c_fermat->add_option("--n", fermat_n)->required();

    auto* c_cross = app.add_subcommand("crosscheck", "three-way exceptional curve count");
    c_cross->add_option("--exponents", exponents, "shape 2,2,m,n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        std::optional<std::int64_t> b0opt;
        if (b0_max >= 0) b0opt = b0_max;

        if (c_weights->parsed()) {
            std::optional<InvertibleMatrixSingularity> sing;
            json inputs;
            if (!exponents.empty()) {
                auto a = parse_int_list(exponents, "exponent");
                inputs["exponents"] = exponents_json(a);
                sing = InvertibleMatrixSingularity::diagonal(DiagonalSingularity(a));
            } else if (!matrix_rows.empty()) {
                std::vector<std::vector<std::int64_t>> rows;
                std::stringstream ss(matrix_rows);
                std::string row;
                while (std::getline(ss, row, ';'))
                    rows.push_back(parse_int_list(row, "matrix"));
                inputs["matrix"] = rows;
                sing = InvertibleMatrixSingularity(std::move(rows));
            } else {
                throw InvalidInput("weights needs --exponents or --matrix");
            }
            auto ws = solve_weights(*sing);
            auto amp = amplitude(ws);
            json r = report_envelope("weights", std::move(inputs));
            json weights = json::array();
            for (const auto& w : ws.weights) weights.push_back(w.str());
            r["results"]["weights"] = weights;
            r["results"]["degree"] = ws.degree.str();
            r["results"]["amplitude"] = amp.value.str();
            r["results"]["class"] = to_string(amp.cls);
            emit(r, opt);
        }

        if (c_milnor->parsed()) {
            auto a = parse_int_list(exponents, "exponent");
            DiagonalSingularity s(a);
            json r = report_envelope("milnor", {{"exponents", exponents_json(a)}});
            r["results"]["milnor"] = milnor_number(s).str();
            emit(r, opt);
        }

        if (c_jac->parsed()) {
            auto a = parse_int_list(exponents, "exponent");
            DiagonalSingularity s(a);
            std::vector<std::size_t> subset;
            if (subset_text.empty()) {
                for (std::size_t i = 0; i < s.variable_count(); ++i) subset.push_back(i);
            } else {
                for (auto v : parse_int_list(subset_text, "subset")) {
                    if (v < 1) throw IndexOutOfRange("subset indices are 1-based");
                    subset.push_back(static_cast<std::size_t>(v - 1));
                }
            }
            auto basis = jacobian_basis(s, subset);
            json r = report_envelope("jacobian", {{"exponents", exponents_json(a)},
                                                  {"subset", subset_text.empty()
                                                                 ? json("all")
                                                                 : json(subset_text)}});
            json mons = json::array();
            for (const auto& m : basis) mons.push_back(m.exponents);
            r["results"]["monomials"] = mons;
            r["results"]["count"] = static_cast<std::int64_t>(basis.size());
            emit(r, opt);
        }

        if (c_mono->parsed()) {
            auto a = parse_int_list(exponents, "exponent");
            DiagonalSingularity s(a);
            auto m = integral_monodromy(s);
            json r = report_envelope("monodromy", {{"exponents", exponents_json(a)}});
            json rows = json::array();
            for (std::size_t i = 0; i < m.rows(); ++i) {
                json row = json::array();
                for (std::size_t j = 0; j < m.cols(); ++j)
                    row.push_back(static_cast<std::int64_t>(m.at(i, j)));
                rows.push_back(std::move(row));
            }
            r["results"]["size"] = static_cast<std::int64_t>(m.rows());
            r["results"]["matrix"] = std::move(rows);
            emit(r, opt);
        }

        if (c_char->parsed()) {
            auto a = parse_int_list(exponents, "exponent");
            DiagonalSingularity s(a);
            auto cm = char_poly(s, SizeCaps{}, opt.threads);
            json r = report_envelope("charpoly", {{"exponents", exponents_json(a)}});
            json factors = json::array();
            for (const auto& [n, e] : cm.multiplicities())
                factors.push_back({{"order", n}, {"multiplicity", e}});
            r["results"]["factors"] = std::move(factors);
            BigInt mu = milnor_number(s);
            if (mu <= 128) {
                json coeffs = json::array();
                for (const auto& c : expand_char_poly(cm)) coeffs.push_back(c.str());
                r["results"]["expanded"] = std::move(coeffs);
            }
            r["results"]["mu"] = mu.str();
            r["results"]["det_h_minus_id"] = det_h_minus_id(s).str();
            emit(r, opt);
        }

        if (c_link->parsed()) {
            auto a = parse_int_list(exponents, "exponent");
            DiagonalSingularity s(a);
            auto cls = classify_link(s);
            json r = report_envelope("link", {{"exponents", exponents_json(a)}});
            r["results"]["classification"] = classification_json(cls);
            r["results"]["det_h_minus_id"] = det_h_minus_id(s).str();
            if (s.dimension() == 3 &&
                cls.kind != LinkClassification::Kind::Sphere) {
                auto m = integral_monodromy(s);
                auto f = smith_normal_form(m - IntegerMatrix::identity(m.rows()),
                                           SnfOptions{false});
                json diag = json::array();
                for (const auto& d : f.diagonal) diag.push_back(d.str());
                r["results"]["snf_h_minus_id"] = std::move(diag);
            }
            r["provenance"] = json::array(
                {"sphere test: |det(M - I)| = 1 decides topological spheres in "
                 "dimension >= 5",
                 "non-sphere case: simply connected 5-manifolds bounding "
                 "2-connected manifolds are classified by H_2 = F + (T + T)"});
            emit(r, opt);
        }

        if (c_maslov->parsed()) {
            AnglePath p = load_angle_path(path_file);
            auto rep = crossing_report(p);
            json r = report_envelope("maslov", {{"path_file", path_file}});
            r["results"]["index"] = rational_to_string(rep.index);
            bool is_loop = true;
            for (const auto& bps : p.coordinates())
                if (!is_integer(bps.back().second - bps.front().second)) is_loop = false;
            if (is_loop) r["results"]["loop_winding"] = loop_maslov(p).str();
            json cs = json::array();
            for (const auto& c : rep.crossings)
                cs.push_back({{"time", rational_to_string(c.time)},
                              {"coordinate", static_cast<std::int64_t>(c.coordinate)},
                              {"slope_sign", c.slope_sign},
                              {"boundary", c.boundary}});
            r["results"]["crossings"] = std::move(cs);
            emit(r, opt);
        }

        if (c_cz->parsed()) {
            json r = report_envelope("cz", {{"a", a_list}});
            if (round_n > 0) {
                r["inputs"]["round"] = round_n;
                r["results"]["cz"] = cz_round_sphere(round_n).str();
            } else {
                if (orbit < 1) throw InvalidInput("cz needs --orbit or --round");
                auto a = parse_rational_list(a_list, "parameter");
                r["inputs"]["orbit"] = orbit;
                r["results"]["cz"] =
                    cz_ellipsoid_orbit(a, static_cast<std::size_t>(orbit)).str();
            }
            emit(r, opt);
        }

        if (c_mi->parsed()) {
            auto a = parse_rational_list(a_list, "parameter");
            auto mi = minimal_index(a);
            json r = report_envelope("mi", {{"a", a_list}});
            r["results"]["mi"] = mi.mi.str();
            r["results"]["index_positive"] = mi.index_positive;
            emit(r, opt);
        }

        if (c_bridge->parsed()) {
            Rational md = parse_rational(md_text);
            auto b = hmi_md_bridge(md);
            json r = report_envelope("bridge", {{"md", md_text}});
            if (b.negative) {
                r["results"]["hmi"] = "negative";
            } else {
                r["results"]["hmi"] = rational_to_string(*b.hmi);
                r["results"]["cz_lower_bound"] = {
                    {"constant", rational_to_string(b.cz_lower_bound->constant)},
                    {"n_coefficient", rational_to_string(b.cz_lower_bound->n_coefficient)},
                    {"rendered",
                     rational_to_string(b.cz_lower_bound->constant) + " - n"}};
            }
            r["provenance"] = json::array(
                {"hmi = 2*md for normal isolated numerically Q-Gorenstein germs with "
                 "rationally trivial H^1 of the link; negative md only bounds hmi < 0"});
            emit(r, opt);
        }

        if (c_hh->parsed()) {
            auto a = parse_int_list(exponents, "exponent");
            DiagonalSingularity s(a);
            auto w = parse_window(window_text);
            auto t = hh_dimensions(s, w, b0opt, opt.threads);
            json r = report_envelope("hh", {{"exponents", exponents_json(a)},
                                            {"window", window_text}});
            r["results"] = hh_table_json(t, with_generators);
            r["completeness"] = completeness_json(t);
            emit(r, opt, incomplete_exit(r));
        }

        if (c_big->parsed()) {
            auto a = parse_int_list(exponents, "exponent");
            DiagonalSingularity s(a);
            auto degs = parse_int_list(degrees_text, "degree");
            std::optional<Rational> scale;
            if (!scale_text.empty()) scale = parse_rational(scale_text);
            auto t = bigraded_table(s, degs, scale, b0opt, opt.threads);
            json r = report_envelope("bigraded", {{"exponents", exponents_json(a)},
                                                  {"degrees", degrees_text},
                                                  {"scale", rational_to_string(t.scale)}});
            json rows = json::array();
            for (auto d : degs) {
                json row;
                row["degree"] = d;
                json entries = json::array();
                for (const auto& e : t.by_degree.at(d))
                    entries.push_back({{"first", rational_to_string(e.first)},
                                       {"second", rational_to_string(e.second)},
                                       {"b0", e.b0}});
                row["entries"] = std::move(entries);
                rows.push_back(std::move(row));
            }
            r["results"]["degrees"] = std::move(rows);
            r["completeness"]["complete"] = t.complete;
            emit(r, opt, incomplete_exit(r));
        }

        if (c_dist->parsed()) {
            auto a1 = parse_int_list(exponents, "exponent");
            auto a2 = parse_int_list(exponents2, "exponent");
            DiagonalSingularity s1(a1), s2(a2);
            auto w = parse_window(window_text);
            auto v = contact_distinguish(s1, s2, w, b0opt, opt.threads);
            json r = report_envelope("distinguish", {{"exponents", exponents_json(a1)},
                                                     {"exponents2", exponents_json(a2)},
                                                     {"window", window_text}});
            r["results"]["verdict"] =
                v.distinct ? "distinct" : "indistinguishable_in_window";
            if (v.witness_degree) r["results"]["witness_degree"] = *v.witness_degree;
            if (v.lambda) r["results"]["lambda"] = rational_to_string(*v.lambda);
            r["completeness"]["complete"] = v.complete;
            r["provenance"] = json::array({v.license});
            emit(r, opt, incomplete_exit(r));
        }

        if (c_sh->parsed()) {
            auto a = parse_int_list(exponents, "exponent");
            DiagonalSingularity s(a);
            auto w = parse_window(window_text);
            auto res = sh_via_hh(s, w, b0opt, opt.threads);
            json r = report_envelope("sh", {{"exponents", exponents_json(a)},
                                            {"window", window_text}});
            if (!res.accepted) {
                r["results"]["refusal"] = res.refusal;
                r["completeness"]["complete"] = true;
                emit(r, opt);
            }
            r["results"]["provenance"] = res.provenance;
            r["results"]["table"] = hh_table_json(*res.table, with_generators);
            r["completeness"] = completeness_json(*res.table);
            emit(r, opt, incomplete_exit(r));
        }

        if (c_cox->parsed()) {
            auto t = DuValType::parse(duval_text);
            json r = report_envelope("coxeter", {{"type", t.name()}});
            r["results"]["coxeter"] = coxeter_number(t);
            if (cox_m > 0) {
                r["inputs"]["m"] = cox_m;
                r["results"]["substitution"] = to_string(brieskorn_small_res(t, cox_m));
            }
            emit(r, opt);
        }

        if (c_katz->parsed()) {
            auto f = parse_factors(factors_text);
            auto k = katz_small_res(f);
            json r = report_envelope("katz", {{"factors", factors_text}});
            r["results"]["branches"] = std::to_string(katz_branch_count(f));
            r["results"]["admits"] = k.admits;
            r["results"]["exceptional_curves"] = std::to_string(k.exceptional_curves);
            r["provenance"] = json::array(
                {"x^2 + y^2 + g(t,z) with b distinct branches resolves smally with a "
                 "chain of b - 1 rational curves; binomial coefficients assumed generic"});
            emit(r, opt);
        }

        if (c_fermat->parsed()) {
            auto cls = fermat_link(fermat_m, fermat_n);
            json r = report_envelope("fermat", {{"m", fermat_m}, {"n", fermat_n}});
            r["results"]["classification"] = classification_json(cls);
            emit(r, opt);
        }

        if (c_cross->parsed()) {
            auto a = parse_int_list(exponents, "exponent");
            auto rep = cross_check(DiagonalSingularity(a));
            json r = report_envelope("crosscheck", {{"exponents", exponents_json(a)}});
            r["results"]["ell_gcd"] = rep.ell_gcd;
            r["results"]["ell_eigenvalue_one"] = rep.ell_eigen;
            r["results"]["ell_snf_free_rank"] = rep.ell_snf;
            r["results"]["agree"] = rep.agree;
            r["results"]["sphere"] = rep.sphere;
            emit(r, opt);
        }
    } catch (const Error& e) {
        std::cerr << "error (" << e.code() << "): " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
