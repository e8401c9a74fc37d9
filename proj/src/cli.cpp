#include "latgon/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "latgon/census.hpp"
#include "latgon/divisor.hpp"
#include "latgon/json_io.hpp"
#include "latgon/subdivision.hpp"
#include "latgon/verify.hpp"

namespace latgon::cli {

namespace {

constexpr int kOk = 0, kInputError = 1, kUsageError = 2, kVerifyFailure = 3;

Json lattice_width_json(const LatticePolygon& P) {
    LatticeWidthResult lw = lattice_width(P);
    Json j{{"value", lw.width}};
    if (lw.direction) j["direction"] = Json::array({lw.direction->x, lw.direction->y});
    return j;
}

Json classification_json(const Classification& c) {
    Json j;
    switch (c.shape) {
        case StandardShape::Simplex:
            j["shape"] = "simplex";
            j["d"] = c.d;
            break;
        case StandardShape::TwoUpsilon: j["shape"] = "two-upsilon"; break;
        default: j["shape"] = "other";
    }
    return j;
}

Json map_to_json(const AffineLatticeMap& m) {
    return Json{{"matrix", Json::array({Json::array({m.a, m.b}), Json::array({m.c, m.d})})},
                {"translation", Json::array({m.tx, m.ty})}};
}

int cmd_polygon_analyze(const std::string& file, std::ostream& out) {
    LatticePolygon P = polygon_from_json(load_json_file(file));
    Json j;
    j["dimension"] = P.dimension();
    j["vertices"] = polygon_to_json(P)["vertices"];
    j["lattice_point_count"] = P.lattice_point_count();
    j["genus"] = genus(P);
    j["lattice_width"] = lattice_width_json(P);
    j["lattice_width_recursive"] =
        P.dimension() >= 0 ? Json(lattice_width_recursive(P)) : Json(-1);
    j["interior_hull"] = polygon_to_json(interior_hull(P));
    if (P.dimension() == 2) {
        RelaxedHull r = relaxed_hull(P);
        Json rj = rational_polygon_to_json(r.polygon);
        rj["is_lattice"] = r.is_lattice;
        j["relaxed_hull"] = rj;
        j["is_interior_polygon"] = r.is_lattice;
        j["classification"] = classification_json(recognize_standard(P));
        j["gonality_upper_bound"] = gonality_upper_bound(P);
    } else {
        j["relaxed_hull"] = nullptr;
        j["is_interior_polygon"] = nullptr;
        j["classification"] = Json{{"shape", "other"}};
        j["gonality_upper_bound"] = nullptr;
    }
    out << j.dump(2) << "\n";
    return kOk;
}

int cmd_polygon_equiv(const std::string& fa, const std::string& fb, std::ostream& out) {
    LatticePolygon A = polygon_from_json(load_json_file(fa));
    LatticePolygon B = polygon_from_json(load_json_file(fb));
    auto w = are_equivalent(A, B);
    Json j{{"equivalent", w.has_value()}};
    if (w) j["map"] = map_to_json(*w);
    out << j.dump(2) << "\n";
    return kOk;
}

int cmd_subdivide(const std::string& file, std::ostream& out) {
    auto [base, h] = heights_from_json(load_json_file(file));
    out << subdivision_to_json(subdivide(base, h)).dump(2) << "\n";
    return kOk;
}

int cmd_dualgraph(const std::string& file, bool corrected, const std::string& format,
                  std::ostream& out) {
    auto [base, h] = heights_from_json(load_json_file(file));
    RegularSubdivision s = subdivide(base, h);
    MetricGraph g = corrected ? corrected_graph(s) : dual_graph(s);
    if (format == "dot") out << to_dot(g);
    else out << graph_to_json(g).dump(2) << "\n";
    return kOk;
}

int cmd_gon(const std::string& file, int level, const std::string& format, std::ostream& out) {
    MetricGraph g = graph_from_json(load_json_file(file));
    if (format == "dot") {
        out << to_dot(g);
        return kOk;
    }
    Json j;
    if (level > 0) {
        GonalityResult r = gonality(g, level);
        j = Json{{"level", r.level},
                 {"gonality", r.gonality},
                 {"witness", divisor_to_json(expand_model(g, r.level), r.witness)}};
    } else {
        // stability report across the first three subdivision levels
        Json levels = Json::array();
        Z first = -1;
        bool stable = true;
        for (int n = 1; n <= 3; ++n) {
            GonalityResult r = gonality(g, n);
            if (first < 0) first = r.gonality;
            stable = stable && r.gonality == first;
            levels.push_back(Json{{"level", n},
                                  {"gonality", r.gonality},
                                  {"witness", divisor_to_json(expand_model(g, n), r.witness)}});
        }
        j = Json{{"levels", levels}, {"stable", stable}, {"gonality", first}};
    }
    out << j.dump(2) << "\n";
    return kOk;
}

int cmd_rank(const std::string& gfile, const std::string& dfile, int level, std::ostream& out) {
    MetricGraph g = graph_from_json(load_json_file(gfile));
    Model m = expand_model(g, level);
    Divisor d = divisor_from_json(m, load_json_file(dfile));
    out << Json{{"level", level}, {"degree", d.degree()}, {"rank", rank(m, d)}}.dump(2) << "\n";
    return kOk;
}

int cmd_reduce(const std::string& gfile, const std::string& dfile, const std::string& base,
               int level, std::ostream& out) {
    MetricGraph g = graph_from_json(load_json_file(gfile));
    Model m = expand_model(g, level);
    Divisor d = divisor_from_json(m, load_json_file(dfile));
    int q = m.vertex_index(base);
    Divisor r = reduce(m, d, q);
    Json j = divisor_to_json(m, r);
    j["base"] = base;
    j["level"] = level;
    out << j.dump(2) << "\n";
    return kOk;
}

int cmd_equivdiv(const std::string& gfile, const std::string& f1, const std::string& f2,
                 int level, std::ostream& out) {
    MetricGraph g = graph_from_json(load_json_file(gfile));
    Model m = expand_model(g, level);
    Divisor a = divisor_from_json(m, load_json_file(f1));
    Divisor b = divisor_from_json(m, load_json_file(f2));
    Json j;
    if (a.degree() != b.degree()) {
        j = Json{{"equivalent", false},
                 {"reason", "degree mismatch"},
                 {"degrees", Json::array({a.degree(), b.degree()})}};
    } else {
        bool eq = divisors_equivalent(m, a, b);
        j = Json{{"equivalent", eq}};
    }
    j["level"] = level;
    out << j.dump(2) << "\n";
    return kOk;
}

int cmd_census(Z minp, Z maxp, bool interior, bool all_dims, const std::string& out_file,
               std::ostream& out) {
    CensusQuery q;
    q.min_points = minp;
    q.max_points = maxp;
    q.require_interior = interior;
    q.require_two_dimensional = !all_dims;
    auto classes = enumerate_polygons(q);
    std::ostringstream body;
    for (const LatticePolygon& P : classes) body << polygon_to_json(P).dump() << "\n";
    if (out_file.empty()) {
        out << body.str();
    } else {
        std::ofstream f(out_file);
        if (!f) throw std::invalid_argument("cannot write file: " + out_file);
        f << body.str();
        out << Json{{"classes", classes.size()}, {"file", out_file}}.dump(2) << "\n";
    }
    return kOk;
}

int cmd_census_verify(const std::string& file, bool t6, bool l5, std::ostream& out) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open file: " + file);
    std::vector<LatticePolygon> classes;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            classes.push_back(polygon_from_json(Json::parse(line)));
        } catch (const std::exception& e) {
            throw std::invalid_argument(file + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!t6 && !l5) t6 = l5 = true;
    Json j;
    bool ok = true;
    auto report_json = [](const CensusReport& r) {
        Json violations = Json::array();
        for (const LatticePolygon& P : r.violations) violations.push_back(polygon_to_json(P));
        return Json{{"checked", r.checked},
                    {"exception_branch", r.exception_branch},
                    {"violations", violations}};
    };
    if (t6) {
        CensusReport r = verify_theorem6(classes);
        ok = ok && r.ok();
        j["theorem6"] = report_json(r);
    }
    if (l5) {
        CensusReport r = verify_lemma5(classes);
        ok = ok && r.ok();
        j["lemma5"] = report_json(r);
    }
    j["ok"] = ok;
    out << j.dump(2) << "\n";
    return ok ? kOk : kVerifyFailure;
}

int cmd_bound(const std::string& pfile, const std::string& hfile, int level, std::ostream& out) {
    LatticePolygon P = polygon_from_json(load_json_file(pfile));
    auto [base, h] = heights_from_json(load_json_file(hfile));
    if (!(base == P))
        throw std::invalid_argument("bound: heights file is for a different base polygon");
    Z upper = gonality_upper_bound(P);
    RegularSubdivision s = subdivide(base, h);
    MetricGraph g = corrected_graph(s);
    GonalityResult r = gonality(g, level);
    Json j{{"upper_bound", upper},
           {"graph_gonality", r.gonality},
           {"level", level},
           {"cells", s.cells.size()},
           {"meets", r.gonality == upper}};
    out << j.dump(2) << "\n";
    return kOk;
}

int cmd_verify_paper(const std::string& only, bool as_json, std::ostream& out) {
    std::vector<std::string> selection;
    std::stringstream ss(only);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) selection.push_back(tok);

    std::vector<CheckResult> results;
    try {
        results = run_verify_checks(selection);
    } catch (const std::invalid_argument& e) {
        out << "error: " << e.what() << "\n";
        return kUsageError;
    }
    bool all_pass = true;
    for (const CheckResult& r : results) all_pass = all_pass && r.pass;

    if (as_json) {
        Json arr = Json::array();
        for (const CheckResult& r : results)
            arr.push_back(Json{{"check", r.name},
                               {"criterion", r.criterion},
                               {"status", r.pass ? "pass" : "fail"},
                               {"expected", r.expected},
                               {"computed", r.computed},
                               {"basis", r.basis},
                               {"seconds", r.seconds}});
        out << Json{{"checks", arr}, {"ok", all_pass}}.dump(2) << "\n";
    } else {
        for (const CheckResult& r : results) {
            out << (r.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(26) << r.name
                << "  [" << r.basis << "] expected: " << r.expected << "\n";
            out << "      " << std::setw(26) << "" << "  computed: " << r.computed << "  ("
                << std::fixed << std::setprecision(2) << r.seconds << "s)\n";
        }
        out << (all_pass ? "all checks passed" : "SOME CHECKS FAILED") << " (" << results.size()
            << " run)\n";
    }
    return all_pass ? kOk : kVerifyFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"lattice polygons, regular subdivisions and divisor theory on metric graphs"};
    app.require_subcommand(1);

    // polygon analyze | equiv
    auto* polygon = app.add_subcommand("polygon", "lattice polygon invariants");
    polygon->require_subcommand(1);
    std::string pa_file;
    auto* analyze = polygon->add_subcommand("analyze", "genus, widths, hulls, classification");
    analyze->add_option("file", pa_file, "polygon JSON file")->required();
    std::string pe_a, pe_b;
    auto* equiv = polygon->add_subcommand("equiv", "unimodular equivalence with witness");
    equiv->add_option("fileA", pe_a)->required();
    equiv->add_option("fileB", pe_b)->required();

    // subdivide
    std::string sub_file;
    auto* sub = app.add_subcommand("subdivide", "regular subdivision from integer heights");
    sub->add_option("file", sub_file, "heights JSON file")->required();

    // dualgraph
    std::string dg_file, dg_format = "json";
    bool dg_corrected = false;
    auto* dg = app.add_subcommand("dualgraph", "cell adjacency graph of a subdivision");
    dg->add_option("file", dg_file, "heights JSON file")->required();
    dg->add_flag("--corrected", dg_corrected, "apply the chain-length correction");
    dg->add_option("--format", dg_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    // gon
    std::string gon_file, gon_format = "json";
    int gon_level = 0;
    auto* gon_cmd = app.add_subcommand("gon", "gonality of a metric graph");
    gon_cmd->add_option("file", gon_file, "graph JSON file")->required();
    gon_cmd->add_option("--level", gon_level, "subdivision level (default: report 1..3)")
        ->check(CLI::Range(1, 24));
    gon_cmd->add_option("--format", gon_format)->check(CLI::IsMember({"json", "dot"}));

    // rank
    std::string rank_g, rank_d;
    int rank_level = 1;
    auto* rank_cmd = app.add_subcommand("rank", "divisor rank on a model");
    rank_cmd->add_option("graph", rank_g)->required();
    rank_cmd->add_option("divisor", rank_d)->required();
    rank_cmd->add_option("--level", rank_level)->check(CLI::Range(1, 24));

    // reduce
    std::string red_g, red_d, red_base;
    int red_level = 1;
    auto* red_cmd = app.add_subcommand("reduce", "base-vertex reduced form of a divisor");
    red_cmd->add_option("graph", red_g)->required();
    red_cmd->add_option("divisor", red_d)->required();
    red_cmd->add_option("--base", red_base, "base vertex label")->required();
    red_cmd->add_option("--level", red_level)->check(CLI::Range(1, 24));

    // equivdiv
    std::string eq_g, eq_1, eq_2;
    int eq_level = 1;
    auto* eq_cmd = app.add_subcommand("equivdiv", "linear equivalence of two divisors");
    eq_cmd->add_option("graph", eq_g)->required();
    eq_cmd->add_option("divisor1", eq_1)->required();
    eq_cmd->add_option("divisor2", eq_2)->required();
    eq_cmd->add_option("--level", eq_level)->check(CLI::Range(1, 24));

    // census [verify]
    Z c_min = 3, c_max = 13;
    bool c_interior = false, c_all_dims = false;
    std::string c_out;
    auto* census = app.add_subcommand("census", "enumerate polygon classes");
    census->add_option("--min", c_min, "minimum lattice point count");
    census->add_option("--max", c_max, "maximum lattice point count");
    census->add_flag("--interior", c_interior, "keep only interior polygons");
    census->add_flag("--all-dimensional", c_all_dims, "include points and segments");
    census->add_option("--out", c_out, "write JSONL to this file");
    bool cv_t6 = false, cv_l5 = false;
    std::string cv_file;
    auto* census_verify = census->add_subcommand("verify", "bulk verification over a census file");
    census_verify->add_flag("--theorem6", cv_t6, "width recursion dichotomy");
    census_verify->add_flag("--lemma5", cv_l5, "relaxation round trip and maximality");
    census_verify->add_option("file", cv_file, "census JSONL file")->required();

    // bound
    std::string b_poly, b_heights;
    int b_level = 1;
    auto* bound = app.add_subcommand("bound", "polygon upper bound vs dual-graph gonality");
    bound->add_option("polygon", b_poly)->required();
    bound->add_option("--heights", b_heights, "heights JSON file")->required();
    bound->add_option("--level", b_level)->check(CLI::Range(1, 24));

    // verify-paper
    std::string vp_only;
    bool vp_json = false;
    auto* vp = app.add_subcommand("verify-paper", "run the named verification checks");
    vp->add_option("--only", vp_only, "comma-separated check names");
    vp->add_flag("--json", vp_json, "emit a JSON report");

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());  // CLI11 parses reversed vectors
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kOk;
        }
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (analyze->parsed()) return cmd_polygon_analyze(pa_file, out);
        if (equiv->parsed()) return cmd_polygon_equiv(pe_a, pe_b, out);
        if (sub->parsed()) return cmd_subdivide(sub_file, out);
        if (dg->parsed()) return cmd_dualgraph(dg_file, dg_corrected, dg_format, out);
        if (gon_cmd->parsed()) return cmd_gon(gon_file, gon_level, gon_format, out);
        if (rank_cmd->parsed()) return cmd_rank(rank_g, rank_d, rank_level, out);
        if (red_cmd->parsed()) return cmd_reduce(red_g, red_d, red_base, red_level, out);
        if (eq_cmd->parsed()) return cmd_equivdiv(eq_g, eq_1, eq_2, eq_level, out);
        if (census->parsed()) {
            if (census_verify->parsed()) return cmd_census_verify(cv_file, cv_t6, cv_l5, out);
            return cmd_census(c_min, c_max, c_interior, c_all_dims, c_out, out);
        }
        if (bound->parsed()) return cmd_bound(b_poly, b_heights, b_level, out);
        if (vp->parsed()) return cmd_verify_paper(vp_only, vp_json, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInputError;
    }
    err << "usage error: no subcommand\n";
    return kUsageError;
}

}  // namespace latgon::cli
