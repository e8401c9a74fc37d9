#include "latgon/json_io.hpp"

#include <fstream>

namespace latgon {

namespace {

Z json_int(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string(what) + ": expected an integer, got " + j.dump());
    return j.get<Z>();
}

}  // namespace

Json polygon_to_json(const LatticePolygon& P) {
    Json verts = Json::array();
    for (const Pt& p : P.vertices()) verts.push_back(Json::array({p.x, p.y}));
    return Json{{"vertices", verts}};
}

LatticePolygon polygon_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw std::invalid_argument("polygon: expected {\"vertices\": [[x, y], ...]}");
    std::vector<Pt> pts;
    for (const Json& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2)
            throw std::invalid_argument("polygon: each vertex must be [x, y], got " + v.dump());
        pts.push_back({json_int(v[0], "polygon vertex"), json_int(v[1], "polygon vertex")});
    }
    return LatticePolygon::hull(pts);
}

Json rational_polygon_to_json(const RationalPolygon& P) {
    Json verts = Json::array();
    for (const RatPt& p : P.vertices) verts.push_back(Json::array({p.x.str(), p.y.str()}));
    return Json{{"vertices", verts}};
}

Json heights_to_json(const LatticePolygon& base, const HeightFunction& h) {
    Json hs = Json::array();
    for (const auto& [p, v] : h.assignments) hs.push_back(Json::array({p.x, p.y, v}));
    return Json{{"base", polygon_to_json(base)}, {"heights", hs}};
}

std::pair<LatticePolygon, HeightFunction> heights_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("base") || !j.contains("heights"))
        throw std::invalid_argument("heights: expected {\"base\": ..., \"heights\": [[x, y, h], ...]}");
    LatticePolygon base = polygon_from_json(j["base"]);
    HeightFunction h;
    for (const Json& e : j["heights"]) {
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("heights: each entry must be [x, y, h], got " + e.dump());
        Pt p{json_int(e[0], "height entry"), json_int(e[1], "height entry")};
        if (h.assignments.count(p))
            throw std::invalid_argument("heights: duplicate point (" + std::to_string(p.x) + ", " +
                                        std::to_string(p.y) + ")");
        h.assignments[p] = json_int(e[2], "height value");
    }
    return {base, h};
}

Json subdivision_to_json(const RegularSubdivision& s) {
    Json cells = Json::array();
    for (size_t i = 0; i < s.cells.size(); ++i) {
        const CellAffine& a = s.cell_affine[i];
        Vec3 n = facet_normal(a);
        cells.push_back(Json{{"vertices", polygon_to_json(s.cells[i])["vertices"]},
                             {"affine", Json::array({a.a, a.b, a.c})},
                             {"normal", Json::array({n.x, n.y, n.z})}});
    }
    Json adj = Json::array();
    for (const Adjacency& a : s.adjacencies)
        adj.push_back(Json{{"cells", Json::array({a.cell_a, a.cell_b})},
                           {"edge", Json::array({Json::array({a.edge_from.x, a.edge_from.y}),
                                                 Json::array({a.edge_to.x, a.edge_to.y})})},
                           {"integral_length", a.integral_length},
                           {"chain_length", a.chain_length}});
    Json above = Json::array();
    for (const Pt& p : s.points_above) above.push_back(Json::array({p.x, p.y}));
    return Json{{"base", polygon_to_json(s.base)},
                {"cells", cells},
                {"adjacencies", adj},
                {"points_above_hull", above}};
}

Json graph_to_json(const MetricGraph& g) {
    Json vs = Json::array();
    for (const std::string& l : g.labels()) vs.push_back(l);
    Json es = Json::array();
    for (const GraphEdge& e : g.edges())
        es.push_back(Json::array({g.labels()[size_t(e.u)], g.labels()[size_t(e.v)], e.length}));
    return Json{{"vertices", vs}, {"edges", es}};
}

MetricGraph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("graph: expected {\"vertices\": [...], \"edges\": [[u, v, len], ...]}");
    std::vector<std::string> labels;
    for (const Json& v : j["vertices"]) {
        if (!v.is_string()) throw std::invalid_argument("graph: vertex labels must be strings");
        labels.push_back(v.get<std::string>());
    }
    auto index_of = [&](const std::string& l) {
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == l) return int(i);
        throw std::invalid_argument("graph: edge endpoint '" + l + "' is not a declared vertex");
    };
    std::vector<GraphEdge> edges;
    for (const Json& e : j["edges"]) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3)
            throw std::invalid_argument("graph: each edge must be [u, v] or [u, v, length], got " +
                                        e.dump());
        if (!e[0].is_string() || !e[1].is_string())
            throw std::invalid_argument("graph: edge endpoints must be vertex labels");
        Z len = e.size() == 3 ? json_int(e[2], "edge length") : 1;
        edges.push_back({index_of(e[0].get<std::string>()), index_of(e[1].get<std::string>()), len});
    }
    return MetricGraph(std::move(labels), std::move(edges));
}

Json divisor_to_json(const Model& m, const Divisor& d) {
    Json coeffs = Json::object();
    for (int v = 0; v < m.vertex_count(); ++v)
        if (d.coeffs[size_t(v)] != 0) coeffs[m.labels[size_t(v)]] = d.coeffs[size_t(v)];
    return Json{{"coeffs", coeffs}};
}

Divisor divisor_from_json(const Model& m, const Json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_object())
        throw std::invalid_argument("divisor: expected {\"coeffs\": {\"label\": n, ...}}");
    Divisor d = zero_divisor(m);
    for (const auto& [label, value] : j["coeffs"].items())
        d.coeffs[size_t(m.vertex_index(label))] = json_int(value, "divisor coefficient");
    return d;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return j;
}

}  // namespace latgon
