#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "latgon/subdivision.hpp"
#include "support/testutil.hpp"

using namespace latgon;

namespace {

LatticePolygon poly(std::vector<Pt> pts) { return LatticePolygon::hull(std::move(pts)); }

// hull{(-3,0),(3,0),(0,3)} with height 0 on the inner triangle corners and 1
// on the outer corners; the remaining lattice points sit above the hull.
std::pair<LatticePolygon, HeightFunction> erratum_example() {
    LatticePolygon base = poly({{-3, 0}, {3, 0}, {0, 3}});
    HeightFunction h;
    for (const Pt& p : lattice_points(base)) h.assignments[p] = 9;
    for (Pt p : {Pt{-1, 1}, Pt{1, 1}, Pt{0, 2}}) h.assignments[p] = 0;
    for (Pt p : {Pt{-3, 0}, Pt{3, 0}, Pt{0, 3}}) h.assignments[p] = 1;
    return {base, h};
}

bool has_cell(const RegularSubdivision& s, const LatticePolygon& c) {
    return std::find(s.cells.begin(), s.cells.end(), c) != s.cells.end();
}

std::multiset<Z> adjacency_lengths(const RegularSubdivision& s) {
    std::multiset<Z> out;
    for (const Adjacency& a : s.adjacencies) out.insert(a.integral_length);
    return out;
}

std::multiset<Z> chain_lengths(const RegularSubdivision& s) {
    std::multiset<Z> out;
    for (const Adjacency& a : s.adjacencies) out.insert(a.chain_length);
    return out;
}

}  // namespace

TEST_CASE("integral_length") {
    CHECK(integral_length({-1, 1}, {1, 1}) == 2);
    CHECK(integral_length({3, 0}, {1, 1}) == 1);
    CHECK(integral_length({2, 5}, {2, 5}) == 0);
}

TEST_CASE("facet_normal") {
    CHECK(facet_normal({0, 0, 0}) == Vec3{0, 0, 1});
    CHECK(facet_normal({0, -1, 1}) == Vec3{0, 1, 1});
    CHECK(facet_normal({1, 1, -2}) == Vec3{-1, -1, 1});
}

TEST_CASE("chain_length_d") {
    CHECK(chain_length_d({0, 0, 1}, {0, 1, 1}) == 1);
    CHECK(chain_length_d({1, -1, 1}, {-1, -1, 1}) == 2);
    CHECK(chain_length_d({0, 1, 1}, {-1, -1, 1}) == 1);
    CHECK_THROWS_AS(chain_length_d({1, 2, 1}, {1, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(chain_length_d({1, 2, 2}, {0, 0, 1}), std::invalid_argument);
}

TEST_CASE("subdivide: erratum example") {
    auto [base, h] = erratum_example();
    RegularSubdivision s = subdivide(base, h);

    REQUIRE(s.cells.size() == 4);
    CHECK(has_cell(s, poly({{-1, 1}, {1, 1}, {0, 2}})));                 // central
    CHECK(has_cell(s, poly({{-3, 0}, {3, 0}, {1, 1}, {-1, 1}})));        // bottom
    CHECK(has_cell(s, poly({{3, 0}, {0, 3}, {0, 2}, {1, 1}})));          // right
    CHECK(has_cell(s, poly({{-3, 0}, {-1, 1}, {0, 2}, {0, 3}})));        // left

    // v = 0, v = 1 - y, v = x + y - 2, v = -x + y - 2
    std::set<std::array<Z, 3>> affs;
    for (const CellAffine& a : s.cell_affine) affs.insert({a.a, a.b, a.c});
    CHECK(affs == std::set<std::array<Z, 3>>{
                      {0, 0, 0}, {0, -1, 1}, {1, 1, -2}, {-1, 1, -2}});

    CHECK(adjacency_lengths(s) == std::multiset<Z>{1, 1, 1, 1, 1, 2});
    CHECK(chain_lengths(s) == std::multiset<Z>{1, 1, 1, 1, 1, 2});

    // The d = 2 adjacency is the left/right pair, whose shared edge lies on
    // the line x = 0.
    for (const Adjacency& a : s.adjacencies)
        if (a.chain_length == 2) {
            CHECK(a.edge_from == Pt{0, 2});
            CHECK(a.edge_to == Pt{0, 3});
            CHECK(a.integral_length == 1);
        }

    // Points with input height 9 sit strictly above the lower hull.
    CHECK(s.points_above.size() == 10);
    CHECK(s.induced.at({0, 0}) == 1);   // bottom cell: 1 - y
    CHECK(s.induced.at({0, 1}) == 0);   // central cell
    CHECK(s.induced.at({2, 0}) == 1);

    MetricGraph g = dual_graph(s);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edges().size() == 7);
    CHECK(g.first_betti() == 4);
    for (const GraphEdge& e : g.edges()) CHECK(e.length == 1);

    MetricGraph gc = corrected_graph(s);
    CHECK(gc.vertex_count() == 4);
    CHECK(gc.edges().size() == 7);
    CHECK(gc.first_betti() == 4);
    std::multiset<Z> lens;
    for (const GraphEdge& e : gc.edges()) lens.insert(e.length);
    CHECK(lens == std::multiset<Z>{1, 1, 1, 1, 1, 1, 2});
}

TEST_CASE("subdivide: affine heights give the trivial subdivision") {
    LatticePolygon base = poly({{0, 0}, {3, 0}, {0, 2}});
    HeightFunction h;
    for (const Pt& p : lattice_points(base)) h.assignments[p] = p.x + 2 * p.y - 1;
    RegularSubdivision s = subdivide(base, h);
    REQUIRE(s.cells.size() == 1);
    CHECK(s.cells[0] == base);
    CHECK(s.cell_affine[0] == CellAffine{1, 2, -1});
    CHECK(s.adjacencies.empty());
    CHECK(s.points_above.empty());

    MetricGraph g = dual_graph(s);
    CHECK(g.vertex_count() == 1);
    CHECK(g.edges().empty());
}

TEST_CASE("subdivide: unit square splits into two unimodular triangles") {
    LatticePolygon base = rect(1, 1);
    HeightFunction h;
    h.assignments[{0, 0}] = 0;
    h.assignments[{1, 0}] = 0;
    h.assignments[{0, 1}] = 0;
    h.assignments[{1, 1}] = 1;
    RegularSubdivision s = subdivide(base, h);
    REQUIRE(s.cells.size() == 2);
    CHECK(has_cell(s, poly({{0, 0}, {1, 0}, {0, 1}})));
    CHECK(has_cell(s, poly({{1, 0}, {1, 1}, {0, 1}})));
    REQUIRE(s.adjacencies.size() == 1);
    CHECK(s.adjacencies[0].integral_length == 1);
    CHECK(s.adjacencies[0].chain_length == 1);
}

TEST_CASE("subdivide: input validation") {
    LatticePolygon base = rect(1, 1);
    HeightFunction missing;
    missing.assignments[{0, 0}] = 0;
    CHECK_THROWS_AS(subdivide(base, missing), std::invalid_argument);

    HeightFunction stray;
    for (const Pt& p : lattice_points(base)) stray.assignments[p] = 0;
    stray.assignments[{7, 7}] = 1;
    CHECK_THROWS_AS(subdivide(base, stray), std::invalid_argument);

    HeightFunction h;
    h.assignments[{0, 0}] = 0;
    h.assignments[{1, 0}] = 0;
    CHECK_THROWS_AS(subdivide(poly({{0, 0}, {1, 0}}), h), std::invalid_argument);
}

TEST_CASE("theorem14_subdivision") {
    SUBCASE("a=2, b=4") {
        LatticePolygon d = staircase_family(2, 4, {2, 2, 1, 1, 0});
        RegularSubdivision s = theorem14_subdivision(d, 2);
        REQUIRE(s.cells.size() == 2);
        CHECK(has_cell(s, poly({{0, 0}, {2, 0}, {0, 2}})));
        for (const Adjacency& a : s.adjacencies) CHECK(a.chain_length == 1);
        MetricGraph g = corrected_graph(s);
        CHECK(graph_isomorphic(g, gamma_r(2)));
    }
    SUBCASE("3*Sigma has an empty last cell") {
        LatticePolygon d = standard_simplex(3);
        RegularSubdivision s = theorem14_subdivision(d, 3);
        REQUIRE(s.cells.size() == 2);
        CHECK(has_cell(s, poly({{0, 0}, {2, 0}, {0, 2}})));
        CHECK(has_cell(s, poly({{2, 0}, {3, 0}, {0, 3}, {0, 2}})));
        CHECK(graph_isomorphic(corrected_graph(s), gamma_r(2)));
    }
    SUBCASE("a=3 generic staircase gives Gamma_3") {
        LatticePolygon d = staircase_family(3, 4, {3, 3, 2, 1, 0});
        RegularSubdivision s = theorem14_subdivision(d, 3);
        REQUIRE(s.cells.size() == 3);
        for (const Adjacency& a : s.adjacencies) CHECK(a.chain_length == 1);
        CHECK(graph_isomorphic(corrected_graph(s), gamma_r(3)));
        CHECK(graph_isomorphic(dual_graph(s), gamma_r(3)));
    }
    SUBCASE("rejects polygons outside the family") {
        CHECK_THROWS_AS(theorem14_subdivision(rect(2, 2), 2), std::invalid_argument);
        CHECK_THROWS_AS(theorem14_subdivision(standard_simplex(3), 2), std::invalid_argument);
        CHECK_THROWS_AS(theorem14_subdivision(dilate(upsilon(), 2), 2), std::invalid_argument);
    }
}

TEST_CASE("subdivision properties on random heights") {
    auto rng = testutil::make_rng(31);
    std::uniform_int_distribution<int> hv(0, 4);
    std::vector<LatticePolygon> bases = {
        poly({{-3, 0}, {3, 0}, {0, 3}}), rect(2, 2), standard_simplex(3), dilate(upsilon(), 2)};
    for (const LatticePolygon& base : bases) {
        auto pts = lattice_points(base);
        for (int it = 0; it < 25; ++it) {
            HeightFunction h;
            for (const Pt& p : pts) h.assignments[p] = hv(rng);
            RegularSubdivision s;
            try {
                s = subdivide(base, h);
            } catch (const std::invalid_argument&) {
                continue;  // heights without an integral lower hull are rejected
            }

            // cells tile the base
            i128 area = 0;
            for (const auto& c : s.cells) area += c.area2();
            CHECK(area == base.area2());
            for (const Pt& p : pts) {
                bool covered = false;
                for (const auto& c : s.cells) covered |= c.contains(p);
                CHECK(covered);
            }
            // the two cell affines agree on every shared edge
            for (const Adjacency& adj : s.adjacencies) {
                const CellAffine& fa = s.cell_affine[size_t(adj.cell_a)];
                const CellAffine& fb = s.cell_affine[size_t(adj.cell_b)];
                for (Pt e : {adj.edge_from, adj.edge_to}) {
                    CHECK(fa.a * e.x + fa.b * e.y + fa.c == fb.a * e.x + fb.b * e.y + fb.c);
                }
                CHECK(adj.integral_length >= 1);
                CHECK(adj.chain_length >= 1);
                // d divides every minor of the stacked normals
                Vec3 na = facet_normal(fa), nb = facet_normal(fb);
                CHECK((na.x * nb.y - na.y * nb.x) % adj.chain_length == 0);
                CHECK((na.x - nb.x) % adj.chain_length == 0);
                CHECK((na.y - nb.y) % adj.chain_length == 0);
                // symmetry of d
                CHECK(chain_length_d(na, nb) == chain_length_d(nb, na));
            }
            // corrected and plain dual graph have the same first Betti number
            CHECK(dual_graph(s).first_betti() == corrected_graph(s).first_betti());

            // invariance under adding a globally affine integer function
            HeightFunction h2;
            for (const Pt& p : pts) h2.assignments[p] = h.at(p) + 2 * p.x - 3 * p.y + 5;
            RegularSubdivision s2 = subdivide(base, h2);
            CHECK(s.cells == s2.cells);
            REQUIRE(s.adjacencies.size() == s2.adjacencies.size());
            for (size_t i = 0; i < s.adjacencies.size(); ++i) {
                CHECK(s.adjacencies[i].integral_length == s2.adjacencies[i].integral_length);
                CHECK(s.adjacencies[i].chain_length == s2.adjacencies[i].chain_length);
            }
        }
    }
}

TEST_CASE("expand_model basics") {
    MetricGraph g2 = gamma_r(2);
    Model m1 = expand_model(g2, 1);
    CHECK(m1.vertex_count() == 2);
    CHECK(m1.edges.size() == 2);

    Model m2 = expand_model(g2, 2);
    CHECK(m2.vertex_count() == 4);
    CHECK(m2.edges.size() == 4);

    auto [base, h] = erratum_example();
    MetricGraph gv = corrected_graph(subdivide(base, h));
    Model mv = expand_model(gv, 1);
    CHECK(mv.vertex_count() == 5);  // one interior vertex on the length-2 edge
    CHECK(mv.edges.size() == 8);
}

TEST_CASE("graph_isomorphic") {
    MetricGraph g3 = gamma_r(3);
    MetricGraph g3_relabeled({"b", "a", "c"},
                             {{1, 0, 1}, {1, 0, 1}, {0, 2, 1}, {0, 2, 1}, {0, 2, 1}});
    CHECK(graph_isomorphic(g3, g3_relabeled));

    MetricGraph cycle4({"a", "b", "c", "d"}, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
    CHECK_FALSE(graph_isomorphic(gamma_r(2), cycle4));

    Model m = expand_model(gamma_r(2), 2);
    std::vector<GraphEdge> edges;
    for (auto [u, v] : m.edges) edges.push_back({u, v, 1});
    MetricGraph expanded(m.labels, edges);
    CHECK(graph_isomorphic(expanded, cycle4));

    CHECK(gamma_r(1).vertex_count() == 1);
    CHECK(gamma_r(3).edges().size() == 5);
    for (int r = 1; r <= 6; ++r) CHECK(gamma_r(r).first_betti() == Z(r) * (r - 1) / 2);
}
