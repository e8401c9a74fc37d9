#include "doctest.h"

#include <random>

#include "latgon/divisor.hpp"
#include "latgon/subdivision.hpp"
#include "support/testutil.hpp"

using namespace latgon;

namespace {

Divisor div_at(const Model& m, std::initializer_list<std::pair<const char*, Z>> entries) {
    Divisor d = zero_divisor(m);
    for (const auto& [label, c] : entries) d.coeffs[size_t(m.vertex_index(label))] = c;
    return d;
}

MetricGraph erratum_corrected_graph() {
    LatticePolygon base = LatticePolygon::hull({{-3, 0}, {3, 0}, {0, 3}});
    HeightFunction h;
    for (const Pt& p : lattice_points(base)) h.assignments[p] = 9;
    for (Pt p : {Pt{-1, 1}, Pt{1, 1}, Pt{0, 2}}) h.assignments[p] = 0;
    for (Pt p : {Pt{-3, 0}, Pt{3, 0}, Pt{0, 3}}) h.assignments[p] = 1;
    return corrected_graph(subdivide(base, h));
}

MetricGraph erratum_plain_graph() {
    LatticePolygon base = LatticePolygon::hull({{-3, 0}, {3, 0}, {0, 3}});
    HeightFunction h;
    for (const Pt& p : lattice_points(base)) h.assignments[p] = 9;
    for (Pt p : {Pt{-1, 1}, Pt{1, 1}, Pt{0, 2}}) h.assignments[p] = 0;
    for (Pt p : {Pt{-3, 0}, Pt{3, 0}, Pt{0, 3}}) h.assignments[p] = 1;
    return dual_graph(subdivide(base, h));
}

// Connected multigraphs on <= max_vertices vertices with <= max_edges unit
// edges, enumerated as multiplicity vectors over the vertex pairs.
std::vector<MetricGraph> small_multigraphs(int max_vertices, int max_edges) {
    std::vector<MetricGraph> out;
    for (int n = 1; n <= max_vertices; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
        std::vector<int> mult(pairs.size(), 0);
        auto emit = [&]() {
            std::vector<GraphEdge> edges;
            for (size_t p = 0; p < pairs.size(); ++p)
                for (int k = 0; k < mult[p]; ++k)
                    edges.push_back({pairs[p].first, pairs[p].second, 1});
            std::vector<std::string> labels;
            for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
            try {
                out.push_back(MetricGraph(labels, edges));
            } catch (const std::invalid_argument&) {
                // disconnected
            }
        };
        auto rec = [&](auto&& self, size_t pos, int remaining) -> void {
            if (pos == pairs.size()) {
                emit();
                return;
            }
            for (int k = 0; k <= remaining; ++k) {
                mult[pos] = k;
                self(self, pos + 1, remaining - k);
            }
            mult[pos] = 0;
        };
        rec(rec, 0, max_edges);
    }
    return out;
}

}  // namespace

TEST_CASE("dhar_burn hand simulations") {
    Model g2 = expand_model(gamma_r(2), 1);
    int v1 = g2.vertex_index("v1"), v2 = g2.vertex_index("v2");

    // two chips hold both burning edges
    CHECK(dhar_burn(g2, div_at(g2, {{"v2", 2}}), v1) == std::set<int>{v2});
    // one chip does not
    CHECK(dhar_burn(g2, div_at(g2, {{"v2", 1}}), v1).empty());

    // on a tree, everything always burns
    MetricGraph path({"a", "b", "c"}, {{0, 1, 1}, {1, 2, 1}});
    Model mp = expand_model(path, 1);
    CHECK(dhar_burn(mp, zero_divisor(mp), 0).empty());
    CHECK(dhar_burn(mp, zero_divisor(mp), 1).empty());

    CHECK_THROWS_AS(dhar_burn(g2, div_at(g2, {{"v2", -1}}), v1), std::invalid_argument);
    CHECK(dhar_burn(g2, div_at(g2, {{"v1", -5}, {"v2", 2}}), v1) == std::set<int>{v2});
}

TEST_CASE("reduce") {
    Model g2 = expand_model(gamma_r(2), 1);
    int v1 = g2.vertex_index("v1");
    CHECK(reduce(g2, div_at(g2, {{"v2", 2}}), v1) == div_at(g2, {{"v1", 2}}));

    Model g3 = expand_model(gamma_r(3), 1);
    int w1 = g3.vertex_index("v1");
    CHECK(reduce(g3, div_at(g3, {{"v3", 3}}), w1) == div_at(g3, {{"v1", 2}, {"v2", 1}}));

    // idempotence on an already reduced divisor
    Divisor r = div_at(g3, {{"v1", 4}, {"v2", 1}});
    CHECK(dhar_burn(g3, r, w1).empty());
    CHECK(reduce(g3, r, w1) == r);
}

TEST_CASE("reduce properties on random graphs") {
    auto rng = testutil::make_rng(41);
    std::vector<MetricGraph> graphs = {
        gamma_r(3), gamma_r(4), erratum_corrected_graph(),
        MetricGraph({"a", "b", "c", "d"}, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {3, 0, 3}})};
    std::uniform_int_distribution<int> coeff(-3, 4);
    for (const MetricGraph& g : graphs) {
        for (int level = 1; level <= 2; ++level) {
            Model m = expand_model(g, level);
            std::uniform_int_distribution<int> vx(0, m.vertex_count() - 1);
            for (int it = 0; it < 30; ++it) {
                Divisor D = zero_divisor(m);
                for (int j = 0; j < 4; ++j) D.coeffs[size_t(vx(rng))] += coeff(rng);
                int q = vx(rng);
                Divisor R = reduce(m, D, q);

                // degree preservation and the reduced-divisor contract
                CHECK(R.degree() == D.degree());
                bool eff_away = true;
                for (int v = 0; v < m.vertex_count(); ++v)
                    if (v != q && R.coeffs[v] < 0) eff_away = false;
                CHECK(eff_away);
                CHECK(dhar_burn(m, R, q).empty());

                // idempotence and invariance of the class representative
                CHECK(reduce(m, R, q) == R);
                Divisor shifted = D;
                // fire a random set once: subtract Laplacian column sums
                for (const auto& [a, b] : m.edges) {
                    bool a_in = a % 2 == 0, b_in = b % 2 == 0;
                    if (a_in == b_in) continue;
                    shifted.coeffs[a_in ? a : b] -= 1;
                    shifted.coeffs[a_in ? b : a] += 1;
                }
                CHECK(reduce(m, shifted, q) == R);
            }
        }
    }
}

TEST_CASE("divisors_equivalent") {
    Model g2 = expand_model(gamma_r(2), 1);
    CHECK(divisors_equivalent(g2, div_at(g2, {{"v1", 2}}), div_at(g2, {{"v2", 2}})));
    CHECK_FALSE(divisors_equivalent(g2, div_at(g2, {{"v1", 2}}), div_at(g2, {{"v1", 1}, {"v2", 1}})));
    CHECK_THROWS_AS(divisors_equivalent(g2, div_at(g2, {{"v1", 2}}), div_at(g2, {{"v1", 1}})),
                    std::invalid_argument);

    // v1 - v2 is not principal on the 2-cycle
    CHECK_FALSE(divisors_equivalent(g2, div_at(g2, {{"v1", 1}}), div_at(g2, {{"v2", 1}})));
}

TEST_CASE("erratum remark: 3v_i equivalences flip under the correction") {
    MetricGraph plain = erratum_plain_graph();
    MetricGraph corrected = erratum_corrected_graph();
    Model mp = expand_model(plain, 1);
    Model mc = expand_model(corrected, 1);

    int eq_plain = 0, eq_corrected = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Divisor a = zero_divisor(mp), b = zero_divisor(mp);
            a.coeffs[i] = 3;
            b.coeffs[j] = 3;
            if (divisors_equivalent(mp, a, b)) ++eq_plain;
            Divisor ac = zero_divisor(mc), bc = zero_divisor(mc);
            ac.coeffs[i] = 3;
            bc.coeffs[j] = 3;
            if (divisors_equivalent(mc, ac, bc)) ++eq_corrected;
        }
    CHECK(eq_plain == 0);
    CHECK(eq_corrected >= 1);
}

TEST_CASE("laplacian oracle agrees with the reduction route") {
    auto rng = testutil::make_rng(43);
    std::uniform_int_distribution<int> coeff(-2, 3);
    for (const MetricGraph& g :
         {gamma_r(2), gamma_r(3), erratum_corrected_graph(),
          MetricGraph({"a", "b"}, {{0, 1, 1}, {0, 1, 1}, {0, 1, 1}})}) {
        Model m = expand_model(g, 1);
        std::uniform_int_distribution<int> vx(0, m.vertex_count() - 1);
        for (int it = 0; it < 60; ++it) {
            Divisor a = zero_divisor(m), b = zero_divisor(m);
            for (int j = 0; j < 3; ++j) {
                a.coeffs[size_t(vx(rng))] += coeff(rng);
                b.coeffs[size_t(vx(rng))] += coeff(rng);
            }
            b.coeffs[size_t(vx(rng))] += a.degree() - b.degree();  // match degrees
            CHECK(divisors_equivalent(m, a, b) == equivalent_via_laplacian(m, a, b));
        }
    }
}

TEST_CASE("exhaustive oracle agreement on tiny multigraphs") {
    // Smoke version of the acceptance criterion: 3 vertices, 4 edges.
    auto graphs = small_multigraphs(3, 4);
    CHECK(graphs.size() > 10);
    for (const MetricGraph& g : graphs) {
        Model m = expand_model(g, 1);
        std::vector<Divisor> divisors;
        for (Z d = 0; d <= 2; ++d) {
            std::vector<Z> c(size_t(m.vertex_count()), 0);
            auto rec = [&](auto&& self, size_t pos, Z rem) -> void {
                if (pos + 1 == c.size()) {
                    c[pos] = rem;
                    divisors.push_back(Divisor{c});
                    c[pos] = 0;
                    return;
                }
                for (Z k = 0; k <= rem; ++k) {
                    c[pos] = k;
                    self(self, pos + 1, rem - k);
                }
                c[pos] = 0;
            };
            rec(rec, 0, d);
        }
        for (const Divisor& a : divisors)
            for (const Divisor& b : divisors) {
                if (a.degree() != b.degree()) continue;
                CHECK(divisors_equivalent(m, a, b) == equivalent_via_laplacian(m, a, b));
            }
    }
}

TEST_CASE("rank") {
    Model g2 = expand_model(gamma_r(2), 1);
    CHECK(rank(g2, zero_divisor(g2)) == 0);
    CHECK_FALSE(rank_at_least(g2, zero_divisor(g2), 1));

    // |v1 - v| is empty already at level 1 and stays so at level 2
    for (int level = 1; level <= 2; ++level) {
        Model m = expand_model(gamma_r(2), level);
        CHECK_FALSE(rank_at_least(m, div_at(m, {{"v1", 1}}), 1));
    }

    // every effective degree-2 divisor on the 2-cycle has rank exactly 1
    for (int level = 1; level <= 3; ++level) {
        Model m = expand_model(gamma_r(2), level);
        int n = m.vertex_count();
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                Divisor D = zero_divisor(m);
                D.coeffs[i] += 1;
                D.coeffs[j] += 1;
                CHECK(rank(m, D) == 1);
            }
    }

    Model g3 = expand_model(gamma_r(3), 1);
    CHECK(rank(g3, div_at(g3, {{"v1", 1}, {"v2", 1}, {"v3", 1}})) == 1);

    // negative-degree and empty-system cases
    Divisor neg = div_at(g3, {{"v1", -1}});
    CHECK(rank(g3, neg) == -1);
}

TEST_CASE("rank superharmonicity on small instances") {
    auto rng = testutil::make_rng(47);
    for (const MetricGraph& g : {gamma_r(2), gamma_r(3)}) {
        Model m = expand_model(g, 1);
        std::uniform_int_distribution<int> vx(0, m.vertex_count() - 1);
        for (int it = 0; it < 12; ++it) {
            Divisor D = zero_divisor(m);
            for (int j = 0; j < 3; ++j) D.coeffs[size_t(vx(rng))] += 1;
            Z rD = rank(m, D);
            for (int v = 0; v < m.vertex_count(); ++v) {
                Divisor Dm = D;
                Dm.coeffs[v] -= 1;
                Z rDm = rank(m, Dm);
                CHECK(rD >= rDm);
                CHECK(rDm >= rD - 1);
            }
        }
    }
}

TEST_CASE("gonality") {
    for (int r = 2; r <= 4; ++r)
        for (int level = 1; level <= (r == 4 ? 2 : 3); ++level) {
            GonalityResult res = gonality(gamma_r(r), level);
            CHECK(res.gonality == r);
            CHECK(res.witness.degree() == r);
        }

    // trees have gonality one
    MetricGraph star({"r", "a", "b", "c"}, {{0, 1, 1}, {0, 2, 2}, {0, 3, 1}});
    CHECK(gonality(star, 1).gonality == 1);
    CHECK(gonality(star, 2).gonality == 1);

    // the circle of circumference 2
    CHECK(gonality(gamma_r(2), 1).gonality == 2);

    // single vertex
    CHECK(gonality(gamma_r(1), 1).gonality == 1);

    // witness actually has rank one
    GonalityResult res = gonality(erratum_corrected_graph(), 1);
    Model m = expand_model(erratum_corrected_graph(), 1);
    CHECK(rank_at_least(m, res.witness, 1));
    CHECK_FALSE(res.gonality > m.first_betti() + 1);
}

TEST_CASE("gonality monotone under model refinement") {
    for (const MetricGraph& g : {gamma_r(2), gamma_r(3), erratum_corrected_graph()}) {
        Z g1 = gonality(g, 1).gonality;
        Z g2 = gonality(g, 2).gonality;
        CHECK(g2 <= g1);
        CHECK(g1 == g2);  // observed equality for all the graphs used here
    }
    // finer levels, including a non-divisor pair (2 does not divide 3)
    for (const MetricGraph& g : {gamma_r(2), gamma_r(3)}) {
        Z g1 = gonality(g, 1).gonality;
        for (int level : {2, 3, 6}) CHECK(gonality(g, level).gonality == g1);
    }
}
