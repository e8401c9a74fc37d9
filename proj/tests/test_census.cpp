#include "doctest.h"

#include <map>
#include <set>

#include "latgon/census.hpp"
#include "latgon/verify.hpp"

using namespace latgon;

TEST_CASE("census: single class with exactly 3 lattice points") {
    CensusQuery q;
    q.min_points = 3;
    q.max_points = 3;
    auto classes = enumerate_polygons(q);
    REQUIRE(classes.size() == 1);
    CHECK(are_equivalent(classes[0], standard_simplex(1)).has_value());
}

TEST_CASE("census: counts match brute force up to 6 points") {
    auto brute = brute_force_census(7, 6);

    CensusQuery q;
    q.min_points = 3;
    q.max_points = 6;
    auto classes = enumerate_polygons(q);

    std::map<Z, Z> counts;
    for (const auto& P : classes) ++counts[P.lattice_point_count()];
    for (Z n = 3; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(counts[n] == Z(brute[n].size()));
    }

    // identical canonical forms, not just matching counts
    std::set<std::vector<Pt>> clever;
    for (const auto& P : classes) clever.insert(P.vertices());
    std::set<std::vector<Pt>> expected;
    for (const auto& [n, set] : brute) expected.insert(set.begin(), set.end());
    CHECK(clever == expected);
}

TEST_CASE("census: duplicate-free and canonically sorted") {
    CensusQuery q;
    q.min_points = 3;
    q.max_points = 8;
    auto classes = enumerate_polygons(q);
    std::set<std::vector<Pt>> keys;
    for (const auto& P : classes) {
        CHECK(canonical_form(P) == P);
        keys.insert(P.vertices());
    }
    CHECK(keys.size() == classes.size());
}

TEST_CASE("census: box padding does not change the counts") {
    CensusQuery q;
    q.min_points = 3;
    q.max_points = 8;
    auto base = enumerate_polygons(q);
    CensusOptions wide;
    wide.box_padding = 5;
    auto padded = enumerate_polygons(q, wide);
    CHECK(base.size() == padded.size());
    for (size_t i = 0; i < base.size(); ++i) CHECK(base[i] == padded[i]);
}

TEST_CASE("census: interior filter") {
    CensusQuery q;
    q.min_points = 3;
    q.max_points = 6;
    q.require_interior = true;
    auto interior = enumerate_polygons(q);
    for (const auto& P : interior) CHECK(is_interior_polygon(P));

    CensusQuery qall = q;
    qall.require_interior = false;
    auto all = enumerate_polygons(qall);
    Z interior_among_all = 0;
    for (const auto& P : all)
        if (is_interior_polygon(P)) ++interior_among_all;
    CHECK(Z(interior.size()) == interior_among_all);
    CHECK(interior.size() < all.size());
}

TEST_CASE("census: lower-dimensional classes without the 2D filter") {
    CensusQuery q;
    q.min_points = 2;
    q.max_points = 3;
    q.require_two_dimensional = false;
    auto classes = enumerate_polygons(q);
    Z segments = 0, polys = 0;
    for (const auto& P : classes) {
        if (P.dimension() == 1) ++segments;
        if (P.dimension() == 2) ++polys;
    }
    CHECK(segments == 2);  // integral lengths 1 and 2
    CHECK(polys == 1);
    CHECK_THROWS_AS(enumerate_polygons(CensusQuery{0, 3, false, true}), std::invalid_argument);
}

TEST_CASE("census verification passes on small ranges") {
    CensusQuery q;
    q.min_points = 3;
    q.max_points = 10;
    auto classes = enumerate_polygons(q);

    CensusReport t6 = verify_theorem6(classes);
    CHECK(t6.ok());
    CHECK(t6.checked == Z(classes.size()));
    CHECK(t6.exception_branch == 2);  // 2*Sigma (6 points) and 3*Sigma (10 points)

    CensusReport l5 = verify_lemma5(classes);
    CHECK(l5.ok());
}
