#pragma once

// Enumeration of lattice polygons up to equivalence by lattice-point count,
// with the interior-polygon filter and the bulk verification passes.

#include <functional>
#include <vector>

#include "latgon/polygon.hpp"

namespace latgon {

struct CensusQuery {
    Z min_points = 3;
    Z max_points = 13;
    bool require_interior = false;
    bool require_two_dimensional = true;
};

struct CensusOptions {
    Z box_padding = 0;  // widens the certified search box; counts must not change
    int threads = 0;    // 0: decide from LATGON_THREADS / hardware
};

// One canonical representative per equivalence class matching the query,
// lexicographically sorted by vertex list.
std::vector<LatticePolygon> enumerate_polygons(const CensusQuery& q, const CensusOptions& opts = {});

struct CensusReport {
    Z checked = 0;
    Z exception_branch = 0;   // classes equivalent to d*Sigma, d >= 2
    Z generic_branch = 0;
    Z skipped = 0;            // outside the statement's scope
    std::vector<LatticePolygon> violations;
    bool ok() const { return violations.empty(); }
};

// lw(P) = lw(interior hull) + 2, with the d*Sigma exception, per class.
CensusReport verify_theorem6(const std::vector<LatticePolygon>& classes);

// Round trip interior_hull(relaxed_hull(P)) == P for interior classes, and
// containment of every class in the relaxed hull of its interior hull.
CensusReport verify_lemma5(const std::vector<LatticePolygon>& classes);

// Worker count: explicit > LATGON_THREADS > hardware concurrency.
int effective_threads(int requested);

}  // namespace latgon
