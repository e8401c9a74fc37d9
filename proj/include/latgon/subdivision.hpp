#pragma once

// Regular subdivisions of a lattice polygon induced by integer heights on its
// lattice points: cells of the lifted lower hull, cell adjacency with
// integral edge lengths and the chain lengths that correct the dual graph.

#include <map>
#include <vector>

#include "latgon/metric_graph.hpp"
#include "latgon/polygon.hpp"

namespace latgon {

struct PtLess {
    bool operator()(const Pt& a, const Pt& b) const { return lex_less(a, b); }
};

// Integer height at every lattice point of a base polygon.
struct HeightFunction {
    std::map<Pt, Z, PtLess> assignments;

    // Throws unless the assignment is total on base's lattice points and
    // mentions no other point.
    void validate(const LatticePolygon& base) const;
    Z at(Pt p) const;
};

// Affine data of one cell: v = ax + by + c on the cell.
struct CellAffine {
    Z a = 0, b = 0, c = 0;
    friend bool operator==(const CellAffine&, const CellAffine&) = default;
};

struct Vec3 {
    Z x = 0, y = 0, z = 0;
    friend bool operator==(const Vec3&, const Vec3&) = default;
};

struct Adjacency {
    int cell_a = 0, cell_b = 0;
    Pt edge_from, edge_to;     // shared edge, lex-ordered endpoints
    Z integral_length = 0;     // lattice points on the edge minus one
    Z chain_length = 0;        // d(a, b) from the facet normals
};

struct RegularSubdivision {
    LatticePolygon base;
    std::vector<LatticePolygon> cells;   // deterministic order
    std::vector<CellAffine> cell_affine; // parallel to cells
    std::vector<Adjacency> adjacencies;
    HeightFunction induced;              // lower-hull values at all lattice points
    std::vector<Pt> points_above;        // input points strictly above the lower hull
};

// Cells are the projections of the lower facets of the lifted point set.
// Throws unless base is two-dimensional and h is total on its lattice points.
RegularSubdivision subdivide(const LatticePolygon& base, const HeightFunction& h);

// Number of lattice points on a segment minus one (gcd of the differences).
Z integral_length(Pt a, Pt b);

// Primitive normal (-a, -b, 1) of the lifted plane z = ax + by + c.
Vec3 facet_normal(const CellAffine& affine);

// gcd of the 2x2 minors of the two stacked normals; both must have third
// coordinate 1 and differ.
Z chain_length_d(const Vec3& nl, const Vec3& nm);

// One vertex per cell, L(l, m) parallel unit edges per adjacency.
MetricGraph dual_graph(const RegularSubdivision& s);

// As dual_graph, but each parallel edge of an adjacency becomes a single
// edge of integer length d(l, m).
MetricGraph corrected_graph(const RegularSubdivision& s);

// The band subdivision of a staircase-family polygon: heights c(x + y) with
// c linear on [0, 2], breaking at each integer up to a, and linear beyond.
RegularSubdivision theorem14_subdivision(const LatticePolygon& staircase, Z a);

}  // namespace latgon
