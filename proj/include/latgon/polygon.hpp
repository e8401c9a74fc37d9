#pragma once

// Lattice polygons up to Z-affine (unimodular) equivalence: lattice point
// enumeration, genus, interior and relaxed hulls, lattice width, equivalence
// witnesses, canonical forms and the standard-shape recognizer.

#include <optional>
#include <vector>

#include "latgon/geom.hpp"

namespace latgon {

// Convex hull of finitely many lattice points, stored canonically:
// counterclockwise strict vertices starting at the lexicographically smallest
// (x, then y). dimension() is -1 (empty), 0 (point), 1 (segment) or 2.
class LatticePolygon {
  public:
    LatticePolygon() = default;  // empty polygon

    // Builds the convex hull of the given points (duplicates allowed).
    static LatticePolygon hull(std::vector<Pt> points);

    const std::vector<Pt>& vertices() const { return verts_; }
    int dimension() const;
    bool empty() const { return verts_.empty(); }

    // Twice the euclidean area (0 for dimension <= 1).
    i128 area2() const;
    // Number of lattice points on the boundary (0 for empty, 1 for a point).
    Z boundary_points() const;
    // Lattice point count via Pick's theorem; O(#vertices).
    Z lattice_point_count() const;

    bool contains(Pt p) const;           // closed polygon
    bool contains_interior(Pt p) const;  // topological interior (dim 2 only)

    friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

  private:
    std::vector<Pt> verts_;
};

// x |-> matrix * x + translation with matrix in GL2(Z).
struct AffineLatticeMap {
    Z a = 1, b = 0, c = 0, d = 1;  // matrix rows (a b; c d)
    Z tx = 0, ty = 0;

    Z det() const { return a * d - b * c; }
    bool unimodular() const { return det() == 1 || det() == -1; }
    Pt operator()(Pt p) const { return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty}; }
    Pt linear(Pt v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    AffineLatticeMap inverse() const;
    AffineLatticeMap then(const AffineLatticeMap& second) const;  // second ∘ this
    friend bool operator==(const AffineLatticeMap&, const AffineLatticeMap&) = default;
};

// Constraint a*x + b*y <= c with gcd(a, b) = 1.
struct HalfPlane {
    Z a = 0, b = 0, c = 0;
    friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
};

struct RationalPolygon {
    std::vector<RatPt> vertices;  // CCW, strict corners, lex-smallest first
    bool is_lattice() const;
    LatticePolygon to_lattice() const;  // requires is_lattice()
    friend bool operator==(const RationalPolygon&, const RationalPolygon&) = default;
};

struct RelaxedHull {
    RationalPolygon polygon;
    bool is_lattice = false;
};

enum class StandardShape { Simplex, TwoUpsilon, Other };

struct Classification {
    StandardShape shape = StandardShape::Other;
    Z d = 0;                                  // dilation factor when shape == Simplex
    std::optional<AffineLatticeMap> witness;  // maps the input onto the standard model
};

struct LatticeWidthResult {
    Z width = -1;
    std::optional<Pt> direction;  // primitive witness; absent for the empty polygon
};

// -- operations ------------------------------------------------------------

// All lattice points inside or on P, lexicographically sorted.
std::vector<Pt> lattice_points(const LatticePolygon& P);

// Number of lattice points in the topological interior (0 for dim <= 1).
Z genus(const LatticePolygon& P);

// Convex hull of the interior lattice points.
LatticePolygon interior_hull(const LatticePolygon& P);

// Facets of a two-dimensional polygon as primitive half-planes, one per edge.
std::vector<HalfPlane> facet_half_planes(const LatticePolygon& P);

// Intersection of all facet half-planes pushed out by one. Throws for dim < 2.
RelaxedHull relaxed_hull(const LatticePolygon& P);

// True iff P equals the interior hull of some larger lattice polygon.
bool is_interior_polygon(const LatticePolygon& P);

// max <w, p> - min <w, p> over P; w must be primitive, P non-empty.
Z width_in_direction(const LatticePolygon& P, Pt w);

// Minimal strip height over all unimodular placements, with a witness
// direction. lw(empty) = -1, lw(point) = lw(segment) = 0.
LatticeWidthResult lattice_width(const LatticePolygon& P);

// Same value, computed by recursion on the interior hull.
Z lattice_width_recursive(const LatticePolygon& P);

LatticePolygon apply_map(const LatticePolygon& P, const AffineLatticeMap& m);

// Witness map with apply_map(P, map) == Q, or nullopt.
std::optional<AffineLatticeMap> are_equivalent(const LatticePolygon& P, const LatticePolygon& Q);

// Unique representative of the equivalence class of P.
LatticePolygon canonical_form(const LatticePolygon& P);

Classification recognize_standard(const LatticePolygon& P);

// lw(P), minus one when P is equivalent to dSigma (d >= 2) or to 2Upsilon.
Z gonality_upper_bound(const LatticePolygon& P);

// -- family constructors ----------------------------------------------------

LatticePolygon standard_simplex(Z d);                  // hull{(0,0),(d,0),(0,d)}
LatticePolygon upsilon();                              // hull{(-1,-1),(1,0),(0,1)}
LatticePolygon dilate(const LatticePolygon& P, Z d);   // Minkowski multiple
LatticePolygon rect(Z a, Z b);                         // hull{(0,0),(a,0),(a,b),(0,b)}
LatticePolygon hirzebruch(Z a, Z b, Z k);              // hull{(0,0),(a+bk,0),(a,b),(0,b)}
// Hull of a concave lattice chain together with (0,0) and (x_last, 0).
LatticePolygon kawaguchi(const std::vector<Pt>& breakpoints);
// Hull of {(0,0)} and the chain (i, f[i]) for i = 0..b; f[0] = a >= f[1],
// f[b] = 0, all values nonnegative integers, 1 <= a <= b.
LatticePolygon staircase_family(Z a, Z b, const std::vector<Z>& f_values);

}  // namespace latgon
