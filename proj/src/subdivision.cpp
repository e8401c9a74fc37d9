#include "latgon/subdivision.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace latgon {

namespace {

struct Lifted {
    Pt p;
    Z h;
};

// Plane through three lifted points, oriented with positive z-component.
struct Plane {
    i128 nx, ny, nz;  // normal
    i128 off;         // n . p0, points q with n.q = off lie on the plane

    i128 eval(const Lifted& q) const {
        return nx * q.p.x + ny * q.p.y + nz * q.h - off;
    }
};

bool make_plane(const Lifted& a, const Lifted& b, const Lifted& c, Plane& out) {
    i128 ux = b.p.x - a.p.x, uy = b.p.y - a.p.y, uz = b.h - a.h;
    i128 vx = c.p.x - a.p.x, vy = c.p.y - a.p.y, vz = c.h - a.h;
    i128 nx = uy * vz - uz * vy;
    i128 ny = uz * vx - ux * vz;
    i128 nz = ux * vy - uy * vx;
    if (nz == 0) return false;  // vertical or degenerate triple
    if (nz < 0) {
        nx = -nx;
        ny = -ny;
        nz = -nz;
    }
    out = {nx, ny, nz, nx * a.p.x + ny * a.p.y + nz * a.h};
    return true;
}

}  // namespace

void HeightFunction::validate(const LatticePolygon& base) const {
    for (const auto& [p, h] : assignments) {
        check_coord(h, "height");
        if (!base.contains(p))
            throw std::invalid_argument("heights: point (" + std::to_string(p.x) + ", " +
                                        std::to_string(p.y) + ") is not in the base polygon");
    }
    for (const Pt& p : lattice_points(base))
        if (!assignments.count(p))
            throw std::invalid_argument("heights: missing value at (" + std::to_string(p.x) +
                                        ", " + std::to_string(p.y) + ")");
}

Z HeightFunction::at(Pt p) const {
    auto it = assignments.find(p);
    if (it == assignments.end()) throw std::invalid_argument("heights: point has no value");
    return it->second;
}

Z integral_length(Pt a, Pt b) {
    if (a == b) return 0;
    return gcd_z(b.x - a.x, b.y - a.y);
}

Vec3 facet_normal(const CellAffine& affine) { return {-affine.a, -affine.b, 1}; }

Z chain_length_d(const Vec3& nl, const Vec3& nm) {
    if (nl.z != 1 || nm.z != 1)
        throw std::invalid_argument("chain_length_d: normals must have third coordinate 1");
    if (nl == nm) throw std::invalid_argument("chain_length_d: normals of adjacent cells must differ");
    Z m12 = nl.x * nm.y - nl.y * nm.x;
    Z m13 = nl.x - nm.x;
    Z m23 = nl.y - nm.y;
    return gcd_z(gcd_z(m12, m13), m23);
}

RegularSubdivision subdivide(const LatticePolygon& base, const HeightFunction& h) {
    if (base.dimension() != 2)
        throw std::invalid_argument("subdivide: base polygon must be two-dimensional");
    h.validate(base);

    std::vector<Lifted> pts;
    for (const Pt& p : lattice_points(base)) pts.push_back({p, h.at(p)});
    size_t n = pts.size();

    // Lower facets: planes through some triple with every lifted point on or
    // above. The on-plane set of such a plane is a full cell, so maximal
    // coplanar facets come out merged for free.
    std::set<std::vector<size_t>> seen;
    std::vector<LatticePolygon> cells;
    std::vector<CellAffine> affines;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                Plane pl;
                if (!make_plane(pts[i], pts[j], pts[k], pl)) continue;
                std::vector<size_t> on;
                bool lower = true;
                for (size_t q = 0; q < n && lower; ++q) {
                    i128 s = pl.eval(pts[q]);
                    if (s < 0) lower = false;
                    else if (s == 0) on.push_back(q);
                }
                if (!lower) continue;
                if (!seen.insert(on).second) continue;
                std::vector<Pt> cell_pts;
                for (size_t q : on) cell_pts.push_back(pts[q].p);
                LatticePolygon cell = LatticePolygon::hull(cell_pts);
                if (cell.dimension() != 2)
                    throw std::logic_error("subdivide: lower facet projects to a degenerate cell");
                // z = ax + by + c with a = -nx/nz, b = -ny/nz, c = off/nz.
                // Non-integral data means the lower hull is not integer-valued
                // on all lattice points, i.e. h does not realize a regular
                // subdivision with an integral lift.
                if ((-pl.nx) % pl.nz || (-pl.ny) % pl.nz || pl.off % pl.nz)
                    throw std::invalid_argument(
                        "subdivide: heights induce a non-integral piecewise-linear function");
                affines.push_back({Z((-pl.nx) / pl.nz), Z((-pl.ny) / pl.nz), Z(pl.off / pl.nz)});
                cells.push_back(std::move(cell));
            }

    // Deterministic cell order: by canonical vertex list.
    std::vector<size_t> order(cells.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return std::lexicographical_compare(
            cells[x].vertices().begin(), cells[x].vertices().end(), cells[y].vertices().begin(),
            cells[y].vertices().end(), [](Pt a, Pt b) { return lex_less(a, b); });
    });

    RegularSubdivision out;
    out.base = base;
    for (size_t i : order) {
        out.cells.push_back(cells[i]);
        out.cell_affine.push_back(affines[i]);
    }

    // Induced heights and the points the lower hull left behind.
    i128 cell_area = 0;
    for (const LatticePolygon& c : out.cells) cell_area += c.area2();
    if (cell_area != base.area2())
        throw std::logic_error("subdivide: cell areas do not cover the base polygon");
    for (const Lifted& lp : pts) {
        Z v = 0;
        bool found = false;
        for (size_t ci = 0; ci < out.cells.size() && !found; ++ci)
            if (out.cells[ci].contains(lp.p)) {
                const CellAffine& af = out.cell_affine[ci];
                v = af.a * lp.p.x + af.b * lp.p.y + af.c;
                found = true;
            }
        if (!found) throw std::logic_error("subdivide: lattice point not covered by any cell");
        out.induced.assignments[lp.p] = v;
        if (lp.h > v) out.points_above.push_back(lp.p);
    }

    // Adjacencies by exact shared-segment computation between cell boundaries.
    for (size_t a = 0; a < out.cells.size(); ++a)
        for (size_t b = a + 1; b < out.cells.size(); ++b) {
            const auto& va = out.cells[a].vertices();
            const auto& vb = out.cells[b].vertices();
            Pt best_from{}, best_to{};
            Z best_len = -1;
            for (size_t i = 0; i < va.size(); ++i) {
                Pt a1 = va[i], a2 = va[(i + 1) % va.size()];
                for (size_t j = 0; j < vb.size(); ++j) {
                    Pt b1 = vb[j], b2 = vb[(j + 1) % vb.size()];
                    // collinear?
                    if (cross(a1, a2, b1) != 0 || cross(a1, a2, b2) != 0) continue;
                    // overlap along the common line; dot products with the
                    // primitive direction step by |dir|^2 per lattice step
                    Pt dir = primitive(a2 - a1);
                    i128 norm = dot(dir, dir);
                    i128 s1 = dot(dir, a1), s2 = dot(dir, a2);
                    i128 t1 = dot(dir, b1), t2 = dot(dir, b2);
                    i128 lo = std::max(std::min(s1, s2), std::min(t1, t2));
                    i128 hi = std::min(std::max(s1, s2), std::max(t1, t2));
                    if (lo >= hi) continue;  // touching at a point is not adjacency
                    // reconstruct endpoints at parameters lo, hi
                    i128 base_s = dot(dir, a1);
                    auto at_param = [&](i128 t) {
                        i128 k = (t - base_s) / norm;
                        return Pt{Z(a1.x + k * dir.x), Z(a1.y + k * dir.y)};
                    };
                    Pt from = at_param(lo), to = at_param(hi);
                    if (lex_less(to, from)) std::swap(from, to);
                    Z len = integral_length(from, to);
                    if (len > best_len) {
                        best_len = len;
                        best_from = from;
                        best_to = to;
                    }
                }
            }
            if (best_len >= 1) {
                Vec3 na = facet_normal(out.cell_affine[a]);
                Vec3 nb = facet_normal(out.cell_affine[b]);
                out.adjacencies.push_back(
                    {int(a), int(b), best_from, best_to, best_len, chain_length_d(na, nb)});
            }
        }
    return out;
}

namespace {
MetricGraph cells_graph(const RegularSubdivision& s, bool corrected) {
    std::vector<std::string> labels;
    for (size_t i = 0; i < s.cells.size(); ++i) labels.push_back("c" + std::to_string(i));
    std::vector<GraphEdge> edges;
    for (const Adjacency& adj : s.adjacencies)
        for (Z k = 0; k < adj.integral_length; ++k)
            edges.push_back({adj.cell_a, adj.cell_b, corrected ? adj.chain_length : 1});
    return MetricGraph(std::move(labels), std::move(edges));
}
}  // namespace

MetricGraph dual_graph(const RegularSubdivision& s) { return cells_graph(s, false); }

MetricGraph corrected_graph(const RegularSubdivision& s) { return cells_graph(s, true); }

RegularSubdivision theorem14_subdivision(const LatticePolygon& staircase, Z a) {
    // Validate membership in the family: reconstruct the chain values and
    // rebuild the polygon from them.
    if (staircase.dimension() != 2)
        throw std::invalid_argument("theorem14_subdivision: polygon must be two-dimensional");
    Z b = 0, maxy = 0;
    for (const Pt& p : staircase.vertices()) {
        if (p.x < 0 || p.y < 0)
            throw std::invalid_argument("theorem14_subdivision: polygon is not a staircase polygon");
        b = std::max(b, p.x);
        maxy = std::max(maxy, p.y);
    }
    std::vector<Z> f(size_t(b) + 1, -1);
    for (Z x = 0; x <= b; ++x) {
        for (Z y = maxy; y >= 0; --y)
            if (staircase.contains({x, y})) {
                f[size_t(x)] = y;
                break;
            }
        if (f[size_t(x)] < 0)
            throw std::invalid_argument("theorem14_subdivision: polygon is not a staircase polygon");
    }
    if (f[0] != a || staircase_family(a, b, f) != staircase)
        throw std::invalid_argument(
            "theorem14_subdivision: polygon is not in the staircase family with this parameter");

    // c(0..2) = 0, then integer breakpoints at 3..a, linear with slope a-1
    // beyond a. The lifted lower hull is linear exactly on the bands.
    Z smax = 0;
    for (const Pt& p : lattice_points(staircase)) smax = std::max(smax, p.x + p.y);
    auto c = [&](Z s) -> Z {
        if (s <= 2) return 0;
        if (s <= a) return (s - 1) * (s - 2) / 2;
        return (a - 1) * (a - 2) / 2 + (a - 1) * (s - a);
    };
    HeightFunction h;
    for (const Pt& p : lattice_points(staircase)) h.assignments[p] = c(p.x + p.y);
    RegularSubdivision s = subdivide(staircase, h);

    // The proof's cell list, for a belt-and-braces shape check.
    size_t expected = size_t(a == 1 ? 1 : (smax == a ? a - 1 : a));
    if (s.cells.size() != expected)
        throw std::logic_error("theorem14_subdivision: unexpected cell count");
    return s;
}

}  // namespace latgon
