#include "latgon/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace latgon {

namespace {

// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
Z ext_gcd(Z a, Z b, Z& x, Z& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    Z x1, y1;
    Z g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// A unimodular matrix sending the primitive vector d to (1, 0).
AffineLatticeMap row_map_to_e1(Pt d) {
    Z s, t;
    Z g = ext_gcd(d.x, d.y, s, t);
    if (g != 1) throw std::logic_error("row_map_to_e1: direction not primitive");
    AffineLatticeMap m;
    m.a = s;
    m.b = t;
    m.c = -d.y;
    m.d = d.x;
    return m;  // det = s*d.x + t*d.y = 1
}

Z floor_div(Z a, Z b) {
    Z q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// CCW orientation + rotation to the lex-smallest start, given a strict
// convex vertex cycle in either orientation.
std::vector<Pt> normalize_cycle(std::vector<Pt> v) {
    if (v.size() >= 3) {
        i128 s = 0;
        for (size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
        if (s < 0) std::reverse(v.begin(), v.end());
    } else if (v.size() == 2) {
        if (lex_less(v[1], v[0])) std::swap(v[0], v[1]);
    }
    if (v.size() >= 3) {
        size_t best = 0;
        for (size_t i = 1; i < v.size(); ++i)
            if (lex_less(v[i], v[best])) best = i;
        std::rotate(v.begin(), v.begin() + best, v.end());
    }
    return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// LatticePolygon basics

LatticePolygon LatticePolygon::hull(std::vector<Pt> pts) {
    for (const Pt& p : pts) {
        check_coord(p.x, "polygon");
        check_coord(p.y, "polygon");
    }
    std::sort(pts.begin(), pts.end(), [](Pt a, Pt b) { return lex_less(a, b); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    LatticePolygon P;
    if (pts.empty()) return P;
    if (pts.size() == 1) {
        P.verts_ = pts;
        return P;
    }
    bool collinear = true;
    for (size_t i = 2; i < pts.size() && collinear; ++i)
        if (cross(pts[0], pts[1], pts[i]) != 0) collinear = false;
    if (collinear) {
        P.verts_ = {pts.front(), pts.back()};
        return P;
    }
    // Andrew's monotone chain, dropping collinear points (strict vertices).
    std::vector<Pt> h(2 * pts.size());
    size_t k = 0;
    for (const Pt& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    size_t lower = k + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (k >= lower && cross(h[k - 2], h[k - 1], *it) <= 0) --k;
        h[k++] = *it;
    }
    h.resize(k - 1);
    P.verts_ = normalize_cycle(std::move(h));
    return P;
}

int LatticePolygon::dimension() const {
    if (verts_.empty()) return -1;
    if (verts_.size() == 1) return 0;
    if (verts_.size() == 2) return 1;
    return 2;
}

i128 LatticePolygon::area2() const {
    if (verts_.size() < 3) return 0;
    i128 s = 0;
    for (size_t i = 0; i < verts_.size(); ++i) s += cross(verts_[i], verts_[(i + 1) % verts_.size()]);
    return s;  // positive: vertices are CCW
}

Z LatticePolygon::boundary_points() const {
    switch (dimension()) {
        case -1: return 0;
        case 0: return 1;
        case 1: return gcd_z(verts_[1].x - verts_[0].x, verts_[1].y - verts_[0].y) + 1;
        default: {
            Z b = 0;
            for (size_t i = 0; i < verts_.size(); ++i) {
                Pt d = verts_[(i + 1) % verts_.size()] - verts_[i];
                b += gcd_z(d.x, d.y);
            }
            return b;
        }
    }
}

Z LatticePolygon::lattice_point_count() const {
    if (dimension() < 2) return boundary_points();
    return Z((area2() + boundary_points() + 2) / 2);  // Pick
}

bool LatticePolygon::contains(Pt p) const {
    switch (dimension()) {
        case -1: return false;
        case 0: return p == verts_[0];
        case 1:
            return cross(verts_[0], verts_[1], p) == 0 && dot(p - verts_[0], verts_[1] - verts_[0]) >= 0 &&
                   dot(p - verts_[1], verts_[0] - verts_[1]) >= 0;
        default:
            for (size_t i = 0; i < verts_.size(); ++i)
                if (cross(verts_[i], verts_[(i + 1) % verts_.size()], p) < 0) return false;
            return true;
    }
}

bool LatticePolygon::contains_interior(Pt p) const {
    if (dimension() < 2) return false;
    for (size_t i = 0; i < verts_.size(); ++i)
        if (cross(verts_[i], verts_[(i + 1) % verts_.size()], p) <= 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// AffineLatticeMap

AffineLatticeMap AffineLatticeMap::inverse() const {
    Z dt = det();
    if (dt != 1 && dt != -1) throw std::invalid_argument("inverse: matrix not unimodular");
    AffineLatticeMap inv;
    inv.a = d * dt;
    inv.b = -b * dt;
    inv.c = -c * dt;
    inv.d = a * dt;
    inv.tx = -(inv.a * tx + inv.b * ty);
    inv.ty = -(inv.c * tx + inv.d * ty);
    return inv;
}

AffineLatticeMap AffineLatticeMap::then(const AffineLatticeMap& s) const {
    AffineLatticeMap r;
    r.a = s.a * a + s.b * c;
    r.b = s.a * b + s.b * d;
    r.c = s.c * a + s.d * c;
    r.d = s.c * b + s.d * d;
    r.tx = s.a * tx + s.b * ty + s.tx;
    r.ty = s.c * tx + s.d * ty + s.ty;
    return r;
}

// ---------------------------------------------------------------------------
// Point enumeration, genus, hulls

std::vector<Pt> lattice_points(const LatticePolygon& P) {
    std::vector<Pt> out;
    if (P.empty()) return out;
    const auto& v = P.vertices();
    Z minx = v[0].x, maxx = v[0].x, miny = v[0].y, maxy = v[0].y;
    for (const Pt& p : v) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    if (i128(maxx - minx + 1) * (maxy - miny + 1) > 50'000'000)
        throw std::invalid_argument("lattice_points: polygon bounding box too large");
    for (Z x = minx; x <= maxx; ++x)
        for (Z y = miny; y <= maxy; ++y)
            if (P.contains({x, y})) out.push_back({x, y});
    return out;
}

namespace {
std::vector<Pt> interior_points(const LatticePolygon& P) {
    std::vector<Pt> out;
    if (P.dimension() < 2) return out;
    const auto& v = P.vertices();
    Z minx = v[0].x, maxx = v[0].x, miny = v[0].y, maxy = v[0].y;
    for (const Pt& p : v) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    if (i128(maxx - minx + 1) * (maxy - miny + 1) > 50'000'000)
        throw std::invalid_argument("interior_points: polygon bounding box too large");
    for (Z x = minx + 1; x < maxx; ++x)
        for (Z y = miny + 1; y < maxy; ++y)
            if (P.contains_interior({x, y})) out.push_back({x, y});
    return out;
}
}  // namespace

Z genus(const LatticePolygon& P) { return Z(interior_points(P).size()); }

LatticePolygon interior_hull(const LatticePolygon& P) {
    return LatticePolygon::hull(interior_points(P));
}

std::vector<HalfPlane> facet_half_planes(const LatticePolygon& P) {
    if (P.dimension() != 2)
        throw std::invalid_argument("facet_half_planes: polygon must be two-dimensional");
    std::vector<HalfPlane> hs;
    const auto& v = P.vertices();
    for (size_t i = 0; i < v.size(); ++i) {
        Pt d = v[(i + 1) % v.size()] - v[i];
        Pt n = primitive({d.y, -d.x});  // outward for CCW order
        hs.push_back({n.x, n.y, n.x * v[i].x + n.y * v[i].y});
    }
    return hs;
}

RelaxedHull relaxed_hull(const LatticePolygon& P) {
    if (P.dimension() != 2)
        throw std::invalid_argument("relaxed_hull: polygon must be two-dimensional");
    std::vector<HalfPlane> hs = facet_half_planes(P);
    for (HalfPlane& h : hs) ++h.c;

    // The relaxed region is bounded (it contains P and the facet normals span
    // the plane), so its vertices are among pairwise boundary intersections.
    std::vector<RatPt> cand;
    for (size_t i = 0; i < hs.size(); ++i)
        for (size_t j = i + 1; j < hs.size(); ++j) {
            i128 det = i128(hs[i].a) * hs[j].b - i128(hs[j].a) * hs[i].b;
            if (det == 0) continue;
            Rat x = Rat::make(i128(hs[i].c) * hs[j].b - i128(hs[j].c) * hs[i].b, det);
            Rat y = Rat::make(i128(hs[i].a) * hs[j].c - i128(hs[j].a) * hs[i].c, det);
            bool ok = true;
            for (const HalfPlane& h : hs)
                if (!(Rat(h.a) * x + Rat(h.b) * y <= Rat(h.c))) {
                    ok = false;
                    break;
                }
            if (ok) cand.push_back({x, y});
        }

    std::sort(cand.begin(), cand.end(),
              [](const RatPt& a, const RatPt& b) { return lex_less(a, b); });
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    if (cand.size() < 3) throw std::logic_error("relaxed_hull: degenerate intersection");

    // Monotone chain over rational points.
    std::vector<RatPt> h(2 * cand.size());
    size_t k = 0;
    for (const RatPt& p : cand) {
        while (k >= 2 && orient(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    size_t lower = k + 1;
    for (auto it = cand.rbegin() + 1; it != cand.rend(); ++it) {
        while (k >= lower && orient(h[k - 2], h[k - 1], *it) <= 0) --k;
        h[k++] = *it;
    }
    h.resize(k - 1);

    RelaxedHull out;
    out.polygon.vertices = std::move(h);
    out.is_lattice = out.polygon.is_lattice();
    return out;
}

bool RationalPolygon::is_lattice() const {
    for (const RatPt& p : vertices)
        if (!p.x.is_integral() || !p.y.is_integral()) return false;
    return true;
}

LatticePolygon RationalPolygon::to_lattice() const {
    if (!is_lattice()) throw std::invalid_argument("to_lattice: polygon has rational vertices");
    std::vector<Pt> pts;
    for (const RatPt& p : vertices) pts.push_back({p.x.num, p.y.num});
    return LatticePolygon::hull(pts);
}

bool is_interior_polygon(const LatticePolygon& P) { return relaxed_hull(P).is_lattice; }

// ---------------------------------------------------------------------------
// Lattice width

Z width_in_direction(const LatticePolygon& P, Pt w) {
    if (P.empty()) throw std::invalid_argument("width_in_direction: empty polygon");
    if (gcd_z(w.x, w.y) != 1) throw std::invalid_argument("width_in_direction: direction not primitive");
    i128 lo = dot(w, P.vertices()[0]), hi = lo;
    for (const Pt& p : P.vertices()) {
        i128 v = dot(w, p);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return Z(hi - lo);
}

namespace {
Pt canonical_sign(Pt w) {
    if (w.x < 0 || (w.x == 0 && w.y < 0)) return {-w.x, -w.y};
    return w;
}
}  // namespace

LatticeWidthResult lattice_width(const LatticePolygon& P) {
    int dim = P.dimension();
    if (dim == -1) return {-1, std::nullopt};
    if (dim == 0) return {0, Pt{0, 1}};
    if (dim == 1) {
        Pt d = primitive(P.vertices()[1] - P.vertices()[0]);
        return {0, canonical_sign({-d.y, d.x})};
    }

    // Upper bound from a few cheap directions; edge normals keep this small
    // even for badly sheared input.
    Z best = -1;
    Pt best_dir{0, 1};
    auto consider = [&](Pt w) {
        w = canonical_sign(primitive(w));
        Z wd = width_in_direction(P, w);
        if (best < 0 || wd < best || (wd == best && lex_less(w, best_dir))) {
            best = wd;
            best_dir = w;
        }
    };
    consider({0, 1});
    consider({1, 0});
    consider({1, 1});
    consider({1, -1});
    const auto& v = P.vertices();
    for (size_t i = 0; i < v.size(); ++i) {
        Pt d = v[(i + 1) % v.size()] - v[i];
        consider({d.y, -d.x});
    }

    // Certified search box: the optimal direction w satisfies
    // |<w, e>| <= lw(P) <= best for every edge vector e of P, so pairing
    // against two independent edges bounds it.
    Pt e1 = v[1] - v[0];
    Pt e2{};
    for (size_t i = 1; i < v.size(); ++i) {
        Pt d = v[(i + 1) % v.size()] - v[i];
        if (cross(e1, d) != 0) {
            e2 = d;
            break;
        }
    }
    i128 det = cross(e1, e2);
    Z U = best;
    if (i128(2 * U + 1) * (2 * U + 1) > 25'000'000)
        throw std::invalid_argument("lattice_width: search bound too large for this input");
    for (Z s = -U; s <= U; ++s)
        for (Z t = -U; t <= U; ++t) {
            if (s == 0 && t == 0) continue;
            // Solve <w, e1> = s, <w, e2> = t.
            i128 wx = i128(e2.y) * s - i128(e1.y) * t;
            i128 wy = i128(e1.x) * t - i128(e2.x) * s;
            if (wx % det || wy % det) continue;
            Pt w{Z(wx / det), Z(wy / det)};
            if (w.x == 0 && w.y == 0) continue;
            if (gcd_z(w.x, w.y) != 1) continue;
            w = canonical_sign(w);
            Z wd = width_in_direction(P, w);
            if (wd < best || (wd == best && lex_less(w, best_dir))) {
                best = wd;
                best_dir = w;
            }
        }
    return {best, best_dir};
}

Z lattice_width_recursive(const LatticePolygon& P) {
    int dim = P.dimension();
    if (dim == -1) return -1;
    if (dim <= 1) return 0;
    Classification cls = recognize_standard(P);
    if (cls.shape == StandardShape::Simplex && cls.d >= 2)
        return lattice_width_recursive(interior_hull(P)) + 3;
    return lattice_width_recursive(interior_hull(P)) + 2;
}

// ---------------------------------------------------------------------------
// Equivalence

LatticePolygon apply_map(const LatticePolygon& P, const AffineLatticeMap& m) {
    if (!m.unimodular()) throw std::invalid_argument("apply_map: matrix determinant must be +-1");
    std::vector<Pt> mapped;
    mapped.reserve(P.vertices().size());
    for (const Pt& p : P.vertices()) mapped.push_back(m(p));
    // Unimodular maps send vertices to vertices; only the cycle normalization
    // can change.
    return LatticePolygon::hull(std::move(mapped));
}

namespace {

std::optional<AffineLatticeMap> solve_frame(Pt u1, Pt u2, Pt f, Pt g, Pt from, Pt to) {
    i128 det = cross(u1, u2);
    i128 na = i128(f.x) * u2.y - i128(g.x) * u1.y;
    i128 nb = -i128(f.x) * u2.x + i128(g.x) * u1.x;
    i128 nc = i128(f.y) * u2.y - i128(g.y) * u1.y;
    i128 nd = -i128(f.y) * u2.x + i128(g.y) * u1.x;
    if (na % det || nb % det || nc % det || nd % det) return std::nullopt;
    AffineLatticeMap m;
    m.a = Z(na / det);
    m.b = Z(nb / det);
    m.c = Z(nc / det);
    m.d = Z(nd / det);
    if (!m.unimodular()) return std::nullopt;
    Pt lv = m.linear(from);
    m.tx = to.x - lv.x;
    m.ty = to.y - lv.y;
    return m;
}

}  // namespace

std::optional<AffineLatticeMap> are_equivalent(const LatticePolygon& P, const LatticePolygon& Q) {
    if (P.dimension() != Q.dimension()) return std::nullopt;
    int dim = P.dimension();
    if (dim == -1) return AffineLatticeMap{};
    if (dim == 0) {
        AffineLatticeMap m;
        m.tx = Q.vertices()[0].x - P.vertices()[0].x;
        m.ty = Q.vertices()[0].y - P.vertices()[0].y;
        return m;
    }
    if (dim == 1) {
        if (P.boundary_points() != Q.boundary_points()) return std::nullopt;
        Pt dp = primitive(P.vertices()[1] - P.vertices()[0]);
        Pt dq = primitive(Q.vertices()[1] - Q.vertices()[0]);
        for (int flip = 0; flip < 2; ++flip) {
            Pt target = flip ? Pt{-dq.x, -dq.y} : dq;
            AffineLatticeMap m = row_map_to_e1(dp).then(row_map_to_e1(target).inverse());
            Pt from = P.vertices()[0];
            Pt to = flip ? Q.vertices()[1] : Q.vertices()[0];
            Pt lv = m.linear(from);
            m.tx = to.x - lv.x;
            m.ty = to.y - lv.y;
            if (apply_map(P, m) == Q) return m;
        }
        return std::nullopt;
    }

    if (P.vertices().size() != Q.vertices().size()) return std::nullopt;
    if (P.area2() != Q.area2() || P.boundary_points() != Q.boundary_points()) return std::nullopt;

    const auto& pv = P.vertices();
    const auto& qv = Q.vertices();
    size_t n = qv.size();
    Pt v0 = pv[0];
    Pt u1 = primitive(pv.back() - v0);
    Pt u2 = primitive(pv[1] - v0);
    for (size_t i = 0; i < n; ++i) {
        Pt w = qv[i];
        Pt w1 = primitive(qv[(i + n - 1) % n] - w);
        Pt w2 = primitive(qv[(i + 1) % n] - w);
        for (int swap = 0; swap < 2; ++swap) {
            Pt f = swap ? w2 : w1;
            Pt g = swap ? w1 : w2;
            auto m = solve_frame(u1, u2, f, g, v0, w);
            if (m && apply_map(P, *m) == Q) return m;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

// Normalized placement of a 2D polygon determined by one directed edge:
// the edge is mapped onto the x-axis with the polygon above, the shear is
// pinned by the top-row offset and the placement is translated to min = 0.
LatticePolygon normalized_placement(const LatticePolygon& P, Pt from, Pt to) {
    AffineLatticeMap lin = row_map_to_e1(primitive(to - from));
    std::vector<Pt> v;
    v.reserve(P.vertices().size());
    for (const Pt& p : P.vertices()) v.push_back(lin.linear(p));

    Z edge_y = lin.linear(from).y;
    bool above = false, below = false;
    for (const Pt& p : v) {
        if (p.y > edge_y) above = true;
        if (p.y < edge_y) below = true;
    }
    if (below && !above)
        for (Pt& p : v) p.y = -p.y;

    Z miny = v[0].y;
    for (const Pt& p : v) miny = std::min(miny, p.y);
    for (Pt& p : v) p.y -= miny;

    Z maxy = 0;
    for (const Pt& p : v) maxy = std::max(maxy, p.y);
    Z l0 = std::numeric_limits<Z>::max(), lH = l0;
    for (const Pt& p : v) {
        if (p.y == 0) l0 = std::min(l0, p.x);
        if (p.y == maxy) lH = std::min(lH, p.x);
    }
    Z k = -floor_div(lH - l0, maxy);
    for (Pt& p : v) p.x += k * p.y;

    Z minx = v[0].x;
    for (const Pt& p : v) minx = std::min(minx, p.x);
    for (Pt& p : v) p.x -= minx;

    // Vertices are preserved under the map, only ordering conventions change.
    return LatticePolygon::hull(std::move(v));
}

}  // namespace

LatticePolygon canonical_form(const LatticePolygon& P) {
    switch (P.dimension()) {
        case -1: return P;
        case 0: return LatticePolygon::hull({{0, 0}});
        case 1: {
            Z len = P.boundary_points() - 1;
            return LatticePolygon::hull({{0, 0}, {len, 0}});
        }
        default: break;
    }
    const auto& v = P.vertices();
    size_t n = v.size();
    std::optional<LatticePolygon> best;
    std::vector<Pt> best_key;
    for (size_t i = 0; i < n; ++i) {
        for (int rev = 0; rev < 2; ++rev) {
            Pt from = rev ? v[(i + 1) % n] : v[i];
            Pt to = rev ? v[i] : v[(i + 1) % n];
            LatticePolygon cand = normalized_placement(P, from, to);
            std::vector<Pt> key = cand.vertices();
            std::sort(key.begin(), key.end(), [](Pt a, Pt b) { return lex_less(a, b); });
            if (!best || std::lexicographical_compare(
                             key.begin(), key.end(), best_key.begin(), best_key.end(),
                             [](Pt a, Pt b) { return lex_less(a, b); })) {
                best = cand;
                best_key = key;
            }
        }
    }
    return *best;
}

// ---------------------------------------------------------------------------
// Recognition and the gonality bound

Classification recognize_standard(const LatticePolygon& P) {
    Classification out;
    if (P.dimension() != 2) return out;
    Z count = P.lattice_point_count();
    Z g = (Z(P.area2()) - P.boundary_points() + 2) / 2;  // Pick

    if (P.vertices().size() == 3) {
        // d*Sigma has (d+1)(d+2)/2 lattice points and genus (d-1)(d-2)/2.
        Z disc = 8 * count + 1;
        Z r = Z(std::sqrt(double(disc)));
        while (r * r > disc) --r;
        while ((r + 1) * (r + 1) <= disc) ++r;
        if (r * r == disc && (r - 3) % 2 == 0) {
            Z d = (r - 3) / 2;
            if (d >= 1 && g == (d >= 3 ? (d - 1) * (d - 2) / 2 : 0)) {
                if (auto w = are_equivalent(P, standard_simplex(d))) {
                    out.shape = StandardShape::Simplex;
                    out.d = d;
                    out.witness = w;
                    return out;
                }
            }
        }
        if (count == 10 && g == 4) {
            if (auto w = are_equivalent(P, dilate(upsilon(), 2))) {
                out.shape = StandardShape::TwoUpsilon;
                out.witness = w;
                return out;
            }
        }
    }
    return out;
}

Z gonality_upper_bound(const LatticePolygon& P) {
    if (P.dimension() != 2)
        throw std::invalid_argument("gonality_upper_bound: polygon must be two-dimensional");
    Z lw = lattice_width(P).width;
    Classification cls = recognize_standard(P);
    bool exceptional = (cls.shape == StandardShape::Simplex && cls.d >= 2) ||
                       cls.shape == StandardShape::TwoUpsilon;
    Z bound = lw - (exceptional ? 1 : 0);

    Z via_interior = cls.shape == StandardShape::TwoUpsilon
                         ? 3
                         : lattice_width(interior_hull(P)).width + 2;
    if (bound != via_interior)
        throw std::logic_error("gonality_upper_bound: interior-hull consistency check failed");
    return bound;
}

// ---------------------------------------------------------------------------
// Constructors

LatticePolygon standard_simplex(Z d) {
    if (d < 0) throw std::invalid_argument("standard_simplex: d must be >= 0");
    return LatticePolygon::hull({{0, 0}, {d, 0}, {0, d}});
}

LatticePolygon upsilon() { return LatticePolygon::hull({{-1, -1}, {1, 0}, {0, 1}}); }

LatticePolygon dilate(const LatticePolygon& P, Z d) {
    if (d < 0) throw std::invalid_argument("dilate: factor must be >= 0");
    if (P.empty()) return P;
    if (d == 0) return LatticePolygon::hull({{0, 0}});
    std::vector<Pt> pts;
    for (const Pt& p : P.vertices()) pts.push_back({d * p.x, d * p.y});
    return LatticePolygon::hull(pts);
}

LatticePolygon rect(Z a, Z b) {
    if (a < 0 || b < 0) throw std::invalid_argument("rect: sides must be >= 0");
    return LatticePolygon::hull({{0, 0}, {a, 0}, {a, b}, {0, b}});
}

LatticePolygon hirzebruch(Z a, Z b, Z k) {
    if (a < 1 || b < 1 || k < 0) throw std::invalid_argument("hirzebruch: need a,b >= 1 and k >= 0");
    return LatticePolygon::hull({{0, 0}, {a + b * k, 0}, {a, b}, {0, b}});
}

LatticePolygon kawaguchi(const std::vector<Pt>& breakpoints) {
    if (breakpoints.size() < 2) throw std::invalid_argument("kawaguchi: need at least two breakpoints");
    if (breakpoints.front().x != 0 || breakpoints.front().y <= 0)
        throw std::invalid_argument("kawaguchi: chain must start at (0, f(0)) with f(0) > 0");
    for (size_t i = 0; i < breakpoints.size(); ++i) {
        if (breakpoints[i].y < 0) throw std::invalid_argument("kawaguchi: chain must stay nonnegative");
        if (i > 0 && breakpoints[i].x <= breakpoints[i - 1].x)
            throw std::invalid_argument("kawaguchi: x-coordinates must be strictly increasing");
    }
    for (size_t i = 2; i < breakpoints.size(); ++i) {
        Pt e1 = breakpoints[i - 1] - breakpoints[i - 2];
        Pt e2 = breakpoints[i] - breakpoints[i - 1];
        if (cross(e1, e2) > 0) throw std::invalid_argument("kawaguchi: chain must be concave");
    }
    std::vector<Pt> pts = breakpoints;
    pts.push_back({0, 0});
    pts.push_back({breakpoints.back().x, 0});
    return LatticePolygon::hull(pts);
}

LatticePolygon staircase_family(Z a, Z b, const std::vector<Z>& f) {
    if (a < 1 || a > b) throw std::invalid_argument("staircase_family: need 1 <= a <= b");
    if (Z(f.size()) != b + 1)
        throw std::invalid_argument("staircase_family: need one value per x = 0..b");
    if (f[0] != a) throw std::invalid_argument("staircase_family: f(0) must equal a");
    if (f[1] > a) throw std::invalid_argument("staircase_family: f(1) must be <= f(0)");
    if (f[size_t(b)] != 0) throw std::invalid_argument("staircase_family: f(b) must be 0");
    for (Z v : f)
        if (v < 0) throw std::invalid_argument("staircase_family: values must be >= 0");
    std::vector<Pt> pts{{0, 0}};
    for (Z i = 0; i <= b; ++i) pts.push_back({i, f[size_t(i)]});
    return LatticePolygon::hull(pts);
}

}  // namespace latgon
