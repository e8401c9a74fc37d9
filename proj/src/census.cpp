#include "latgon/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <set>
#include <thread>

namespace latgon {

int effective_threads(int requested) {
    if (requested > 0) return requested;
    int hw = int(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("LATGON_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return std::min(hw, 16);
}

namespace {

// Edge-vector walk state for the convex boundary enumeration. A convex
// polygon traversed counterclockwise decomposes uniquely as: bottom edge
// (direction (1,0)), rising chain (dy > 0, slopes strictly decreasing), top
// edge (direction (-1,0)), falling chain (dy < 0). Budgets:
//   - total rise = total fall = height <= hmax,
//   - total positive dx = x-extent <= bx,
//   - boundary lattice points <= max_points,
//   - twice the area <= 2*max_points - 5 (Pick), monotone along the fan
//     triangulation from the start vertex.
struct Walker {
    Z hmax = 0, bx = 0, max_points = 0, min_points = 0;
    i128 max_area2 = 0;
    std::vector<Pt> rising;                       // slope-sorted primitive dirs, dy > 0
    std::function<void(const LatticePolygon&)> emit;

    std::vector<Pt> verts;

    void run() {
        for (Z bottom = 0; bottom + 2 <= max_points && bottom <= bx; ++bottom) {
            verts.assign(1, Pt{0, 0});
            if (bottom > 0) verts.push_back({bottom, 0});
            rise(0, bottom);
        }
    }

    // Fan-triangulated area of the current open walk; monotone along the
    // walk because the start vertex lies on the hull.
    i128 area2_so_far() const {
        i128 s = 0;
        for (size_t i = 1; i + 1 < verts.size(); ++i) s += cross(verts[0], verts[i], verts[i + 1]);
        return s;
    }

    bool extent_ok() const {
        Z lo = 0, hi = 0;
        for (const Pt& p : verts) {
            lo = std::min(lo, p.x);
            hi = std::max(hi, p.x);
        }
        return hi - lo <= bx;
    }

    bool state_ok() const { return extent_ok() && area2_so_far() <= max_area2; }

    void rise(size_t from, Z boundary) {
        Pt cur = verts.back();
        for (size_t i = from; i < rising.size(); ++i) {
            Pt d = rising[i];
            for (Z g = 1;; ++g) {
                Pt nxt{cur.x + g * d.x, cur.y + g * d.y};
                if (nxt.y > hmax) break;
                Z nb = boundary + g;
                if (nb + 1 > max_points) break;
                verts.push_back(nxt);
                bool ok = state_ok();
                if (ok) {
                    after_rise(nb);
                    rise(i + 1, nb);
                }
                verts.pop_back();
                if (!ok) break;
            }
        }
    }

    void after_rise(Z boundary) {
        if (verts.back().y < 1) return;
        Pt cur = verts.back();
        // optional top edge (direction (-1, 0)), then the falling chain
        for (Z top = 0; boundary + top <= max_points; ++top) {
            if (top > 0) verts.push_back({cur.x - top, cur.y});
            bool ok = state_ok();
            if (ok) fall(0, boundary + top);
            if (top > 0) verts.pop_back();
            if (top > 0 && !ok) break;
        }
        // continue raising with later directions happens in rise()'s loop
    }

    void fall(size_t from, Z boundary) {
        Pt cur = verts.back();
        for (size_t i = from; i < rising.size(); ++i) {
            Pt d{-rising[i].x, -rising[i].y};  // falling block shares the angular order
            for (Z g = 1;; ++g) {
                Pt nxt{cur.x + g * d.x, cur.y + g * d.y};
                if (nxt.y < 0) break;
                Z nb = boundary + g;
                if (nb > max_points) break;
                // the rest of the chain can move at most bx per unit of drop
                if (nxt.x > bx * nxt.y || -nxt.x > bx * nxt.y) break;
                verts.push_back(nxt);
                bool ok = state_ok();
                if (ok) {
                    if (nxt.y == 0) {
                        if (nxt.x == 0) close(nb);
                    } else {
                        fall(i + 1, nb);
                    }
                }
                verts.pop_back();
                if (!ok) break;
            }
        }
    }

    // The falling chain has landed exactly on the start vertex.
    void close(Z boundary) {
        size_t n = verts.size() - 1;  // drop the duplicate of the origin
        if (n < 3) return;
        i128 a2 = 0;
        for (size_t i = 1; i + 1 < n; ++i) a2 += cross(verts[0], verts[i], verts[i + 1]);
        if (a2 <= 0 || a2 > max_area2) return;
        Z total = Z((a2 + boundary + 2) / 2);  // Pick
        if (total < min_points || total > max_points) return;
        std::vector<Pt> cycle(verts.begin(), verts.begin() + n);
        emit(LatticePolygon::hull(std::move(cycle)));
    }
};

struct VertexListLess {
    bool operator()(const std::vector<Pt>& a, const std::vector<Pt>& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](Pt x, Pt y) { return lex_less(x, y); });
    }
};

Z isqrt_floor(Z v) {
    Z r = Z(std::sqrt(double(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

}  // namespace

std::vector<LatticePolygon> enumerate_polygons(const CensusQuery& q, const CensusOptions& opts) {
    if (q.min_points < 1 || q.min_points > q.max_points)
        throw std::invalid_argument("census: need 1 <= min_points <= max_points");
    if (q.max_points > 40)
        throw std::invalid_argument("census: max_points larger than supported");

    std::set<std::vector<Pt>, VertexListLess> canon_keys;
    std::vector<LatticePolygon> classes;

    // Two-dimensional classes. Any class has a placement of height lw inside
    // a bounded strip: 3*lw^2 <= 8*area and area <= max_points - 5/2 bound
    // the height, and shearing bounds the x-extent by roughly points+height.
    if (q.max_points >= 3) {
        i128 max_area2 = 2 * q.max_points - 5;
        Z hmax = isqrt_floor(Z(4 * max_area2) / 3);
        if (hmax < 1) hmax = 1;
        Z bx = q.max_points + hmax + 2 + opts.box_padding;

        std::vector<Pt> rising;
        for (Z dy = 1; dy <= hmax; ++dy)
            for (Z dx = bx; dx >= -bx; --dx)
                if (gcd_z(dx, dy) == 1) rising.push_back({dx, dy});
        // angular (slope-decreasing) order
        std::sort(rising.begin(), rising.end(), [](Pt a, Pt b) { return cross(a, b) > 0; });

        Walker w;
        w.hmax = hmax;
        w.bx = bx;
        w.max_points = q.max_points;
        w.min_points = std::max<Z>(q.min_points, 3);
        w.max_area2 = max_area2;
        w.rising = std::move(rising);
        w.emit = [&](const LatticePolygon& P) {
            LatticePolygon c = canonical_form(P);
            if (canon_keys.insert(c.vertices()).second) classes.push_back(c);
        };
        w.run();

        if (q.require_interior) {
            std::vector<LatticePolygon> kept;
            for (const LatticePolygon& P : classes)
                if (is_interior_polygon(P)) kept.push_back(P);
            classes = std::move(kept);
        }
    }

    if (!q.require_two_dimensional) {
        if (q.require_interior) {
            // relaxation is defined for two-dimensional polygons only
        } else {
            if (q.min_points <= 1 && q.max_points >= 1)
                classes.push_back(LatticePolygon::hull({{0, 0}}));
            for (Z n = std::max<Z>(q.min_points, 2); n <= q.max_points; ++n)
                classes.push_back(LatticePolygon::hull({{0, 0}, {n - 1, 0}}));
        }
    }

    std::sort(classes.begin(), classes.end(),
              [](const LatticePolygon& a, const LatticePolygon& b) {
                  return VertexListLess{}(a.vertices(), b.vertices());
              });
    return classes;
}

namespace {

// Runs fn(i) for i in [0, n) across the worker pool, in deterministic chunks.
void parallel_for(Z n, int threads, const std::function<void(Z)>& fn) {
    threads = effective_threads(threads);
    if (threads <= 1 || n < 64) {
        for (Z i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<Z> next{0};
    auto worker = [&]() {
        for (;;) {
            Z i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace

CensusReport verify_theorem6(const std::vector<LatticePolygon>& classes) {
    CensusReport rep;
    std::vector<int> verdict(classes.size(), 0);  // 0 ok-generic, 1 ok-exception, 2 skip, 3 bad
    parallel_for(Z(classes.size()), 0, [&](Z i) {
        const LatticePolygon& P = classes[size_t(i)];
        if (P.dimension() != 2) {
            verdict[size_t(i)] = 2;
            return;
        }
        Z lw = lattice_width(P).width;
        Z lwi = lattice_width(interior_hull(P)).width;
        if (lattice_width_recursive(P) != lw) {
            verdict[size_t(i)] = 3;
            return;
        }
        Classification cls = recognize_standard(P);
        if (cls.shape == StandardShape::Simplex && cls.d >= 2)
            verdict[size_t(i)] = (lw == lwi + 3 && lw == cls.d) ? 1 : 3;
        else
            verdict[size_t(i)] = (lw == lwi + 2) ? 0 : 3;
    });
    for (size_t i = 0; i < classes.size(); ++i) {
        ++rep.checked;
        switch (verdict[i]) {
            case 0: ++rep.generic_branch; break;
            case 1: ++rep.exception_branch; break;
            case 2: ++rep.skipped; --rep.checked; break;
            default: rep.violations.push_back(classes[i]);
        }
    }
    return rep;
}

CensusReport verify_lemma5(const std::vector<LatticePolygon>& classes) {
    CensusReport rep;
    std::vector<int> verdict(classes.size(), 0);
    parallel_for(Z(classes.size()), 0, [&](Z i) {
        const LatticePolygon& P = classes[size_t(i)];
        if (P.dimension() != 2) {
            verdict[size_t(i)] = 2;
            return;
        }
        bool ok = true;
        RelaxedHull r = relaxed_hull(P);
        if (r.is_lattice) {
            // P must be recovered exactly as the interior hull of its
            // relaxation.
            ok = interior_hull(r.polygon.to_lattice()) == P;
        }
        // Maximality: P sits inside the relaxed hull of its own interior
        // hull (when that hull is two-dimensional, the lemma's scope).
        if (ok) {
            LatticePolygon ih = interior_hull(P);
            if (ih.dimension() == 2) {
                for (const HalfPlane& h : facet_half_planes(ih)) {
                    for (const Pt& v : P.vertices())
                        if (h.a * v.x + h.b * v.y > h.c + 1) {
                            ok = false;
                            break;
                        }
                    if (!ok) break;
                }
            }
        }
        verdict[size_t(i)] = ok ? 1 : 3;
    });
    for (size_t i = 0; i < classes.size(); ++i) {
        ++rep.checked;
        switch (verdict[i]) {
            case 1: ++rep.generic_branch; break;
            case 2: ++rep.skipped; --rep.checked; break;
            default: rep.violations.push_back(classes[i]);
        }
    }
    return rep;
}

}  // namespace latgon
