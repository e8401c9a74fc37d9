#pragma once

// Shared helpers for the test suites: seeded RNG and random unimodular maps.

#include <random>
#include <vector>

#include "latgon/polygon.hpp"

namespace latgon::testutil {

inline std::mt19937_64 make_rng(unsigned long long seed = 0x1a79be55ull) {
    return std::mt19937_64(seed);
}

// Random element of GL2(Z) plus translation, built from shears and flips so
// the determinant is +-1 by construction.
inline AffineLatticeMap random_unimodular(std::mt19937_64& rng, int shear_range = 4) {
    std::uniform_int_distribution<int> shear(-shear_range, shear_range);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> steps(2, 4);
    std::uniform_int_distribution<int> trans(-10, 10);

    AffineLatticeMap m;  // identity
    int n = steps(rng);
    for (int i = 0; i < n; ++i) {
        AffineLatticeMap s;
        if (coin(rng)) {
            s.a = 1; s.b = shear(rng); s.c = 0; s.d = 1;
        } else {
            s.a = 1; s.b = 0; s.c = shear(rng); s.d = 1;
        }
        m = m.then(s);
        if (coin(rng)) {
            AffineLatticeMap swap;
            swap.a = 0; swap.b = 1; swap.c = 1; swap.d = 0;
            m = m.then(swap);
        }
    }
    m.tx = trans(rng);
    m.ty = trans(rng);
    return m;
}

// Brute-force lattice width: tries every primitive direction in a box that
// certifiably contains the optimum (see lattice_width's search argument).
inline Z brute_force_lattice_width(const LatticePolygon& P, Z box) {
    Z best = -1;
    for (Z x = 0; x <= box; ++x)
        for (Z y = -box; y <= box; ++y) {
            if (x == 0 && y <= 0) continue;
            if (gcd_z(x, y) != 1) continue;
            Z w = width_in_direction(P, {x, y});
            if (best < 0 || w < best) best = w;
        }
    return best;
}

}  // namespace latgon::testutil
