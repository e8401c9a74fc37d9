#pragma once

// Divisor theory on metric-graph models: Dhar's burning algorithm, reduced
// divisors, linear equivalence by two independent routes, rank and gonality.

#include <optional>
#include <set>
#include <vector>

#include "latgon/metric_graph.hpp"

namespace latgon {

// Integer chip configuration on the vertices of a model.
struct Divisor {
    std::vector<Z> coeffs;

    Z degree() const {
        Z d = 0;
        for (Z c : coeffs) d += c;
        return d;
    }
    bool effective() const {
        for (Z c : coeffs)
            if (c < 0) return false;
        return true;
    }
    friend bool operator==(const Divisor&, const Divisor&) = default;
};

Divisor zero_divisor(const Model& m);

// Maximal simultaneously-firable set: fire spreads from q, a vertex burns
// once its burning incident edges outnumber its chips. Empty result means D
// is q-reduced. D must be effective away from q.
std::set<int> dhar_burn(const Model& m, const Divisor& D, int q);

// The unique q-reduced divisor equivalent to D (any input divisor).
Divisor reduce(const Model& m, const Divisor& D, int q);

// Reduction route: compares q0-reduced forms. Throws if degrees differ.
bool divisors_equivalent(const Model& m, const Divisor& a, const Divisor& b);

// Independent oracle: is a - b in the integer image of the model Laplacian?
// Exact integer elimination; throws if degrees differ.
bool equivalent_via_laplacian(const Model& m, const Divisor& a, const Divisor& b);

// |D| != emptyset test through the q-reduced form.
bool has_effective_representative(const Model& m, const Divisor& D);

// True iff |D - E| is nonempty for every effective E of degree r supported
// on model vertices.
bool rank_at_least(const Model& m, const Divisor& D, Z r);

// Baker-Norine rank computed over the model's vertex set; -1 when |D| is
// empty.
Z rank(const Model& m, const Divisor& D);

struct GonalityResult {
    Z gonality = 0;
    int level = 1;
    Divisor witness;  // on the level-N model, lex-smallest at minimal degree
};

// Minimal degree of a rank-one divisor supported on the level-N model's
// vertices. Enumerates q0-reduced effective divisors in lex order.
GonalityResult gonality(const MetricGraph& g, int level);

// Smallest-label base vertex used for canonical reductions.
int base_vertex(const Model& m);

}  // namespace latgon
