#include "latgon/divisor.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace latgon {

Divisor zero_divisor(const Model& m) { return Divisor{std::vector<Z>(m.vertex_count(), 0)}; }

int base_vertex(const Model& m) {
    int q = 0;
    for (int i = 1; i < m.n_base; ++i)
        if (m.labels[i] < m.labels[q]) q = i;
    return q;
}

namespace {

void check_divisor(const Model& m, const Divisor& D, const char* who) {
    if (int(D.coeffs.size()) != m.vertex_count())
        throw std::invalid_argument(std::string(who) + ": divisor does not match the model");
}

}  // namespace

std::set<int> dhar_burn(const Model& m, const Divisor& D, int q) {
    check_divisor(m, D, "dhar_burn");
    int n = m.vertex_count();
    if (q < 0 || q >= n) throw std::invalid_argument("dhar_burn: base vertex out of range");
    for (int v = 0; v < n; ++v)
        if (v != q && D.coeffs[v] < 0)
            throw std::invalid_argument("dhar_burn: divisor must be effective away from the base vertex");

    std::vector<char> burnt(n, 0);
    std::vector<Z> burning(n, 0);  // burning incident edges per vertex
    std::queue<int> work;
    burnt[q] = 1;
    work.push(q);
    while (!work.empty()) {
        int v = work.front();
        work.pop();
        for (int ei : m.incident[v]) {
            int w = m.other_end(ei, v);
            if (burnt[w]) continue;
            if (++burning[w] > D.coeffs[w]) {
                burnt[w] = 1;
                work.push(w);
            }
        }
    }
    std::set<int> unburnt;
    for (int v = 0; v < n; ++v)
        if (!burnt[v]) unburnt.insert(v);
    return unburnt;
}

Divisor reduce(const Model& m, const Divisor& D, int q) {
    check_divisor(m, D, "reduce");
    int n = m.vertex_count();
    if (q < 0 || q >= n) throw std::invalid_argument("reduce: base vertex out of range");
    Divisor R = D;

    // Phase 1: make R effective away from q by anti-firing the distance
    // super-level sets, outermost layer first. Anti-firing {dist >= t} hands
    // every layer-t vertex one chip per edge towards layer t-1 and only
    // pushes debt inward, so after the sweep all debt sits at q.
    std::vector<int> dist(n, -1);
    std::queue<int> bfs;
    dist[q] = 0;
    bfs.push(q);
    int maxdist = 0;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int ei : m.incident[v]) {
            int w = m.other_end(ei, v);
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                maxdist = std::max(maxdist, dist[w]);
                bfs.push(w);
            }
        }
    }
    for (int t = maxdist; t >= 1; --t) {
        Z times = 0;
        for (int v = 0; v < n; ++v) {
            if (dist[v] != t || R.coeffs[v] >= 0) continue;
            Z inward = 0;  // edges towards layer t-1
            for (int ei : m.incident[v])
                if (dist[m.other_end(ei, v)] == t - 1) ++inward;
            times = std::max(times, (-R.coeffs[v] + inward - 1) / inward);
        }
        if (times == 0) continue;
        for (const auto& [a, b] : m.edges) {
            bool a_in = dist[a] >= t, b_in = dist[b] >= t;
            if (a_in == b_in) continue;
            int inside = a_in ? a : b, outside = a_in ? b : a;
            R.coeffs[inside] += times;
            R.coeffs[outside] -= times;
        }
    }

    // Phase 2: repeatedly fire the maximal unburnt set from Dhar's algorithm.
    for (long long guard = 0;; ++guard) {
        if (guard > 100'000'000) throw std::logic_error("reduce: firing loop did not terminate");
        std::set<int> U = dhar_burn(m, R, q);
        if (U.empty()) break;
        for (const auto& [a, b] : m.edges) {
            bool a_in = U.count(a), b_in = U.count(b);
            if (a_in == b_in) continue;
            R.coeffs[a_in ? a : b] -= 1;
            R.coeffs[a_in ? b : a] += 1;
        }
    }
    return R;
}

bool divisors_equivalent(const Model& m, const Divisor& a, const Divisor& b) {
    check_divisor(m, a, "divisors_equivalent");
    check_divisor(m, b, "divisors_equivalent");
    if (a.degree() != b.degree())
        throw std::invalid_argument("divisors_equivalent: divisors have different degrees");
    int q = base_vertex(m);
    return reduce(m, a, q) == reduce(m, b, q);
}

// ---------------------------------------------------------------------------
// Laplacian oracle

namespace {

i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("laplacian solve: intermediate value overflow");
    return r;
}

}  // namespace

bool equivalent_via_laplacian(const Model& m, const Divisor& a, const Divisor& b) {
    check_divisor(m, a, "equivalent_via_laplacian");
    check_divisor(m, b, "equivalent_via_laplacian");
    if (a.degree() != b.degree())
        throw std::invalid_argument("equivalent_via_laplacian: divisors have different degrees");
    int n = m.vertex_count();
    if (n == 1) return true;
    int q = base_vertex(m);

    // Reduced Laplacian system L_q x = (a - b) restricted away from q. The
    // difference is principal iff the unique rational solution is integral;
    // fraction-free (Bareiss) elimination keeps everything exact.
    int k = n - 1;
    std::vector<int> idx;  // model vertex per solver row
    for (int v = 0; v < n; ++v)
        if (v != q) idx.push_back(v);
    std::vector<std::vector<i128>> M(k, std::vector<i128>(k + 1, 0));
    for (const auto& [u, v] : m.edges) {
        auto pos = [&](int w) { return w < q ? w : w - 1; };
        if (u != q) M[pos(u)][pos(u)] += 1;
        if (v != q) M[pos(v)][pos(v)] += 1;
        if (u != q && v != q) {
            M[pos(u)][pos(v)] -= 1;
            M[pos(v)][pos(u)] -= 1;
        }
    }
    for (int i = 0; i < k; ++i) M[i][k] = a.coeffs[idx[i]] - b.coeffs[idx[i]];

    i128 prev = 1;
    for (int col = 0; col < k; ++col) {
        int piv = -1;
        for (int r = col; r < k; ++r)
            if (M[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::logic_error("laplacian solve: reduced Laplacian is singular");
        std::swap(M[col], M[piv]);
        for (int r = col + 1; r < k; ++r) {
            for (int c = col + 1; c <= k; ++c)
                M[r][c] = (checked_mul(M[col][col], M[r][c]) - checked_mul(M[r][col], M[col][c])) / prev;
            M[r][col] = 0;
        }
        prev = M[col][col];
    }
    // Back-substitution on y_i = x_i * det, which is an integer by Cramer's
    // rule; the solution is integral iff det divides every y_i.
    i128 det = M[k - 1][k - 1];
    std::vector<i128> y(k, 0);
    for (int r = k - 1; r >= 0; --r) {
        i128 rhs = checked_mul(M[r][k], det);
        for (int c = r + 1; c < k; ++c) rhs -= checked_mul(M[r][c], y[c]);
        if (rhs % M[r][r] != 0) throw std::logic_error("laplacian solve: inexact division");
        y[r] = rhs / M[r][r];
        if (y[r] % det != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Rank and gonality

bool has_effective_representative(const Model& m, const Divisor& D) {
    if (D.degree() < 0) return false;
    if (D.effective()) return true;
    int q = base_vertex(m);
    Divisor r = reduce(m, D, q);
    return r.coeffs[q] >= 0;
}

namespace {

// Enumerates effective divisors of the given degree in lex order of the
// coefficient vector, invoking fn; fn returning false stops the walk.
template <typename Fn>
bool for_each_effective(const Model& m, Z degree, Fn&& fn) {
    int n = m.vertex_count();
    std::vector<Z> c(n, 0);
    auto rec = [&](auto&& self, int pos, Z remaining) -> bool {
        if (pos == n - 1) {
            c[pos] = remaining;
            bool go = fn(c);
            c[pos] = 0;
            return go;
        }
        for (Z take = 0; take <= remaining; ++take) {
            c[pos] = take;
            if (!self(self, pos + 1, remaining - take)) {
                c[pos] = 0;
                return false;
            }
        }
        c[pos] = 0;
        return true;
    };
    return rec(rec, 0, degree);
}

}  // namespace

bool rank_at_least(const Model& m, const Divisor& D, Z r) {
    check_divisor(m, D, "rank_at_least");
    if (r < 0) throw std::invalid_argument("rank_at_least: r must be >= 0");
    if (D.degree() < r) return false;
    bool all_ok = true;
    for_each_effective(m, r, [&](const std::vector<Z>& e) {
        Divisor diff = D;
        int q = -1;
        for (int v = 0; v < m.vertex_count(); ++v) {
            diff.coeffs[v] -= e[v];
            if (q < 0 && e[v] > 0) q = v;
        }
        if (q < 0) q = base_vertex(m);  // r == 0
        Divisor red = reduce(m, diff, q);
        if (!red.effective()) {
            all_ok = false;
            return false;
        }
        return true;
    });
    return all_ok;
}

Z rank(const Model& m, const Divisor& D) {
    if (!has_effective_representative(m, D)) return -1;
    Z r = 0;
    while (r < D.degree() && rank_at_least(m, D, r + 1)) ++r;
    return r;
}

GonalityResult gonality(const MetricGraph& g, int level) {
    Model m = expand_model(g, level);
    int q0 = base_vertex(m);
    Z cap = m.first_betti() + 1;  // Riemann-Roch guarantees rank one by then
    for (Z d = 1; d <= cap; ++d) {
        GonalityResult found;
        bool have = false;
        for_each_effective(m, d, [&](const std::vector<Z>& c) {
            Divisor D{c};
            if (!dhar_burn(m, D, q0).empty()) return true;  // not q0-reduced
            if (rank_at_least(m, D, 1)) {
                found = {d, level, D};
                have = true;
                return false;
            }
            return true;
        });
        if (have) return found;
    }
    throw std::logic_error("gonality: no rank-one divisor found below the Riemann-Roch cap");
}

}  // namespace latgon
