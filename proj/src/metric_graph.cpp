#include "latgon/metric_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace latgon {

MetricGraph::MetricGraph(std::vector<std::string> labels, std::vector<GraphEdge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
    if (labels_.empty()) throw std::invalid_argument("MetricGraph: need at least one vertex");
    {
        auto sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("MetricGraph: duplicate vertex label");
    }
    int n = vertex_count();
    for (const GraphEdge& e : edges_) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("MetricGraph: edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("MetricGraph: loop edges are not allowed");
        if (e.length < 1) throw std::invalid_argument("MetricGraph: edge lengths must be >= 1");
    }
    // connectivity
    std::vector<int> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const GraphEdge& e : edges_) {
            int w = -1;
            if (e.u == v) w = e.v;
            else if (e.v == v) w = e.u;
            if (w >= 0 && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    if (std::accumulate(seen.begin(), seen.end(), 0) != n)
        throw std::invalid_argument("MetricGraph: graph must be connected");
}

int MetricGraph::vertex_index(const std::string& label) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (labels_[i] == label) return i;
    throw std::invalid_argument("MetricGraph: unknown vertex label '" + label + "'");
}

Z MetricGraph::total_length() const {
    Z t = 0;
    for (const GraphEdge& e : edges_) t += e.length;
    return t;
}

int Model::vertex_index(const std::string& label) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (labels[i] == label) return i;
    throw std::invalid_argument("Model: unknown vertex label '" + label + "'");
}

Model expand_model(const MetricGraph& g, int level) {
    if (level < 1) throw std::invalid_argument("expand_model: level must be >= 1");
    Model m;
    m.level = level;
    m.n_base = g.vertex_count();
    m.labels = g.labels();
    i128 total_units = 0;
    for (const GraphEdge& e : g.edges()) total_units += i128(e.length) * level;
    if (total_units + g.vertex_count() > 200'000)
        throw std::invalid_argument("expand_model: model too large");

    auto add_edge = [&](int a, int b) {
        m.edges.push_back({a, b});
    };
    for (size_t ei = 0; ei < g.edges().size(); ++ei) {
        const GraphEdge& e = g.edges()[ei];
        Z steps = e.length * level;
        int prev = e.u;
        for (Z k = 1; k < steps; ++k) {
            std::ostringstream name;
            name << "_e" << ei << "_" << k;
            m.labels.push_back(name.str());
            int mid = int(m.labels.size()) - 1;
            add_edge(prev, mid);
            prev = mid;
        }
        add_edge(prev, e.v);
    }
    m.incident.assign(m.labels.size(), {});
    for (size_t i = 0; i < m.edges.size(); ++i) {
        m.incident[m.edges[i].first].push_back(int(i));
        m.incident[m.edges[i].second].push_back(int(i));
    }
    return m;
}

MetricGraph gamma_r(int r) {
    if (r < 1) throw std::invalid_argument("gamma_r: r must be >= 1");
    std::vector<std::string> labels;
    for (int i = 1; i <= r; ++i) labels.push_back("v" + std::to_string(i));
    std::vector<GraphEdge> edges;
    for (int i = 2; i <= r; ++i)
        for (int j = 0; j < i; ++j) edges.push_back({i - 2, i - 1, 1});
    return MetricGraph(std::move(labels), std::move(edges));
}

bool graph_isomorphic(const MetricGraph& a, const MetricGraph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edges().size() != b.edges().size()) return false;

    // multiset of (u, v, len) degree-style signatures
    auto signature = [](const MetricGraph& g, int v) {
        std::vector<Z> lens;
        for (const GraphEdge& e : g.edges())
            if (e.u == v || e.v == v) lens.push_back(e.length);
        std::sort(lens.begin(), lens.end());
        return lens;
    };
    std::vector<std::vector<Z>> sa(n), sb(n);
    for (int i = 0; i < n; ++i) {
        sa[i] = signature(a, i);
        sb[i] = signature(b, i);
    }
    {
        auto ca = sa, cb = sb;
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (ca != cb) return false;
    }

    // edge-length multiset between a vertex pair
    auto pair_lens = [](const MetricGraph& g, int u, int v) {
        std::vector<Z> lens;
        for (const GraphEdge& e : g.edges())
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) lens.push_back(e.length);
        std::sort(lens.begin(), lens.end());
        return lens;
    };

    std::vector<int> map_ab(n, -1), used(n, 0);
    auto backtrack = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || sa[v] != sb[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (pair_lens(a, v, u) != pair_lens(b, w, map_ab[u])) ok = false;
            if (!ok) continue;
            map_ab[v] = w;
            used[w] = 1;
            if (self(self, v + 1)) return true;
            used[w] = 0;
            map_ab[v] = -1;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

std::string to_dot(const MetricGraph& g) {
    std::ostringstream os;
    os << "graph latgon {\n  node [shape=circle];\n";
    for (const std::string& l : g.labels()) os << "  \"" << l << "\";\n";
    int chain_id = 0;
    for (const GraphEdge& e : g.edges()) {
        if (e.length == 1) {
            os << "  \"" << g.labels()[e.u] << "\" -- \"" << g.labels()[e.v] << "\";\n";
        } else {
            // draw the chain explicitly, marking interior vertices
            std::string prev = "\"" + g.labels()[e.u] + "\"";
            for (Z k = 1; k < e.length; ++k) {
                std::string mid = "chain" + std::to_string(chain_id++);
                os << "  " << mid << " [shape=point];\n";
                os << "  " << prev << " -- " << mid << ";\n";
                prev = mid;
            }
            os << "  " << prev << " -- \"" << g.labels()[e.v] << "\";\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace latgon
