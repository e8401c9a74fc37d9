#pragma once

// Finite connected multigraphs with positive integer edge lengths, their
// unit-length subdivision models, and small-graph isomorphism.

#include <string>
#include <vector>

#include "latgon/geom.hpp"

namespace latgon {

struct GraphEdge {
    int u = 0, v = 0;
    Z length = 1;
};

// Connected loopless multigraph; parallel edges allowed, all lengths >= 1.
class MetricGraph {
  public:
    MetricGraph() = default;
    MetricGraph(std::vector<std::string> labels, std::vector<GraphEdge> edges);

    int vertex_count() const { return int(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    int vertex_index(const std::string& label) const;  // throws if unknown

    // E - V + 1 (edge count is independent of lengths).
    Z first_betti() const { return Z(edges_.size()) - vertex_count() + 1; }
    Z total_length() const;

  private:
    std::vector<std::string> labels_;
    std::vector<GraphEdge> edges_;
};

// Unit-length combinatorial model of a metric graph at subdivision level N:
// every edge of length L becomes a path of N*L unit edges.
struct Model {
    int level = 1;
    int n_base = 0;                          // model vertices [0, n_base) are originals
    std::vector<std::string> labels;         // originals first, then chain vertices
    std::vector<std::pair<int, int>> edges;  // unit edges
    std::vector<std::vector<int>> incident;  // vertex -> incident edge ids

    int vertex_count() const { return int(labels.size()); }
    int other_end(int edge_id, int v) const {
        return edges[edge_id].first == v ? edges[edge_id].second : edges[edge_id].first;
    }
    int vertex_index(const std::string& label) const;  // throws if unknown
    Z first_betti() const { return Z(edges.size()) - vertex_count() + 1; }
};

Model expand_model(const MetricGraph& g, int level);

// Path v1..vr with i parallel unit edges between v_{i-1} and v_i.
MetricGraph gamma_r(int r);

// Multigraph isomorphism respecting edge lengths (exact, for small graphs).
bool graph_isomorphic(const MetricGraph& a, const MetricGraph& b);

// Graphviz rendering; edges of length > 1 are drawn as chains with the
// intermediate vertices marked as points.
std::string to_dot(const MetricGraph& g);

}  // namespace latgon
