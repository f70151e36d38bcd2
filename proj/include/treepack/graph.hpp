#pragma once

#include <string>
#include <utility>
#include <vector>

namespace treepack {

// Normalized undirected edge: first < second.
using Edge = std::pair<int, int>;

// Plain edge subset, kept normalized and sorted where it matters.
using EdgeSet = std::vector<Edge>;

Edge make_edge(int u, int v);

/// Simple undirected graph on vertices 0..n-1. Values are immutable after
/// construction and safe to share across threads; every transform returns a
/// new graph.
class Graph {
public:
    Graph() = default;

    // Rejects loops, out-of-range endpoints and duplicate edges.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Sorted normalized edge list; indices into it are the canonical edge ids.
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int idx) const { return edges_[static_cast<std::size_t>(idx)]; }

    const std::vector<int>& neighbors(int v) const;
    // Indices into edges() of the edges incident to v, increasing.
    const std::vector<int>& incident_edges(int v) const;

    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
    int edge_index(int u, int v) const;  // -1 if absent

    int degree(int v) const;
    int min_degree() const;

    bool connected() const;
    std::vector<int> component_ids() const;  // id per vertex, ids 0..c-1 by first occurrence
    int component_count() const;

    bool is_complete() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> inc_;
};

enum class GraphFormat { Graph6, EdgeList };

// graph6 short form (n <= 62, header-less) or the "n m" + edge-lines text
// format. Both round-trip byte-identically for canonical inputs.
Graph parse_graph(const std::string& text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

Graph complement(const Graph& g);

struct LineGraphResult {
    Graph graph;                     // vertex i corresponds to source edge vertex_edges[i]
    std::vector<Edge> vertex_edges;  // the edge<->vertex correspondence
};
LineGraphResult line_graph(const Graph& g);

struct VertexEditResult {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for vertices that were removed
};

Graph delete_edges(const Graph& g, const EdgeSet& edges);
VertexEditResult delete_vertices(const Graph& g, const std::vector<int>& vs);
VertexEditResult induced_subgraph(const Graph& g, const std::vector<int>& vs);

// Disjoint union plus all edges between the two sides; h's vertex v becomes
// g.vertex_count() + v in the result.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace treepack
