#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "treepack/graph.hpp"

namespace treepack {

/// A classical connectivity value together with a witness cut. For edge
/// connectivity the witness is an edge cut; for vertex connectivity a vertex
/// cut; for a disconnected graph the value is 0 and `bipartition` holds one
/// component's vertex set. Deleting the witness separates `pair` (when set).
struct LocalCut {
    int value = 0;
    std::optional<std::pair<int, int>> pair;
    EdgeSet cut_edges;
    std::vector<int> cut_vertices;
    std::optional<std::vector<int>> bipartition;
};

// Maximum number of edge-disjoint x-y paths = minimum x-y edge cut.
LocalCut local_edge_connectivity(const Graph& g, int x, int y);

// lambda(G): 0 if disconnected, else min over pairs (n-1 flow calls from a root).
LocalCut edge_connectivity(const Graph& g);

// kappa(G): n-1 for complete graphs (no witness cut exists), else the minimum
// over non-adjacent pairs of the vertex-split flow value.
LocalCut vertex_connectivity(const Graph& g);

// Max internally disjoint x-y paths (the direct edge counts when present).
LocalCut local_vertex_connectivity(const Graph& g, int x, int y);

// True iff every pair in s has local edge-connectivity >= threshold.
bool is_set_edge_connected(const Graph& g, const std::vector<int>& s, int threshold);

// Edge-disjoint (mode=false) or internally disjoint (mode=true) x-y paths of
// maximum cardinality; each path is an edge list from x to y.
std::vector<std::vector<Edge>> disjoint_paths(const Graph& g, int x, int y, bool internally);

}  // namespace treepack
