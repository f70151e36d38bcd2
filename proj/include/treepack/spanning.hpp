#pragma once

#include <optional>
#include <vector>

#include "treepack/graph.hpp"

namespace treepack {

struct SpanningPacking {
    int value = 0;
    std::vector<EdgeSet> trees;  // `value` pairwise edge-disjoint spanning trees
};

// Exact maximum number of edge-disjoint spanning trees, found by matroid
// union augmentation over the graphic matroid. Value 0 for disconnected
// graphs and for n <= 1.
SpanningPacking max_spanning_tree_packing(const Graph& g);

// The t trees if the graph packs t edge-disjoint spanning trees, else nullopt.
std::optional<std::vector<EdgeSet>> pack_spanning_trees(const Graph& g, int t);

}  // namespace treepack
