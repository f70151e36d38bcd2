#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "treepack/graph.hpp"

namespace treepack {

/// Witness that no packing can exceed `bound`: every tree connecting one
/// vertex from each block must cross between blocks at least |blocks|-1
/// times, and only `crossing` edges do so.
struct PartitionCertificate {
    std::vector<std::vector<int>> blocks;  // nonempty, disjoint, cover V(G)
    int crossing = 0;
    int bound = 0;  // floor(crossing / (|blocks|-1))
};

struct PartitionLimits {
    int tutte_vertex_cap = 12;                  // Bell-number guard for full partitions
    unsigned long long enumeration_cap = 20'000'000;  // partitions examined per call
};

// Minimum of floor(crossing/(|blocks|-1)) over partitions of V(G) with at
// least two blocks, every block containing a terminal. An upper bound on the
// number of edge-disjoint Steiner trees for the terminal set; exact spanning
// tree packing bound when terminals = V(G). Returns nullopt when the
// enumeration would exceed the configured cap.
std::optional<PartitionCertificate> steiner_partition_bound(const Graph& g,
                                                            const std::vector<int>& terminals,
                                                            const PartitionLimits& limits = {});

// Spanning tree packing number by partition enumeration (terminals = V).
// Value 0 with a component bipartition for disconnected input. Throws
// ResourceError above the vertex cap.
std::pair<int, PartitionCertificate> tutte_partition_number(const Graph& g,
                                                            const PartitionLimits& limits = {});

// Validity check used by certificate verification: blocks partition V(G),
// crossing/bound recomputed, every block meets the terminal set.
bool check_partition_certificate(const Graph& g, const std::vector<int>& terminals,
                                 const PartitionCertificate& cert);

}  // namespace treepack
