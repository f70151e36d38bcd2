#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "treepack/graph.hpp"
#include "treepack/steiner.hpp"

namespace treepack {

struct FamilySpec {
    std::string family;
    std::map<std::string, long> params;  // numeric parameters by name
    std::optional<EdgeSet> edge_param;   // explicit edge set for complete_minus
    std::uint32_t seed = 0;

    std::string describe() const;
};

struct ConstructedGraph {
    Graph graph;
    // parameter values the construction guarantees, e.g. {"lambda",4},{"lambda3",3}
    std::map<std::string, long> declared;
};

// Families:
//   complete(n)            complete_bipartite(a,b)   path(n)   cycle(n)   star(n)
//   complete_minus(n; edge_param or mcount+seed)     pendant_complete(n)
//   join_family(k,n)       figure2_family(s,r)       h_graph(t)
//   example3_g(r)          example3_gbar(r)
//   grid(a,b)              wheel(n)                  prism(n)
// Parameter violations raise ArgumentError naming the constraint.
ConstructedGraph construct_family(const FamilySpec& spec);

// The pair (G, complement of G) built from r edge-disjoint spanning trees of
// K_{2r,2r+1}; both sides have spanning tree packing number exactly r.
std::pair<ConstructedGraph, ConstructedGraph> example3_pair(int r,
                                                            const PartitionLimits& limits = {});

// Seed-deterministic Erdos-Renyi sample; identical across platforms.
Graph random_graph(int n, double p, std::uint32_t seed);

// Constructive packing of n-(k+1)/2 internally disjoint S-trees in K_n minus
// the edge set m, for odd k and |m| <= (k-1)/2. Aborts with InternalError if
// a repair edge or a spanning tree packing it relies on cannot be found.
Packing theorem4_packing(int n, int k, const EdgeSet& m, const std::vector<int>& s);

}  // namespace treepack
