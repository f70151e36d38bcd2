// Test-only oracles, independent of the solver's enumeration and search
// paths: brute force over raw edge subsets, greedy-free exponential packing,
// and a fraction-free Kirchhoff determinant for spanning tree counts.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "treepack/graph.hpp"
#include "treepack/steiner.hpp"

namespace oracle {

using treepack::Edge;
using treepack::EdgeSet;
using treepack::Graph;

// Is this edge subset a tree containing every terminal, with all leaves
// terminal? Checked from scratch with adjacency maps.
inline bool is_minimal_steiner_tree(const Graph& g, const std::vector<int>& s,
                                    const std::vector<int>& edge_idxs) {
    if (edge_idxs.empty()) return false;
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (int ei : edge_idxs) {
        auto [u, v] = g.edge(ei);
        deg[static_cast<std::size_t>(u)]++;
        deg[static_cast<std::size_t>(v)]++;
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    int nv = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (deg[static_cast<std::size_t>(v)] > 0) ++nv;
    if (nv != static_cast<int>(edge_idxs.size()) + 1) return false;  // not a forest of one tree
    // connected?
    int start = -1;
    for (int v = 0; v < g.vertex_count() && start < 0; ++v)
        if (deg[static_cast<std::size_t>(v)] > 0) start = v;
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != nv) return false;
    for (int v : s)
        if (deg[static_cast<std::size_t>(v)] == 0) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (deg[static_cast<std::size_t>(v)] == 1 &&
            !std::binary_search(s.begin(), s.end(), v))
            return false;
    return true;
}

// All minimal Steiner trees by filtering every edge subset (m <= ~20).
inline std::vector<std::vector<int>> all_minimal_trees(const Graph& g,
                                                       const std::vector<int>& s) {
    std::vector<std::vector<int>> trees;
    int m = g.edge_count();
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> idxs;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) idxs.push_back(i);
        if (is_minimal_steiner_tree(g, s, idxs)) trees.push_back(std::move(idxs));
    }
    return trees;
}

// Exact maximum packing by plain recursion over the tree list.
inline int max_packing_size(const Graph& g, const std::vector<int>& s, bool internally) {
    auto trees = all_minimal_trees(g, s);
    std::vector<std::uint32_t> edge_masks;
    std::vector<std::uint64_t> steiner_masks;
    for (const auto& idxs : trees) {
        std::uint32_t em = 0;
        std::uint64_t vm = 0;
        for (int ei : idxs) {
            em |= 1u << ei;
            auto [u, v] = g.edge(ei);
            vm |= (1ULL << u) | (1ULL << v);
        }
        for (int v : s) vm &= ~(1ULL << v);
        edge_masks.push_back(em);
        steiner_masks.push_back(vm);
    }
    int best = 0;
    std::vector<std::size_t> stack;
    std::function<void(std::size_t, std::uint32_t, std::uint64_t, int)> rec =
        [&](std::size_t start, std::uint32_t used_e, std::uint64_t used_v, int count) {
            best = std::max(best, count);
            for (std::size_t i = start; i < trees.size(); ++i) {
                if (edge_masks[i] & used_e) continue;
                if (internally && (steiner_masks[i] & used_v)) continue;
                rec(i + 1, used_e | edge_masks[i], used_v | steiner_masks[i], count + 1);
            }
        };
    rec(0, 0, 0, 0);
    return best;
}

// Kirchhoff spanning tree count via fraction-free (Bareiss) elimination.
inline long long spanning_tree_count(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return n;  // one empty tree for a single vertex
    int d = n - 1;
    std::vector<std::vector<long long>> a(static_cast<std::size_t>(d),
                                          std::vector<long long>(static_cast<std::size_t>(d), 0));
    for (int v = 0; v < d; ++v) a[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] =
        g.degree(v);
    for (const auto& [u, v] : g.edges()) {
        if (u < d && v < d) {
            a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] -= 1;
            a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] -= 1;
        }
    }
    long long prev = 1;
    for (int k = 0; k < d; ++k) {
        if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < d; ++r)
                if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(swap_row)]);
            for (auto& x : a[static_cast<std::size_t>(k)]) x = -x;
        }
        for (int i = k + 1; i < d; ++i)
            for (int j = k + 1; j < d; ++j) {
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                         a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                     a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                         a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) /
                    prev;
            }
        prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    return a[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(d - 1)];
}

}  // namespace oracle
