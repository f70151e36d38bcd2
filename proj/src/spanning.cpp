#include "treepack/spanning.hpp"

#include <algorithm>
#include <queue>

#include "treepack/errors.hpp"

namespace treepack {

namespace {

// State of the matroid union search: which forest each edge currently
// belongs to (-1 = unused).
struct ForestState {
    const Graph& g;
    int t;
    std::vector<int> forest_of;

    ForestState(const Graph& graph, int forests)
        : g(graph), t(forests), forest_of(static_cast<std::size_t>(graph.edge_count()), -1) {}

    // Path between x and y inside forest f, as edge indices; empty if they
    // are in different components.
    std::vector<int> forest_path(int f, int x, int y) const {
        int n = g.vertex_count();
        std::vector<int> pred_edge(static_cast<std::size_t>(n), -1);
        std::vector<int> pred_vertex(static_cast<std::size_t>(n), -1);
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        std::vector<int> stack{x};
        seen[static_cast<std::size_t>(x)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v == y) break;
            for (int ei : g.incident_edges(v)) {
                if (forest_of[static_cast<std::size_t>(ei)] != f) continue;
                const auto& [a, b] = g.edge(ei);
                int w = a == v ? b : a;
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = true;
                pred_edge[static_cast<std::size_t>(w)] = ei;
                pred_vertex[static_cast<std::size_t>(w)] = v;
                stack.push_back(w);
            }
        }
        std::vector<int> path;
        if (!seen[static_cast<std::size_t>(y)]) return path;
        for (int v = y; v != x; v = pred_vertex[static_cast<std::size_t>(v)])
            path.push_back(pred_edge[static_cast<std::size_t>(v)]);
        return path;
    }

    bool connects_new(int f, int ei) const {
        const auto& [u, v] = g.edge(ei);
        return forest_path(f, u, v).empty();
    }

    bool is_forest(int f) const {
        int n = g.vertex_count();
        std::vector<int> parent(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
        auto find = [&](int v) {
            while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
            return v;
        };
        for (int ei = 0; ei < g.edge_count(); ++ei) {
            if (forest_of[static_cast<std::size_t>(ei)] != f) continue;
            const auto& [u, v] = g.edge(ei);
            int ru = find(u), rv = find(v);
            if (ru == rv) return false;
            parent[static_cast<std::size_t>(ru)] = rv;
        }
        return true;
    }

    // Breadth-first search over (edge, forest) insertion states. Returns true
    // and applies the exchange chain if `e0` was absorbed.
    bool augment(int e0) {
        struct State {
            int edge;
            int forest;
            int parent;  // index into states, -1 for roots
        };
        std::vector<State> states;
        std::vector<std::vector<bool>> visited(
            static_cast<std::size_t>(g.edge_count()),
            std::vector<bool>(static_cast<std::size_t>(t), false));
        std::queue<int> q;
        for (int f = 0; f < t; ++f) {
            visited[static_cast<std::size_t>(e0)][static_cast<std::size_t>(f)] = true;
            states.push_back({e0, f, -1});
            q.push(static_cast<int>(states.size()) - 1);
        }
        int accepted = -1;
        while (!q.empty() && accepted < 0) {
            int si = q.front();
            q.pop();
            State st = states[static_cast<std::size_t>(si)];
            const auto& [u, v] = g.edge(st.edge);
            std::vector<int> cycle = forest_path(st.forest, u, v);
            if (cycle.empty()) {
                accepted = si;
                break;
            }
            for (int h : cycle) {
                for (int f = 0; f < t; ++f) {
                    if (f == forest_of[static_cast<std::size_t>(h)]) continue;
                    if (visited[static_cast<std::size_t>(h)][static_cast<std::size_t>(f)]) continue;
                    visited[static_cast<std::size_t>(h)][static_cast<std::size_t>(f)] = true;
                    states.push_back({h, f, si});
                    q.push(static_cast<int>(states.size()) - 1);
                }
            }
        }
        if (accepted < 0) return false;
        // Apply the exchange chain from the accepted leaf back to the root:
        // each step moves the state's edge into its target forest, vacating
        // the slot its parent's target needs.
        for (int si = accepted; si >= 0; si = states[static_cast<std::size_t>(si)].parent)
            forest_of[static_cast<std::size_t>(states[static_cast<std::size_t>(si)].edge)] =
                states[static_cast<std::size_t>(si)].forest;
        for (int f = 0; f < t; ++f)
            if (!is_forest(f)) throw InternalError("matroid union exchange broke a forest");
        return true;
    }
};

}  // namespace

std::optional<std::vector<EdgeSet>> pack_spanning_trees(const Graph& g, int t) {
    if (t <= 0) throw ArgumentError("tree count must be positive");
    int n = g.vertex_count();
    if (n <= 1) return std::nullopt;  // spanning tree packing degenerate below 2 vertices
    if (static_cast<long long>(t) * (n - 1) > g.edge_count()) return std::nullopt;
    ForestState state(g, t);
    for (int ei = 0; ei < g.edge_count(); ++ei) state.augment(ei);
    std::vector<EdgeSet> trees(static_cast<std::size_t>(t));
    std::vector<int> sizes(static_cast<std::size_t>(t), 0);
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        int f = state.forest_of[static_cast<std::size_t>(ei)];
        if (f >= 0) {
            trees[static_cast<std::size_t>(f)].push_back(g.edge(ei));
            ++sizes[static_cast<std::size_t>(f)];
        }
    }
    for (int f = 0; f < t; ++f)
        if (sizes[static_cast<std::size_t>(f)] != n - 1) return std::nullopt;
    return trees;
}

SpanningPacking max_spanning_tree_packing(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1 || !g.connected()) return {0, {}};
    int upper = g.edge_count() / std::max(1, n - 1);
    for (int t = upper; t >= 1; --t) {
        auto trees = pack_spanning_trees(g, t);
        if (trees) return {t, std::move(*trees)};
    }
    return {0, {}};
}

}  // namespace treepack
