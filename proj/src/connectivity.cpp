#include "treepack/connectivity.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "treepack/errors.hpp"

namespace treepack {

namespace {

// Unit-capacity max flow via BFS augmentation. Values at desk scale are tiny,
// so one augmenting path per BFS is plenty.
struct FlowNetwork {
    struct Arc {
        int to;
        int cap;
        int orig;  // capacity at construction; 0 marks a bookkeeping reverse arc
        int rev;   // index of the reverse arc in arcs[to]
    };
    std::vector<std::vector<Arc>> arcs;

    explicit FlowNetwork(int n) : arcs(static_cast<std::size_t>(n)) {}

    void add_arc(int u, int v, int cap) {
        arcs[static_cast<std::size_t>(u)].push_back(
            {v, cap, cap, static_cast<int>(arcs[static_cast<std::size_t>(v)].size())});
        arcs[static_cast<std::size_t>(v)].push_back(
            {u, 0, 0, static_cast<int>(arcs[static_cast<std::size_t>(u)].size()) - 1});
    }

    bool augment(int s, int t) {
        std::vector<std::pair<int, int>> pred(arcs.size(), {-1, -1});  // (vertex, arc idx)
        std::vector<bool> seen(arcs.size(), false);
        std::queue<int> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = true;
        while (!q.empty() && !seen[static_cast<std::size_t>(t)]) {
            int v = q.front();
            q.pop();
            const auto& out = arcs[static_cast<std::size_t>(v)];
            for (std::size_t i = 0; i < out.size(); ++i) {
                if (out[i].cap <= 0 || seen[static_cast<std::size_t>(out[i].to)]) continue;
                seen[static_cast<std::size_t>(out[i].to)] = true;
                pred[static_cast<std::size_t>(out[i].to)] = {v, static_cast<int>(i)};
                q.push(out[i].to);
            }
        }
        if (!seen[static_cast<std::size_t>(t)]) return false;
        for (int v = t; v != s;) {
            auto [u, i] = pred[static_cast<std::size_t>(v)];
            Arc& a = arcs[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
            a.cap -= 1;
            arcs[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += 1;
            v = u;
        }
        return true;
    }

    int max_flow(int s, int t) {
        int total = 0;
        while (augment(s, t)) ++total;
        return total;
    }

    std::vector<bool> residual_reachable(int s) const {
        std::vector<bool> seen(arcs.size(), false);
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const Arc& a : arcs[static_cast<std::size_t>(v)]) {
                if (a.cap > 0 && !seen[static_cast<std::size_t>(a.to)]) {
                    seen[static_cast<std::size_t>(a.to)] = true;
                    stack.push_back(a.to);
                }
            }
        }
        return seen;
    }

    // Flow on original arcs, with antiparallel units cancelled out.
    std::map<std::pair<int, int>, int> net_usage() const {
        std::map<std::pair<int, int>, int> usage;
        for (std::size_t u = 0; u < arcs.size(); ++u)
            for (const Arc& a : arcs[u]) {
                int flow = a.orig - a.cap;
                if (a.orig > 0 && flow > 0) usage[{static_cast<int>(u), a.to}] += flow;
            }
        for (auto& [key, count] : usage) {
            auto rev = usage.find({key.second, key.first});
            if (rev == usage.end() || key.first > key.second) continue;
            int c = std::min(count, rev->second);
            count -= c;
            rev->second -= c;
        }
        return usage;
    }
};

// Decompose `value` units of s->t flow into simple vertex paths. Walks the
// usage graph consuming arcs; revisiting a vertex erases the loop, which
// discards a flow cycle while preserving conservation.
std::vector<std::vector<int>> flow_paths(const FlowNetwork& net, int s, int t, int value) {
    auto usage = net.net_usage();
    std::vector<std::vector<std::pair<int, int>>> out(net.arcs.size());  // (to, remaining)
    for (const auto& [key, count] : usage)
        if (count > 0) out[static_cast<std::size_t>(key.first)].push_back({key.second, count});
    std::vector<std::vector<int>> paths;
    std::vector<bool> on_path(net.arcs.size(), false);
    for (int p = 0; p < value; ++p) {
        std::vector<int> path{s};
        on_path[static_cast<std::size_t>(s)] = true;
        std::size_t guard = 0;
        while (path.back() != t) {
            int v = path.back();
            bool moved = false;
            for (auto& [w, remaining] : out[static_cast<std::size_t>(v)]) {
                if (remaining == 0) continue;
                remaining -= 1;
                if (on_path[static_cast<std::size_t>(w)]) {
                    while (path.back() != w) {
                        on_path[static_cast<std::size_t>(path.back())] = false;
                        path.pop_back();
                    }
                } else {
                    path.push_back(w);
                    on_path[static_cast<std::size_t>(w)] = true;
                }
                moved = true;
                break;
            }
            if (!moved || ++guard > 4 * net.arcs.size() * net.arcs.size())
                throw InternalError("flow path extraction stalled");
        }
        for (int v : path) on_path[static_cast<std::size_t>(v)] = false;
        paths.push_back(std::move(path));
    }
    return paths;
}

void check_pair(const Graph& g, int x, int y) {
    if (x < 0 || x >= g.vertex_count() || y < 0 || y >= g.vertex_count())
        throw ArgumentError("vertex out of range");
    if (x == y) throw ArgumentError("pair vertices must be distinct");
}

std::vector<int> component_of(const Graph& g, int v) {
    auto comp = g.component_ids();
    std::vector<int> side;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (comp[static_cast<std::size_t>(u)] == comp[static_cast<std::size_t>(v)])
            side.push_back(u);
    return side;
}

FlowNetwork edge_network(const Graph& g) {
    FlowNetwork net(g.vertex_count());
    for (const auto& [u, v] : g.edges()) {
        net.add_arc(u, v, 1);
        net.add_arc(v, u, 1);
    }
    return net;
}

// Vertex-split network: vertex v becomes arc 2v -> 2v+1 of capacity 1 (the
// terminals get effectively unbounded capacity), each edge {u,v} becomes
// u_out -> v_in and v_out -> u_in. Source is x_out, sink y_in.
FlowNetwork split_network(const Graph& g, int x, int y) {
    int n = g.vertex_count();
    FlowNetwork net(2 * n);
    for (int v = 0; v < n; ++v) {
        int cap = (v == x || v == y) ? n : 1;
        net.add_arc(2 * v, 2 * v + 1, cap);
    }
    for (const auto& [u, v] : g.edges()) {
        net.add_arc(2 * u + 1, 2 * v, 1);
        net.add_arc(2 * v + 1, 2 * u, 1);
    }
    return net;
}

}  // namespace

LocalCut local_edge_connectivity(const Graph& g, int x, int y) {
    check_pair(g, x, y);
    FlowNetwork net = edge_network(g);
    int value = net.max_flow(x, y);
    LocalCut cut;
    cut.value = value;
    cut.pair = {x, y};
    auto reach = net.residual_reachable(x);
    for (const auto& [u, v] : g.edges())
        if (reach[static_cast<std::size_t>(u)] != reach[static_cast<std::size_t>(v)])
            cut.cut_edges.push_back({u, v});
    if (value == 0) cut.bipartition = component_of(g, x);
    return cut;
}

LocalCut edge_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return {0, std::nullopt, {}, {}, std::vector<int>{}};
    if (!g.connected()) {
        LocalCut cut;
        cut.value = 0;
        cut.bipartition = component_of(g, 0);
        return cut;
    }
    LocalCut best;
    best.value = n;  // above any possible cut
    for (int v = 1; v < n; ++v) {
        LocalCut c = local_edge_connectivity(g, 0, v);
        if (c.value < best.value) best = std::move(c);
    }
    return best;
}

LocalCut local_vertex_connectivity(const Graph& g, int x, int y) {
    check_pair(g, x, y);
    FlowNetwork net = split_network(g, x, y);
    int value = net.max_flow(2 * x + 1, 2 * y);
    LocalCut cut;
    cut.value = value;
    cut.pair = {x, y};
    auto reach = net.residual_reachable(2 * x + 1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != x && v != y && reach[static_cast<std::size_t>(2 * v)] &&
            !reach[static_cast<std::size_t>(2 * v + 1)])
            cut.cut_vertices.push_back(v);
    for (const auto& [u, v] : g.edges()) {
        if (reach[static_cast<std::size_t>(2 * u + 1)] && !reach[static_cast<std::size_t>(2 * v)])
            cut.cut_edges.push_back({u, v});
        else if (reach[static_cast<std::size_t>(2 * v + 1)] &&
                 !reach[static_cast<std::size_t>(2 * u)])
            cut.cut_edges.push_back({u, v});
    }
    if (value == 0) cut.bipartition = component_of(g, x);
    return cut;
}

LocalCut vertex_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return {0, std::nullopt, {}, {}, std::vector<int>{}};
    if (!g.connected()) {
        LocalCut cut;
        cut.value = 0;
        cut.bipartition = component_of(g, 0);
        return cut;
    }
    if (g.is_complete()) {
        LocalCut cut;
        cut.value = n - 1;  // no separating vertex cut exists
        return cut;
    }
    LocalCut best;
    best.value = n;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (g.has_edge(x, y)) continue;
            LocalCut c = local_vertex_connectivity(g, x, y);
            if (c.value < best.value) best = std::move(c);
        }
    return best;
}

bool is_set_edge_connected(const Graph& g, const std::vector<int>& s, int threshold) {
    if (s.size() < 2) throw ArgumentError("terminal set needs at least two vertices");
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (local_edge_connectivity(g, s[i], s[j]).value < threshold) return false;
    return true;
}

std::vector<std::vector<Edge>> disjoint_paths(const Graph& g, int x, int y, bool internally) {
    check_pair(g, x, y);
    std::vector<std::vector<int>> node_paths;
    if (internally) {
        FlowNetwork net = split_network(g, x, y);
        int value = net.max_flow(2 * x + 1, 2 * y);
        node_paths = flow_paths(net, 2 * x + 1, 2 * y, value);
        for (auto& p : node_paths) {
            std::vector<int> collapsed;
            for (int split_node : p)
                if (collapsed.empty() || collapsed.back() != split_node / 2)
                    collapsed.push_back(split_node / 2);
            p = std::move(collapsed);
        }
    } else {
        FlowNetwork net = edge_network(g);
        int value = net.max_flow(x, y);
        node_paths = flow_paths(net, x, y, value);
    }
    std::vector<std::vector<Edge>> paths;
    for (const auto& p : node_paths) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) edges.push_back(make_edge(p[i], p[i + 1]));
        paths.push_back(std::move(edges));
    }
    return paths;
}

}  // namespace treepack
