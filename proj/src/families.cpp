#include "treepack/families.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "treepack/errors.hpp"
#include "treepack/spanning.hpp"

namespace treepack {

namespace {

long need(const FamilySpec& spec, const std::string& name) {
    auto it = spec.params.find(name);
    if (it == spec.params.end())
        throw ArgumentError(spec.family + " requires parameter '" + name + "'");
    return it->second;
}

long get_or(const FamilySpec& spec, const std::string& name, long fallback) {
    auto it = spec.params.find(name);
    return it == spec.params.end() ? fallback : it->second;
}

Graph complete(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
    return Graph(a + b, std::move(edges));
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw ArgumentError("cycle requires n >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

Graph grid_graph(int a, int b) {
    if (a < 1 || b < 1) throw ArgumentError("grid requires a,b >= 1");
    auto id = [b](int r, int c) { return r * b + c; };
    std::vector<Edge> edges;
    for (int r = 0; r < a; ++r)
        for (int c = 0; c < b; ++c) {
            if (c + 1 < b) edges.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < a) edges.push_back({id(r, c), id(r + 1, c)});
        }
    return Graph(a * b, std::move(edges));
}

Graph wheel_graph(int n) {
    if (n < 4) throw ArgumentError("wheel requires n >= 4");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({0, v});
    for (int v = 1; v + 1 < n; ++v) edges.push_back({v, v + 1});
    edges.push_back({1, n - 1});
    return Graph(n, std::move(edges));
}

Graph prism_graph(int n) {
    if (n < 3) throw ArgumentError("prism requires n >= 3");
    // ring 0..n-1, ring n..2n-1, plus rungs
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        int w = (v + 1) % n;
        edges.push_back(make_edge(v, w));
        edges.push_back(make_edge(n + v, n + w));
        edges.push_back({v, n + v});
    }
    return Graph(2 * n, std::move(edges));
}

EdgeSet seeded_missing_edges(int n, int count, std::uint32_t seed) {
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    if (count > static_cast<int>(all.size()))
        throw ArgumentError("complete_minus: more missing edges than K_n has");
    std::mt19937 rng(seed);
    // partial Fisher-Yates; avoids distribution objects for portability
    for (int i = 0; i < count; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng() % (all.size() - static_cast<std::size_t>(i)));
        std::swap(all[static_cast<std::size_t>(i)], all[j]);
    }
    EdgeSet m(all.begin(), all.begin() + count);
    std::sort(m.begin(), m.end());
    return m;
}

ConstructedGraph figure2_family(int s, int r) {
    if (s < 1) throw ArgumentError("figure2_family requires s >= 1");
    if (r < 0 || r > 3) throw ArgumentError("figure2_family requires r in {0,1,2,3}");
    int x1, x2;
    switch (r) {
        case 0: x1 = 2 * s; x2 = 2 * s; break;
        case 1: x1 = 2 * s + 1; x2 = 2 * s; break;
        case 2: x1 = 2 * s + 1; x2 = 2 * s + 1; break;
        default: x1 = 2 * s + 2; x2 = 2 * s + 1; break;
    }
    // u=0, v=1, w=2, then X1, X2, Y1, Y2
    int base_x1 = 3;
    int base_x2 = base_x1 + x1;
    int base_y1 = base_x2 + x2;
    int base_y2 = base_y1 + x1;
    int n = base_y2 + x2;
    std::vector<Edge> edges;
    // P = X1 u X2 and Q = Y1 u Y2 are cliques
    for (int i = base_x1; i < base_y1; ++i)
        for (int j = i + 1; j < base_y1; ++j) edges.push_back({i, j});
    for (int i = base_y1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    for (int i = base_x1; i < base_y1; ++i) edges.push_back({0, i});  // u joined to P
    for (int i = base_y1; i < n; ++i) edges.push_back({1, i});        // v joined to Q
    for (int i = 0; i < x1; ++i) {
        edges.push_back({2, base_x1 + i});  // w joined to X1
        edges.push_back({2, base_y1 + i});  // w joined to Y1
    }
    for (int i = 0; i < x2; ++i) edges.push_back(make_edge(base_x2 + i, base_y2 + i));
    ConstructedGraph out{Graph(n, std::move(edges)), {}};
    out.declared["lambda"] = 4 * s + r;
    out.declared["lambda3"] = 3 * s + (r + 1) / 2;
    return out;
}

ConstructedGraph h_graph(int t) {
    if (t < 1) throw ArgumentError("h_graph requires t >= 1");
    std::vector<Edge> edges;
    for (int c = 0; c < t; ++c) {
        int a = 1 + 3 * c, b = 2 + 3 * c, d = 3 + 3 * c;
        for (int x : {a, b, d}) edges.push_back(make_edge(0, x));
        edges.push_back(make_edge(a, b));
        edges.push_back(make_edge(a, d));
        edges.push_back(make_edge(b, d));
    }
    ConstructedGraph out{Graph(3 * t + 1, std::move(edges)), {}};
    out.declared["lambda"] = 3;
    out.declared["lambda3"] = 2;
    return out;
}

}  // namespace

std::string FamilySpec::describe() const {
    std::string s = family + "(";
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) s += ",";
        s += k + "=" + std::to_string(v);
        first = false;
    }
    if (edge_param) {
        if (!first) s += ",";
        s += "m=[" + std::to_string(edge_param->size()) + " edges]";
        first = false;
    }
    if (seed != 0) {
        if (!first) s += ",";
        s += "seed=" + std::to_string(seed);
    }
    return s + ")";
}

ConstructedGraph construct_family(const FamilySpec& spec) {
    const std::string& f = spec.family;
    if (f == "complete") {
        long n = need(spec, "n");
        if (n < 1) throw ArgumentError("complete requires n >= 1");
        return {complete(static_cast<int>(n)), {{"delta", n - 1}}};
    }
    if (f == "complete_bipartite") {
        long a = need(spec, "a"), b = need(spec, "b");
        if (a < 1 || b < 1) throw ArgumentError("complete_bipartite requires a,b >= 1");
        // spanning tree packing number floor(ab/(a+b-1))
        return {complete_bipartite(static_cast<int>(a), static_cast<int>(b)),
                {{"stp", (a * b) / (a + b - 1)}}};
    }
    if (f == "path") {
        long n = need(spec, "n");
        if (n < 1) throw ArgumentError("path requires n >= 1");
        return {path_graph(static_cast<int>(n)), {{"lambda", n > 1 ? 1 : 0}}};
    }
    if (f == "cycle") {
        long n = need(spec, "n");
        return {cycle_graph(static_cast<int>(n)), {{"lambda", 2}, {"lambda3", 1}}};
    }
    if (f == "star") {
        long n = need(spec, "n");
        if (n < 2) throw ArgumentError("star requires n >= 2");
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v) edges.push_back({0, v});
        return {Graph(static_cast<int>(n), std::move(edges)), {{"lambda", 1}}};
    }
    if (f == "complete_minus") {
        long n = need(spec, "n");
        if (n < 1) throw ArgumentError("complete_minus requires n >= 1");
        EdgeSet m;
        if (spec.edge_param)
            m = *spec.edge_param;
        else
            m = seeded_missing_edges(static_cast<int>(n),
                                     static_cast<int>(get_or(spec, "mcount", 0)), spec.seed);
        Graph g = delete_edges(complete(static_cast<int>(n)), m);
        return {std::move(g), {{"missing", static_cast<long>(m.size())}}};
    }
    if (f == "join_family") {
        long k = need(spec, "k"), n = need(spec, "n");
        if (k < 1) throw ArgumentError("join_family requires k >= 1");
        if (n < 3 * k) throw ArgumentError("join_family requires n >= 3k");
        Graph g = join(complete(static_cast<int>(k)),
                       Graph(static_cast<int>(n - k), {}));
        return {std::move(g),
                {{"kappa_k", k}, {"lambda_k", k}, {"kappa", k}, {"lambda", k}, {"delta", k}}};
    }
    if (f == "figure2_family")
        return figure2_family(static_cast<int>(need(spec, "s")), static_cast<int>(need(spec, "r")));
    if (f == "h_graph") return h_graph(static_cast<int>(need(spec, "t")));
    if (f == "example3_g" || f == "example3_gbar") {
        auto pair = example3_pair(static_cast<int>(need(spec, "r")));
        return f == "example3_g" ? std::move(pair.first) : std::move(pair.second);
    }
    if (f == "pendant_complete") {
        long n = need(spec, "n");
        if (n < 3) throw ArgumentError("pendant_complete requires n >= 3");
        Graph g = complete(static_cast<int>(n - 1));
        std::vector<Edge> edges = g.edges();
        edges.push_back({0, static_cast<int>(n - 1)});
        return {Graph(static_cast<int>(n), std::move(edges)),
                {{"kappa_k", 1}, {"lambda_k", 1}}};
    }
    if (f == "grid")
        return {grid_graph(static_cast<int>(need(spec, "a")), static_cast<int>(need(spec, "b"))),
                {}};
    if (f == "wheel") return {wheel_graph(static_cast<int>(need(spec, "n"))), {{"lambda", 3}}};
    if (f == "prism") return {prism_graph(static_cast<int>(need(spec, "n"))), {{"lambda", 3}}};
    throw ArgumentError("unknown family '" + f + "'");
}

std::pair<ConstructedGraph, ConstructedGraph> example3_pair(int r, const PartitionLimits& limits) {
    if (r < 1) throw ArgumentError("example3 requires r >= 1");
    int n = 4 * r + 1;
    Graph base = complete_bipartite(2 * r, 2 * r + 1);
    ConnectivityResult stp = stp_number(base, limits);
    if (stp.value != r)
        throw InternalError("K_{2r,2r+1} spanning tree packing expected " + std::to_string(r) +
                            ", got " + std::to_string(stp.value));
    std::set<Edge> used;
    for (const auto& t : stp.certificate.trees) used.insert(t.edges.begin(), t.edges.end());
    EdgeSet leftover;
    for (const auto& e : base.edges())
        if (!used.count(e)) leftover.push_back(e);
    Graph g = delete_edges(base, leftover);
    ConstructedGraph first{g, {{"kappa_n", r}, {"n", n}}};
    ConstructedGraph second{complement(g),
                            {{"kappa_n", r}, {"n", n}, {"edges", 4L * r * r + 2 * r}}};
    return {std::move(first), std::move(second)};
}

Graph random_graph(int n, double p, std::uint32_t seed) {
    if (n < 0) throw ArgumentError("random_graph requires n >= 0");
    if (p < 0.0 || p > 1.0) throw ArgumentError("probability must be in [0,1]");
    std::mt19937 rng(seed);
    // fixed-point threshold instead of uniform_real_distribution: identical
    // sequences on every platform
    auto threshold = static_cast<std::uint64_t>(std::llround(p * 4294967296.0));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<std::uint64_t>(rng()) < threshold) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Theorem-4 constructive packing

namespace {

// (k-1)/2 edge-disjoint spanning trees of the induced terminal subgraph,
// mapped back to original vertex ids.
std::vector<EdgeSet> terminal_spanning_trees(const Graph& g, const std::vector<int>& s,
                                             const std::set<Edge>& consumed, int count) {
    auto induced = induced_subgraph(g, s);
    EdgeSet drop;
    for (const auto& [u, v] : consumed) {
        int nu = induced.old_to_new[static_cast<std::size_t>(u)];
        int nv = induced.old_to_new[static_cast<std::size_t>(v)];
        if (nu >= 0 && nv >= 0) drop.push_back(make_edge(nu, nv));
    }
    Graph gs = delete_edges(induced.graph, drop);
    auto packed = pack_spanning_trees(gs, count);
    if (!packed)
        throw InternalError("terminal subgraph failed to pack " + std::to_string(count) +
                            " spanning trees");
    std::vector<int> new_to_old(s.size());
    for (int v : s)
        new_to_old[static_cast<std::size_t>(induced.old_to_new[static_cast<std::size_t>(v)])] = v;
    std::vector<EdgeSet> out;
    for (auto& tree : *packed) {
        EdgeSet mapped;
        for (const auto& [u, v] : tree)
            mapped.push_back(make_edge(new_to_old[static_cast<std::size_t>(u)],
                                       new_to_old[static_cast<std::size_t>(v)]));
        std::sort(mapped.begin(), mapped.end());
        out.push_back(std::move(mapped));
    }
    return out;
}

}  // namespace

Packing theorem4_packing(int n, int k, const EdgeSet& m_in, const std::vector<int>& s_in) {
    if (k % 2 == 0) throw ArgumentError("theorem4_packing requires odd k");
    if (k < 3 || k > n) throw ArgumentError("theorem4_packing requires 3 <= k <= n");
    std::vector<int> s = s_in;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (static_cast<int>(s.size()) != k)
        throw ArgumentError("terminal set must have exactly k distinct vertices");
    for (int v : s)
        if (v < 0 || v >= n) throw ArgumentError("terminal out of range");
    EdgeSet m;
    std::set<Edge> mset;
    for (const auto& [u, v] : m_in) {
        Edge e = make_edge(u, v);
        if (e.first < 0 || e.second >= n) throw ArgumentError("missing edge out of range");
        if (!mset.insert(e).second) throw ArgumentError("duplicate missing edge");
        m.push_back(e);
    }
    if (static_cast<int>(m.size()) > (k - 1) / 2)
        throw ArgumentError("theorem4_packing requires |m| <= (k-1)/2");

    std::vector<bool> in_s(static_cast<std::size_t>(n), false);
    for (int v : s) in_s[static_cast<std::size_t>(v)] = true;
    Graph g = delete_edges(complete(n), m);
    if (!g.connected()) throw InternalError("K_n minus (k-1)/2 edges cannot be disconnected");

    std::vector<int> outside;
    for (int v = 0; v < n; ++v)
        if (!in_s[static_cast<std::size_t>(v)]) outside.push_back(v);

    // missing-edge count from each outside vertex into S
    std::vector<std::pair<int, int>> order;  // (x_i, w_i), processed by nonincreasing x_i
    for (int w : outside) {
        int x = 0;
        for (const auto& [a, b] : m)
            if ((a == w && in_s[static_cast<std::size_t>(b)]) ||
                (b == w && in_s[static_cast<std::size_t>(a)]))
                ++x;
        order.push_back({x, w});
    }
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });

    Packing packing;
    packing.terminals = s;
    packing.mode = DisjointMode::InternallyDisjoint;

    std::set<Edge> consumed;  // repair edges claimed inside G[S]
    for (const auto& [x, w] : order) {
        std::vector<int> reachable;  // S2 = N_G(w) cap S
        std::vector<int> missing;    // S1
        for (int u : s)
            (g.has_edge(w, u) ? reachable : missing).push_back(u);
        EdgeSet tree_edges;
        for (int u : reachable) tree_edges.push_back(make_edge(w, u));
        for (int uj : missing) {
            // smallest repair partner in S2 whose edge survives in the residual G[S]
            int pick = -1;
            for (int ur : reachable) {
                Edge e = make_edge(uj, ur);
                if (g.has_edge(e.first, e.second) && !consumed.count(e)) {
                    pick = ur;
                    break;
                }
            }
            if (pick < 0)
                throw InternalError("no repair edge for terminal " + std::to_string(uj) +
                                    " at outside vertex " + std::to_string(w));
            Edge e = make_edge(uj, pick);
            consumed.insert(e);
            tree_edges.push_back(e);
        }
        std::sort(tree_edges.begin(), tree_edges.end());
        packing.trees.push_back({s, std::move(tree_edges)});
    }

    for (auto& tree : terminal_spanning_trees(g, s, consumed, (k - 1) / 2))
        packing.trees.push_back({s, std::move(tree)});

    PackingCheck check = verify_packing(g, packing);
    if (!check.ok) throw InternalError("theorem4 packing failed verification: " + check.violation);
    if (static_cast<int>(packing.trees.size()) != n - (k + 1) / 2)
        throw InternalError("theorem4 packing has wrong size");
    return packing;
}

}  // namespace treepack
