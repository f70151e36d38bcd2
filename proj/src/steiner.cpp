#include "treepack/steiner.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "treepack/errors.hpp"
#include "treepack/spanning.hpp"

namespace treepack {

std::string to_string(DisjointMode mode) {
    return mode == DisjointMode::EdgeDisjoint ? "edge-disjoint" : "internally-disjoint";
}

std::vector<int> SteinerTree::vertices() const {
    std::vector<int> vs;
    for (const auto& [u, v] : edges) {
        vs.push_back(u);
        vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

bool SteinerTree::is_minimal() const {
    std::vector<int> vs = vertices();
    for (int v : vs) {
        int deg = 0;
        for (const auto& [a, b] : edges)
            if (a == v || b == v) ++deg;
        if (deg == 1 && !std::binary_search(terminals.begin(), terminals.end(), v)) return false;
    }
    return true;
}

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void check_terminals(const Graph& g, const std::vector<int>& s, std::size_t minimum) {
    if (s.size() < minimum)
        throw ArgumentError("terminal set needs at least " + std::to_string(minimum) +
                            " vertices");
    for (int v : s)
        if (v < 0 || v >= g.vertex_count())
            throw ArgumentError("terminal out of range: " + std::to_string(v));
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == s[i + 1]) throw ArgumentError("duplicate terminal " + std::to_string(s[i]));
}

bool terminals_connected(const Graph& g, const std::vector<int>& s) {
    auto comp = g.component_ids();
    for (std::size_t i = 1; i < s.size(); ++i)
        if (comp[static_cast<std::size_t>(s[i])] != comp[static_cast<std::size_t>(s[0])])
            return false;
    return true;
}

}  // namespace

PackingCheck verify_packing(const Graph& g, const Packing& p) {
    PackingCheck check;
    std::vector<int> s = sorted_unique(p.terminals);
    int k = static_cast<int>(s.size());
    std::vector<bool> in_s(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count()) {
            check.violation = "terminal out of range: " + std::to_string(v);
            return check;
        }
        in_s[static_cast<std::size_t>(v)] = true;
    }

    std::vector<std::vector<int>> tree_vertices;
    std::vector<bool> edge_used(static_cast<std::size_t>(g.edge_count()), false);
    for (std::size_t ti = 0; ti < p.trees.size(); ++ti) {
        const SteinerTree& t = p.trees[ti];
        std::string tag = "tree " + std::to_string(ti);
        if (sorted_unique(t.terminals) != s) {
            check.violation = tag + " has a different terminal set";
            return check;
        }
        // edges exist, are unique, and are unused by earlier trees
        std::vector<int> idxs;
        for (const auto& [u, v] : t.edges) {
            int ei = g.edge_index(u, v);
            if (ei < 0) {
                check.violation = tag + " uses non-edge " + std::to_string(u) + "-" +
                                  std::to_string(v);
                return check;
            }
            idxs.push_back(ei);
        }
        std::sort(idxs.begin(), idxs.end());
        for (std::size_t i = 0; i + 1 < idxs.size(); ++i)
            if (idxs[i] == idxs[i + 1]) {
                check.violation = tag + " repeats an edge";
                return check;
            }
        for (int ei : idxs) {
            if (edge_used[static_cast<std::size_t>(ei)]) {
                const auto& [u, v] = g.edge(ei);
                check.violation = "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                  " shared between trees";
                return check;
            }
            edge_used[static_cast<std::size_t>(ei)] = true;
        }
        // acyclic and connected: a tree has |V|-1 edges and one component
        std::vector<int> vs = t.vertices();
        if (t.edges.empty() || vs.size() != t.edges.size() + 1) {
            check.violation = tag + " is not a tree";
            return check;
        }
        {
            std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
            for (int v = 0; v < g.vertex_count(); ++v) parent[static_cast<std::size_t>(v)] = v;
            auto find = [&](int v) {
                while (parent[static_cast<std::size_t>(v)] != v)
                    v = parent[static_cast<std::size_t>(v)];
                return v;
            };
            for (const auto& [u, v] : t.edges) {
                int ru = find(u), rv = find(v);
                if (ru == rv) {
                    check.violation = tag + " contains a cycle";
                    return check;
                }
                parent[static_cast<std::size_t>(ru)] = rv;
            }
        }
        for (int v : s)
            if (!std::binary_search(vs.begin(), vs.end(), v)) {
                check.violation = tag + " misses terminal " + std::to_string(v);
                return check;
            }
        tree_vertices.push_back(vs);

        TreeAccounting acc;
        acc.inside_terminal_subgraph = true;
        for (const auto& [u, v] : t.edges) {
            bool us = in_s[static_cast<std::size_t>(u)], vs2 = in_s[static_cast<std::size_t>(v)];
            if (us && vs2)
                ++acc.boundary_edges;
            else if (us || vs2) {
                ++acc.boundary_edges;
                acc.inside_terminal_subgraph = false;
            } else
                acc.inside_terminal_subgraph = false;
        }
        SteinerTree canonical{s, t.edges};
        acc.minimal = canonical.is_minimal();
        acc.lemma_ok = acc.inside_terminal_subgraph ? acc.boundary_edges == k - 1
                                                    : acc.boundary_edges >= k;
        check.accounting.push_back(acc);
        if (!acc.lemma_ok) {
            check.violation = tag + " violates the boundary edge accounting";
            return check;
        }
    }

    if (p.mode == DisjointMode::InternallyDisjoint) {
        for (std::size_t i = 0; i < tree_vertices.size(); ++i)
            for (std::size_t j = i + 1; j < tree_vertices.size(); ++j) {
                std::vector<int> common;
                std::set_intersection(tree_vertices[i].begin(), tree_vertices[i].end(),
                                      tree_vertices[j].begin(), tree_vertices[j].end(),
                                      std::back_inserter(common));
                if (common != s) {
                    check.violation = "trees " + std::to_string(i) + " and " + std::to_string(j) +
                                      " share a non-terminal vertex";
                    return check;
                }
            }
    }
    check.ok = true;
    return check;
}

CountingBoundRecord counting_upper_bound(const Graph& g, const std::vector<int>& s_in) {
    std::vector<int> s = sorted_unique(s_in);
    check_terminals(g, s, 3);
    int k = static_cast<int>(s.size());
    std::vector<bool> in_s(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : s) in_s[static_cast<std::size_t>(v)] = true;
    CountingBoundRecord rec;
    rec.terminals = s;
    for (const auto& [u, v] : g.edges()) {
        bool us = in_s[static_cast<std::size_t>(u)], vs = in_s[static_cast<std::size_t>(v)];
        if (us && vs)
            ++rec.e_in;
        else if (us || vs)
            ++rec.e_cut;
    }
    rec.x_star = rec.e_in / (k - 1);
    rec.bound = rec.x_star + (rec.e_in + rec.e_cut - rec.x_star * (k - 1)) / k;
    return rec;
}

// ---------------------------------------------------------------------------
// Lazy enumeration of minimal Steiner trees in lexicographic order.

namespace detail {

struct TreeStream::Enumerator {
    const Graph& g;
    const std::vector<int>& s;
    std::vector<bool> in_s;
    int m;

    std::vector<int> chosen;                        // ascending edge indices
    int cursor = 0;                                 // next edge index to try
    std::vector<int> deg;                           // degree within the partial forest
    std::vector<std::vector<std::pair<int, int>>> fadj;  // forest adjacency (neighbor, edge)
    int nv = 0;                                     // vertices with deg > 0
    int covered = 0;                                // terminals with deg > 0
    bool exhausted = false;

    // scratch for prune checks
    std::vector<int> dsu;

    Enumerator(const Graph& graph, const std::vector<int>& terminals)
        : g(graph),
          s(terminals),
          in_s(static_cast<std::size_t>(graph.vertex_count()), false),
          m(graph.edge_count()),
          deg(static_cast<std::size_t>(graph.vertex_count()), 0),
          fadj(static_cast<std::size_t>(graph.vertex_count())),
          dsu(static_cast<std::size_t>(graph.vertex_count())) {
        for (int v : s) in_s[static_cast<std::size_t>(v)] = true;
        if (!terminals_connected(g, s)) exhausted = true;
    }

    bool same_forest_component(int u, int v) const {
        if (deg[static_cast<std::size_t>(u)] == 0 || deg[static_cast<std::size_t>(v)] == 0)
            return false;
        std::vector<int> stack{u};
        std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
        seen[static_cast<std::size_t>(u)] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (x == v) return true;
            for (const auto& [y, ei] : fadj[static_cast<std::size_t>(x)])
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = true;
                    stack.push_back(y);
                }
        }
        return false;
    }

    void add_edge(int ei) {
        const auto& [u, v] = g.edge(ei);
        for (int x : {u, v}) {
            if (deg[static_cast<std::size_t>(x)] == 0) {
                ++nv;
                if (in_s[static_cast<std::size_t>(x)]) ++covered;
            }
            ++deg[static_cast<std::size_t>(x)];
        }
        fadj[static_cast<std::size_t>(u)].push_back({v, ei});
        fadj[static_cast<std::size_t>(v)].push_back({u, ei});
        chosen.push_back(ei);
    }

    void remove_last() {
        int ei = chosen.back();
        chosen.pop_back();
        const auto& [u, v] = g.edge(ei);
        fadj[static_cast<std::size_t>(u)].pop_back();
        fadj[static_cast<std::size_t>(v)].pop_back();
        for (int x : {u, v}) {
            --deg[static_cast<std::size_t>(x)];
            if (deg[static_cast<std::size_t>(x)] == 0) {
                --nv;
                if (in_s[static_cast<std::size_t>(x)]) --covered;
            }
        }
    }

    int find(int v) {
        while (dsu[static_cast<std::size_t>(v)] != v) {
            dsu[static_cast<std::size_t>(v)] = dsu[static_cast<std::size_t>(dsu[static_cast<std::size_t>(v)])];
            v = dsu[static_cast<std::size_t>(v)];
        }
        return v;
    }

    // Dangling non-terminals must be able to grow, and everything touched so
    // far plus the terminals must still be connectable with later edges.
    bool viable(int last) {
        for (int ei : chosen) {
            const auto& [u, v] = g.edge(ei);
            for (int x : {u, v}) {
                if (deg[static_cast<std::size_t>(x)] != 1 || in_s[static_cast<std::size_t>(x)])
                    continue;
                const auto& inc = g.incident_edges(x);
                if (inc.empty() || inc.back() <= last) return false;
            }
        }
        int n = g.vertex_count();
        for (int v = 0; v < n; ++v) dsu[static_cast<std::size_t>(v)] = v;
        for (int ei : chosen) {
            const auto& [u, v] = g.edge(ei);
            dsu[static_cast<std::size_t>(find(u))] = find(v);
        }
        for (int ei = last + 1; ei < m; ++ei) {
            const auto& [u, v] = g.edge(ei);
            dsu[static_cast<std::size_t>(find(u))] = find(v);
        }
        int root = find(s[0]);
        for (int v : s)
            if (find(v) != root) return false;
        for (int ei : chosen) {
            const auto& [u, v] = g.edge(ei);
            if (find(u) != root || find(v) != root) return false;
        }
        return true;
    }

    bool complete_minimal() const {
        if (covered != static_cast<int>(s.size())) return false;
        if (nv != static_cast<int>(chosen.size()) + 1) return false;
        for (int ei : chosen) {
            const auto& [u, v] = g.edge(ei);
            for (int x : {u, v})
                if (deg[static_cast<std::size_t>(x)] == 1 && !in_s[static_cast<std::size_t>(x)])
                    return false;
        }
        return true;
    }

    // Resume the backtracking walk until the next emission.
    std::optional<std::vector<int>> next() {
        if (exhausted) return std::nullopt;
        while (true) {
            if (cursor >= m) {
                if (chosen.empty()) {
                    exhausted = true;
                    return std::nullopt;
                }
                cursor = chosen.back() + 1;
                remove_last();
                continue;
            }
            int ei = cursor;
            const auto& [u, v] = g.edge(ei);
            if (same_forest_component(u, v)) {
                ++cursor;
                continue;
            }
            add_edge(ei);
            if (!viable(ei)) {
                remove_last();
                ++cursor;
                continue;
            }
            if (complete_minimal()) {
                std::vector<int> tree = chosen;
                remove_last();
                ++cursor;
                return tree;
            }
            ++cursor;
        }
    }
};

TreeStream::TreeStream(const Graph& g, std::vector<int> terminals, std::size_t cap)
    : g_(g), terminals_(std::move(terminals)), cap_(cap) {
    if (g.vertex_count() > 64)
        throw ResourceError("packing engine supports at most 64 vertices");
    if (g.edge_count() > 128)
        throw ResourceError("packing engine supports at most 128 edges");
    enumerator_ = new Enumerator(g_, terminals_);
}

TreeStream::~TreeStream() { delete enumerator_; }

const TreeData* TreeStream::get(std::size_t idx) {
    while (idx >= trees_.size() && !exhausted_ && !truncated_) {
        if (trees_.size() >= cap_) {
            // peek whether anything else exists before declaring truncation
            auto more = enumerator_->next();
            if (more)
                truncated_ = true;
            else
                exhausted_ = true;
            break;
        }
        auto edge_idxs = enumerator_->next();
        if (!edge_idxs) {
            exhausted_ = true;
            break;
        }
        TreeData data;
        for (int ei : *edge_idxs) {
            data.edges.push_back(g_.edge(ei));
            data.edge_mask.set(static_cast<std::size_t>(ei));
        }
        std::vector<bool> in_s(static_cast<std::size_t>(g_.vertex_count()), false);
        for (int t : terminals_) in_s[static_cast<std::size_t>(t)] = true;
        data.terminal_degree.assign(terminals_.size(), 0);
        for (const auto& [u, v] : data.edges) {
            data.vertex_mask |= (1ULL << u) | (1ULL << v);
            bool us = in_s[static_cast<std::size_t>(u)], vs = in_s[static_cast<std::size_t>(v)];
            if (us && vs)
                ++data.in_s;
            else if (us || vs)
                ++data.cut;
            for (std::size_t i = 0; i < terminals_.size(); ++i)
                if (terminals_[i] == u || terminals_[i] == v) ++data.terminal_degree[i];
        }
        for (int t : terminals_) data.steiner_mask |= (1ULL << t);
        data.steiner_mask = data.vertex_mask & ~data.steiner_mask;
        trees_.push_back(std::move(data));
    }
    if (idx < trees_.size()) return &trees_[idx];
    return nullptr;
}

// ---------------------------------------------------------------------------
// Depth-first packing search.

namespace {

// Unit-capacity augmenting-path flow on the residual graph (edges outside
// `used`), stopping as soon as `needed` paths are found.
bool residual_flow_at_least(const Graph& g, const std::bitset<128>& used, int x, int y,
                            int needed) {
    if (needed <= 0) return true;
    int n = g.vertex_count();
    std::vector<signed char> flow(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<int> pred_edge(static_cast<std::size_t>(n));
    std::vector<int> pred_vertex(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n));
    int found = 0;
    while (found < needed) {
        std::fill(seen.begin(), seen.end(), false);
        std::vector<int> queue{x};
        seen[static_cast<std::size_t>(x)] = true;
        bool reached = false;
        for (std::size_t qi = 0; qi < queue.size() && !reached; ++qi) {
            int v = queue[qi];
            for (int ei : g.incident_edges(v)) {
                if (used.test(static_cast<std::size_t>(ei))) continue;
                const auto& [a, b] = g.edge(ei);
                int w = a == v ? b : a;
                if (seen[static_cast<std::size_t>(w)]) continue;
                int f = v == a ? flow[static_cast<std::size_t>(ei)]
                               : -flow[static_cast<std::size_t>(ei)];
                if (f >= 1) continue;  // saturated in this direction
                seen[static_cast<std::size_t>(w)] = true;
                pred_edge[static_cast<std::size_t>(w)] = ei;
                pred_vertex[static_cast<std::size_t>(w)] = v;
                if (w == y) {
                    reached = true;
                    break;
                }
                queue.push_back(w);
            }
        }
        if (!reached) return false;
        for (int v = y; v != x; v = pred_vertex[static_cast<std::size_t>(v)]) {
            int ei = pred_edge[static_cast<std::size_t>(v)];
            flow[static_cast<std::size_t>(ei)] += g.edge(ei).second == v ? 1 : -1;
        }
        ++found;
    }
    return true;
}

struct SearchState {
    const Graph& g;
    const std::vector<int>& s;
    DisjointMode mode;
    TreeStream& stream;
    int k;
    std::size_t nodes_left;
    int stop_threshold;
    int root_ub;
    bool flow_prune;

    std::bitset<128> used_edges;
    std::uint64_t used_steiner = 0;
    int e_in_res = 0;
    int e_cut_res = 0;
    int nonterm_total = 0;
    std::vector<int> term_deg_res;

    std::vector<std::size_t> current;
    std::vector<std::size_t> best;
    int best_count = 0;  // includes any externally supplied incumbent
    bool stream_truncated = false;
    bool budget_exhausted = false;
    bool abort = false;  // threshold or exact upper bound reached

    int residual_bound() const {
        int x_star = e_in_res / (k - 1);
        int counting = x_star + (e_in_res + e_cut_res - x_star * (k - 1)) / k;
        int bound = counting;
        for (int d : term_deg_res) bound = std::min(bound, d);
        if (mode == DisjointMode::InternallyDisjoint) {
            int free_steiner = nonterm_total - std::popcount(used_steiner);
            bound = std::min(bound, e_in_res / (k - 1) + free_steiner);
        }
        return bound;
    }

    void push(const TreeData& t) {
        used_edges |= t.edge_mask;
        if (mode == DisjointMode::InternallyDisjoint) used_steiner |= t.steiner_mask;
        e_in_res -= t.in_s;
        e_cut_res -= t.cut;
        for (std::size_t i = 0; i < term_deg_res.size(); ++i)
            term_deg_res[i] -= t.terminal_degree[i];
    }

    void pop(const TreeData& t) {
        used_edges ^= t.edge_mask;
        if (mode == DisjointMode::InternallyDisjoint) used_steiner ^= t.steiner_mask;
        e_in_res += t.in_s;
        e_cut_res += t.cut;
        for (std::size_t i = 0; i < term_deg_res.size(); ++i)
            term_deg_res[i] += t.terminal_degree[i];
    }

    void record_improvement() {
        best = current;
        best_count = static_cast<int>(current.size());
        if (best_count >= root_ub) abort = true;
        if (stop_threshold >= 0 && best_count >= stop_threshold) abort = true;
    }

    void dfs(std::size_t start) {
        if (abort) return;
        if (nodes_left == 0) {
            budget_exhausted = true;
            abort = true;
            return;
        }
        --nodes_left;
        int count = static_cast<int>(current.size());
        int needed = best_count + 1 - count;
        if (count + residual_bound() <= best_count) return;
        if (flow_prune && needed > 0) {
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j)
                    if (!residual_flow_at_least(g, used_edges, s[i], s[j], needed)) return;
        }
        for (std::size_t idx = start;; ++idx) {
            const TreeData* t = stream.get(idx);
            if (!t) {
                if (stream.truncated()) stream_truncated = true;
                return;
            }
            if ((used_edges & t->edge_mask).any()) continue;
            if (mode == DisjointMode::InternallyDisjoint && (used_steiner & t->steiner_mask) != 0)
                continue;
            current.push_back(idx);
            push(*t);
            if (static_cast<int>(current.size()) > best_count) record_improvement();
            if (!abort) dfs(idx + 1);
            pop(*t);
            current.pop_back();
            if (abort) return;
        }
    }
};

}  // namespace

SearchOutcome search_max_packing(const Graph& g, const std::vector<int>& s, DisjointMode mode,
                                 TreeStream& stream, const PackingOptions& options,
                                 int stop_threshold, int root_upper_bound,
                                 int external_incumbent) {
    SearchState state{g,
                      s,
                      mode,
                      stream,
                      static_cast<int>(s.size()),
                      options.budget.max_nodes,
                      stop_threshold,
                      root_upper_bound,
                      options.use_flow_prune,
                      {},
                      0,
                      0,
                      0,
                      0,
                      {},
                      {},
                      {},
                      external_incumbent,
                      false,
                      false,
                      false};
    std::vector<bool> in_s(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : s) in_s[static_cast<std::size_t>(v)] = true;
    for (const auto& [u, v] : g.edges()) {
        bool us = in_s[static_cast<std::size_t>(u)], vs = in_s[static_cast<std::size_t>(v)];
        if (us && vs)
            ++state.e_in_res;
        else if (us || vs)
            ++state.e_cut_res;
    }
    state.nonterm_total = g.vertex_count() - state.k;
    state.term_deg_res.reserve(s.size());
    for (int v : s) state.term_deg_res.push_back(g.degree(v));

    SearchOutcome out;
    out.root_upper_bound = root_upper_bound;
    if (stop_threshold >= 0 && external_incumbent >= stop_threshold) {
        out.kind = SearchOutcome::Kind::ThresholdReached;
        out.value = external_incumbent;
        return out;
    }
    if (stop_threshold == 0) {
        out.kind = SearchOutcome::Kind::ThresholdReached;
        out.value = 0;
        return out;
    }
    if (external_incumbent < root_upper_bound) state.dfs(0);

    out.value = state.best_count;
    out.packing = state.best;  // empty when the external incumbent was never beaten
    if (stop_threshold >= 0 && out.value >= stop_threshold)
        out.kind = SearchOutcome::Kind::ThresholdReached;
    else if (out.value >= root_upper_bound)
        out.kind = SearchOutcome::Kind::Exact;
    else if (state.budget_exhausted || state.stream_truncated)
        out.kind = SearchOutcome::Kind::Truncated;
    else
        out.kind = SearchOutcome::Kind::Exact;
    return out;
}

namespace {

// One tree for the greedy warm start: starting from `root`, repeatedly attach
// the cheapest missing terminal, where a path pays one unit per edge incident
// to a terminal it is not aiming for. That steers trees away from scarce
// terminal-incident edges so later trees still find room. Deterministic 0-1
// BFS; empty result if some terminal is unreachable.
EdgeSet grow_tree(const Graph& g, const std::vector<int>& s, int root, bool penalize,
                  const std::vector<bool>& edge_used, const std::vector<bool>& vertex_blocked) {
    int n = g.vertex_count();
    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<bool> in_tree(static_cast<std::size_t>(n), false);
    std::vector<int> tree_vertices{root};
    in_tree[static_cast<std::size_t>(root)] = true;
    std::vector<int> tree_edges;
    std::vector<bool> have(static_cast<std::size_t>(n), false);
    have[static_cast<std::size_t>(root)] = true;
    int missing = static_cast<int>(s.size()) - 1;

    std::vector<int> pred_edge(static_cast<std::size_t>(n));
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<bool> done(static_cast<std::size_t>(n));
    while (missing > 0) {
        // Dijkstra; the penalty dominates path length so penalized runs
        // minimize terminal-incident usage first, hops second
        std::fill(dist.begin(), dist.end(), kInf);
        std::fill(done.begin(), done.end(), false);
        for (int v : tree_vertices) dist[static_cast<std::size_t>(v)] = 0;
        while (true) {
            int v = -1;
            for (int u = 0; u < n; ++u)
                if (!done[static_cast<std::size_t>(u)] &&
                    dist[static_cast<std::size_t>(u)] < kInf &&
                    (v < 0 || dist[static_cast<std::size_t>(u)] < dist[static_cast<std::size_t>(v)]))
                    v = u;
            if (v < 0) break;
            done[static_cast<std::size_t>(v)] = true;
            for (int ei : g.incident_edges(v)) {
                if (edge_used[static_cast<std::size_t>(ei)]) continue;
                const auto& [a, b] = g.edge(ei);
                int w = a == v ? b : a;
                if (in_tree[static_cast<std::size_t>(w)] ||
                    vertex_blocked[static_cast<std::size_t>(w)])
                    continue;
                int cost = 1;
                if (penalize && std::binary_search(s.begin(), s.end(), v)) cost += 1000;
                int nd = dist[static_cast<std::size_t>(v)] + cost;
                if (nd >= dist[static_cast<std::size_t>(w)]) continue;
                dist[static_cast<std::size_t>(w)] = nd;
                pred_edge[static_cast<std::size_t>(w)] = ei;
            }
        }
        int hit = -1;
        for (int t : s)
            if (!have[static_cast<std::size_t>(t)] && dist[static_cast<std::size_t>(t)] < kInf &&
                (hit < 0 || dist[static_cast<std::size_t>(t)] < dist[static_cast<std::size_t>(hit)]))
                hit = t;
        if (hit < 0) return {};
        for (int v = hit; !in_tree[static_cast<std::size_t>(v)];) {
            int ei = pred_edge[static_cast<std::size_t>(v)];
            tree_edges.push_back(ei);
            in_tree[static_cast<std::size_t>(v)] = true;
            tree_vertices.push_back(v);
            if (std::binary_search(s.begin(), s.end(), v)) have[static_cast<std::size_t>(v)] = true;
            const auto& [a, b] = g.edge(ei);
            v = a == v ? b : a;
        }
        missing = 0;
        for (int t : s)
            if (!have[static_cast<std::size_t>(t)]) ++missing;
    }
    // prune non-terminal leaves
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<bool> kept(tree_edges.size(), true);
    for (int ei : tree_edges) {
        deg[static_cast<std::size_t>(g.edge(ei).first)]++;
        deg[static_cast<std::size_t>(g.edge(ei).second)]++;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < tree_edges.size(); ++i) {
            if (!kept[i]) continue;
            const auto& [a, b] = g.edge(tree_edges[i]);
            for (int leaf : {a, b}) {
                if (deg[static_cast<std::size_t>(leaf)] == 1 &&
                    !std::binary_search(s.begin(), s.end(), leaf)) {
                    kept[i] = false;
                    deg[static_cast<std::size_t>(a)]--;
                    deg[static_cast<std::size_t>(b)]--;
                    changed = true;
                    break;
                }
            }
        }
    }
    EdgeSet out;
    for (std::size_t i = 0; i < tree_edges.size(); ++i)
        if (kept[i]) out.push_back(g.edge(tree_edges[i]));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<EdgeSet> greedy_packing(const Graph& g, const std::vector<int>& s, DisjointMode mode,
                                    int target) {
    if (target <= 0) return {};
    // schedules mix plain shortest attachment with the penalized variant:
    // plain trees route through terminals (cheap but hungry), penalized trees
    // spare terminal-incident edges for later rounds
    std::vector<EdgeSet> best;
    for (int prefix : {target + 1, 0, 1, 2, 3}) {
        for (bool plain_first : {true, false}) {
            std::vector<EdgeSet> packing;
            std::vector<bool> edge_used(static_cast<std::size_t>(g.edge_count()), false);
            std::vector<bool> vertex_blocked(static_cast<std::size_t>(g.vertex_count()), false);
            while (static_cast<int>(packing.size()) < target) {
                bool in_prefix = static_cast<int>(packing.size()) < prefix;
                bool penalize = in_prefix != plain_first;
                EdgeSet tree;
                for (int root : s) {
                    tree = grow_tree(g, s, root, penalize, edge_used, vertex_blocked);
                    if (!tree.empty()) break;
                }
                if (tree.empty()) break;
                for (const auto& [u, v] : tree) {
                    edge_used[static_cast<std::size_t>(g.edge_index(u, v))] = true;
                    if (mode == DisjointMode::InternallyDisjoint) {
                        for (int x : {u, v})
                            if (!std::binary_search(s.begin(), s.end(), x))
                                vertex_blocked[static_cast<std::size_t>(x)] = true;
                    }
                }
                packing.push_back(std::move(tree));
            }
            if (packing.size() > best.size()) best = std::move(packing);
            if (static_cast<int>(best.size()) >= target) return best;
        }
    }
    return best;
}

TerminalSetEval evaluate_terminal_set(const Graph& g, const std::vector<int>& s,
                                      DisjointMode mode, const PackingOptions& options,
                                      int threshold, int pair_min) {
    TerminalSetEval ev;
    if (threshold == 0) {
        ev.kind = TerminalSetEval::Kind::AtLeast;
        return ev;
    }
    int k = static_cast<int>(s.size());
    int ub = pair_min;
    if (k >= 3) {
        CountingBoundRecord rec = counting_upper_bound(g, s);
        ub = std::min(ub, rec.bound);
        if (mode == DisjointMode::InternallyDisjoint)
            ub = std::min(ub, rec.e_in / (k - 1) + (g.vertex_count() - k));
    }
    bool partition_known = false;  // the partition bound, once enumerated, is final
    if (options.use_partition_bound) {
        PartitionLimits eager = options.partition;
        eager.enumeration_cap = std::min(eager.enumeration_cap, options.partition_eager_cap);
        if (auto cert = steiner_partition_bound(g, s, eager)) {
            ub = std::min(ub, cert->bound);
            ev.partition = std::move(cert);
            partition_known = true;
        }
    }

    auto greedy_resolves = [&](std::vector<EdgeSet>& greedy) {
        int count = static_cast<int>(greedy.size());
        if (threshold >= 0 && count >= threshold) {
            ev.kind = TerminalSetEval::Kind::AtLeast;
            ev.value = count;
            ev.trees = std::move(greedy);
            return true;
        }
        if (count >= ub) {
            ev.kind = TerminalSetEval::Kind::Exact;
            ev.value = count;
            ev.trees = std::move(greedy);
            return true;
        }
        return false;
    };

    int goal = threshold >= 0 ? std::min(threshold, ub) : ub;
    std::vector<EdgeSet> greedy = greedy_packing(g, s, mode, goal);
    if (greedy_resolves(greedy)) return ev;

    // the gap is real: pay for the full partition bound before the search,
    // it frequently certifies the greedy packing as maximum
    if (options.use_partition_bound && !partition_known) {
        if (auto cert = steiner_partition_bound(g, s, options.partition)) {
            ub = std::min(ub, cert->bound);
            ev.partition = std::move(cert);
        }
        partition_known = true;
        if (greedy_resolves(greedy)) return ev;
    }

    TreeStream stream(g, s, options.budget.max_trees);
    SearchOutcome out = search_max_packing(g, s, mode, stream, options, threshold, ub,
                                           static_cast<int>(greedy.size()));
    ev.value = out.value;
    if (!out.packing.empty()) {
        for (std::size_t idx : out.packing) ev.trees.push_back(stream.get(idx)->edges);
    } else {
        ev.trees = std::move(greedy);
    }
    switch (out.kind) {
        case SearchOutcome::Kind::Exact:
            ev.kind = TerminalSetEval::Kind::Exact;
            break;
        case SearchOutcome::Kind::ThresholdReached:
            ev.kind = TerminalSetEval::Kind::AtLeast;
            break;
        case SearchOutcome::Kind::Truncated:
            ev.kind = ev.partition && ev.partition->bound == ev.value
                          ? TerminalSetEval::Kind::Exact
                          : TerminalSetEval::Kind::Truncated;
            break;
    }
    return ev;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Public operations.

std::vector<SteinerTree> enumerate_minimal_steiner_trees(const Graph& g,
                                                         const std::vector<int>& s_in,
                                                         std::size_t limit) {
    std::vector<int> s = sorted_unique(s_in);
    check_terminals(g, s, 2);
    if (limit == 0) throw ArgumentError("enumeration limit must be positive");
    detail::TreeStream stream(g, s, limit);
    std::vector<SteinerTree> trees;
    for (std::size_t i = 0;; ++i) {
        const detail::TreeData* t = stream.get(i);
        if (!t) break;
        trees.push_back({s, t->edges});
    }
    if (stream.truncated()) throw EnumerationOverflow(limit);
    return trees;
}

namespace {

ConnectivityResult pair_packing(const Graph& g, const std::vector<int>& s, DisjointMode mode) {
    int x = s[0], y = s[1];
    ConnectivityResult res;
    res.mode = mode;
    res.witness_terminals = s;
    LocalCut cut = mode == DisjointMode::EdgeDisjoint ? local_edge_connectivity(g, x, y)
                                                      : local_vertex_connectivity(g, x, y);
    res.value = cut.value;
    res.status = SolveStatus::Exact;
    res.certificate.terminals = s;
    res.certificate.mode = mode;
    for (auto& path : disjoint_paths(g, x, y, mode == DisjointMode::InternallyDisjoint))
        res.certificate.trees.push_back({s, std::move(path)});
    res.upper = cut;  // max-flow = min-cut, always tight
    return res;
}

ConnectivityResult spanning_packing_result(const Graph& g, DisjointMode mode,
                                           const PartitionLimits& limits) {
    ConnectivityResult res;
    res.mode = mode;
    res.witness_terminals.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        res.witness_terminals[static_cast<std::size_t>(v)] = v;
    res.certificate.terminals = res.witness_terminals;
    res.certificate.mode = mode;
    SpanningPacking sp = max_spanning_tree_packing(g);
    res.value = sp.value;
    res.status = SolveStatus::Exact;
    for (auto& t : sp.trees) res.certificate.trees.push_back({res.witness_terminals, std::move(t)});
    if (g.vertex_count() >= 2 && g.vertex_count() <= limits.tutte_vertex_cap) {
        auto [bound, cert] = tutte_partition_number(g, limits);
        if (bound != sp.value)
            throw InternalError("spanning packing and partition bound disagree: " +
                                std::to_string(sp.value) + " vs " + std::to_string(bound));
        res.upper = cert;
    }
    return res;
}

}  // namespace

ConnectivityResult max_tree_packing(const Graph& g, const std::vector<int>& s_in,
                                    DisjointMode mode, const PackingOptions& options) {
    std::vector<int> s = sorted_unique(s_in);
    check_terminals(g, s, 2);
    if (static_cast<int>(s.size()) > g.vertex_count())
        throw ArgumentError("more terminals than vertices");

    ConnectivityResult res;
    res.mode = mode;
    res.witness_terminals = s;
    res.certificate.terminals = s;
    res.certificate.mode = mode;
    if (!terminals_connected(g, s)) {
        res.value = 0;
        res.status = SolveStatus::Exact;
        return res;
    }
    if (s.size() == 2) return pair_packing(g, s, mode);
    if (static_cast<int>(s.size()) == g.vertex_count())
        return spanning_packing_result(g, mode, options.partition);

    int pair_min = g.vertex_count();
    std::pair<int, int> min_pair{s[0], s[1]};
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            int v = local_edge_connectivity(g, s[i], s[j]).value;
            if (v < pair_min) {
                pair_min = v;
                min_pair = {s[i], s[j]};
            }
        }
    detail::TerminalSetEval ev = detail::evaluate_terminal_set(g, s, mode, options, -1, pair_min);

    res.value = ev.value;
    res.status = ev.kind == detail::TerminalSetEval::Kind::Truncated ? SolveStatus::LowerBoundOnly
                                                                     : SolveStatus::Exact;
    res.certificate.terminals = s;
    res.certificate.mode = mode;
    for (auto& t : ev.trees) res.certificate.trees.push_back({s, std::move(t)});
    if (res.status == SolveStatus::Exact) {
        CountingBoundRecord rec = counting_upper_bound(g, s);
        if (rec.bound == res.value)
            res.upper = rec;
        else if (ev.partition && ev.partition->bound == res.value)
            res.upper = *ev.partition;
        else if (pair_min == res.value)
            res.upper = local_edge_connectivity(g, min_pair.first, min_pair.second);
    }
    return res;
}

ConnectivityResult stp_number(const Graph& g, const PartitionLimits& limits) {
    ConnectivityResult res;
    res.mode = DisjointMode::EdgeDisjoint;
    res.witness_terminals.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        res.witness_terminals[static_cast<std::size_t>(v)] = v;
    res.certificate.terminals = res.witness_terminals;
    if (g.vertex_count() <= 1) {
        res.value = 0;
        return res;
    }
    if (!g.connected()) {
        auto [bound, cert] = tutte_partition_number(g, limits);
        res.value = 0;
        res.upper = cert;
        return res;
    }
    SpanningPacking sp = max_spanning_tree_packing(g);
    auto [bound, cert] = tutte_partition_number(g, limits);  // throws above the vertex cap
    if (bound != sp.value)
        throw InternalError("spanning packing and partition bound disagree: " +
                            std::to_string(sp.value) + " vs " + std::to_string(bound));
    res.value = sp.value;
    for (auto& t : sp.trees) res.certificate.trees.push_back({res.witness_terminals, std::move(t)});
    res.upper = cert;
    return res;
}

}  // namespace treepack
