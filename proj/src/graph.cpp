#include "treepack/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "treepack/errors.hpp"

namespace treepack {

Edge make_edge(int u, int v) {
    if (u == v) throw ArgumentError("self-loop " + std::to_string(u));
    if (u > v) std::swap(u, v);
    return {u, v};
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw ArgumentError("negative vertex count");
    for (auto& e : edges) e = make_edge(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& [u, v] = edges[i];
        if (u < 0 || v >= n)
            throw ArgumentError("edge endpoint out of range: " + std::to_string(u) + "-" +
                                std::to_string(v));
        if (i > 0 && edges[i] == edges[i - 1])
            throw ArgumentError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    edges_ = std::move(edges);
    adj_.assign(static_cast<std::size_t>(n), {});
    inc_.assign(static_cast<std::size_t>(n), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& [u, v] = edges_[i];
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        inc_[static_cast<std::size_t>(u)].push_back(static_cast<int>(i));
        inc_[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw ArgumentError("vertex out of range: " + std::to_string(v));
    return adj_[static_cast<std::size_t>(v)];
}

const std::vector<int>& Graph::incident_edges(int v) const {
    if (v < 0 || v >= n_) throw ArgumentError("vertex out of range: " + std::to_string(v));
    return inc_[static_cast<std::size_t>(v)];
}

int Graph::edge_index(int u, int v) const {
    if (u == v) return -1;
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return static_cast<int>(it - edges_.begin());
    return -1;
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

std::vector<int> Graph::component_ids() const {
    std::vector<int> comp(static_cast<std::size_t>(n_), -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        comp[static_cast<std::size_t>(s)] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[static_cast<std::size_t>(v)]) {
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

int Graph::component_count() const {
    auto comp = component_ids();
    return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

bool Graph::connected() const { return n_ <= 1 || component_count() == 1; }

bool Graph::is_complete() const {
    return edge_count() == n_ * (n_ - 1) / 2;
}

// ---------------------------------------------------------------------------
// graph6 (short form, header-less)

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

std::size_t trimmed_length(const std::string& text) {
    std::size_t len = text.size();
    while (len > 0 && (text[len - 1] == '\n' || text[len - 1] == '\r' || text[len - 1] == ' '))
        --len;
    return len;
}

Graph parse_graph6(const std::string& text) {
    std::size_t len = trimmed_length(text);
    if (len == 0) throw FormatError("empty graph6 input", 0);
    unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 == kG6Hi)
        throw ResourceError("graph6 long form (n > 62) is not supported");
    if (c0 < kG6Lo || c0 > kG6Hi)
        throw FormatError("invalid graph6 byte", 0);
    int n = static_cast<int>(c0) - kG6Lo;
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nchars = (nbits + 5) / 6;
    if (len != 1 + nchars)
        throw FormatError("graph6 body has wrong length for n=" + std::to_string(n),
                          std::min(len, 1 + nchars));
    std::vector<Edge> edges;
    std::size_t bit = 0;
    int cur = 0, mask = 0;
    std::size_t pos = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (mask == 0) {
                pos = 1 + bit / 6;
                unsigned char c = static_cast<unsigned char>(text[pos]);
                if (c < kG6Lo || c > kG6Hi) throw FormatError("invalid graph6 byte", pos);
                cur = static_cast<int>(c) - kG6Lo;
                mask = 0x20;
            }
            if (cur & mask) edges.push_back({i, j});
            mask >>= 1;
            bit++;
        }
    }
    if (mask != 0 && (cur & (mask | (mask - 1))) != 0)
        throw FormatError("nonzero padding bits", pos);
    return Graph(n, std::move(edges));
}

std::string serialize_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw ResourceError("graph6 short form requires n <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + kG6Lo));
    int cur = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(cur + kG6Lo));
                cur = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((cur << (6 - filled)) + kG6Lo));
    return out;
}

// ---------------------------------------------------------------------------
// edge-list text: first line "n m", then m lines "u v"

struct Token {
    long value;
    std::size_t offset;
};

std::vector<Token> tokenize_ints(const std::string& text) {
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        bool neg = text[i] == '-';
        if (neg) ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw FormatError("expected integer", start);
        long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000'000) throw FormatError("integer too large", start);
            ++i;
        }
        if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
            throw FormatError("unexpected character in integer", i);
        toks.push_back({neg ? -v : v, start});
    }
    return toks;
}

Graph parse_edge_list(const std::string& text) {
    auto toks = tokenize_ints(text);
    if (toks.size() < 2) throw FormatError("missing 'n m' header", 0);
    long n = toks[0].value, m = toks[1].value;
    if (n < 0) throw FormatError("negative vertex count", toks[0].offset);
    if (m < 0) throw FormatError("negative edge count", toks[1].offset);
    if (toks.size() != 2 + 2 * static_cast<std::size_t>(m))
        throw FormatError("expected " + std::to_string(2 * m) + " endpoint tokens, got " +
                              std::to_string(toks.size() - 2),
                          toks.size() > 2 ? toks.back().offset : toks[1].offset);
    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (long i = 0; i < m; ++i) {
        const Token& tu = toks[2 + 2 * static_cast<std::size_t>(i)];
        const Token& tv = toks[3 + 2 * static_cast<std::size_t>(i)];
        if (tu.value < 0 || tu.value >= n) throw FormatError("vertex out of range", tu.offset);
        if (tv.value < 0 || tv.value >= n) throw FormatError("vertex out of range", tv.offset);
        if (tu.value == tv.value) throw FormatError("self-loop", tu.offset);
        Edge e = make_edge(static_cast<int>(tu.value), static_cast<int>(tv.value));
        if (!seen.insert(e).second) throw FormatError("duplicate edge", tu.offset);
        edges.push_back(e);
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
    std::string out =
        std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::Graph6 ? serialize_graph6(g) : serialize_edge_list(g);
}

// ---------------------------------------------------------------------------
// structural transforms

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

LineGraphResult line_graph(const Graph& g) {
    int m = g.edge_count();
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const auto& a = g.edge(i);
            const auto& b = g.edge(j);
            if (a.first == b.first || a.first == b.second || a.second == b.first ||
                a.second == b.second)
                edges.push_back({i, j});
        }
    return {Graph(m, std::move(edges)), g.edges()};
}

Graph delete_edges(const Graph& g, const EdgeSet& edges) {
    std::set<Edge> drop;
    for (const auto& [u, v] : edges) {
        Edge e = make_edge(u, v);
        if (!g.has_edge(e.first, e.second))
            throw ArgumentError("edge not in graph: " + std::to_string(e.first) + "-" +
                                std::to_string(e.second));
        drop.insert(e);
    }
    std::vector<Edge> kept;
    for (const auto& e : g.edges())
        if (!drop.count(e)) kept.push_back(e);
    return Graph(g.vertex_count(), std::move(kept));
}

VertexEditResult delete_vertices(const Graph& g, const std::vector<int>& vs) {
    std::vector<bool> removed(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : vs) {
        if (v < 0 || v >= g.vertex_count())
            throw ArgumentError("vertex out of range: " + std::to_string(v));
        removed[static_cast<std::size_t>(v)] = true;
    }
    std::vector<int> old_to_new(static_cast<std::size_t>(g.vertex_count()), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!removed[static_cast<std::size_t>(v)]) old_to_new[static_cast<std::size_t>(v)] = next++;
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        int nu = old_to_new[static_cast<std::size_t>(u)];
        int nv = old_to_new[static_cast<std::size_t>(v)];
        if (nu >= 0 && nv >= 0) edges.push_back({nu, nv});
    }
    return {Graph(next, std::move(edges)), std::move(old_to_new)};
}

VertexEditResult induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    std::vector<bool> keep(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : vs) {
        if (v < 0 || v >= g.vertex_count())
            throw ArgumentError("vertex out of range: " + std::to_string(v));
        keep[static_cast<std::size_t>(v)] = true;
    }
    std::vector<int> drop;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!keep[static_cast<std::size_t>(v)]) drop.push_back(v);
    return delete_vertices(g, drop);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<Edge> edges = g.edges();
    int off = g.vertex_count();
    for (const auto& [u, v] : h.edges()) edges.push_back({u + off, v + off});
    return Graph(off + h.vertex_count(), std::move(edges));
}

Graph join(const Graph& g, const Graph& h) {
    std::vector<Edge> edges = g.edges();
    int off = g.vertex_count();
    for (const auto& [u, v] : h.edges()) edges.push_back({u + off, v + off});
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = 0; v < h.vertex_count(); ++v) edges.push_back({u, off + v});
    return Graph(off + h.vertex_count(), std::move(edges));
}

}  // namespace treepack
