#include "treepack/certificates.hpp"

#include <algorithm>

#include <json.hpp>

#include "treepack/errors.hpp"

namespace treepack {

namespace {

using nlohmann::json;

json edges_to_json(const EdgeSet& edges) {
    json arr = json::array();
    for (const auto& [u, v] : edges) arr.push_back(json::array({u, v}));
    return arr;
}

EdgeSet edges_from_json(const json& arr) {
    EdgeSet edges;
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2) throw FormatError("edge must be a pair", 0);
        edges.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
    }
    return edges;
}

json upper_to_json(const UpperCertificate& upper) {
    json j;
    if (const auto* p = std::get_if<PartitionCertificate>(&upper)) {
        j["kind"] = "partition";
        j["blocks"] = p->blocks;
        j["crossing"] = p->crossing;
        j["bound"] = p->bound;
    } else if (const auto* c = std::get_if<CountingBoundRecord>(&upper)) {
        j["kind"] = "counting";
        j["terminals"] = c->terminals;
        j["e_in"] = c->e_in;
        j["e_cut"] = c->e_cut;
        j["x_star"] = c->x_star;
        j["bound"] = c->bound;
    } else if (const auto* cut = std::get_if<LocalCut>(&upper)) {
        j["kind"] = "cut";
        j["bound"] = cut->value;
        if (cut->pair) j["pair"] = json::array({cut->pair->first, cut->pair->second});
        j["edges"] = edges_to_json(cut->cut_edges);
        j["vertices"] = cut->cut_vertices;
        if (cut->bipartition) j["bipartition"] = *cut->bipartition;
    }
    return j;
}

UpperCertificate upper_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "partition") {
        PartitionCertificate p;
        p.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
        p.crossing = j.at("crossing").get<int>();
        p.bound = j.at("bound").get<int>();
        return p;
    }
    if (kind == "counting") {
        CountingBoundRecord c;
        c.terminals = j.at("terminals").get<std::vector<int>>();
        c.e_in = j.at("e_in").get<int>();
        c.e_cut = j.at("e_cut").get<int>();
        c.x_star = j.at("x_star").get<int>();
        c.bound = j.at("bound").get<int>();
        return c;
    }
    if (kind == "cut") {
        LocalCut cut;
        cut.value = j.at("bound").get<int>();
        if (j.contains("pair"))
            cut.pair = {j["pair"][0].get<int>(), j["pair"][1].get<int>()};
        if (j.contains("edges")) cut.cut_edges = edges_from_json(j["edges"]);
        if (j.contains("vertices")) cut.cut_vertices = j["vertices"].get<std::vector<int>>();
        if (j.contains("bipartition"))
            cut.bipartition = j["bipartition"].get<std::vector<int>>();
        return cut;
    }
    throw FormatError("unknown upper certificate kind '" + kind + "'", 0);
}

}  // namespace

std::string certificate_to_json(const ConnectivityResult& result) {
    json j;
    j["value"] = result.value;
    j["status"] = result.status == SolveStatus::Exact ? "exact" : "lower-bound-only";
    j["mode"] = to_string(result.mode);
    j["witness_terminals"] = result.witness_terminals;
    json trees = json::array();
    for (const auto& t : result.certificate.trees) trees.push_back(edges_to_json(t.edges));
    j["trees"] = trees;
    if (result.upper) j["upper_certificate"] = upper_to_json(*result.upper);
    return j.dump(2) + "\n";
}

ConnectivityResult certificate_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid certificate JSON: ") + e.what(),
                          static_cast<std::size_t>(e.byte));
    }
    try {
        ConnectivityResult res;
        res.value = j.at("value").get<int>();
        std::string status = j.at("status").get<std::string>();
        if (status == "exact")
            res.status = SolveStatus::Exact;
        else if (status == "lower-bound-only")
            res.status = SolveStatus::LowerBoundOnly;
        else
            throw FormatError("unknown status '" + status + "'", 0);
        std::string mode = j.at("mode").get<std::string>();
        if (mode == "edge-disjoint")
            res.mode = DisjointMode::EdgeDisjoint;
        else if (mode == "internally-disjoint")
            res.mode = DisjointMode::InternallyDisjoint;
        else
            throw FormatError("unknown mode '" + mode + "'", 0);
        res.witness_terminals = j.at("witness_terminals").get<std::vector<int>>();
        res.certificate.terminals = res.witness_terminals;
        res.certificate.mode = res.mode;
        for (const auto& t : j.at("trees"))
            res.certificate.trees.push_back({res.witness_terminals, edges_from_json(t)});
        if (j.contains("upper_certificate"))
            res.upper = upper_from_json(j["upper_certificate"]);
        return res;
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed certificate: ") + e.what(), 0);
    }
}

namespace {

bool cut_separates(const Graph& g, const LocalCut& cut) {
    if (!cut.pair) return false;
    auto [x, y] = *cut.pair;
    Graph h = delete_edges(g, cut.cut_edges);
    std::vector<bool> removed(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : cut.cut_vertices) removed[static_cast<std::size_t>(v)] = true;
    if (removed[static_cast<std::size_t>(x)] || removed[static_cast<std::size_t>(y)]) return false;
    // reachability avoiding removed vertices
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<int> stack{x};
    seen[static_cast<std::size_t>(x)] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : h.neighbors(v))
            if (!seen[static_cast<std::size_t>(w)] && !removed[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
    }
    return !seen[static_cast<std::size_t>(y)];
}

}  // namespace

CertificateCheck verify_certificate(const Graph& g, const ConnectivityResult& result) {
    if (static_cast<int>(result.certificate.trees.size()) != result.value)
        return {false, "certificate has " + std::to_string(result.certificate.trees.size()) +
                           " trees but claims value " + std::to_string(result.value)};
    if (result.value > 0 || !result.certificate.trees.empty()) {
        PackingCheck pc = verify_packing(g, result.certificate);
        if (!pc.ok) return {false, "packing invalid: " + pc.violation};
    }
    if (result.upper) {
        int bound = 0;
        if (const auto* p = std::get_if<PartitionCertificate>(&*result.upper)) {
            if (!check_partition_certificate(g, result.witness_terminals, *p))
                return {false, "partition certificate invalid"};
            bound = p->bound;
        } else if (const auto* c = std::get_if<CountingBoundRecord>(&*result.upper)) {
            if (c->terminals != result.witness_terminals)
                return {false, "counting certificate terminals differ from witness"};
            CountingBoundRecord fresh = counting_upper_bound(g, c->terminals);
            if (fresh.e_in != c->e_in || fresh.e_cut != c->e_cut || fresh.x_star != c->x_star ||
                fresh.bound != c->bound)
                return {false, "counting certificate does not match the graph"};
            bound = c->bound;
        } else if (const auto* cut = std::get_if<LocalCut>(&*result.upper)) {
            if (cut->value > 0 || cut->pair) {
                if (static_cast<int>(cut->cut_edges.size() + cut->cut_vertices.size()) !=
                    cut->value)
                    return {false, "cut size does not match its claimed value"};
                if (!cut_separates(g, *cut)) return {false, "cut does not separate its pair"};
                // the cut pair must be terminals, otherwise it bounds nothing here
                const auto& w = result.witness_terminals;
                if (!std::binary_search(w.begin(), w.end(), cut->pair->first) ||
                    !std::binary_search(w.begin(), w.end(), cut->pair->second))
                    return {false, "cut pair is not a terminal pair"};
            } else if (cut->bipartition) {
                // disconnection witness: no edge may leave the listed side
                std::vector<bool> side(static_cast<std::size_t>(g.vertex_count()), false);
                for (int v : *cut->bipartition) side[static_cast<std::size_t>(v)] = true;
                if (cut->bipartition->empty() ||
                    cut->bipartition->size() == static_cast<std::size_t>(g.vertex_count()))
                    return {false, "bipartition witness is trivial"};
                for (const auto& [u, v] : g.edges())
                    if (side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)])
                        return {false, "bipartition witness is crossed by an edge"};
            }
            bound = cut->value;
        }
        if (result.status == SolveStatus::Exact && bound != result.value)
            return {false, "upper certificate bound " + std::to_string(bound) +
                               " differs from exact value " + std::to_string(result.value)};
        if (bound < result.value)
            return {false, "upper certificate bound is below the certified packing size"};
    }
    return {true, ""};
}

}  // namespace treepack
