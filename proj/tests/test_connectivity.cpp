#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "test_util.hpp"
#include "treepack/connectivity.hpp"
#include "treepack/errors.hpp"
#include "treepack/families.hpp"

using namespace treepack;

namespace {

// deleting the witness must disconnect the relevant pair
void check_cut_witness(const Graph& g, const LocalCut& cut) {
    if (!cut.pair) return;
    Graph h = delete_edges(g, cut.cut_edges);
    auto del = delete_vertices(h, cut.cut_vertices);
    int x = del.old_to_new[static_cast<std::size_t>(cut.pair->first)];
    int y = del.old_to_new[static_cast<std::size_t>(cut.pair->second)];
    REQUIRE(x >= 0);
    REQUIRE(y >= 0);
    auto comp = del.graph.component_ids();
    CHECK(comp[static_cast<std::size_t>(x)] != comp[static_cast<std::size_t>(y)]);
}

}  // namespace

TEST_CASE("local edge connectivity examples") {
    Graph k4 = test_util::complete(4);
    for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y) CHECK(local_edge_connectivity(k4, x, y).value == 3);
    CHECK(local_edge_connectivity(test_util::path(4), 0, 3).value == 1);
    // two vertices inside one K_4 block of the Figure-3 graph
    Graph h2 = test_util::family("h_graph", {{"t", 2}});
    CHECK(local_edge_connectivity(h2, 1, 2).value == 3);
    CHECK_THROWS_AS(local_edge_connectivity(k4, 1, 1), ArgumentError);
}

TEST_CASE("edge connectivity examples") {
    CHECK(edge_connectivity(test_util::cycle(6)).value == 2);
    CHECK(edge_connectivity(test_util::family("figure2_family", {{"s", 1}, {"r", 0}})).value == 4);
    CHECK(edge_connectivity(test_util::family("complete_bipartite", {{"a", 3}, {"b", 3}})).value ==
          3);
    Graph disconnected(4, {{0, 1}, {2, 3}});
    LocalCut cut = edge_connectivity(disconnected);
    CHECK(cut.value == 0);
    CHECK(cut.cut_edges.empty());
    REQUIRE(cut.bipartition.has_value());
    CHECK(cut.bipartition->size() == 2);
}

TEST_CASE("vertex connectivity examples") {
    CHECK(vertex_connectivity(test_util::family("join_family", {{"k", 3}, {"n", 9}})).value == 3);
    CHECK(vertex_connectivity(test_util::cycle(5)).value == 2);
    Graph pendant = test_util::family("pendant_complete", {{"n", 6}});  // K_5 plus pendant
    CHECK(vertex_connectivity(pendant).value == 1);
    CHECK(vertex_connectivity(test_util::complete(5)).value == 4);
}

TEST_CASE("figure-2 family attains its declared edge connectivity") {
    for (int s = 1; s <= 2; ++s)
        for (int r = 0; r <= 3; ++r) {
            auto built = construct_family({"figure2_family", {{"s", s}, {"r", r}}, {}, 0});
            CAPTURE(s);
            CAPTURE(r);
            CHECK(edge_connectivity(built.graph).value == built.declared.at("lambda"));
        }
}

TEST_CASE("is_set_edge_connected") {
    Graph k4 = test_util::complete(4);
    CHECK(is_set_edge_connected(k4, {0, 1, 2}, 3));
    CHECK_FALSE(is_set_edge_connected(test_util::path(4), {0, 3}, 2));
    // Lemma-1 guard for t=2: threshold floor(19/6) = 3
    CHECK((8 * 2 + 3) / 6 == 3);
    CHECK_THROWS_AS(is_set_edge_connected(k4, {0}, 1), ArgumentError);
}

TEST_CASE("kappa <= lambda <= delta and witness cuts on the atlas") {
    for (int n = 3; n <= 6; ++n) {
        for (const Graph& g : test_util::atlas(n, true)) {
            LocalCut lam = edge_connectivity(g);
            LocalCut kap = vertex_connectivity(g);
            CHECK(kap.value <= lam.value);
            CHECK(lam.value <= g.min_degree());
            if (lam.pair) {
                CHECK(static_cast<int>(lam.cut_edges.size()) == lam.value);
                check_cut_witness(g, lam);
            }
            if (kap.pair) check_cut_witness(g, kap);
        }
    }
}

TEST_CASE("edge connectivity equals the pairwise minimum") {
    for (int n = 3; n <= 6; ++n) {
        for (const Graph& g : test_util::atlas(n, true)) {
            int global = edge_connectivity(g).value;
            int pair_min = g.vertex_count();
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y)
                    pair_min = std::min(pair_min, local_edge_connectivity(g, x, y).value);
            CHECK(global == pair_min);
        }
    }
}

TEST_CASE("disjoint path decompositions are valid") {
    for (int n = 4; n <= 6; ++n) {
        for (const Graph& g : test_util::atlas(n, true)) {
            for (bool internal : {false, true}) {
                auto paths = disjoint_paths(g, 0, n - 1, internal);
                LocalCut cut = internal ? local_vertex_connectivity(g, 0, n - 1)
                                        : local_edge_connectivity(g, 0, n - 1);
                CHECK(static_cast<int>(paths.size()) == cut.value);
                std::set<Edge> seen_edges;
                std::set<int> seen_inner;
                for (const auto& path : paths) {
                    REQUIRE(!path.empty());
                    // consecutive edges, from 0 to n-1
                    CHECK(path.front().first == 0);
                    int at = 0;
                    for (const auto& [a, b] : path) {
                        int next = a == at ? b : a;
                        CHECK((a == at || b == at));
                        CHECK(g.has_edge(a, b));
                        CHECK(seen_edges.insert(make_edge(a, b)).second);
                        if (internal && next != n - 1) CHECK(seen_inner.insert(next).second);
                        at = next;
                    }
                    CHECK(at == n - 1);
                }
            }
        }
    }
}

TEST_CASE("classical line graph inequalities (Whitney-style sweep)") {
    for (int n = 3; n <= 5; ++n) {
        for (const Graph& g : test_util::atlas(n, true)) {
            if (g.edge_count() == 0) continue;
            int lam = edge_connectivity(g).value;
            Graph lg = line_graph(g).graph;
            if (lam >= 2) CHECK(vertex_connectivity(lg).value >= lam);
            if (lg.vertex_count() >= 2) CHECK(edge_connectivity(lg).value >= 2 * lam - 2);
            int kap = vertex_connectivity(g).value;
            if (lg.edge_count() >= 1) {
                Graph llg = line_graph(lg).graph;
                CHECK(vertex_connectivity(llg).value >= 2 * kap - 2);
            }
        }
    }
}
