#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "test_util.hpp"
#include "treepack/errors.hpp"
#include "treepack/graph.hpp"

using namespace treepack;

namespace {

// reference encodings produced by an independent graph6 codec
struct G6Case {
    const char* name;
    int n;
    std::vector<Edge> edges;
    const char* g6;
};

const std::vector<G6Case>& g6_cases() {
    static const std::vector<G6Case> cases{
        {"K2", 2, {{0, 1}}, "A_"},
        {"K3", 3, {{0, 1}, {0, 2}, {1, 2}}, "Bw"},
        {"K4", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, "C~"},
        {"K5",
         5,
         {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
         "D~{"},
        {"C5", 5, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}, "Dhc"},
        {"P4", 4, {{0, 1}, {1, 2}, {2, 3}}, "Ch"},
        {"K33",
         6,
         {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}},
         "EFz_"},
        {"petersen",
         10,
         {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {3, 8}, {4, 9},
          {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}},
         "IheA@GUAo"},
        {"empty3", 3, {}, "B?"},
        {"star6", 6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}, "Esa?"},
    };
    return cases;
}

}  // namespace

TEST_CASE("graph6 round trip against reference codec") {
    for (const auto& c : g6_cases()) {
        CAPTURE(c.name);
        Graph g(c.n, c.edges);
        CHECK(serialize_graph(g, GraphFormat::Graph6) == c.g6);
        Graph parsed = parse_graph(c.g6, GraphFormat::Graph6);
        CHECK(parsed == g);
    }
}

TEST_CASE("graph6 errors") {
    CHECK_THROWS_AS(parse_graph("", GraphFormat::Graph6), FormatError);
    CHECK_THROWS_AS(parse_graph("Bw~", GraphFormat::Graph6), FormatError);  // trailing byte
    CHECK_THROWS_AS(parse_graph("B", GraphFormat::Graph6), FormatError);    // truncated
    CHECK_THROWS_AS(parse_graph("~??", GraphFormat::Graph6), ResourceError);  // long form
    CHECK_THROWS_AS(parse_graph("B\x01", GraphFormat::Graph6), FormatError);
    Graph big(63, {});
    CHECK_THROWS_AS(serialize_graph(big, GraphFormat::Graph6), ResourceError);
    // n = 62 is the largest encodable order
    Graph ok(62, {{0, 61}});
    CHECK(parse_graph(serialize_graph(ok, GraphFormat::Graph6), GraphFormat::Graph6) == ok);
}

TEST_CASE("edge list format") {
    Graph k2 = parse_graph("2 1\n0 1\n", GraphFormat::EdgeList);
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(serialize_graph(k2, GraphFormat::EdgeList) == "2 1\n0 1\n");
    CHECK(serialize_graph(Graph(3, {}), GraphFormat::EdgeList) == "3 0\n");
    // whitespace-tolerant parse, canonical serialize
    Graph k3 = parse_graph("3  3\n 0 1\n2 1 \n0   2", GraphFormat::EdgeList);
    CHECK(serialize_graph(k3, GraphFormat::EdgeList) == "3 3\n0 1\n0 2\n1 2\n");

    CHECK_THROWS_AS(parse_graph("2 1\n0 2\n", GraphFormat::EdgeList), FormatError);
    CHECK_THROWS_AS(parse_graph("2 1\n0 0\n", GraphFormat::EdgeList), FormatError);
    CHECK_THROWS_AS(parse_graph("2 2\n0 1\n1 0\n", GraphFormat::EdgeList), FormatError);
    CHECK_THROWS_AS(parse_graph("2 2\n0 1\n", GraphFormat::EdgeList), FormatError);
    CHECK_THROWS_AS(parse_graph("x", GraphFormat::EdgeList), FormatError);
    try {
        parse_graph("3 1\n0 7\n", GraphFormat::EdgeList);
        CHECK(false);
    } catch (const FormatError& e) {
        CHECK(e.byte_offset == 6);  // points at the bad endpoint token
    }
}

TEST_CASE("graph invariants") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), ArgumentError);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), ArgumentError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), ArgumentError);
    Graph g(4, {{2, 1}, {0, 3}});
    CHECK(g.edges() == std::vector<Edge>{{0, 3}, {1, 2}});  // normalized and sorted
    CHECK(g.degree(3) == 1);
    CHECK_FALSE(g.connected());
    CHECK(g.component_count() == 2);
}

TEST_CASE("complement") {
    Graph k3 = test_util::complete(3);
    CHECK(complement(k3).edge_count() == 0);
    Graph c5 = test_util::cycle(5);
    CHECK(complement(c5).edge_count() == 5);  // self-complementary order
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});  // K_{1,3}
    Graph co = complement(star);
    CHECK(co.edge_count() == 3);
    CHECK(co.degree(0) == 0);  // isolated + K_3
}

TEST_CASE("line graph") {
    auto [lp4, map_p4] = line_graph(test_util::path(4));
    CHECK(lp4.vertex_count() == 3);
    CHECK(lp4.edge_count() == 2);  // P_3
    auto [lstar, map_star] = line_graph(Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(lstar.is_complete());
    CHECK(lstar.vertex_count() == 3);  // K_3
    auto [lc5, map_c5] = line_graph(test_util::cycle(5));
    CHECK(lc5.vertex_count() == 5);
    CHECK(lc5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(lc5.degree(v) == 2);  // C_5 again
    CHECK(map_c5.size() == 5);
    auto [lempty, m0] = line_graph(Graph(3, {}));
    CHECK(lempty.vertex_count() == 0);
}

TEST_CASE("edits") {
    Graph k4 = test_util::complete(4);
    Graph cut = delete_edges(k4, {{0, 1}});
    CHECK(cut.edge_count() == 5);
    CHECK(cut.min_degree() == 2);
    CHECK_THROWS_AS(delete_edges(cut, {{0, 1}}), ArgumentError);

    auto del = delete_vertices(k4, {1});
    CHECK(del.graph == test_util::complete(3));
    CHECK(del.old_to_new == std::vector<int>{0, -1, 1, 2});

    auto ind = induced_subgraph(k4, {1, 3});
    CHECK(ind.graph == test_util::complete(2));

    Graph joined = join(test_util::complete(3), Graph(6, {}));
    CHECK(joined.vertex_count() == 9);
    CHECK(joined.edge_count() == 21);  // 3 + 3*6

    Graph du = disjoint_union(test_util::complete(2), test_util::complete(2));
    CHECK(du.vertex_count() == 4);
    CHECK(du.edge_count() == 2);
    CHECK_FALSE(du.connected());
}

TEST_CASE("atlas corpus round-trips byte-identically") {
    // the bundled files come from an independent codec; parsing and
    // re-serializing every line must reproduce it exactly
    for (int n = 2; n <= 7; ++n) {
        std::ifstream in(test_util::atlas_path(n));
        REQUIRE(in);
        std::string line;
        std::size_t count = 0;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            Graph g = parse_graph(line, GraphFormat::Graph6);
            CHECK(g.vertex_count() == n);
            CHECK(serialize_graph(g, GraphFormat::Graph6) == line);
            ++count;
        }
        CHECK(count > 0);
    }
}

TEST_CASE("structural properties over the small atlas") {
    long long checked = 0;
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : test_util::atlas(n)) {
            CHECK(g.edge_count() <= n * (n - 1) / 2);
            CHECK(complement(complement(g)) == g);
            long long expect = 0;
            for (int v = 0; v < n; ++v)
                expect += static_cast<long long>(g.degree(v)) * (g.degree(v) - 1) / 2;
            CHECK(line_graph(g).graph.edge_count() == expect);
            ++checked;
        }
    }
    CHECK(checked == 2 + 4 + 11 + 34 + 156);
}
