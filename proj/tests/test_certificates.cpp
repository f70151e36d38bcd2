#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "treepack/certificates.hpp"
#include "treepack/errors.hpp"
#include "treepack/sweep.hpp"

using namespace treepack;

TEST_CASE("certificate JSON round trip") {
    Graph g = test_util::complete(5);
    ConnectivityResult res = generalized_connectivity(g, 3, DisjointMode::EdgeDisjoint);
    std::string json = certificate_to_json(res);
    ConnectivityResult back = certificate_from_json(json);
    CHECK(back.value == res.value);
    CHECK(back.status == res.status);
    CHECK(back.mode == res.mode);
    CHECK(back.witness_terminals == res.witness_terminals);
    CHECK(back.certificate.trees.size() == res.certificate.trees.size());
    CHECK(certificate_to_json(back) == json);  // byte-stable
    CHECK(verify_certificate(g, back).ok);
}

TEST_CASE("all upper certificate kinds survive the round trip") {
    // counting (complete graph), cut (pair), partition (spanning)
    Graph k6 = test_util::complete(6);
    auto counting = generalized_connectivity(k6, 4, DisjointMode::EdgeDisjoint);
    REQUIRE(counting.upper.has_value());
    CHECK(std::holds_alternative<CountingBoundRecord>(*counting.upper));
    CHECK(verify_certificate(k6, certificate_from_json(certificate_to_json(counting))).ok);

    auto pair = generalized_connectivity(k6, 2, DisjointMode::EdgeDisjoint);
    REQUIRE(pair.upper.has_value());
    CHECK(std::holds_alternative<LocalCut>(*pair.upper));
    CHECK(verify_certificate(k6, certificate_from_json(certificate_to_json(pair))).ok);

    auto spanning = stp_number(k6);
    REQUIRE(spanning.upper.has_value());
    CHECK(std::holds_alternative<PartitionCertificate>(*spanning.upper));
    CHECK(verify_certificate(k6, certificate_from_json(certificate_to_json(spanning))).ok);
}

TEST_CASE("verifier rejects corrupted certificates") {
    Graph g = test_util::complete(5);
    ConnectivityResult res = generalized_connectivity(g, 3, DisjointMode::EdgeDisjoint);
    REQUIRE(res.value == 3);

    ConnectivityResult wrong_count = res;
    wrong_count.value = 4;
    CHECK_FALSE(verify_certificate(g, wrong_count).ok);

    ConnectivityResult shared_edge = res;
    shared_edge.certificate.trees[1] = shared_edge.certificate.trees[0];
    CHECK_FALSE(verify_certificate(g, shared_edge).ok);

    ConnectivityResult loose_bound = res;
    REQUIRE(loose_bound.upper.has_value());
    if (auto* c = std::get_if<CountingBoundRecord>(&*loose_bound.upper)) {
        c->bound += 1;
        CHECK_FALSE(verify_certificate(g, loose_bound).ok);
    }

    // a certificate validated against the wrong graph fails
    Graph smaller = test_util::cycle(5);
    CHECK_FALSE(verify_certificate(smaller, res).ok);
}

TEST_CASE("parse errors carry context") {
    CHECK_THROWS_AS(certificate_from_json("not json"), FormatError);
    CHECK_THROWS_AS(certificate_from_json("{}"), FormatError);
    CHECK_THROWS_AS(certificate_from_json(R"({"value":1,"status":"maybe","mode":"edge-disjoint",
        "witness_terminals":[0,1],"trees":[]})"),
                    FormatError);
}

TEST_CASE("zero-value certificates") {
    Graph g(4, {{0, 1}, {2, 3}});
    ConnectivityResult res = generalized_connectivity(g, 2, DisjointMode::EdgeDisjoint);
    CHECK(res.value == 0);
    std::string json = certificate_to_json(res);
    CHECK(verify_certificate(g, certificate_from_json(json)).ok);
}
