#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "treepack/families.hpp"
#include "treepack/graph.hpp"
#include "treepack/sweep.hpp"

namespace treepack {

struct AtlasSource {
    std::string path;
    int max_n = 7;
};
struct RandomSource {
    int n = 6;
    double p = 0.5;
    int trials = 10;
    std::uint32_t seed = 1;
};
struct FamilySource {
    std::vector<FamilySpec> specs;
};
struct ExplicitSource {
    std::vector<Graph> graphs;
    std::string label = "explicit";
};

struct CorpusSpec {
    std::variant<AtlasSource, RandomSource, FamilySource, ExplicitSource> source;
    std::string describe() const;
};

// Deterministic order: file order / seed order / family parameter order.
std::vector<Graph> load_corpus(const CorpusSpec& spec);

struct Counterexample {
    std::string graph6;
    std::string params;  // check-specific rendering, e.g. "k=3 S={0,1,2}"
    std::string computed;
    std::string expected;
};

struct VerificationReport {
    std::string check_id;
    std::string corpus;
    std::size_t corpus_size = 0;
    std::size_t evaluated = 0;  // graph x parameter instances actually run
    std::size_t passes = 0;
    std::size_t failures = 0;
    std::size_t skipped = 0;  // instances beyond budget/caps; never counted as passes
    bool report_only = false;  // unresolved conjectures are scanned, not asserted
    std::vector<Counterexample> counterexamples;
    double wall_ms = 0.0;

    // all-pass | counterexample-found | skips-present | report-only
    std::string status() const;
};

struct CheckOptions {
    SweepOptions sweep;
    int k_min = 3;  // checks that quantify over k evaluate k_min..min(n,k_max)
    int k_max = 5;
    std::vector<int> t_values{1, 2, 3};  // Kriesell edge-connectivity thresholds
    std::vector<std::pair<int, int>> characterization_cases{{5, 3}, {6, 3}, {6, 4}, {7, 3}};
    std::vector<int> lemma7_orders{5, 7};
    int linegraph_second_order_cap = 12;  // largest L(L(G)) order solved exactly
    int construction_trials = 50;          // theorem-4 sweep configurations per (n,k)
    std::uint32_t construction_seed = 1;
};

const std::vector<std::string>& check_ids();

// Runs one named check over the corpus; never throws on mathematical
// failures, which are reported as counterexamples instead.
VerificationReport run_check(const std::string& check_id, const CorpusSpec& corpus,
                             const CheckOptions& options = {});

// Canonical JSON form excludes the wall time so identical runs at any
// parallelism produce identical bytes; pass include_timing for diagnostics.
std::string report_to_json(const VerificationReport& report, bool include_timing = false);
std::string report_table(const VerificationReport& report);

}  // namespace treepack
