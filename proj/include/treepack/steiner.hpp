#pragma once

#include <bitset>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "treepack/connectivity.hpp"
#include "treepack/graph.hpp"
#include "treepack/partition.hpp"

namespace treepack {

enum class DisjointMode { EdgeDisjoint, InternallyDisjoint };

std::string to_string(DisjointMode mode);

/// A tree subgraph whose vertex set contains the terminal set.
struct SteinerTree {
    std::vector<int> terminals;  // sorted
    EdgeSet edges;               // sorted normalized; the canonical form

    std::vector<int> vertices() const;
    // Every leaf is a terminal, i.e. deleting any edge disconnects the terminals.
    bool is_minimal() const;
};

/// Pairwise edge-disjoint trees over one terminal set; in internally-disjoint
/// mode the trees additionally share no vertex outside the terminals.
struct Packing {
    std::vector<int> terminals;
    DisjointMode mode = DisjointMode::EdgeDisjoint;
    std::vector<SteinerTree> trees;
};

struct TreeAccounting {
    bool inside_terminal_subgraph = false;  // all edges within G[S]
    int boundary_edges = 0;                 // edges drawn from E(G[S]) u E_G[S,S-bar]
    bool minimal = false;
    bool lemma_ok = false;  // exactly k-1 boundary edges inside, at least k otherwise
};

struct PackingCheck {
    bool ok = false;
    std::string violation;  // names the offending tree/edge/vertex when !ok
    std::vector<TreeAccounting> accounting;
};

// Checks every packing invariant against g and reports the per-tree
// boundary-edge accounting.
PackingCheck verify_packing(const Graph& g, const Packing& p);

/// Record of the edge-budget upper bound on edge-disjoint Steiner trees:
/// trees inside G[S] use k-1 edges of E(G[S]), trees reaching outside use at
/// least k edges of E(G[S]) u E_G[S,S-bar].
struct CountingBoundRecord {
    std::vector<int> terminals;
    int e_in = 0;
    int e_cut = 0;
    int x_star = 0;  // floor(e_in/(k-1)), the cap on trees inside G[S]
    int bound = 0;
};

CountingBoundRecord counting_upper_bound(const Graph& g, const std::vector<int>& s);

using UpperCertificate = std::variant<PartitionCertificate, CountingBoundRecord, LocalCut>;

enum class SolveStatus { Exact, LowerBoundOnly };

struct SearchBudget {
    std::size_t max_trees = 200'000;     // minimal Steiner trees materialized per (g,S)
    std::size_t max_nodes = 10'000'000;  // backtracking nodes per (g,S)
};

struct ConnectivityResult {
    int value = 0;
    SolveStatus status = SolveStatus::Exact;
    DisjointMode mode = DisjointMode::EdgeDisjoint;
    std::vector<int> witness_terminals;
    Packing certificate;
    std::optional<UpperCertificate> upper;
};

// All minimal Steiner trees for s, in deterministic lexicographic order on
// the sorted edge list. Throws EnumerationOverflow if more than limit exist.
std::vector<SteinerTree> enumerate_minimal_steiner_trees(const Graph& g,
                                                         const std::vector<int>& s,
                                                         std::size_t limit);

struct PackingOptions {
    SearchBudget budget;
    PartitionLimits partition;
    bool use_partition_bound = true;
    // partition workload applied up front as a root bound; anything between
    // this and partition.enumeration_cap runs only as a last resort, to
    // certify exactness after a truncated search
    unsigned long long partition_eager_cap = 200'000;
    // prune branches whose residual graph cannot carry enough edge-disjoint
    // paths between some terminal pair
    bool use_flow_prune = true;
};

// Exact lambda(S) / kappa(S) with a maximum packing certificate. Pairs go
// through max-flow, the full vertex set through spanning tree packing,
// everything else through the backtracking engine. Budget exhaustion
// degrades status to LowerBoundOnly instead of failing.
ConnectivityResult max_tree_packing(const Graph& g, const std::vector<int>& s, DisjointMode mode,
                                    const PackingOptions& options = {});

// Spanning tree packing number computed independently by matroid union
// packing and by partition enumeration; the two must agree.
ConnectivityResult stp_number(const Graph& g, const PartitionLimits& limits = {});

// ---------------------------------------------------------------------------
// Internals shared with the subset sweep (treepack/sweep.hpp).

namespace detail {

struct TreeData {
    EdgeSet edges;
    std::bitset<128> edge_mask;
    std::uint64_t vertex_mask = 0;
    std::uint64_t steiner_mask = 0;  // non-terminal vertices
    int in_s = 0;                    // edges inside G[S]
    int cut = 0;                     // edges from S to the rest
    std::vector<std::uint8_t> terminal_degree;
};

// Lazily materialized canonical list of minimal Steiner trees.
class TreeStream {
public:
    TreeStream(const Graph& g, std::vector<int> terminals, std::size_t cap);
    ~TreeStream();
    TreeStream(const TreeStream&) = delete;
    TreeStream& operator=(const TreeStream&) = delete;

    const TreeData* get(std::size_t idx);  // nullptr past the end or cap
    bool truncated() const { return truncated_; }
    std::size_t generated() const { return trees_.size(); }

private:
    struct Enumerator;
    const Graph& g_;
    std::vector<int> terminals_;
    std::size_t cap_;
    std::deque<TreeData> trees_;  // deque: grows without invalidating handed-out pointers
    bool exhausted_ = false;
    bool truncated_ = false;
    Enumerator* enumerator_;
};

struct SearchOutcome {
    enum class Kind { Exact, ThresholdReached, Truncated } kind = Kind::Exact;
    int value = 0;
    std::vector<std::size_t> packing;  // indices into the tree stream
    int root_upper_bound = 0;
};

// Depth-first packing over minimal Steiner trees in canonical order with
// symmetry breaking; prunes on the residual counting bound, residual terminal
// degrees and residual pair flows. Stops as soon as `stop_threshold` trees
// are found (pass -1 to disable), or exactly when the root upper bound is
// attained. `external_incumbent` trees found by other means raise the bar the
// search has to beat without constraining it.
SearchOutcome search_max_packing(const Graph& g, const std::vector<int>& s, DisjointMode mode,
                                 TreeStream& stream, const PackingOptions& options,
                                 int stop_threshold, int root_upper_bound,
                                 int external_incumbent = 0);

// Deterministic warm start: grows minimal trees on the residual graph by
// multi-source BFS until `target` trees are found or the growth gets stuck.
std::vector<EdgeSet> greedy_packing(const Graph& g, const std::vector<int>& s, DisjointMode mode,
                                    int target);

struct TerminalSetEval {
    enum class Kind { Exact, AtLeast, Truncated } kind = Kind::Exact;
    int value = 0;
    std::vector<EdgeSet> trees;  // packing certifying `value`
    std::optional<PartitionCertificate> partition;  // when it was computed
};

// One terminal set, full pipeline: cheap bounds, greedy warm start, canonical
// backtracking, and a last-resort partition certificate for truncated
// searches. threshold >= 0 allows stopping once that many trees exist.
TerminalSetEval evaluate_terminal_set(const Graph& g, const std::vector<int>& s,
                                      DisjointMode mode, const PackingOptions& options,
                                      int threshold, int pair_min);

}  // namespace detail

}  // namespace treepack
