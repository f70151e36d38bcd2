#pragma once

#include "treepack/steiner.hpp"

namespace treepack {

struct SweepOptions {
    PackingOptions packing;  // per-subset budgets and bound settings
    int threads = 1;
    int block_size = 16;  // subsets evaluated per parallel batch
};

// Generalized k-(edge-)connectivity: the minimum of lambda(S)/kappa(S) over
// all k-subsets, with the lexicographically smallest minimizing subset as
// witness. Subsets are evaluated in fixed blocks against a threshold frozen
// at the block boundary, so results are identical at any thread count.
ConnectivityResult generalized_connectivity(const Graph& g, int k, DisjointMode mode,
                                            const SweepOptions& options = {});

// Sequential reference implementation: plain lexicographic scan with an
// immediately-updated threshold. Kept for testing and benchmarking against
// the blocked kernel; agrees with it whenever budgets are not exhausted.
ConnectivityResult generalized_connectivity_serial(const Graph& g, int k, DisjointMode mode,
                                                   const SweepOptions& options = {});

// All k-subsets of 0..n-1 in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

}  // namespace treepack
