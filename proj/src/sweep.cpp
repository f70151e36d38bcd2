#include "treepack/sweep.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "treepack/errors.hpp"

namespace treepack {

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

namespace {

constexpr int kUnset = std::numeric_limits<int>::max();

struct SubsetOutcome {
    enum class Kind { Exact, AtLeast, Truncated } kind = Kind::Exact;
    int value = 0;
    Packing packing;  // maximum packing for Exact, best-found for Truncated
};

struct SweepContext {
    const Graph& g;
    DisjointMode mode;
    const SweepOptions& options;
    std::vector<std::vector<int>> pair_lambda;  // memoized local edge-connectivity
};

SweepContext make_context(const Graph& g, DisjointMode mode, const SweepOptions& options) {
    SweepContext ctx{g, mode, options, {}};
    int n = g.vertex_count();
    ctx.pair_lambda.assign(static_cast<std::size_t>(n),
                           std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int val = local_edge_connectivity(g, u, v).value;
            ctx.pair_lambda[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = val;
            ctx.pair_lambda[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = val;
        }
    return ctx;
}

SubsetOutcome evaluate_pair(const SweepContext& ctx, const std::vector<int>& s) {
    SubsetOutcome out;
    out.kind = SubsetOutcome::Kind::Exact;
    if (ctx.mode == DisjointMode::EdgeDisjoint)
        out.value = ctx.pair_lambda[static_cast<std::size_t>(s[0])][static_cast<std::size_t>(s[1])];
    else
        out.value = local_vertex_connectivity(ctx.g, s[0], s[1]).value;
    out.packing.terminals = s;
    out.packing.mode = ctx.mode;
    for (auto& path :
         disjoint_paths(ctx.g, s[0], s[1], ctx.mode == DisjointMode::InternallyDisjoint))
        out.packing.trees.push_back({s, std::move(path)});
    return out;
}

SubsetOutcome evaluate_subset(const SweepContext& ctx, const std::vector<int>& s, int threshold) {
    if (s.size() == 2) return evaluate_pair(ctx, s);
    int pair_min = ctx.g.vertex_count();
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            pair_min = std::min(
                pair_min,
                ctx.pair_lambda[static_cast<std::size_t>(s[i])][static_cast<std::size_t>(s[j])]);
    detail::TerminalSetEval ev =
        detail::evaluate_terminal_set(ctx.g, s, ctx.mode, ctx.options.packing, threshold, pair_min);
    SubsetOutcome out;
    out.value = ev.value;
    switch (ev.kind) {
        case detail::TerminalSetEval::Kind::Exact:
            out.kind = SubsetOutcome::Kind::Exact;
            break;
        case detail::TerminalSetEval::Kind::AtLeast:
            out.kind = SubsetOutcome::Kind::AtLeast;
            break;
        case detail::TerminalSetEval::Kind::Truncated:
            out.kind = SubsetOutcome::Kind::Truncated;
            break;
    }
    if (out.kind != SubsetOutcome::Kind::AtLeast) {
        out.packing.terminals = s;
        out.packing.mode = ctx.mode;
        for (auto& t : ev.trees) out.packing.trees.push_back({s, std::move(t)});
    }
    return out;
}

// Running minimum with the lexicographic witness tie rule. Subsets must be
// merged in lexicographic order.
struct Accumulator {
    int best = kUnset;            // minimum over exactly-resolved subsets
    std::size_t best_idx = 0;
    Packing best_packing;
    int trunc_min = kUnset;       // best lower bound among budget-truncated subsets
    std::size_t trunc_idx = 0;
    Packing trunc_packing;
    bool any_truncated = false;

    void merge(std::size_t idx, SubsetOutcome&& out) {
        switch (out.kind) {
            case SubsetOutcome::Kind::Exact:
                if (out.value < best) {
                    best = out.value;
                    best_idx = idx;
                    best_packing = std::move(out.packing);
                }
                break;
            case SubsetOutcome::Kind::AtLeast:
                break;  // proven irrelevant to the minimum and the witness
            case SubsetOutcome::Kind::Truncated:
                any_truncated = true;
                if (out.value < trunc_min) {
                    trunc_min = out.value;
                    trunc_idx = idx;
                    trunc_packing = std::move(out.packing);
                }
                break;
        }
    }

    int threshold() const { return best == kUnset ? -1 : best; }
};

ConnectivityResult finalize(const Graph& g, DisjointMode mode,
                            const std::vector<std::vector<int>>& subsets, Accumulator&& acc,
                            const SweepOptions& options) {
    ConnectivityResult res;
    res.mode = mode;
    bool use_trunc = acc.any_truncated && acc.trunc_min < acc.best;
    if (use_trunc) {
        res.value = acc.trunc_min;
        res.witness_terminals = subsets[acc.trunc_idx];
        res.certificate = std::move(acc.trunc_packing);
    } else {
        res.value = acc.best;
        res.witness_terminals = subsets[acc.best_idx];
        res.certificate = std::move(acc.best_packing);
    }
    res.status = acc.any_truncated ? SolveStatus::LowerBoundOnly : SolveStatus::Exact;

    if (res.status == SolveStatus::Exact) {
        const std::vector<int>& s = res.witness_terminals;
        if (s.size() == 2) {
            res.upper = mode == DisjointMode::EdgeDisjoint
                            ? local_edge_connectivity(g, s[0], s[1])
                            : local_vertex_connectivity(g, s[0], s[1]);
        } else {
            CountingBoundRecord rec = counting_upper_bound(g, s);
            std::optional<PartitionCertificate> partition;
            if (options.packing.use_partition_bound)
                partition = steiner_partition_bound(g, s, options.packing.partition);
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
            if (rec.bound == res.value)
                res.upper = rec;
            else if (partition && partition->bound == res.value)
                res.upper = *partition;
            else if (pair_min == res.value)
                res.upper = local_edge_connectivity(g, min_pair.first, min_pair.second);
        }
    }
    return res;
}

ConnectivityResult disconnected_result(const Graph& g, int k, DisjointMode mode) {
    auto comp = g.component_ids();
    ConnectivityResult res;
    res.mode = mode;
    res.value = 0;
    res.status = SolveStatus::Exact;
    for (const auto& s : k_subsets(g.vertex_count(), k)) {
        bool split = false;
        for (std::size_t i = 1; i < s.size(); ++i)
            if (comp[static_cast<std::size_t>(s[i])] != comp[static_cast<std::size_t>(s[0])])
                split = true;
        if (split) {
            res.witness_terminals = s;
            break;
        }
    }
    res.certificate.terminals = res.witness_terminals;
    res.certificate.mode = mode;
    LocalCut cut;
    cut.value = 0;
    std::vector<int> side;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (comp[static_cast<std::size_t>(v)] == 0) side.push_back(v);
    cut.bipartition = std::move(side);
    res.upper = cut;
    return res;
}

void validate_k(const Graph& g, int k) {
    if (k < 2 || k > g.vertex_count())
        throw ArgumentError("k must satisfy 2 <= k <= n, got k=" + std::to_string(k) +
                            ", n=" + std::to_string(g.vertex_count()));
}

}  // namespace

ConnectivityResult generalized_connectivity_serial(const Graph& g, int k, DisjointMode mode,
                                                   const SweepOptions& options) {
    validate_k(g, k);
    if (!g.connected()) return disconnected_result(g, k, mode);
    if (k == g.vertex_count()) return max_tree_packing(g, k_subsets(g.vertex_count(), k)[0], mode,
                                                       options.packing);
    SweepContext ctx = make_context(g, mode, options);
    auto subsets = k_subsets(g.vertex_count(), k);
    Accumulator acc;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        acc.merge(i, evaluate_subset(ctx, subsets[i], acc.threshold()));
    return finalize(g, mode, subsets, std::move(acc), options);
}

ConnectivityResult generalized_connectivity(const Graph& g, int k, DisjointMode mode,
                                            const SweepOptions& options) {
    validate_k(g, k);
    if (!g.connected()) return disconnected_result(g, k, mode);
    if (k == g.vertex_count()) return max_tree_packing(g, k_subsets(g.vertex_count(), k)[0], mode,
                                                       options.packing);
    SweepContext ctx = make_context(g, mode, options);
    auto subsets = k_subsets(g.vertex_count(), k);
    Accumulator acc;
    std::size_t block = static_cast<std::size_t>(std::max(1, options.block_size));
    std::vector<SubsetOutcome> outcomes(std::min(block, subsets.size()));
    // warm-up block of one subset, so every later block sees a real threshold
    for (std::size_t start = 0; start < subsets.size();
         start += start == 0 ? 1 : block) {
        std::size_t end = start == 0 ? 1 : std::min(start + block, subsets.size());
        int frozen_threshold = acc.threshold();
        long long count = static_cast<long long>(end - start);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, options.threads))
#endif
        for (long long i = 0; i < count; ++i)
            outcomes[static_cast<std::size_t>(i)] = evaluate_subset(
                ctx, subsets[start + static_cast<std::size_t>(i)], frozen_threshold);
        for (std::size_t i = start; i < end; ++i)
            acc.merge(i, std::move(outcomes[i - start]));
    }
    return finalize(g, mode, subsets, std::move(acc), options);
}

}  // namespace treepack
