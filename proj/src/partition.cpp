#include "treepack/partition.hpp"

#include <algorithm>

#include "treepack/errors.hpp"

namespace treepack {

namespace {

int crossing_count(const Graph& g, const std::vector<int>& block_of) {
    int c = 0;
    for (const auto& [u, v] : g.edges())
        if (block_of[static_cast<std::size_t>(u)] != block_of[static_cast<std::size_t>(v)]) ++c;
    return c;
}

PartitionCertificate make_certificate(const Graph& g, const std::vector<int>& block_of,
                                      int block_count) {
    PartitionCertificate cert;
    cert.blocks.assign(static_cast<std::size_t>(block_count), {});
    for (int v = 0; v < g.vertex_count(); ++v)
        cert.blocks[static_cast<std::size_t>(block_of[static_cast<std::size_t>(v)])].push_back(v);
    cert.crossing = crossing_count(g, block_of);
    cert.bound = cert.crossing / (block_count - 1);
    return cert;
}

unsigned long long bell_number(int k) {
    // Bell triangle; k <= 14 keeps this well inside 64 bits.
    std::vector<std::vector<unsigned long long>> tri{{1}};
    for (int i = 1; i <= k; ++i) {
        std::vector<unsigned long long> row{tri.back().back()};
        for (unsigned long long x : tri.back()) row.push_back(row.back() + x);
        tri.push_back(std::move(row));
    }
    return tri[static_cast<std::size_t>(k)][0];
}

unsigned long long pow_ull(unsigned long long b, int e, unsigned long long cap) {
    unsigned long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > cap / (b == 0 ? 1 : b)) return cap + 1;
        r *= b;
    }
    return r;
}

}  // namespace

std::optional<PartitionCertificate> steiner_partition_bound(const Graph& g,
                                                            const std::vector<int>& terminals,
                                                            const PartitionLimits& limits) {
    int n = g.vertex_count();
    std::vector<int> s = terminals;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    int k = static_cast<int>(s.size());
    if (k < 2) throw ArgumentError("partition bound needs at least two terminals");
    for (int v : s)
        if (v < 0 || v >= n) throw ArgumentError("terminal out of range: " + std::to_string(v));
    if (k > 14) return std::nullopt;

    std::vector<int> rest;
    {
        std::vector<bool> in_s(static_cast<std::size_t>(n), false);
        for (int v : s) in_s[static_cast<std::size_t>(v)] = true;
        for (int v = 0; v < n; ++v)
            if (!in_s[static_cast<std::size_t>(v)]) rest.push_back(v);
    }
    // exact workload: sum over terminal partitions of q^(#non-terminals)
    unsigned long long estimate = 0;
    if (rest.empty()) {
        estimate = bell_number(k);
    } else {
        std::vector<int> rgs(static_cast<std::size_t>(k), 0);
        while (true) {
            int q = 1 + *std::max_element(rgs.begin(), rgs.end());
            if (q >= 2)
                estimate += pow_ull(static_cast<unsigned long long>(q),
                                    static_cast<int>(rest.size()), limits.enumeration_cap);
            if (estimate > limits.enumeration_cap) return std::nullopt;
            int i = k - 1;
            for (; i > 0; --i) {
                int prefix_max = 0;
                for (int j = 0; j < i; ++j)
                    prefix_max = std::max(prefix_max, rgs[static_cast<std::size_t>(j)]);
                if (rgs[static_cast<std::size_t>(i)] <= prefix_max) {
                    ++rgs[static_cast<std::size_t>(i)];
                    for (int j = i + 1; j < k; ++j) rgs[static_cast<std::size_t>(j)] = 0;
                    break;
                }
            }
            if (i == 0) break;
        }
    }
    if (estimate > limits.enumeration_cap) return std::nullopt;

    std::vector<int> block_of(static_cast<std::size_t>(n), 0);
    int best = -1;
    PartitionCertificate best_cert;

    // All-singleton partition first when terminals cover V, so ties resolve to
    // the natural witness (e.g. any tree reports the singleton partition).
    if (rest.empty() && k >= 2) {
        for (int v = 0; v < n; ++v) block_of[static_cast<std::size_t>(v)] = v;
        best_cert = make_certificate(g, block_of, n);
        best = best_cert.bound;
    }

    // Restricted growth string over the terminals; each non-terminal is then
    // assigned to one of the terminal blocks, so every block meets S.
    std::vector<int> rgs(static_cast<std::size_t>(k), 0);
    auto eval_assignments = [&](int q) {
        for (int i = 0; i < k; ++i)
            block_of[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])] =
                rgs[static_cast<std::size_t>(i)];
        std::vector<int> digits(rest.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < rest.size(); ++i)
                block_of[static_cast<std::size_t>(rest[i])] = digits[i];
            int crossing = crossing_count(g, block_of);
            int bound = crossing / (q - 1);
            if (best < 0 || bound < best) {
                best_cert = make_certificate(g, block_of, q);
                best = bound;
            }
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
            if (pos == digits.size()) break;
        }
    };

    // iterate all RGS of length k
    while (true) {
        int q = 1 + *std::max_element(rgs.begin(), rgs.end());
        if (q >= 2) eval_assignments(q);
        // next RGS
        int i = k - 1;
        for (; i > 0; --i) {
            int prefix_max = 0;
            for (int j = 0; j < i; ++j)
                prefix_max = std::max(prefix_max, rgs[static_cast<std::size_t>(j)]);
            if (rgs[static_cast<std::size_t>(i)] <= prefix_max) {
                ++rgs[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < k; ++j) rgs[static_cast<std::size_t>(j)] = 0;
                break;
            }
        }
        if (i == 0) break;
    }

    if (best < 0) return std::nullopt;  // k < 2 handled above; unreachable otherwise
    return best_cert;
}

std::pair<int, PartitionCertificate> tutte_partition_number(const Graph& g,
                                                            const PartitionLimits& limits) {
    int n = g.vertex_count();
    if (n == 0) return {0, {}};
    if (!g.connected()) {
        auto comp = g.component_ids();
        PartitionCertificate cert;
        int blocks = 1 + *std::max_element(comp.begin(), comp.end());
        cert.blocks.assign(static_cast<std::size_t>(blocks), {});
        for (int v = 0; v < n; ++v)
            cert.blocks[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
        cert.crossing = 0;
        cert.bound = 0;
        return {0, cert};
    }
    if (n == 1) {
        // Degenerate: no partition with two blocks exists; spanning tree packing
        // of a single vertex is 0 by convention here.
        PartitionCertificate cert;
        cert.blocks = {{0}};
        return {0, cert};
    }
    if (n > limits.tutte_vertex_cap)
        throw ResourceError("partition enumeration capped at " +
                            std::to_string(limits.tutte_vertex_cap) + " vertices");
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    PartitionLimits wide = limits;
    wide.enumeration_cap = std::max<unsigned long long>(limits.enumeration_cap, bell_number(n));
    auto cert = steiner_partition_bound(g, all, wide);
    if (!cert) throw ResourceError("partition enumeration cap exceeded");
    return {cert->bound, *cert};
}

bool check_partition_certificate(const Graph& g, const std::vector<int>& terminals,
                                 const PartitionCertificate& cert) {
    int n = g.vertex_count();
    if (cert.blocks.size() < 2) return false;
    std::vector<int> block_of(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < cert.blocks.size(); ++b) {
        if (cert.blocks[b].empty()) return false;
        for (int v : cert.blocks[b]) {
            if (v < 0 || v >= n || block_of[static_cast<std::size_t>(v)] != -1) return false;
            block_of[static_cast<std::size_t>(v)] = static_cast<int>(b);
        }
    }
    for (int v = 0; v < n; ++v)
        if (block_of[static_cast<std::size_t>(v)] == -1) return false;
    // every block must contain a terminal, otherwise the bound formula is not valid
    std::vector<bool> hit(cert.blocks.size(), false);
    for (int t : terminals) {
        if (t < 0 || t >= n) return false;
        hit[static_cast<std::size_t>(block_of[static_cast<std::size_t>(t)])] = true;
    }
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) return false;
    int crossing = crossing_count(g, block_of);
    if (crossing != cert.crossing) return false;
    return cert.bound == crossing / (static_cast<int>(cert.blocks.size()) - 1);
}

}  // namespace treepack
