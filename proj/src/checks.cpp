#include "treepack/checks.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "treepack/connectivity.hpp"
#include "treepack/errors.hpp"
#include "treepack/spanning.hpp"

namespace treepack {

namespace {

std::string g6(const Graph& g) { return serialize_graph(g, GraphFormat::Graph6); }

int ceil_half(int a) { return a >= 0 ? (a + 1) / 2 : a / 2; }

int ceil_div(long long num, long long den) {
    return static_cast<int>(num >= 0 ? (num + den - 1) / den : -((-num) / den));
}

std::string set_str(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

std::string edges_str(const EdgeSet& m) {
    std::string out = "{";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(m[i].first) + "-" + std::to_string(m[i].second);
    }
    return out + "}";
}

struct InstanceTally {
    std::size_t evaluated = 0, passes = 0, failures = 0, skipped = 0;
    std::vector<Counterexample> cex;

    void pass() {
        ++evaluated;
        ++passes;
    }
    void fail(Counterexample c) {
        ++evaluated;
        ++failures;
        cex.push_back(std::move(c));
    }
    void skip() {
        ++evaluated;
        ++skipped;
    }
    void check(bool ok, const std::function<Counterexample()>& make) {
        if (ok)
            pass();
        else
            fail(make());
    }
    void merge(InstanceTally&& o) {
        evaluated += o.evaluated;
        passes += o.passes;
        failures += o.failures;
        skipped += o.skipped;
        for (auto& c : o.cex) cex.push_back(std::move(c));
    }
};

std::optional<int> sweep_value(const Graph& g, int k, DisjointMode mode,
                               const SweepOptions& opt) {
    ConnectivityResult r = generalized_connectivity(g, k, mode, opt);
    if (r.status != SolveStatus::Exact) return std::nullopt;
    return r.value;
}

struct PairTable {
    std::vector<std::vector<int>> lambda;

    static PairTable of(const Graph& g) {
        int n = g.vertex_count();
        PairTable t;
        t.lambda.assign(static_cast<std::size_t>(n),
                        std::vector<int>(static_cast<std::size_t>(n), 0));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                int val = local_edge_connectivity(g, u, v).value;
                t.lambda[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = val;
                t.lambda[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = val;
            }
        return t;
    }

    int min_over(const std::vector<int>& s) const {
        int m = std::numeric_limits<int>::max();
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                m = std::min(m, lambda[static_cast<std::size_t>(s[i])]
                                      [static_cast<std::size_t>(s[j])]);
        return m;
    }
};

enum class Tri { Yes, No, Skip };

struct ThresholdAnswer {
    Tri verdict = Tri::Skip;
    int exact_value = 0;  // valid when verdict == No
};

// Is lambda(S) (or kappa(S)) at least t? Runs the packing pipeline with an
// early stop at t trees; a full exhaustion below t yields the exact value.
ThresholdAnswer subset_at_least(const Graph& g, const std::vector<int>& s, DisjointMode mode,
                                int t, const PairTable& pairs, const PackingOptions& opt) {
    if (t <= 0) return {Tri::Yes, 0};
    detail::TerminalSetEval ev =
        detail::evaluate_terminal_set(g, s, mode, opt, t, pairs.min_over(s));
    switch (ev.kind) {
        case detail::TerminalSetEval::Kind::AtLeast:
            return {Tri::Yes, ev.value};
        case detail::TerminalSetEval::Kind::Exact:
            return {ev.value >= t ? Tri::Yes : Tri::No, ev.value};
        case detail::TerminalSetEval::Kind::Truncated:
            return {ev.value >= t ? Tri::Yes : Tri::Skip, ev.value};
    }
    return {Tri::Skip, 0};
}

template <typename Fn>
std::vector<InstanceTally> parallel_tally(std::size_t count, int threads, Fn fn) {
    std::vector<InstanceTally> tallies(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, threads))
#endif
    for (long long i = 0; i < static_cast<long long>(count); ++i)
        fn(static_cast<std::size_t>(i), tallies[static_cast<std::size_t>(i)]);
    return tallies;
}

VerificationReport assemble(const std::string& id, const std::string& corpus_desc,
                            std::size_t corpus_size, std::vector<InstanceTally>&& tallies,
                            bool report_only,
                            std::chrono::steady_clock::time_point start) {
    VerificationReport report;
    report.check_id = id;
    report.corpus = corpus_desc;
    report.corpus_size = corpus_size;
    report.report_only = report_only;
    InstanceTally total;
    for (auto& t : tallies) total.merge(std::move(t));
    report.evaluated = total.evaluated;
    report.passes = total.passes;
    report.failures = total.failures;
    report.skipped = total.skipped;
    report.counterexamples = std::move(total.cex);
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
}

using CheckFn = std::function<void(const Graph&, const CheckOptions&, InstanceTally&)>;

// Shared per-graph runner; connected_only filters the corpus per the check's
// hypothesis (filtered members are simply out of scope, not skips).
VerificationReport run_per_graph(const std::string& id, const CorpusSpec& corpus,
                                 const CheckOptions& options, bool connected_only,
                                 bool report_only, const CheckFn& fn) {
    auto start = std::chrono::steady_clock::now();
    std::vector<Graph> graphs = load_corpus(corpus);
    std::vector<const Graph*> eligible;
    for (const Graph& g : graphs)
        if (!connected_only || g.connected()) eligible.push_back(&g);
    auto tallies =
        parallel_tally(eligible.size(), options.sweep.threads, [&](std::size_t i, InstanceTally& t) {
            fn(*eligible[i], options, t);
        });
    return assemble(id, corpus.describe(), graphs.size(), std::move(tallies), report_only, start);
}

int k_low(const CheckOptions& o, int floor_k) { return std::max(o.k_min, floor_k); }

// ---------------------------------------------------------------------------
// individual checks

void complete_formula_check(const Graph& g, const CheckOptions& o, InstanceTally& t,
                            DisjointMode mode) {
    int n = g.vertex_count();
    if (!g.is_complete() || n < 2) {
        t.skip();
        return;
    }
    for (int k = std::max(2, std::min(o.k_min, 2)); k <= std::min(n, o.k_max); ++k) {
        auto v = sweep_value(g, k, mode, o.sweep);
        if (!v) {
            t.skip();
            continue;
        }
        int expected = n - ceil_half(k);
        t.check(*v == expected, [&] {
            return Counterexample{g6(g), "n=" + std::to_string(n) + " k=" + std::to_string(k),
                                  std::to_string(*v), std::to_string(expected)};
        });
    }
}

void range_check(const Graph& g, const CheckOptions& o, InstanceTally& t) {
    int n = g.vertex_count();
    for (int k = k_low(o, 3); k <= std::min(n, o.k_max); ++k) {
        for (DisjointMode mode : {DisjointMode::InternallyDisjoint, DisjointMode::EdgeDisjoint}) {
            auto v = sweep_value(g, k, mode, o.sweep);
            if (!v) {
                t.skip();
                continue;
            }
            int hi = n - ceil_half(k);
            t.check(1 <= *v && *v <= hi, [&] {
                return Counterexample{g6(g),
                                      "k=" + std::to_string(k) + " mode=" + to_string(mode),
                                      std::to_string(*v), "in [1," + std::to_string(hi) + "]"};
            });
        }
    }
}

void obs1_check(const Graph& g, const CheckOptions& o, InstanceTally& t) {
    int n = g.vertex_count();
    int delta = g.min_degree();
    for (int k = k_low(o, 3); k <= std::min(n, o.k_max); ++k) {
        auto kap = sweep_value(g, k, DisjointMode::InternallyDisjoint, o.sweep);
        auto lam = sweep_value(g, k, DisjointMode::EdgeDisjoint, o.sweep);
        if (!kap || !lam) {
            t.skip();
            continue;
        }
        t.check(*kap <= *lam && *lam <= delta, [&] {
            return Counterexample{g6(g), "k=" + std::to_string(k),
                                  "kappa_k=" + std::to_string(*kap) +
                                      " lambda_k=" + std::to_string(*lam),
                                  "kappa_k <= lambda_k <= delta=" + std::to_string(delta)};
        });
    }
}

void obs2_check(const Graph& g, const CheckOptions& o, InstanceTally& t) {
    int n = g.vertex_count();
    for (int k = k_low(o, 3); k <= std::min(n, o.k_max); ++k) {
        for (DisjointMode mode : {DisjointMode::InternallyDisjoint, DisjointMode::EdgeDisjoint}) {
            auto base = sweep_value(g, k, mode, o.sweep);
            if (!base) {
                t.skip();
                continue;
            }
            for (const Edge& e : g.edges()) {
                Graph h = delete_edges(g, {e});
                auto sub = sweep_value(h, k, mode, o.sweep);
                if (!sub) {
                    t.skip();
                    continue;
                }
                t.check(*sub <= *base, [&] {
                    return Counterexample{
                        g6(g),
                        "k=" + std::to_string(k) + " mode=" + to_string(mode) + " minus " +
                            std::to_string(e.first) + "-" + std::to_string(e.second),
                        std::to_string(*sub), "<= " + std::to_string(*base)};
                });
            }
        }
    }
}

void obs3_check(const Graph& g, const CheckOptions& o, InstanceTally& t) {
    int n = g.vertex_count();
    Graph gbar = complement(g);
    for (int k = k_low(o, 3); k <= std::min(n, o.k_max); ++k) {
        auto a = sweep_value(g, k, DisjointMode::InternallyDisjoint, o.sweep);
        auto b = sweep_value(gbar, k, DisjointMode::InternallyDisjoint, o.sweep);
        if (!a || !b) {
            t.skip();
            continue;
        }
        bool zero = (static_cast<long>(*a) * *b) == 0;
        bool disconnected = !g.connected() || !gbar.connected();
        t.check(zero == disconnected, [&] {
            return Counterexample{g6(g), "k=" + std::to_string(k),
                                  "product=" + std::to_string(static_cast<long>(*a) * *b),
                                  disconnected ? "0 (a side is disconnected)"
                                               : "nonzero (both sides connected)"};
        });
    }
}

void thm6_check(const Graph& g, const CheckOptions& o, InstanceTally& t) {
    int n = g.vertex_count();
    Graph gbar = complement(g);
    for (int k = k_low(o, 3); k <= std::min(n, o.k_max); ++k) {
        auto a = sweep_value(g, k, DisjointMode::InternallyDisjoint, o.sweep);
        auto b = sweep_value(gbar, k, DisjointMode::InternallyDisjoint, o.sweep);
        if (!a || !b) {
            t.skip();
            continue;
        }
        int hi = n - ceil_half(k);
        bool sum_ok = 1 <= *a + *b && *a + *b <= hi;
        bool prod_ok = 4LL * *a * *b <= static_cast<long long>(hi) * hi;
        t.check(sum_ok && prod_ok, [&] {
            return Counterexample{g6(g), "k=" + std::to_string(k),
                                  "sum=" + std::to_string(*a + *b) +
                                      " product=" + std::to_string(static_cast<long>(*a) * *b),
                                  "1 <= sum <= " + std::to_string(hi) +
                                      " and 4*product <= " + std::to_string(hi) + "^2"};
        });
    }
}

void prop3_check(const Graph& g, const CheckOptions& o, InstanceTally& t) {
    int n = g.vertex_count();
    int lam = edge_connectivity(g).value;
    for (int k = k_low(o, 3); k <= std::min(n, o.k_max); ++k) {
        auto v = sweep_value(g, k, DisjointMode::EdgeDisjoint, o.sweep);
        if (!v) {
            t.skip();
            continue;
        }
        t.check(*v <= lam, [&] {
            return Counterexample{g6(g), "k=" + std::to_string(k),
                                  "lambda_k=" + std::to_string(*v),
                                  "<= lambda=" + std::to_string(lam)};
        });
    }
}

void prop4_check(const Graph& g, const CheckOptions& o, InstanceTally& t) {
    int n = g.vertex_count();
    if (n < 3) return;
    int lam = edge_connectivity(g).value;
    int s = lam / 4, r = lam % 4;
    int low = 3 * s + ceil_half(r);
    auto v = sweep_value(g, 3, DisjointMode::EdgeDisjoint, o.sweep);
    if (!v) {
        t.skip();
        return;
    }
    t.check(*v >= low, [&] {
        return Counterexample{g6(g), "lambda=" + std::to_string(lam),
                              "lambda_3=" + std::to_string(*v),
                              ">= 3s+ceil(r/2)=" + std::to_string(low)};
    });
}

void planar_corollary_check(const Graph& g, const CheckOptions& o, InstanceTally& t) {
    int n = g.vertex_count();
    if (n < 3) return;
    int lam = edge_connectivity(g).value;
    auto v = sweep_value(g, 3, DisjointMode::EdgeDisjoint, o.sweep);
    if (!v) {
        t.skip();
        return;
    }
    t.check(lam - 1 <= *v && *v <= lam, [&] {
        return Counterexample{g6(g), "lambda=" + std::to_string(lam),
                              "lambda_3=" + std::to_string(*v),
                              "in [" + std::to_string(lam - 1) + "," + std::to_string(lam) + "]"};
    });
}

void corollary2_check(const Graph& g, const CheckOptions& o, InstanceTally& t) {
    int lam = edge_connectivity(g).value;
    int ell = lam / 2;
    if (ell < 1) {
        t.pass();  // vacuous for lambda <= 1
        return;
    }
    try {
        ConnectivityResult stp = stp_number(g, o.sweep.packing.partition);
        t.check(stp.value >= ell, [&] {
            return Counterexample{g6(g), "lambda=" + std::to_string(lam),
                                  "stp=" + std::to_string(stp.value),
                                  ">= floor(lambda/2)=" + std::to_string(ell)};
        });
    } catch (const ResourceError&) {
        t.skip();
    }
}

void lemma1_check(const Graph& g, const CheckOptions& o, InstanceTally& t) {
    int n = g.vertex_count();
    if (n < 3) return;
    PairTable pairs = PairTable::of(g);
    for (int tt : o.t_values) {
        int threshold = (8 * tt + 3) / 6;
        for (const auto& s : k_subsets(n, 3)) {
            if (pairs.min_over(s) < threshold) continue;
            ThresholdAnswer ans =
                subset_at_least(g, s, DisjointMode::EdgeDisjoint, tt, pairs, o.sweep.packing);
            if (ans.verdict == Tri::Skip) {
                t.skip();
                continue;
            }
            t.check(ans.verdict == Tri::Yes, [&] {
                return Counterexample{g6(g),
                                      "t=" + std::to_string(tt) + " S=" + set_str(s) +
                                          " (pairwise >= " + std::to_string(threshold) + ")",
                                      "lambda(S)=" + std::to_string(ans.exact_value),
                                      ">= " + std::to_string(tt)};
            });
        }
    }
}

void lemma2_check(const Graph& g, const CheckOptions&, InstanceTally& t) {
    if (g.edge_count() == 0) return;
    int lam = edge_connectivity(g).value;
    Graph lg = line_graph(g).graph;
    if (lam >= 2) {
        int klg = vertex_connectivity(lg).value;
        t.check(klg >= lam, [&] {
            return Counterexample{g6(g), "part=1", "kappa(L)=" + std::to_string(klg),
                                  ">= lambda=" + std::to_string(lam)};
        });
    }
    if (lg.vertex_count() >= 2) {
        int llg = edge_connectivity(lg).value;
        t.check(llg >= 2 * lam - 2, [&] {
            return Counterexample{g6(g), "part=2", "lambda(L)=" + std::to_string(llg),
                                  ">= 2*lambda-2=" + std::to_string(2 * lam - 2)};
        });
    }
    if (g.vertex_count() <= 5 && lg.edge_count() > 0) {
        int kap = vertex_connectivity(g).value;
        Graph llg = line_graph(lg).graph;
        if (llg.vertex_count() >= 1) {
            int kll = vertex_connectivity(llg).value;
            t.check(kll >= 2 * kap - 2, [&] {
                return Counterexample{g6(g), "part=3", "kappa(L(L))=" + std::to_string(kll),
                                      ">= 2*kappa-2=" + std::to_string(2 * kap - 2)};
            });
        }
    }
}

void lemma3_check(const Graph& g, const CheckOptions& o, InstanceTally& t) {
    // detect K_{a,b}: bipartition by 2-coloring, then all cross edges present
    int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    bool bipartite = true;
    for (int s = 0; s < n && bipartite; ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty() && bipartite) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(w)] < 0) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] ==
                           color[static_cast<std::size_t>(v)])
                    bipartite = false;
            }
        }
    }
    long a = std::count(color.begin(), color.end(), 0);
    long b = n - a;
    if (!bipartite || a < 1 || b < 1 ||
        g.edge_count() != static_cast<int>(a * b) || !g.connected()) {
        t.skip();  // corpus member is not a complete bipartite graph
        return;
    }
    long expected = (a * b) / (a + b - 1);
    try {
        SpanningPacking sp = max_spanning_tree_packing(g);
        auto [bound, cert] = tutte_partition_number(g, o.sweep.packing.partition);
        bool ok = sp.value == expected && bound == expected;
        t.check(ok, [&] {
            return Counterexample{g6(g), "a=" + std::to_string(a) + " b=" + std::to_string(b),
                                  "packing=" + std::to_string(sp.value) +
                                      " partition=" + std::to_string(bound),
                                  "both = " + std::to_string(expected)};
        });
    } catch (const ResourceError&) {
        t.skip();
    }
}

// every 3-subset of `host` reaches `threshold` in the given mode
bool all_triples_at_least(const Graph& host, int threshold, DisjointMode mode,
                          const CheckOptions& o, InstanceTally& t, const Graph& origin,
                          const std::string& part, const std::string& label) {
    if (threshold <= 0) {
        t.pass();
        return true;
    }
    PairTable pairs = PairTable::of(host);
    for (const auto& s : k_subsets(host.vertex_count(), 3)) {
        ThresholdAnswer ans = subset_at_least(host, s, mode, threshold, pairs, o.sweep.packing);
        if (ans.verdict == Tri::Skip) {
            t.skip();
            return false;
        }
        if (ans.verdict == Tri::No) {
            t.fail({g6(origin), part + " S=" + set_str(s),
                    label + "(S)=" + std::to_string(ans.exact_value),
                    ">= " + std::to_string(threshold)});
            return false;
        }
    }
    t.pass();
    return true;
}

void prop5_check(const Graph& g, const CheckOptions& o, InstanceTally& t) {
    int n = g.vertex_count();
    if (n < 3 || g.edge_count() < 1) return;
    auto lam3 = sweep_value(g, 3, DisjointMode::EdgeDisjoint, o.sweep);
    if (!lam3) {
        t.skip();
        return;
    }
    Graph lg = line_graph(g).graph;
    if (lg.vertex_count() >= 3) {
        // (1) lambda_3(G) <= kappa_3(L(G))
        all_triples_at_least(lg, *lam3, DisjointMode::InternallyDisjoint, o, t, g, "part=1",
                             "kappa");
        // (2) lambda_3(L(G)) >= ceil(3/2 lambda_3(G) - 2)
        all_triples_at_least(lg, ceil_div(3LL * *lam3 - 4, 2), DisjointMode::EdgeDisjoint, o, t,
                             g, "part=2", "lambda");
    }
    // (3) kappa_3(L(L(G))) >= ceil(3/2 kappa_3(G) - 2), on small second iterates
    if (lg.edge_count() >= 3) {
        if (lg.edge_count() > o.linegraph_second_order_cap) {
            t.skip();
            return;
        }
        auto kap3 = sweep_value(g, 3, DisjointMode::InternallyDisjoint, o.sweep);
        if (!kap3) {
            t.skip();
            return;
        }
        Graph llg = line_graph(lg).graph;
        all_triples_at_least(llg, ceil_div(3LL * *kap3 - 4, 2), DisjointMode::InternallyDisjoint,
                             o, t, g, "part=3", "kappa");
    }
}

void iterated_check(const Graph& g, const CheckOptions& o, InstanceTally& t) {
    int n = g.vertex_count();
    if (n < 3) return;
    auto kap3 = sweep_value(g, 3, DisjointMode::InternallyDisjoint, o.sweep);
    if (!kap3) {
        t.skip();
        return;
    }
    Graph iterate = g;
    for (int kp = 1; kp <= 2; ++kp) {
        if (kp == 2 && iterate.edge_count() > o.linegraph_second_order_cap) {
            t.skip();
            return;
        }
        iterate = line_graph(iterate).graph;
        if (iterate.vertex_count() < 3) return;
        long long pow3 = kp == 1 ? 3 : 9, pow2 = kp == 1 ? 2 : 4;
        int lambda_threshold = ceil_div(pow3 * (*kap3 - 4) + 4 * pow2, pow2);
        long long fl3 = kp / 2 == 0 ? 1 : 3, fl2 = kp / 2 == 0 ? 1 : 2;
        int kappa_threshold = ceil_div(fl3 * (*kap3 - 4) + 4 * fl2, fl2);
        std::string part = "k'=" + std::to_string(kp);
        if (!all_triples_at_least(iterate, lambda_threshold, DisjointMode::EdgeDisjoint, o, t, g,
                                  part + " lambda-bound", "lambda"))
            return;
        if (!all_triples_at_least(iterate, kappa_threshold, DisjointMode::InternallyDisjoint, o,
                                  t, g, part + " kappa-bound", "kappa"))
            return;
    }
}

void conjecture3_scan_graph(const Graph& g, const CheckOptions& o, InstanceTally& t) {
    int n = g.vertex_count();
    if (n < 3) return;
    PairTable pairs = PairTable::of(g);
    for (const auto& s : k_subsets(n, 3)) {
        int kk = pairs.min_over(s) / 2;  // S is 2k-edge-connected for this k
        if (kk < 1) continue;
        ThresholdAnswer ans =
            subset_at_least(g, s, DisjointMode::EdgeDisjoint, kk, pairs, o.sweep.packing);
        if (ans.verdict == Tri::Skip) {
            t.skip();
            continue;
        }
        t.check(ans.verdict == Tri::Yes, [&] {
            return Counterexample{g6(g), "S=" + set_str(s) + " k=" + std::to_string(kk),
                                  "lambda(S)=" + std::to_string(ans.exact_value),
                                  ">= " + std::to_string(kk) + " (conjectured)"};
        });
    }
}

// ---------------------------------------------------------------------------
// instance-generating checks (the corpus argument is not consulted)

std::vector<EdgeSet> edge_subsets_up_to(int n, int max_size) {
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    std::vector<EdgeSet> out{{}};
    for (int size = 1; size <= max_size; ++size) {
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        int m = static_cast<int>(all.size());
        while (true) {
            EdgeSet set;
            for (int i : idx) set.push_back(all[static_cast<std::size_t>(i)]);
            out.push_back(std::move(set));
            int i = size - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - size + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

VerificationReport characterization_check(const std::string& id, const CorpusSpec& corpus,
                                          const CheckOptions& o) {
    auto start = std::chrono::steady_clock::now();
    struct Job {
        int n, k;
        EdgeSet m;
    };
    std::vector<Job> jobs;
    for (auto [n, k] : o.characterization_cases)
        for (auto& m : edge_subsets_up_to(n, ceil_half(k) + 1)) jobs.push_back({n, k, m});
    auto tallies = parallel_tally(jobs.size(), o.sweep.threads, [&](std::size_t i,
                                                                    InstanceTally& t) {
        const Job& job = jobs[i];
        Graph g = delete_edges(complete_graph(job.n), job.m);
        bool condition = job.k % 2 == 0 ? job.m.empty()
                                        : static_cast<int>(job.m.size()) <= (job.k - 1) / 2;
        condition = condition && g.connected();
        int top = job.n - ceil_half(job.k);
        for (DisjointMode mode : {DisjointMode::InternallyDisjoint, DisjointMode::EdgeDisjoint}) {
            auto v = sweep_value(g, job.k, mode, o.sweep);
            if (!v) {
                t.skip();
                continue;
            }
            bool attained = *v == top;
            t.check(attained == condition, [&] {
                return Counterexample{
                    g6(g),
                    "n=" + std::to_string(job.n) + " k=" + std::to_string(job.k) + " M=" +
                        edges_str(job.m) + " mode=" + to_string(mode),
                    std::to_string(*v) + (attained ? " (attains bound)" : " (below bound)"),
                    condition ? "= " + std::to_string(top) : "< " + std::to_string(top)};
            });
        }
    });
    return assemble(id, corpus.describe(), 0, std::move(tallies), false, start);
}

VerificationReport lemma56_check(const std::string& id, const CorpusSpec& corpus,
                                 const CheckOptions& o) {
    auto start = std::chrono::steady_clock::now();
    struct Job {
        int n, k;
        EdgeSet m;
    };
    std::vector<Job> jobs;
    for (auto [n, k] : o.characterization_cases) {
        if (k % 2 == 0 && k >= 4) {
            for (auto& m : edge_subsets_up_to(n, 1))
                if (m.size() == 1) jobs.push_back({n, k, m});
        } else if (k % 2 == 1) {
            for (auto& m : edge_subsets_up_to(n, (k + 1) / 2))
                if (static_cast<int>(m.size()) == (k + 1) / 2) jobs.push_back({n, k, m});
        }
    }
    auto tallies =
        parallel_tally(jobs.size(), o.sweep.threads, [&](std::size_t i, InstanceTally& t) {
            const Job& job = jobs[i];
            Graph g = delete_edges(complete_graph(job.n), job.m);
            // strict: lambda_k(K_n \ M) < n - k/2 (k even, |M|=1) and
            //         lambda_k(K_n \ M) < n - (k+1)/2 (k odd, |M|=(k+1)/2)
            int strict_below =
                job.k % 2 == 0 ? job.n - job.k / 2 : job.n - (job.k + 1) / 2;
            auto v = sweep_value(g, job.k, DisjointMode::EdgeDisjoint, o.sweep);
            if (!v) {
                t.skip();
                return;
            }
            t.check(*v < strict_below, [&] {
                return Counterexample{g6(g),
                                      "n=" + std::to_string(job.n) + " k=" +
                                          std::to_string(job.k) + " M=" + edges_str(job.m),
                                      "lambda_k=" + std::to_string(*v),
                                      "< " + std::to_string(strict_below)};
            });
        });
    return assemble(id, corpus.describe(), 0, std::move(tallies), false, start);
}

VerificationReport lemma7_check(const std::string& id, const CorpusSpec& corpus,
                                const CheckOptions& o) {
    auto start = std::chrono::steady_clock::now();
    struct Job {
        int n;
        EdgeSet m;
    };
    std::vector<Job> jobs;
    for (int n : o.lemma7_orders) {
        if (n % 2 == 0) continue;  // lemma is stated for odd order
        for (auto& m : edge_subsets_up_to(n, (n - 1) / 2)) jobs.push_back({n, m});
    }
    auto tallies =
        parallel_tally(jobs.size(), o.sweep.threads, [&](std::size_t i, InstanceTally& t) {
            const Job& job = jobs[i];
            Graph g = delete_edges(complete_graph(job.n), job.m);
            int want = (job.n - 1) / 2;
            auto trees = pack_spanning_trees(g, want);
            bool ok = trees.has_value();
            if (ok) {
                Packing p;
                p.terminals.resize(static_cast<std::size_t>(job.n));
                for (int v = 0; v < job.n; ++v) p.terminals[static_cast<std::size_t>(v)] = v;
                p.mode = DisjointMode::EdgeDisjoint;
                for (auto& tree : *trees) p.trees.push_back({p.terminals, std::move(tree)});
                ok = verify_packing(g, p).ok &&
                     std::all_of(p.trees.begin(), p.trees.end(), [&](const SteinerTree& st) {
                         return static_cast<int>(st.edges.size()) == job.n - 1;
                     });
            }
            t.check(ok, [&] {
                return Counterexample{g6(g), "n=" + std::to_string(job.n) + " M=" +
                                                 edges_str(job.m),
                                      ok ? "packed" : "no packing",
                                      std::to_string(want) + " edge-disjoint spanning trees"};
            });
        });
    return assemble(id, corpus.describe(), 0, std::move(tallies), false, start);
}

VerificationReport thm4_construction_check(const std::string& id, const CorpusSpec& corpus,
                                           const CheckOptions& o) {
    auto start = std::chrono::steady_clock::now();
    struct Job {
        int n, k;
        EdgeSet m;
        std::vector<int> s;
        bool crossing;  // case 2 configuration
    };
    std::vector<Job> jobs;
    for (int k : {3, 5})
        for (int n = k; n <= 9; ++n) {
            std::mt19937 rng(o.construction_seed + static_cast<std::uint32_t>(100 * n + k));
            for (int trial = 0; trial < o.construction_trials; ++trial) {
                std::vector<int> verts(static_cast<std::size_t>(n));
                for (int v = 0; v < n; ++v) verts[static_cast<std::size_t>(v)] = v;
                for (int i = 0; i < k; ++i) {
                    std::size_t j =
                        i + static_cast<std::size_t>(rng() % static_cast<std::uint32_t>(n - i));
                    std::swap(verts[static_cast<std::size_t>(i)], verts[j]);
                }
                std::vector<int> s(verts.begin(), verts.begin() + k);
                std::sort(s.begin(), s.end());
                std::vector<bool> in_s(static_cast<std::size_t>(n), false);
                for (int v : s) in_s[static_cast<std::size_t>(v)] = true;
                // alternate between case-1 pools (inside S or S-bar) and case-2
                // pools (at least one crossing edge) so both proof paths run
                bool want_crossing = (trial % 2 == 1) && n > k;
                std::vector<Edge> pool, crossing_pool;
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v) {
                        bool cross = in_s[static_cast<std::size_t>(u)] !=
                                     in_s[static_cast<std::size_t>(v)];
                        (cross ? crossing_pool : pool).push_back({u, v});
                    }
                int msize = (k - 1) / 2;
                EdgeSet m;
                std::set<Edge> chosen;
                if (want_crossing && !crossing_pool.empty()) {
                    Edge e = crossing_pool[rng() % crossing_pool.size()];
                    chosen.insert(e);
                }
                std::vector<Edge> all = pool;
                all.insert(all.end(), crossing_pool.begin(), crossing_pool.end());
                while (static_cast<int>(chosen.size()) < msize && !all.empty()) {
                    Edge e = all[rng() % all.size()];
                    if (!want_crossing) {
                        bool cross = in_s[static_cast<std::size_t>(e.first)] !=
                                     in_s[static_cast<std::size_t>(e.second)];
                        if (cross) continue;
                    }
                    chosen.insert(e);
                }
                m.assign(chosen.begin(), chosen.end());
                jobs.push_back({n, k, m, s, want_crossing});
            }
        }
    auto tallies =
        parallel_tally(jobs.size(), o.sweep.threads, [&](std::size_t i, InstanceTally& t) {
            const Job& job = jobs[i];
            try {
                Packing p = theorem4_packing(job.n, job.k, job.m, job.s);
                Graph g = delete_edges(complete_graph(job.n), job.m);
                PackingCheck pc = verify_packing(g, p);
                int want = job.n - (job.k + 1) / 2;
                bool ok = pc.ok && static_cast<int>(p.trees.size()) == want &&
                          p.mode == DisjointMode::InternallyDisjoint;
                t.check(ok, [&] {
                    return Counterexample{
                        g6(g),
                        "n=" + std::to_string(job.n) + " k=" + std::to_string(job.k) + " M=" +
                            edges_str(job.m) + " S=" + set_str(job.s),
                        pc.ok ? std::to_string(p.trees.size()) + " trees" : pc.violation,
                        std::to_string(want) + " verified internally disjoint trees"};
                });
            } catch (const std::exception& e) {
                t.fail({"", "n=" + std::to_string(job.n) + " k=" + std::to_string(job.k) +
                                " M=" + edges_str(job.m) + " S=" + set_str(job.s),
                        std::string("exception: ") + e.what(), "verified packing"});
            }
        });
    return assemble(id, corpus.describe(), 0, std::move(tallies), false, start);
}

}  // namespace

// ---------------------------------------------------------------------------

std::string CorpusSpec::describe() const {
    if (const auto* a = std::get_if<AtlasSource>(&source))
        return "atlas:" + a->path + ":max_n=" + std::to_string(a->max_n);
    if (const auto* r = std::get_if<RandomSource>(&source)) {
        std::ostringstream os;
        os << "random:n=" << r->n << ",p=" << r->p << ",trials=" << r->trials
           << ",seed=" << r->seed;
        return os.str();
    }
    if (const auto* f = std::get_if<FamilySource>(&source)) {
        std::string out = "families:[";
        for (std::size_t i = 0; i < f->specs.size(); ++i) {
            if (i) out += ";";
            out += f->specs[i].describe();
        }
        return out + "]";
    }
    const auto* e = std::get_if<ExplicitSource>(&source);
    return e->label + "(" + std::to_string(e->graphs.size()) + " graphs)";
}

std::vector<Graph> load_corpus(const CorpusSpec& spec) {
    if (const auto* a = std::get_if<AtlasSource>(&spec.source)) {
        std::ifstream in(a->path);
        if (!in) throw IoError("cannot open atlas file: " + a->path);
        std::vector<Graph> graphs;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            try {
                Graph g = parse_graph(line, GraphFormat::Graph6);
                if (g.vertex_count() <= a->max_n) graphs.push_back(std::move(g));
            } catch (const FormatError& e) {
                throw FormatError(a->path + ":" + std::to_string(lineno) + ": " + e.what(),
                                  e.byte_offset);
            }
        }
        return graphs;
    }
    if (const auto* r = std::get_if<RandomSource>(&spec.source)) {
        std::vector<Graph> graphs;
        for (int i = 0; i < r->trials; ++i)
            graphs.push_back(random_graph(r->n, r->p, r->seed + static_cast<std::uint32_t>(i)));
        return graphs;
    }
    if (const auto* f = std::get_if<FamilySource>(&spec.source)) {
        std::vector<Graph> graphs;
        for (const auto& fs : f->specs) graphs.push_back(construct_family(fs).graph);
        return graphs;
    }
    return std::get<ExplicitSource>(spec.source).graphs;
}

std::string VerificationReport::status() const {
    if (report_only) return failures > 0 ? "counterexample-found" : "report-only";
    if (failures > 0) return "counterexample-found";
    if (skipped > 0) return "skips-present";
    return "all-pass";
}

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids{
        "thm2_kappa_complete", "thm3_lambda_complete", "prop1_prop2_range", "obs1_chain",
        "obs2_monotone", "obs3_product", "thm4_thm5_characterization", "lemma5_lemma6_strict",
        "lemma7_packing", "thm6_nordhaus_gaddum", "prop3_upper", "prop4_lower",
        "planar_corollary", "lemma1_kriesell", "lemma2_linegraph", "lemma3_bipartite_stp",
        "prop5_linegraph", "iterated_linegraph", "corollary2_spanning", "conjecture3_scan",
        "thm4_construction"};
    return ids;
}

VerificationReport run_check(const std::string& check_id, const CorpusSpec& corpus,
                             const CheckOptions& options) {
    if (check_id == "thm2_kappa_complete")
        return run_per_graph(check_id, corpus, options, false, false,
                             [](const Graph& g, const CheckOptions& o, InstanceTally& t) {
                                 complete_formula_check(g, o, t,
                                                        DisjointMode::InternallyDisjoint);
                             });
    if (check_id == "thm3_lambda_complete")
        return run_per_graph(check_id, corpus, options, false, false,
                             [](const Graph& g, const CheckOptions& o, InstanceTally& t) {
                                 complete_formula_check(g, o, t, DisjointMode::EdgeDisjoint);
                             });
    if (check_id == "prop1_prop2_range")
        return run_per_graph(check_id, corpus, options, true, false, range_check);
    if (check_id == "obs1_chain")
        return run_per_graph(check_id, corpus, options, true, false, obs1_check);
    if (check_id == "obs2_monotone")
        return run_per_graph(check_id, corpus, options, false, false, obs2_check);
    if (check_id == "obs3_product")
        return run_per_graph(check_id, corpus, options, false, false, obs3_check);
    if (check_id == "thm4_thm5_characterization")
        return characterization_check(check_id, corpus, options);
    if (check_id == "lemma5_lemma6_strict") return lemma56_check(check_id, corpus, options);
    if (check_id == "lemma7_packing") return lemma7_check(check_id, corpus, options);
    if (check_id == "thm6_nordhaus_gaddum")
        return run_per_graph(check_id, corpus, options, false, false, thm6_check);
    if (check_id == "prop3_upper")
        return run_per_graph(check_id, corpus, options, false, false, prop3_check);
    if (check_id == "prop4_lower")
        return run_per_graph(check_id, corpus, options, true, false, prop4_check);
    if (check_id == "planar_corollary")
        return run_per_graph(check_id, corpus, options, true, false, planar_corollary_check);
    if (check_id == "lemma1_kriesell")
        return run_per_graph(check_id, corpus, options, false, false, lemma1_check);
    if (check_id == "lemma2_linegraph")
        return run_per_graph(check_id, corpus, options, true, false, lemma2_check);
    if (check_id == "lemma3_bipartite_stp")
        return run_per_graph(check_id, corpus, options, false, false, lemma3_check);
    if (check_id == "prop5_linegraph")
        return run_per_graph(check_id, corpus, options, true, false, prop5_check);
    if (check_id == "iterated_linegraph")
        return run_per_graph(check_id, corpus, options, true, false, iterated_check);
    if (check_id == "corollary2_spanning")
        return run_per_graph(check_id, corpus, options, true, false, corollary2_check);
    if (check_id == "conjecture3_scan")
        return run_per_graph(check_id, corpus, options, false, true, conjecture3_scan_graph);
    if (check_id == "thm4_construction")
        return thm4_construction_check(check_id, corpus, options);
    throw ArgumentError("unknown check id '" + check_id + "'");
}

std::string report_to_json(const VerificationReport& report, bool include_timing) {
    nlohmann::json j;
    j["check"] = report.check_id;
    j["corpus"] = report.corpus;
    j["corpus_size"] = report.corpus_size;
    j["evaluated"] = report.evaluated;
    j["passes"] = report.passes;
    j["failures"] = report.failures;
    j["skipped"] = report.skipped;
    j["status"] = report.status();
    j["report_only"] = report.report_only;
    nlohmann::json cex = nlohmann::json::array();
    for (const auto& c : report.counterexamples) {
        nlohmann::json e;
        e["graph6"] = c.graph6;
        e["params"] = c.params;
        e["computed"] = c.computed;
        e["expected"] = c.expected;
        cex.push_back(e);
    }
    j["counterexamples"] = cex;
    if (include_timing) j["wall_ms"] = report.wall_ms;
    return j.dump(2) + "\n";
}

std::string report_table(const VerificationReport& report) {
    std::ostringstream os;
    os << report.check_id << "  [" << report.status() << "]\n"
       << "  corpus:    " << report.corpus << " (" << report.corpus_size << " graphs)\n"
       << "  evaluated: " << report.evaluated << "  passes: " << report.passes
       << "  failures: " << report.failures << "  skipped: " << report.skipped << "\n";
    for (const auto& c : report.counterexamples)
        os << "  counterexample: " << c.graph6 << "  " << c.params << "  computed " << c.computed
           << ", expected " << c.expected << "\n";
    return os.str();
}

}  // namespace treepack
