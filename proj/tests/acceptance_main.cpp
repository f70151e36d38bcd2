// Acceptance suite: every release gate runs here, one pass/fail line per
// criterion, then a determinism re-run at higher parallelism that must
// reproduce each canonical report byte for byte.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "treepack/certificates.hpp"
#include "treepack/checks.hpp"
#include "treepack/connectivity.hpp"
#include "treepack/families.hpp"
#include "treepack/sweep.hpp"

using namespace treepack;

namespace {

struct CriterionResult {
    bool pass = false;
    std::string detail;
    std::string canonical;  // byte-compared across parallelism levels
};

using CriterionFn = std::function<CriterionResult(int threads)>;

std::vector<Graph> atlas_upto7() {
    static std::vector<Graph> cached;
    if (cached.empty())
        for (int n = 2; n <= 7; ++n)
            for (auto& g : test_util::atlas(n)) cached.push_back(std::move(g));
    return cached;
}

CorpusSpec atlas_corpus_upto7(const char* label) {
    ExplicitSource src;
    src.label = label;
    src.graphs = atlas_upto7();
    CorpusSpec spec;
    spec.source = std::move(src);
    return spec;
}

std::string summarize(const VerificationReport& r) { return report_to_json(r, false); }

bool all_pass(const VerificationReport& r) {
    return r.failures == 0 && r.skipped == 0 && r.passes > 0;
}

// ---------------------------------------------------------------------------

CriterionResult criterion1(int threads) {
    CheckOptions opt;
    opt.k_min = 2;
    opt.k_max = 7;
    opt.sweep.threads = threads;
    std::vector<FamilySpec> completes;
    for (long n = 2; n <= 7; ++n) completes.push_back({"complete", {{"n", n}}, {}, 0});
    CorpusSpec corpus;
    corpus.source = FamilySource{completes};
    VerificationReport lambda = run_check("thm3_lambda_complete", corpus, opt);
    VerificationReport kappa = run_check("thm2_kappa_complete", corpus, opt);
    CriterionResult res;
    res.pass = all_pass(lambda) && all_pass(kappa);
    res.detail = "lambda_k and kappa_k of K_n for 2<=k<=n<=7: " + std::to_string(lambda.passes) +
                 "+" + std::to_string(kappa.passes) + " exact equalities";
    res.canonical = summarize(lambda) + summarize(kappa);
    return res;
}

CriterionResult criterion2(int threads) {
    CheckOptions opt;
    opt.sweep.threads = threads;
    std::vector<FamilySpec> fams;
    for (long a = 2; a <= 5; ++a)
        for (long b = a; b <= 5; ++b)
            fams.push_back({"complete_bipartite", {{"a", a}, {"b", b}}, {}, 0});
    CorpusSpec corpus;
    corpus.source = FamilySource{fams};
    VerificationReport rep = run_check("lemma3_bipartite_stp", corpus, opt);
    CriterionResult res;
    res.pass = all_pass(rep) && rep.passes == fams.size();
    res.detail = "stp(K_{a,b}) = floor(ab/(a+b-1)) and packing = partition on " +
                 std::to_string(rep.passes) + "/10 instances";
    res.canonical = summarize(rep);
    return res;
}

CriterionResult criterion3(int threads) {
    CheckOptions opt;
    opt.sweep.threads = threads;
    opt.characterization_cases = {{6, 3}};
    CorpusSpec corpus;
    corpus.source = ExplicitSource{{}, "characterization"};
    VerificationReport rep = run_check("thm4_thm5_characterization", corpus, opt);
    CriterionResult res;
    // 576 edge sets, two modes each
    res.pass = all_pass(rep) && rep.evaluated == 2 * 576;
    res.detail = "lambda_3(K_6\\M) = 4 iff |M| <= 1, exhaustive over " +
                 std::to_string(rep.evaluated / 2) + " raw edge sets with |M| <= 3";
    res.canonical = summarize(rep);
    return res;
}

CriterionResult criterion4(int threads) {
    CheckOptions opt;
    opt.sweep.threads = threads;
    opt.construction_trials = 50;
    CorpusSpec corpus;
    corpus.source = ExplicitSource{{}, "thm4-construction"};
    VerificationReport rep = run_check("thm4_construction", corpus, opt);
    CriterionResult res;
    res.pass = all_pass(rep);
    res.detail = "theorem-4 constructive packings verified on " + std::to_string(rep.passes) +
                 " seeded (M,S) configurations, zero invariant errors";
    res.canonical = summarize(rep);
    return res;
}

CriterionResult criterion5(int threads) {
    SweepOptions opt;
    opt.threads = threads;
    CriterionResult res;
    res.pass = true;
    std::ostringstream canon;
    std::ostringstream detail;
    for (int r = 0; r <= 3; ++r) {
        auto built = construct_family({"figure2_family", {{"s", 1}, {"r", r}}, {}, 0});
        int lam = edge_connectivity(built.graph).value;
        ConnectivityResult l3 =
            generalized_connectivity(built.graph, 3, DisjointMode::EdgeDisjoint, opt);
        bool ok = lam == 4 + r && l3.value == 3 + (r + 1) / 2 &&
                  l3.status == SolveStatus::Exact &&
                  l3.witness_terminals == std::vector<int>{0, 1, 2} &&
                  verify_packing(built.graph, l3.certificate).ok;
        res.pass = res.pass && ok;
        detail << "r=" << r << ": lambda=" << lam << " lambda_3=" << l3.value << "; ";
        canon << "figure2(1," << r << ") lambda=" << lam << "\n" << certificate_to_json(l3);
    }
    res.detail = "figure2(1,r) with witness {u,v,w}: " + detail.str();
    res.canonical = canon.str();
    return res;
}

CriterionResult criterion6(int threads) {
    SweepOptions opt;
    opt.threads = threads;
    CriterionResult res;
    res.pass = true;
    std::ostringstream canon;
    for (int t = 1; t <= 3; ++t) {
        Graph h = construct_family({"h_graph", {{"t", t}}, {}, 0}).graph;
        int lam = edge_connectivity(h).value;
        ConnectivityResult l3 = generalized_connectivity(h, 3, DisjointMode::EdgeDisjoint, opt);
        bool ok = lam == 3 && l3.value == 2 && l3.status == SolveStatus::Exact;
        res.pass = res.pass && ok;
        canon << "h_graph(" << t << ") lambda=" << lam << "\n" << certificate_to_json(l3);
    }
    Graph join = construct_family({"join_family", {{"k", 3}, {"n", 9}}, {}, 0}).graph;
    ConnectivityResult k3 = generalized_connectivity(join, 3, DisjointMode::InternallyDisjoint, opt);
    ConnectivityResult l3 = generalized_connectivity(join, 3, DisjointMode::EdgeDisjoint, opt);
    int kap = vertex_connectivity(join).value;
    int lam = edge_connectivity(join).value;
    int delta = join.min_degree();
    bool ok = k3.value == 3 && l3.value == 3 && kap == 3 && lam == 3 && delta == 3 &&
              k3.status == SolveStatus::Exact && l3.status == SolveStatus::Exact;
    res.pass = res.pass && ok;
    canon << "join(3,9) kappa=" << kap << " lambda=" << lam << " delta=" << delta << "\n"
          << certificate_to_json(k3) << certificate_to_json(l3);
    res.detail = "h_graph(1..3): lambda=3, lambda_3=2; join_family(3,9): all five equal 3";
    res.canonical = canon.str();
    return res;
}

CriterionResult criterion7(int threads) {
    SweepOptions opt;
    opt.threads = threads;
    auto [g, gbar] = example3_pair(1);
    ConnectivityResult a =
        generalized_connectivity(g.graph, 5, DisjointMode::InternallyDisjoint, opt);
    ConnectivityResult b =
        generalized_connectivity(gbar.graph, 5, DisjointMode::InternallyDisjoint, opt);
    CriterionResult res;
    res.pass = a.value == 1 && b.value == 1 && a.value + b.value == 2 &&
               a.value * b.value == 1 && a.status == SolveStatus::Exact &&
               b.status == SolveStatus::Exact;
    res.detail = "example3(1): kappa_5(G) = kappa_5(co-G) = 1, sum 2 = n - ceil(n/2), product 1";
    res.canonical = certificate_to_json(a) + certificate_to_json(b);
    return res;
}

CriterionResult criterion8(int threads) {
    CheckOptions opt;
    opt.k_min = 3;
    opt.k_max = 3;
    opt.sweep.threads = threads;
    CorpusSpec corpus = atlas_corpus_upto7("atlas:n<=7");
    std::size_t connected = 0;
    for (const auto& g : std::get<ExplicitSource>(corpus.source).graphs)
        if (g.connected()) ++connected;
    CriterionResult res;
    res.pass = connected >= 995;
    std::ostringstream canon;
    std::ostringstream detail;
    detail << connected << " connected graphs; ";
    for (const char* id : {"obs1_chain", "prop1_prop2_range", "prop3_upper", "prop4_lower",
                           "thm6_nordhaus_gaddum", "corollary2_spanning"}) {
        VerificationReport rep = run_check(id, corpus, opt);
        res.pass = res.pass && rep.failures == 0 && rep.skipped == 0 && rep.passes > 0;
        detail << id << "=" << rep.passes << "p/" << rep.failures << "f ";
        canon << summarize(rep);
    }
    res.detail = "inequality sweep, k=3, n<=7 atlas: " + detail.str();
    res.canonical = canon.str();
    return res;
}

CriterionResult criterion9(int threads) {
    CheckOptions opt;
    opt.sweep.threads = threads;
    ExplicitSource src;
    src.label = "atlas:n<=7,m<=9";
    for (const auto& g : atlas_upto7())
        if (g.connected() && g.edge_count() <= 9) src.graphs.push_back(g);
    // sparse orders beyond the atlas range, still within nine edges
    for (long n = 8; n <= 10; ++n) {
        src.graphs.push_back(construct_family({"path", {{"n", n}}, {}, 0}).graph);
        src.graphs.push_back(construct_family({"star", {{"n", n}}, {}, 0}).graph);
        if (n <= 9)
            src.graphs.push_back(construct_family({"cycle", {{"n", n}}, {}, 0}).graph);
    }
    CorpusSpec corpus;
    corpus.source = std::move(src);
    VerificationReport rep = run_check("prop5_linegraph", corpus, opt);
    CriterionResult res;
    res.pass = rep.failures == 0 && rep.passes > 0;
    res.detail = "line-graph bounds over " + std::to_string(rep.corpus_size) +
                 " graphs with at most 9 edges: " + std::to_string(rep.passes) + " passes, " +
                 std::to_string(rep.skipped) + " skipped second iterates";
    res.canonical = summarize(rep);
    return res;
}

CriterionResult criterion10(int threads) {
    CheckOptions opt;
    opt.sweep.threads = threads;
    opt.t_values = {1, 2, 3};
    VerificationReport rep = run_check("lemma1_kriesell", atlas_corpus_upto7("atlas:n<=7"), opt);
    CriterionResult res;
    res.pass = rep.failures == 0 && rep.skipped == 0 && rep.passes > 0;
    res.detail = "Kriesell f_3 thresholds t in {1,2,3} over the n<=7 atlas: " +
                 std::to_string(rep.passes) + " guarded triples, zero violations";
    res.canonical = summarize(rep);
    return res;
}

CriterionResult criterion11(int threads) {
    CheckOptions opt;
    opt.sweep.threads = threads;
    CorpusSpec corpus;
    corpus.source = RandomSource{8, 0.5, 100, 1};
    VerificationReport rep = run_check("conjecture3_scan", corpus, opt);
    CriterionResult res;
    res.pass = rep.report_only && rep.failures == 0 && rep.status() == "report-only";
    res.detail = "conjecture scan on random(8,0.5,100,seed=1): " + std::to_string(rep.passes) +
                 " supported instances, 0 counterexamples, status '" + rep.status() + "'";
    res.canonical = summarize(rep);
    return res;
}

}  // namespace

int main(int argc, char** argv) {
    int rerun_threads = 4;
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--rerun-threads" && i + 1 < argc)
            rerun_threads = std::atoi(argv[++i]);
        else
            only.push_back(std::atoi(arg.c_str()));
    }

    std::vector<std::pair<std::string, CriterionFn>> criteria{
        {"lambda_k(K_n) and kappa_k(K_n) equal n-ceil(k/2), 2<=k<=n<=7", criterion1},
        {"spanning tree packing of K_{a,b} matches floor(ab/(a+b-1)), both routes", criterion2},
        {"theorem-5 characterization for (n,k)=(6,3), exhaustive in M", criterion3},
        {"theorem-4 constructive packings verify for n<=9, k in {3,5}", criterion4},
        {"figure-2 family: lambda = 4+r, lambda_3 = 3+ceil(r/2), witness {u,v,w}", criterion5},
        {"h_graph lambda/lambda_3 and join family five-way equality", criterion6},
        {"example-3 pair attains the Nordhaus-Gaddum bounds at k=n", criterion7},
        {"inequality sweep over the connected n<=7 atlas at k=3", criterion8},
        {"proposition-5 line-graph bounds on graphs with at most 9 edges", criterion9},
        {"Kriesell lemma-1 thresholds over the n<=7 atlas", criterion10},
        {"conjecture scan is report-only and finds no counterexample", criterion11},
    };

    bool all_ok = true;
    std::vector<std::string> canonical(criteria.size());
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (!only.empty() && std::find(only.begin(), only.end(), static_cast<int>(i + 1)) ==
                                 only.end())
            continue;
        auto start = std::chrono::steady_clock::now();
        CriterionResult res = criteria[i].second(1);
        double sec =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        canonical[i] = res.canonical;
        all_ok = all_ok && res.pass;
        std::printf("%s criterion %zu: %s -- %s (%.1fs)\n", res.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), res.detail.c_str(), sec);
        std::fflush(stdout);
    }

    if (only.empty()) {
        auto start = std::chrono::steady_clock::now();
        bool identical = true;
        for (std::size_t i = 0; i < criteria.size(); ++i) {
            CriterionResult res = criteria[i].second(rerun_threads);
            if (res.canonical != canonical[i]) {
                identical = false;
                std::printf("     criterion %zu report differs at parallelism %d\n", i + 1,
                            rerun_threads);
            }
        }
        double sec =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all_ok = all_ok && identical;
        std::printf("%s criterion 12: criteria 1-11 re-run at parallelism %d are byte-identical "
                    "(%.1fs)\n",
                    identical ? "PASS" : "FAIL", rerun_threads, sec);
    }

    return all_ok ? 0 : 1;
}
