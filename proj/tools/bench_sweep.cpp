// Benchmark: sequential reference sweep vs the blocked OpenMP kernel on a few
// representative instances. Both must report identical values.

#include <chrono>
#include <functional>
#include <cstdio>
#include <string>
#include <vector>

#include "treepack/families.hpp"
#include "treepack/sweep.hpp"

using namespace treepack;

namespace {

double time_ms(const std::function<ConnectivityResult()>& fn, ConnectivityResult& out) {
    auto start = std::chrono::steady_clock::now();
    out = fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

struct Case {
    std::string name;
    Graph graph;
    int k;
    DisjointMode mode;
};

}  // namespace

int main(int argc, char** argv) {
    int threads = argc > 1 ? std::atoi(argv[1]) : 4;

    std::vector<Case> cases;
    cases.push_back({"lambda_3(K_7)", construct_family({"complete", {{"n", 7}}}).graph, 3,
                     DisjointMode::EdgeDisjoint});
    cases.push_back({"kappa_4(K_7)", construct_family({"complete", {{"n", 7}}}).graph, 4,
                     DisjointMode::InternallyDisjoint});
    cases.push_back({"lambda_3(figure2(1,1))",
                     construct_family({"figure2_family", {{"s", 1}, {"r", 1}}}).graph, 3,
                     DisjointMode::EdgeDisjoint});
    cases.push_back({"lambda_3(h_graph(3))", construct_family({"h_graph", {{"t", 3}}}).graph, 3,
                     DisjointMode::EdgeDisjoint});
    cases.push_back({"lambda_3(join_family(3,9))",
                     construct_family({"join_family", {{"k", 3}, {"n", 9}}}).graph, 3,
                     DisjointMode::EdgeDisjoint});

    std::printf("%-28s %12s %14s %14s  %s\n", "instance", "serial ms", "blocked(1) ms",
                ("blocked(" + std::to_string(threads) + ") ms").c_str(), "value");
    for (const Case& c : cases) {
        SweepOptions serial_opts;
        ConnectivityResult r0, r1, rp;
        double t0 = time_ms(
            [&] { return generalized_connectivity_serial(c.graph, c.k, c.mode, serial_opts); },
            r0);
        double t1 = time_ms(
            [&] { return generalized_connectivity(c.graph, c.k, c.mode, serial_opts); }, r1);
        SweepOptions par_opts;
        par_opts.threads = threads;
        double tp =
            time_ms([&] { return generalized_connectivity(c.graph, c.k, c.mode, par_opts); }, rp);
        bool agree = r0.value == r1.value && r1.value == rp.value &&
                     r0.witness_terminals == rp.witness_terminals;
        std::printf("%-28s %12.1f %14.1f %14.1f  %d%s\n", c.name.c_str(), t0, t1, tp, r0.value,
                    agree ? "" : "  [MISMATCH]");
        if (!agree) return 1;
    }
    return 0;
}
