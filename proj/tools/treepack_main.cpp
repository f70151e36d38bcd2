#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "treepack/certificates.hpp"
#include "treepack/checks.hpp"
#include "treepack/errors.hpp"
#include "treepack/families.hpp"
#include "treepack/sweep.hpp"

namespace {

using namespace treepack;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    out << data;
}

GraphFormat format_for(const std::string& path, const std::string& format_flag) {
    if (format_flag == "g6" || format_flag == "graph6") return GraphFormat::Graph6;
    if (format_flag == "edgelist" || format_flag == "el") return GraphFormat::EdgeList;
    if (!format_flag.empty()) throw ArgumentError("unknown format '" + format_flag + "'");
    if (path.size() >= 3 && path.substr(path.size() - 3) == ".g6") return GraphFormat::Graph6;
    if (path.size() >= 3 && path.substr(path.size() - 3) == ".el") return GraphFormat::EdgeList;
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".txt") return GraphFormat::EdgeList;
    throw ArgumentError("cannot infer graph format from '" + path + "'; pass --format");
}

Graph load_graph(const std::string& path, const std::string& format_flag) {
    std::string text = read_input(path);
    GraphFormat fmt;
    if (format_flag.empty() && path == "-") {
        // guess: an edge list always starts with a digit and contains spaces
        fmt = text.find(' ') != std::string::npos ? GraphFormat::EdgeList : GraphFormat::Graph6;
    } else {
        fmt = format_for(path, format_flag);
    }
    if (fmt == GraphFormat::Graph6) {
        // take the first non-empty line
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) return parse_graph(line, GraphFormat::Graph6);
        throw FormatError("no graph6 line in input", 0);
    }
    return parse_graph(text, GraphFormat::EdgeList);
}

std::vector<int> parse_terminals(const std::string& list) {
    std::vector<int> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    if (out.size() < 2) throw ArgumentError("terminal list needs at least two vertices");
    return out;
}

EdgeSet parse_edge_list_arg(const std::string& list) {
    EdgeSet out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto dash = item.find('-');
        if (dash == std::string::npos)
            throw ArgumentError("edge must look like u-v: '" + item + "'");
        out.push_back(make_edge(std::stoi(item.substr(0, dash)),
                                std::stoi(item.substr(dash + 1))));
    }
    return out;
}

FamilySpec parse_family_call(const std::string& call) {
    FamilySpec spec;
    auto open = call.find('(');
    if (open == std::string::npos) {
        spec.family = call;
        return spec;
    }
    if (call.back() != ')') throw ArgumentError("malformed family spec '" + call + "'");
    spec.family = call.substr(0, open);
    std::string args = call.substr(open + 1, call.size() - open - 2);
    std::stringstream ss(args);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ArgumentError("family argument needs k=v: " + item);
        std::string key = item.substr(0, eq), value = item.substr(eq + 1);
        if (key == "seed")
            spec.seed = static_cast<std::uint32_t>(std::stoul(value));
        else if (key == "missing")
            spec.edge_param = parse_edge_list_arg(value);
        else
            spec.params[key] = std::stol(value);
    }
    return spec;
}

CorpusSpec parse_corpus(const std::string& text) {
    CorpusSpec spec;
    auto colon = text.find(':');
    std::string kind = text.substr(0, colon == std::string::npos ? text.size() : colon);
    std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (kind == "atlas") {
        AtlasSource src;
        auto opt = rest.find(":max_n=");
        if (opt != std::string::npos) {
            src.max_n = std::stoi(rest.substr(opt + 7));
            rest = rest.substr(0, opt);
        }
        src.path = rest;
        spec.source = src;
        return spec;
    }
    if (kind == "random") {
        RandomSource src;
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos) throw ArgumentError("random corpus needs k=v pairs");
            std::string key = item.substr(0, eq), value = item.substr(eq + 1);
            if (key == "n")
                src.n = std::stoi(value);
            else if (key == "p")
                src.p = std::stod(value);
            else if (key == "trials")
                src.trials = std::stoi(value);
            else if (key == "seed")
                src.seed = static_cast<std::uint32_t>(std::stoul(value));
            else
                throw ArgumentError("unknown random corpus key '" + key + "'");
        }
        spec.source = src;
        return spec;
    }
    if (kind == "families") {
        FamilySource src;
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ';'))
            if (!item.empty()) src.specs.push_back(parse_family_call(item));
        spec.source = src;
        return spec;
    }
    if (kind == "file") {
        ExplicitSource src;
        src.label = "file:" + rest;
        std::string text2 = read_input(rest);
        std::istringstream in(text2);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) src.graphs.push_back(parse_graph(line, GraphFormat::Graph6));
        spec.source = src;
        return spec;
    }
    throw ArgumentError("unknown corpus kind '" + kind + "' (atlas|random|families|file)");
}

struct ComputeArgs {
    std::string param = "lambda";
    int k = 2;
    std::string terminals;
    std::string input;
    std::string format;
    std::string certificate_path;
    std::size_t budget_trees = SearchBudget{}.max_trees;
    std::size_t budget_nodes = SearchBudget{}.max_nodes;
    int threads = 1;
};

ConnectivityResult run_compute(const ComputeArgs& a) {
    Graph g = load_graph(a.input, a.format);
    DisjointMode mode =
        a.param == "kappa" ? DisjointMode::InternallyDisjoint : DisjointMode::EdgeDisjoint;
    SweepOptions opts;
    opts.packing.budget.max_trees = a.budget_trees;
    opts.packing.budget.max_nodes = a.budget_nodes;
    opts.threads = a.threads;
    if (!a.terminals.empty()) {
        std::vector<int> s = parse_terminals(a.terminals);
        if (static_cast<int>(s.size()) != a.k && a.k != 2)
            throw ArgumentError("terminal list size differs from -k");
        return max_tree_packing(g, s, mode, opts.packing);
    }
    return generalized_connectivity(g, a.k, mode, opts);
}

void add_compute_flags(CLI::App* cmd, ComputeArgs& a) {
    cmd->add_option("--param", a.param, "kappa or lambda")
        ->check(CLI::IsMember({"kappa", "lambda"}))
        ->required();
    cmd->add_option("-k,--k", a.k, "terminal set size")->required();
    cmd->add_option("--terminals", a.terminals,
                    "comma-separated vertex list: query this single set instead of the minimum");
    cmd->add_option("--budget-trees", a.budget_trees, "max minimal Steiner trees per set");
    cmd->add_option("--budget-nodes", a.budget_nodes, "max backtracking nodes per set");
    cmd->add_option("--threads", a.threads, "parallel workers for the subset sweep");
    cmd->add_option("--format", a.format, "g6 or edgelist (default: by extension)");
    cmd->add_option("input", a.input, "graph file, or - for stdin")->required();
}

int main_impl(int argc, char** argv) {
    CLI::App app{"exact generalized connectivity solver and certificate tool"};
    app.require_subcommand(1);

    ComputeArgs compute_args;
    CLI::App* compute = app.add_subcommand(
        "compute", "value of kappa_k/lambda_k (default budgets shown in --help)");
    add_compute_flags(compute, compute_args);
    compute->add_option("--certificate", compute_args.certificate_path,
                        "also write the JSON certificate here");

    ComputeArgs certify_args;
    CLI::App* certify = app.add_subcommand("certify", "full JSON certificate to stdout");
    add_compute_flags(certify, certify_args);
    std::string certify_out;
    certify->add_option("-o,--output", certify_out, "output file (default stdout)");

    struct {
        std::string family, args, format = "g6", output, meta;
        std::uint32_t seed = 0;
    } construct_args;
    CLI::App* construct = app.add_subcommand("construct", "build a named graph family");
    construct->add_option("--family", construct_args.family, "family name")->required();
    construct->add_option("--args", construct_args.args, "parameters, e.g. t=2 or s=1,r=0");
    construct->add_option("--seed", construct_args.seed, "seed for randomized members");
    construct->add_option("--format", construct_args.format, "g6 or edgelist")
        ->check(CLI::IsMember({"g6", "edgelist"}));
    construct->add_option("-o,--output", construct_args.output, "output file (default stdout)");
    construct->add_option("--meta", construct_args.meta,
                          "write declared parameters as JSON to this file");

    struct {
        std::string kind, terminals, input, format;
    } bound_args;
    CLI::App* bound = app.add_subcommand("bound", "upper-bound certificate");
    bound->add_option("--kind", bound_args.kind, "counting or tutte")
        ->check(CLI::IsMember({"counting", "tutte"}))
        ->required();
    bound->add_option("--terminals", bound_args.terminals, "terminals for the counting bound");
    bound->add_option("--format", bound_args.format, "g6 or edgelist");
    bound->add_option("input", bound_args.input, "graph file, or - for stdin")->required();

    struct {
        std::string check, corpus, json_path;
        bool timing = false;
        int k_min = 3, k_max = 5, threads = 1;
        std::size_t budget_trees = SearchBudget{}.max_trees;
        std::size_t budget_nodes = SearchBudget{}.max_nodes;
    } verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run a named check over a corpus");
    verify->add_option("--check", verify_args.check, "check id (see --list)")->required();
    verify->add_option("--corpus", verify_args.corpus,
                       "atlas:PATH[:max_n=N] | random:n=..,p=..,trials=..,seed=.. | "
                       "families:spec;spec | file:PATH")
        ->required();
    verify->add_option("--json", verify_args.json_path, "write the canonical JSON report here");
    verify->add_flag("--timing", verify_args.timing, "include wall time in the JSON report");
    verify->add_option("--k-min", verify_args.k_min, "smallest k for k-quantified checks");
    verify->add_option("--k-max", verify_args.k_max, "largest k for k-quantified checks");
    verify->add_option("--threads", verify_args.threads, "parallel workers over the corpus");
    verify->add_option("--budget-trees", verify_args.budget_trees, "per-set tree budget");
    verify->add_option("--budget-nodes", verify_args.budget_nodes, "per-set node budget");

    CLI::App* list_checks = app.add_subcommand("list-checks", "print the known check ids");

    struct {
        std::string certificate, input, format;
    } vc_args;
    CLI::App* vc = app.add_subcommand("verify-certificate",
                                      "re-verify a JSON certificate against its graph");
    vc->add_option("--certificate", vc_args.certificate, "certificate JSON file")->required();
    vc->add_option("--format", vc_args.format, "g6 or edgelist");
    vc->add_option("input", vc_args.input, "graph file, or - for stdin")->required();

    CLI11_PARSE(app, argc, argv);

    if (compute->parsed()) {
        ConnectivityResult res = run_compute(compute_args);
        std::cout << res.value << " "
                  << (res.status == SolveStatus::Exact ? "exact" : "lower-bound-only") << "\n";
        if (!compute_args.certificate_path.empty())
            write_output(compute_args.certificate_path, certificate_to_json(res));
        return res.status == SolveStatus::Exact ? kExitOk : kExitBudget;
    }
    if (certify->parsed()) {
        ConnectivityResult res = run_compute(certify_args);
        write_output(certify_out, certificate_to_json(res));
        return res.status == SolveStatus::Exact ? kExitOk : kExitBudget;
    }
    if (construct->parsed()) {
        FamilySpec spec = parse_family_call(
            construct_args.family +
            (construct_args.args.empty() ? "" : "(" + construct_args.args + ")"));
        if (construct_args.seed) spec.seed = construct_args.seed;
        ConstructedGraph built = construct_family(spec);
        GraphFormat fmt =
            construct_args.format == "g6" ? GraphFormat::Graph6 : GraphFormat::EdgeList;
        std::string text = serialize_graph(built.graph, fmt);
        if (fmt == GraphFormat::Graph6) text += "\n";
        write_output(construct_args.output, text);
        if (!construct_args.meta.empty()) {
            nlohmann::json meta;
            for (const auto& [key, value] : built.declared) meta[key] = value;
            write_output(construct_args.meta, meta.dump(2) + "\n");
        }
        return kExitOk;
    }
    if (bound->parsed()) {
        Graph g = load_graph(bound_args.input, bound_args.format);
        nlohmann::json j;
        if (bound_args.kind == "counting") {
            if (bound_args.terminals.empty())
                throw ArgumentError("counting bound needs --terminals");
            CountingBoundRecord rec = counting_upper_bound(g, parse_terminals(bound_args.terminals));
            j["kind"] = "counting";
            j["terminals"] = rec.terminals;
            j["e_in"] = rec.e_in;
            j["e_cut"] = rec.e_cut;
            j["x_star"] = rec.x_star;
            j["bound"] = rec.bound;
        } else {
            auto [value, cert] = tutte_partition_number(g);
            j["kind"] = "partition";
            j["blocks"] = cert.blocks;
            j["crossing"] = cert.crossing;
            j["bound"] = value;
        }
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    if (list_checks->parsed()) {
        for (const auto& id : check_ids()) std::cout << id << "\n";
        return kExitOk;
    }
    if (verify->parsed()) {
        CorpusSpec corpus = parse_corpus(verify_args.corpus);
        CheckOptions options;
        options.k_min = verify_args.k_min;
        options.k_max = verify_args.k_max;
        options.sweep.threads = verify_args.threads;
        options.sweep.packing.budget.max_trees = verify_args.budget_trees;
        options.sweep.packing.budget.max_nodes = verify_args.budget_nodes;
        VerificationReport report = run_check(verify_args.check, corpus, options);
        std::cout << report_table(report);
        if (!verify_args.json_path.empty())
            write_output(verify_args.json_path, report_to_json(report, verify_args.timing));
        if (report.failures > 0) return kExitCounterexample;
        if (report.skipped > 0) return kExitBudget;
        return kExitOk;
    }
    if (vc->parsed()) {
        Graph g = load_graph(vc_args.input, vc_args.format);
        ConnectivityResult res = certificate_from_json(read_input(vc_args.certificate));
        CertificateCheck check = verify_certificate(g, res);
        if (check.ok) {
            std::cout << "certificate ok: value " << res.value << "\n";
            return kExitOk;
        }
        std::cout << "certificate INVALID: " << check.message << "\n";
        return kExitCounterexample;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return main_impl(argc, argv);
    } catch (const treepack::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const treepack::ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitBudget;
    } catch (const treepack::EnumerationOverflow& e) {
        std::cerr << "enumeration limit: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
