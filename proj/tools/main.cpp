// kreach: command-line front door for the k-hop reachability toolkit.
//
// Exit codes follow sysexits conventions: 64 for usage errors (unknown
// subcommand/flag, malformed flag values), 65 for data/validation failures,
// 66 for unreadable/unwritable files. Exceptions: `query` exits 0/1 for
// true/false and 2 on any error after argument parsing; `verify` exits 1
// when mismatches were found. `askk` exits 0 whenever an answer (yes, no,
// or approx:<K>) was printed.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "kreach/cover.hpp"
#include "kreach/errors.hpp"
#include "kreach/graph.hpp"
#include "kreach/hk.hpp"
#include "kreach/kreach_index.hpp"
#include "kreach/multik.hpp"
#include "kreach/persist.hpp"
#include "kreach/query.hpp"
#include "kreach/stats.hpp"

namespace {

using namespace kreach;

constexpr std::uint32_t kExactStatsLimit = 10'000;
constexpr std::uint32_t kAutoSampleSources = 1'000;
constexpr std::uint32_t kVerifyAllLimit = 2'000;

// Thrown for unreadable/unwritable files (exit 66, vs 65 for bad content).
struct FileError {
    std::string message;
};

Graph read_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError{"cannot open graph file: " + path};
    return load_edge_list(in);
}

AnyIndex read_index(const Graph& g, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError{"cannot open index file: " + path};
    return load_index_for(g, in);
}

VertexId resolve(const Graph& g, std::uint64_t original) {
    if (original <= std::numeric_limits<VertexId>::max()) {
        VertexId v = g.to_internal(static_cast<VertexId>(original));
        if (v < g.num_vertices()) return v;
    }
    throw ValidationError("unknown vertex id " + std::to_string(original));
}

CoverStrategy parse_strategy(const std::string& name) {
    return name == "random" ? CoverStrategy::random_edge : CoverStrategy::degree_prioritized;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> load_pairs(std::istream& in) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::uint64_t a = 0;
        std::uint64_t b = 0;
        if (!(ls >> a >> b)) throw ParseError(lineno, "expected two vertex ids");
        std::string rest;
        if (ls >> rest) throw ParseError(lineno, "trailing tokens after the pair");
        pairs.emplace_back(a, b);
    }
    return pairs;
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

// ---- subcommand bodies -----------------------------------------------------

struct StatsArgs {
    std::string graph;
    std::uint32_t sampled = 0;
    std::uint64_t seed = 0;
    bool sampled_given = false;
};

int run_stats(const StatsArgs& a) {
    Graph g = read_graph(a.graph);
    GraphStats st;
    if (a.sampled_given) {
        if (a.sampled == 0) throw ValidationError("--sampled needs at least one source");
        st = graph_stats_sampled(g, a.seed, a.sampled);
    } else if (g.num_vertices() > kExactStatsLimit) {
        std::cerr << "note: " << g.num_vertices() << " vertices, estimating from "
                  << kAutoSampleSources << " sampled sources (use --sampled N to control)\n";
        st = graph_stats_sampled(g, a.seed, kAutoSampleSources);
    } else {
        st = graph_stats(g);
    }
    if (st.estimated) std::cerr << "note: diameter and median are sampled estimates\n";
    std::cout << st.n << '\t' << st.m << '\t' << st.deg_max << '\t' << st.diameter << '\t'
              << st.median_sp << '\n';
    return 0;
}

struct CoverArgs {
    std::string graph;
    std::uint32_t hop = 1;
    std::string strategy = "degree";
    std::uint64_t seed = 0;
};

void print_cover(const Graph& g, const Cover& c) {
    std::cout << "h=" << c.hop() << " size=" << c.size() << '\n';
    bool first = true;
    for (VertexId v : c.members()) {
        if (!first) std::cout << ' ';
        std::cout << g.original_id(v);
        first = false;
    }
    std::cout << '\n';
}

Cover make_cover(const Graph& g, std::uint32_t hop, const std::string& strategy,
                 std::uint64_t seed) {
    if (hop < 1 || hop > 127) throw ValidationError("--hop must be between 1 and 127");
    if (hop == 1) return approx_vertex_cover(g, parse_strategy(strategy), seed);
    return approx_h_hop_cover(g, hop, parse_strategy(strategy), seed);
}

int run_cover(const CoverArgs& a) {
    Graph g = read_graph(a.graph);
    print_cover(g, make_cover(g, a.hop, a.strategy, a.seed));
    return 0;
}

struct BuildArgs {
    std::string graph;
    std::uint32_t k = 0;
    std::uint32_t hop = 1;
    std::string strategy = "degree";
    std::uint64_t seed = 0;
    std::uint32_t threads = 0;
    std::string output;
};

int run_build(const BuildArgs& a) {
    Graph g = read_graph(a.graph);
    if (a.hop < 1 || a.hop > 127) throw ValidationError("--hop must be between 1 and 127");
    if (a.hop == 1 ? a.k < 2 : a.k <= 2 * a.hop)
        throw ValidationError("-k must be at least 2 and exceed twice the hop radius");

    auto start = std::chrono::steady_clock::now();
    Cover cover = make_cover(g, a.hop, a.strategy, a.seed);
    AnyIndex idx = a.hop == 1 ? AnyIndex(build_kreach(g, a.k, cover, a.threads))
                              : AnyIndex(build_hk(g, a.hop, a.k, cover, a.threads));
    double build_ms = ms_since(start);

    std::ofstream out(a.output, std::ios::binary | std::ios::trunc);
    if (!out) throw FileError{"cannot open output file: " + a.output};
    std::uint64_t bytes = save_index(idx, out);
    out.close();
    if (!out) throw FileError{"cannot write output file: " + a.output};

    std::cout << "cover=" << index_cover(idx).size() << " edges=" << index_edge_count(idx)
              << " bytes=" << bytes << " build_ms=" << static_cast<std::uint64_t>(build_ms)
              << '\n';
    return 0;
}

struct PairArgs {
    std::string graph;
    std::string index;
    std::uint64_t s = 0;
    std::uint64_t t = 0;
};

int run_query(const PairArgs& a) {
    try {
        Graph g = read_graph(a.graph);
        AnyIndex idx = read_index(g, a.index);
        VertexId s = resolve(g, a.s);
        VertexId t = resolve(g, a.t);
        QueryAnswer ans = std::visit(
            [&](const auto& concrete) {
                using T = std::decay_t<decltype(concrete)>;
                if constexpr (std::is_same_v<T, KReachIndex>) return query(g, concrete, s, t);
                else return query_hk(g, concrete, s, t);
            },
            idx);
        std::cout << (ans.reachable ? "true" : "false") << '\n';
        return ans.reachable ? 0 : 1;
    } catch (const FileError& e) {
        std::cerr << "error: " << e.message << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

struct BatchArgs {
    std::string graph;
    std::string index;
    std::string pairs;
    bool hist = false;
};

int run_batch(const BatchArgs& a) {
    Graph g = read_graph(a.graph);
    AnyIndex idx = read_index(g, a.index);
    std::ifstream pf(a.pairs);
    if (!pf) throw FileError{"cannot open pairs file: " + a.pairs};
    auto originals = load_pairs(pf);

    std::vector<std::pair<VertexId, VertexId>> internal;
    internal.reserve(originals.size());
    for (const auto& [os, ot] : originals) internal.emplace_back(resolve(g, os), resolve(g, ot));

    std::vector<QueryAnswer> answers;
    CaseHistogram hist;
    if (const auto* plain = std::get_if<KReachIndex>(&idx)) {
        auto result = batch_query(g, *plain, internal);
        answers = std::move(result.answers);
        hist = result.histogram;
    } else {
        const auto& hk = std::get<HKReachIndex>(idx);
        HkQuerier querier(g, hk);
        answers.reserve(internal.size());
        for (const auto& [s, t] : internal) {
            answers.push_back(querier(s, t));
            hist.add(answers.back().resolved_by);
        }
    }

    std::ostringstream out;
    for (std::size_t i = 0; i < answers.size(); ++i) {
        out << originals[i].first << '\t' << originals[i].second << '\t'
            << (answers[i].reachable ? "true" : "false") << '\t'
            << to_string(answers[i].resolved_by) << '\n';
    }
    std::cout << out.str();
    if (a.hist) {
        std::cerr << "hist";
        for (int c = 0; c < 6; ++c) {
            auto qc = static_cast<QueryCase>(c);
            std::cerr << ' ' << to_string(qc) << '=' << hist.at(qc);
        }
        std::cerr << " total=" << hist.total() << '\n';
    }
    return 0;
}

struct VerifyArgs {
    std::string graph;
    std::string index;
    bool all = false;
    std::uint64_t samples = 10'000;
    std::uint64_t seed = 0;
};

int run_verify(const VerifyArgs& a) {
    Graph g = read_graph(a.graph);
    AnyIndex idx = read_index(g, a.index);
    const std::uint32_t k = index_k(idx);
    const VertexId n = g.num_vertices();

    auto ask = [&](VertexId s, VertexId t) -> bool {
        return std::visit(
            [&](const auto& concrete) {
                using T = std::decay_t<decltype(concrete)>;
                if constexpr (std::is_same_v<T, KReachIndex>)
                    return query(g, concrete, s, t).reachable;
                else
                    return query_hk(g, concrete, s, t).reachable;
            },
            idx);
    };

    std::uint64_t mismatches = 0;
    if (a.all) {
        if (n > kVerifyAllLimit)
            throw ValidationError("--all is limited to " + std::to_string(kVerifyAllLimit) +
                                  " vertices; use --samples");
        BoundedBfs bfs(n);
        for (VertexId s = 0; s < n; ++s) {
            bfs.run(g, s, k, Direction::forward);
            for (VertexId t = 0; t < n; ++t) {
                bool expected = s == t || bfs.dist(t) <= k;
                if (ask(s, t) != expected) ++mismatches;
            }
        }
    } else if (n > 0) {
        std::mt19937_64 rng(a.seed);
        BoundedBfs bfs(n);
        for (std::uint64_t i = 0; i < a.samples; ++i) {
            VertexId s = static_cast<VertexId>(rng() % n);
            VertexId t = static_cast<VertexId>(rng() % n);
            bool expected = bfs.run_to_target(g, s, t, k, Direction::forward);
            if (ask(s, t) != expected) ++mismatches;
        }
    }
    std::cout << "mismatches=" << mismatches << '\n';
    return mismatches == 0 ? 0 : 1;
}

struct BenchArgs {
    std::string graph;
    std::string index;
    std::uint64_t queries = 10'000;
    std::uint64_t seed = 0;
    std::string baseline;
};

int run_bench(const BenchArgs& a) {
    Graph g = read_graph(a.graph);
    AnyIndex idx = read_index(g, a.index);
    const VertexId n = g.num_vertices();
    if (n == 0) throw ValidationError("cannot benchmark an empty graph");
    if (a.queries == 0) throw ValidationError("--queries needs at least one query");

    std::mt19937_64 rng(a.seed);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(a.queries);
    for (std::uint64_t i = 0; i < a.queries; ++i)
        pairs.emplace_back(static_cast<VertexId>(rng() % n), static_cast<VertexId>(rng() % n));

    std::uint64_t reachable = 0;
    auto start = std::chrono::steady_clock::now();
    if (const auto* plain = std::get_if<KReachIndex>(&idx)) {
        for (const auto& [s, t] : pairs) reachable += query(g, *plain, s, t).reachable;
    } else {
        HkQuerier querier(g, std::get<HKReachIndex>(idx));
        for (const auto& [s, t] : pairs) reachable += querier(s, t).reachable;
    }
    double index_ms = ms_since(start);

    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    out << "queries=" << a.queries << " reachable=" << reachable << " index_total_ms=" << index_ms
        << " index_per_query_us=" << (index_ms * 1000.0 / static_cast<double>(a.queries));

    if (!a.baseline.empty()) {
        const std::uint32_t k = index_k(idx);
        BoundedBfs bfs(n);
        std::uint64_t base_reachable = 0;
        auto base_start = std::chrono::steady_clock::now();
        for (const auto& [s, t] : pairs)
            base_reachable += bfs.run_to_target(g, s, t, k, Direction::forward);
        double base_ms = ms_since(base_start);
        out << " baseline_total_ms=" << base_ms
            << " baseline_per_query_us=" << (base_ms * 1000.0 / static_cast<double>(a.queries))
            << " speedup=" << (index_ms > 0.0 ? base_ms / index_ms : 0.0);
        if (base_reachable != reachable)
            std::cerr << "warning: baseline disagrees on " << base_reachable << " vs " << reachable
                      << " reachable pairs\n";
    }
    std::cout << out.str() << '\n';
    return 0;
}

struct GenkArgs {
    std::string graph;
    std::string mode = "geometric";
    std::string strategy = "degree";
    std::uint64_t seed = 0;
    std::uint32_t threads = 0;
    std::string output;
};

int run_genk(const GenkArgs& a) {
    Graph g = read_graph(a.graph);
    auto start = std::chrono::steady_clock::now();
    FamilyMode mode = a.mode == "exact" ? FamilyMode::exact : FamilyMode::geometric;
    MultiKIndex family = build_family(g, mode, parse_strategy(a.strategy), a.seed, a.threads);
    double build_ms = ms_since(start);

    std::ofstream out(a.output, std::ios::binary | std::ios::trunc);
    if (!out) throw FileError{"cannot open output file: " + a.output};
    std::uint64_t bytes = save_family(family, out);
    out.close();
    if (!out) throw FileError{"cannot write output file: " + a.output};

    std::cout << "mode=" << a.mode << " members=" << family.size() << " keys=";
    for (std::size_t i = 0; i < family.members().size(); ++i) {
        if (i > 0) std::cout << ',';
        std::cout << family.members()[i].k();
    }
    std::cout << " diameter=" << family.diameter() << " bytes=" << bytes
              << " build_ms=" << static_cast<std::uint64_t>(build_ms) << '\n';
    return 0;
}

struct AskkArgs {
    std::string graph;
    std::string family;
    std::uint64_t s = 0;
    std::uint64_t t = 0;
    std::uint32_t k = 0;
};

int run_askk(const AskkArgs& a) {
    Graph g = read_graph(a.graph);
    std::ifstream in(a.family, std::ios::binary);
    if (!in) throw FileError{"cannot open family file: " + a.family};
    MultiKIndex family = load_family_for(g, in);
    GeneralAnswer ans = query_general(family, g, resolve(g, a.s), resolve(g, a.t), a.k);
    switch (ans.verdict) {
        case GeneralAnswer::Verdict::yes_exact: std::cout << "yes\n"; break;
        case GeneralAnswer::Verdict::no_exact: std::cout << "no\n"; break;
        case GeneralAnswer::Verdict::approx_within: std::cout << "approx:" << ans.bound << '\n'; break;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex-cover k-hop reachability toolkit"};
    app.set_version_flag("--version", "kreach 1.0.0");
    app.require_subcommand(1);

    StatsArgs stats_args;
    auto* stats_cmd = app.add_subcommand("stats", "Print graph statistics as TSV");
    stats_cmd->add_option("graph", stats_args.graph, "edge-list file")->required();
    auto* sampled_opt =
        stats_cmd->add_option("--sampled", stats_args.sampled, "estimate from N sampled sources");
    stats_cmd->add_option("--seed", stats_args.seed, "sampling seed");

    CoverArgs cover_args;
    auto* cover_cmd = app.add_subcommand("cover", "Build and print an h-hop vertex cover");
    cover_cmd->add_option("graph", cover_args.graph, "edge-list file")->required();
    cover_cmd->add_option("--hop", cover_args.hop, "hop radius (default 1)");
    cover_cmd->add_option("--strategy", cover_args.strategy, "matching order (default degree)")
        ->check(CLI::IsMember({"random", "degree"}));
    cover_cmd->add_option("--seed", cover_args.seed, "tie-break seed");

    BuildArgs build_args;
    auto* build_cmd = app.add_subcommand("build", "Build an index and write it to a file");
    build_cmd->add_option("graph", build_args.graph, "edge-list file")->required();
    build_cmd->add_option("-k", build_args.k, "reachability bound")->required();
    build_cmd->add_option("--hop", build_args.hop, "cover hop radius (default 1)");
    build_cmd->add_option("--strategy", build_args.strategy, "matching order (default degree)")
        ->check(CLI::IsMember({"random", "degree"}));
    build_cmd->add_option("--seed", build_args.seed, "tie-break seed");
    build_cmd->add_option("--threads", build_args.threads, "builder threads (0 = auto)");
    build_cmd->add_option("-o,--output", build_args.output, "index output file")->required();

    PairArgs query_args;
    auto* query_cmd = app.add_subcommand("query", "Answer one reachability query");
    query_cmd->add_option("graph", query_args.graph, "edge-list file")->required();
    query_cmd->add_option("index", query_args.index, "index file")->required();
    query_cmd->add_option("s", query_args.s, "source vertex id")->required();
    query_cmd->add_option("t", query_args.t, "target vertex id")->required();

    BatchArgs batch_args;
    auto* batch_cmd = app.add_subcommand("batch", "Answer queries from a pairs file");
    batch_cmd->add_option("graph", batch_args.graph, "edge-list file")->required();
    batch_cmd->add_option("index", batch_args.index, "index file")->required();
    batch_cmd->add_option("pairs", batch_args.pairs, "pairs file, one \"s t\" per line")
        ->required();
    batch_cmd->add_flag("--hist", batch_args.hist, "print a resolution-case histogram to stderr");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check an index against BFS");
    verify_cmd->add_option("graph", verify_args.graph, "edge-list file")->required();
    verify_cmd->add_option("index", verify_args.index, "index file")->required();
    auto* all_flag = verify_cmd->add_flag("--all", verify_args.all, "check every ordered pair");
    verify_cmd->add_option("--samples", verify_args.samples, "sampled pair count (default 10000)")
        ->excludes(all_flag);
    verify_cmd->add_option("--seed", verify_args.seed, "sampling seed");

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "Time random queries against the index");
    bench_cmd->add_option("graph", bench_args.graph, "edge-list file")->required();
    bench_cmd->add_option("index", bench_args.index, "index file")->required();
    bench_cmd->add_option("--queries", bench_args.queries, "query count (default 10000)");
    bench_cmd->add_option("--seed", bench_args.seed, "pair-generation seed");
    bench_cmd->add_option("--baseline", bench_args.baseline, "also time a baseline (bfs)")
        ->check(CLI::IsMember({"bfs"}));

    GenkArgs genk_args;
    auto* genk_cmd = app.add_subcommand("genk", "Build a multi-k index family");
    genk_cmd->add_option("graph", genk_args.graph, "edge-list file")->required();
    genk_cmd->add_option("--mode", genk_args.mode, "key ladder (default geometric)")
        ->check(CLI::IsMember({"geometric", "exact"}));
    genk_cmd->add_option("--strategy", genk_args.strategy, "matching order (default degree)")
        ->check(CLI::IsMember({"random", "degree"}));
    genk_cmd->add_option("--seed", genk_args.seed, "tie-break seed");
    genk_cmd->add_option("--threads", genk_args.threads, "builder threads (0 = auto)");
    genk_cmd->add_option("-o,--output", genk_args.output, "family output file")->required();

    AskkArgs askk_args;
    auto* askk_cmd = app.add_subcommand("askk", "Answer reachability for an arbitrary k");
    askk_cmd->add_option("graph", askk_args.graph, "edge-list file")->required();
    askk_cmd->add_option("family", askk_args.family, "family file")->required();
    askk_cmd->add_option("s", askk_args.s, "source vertex id")->required();
    askk_cmd->add_option("t", askk_args.t, "target vertex id")->required();
    askk_cmd->add_option("k", askk_args.k, "hop bound")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }
    stats_args.sampled_given = sampled_opt->count() > 0;

    try {
        if (*stats_cmd) return run_stats(stats_args);
        if (*cover_cmd) return run_cover(cover_args);
        if (*build_cmd) return run_build(build_args);
        if (*query_cmd) return run_query(query_args);
        if (*batch_cmd) return run_batch(batch_args);
        if (*verify_cmd) return run_verify(verify_args);
        if (*bench_cmd) return run_bench(bench_args);
        if (*genk_cmd) return run_genk(genk_args);
        if (*askk_cmd) return run_askk(askk_args);
    } catch (const FileError& e) {
        std::cerr << "error: " << e.message << '\n';
        return 66;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 65;
    }
    return 64;
}
