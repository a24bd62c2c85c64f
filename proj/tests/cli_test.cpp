// Integration tests for the `kreach` command-line tool. Runs the real binary
// (path in argv[1]) through a shell, captures stdout/stderr/exit codes, and
// compares against values computed with the library directly.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "kreach/cover.hpp"
#include "kreach/graph.hpp"
#include "kreach/hk.hpp"
#include "kreach/kreach_index.hpp"
#include "kreach/multik.hpp"
#include "kreach/persist.hpp"
#include "kreach/query.hpp"
#include "kreach/stats.hpp"

namespace fs = std::filesystem;
using namespace kreach;

namespace {

std::string g_cli;
int g_checks = 0;
int g_failures = 0;

void report(bool ok, int line, const std::string& what) {
    ++g_checks;
    if (!ok) {
        ++g_failures;
        std::cerr << "FAIL cli_test.cpp:" << line << "  " << what << '\n';
    }
}

#define EXPECT(cond) report(static_cast<bool>(cond), __LINE__, #cond)

template <typename A, typename B>
void expect_eq_impl(const A& a, const B& b, int line, const char* expr) {
    std::ostringstream os;
    if (!(a == b)) {
        os << expr << "  (got [" << a << "] want [" << b << "])";
        report(false, line, os.str());
    } else {
        report(true, line, expr);
    }
}
#define EXPECT_EQ(a, b) expect_eq_impl((a), (b), __LINE__, #a " == " #b)

struct RunResult {
    int code = -1;
    std::string output;
};

RunResult shell(const std::string& command) {
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return {};
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(out)};
}

// stdout only; stderr dropped.
RunResult run(const std::string& args) { return shell(g_cli + " " + args + " 2>/dev/null"); }
// stderr only; stdout dropped.
RunResult run_err(const std::string& args) {
    return shell(g_cli + " " + args + " 2>&1 1>/dev/null");
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

// Extracts the value of a "key=value" field from a space-separated line.
std::string field(const std::string& line, const std::string& key) {
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok)
        if (tok.rfind(key + "=", 0) == 0) return tok.substr(key.size() + 1);
    return "";
}

std::string cover_text(const Graph& g, const Cover& c) {
    std::ostringstream os;
    os << "h=" << c.hop() << " size=" << c.size() << '\n';
    bool first = true;
    for (VertexId v : c.members()) {
        if (!first) os << ' ';
        os << g.original_id(v);
        first = false;
    }
    os << '\n';
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-kreach-binary>\n";
        return 2;
    }
    g_cli = argv[1];

    fs::path dir = fs::temp_directory_path() / "kreach-cli-test";
    fs::remove_all(dir);
    fs::create_directories(dir);

    // The 10-vertex demo graph with sparse original ids (x10) to exercise the
    // id remapping end to end. Internal id = original / 10.
    const std::string demo_edges = "# demo graph, ids are multiples of ten\n"
                                   "0 10\n20 10\n10 30\n30 40\n30 50\n"
                                   "40 60\n60 70\n60 80\n80 90\n";
    fs::path graph_path = dir / "demo.edges";
    write_file(graph_path, demo_edges);

    Graph g = [&] {
        std::istringstream in(demo_edges);
        return load_edge_list(in);
    }();

    // ---- version / usage errors -------------------------------------------
    {
        EXPECT_EQ(run("--version").code, 0);
        EXPECT_EQ(run("").code, 64);                 // missing subcommand
        EXPECT_EQ(run("frobnicate").code, 64);       // unknown subcommand
        EXPECT_EQ(run("stats").code, 64);            // missing required argument
        EXPECT_EQ(run("stats --bogus x").code, 64);  // unknown flag
    }

    // ---- stats -------------------------------------------------------------
    {
        RunResult r = run("stats " + q(graph_path));
        EXPECT_EQ(r.code, 0);
        EXPECT_EQ(r.output, std::string("10\t9\t3\t6\t3\n"));

        // Sampled estimates match the library for the same seed and note the
        // estimation on stderr.
        GraphStats st = graph_stats_sampled(g, 1, 4);
        std::ostringstream want;
        want << st.n << '\t' << st.m << '\t' << st.deg_max << '\t' << st.diameter << '\t'
             << st.median_sp << '\n';
        RunResult s = run("stats " + q(graph_path) + " --sampled 4 --seed 1");
        EXPECT_EQ(s.code, 0);
        EXPECT_EQ(s.output, want.str());
        if (st.estimated) {
            RunResult e = run_err("stats " + q(graph_path) + " --sampled 4 --seed 1");
            EXPECT(e.output.find("estimate") != std::string::npos);
        }

        EXPECT_EQ(run("stats " + q(dir / "missing.edges")).code, 66);
        write_file(dir / "bad.edges", "0 1\nnot numbers\n");
        EXPECT_EQ(run("stats " + q(dir / "bad.edges")).code, 65);
        RunResult be = run_err("stats " + q(dir / "bad.edges"));
        EXPECT(be.output.find("line 2") != std::string::npos);
    }

    // ---- cover -------------------------------------------------------------
    {
        RunResult r = run("cover " + q(graph_path));
        EXPECT_EQ(r.code, 0);
        EXPECT_EQ(r.output, cover_text(g, approx_vertex_cover(g, CoverStrategy::degree_prioritized, 0)));
        EXPECT_EQ(run("cover " + q(graph_path)).output, r.output); // deterministic

        RunResult rnd = run("cover " + q(graph_path) + " --strategy random --seed 7");
        EXPECT_EQ(rnd.output, cover_text(g, approx_vertex_cover(g, CoverStrategy::random_edge, 7)));

        RunResult h2 = run("cover " + q(graph_path) + " --hop 2");
        EXPECT_EQ(h2.output,
                  cover_text(g, approx_h_hop_cover(g, 2, CoverStrategy::degree_prioritized, 0)));

        EXPECT_EQ(run("cover " + q(graph_path) + " --strategy bogus").code, 64);
        EXPECT_EQ(run("cover " + q(graph_path) + " --hop 0").code, 65);
    }

    // ---- build -------------------------------------------------------------
    fs::path idx_path = dir / "demo.k3.idx";
    {
        RunResult r = run("build " + q(graph_path) + " -k 3 -o " + q(idx_path));
        EXPECT_EQ(r.code, 0);

        Cover cover = approx_vertex_cover(g, CoverStrategy::degree_prioritized, 0);
        KReachIndex want = build_kreach(g, 3, cover);
        EXPECT_EQ(field(r.output, "cover"), std::to_string(want.cover().size()));
        EXPECT_EQ(field(r.output, "edges"), std::to_string(want.edge_count()));
        EXPECT_EQ(field(r.output, "bytes"), std::to_string(fs::file_size(idx_path)));
        EXPECT(!field(r.output, "build_ms").empty());

        // The file holds exactly the library-built index.
        std::ifstream in(idx_path, std::ios::binary);
        AnyIndex loaded = load_index_for(g, in);
        EXPECT(std::get<KReachIndex>(loaded) == want);

        // Byte-identical on rebuild.
        fs::path again = dir / "demo.k3.again.idx";
        run("build " + q(graph_path) + " -k 3 -o " + q(again));
        EXPECT(read_file(idx_path) == read_file(again));

        EXPECT_EQ(run("build " + q(graph_path) + " -o " + q(again)).code, 64); // -k required
        EXPECT_EQ(run("build " + q(graph_path) + " -k 1 -o " + q(again)).code, 65);
        EXPECT_EQ(run("build " + q(graph_path) + " -k 3 -o /nonexistent-dir/x.idx").code, 66);
        EXPECT_EQ(run("build " + q(dir / "missing.edges") + " -k 3 -o " + q(again)).code, 66);
        EXPECT_EQ(run("build " + q(graph_path) + " -k 4 --hop 2 -o " + q(again)).code,
                  65); // k must exceed 2h
    }

    // ---- query -------------------------------------------------------------
    {
        RunResult yes = run("query " + q(graph_path) + " " + q(idx_path) + " 30 70");
        EXPECT_EQ(yes.code, 0);
        EXPECT_EQ(yes.output, std::string("true\n"));
        RunResult no = run("query " + q(graph_path) + " " + q(idx_path) + " 30 90");
        EXPECT_EQ(no.code, 1);
        EXPECT_EQ(no.output, std::string("false\n"));
        // 31 is not a vertex of the remapped graph.
        EXPECT_EQ(run("query " + q(graph_path) + " " + q(idx_path) + " 31 70").code, 2);
        EXPECT_EQ(run("query " + q(graph_path) + " " + q(dir / "missing.idx") + " 0 10").code, 2);

        // An index paired with the wrong graph is rejected.
        write_file(dir / "other.edges", "0 1\n1 2\n");
        EXPECT_EQ(run("query " + q(dir / "other.edges") + " " + q(idx_path) + " 0 1").code, 2);
    }

    // ---- batch -------------------------------------------------------------
    {
        const std::string pairs_text = "# pairs\n30 70\n\n0 30\n60 90\n90 0\n20 50\n40 40\n";
        fs::path pairs_path = dir / "demo.pairs";
        write_file(pairs_path, pairs_text);

        std::ifstream in(idx_path, std::ios::binary);
        const KReachIndex idx = std::get<KReachIndex>(load_index_for(g, in));
        std::vector<std::pair<std::uint64_t, std::uint64_t>> originals = {
            {30, 70}, {0, 30}, {60, 90}, {90, 0}, {20, 50}, {40, 40}};
        std::ostringstream want;
        CaseHistogram hist;
        for (auto [os_, ot] : originals) {
            QueryAnswer ans = query(g, idx, g.to_internal(os_), g.to_internal(ot));
            hist.add(ans.resolved_by);
            want << os_ << '\t' << ot << '\t' << (ans.reachable ? "true" : "false") << '\t'
                 << to_string(ans.resolved_by) << '\n';
        }

        RunResult r = run("batch " + q(graph_path) + " " + q(idx_path) + " " + q(pairs_path));
        EXPECT_EQ(r.code, 0);
        EXPECT_EQ(r.output, want.str());

        std::ostringstream hs;
        hs << "hist";
        for (int c = 0; c < 6; ++c) {
            auto qc = static_cast<QueryCase>(c);
            hs << ' ' << to_string(qc) << '=' << hist.at(qc);
        }
        hs << " total=" << hist.total() << '\n';
        RunResult he = run_err("batch " + q(graph_path) + " " + q(idx_path) + " " + q(pairs_path) +
                               " --hist");
        EXPECT_EQ(he.code, 0);
        EXPECT_EQ(he.output, hs.str());

        write_file(dir / "bad.pairs", "10 30 50\n");
        EXPECT_EQ(run("batch " + q(graph_path) + " " + q(idx_path) + " " + q(dir / "bad.pairs")).code,
                  65);
        write_file(dir / "unknown.pairs", "10 35\n");
        EXPECT_EQ(
            run("batch " + q(graph_path) + " " + q(idx_path) + " " + q(dir / "unknown.pairs")).code,
            65);
        EXPECT_EQ(
            run("batch " + q(graph_path) + " " + q(idx_path) + " " + q(dir / "missing.pairs")).code,
            66);
    }

    // ---- verify ------------------------------------------------------------
    {
        RunResult all = run("verify " + q(graph_path) + " " + q(idx_path) + " --all");
        EXPECT_EQ(all.code, 0);
        EXPECT_EQ(all.output, std::string("mismatches=0\n"));
        RunResult sampled =
            run("verify " + q(graph_path) + " " + q(idx_path) + " --samples 500 --seed 3");
        EXPECT_EQ(sampled.code, 0);
        EXPECT_EQ(sampled.output, std::string("mismatches=0\n"));
        EXPECT_EQ(run("verify " + q(graph_path) + " " + q(idx_path) + " --all --samples 5").code,
                  64); // mutually exclusive
    }

    // ---- bench -------------------------------------------------------------
    {
        RunResult r =
            run("bench " + q(graph_path) + " " + q(idx_path) + " --queries 200 --baseline bfs");
        EXPECT_EQ(r.code, 0);
        EXPECT_EQ(field(r.output, "queries"), std::string("200"));
        EXPECT(!field(r.output, "reachable").empty());
        EXPECT(!field(r.output, "index_per_query_us").empty());
        EXPECT(!field(r.output, "baseline_per_query_us").empty());
        EXPECT(!field(r.output, "speedup").empty());
        // Same seed, same pair set, same verdicts.
        RunResult r2 = run("bench " + q(graph_path) + " " + q(idx_path) + " --queries 200");
        EXPECT_EQ(field(r2.output, "reachable"), field(r.output, "reachable"));
        // A correct index never disagrees with the baseline.
        RunResult warn =
            run_err("bench " + q(graph_path) + " " + q(idx_path) + " --queries 200 --baseline bfs");
        EXPECT_EQ(warn.output, std::string(""));
        EXPECT_EQ(run("bench " + q(graph_path) + " " + q(idx_path) + " --queries 0").code, 65);
        EXPECT_EQ(run("bench " + q(graph_path) + " " + q(idx_path) + " --baseline dijkstra").code,
                  64);
    }

    // ---- hop-2 build / query / verify ---------------------------------------
    {
        fs::path hk_path = dir / "demo.h2k5.idx";
        RunResult r = run("build " + q(graph_path) + " -k 5 --hop 2 -o " + q(hk_path));
        EXPECT_EQ(r.code, 0);
        Cover cover = approx_h_hop_cover(g, 2, CoverStrategy::degree_prioritized, 0);
        HKReachIndex want = build_hk(g, 2, 5, cover);
        EXPECT_EQ(field(r.output, "cover"), std::to_string(want.cover().size()));
        EXPECT_EQ(field(r.output, "edges"), std::to_string(want.edge_count()));

        std::ifstream in(hk_path, std::ios::binary);
        AnyIndex loaded = load_index_for(g, in);
        EXPECT(std::get<HKReachIndex>(loaded) == want);

        // dist(4,6) = 1 <= 5; dist(3,0) = inf.
        EXPECT_EQ(run("query " + q(graph_path) + " " + q(hk_path) + " 40 60").code, 0);
        EXPECT_EQ(run("query " + q(graph_path) + " " + q(hk_path) + " 30 0").code, 1);
        EXPECT_EQ(run("verify " + q(graph_path) + " " + q(hk_path) + " --all").output,
                  std::string("mismatches=0\n"));

        // Batch through the hop-2 index agrees with the library querier.
        fs::path pairs_path = dir / "hk.pairs";
        write_file(pairs_path, "0 90\n90 10\n30 50\n");
        HkQuerier querier(g, want);
        std::ostringstream expect_out;
        for (auto [a, b] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
                 {0, 90}, {90, 10}, {30, 50}}) {
            QueryAnswer ans = querier(g.to_internal(a), g.to_internal(b));
            expect_out << a << '\t' << b << '\t' << (ans.reachable ? "true" : "false") << '\t'
                       << to_string(ans.resolved_by) << '\n';
        }
        RunResult br = run("batch " + q(graph_path) + " " + q(hk_path) + " " + q(pairs_path));
        EXPECT_EQ(br.code, 0);
        EXPECT_EQ(br.output, expect_out.str());
    }

    // ---- genk / askk ---------------------------------------------------------
    {
        fs::path fam_path = dir / "demo.fam";
        RunResult r = run("genk " + q(graph_path) + " -o " + q(fam_path));
        EXPECT_EQ(r.code, 0);
        EXPECT_EQ(field(r.output, "mode"), std::string("geometric"));
        EXPECT_EQ(field(r.output, "members"), std::string("3"));
        EXPECT_EQ(field(r.output, "keys"), std::string("2,4,8"));
        EXPECT_EQ(field(r.output, "diameter"), std::string("6"));
        EXPECT_EQ(field(r.output, "bytes"), std::to_string(fs::file_size(fam_path)));

        RunResult ex = run("genk " + q(graph_path) + " --mode exact -o " + q(dir / "demo.exact.fam"));
        EXPECT_EQ(field(ex.output, "mode"), std::string("exact"));
        EXPECT_EQ(field(ex.output, "keys"), std::string("2,3,4,5,6"));

        // dist(0,9) = 6, dist(0,5) = 3, dist(0,6) = 4.
        RunResult no = run("askk " + q(graph_path) + " " + q(fam_path) + " 0 90 3");
        EXPECT_EQ(no.code, 0);
        EXPECT_EQ(no.output, std::string("no\n"));
        RunResult yes = run("askk " + q(graph_path) + " " + q(fam_path) + " 0 50 3");
        EXPECT_EQ(yes.code, 0);
        EXPECT_EQ(yes.output, std::string("yes\n"));
        RunResult approx = run("askk " + q(graph_path) + " " + q(fam_path) + " 0 60 3");
        EXPECT_EQ(approx.code, 0);
        EXPECT_EQ(approx.output, std::string("approx:4\n"));
        RunResult far = run("askk " + q(graph_path) + " " + q(fam_path) + " 0 90 7");
        EXPECT_EQ(far.code, 0);
        EXPECT_EQ(far.output, std::string("yes\n"));
        // The exact family never needs the approximate band.
        RunResult exact_ask =
            run("askk " + q(graph_path) + " " + q(dir / "demo.exact.fam") + " 0 60 3");
        EXPECT_EQ(exact_ask.output, std::string("no\n"));

        EXPECT_EQ(run("askk " + q(graph_path) + " " + q(fam_path) + " 0 90 0").code, 65);
        EXPECT_EQ(run("askk " + q(graph_path) + " " + q(fam_path) + " 0 95 3").code, 65);
        EXPECT_EQ(run("askk " + q(dir / "other.edges") + " " + q(fam_path) + " 0 1 2").code, 65);
        EXPECT_EQ(run("askk " + q(graph_path) + " " + q(dir / "missing.fam") + " 0 90 3").code, 66);
        EXPECT_EQ(run("genk " + q(graph_path) + " --mode sometimes -o " + q(fam_path)).code, 64);
    }

    std::cout << (g_failures == 0 ? "PASS" : "FAIL") << ": " << (g_checks - g_failures) << "/"
              << g_checks << " cli checks passed\n";
    return g_failures == 0 ? 0 : 1;
}
