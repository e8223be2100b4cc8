// Unified command-line entry point. Subcommands map one-to-one onto the
// library modules; --json emits a stable machine-readable report, the
// default output is a short human-readable table.
//
// Exit codes: 0 complete, 1 counterexample/violation found, 2 usage or
// malformed input, 3 budget exhausted or refused.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "extremal/ap.hpp"
#include "extremal/cliques.hpp"
#include "extremal/coloring.hpp"
#include "extremal/constructions.hpp"
#include "extremal/graph_gen.hpp"
#include "extremal/graph_io.hpp"
#include "extremal/inequalities.hpp"
#include "extremal/kst.hpp"
#include "extremal/matching.hpp"
#include "extremal/ramsey.hpp"
#include "extremal/verify.hpp"

using nlohmann::json;
using namespace extremal;

namespace {

constexpr const char* kVersion = "0.1.0";

struct GlobalOpts {
    bool json_out = false;
    bool strip_timing = false;
    std::uint64_t seed = 1;
    int workers = 1;
    std::uint64_t budget = 100'000'000;
    int cap = 12;
    std::string out_file;
};

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         t0)
            .count();
    }
};

int emit(const GlobalOpts& g, const std::string& command, json payload, const Timer& timer,
         const std::vector<std::string>& human, int exit_code = 0) {
    if (g.json_out) {
        json report;
        report["command"] = command;
        report["version"] = kVersion;
        report["schema"] = 1;
        report["result"] = std::move(payload);
        if (!g.strip_timing) {
            report["timing"] = {
                {"wall_ms", timer.ms()},
                {"unix_ms", std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::system_clock::now().time_since_epoch())
                                .count()}};
        }
        std::cout << report.dump(2) << "\n";
    } else {
        for (const std::string& line : human) std::cout << line << "\n";
    }
    return exit_code;
}

json progression_json(const Progression& p) {
    return json{{"first", p.a}, {"difference", p.d}, {"length", p.k}, {"terms", p.terms()}};
}

json coloring_json(const EdgeColoring& c) {
    json edges = json::array();
    for (int u = 0; u < c.n; ++u)
        for (int v = u + 1; v < c.n; ++v) edges.push_back({u, v, c.color_of(u, v)});
    return json{{"n", c.n}, {"q", c.q}, {"edges", std::move(edges)}};
}

json int_coloring_json(const IntColoring& c) {
    return json{{"n", c.n}, {"colors", c.color}};
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string graph_as(const Graph& g, const std::string& format) {
    std::ostringstream os;
    if (format == "graph6")
        os << to_graph6(g) << "\n";
    else
        write_edge_list(os, g);
    return os.str();
}

std::string outcome_name(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::Exact: return "exact";
        case SearchOutcome::Undecided: return "undecided";
        case SearchOutcome::Refused: return "refused";
        case SearchOutcome::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

int outcome_exit(SearchOutcome o) {
    return (o == SearchOutcome::Refused || o == SearchOutcome::BudgetExhausted) ? 3 : 0;
}

// ---------------------------------------------------------------- construct

int run_construct(const GlobalOpts& g, const std::string& name, int n, int r, int s, int j,
                  int k, int ell, const std::string& emit_fmt) {
    Timer timer;
    Graph built;
    json self;
    if (name == "turan") {
        built = turan_graph({n, r});
        self["turan_number"] = turan_number(n, r);
        self["edges"] = edge_count(built);
        self["clique_free_order"] = r + 1;
        self["computed_cliques"] =
            r + 1 <= n ? count_cliques(built, r + 1, g.workers).total : 0;
    } else if (name == "joint-extremal") {
        JointExtremalReport rep = joint_extremal_report({n, r, s});
        built = rep.g;
        self["edges"] = rep.edges;
        self["turan_number"] = turan_number(n, r);
        self["deficit_vs_turan"] = rep.deficit_vs_turan;
        if (s == 1 && (n - 1) % (r * r) == 0) {
            JointExtremalExpect e = joint_extremal_expectation({n, r, 1});
            self["expected_cliques"] = *e.cliques;
            self["expected_joint"] = *e.joint;
        }
        self["computed_cliques"] = count_cliques(built, r + 1, g.workers).total;
        self["computed_joint"] = joint_number(built, r + 1).size;
    } else if (name == "prism-blowup") {
        built = prism_blowup({n, j});
        self["edges"] = edge_count(built);
        self["edge_floor"] = std::uint64_t(n) * n / 4;
        self["expected_triangles"] = std::uint64_t(j) * j * (n - 4 * j);
        self["computed_triangles"] = count_cliques(built, 3, g.workers).total;
        self["max_triangles_per_edge"] = joint_number(built, 3).size;
        self["per_edge_bound"] = j;
    } else if (name == "pendant-clique") {
        built = pendant_clique({k, ell});
        self["expected_order"] = k + ell;
        self["expected_edges"] = std::uint64_t(k) * (k - 1) / 2 + ell;
        self["edges"] = edge_count(built);
    } else {
        throw CLI::ValidationError("construct", "unknown construction: " + name);
    }

    if (!g.out_file.empty())
        write_text_file(g.out_file,
                        graph_as(built, emit_fmt == "json" ? "edgelist" : emit_fmt));

    if (emit_fmt != "json" && !g.json_out) {
        std::cout << graph_as(built, emit_fmt);
        return 0;
    }
    json payload{{"construction", name},
                 {"order", built.order()},
                 {"edges", edge_count(built)},
                 {"graph6", to_graph6(built)},
                 {"self_check", self}};
    std::vector<std::string> human{"construction: " + name,
                                   "order: " + std::to_string(built.order()),
                                   "edges: " + std::to_string(edge_count(built)),
                                   "self_check: " + self.dump()};
    return emit(g, "construct", payload, timer, human);
}

// ----------------------------------------------------------------------- ap

int run_ap_find(const GlobalOpts& g, const std::string& graph_arg, int k,
                const std::string& family) {
    Timer timer;
    Graph host = resolve_graph(graph_arg);
    Family fam = family == "coprime" ? Family::Coprime
                 : family == "prime" ? Family::Prime
                                     : Family::All;
    APCertificate cert = find_independent_ap(host, k, fam);
    json payload{{"family", family_name(cert.family)},
                 {"family_size", cert.family_size},
                 {"edges_hit_bound", cert.edges_hit_bound},
                 {"counting_argument", cert.counting_argument_applies()},
                 {"scanned", cert.scanned},
                 {"outcome", cert.progression ? "found" : "exhausted"}};
    std::vector<std::string> human{
        "family: " + family_name(cert.family),
        "family size: " + std::to_string(cert.family_size),
        "edges-hit bound e(G)k: " + std::to_string(cert.edges_hit_bound)};
    if (cert.progression) {
        payload["progression"] = progression_json(*cert.progression);
        std::ostringstream os;
        os << "independent AP: start " << cert.progression->a << ", difference "
           << cert.progression->d << ", length " << cert.progression->k;
        human.push_back(os.str());
    } else {
        human.push_back("family exhausted: no independent progression");
    }
    return emit(g, "ap find-independent", payload, timer, human);
}

int run_ap_sr(const GlobalOpts& g, int m, int k, long nmax) {
    Timer timer;
    SrReport rep = sr_exact(m, k, nmax, g.budget);
    json payload{{"outcome", outcome_name(rep.outcome)},
                 {"nodes", rep.nodes},
                 {"note", rep.note}};
    std::vector<std::string> human;
    if (rep.outcome == SearchOutcome::Exact) {
        payload["value"] = rep.value;
        human.push_back("sr(" + std::to_string(m) + "," + std::to_string(k) +
                        ") = " + std::to_string(rep.value));
    } else {
        payload["projected"] = rep.projected;
        human.push_back("outcome: " + outcome_name(rep.outcome) + " " + rep.note);
    }
    if (rep.witness) payload["last_bad_coloring"] = int_coloring_json(*rep.witness);
    return emit(g, "ap sr-exact", payload, timer, human, outcome_exit(rep.outcome));
}

int run_ap_tk(const GlobalOpts& g, int t, int m, int k) {
    Timer timer;
    TkReport rep = tk_check(t, m, k, g.budget);
    json payload{{"outcome", outcome_name(rep.outcome)}, {"nodes", rep.nodes}};
    std::vector<std::string> human;
    int code = outcome_exit(rep.outcome);
    if (rep.outcome == SearchOutcome::Exact) {
        payload["holds"] = rep.holds;
        human.push_back(std::string("rainbow property ") +
                        (rep.holds ? "holds" : "fails"));
        if (!rep.holds) {
            payload["counterexample"] = int_coloring_json(*rep.counterexample);
            code = 1;
        }
    } else {
        payload["note"] = rep.note;
        human.push_back("outcome: " + outcome_name(rep.outcome) + " " + rep.note);
    }
    return emit(g, "ap tk", payload, timer, human, code);
}

int run_ap_set_mapping(const GlobalOpts& g, const std::string& perm_file, int k) {
    Timer timer;
    std::ifstream in(perm_file);
    if (!in) throw std::runtime_error("cannot open permutation file: " + perm_file);
    std::vector<long> pi;
    long x;
    while (in >> x) pi.push_back(x);
    APCertificate cert = set_mapping_ap(pi, k);
    json payload{{"n", pi.size()},
                 {"outcome", cert.progression ? "found" : "exhausted"},
                 {"scanned", cert.scanned}};
    std::vector<std::string> human;
    if (cert.progression) {
        payload["progression"] = progression_json(*cert.progression);
        human.push_back("progression found: start " + std::to_string(cert.progression->a) +
                        ", difference " + std::to_string(cert.progression->d));
    } else {
        human.push_back("exhausted: no admissible progression");
    }
    return emit(g, "ap set-mapping", payload, timer, human);
}

int run_ap_survivors(const GlobalOpts& g, long n, int k) {
    Timer timer;
    std::vector<long> xs = coprime_survivors(n, k);
    json payload{{"n", n}, {"k", k}, {"count", xs.size()}, {"survivors", xs}};
    std::vector<std::string> human{"count: " + std::to_string(xs.size())};
    return emit(g, "ap survivors", payload, timer, human);
}

// --------------------------------------------------------------------- mult

Graph resolve_pattern(const std::string& arg) { return resolve_graph(arg); }

int run_mult_count(const GlobalOpts& g, const std::string& coloring_file,
                   const std::string& pattern_arg, int tkl_k, int tkl_ell) {
    Timer timer;
    EdgeColoring c = read_coloring_file(coloring_file);
    MonoCount mc;
    std::string pat_desc;
    if (tkl_k > 0) {
        mc = count_mono_pendant(c, tkl_k, tkl_ell);
        pat_desc = "T(" + std::to_string(tkl_k) + "," + std::to_string(tkl_ell) + ")";
    } else {
        Graph h = resolve_pattern(pattern_arg);
        mc = count_mono(c, h, g.workers);
        pat_desc = pattern_arg;
    }
    json payload{{"pattern", pat_desc}, {"per_color", mc.per_color}, {"total", mc.total}};
    std::ostringstream os;
    os << "monochromatic copies of " << pat_desc << ":";
    for (std::size_t i = 0; i < mc.per_color.size(); ++i)
        os << " color" << i << "=" << mc.per_color[i];
    os << " total=" << mc.total;
    return emit(g, "mult count", payload, timer, {os.str()});
}

int run_mult_exact(const GlobalOpts& g, const std::string& pattern_arg, int n, int q) {
    Timer timer;
    Graph h = resolve_pattern(pattern_arg);
    MultiplicityReport rep = multiplicity_exact(h, n, q, g.budget);
    if (!g.out_file.empty()) {
        std::ostringstream os;
        write_coloring_text(os, rep.witness);
        write_text_file(g.out_file, os.str());
    }
    json payload{{"exact", rep.exact},
                 {"lower", rep.lower},
                 {"upper", rep.upper},
                 {"nodes", rep.nodes},
                 {"witness", coloring_json(rep.witness)}};
    std::vector<std::string> human;
    if (rep.exact)
        human.push_back("M_" + std::to_string(q) + "(pattern; " + std::to_string(n) +
                        ") = " + std::to_string(rep.lower));
    else
        human.push_back("bounds [" + std::to_string(rep.lower) + ", " +
                        std::to_string(rep.upper) + "] (budget exhausted)");
    return emit(g, "mult exact", payload, timer, human, rep.exact ? 0 : 3);
}

int run_mult_estimate(const GlobalOpts& g, const std::string& pattern_arg, int n, int q,
                      std::uint64_t trials) {
    Timer timer;
    Graph h = resolve_pattern(pattern_arg);
    EstimateReport rep = multiplicity_upper_estimate(h, n, q, trials, g.seed);
    json payload{{"mean", rep.mean},          {"stddev", rep.stddev},
                 {"stderror", rep.stderror},  {"reference", rep.reference},
                 {"within_3se", rep.within_3se}, {"trials", rep.trials},
                 {"seed", rep.seed}};
    std::ostringstream os;
    os << "mean proportion " << rep.mean << " vs q^{1-m} = " << rep.reference
       << " (3se check: " << (rep.within_3se ? "inside" : "outside") << ")";
    return emit(g, "mult estimate", payload, timer, {os.str()});
}

// ------------------------------------------------------------------- ramsey

json ramsey_json(const RamseyResult& r) {
    json j{{"exact", r.exact}, {"nodes", r.nodes}};
    if (r.exact) {
        j["value"] = r.value;
    } else {
        j["lb"] = r.lb;
        if (r.ub >= 0)
            j["ub"] = r.ub;
        else
            j["ub"] = nullptr;
    }
    if (r.convention_empty) j["convention"] = "edgeless pattern: r = 1";
    if (!r.note.empty()) j["note"] = r.note;
    if (r.witness) j["witness"] = coloring_json(*r.witness);
    return j;
}

int run_ramsey_exact(const GlobalOpts& g, const std::string& pattern_arg) {
    Timer timer;
    Graph h = resolve_pattern(pattern_arg);
    RamseyResult r = ramsey_exact(h, g.cap, g.budget);
    if (!g.out_file.empty() && r.witness) {
        std::ostringstream os;
        write_coloring_text(os, *r.witness);
        write_text_file(g.out_file, os.str());
    }
    std::vector<std::string> human;
    if (r.exact)
        human.push_back("r(" + pattern_arg + ") = " + std::to_string(r.value));
    else
        human.push_back("r(" + pattern_arg + ") in [" + std::to_string(r.lb) + ", " +
                        (r.ub >= 0 ? std::to_string(r.ub) : "?") + "]  " + r.note);
    return emit(g, "ramsey exact", ramsey_json(r), timer, human, r.exact ? 0 : 3);
}

int run_ramsey_sandwich(const GlobalOpts& g, const std::string& pattern_arg, int del) {
    Timer timer;
    Graph h = resolve_pattern(pattern_arg);
    SandwichReport rep = verify_sandwich(h, del, g.cap, g.budget);
    json payload{{"v_hprime", rep.v_hp},
                 {"r_h", ramsey_json(rep.r_h)},
                 {"r_hprime", ramsey_json(rep.r_hp)},
                 {"conclusive", rep.conclusive}};
    std::vector<std::string> human;
    int code = 0;
    if (rep.conclusive) {
        payload["holds"] = rep.holds;
        payload["ratio"] = rep.ratio;
        human.push_back(std::string("sandwich bound ") + (rep.holds ? "holds" : "FAILS") +
                        ", ratio " + std::to_string(rep.ratio));
        if (!rep.holds) code = 1;
    } else {
        payload["consistent"] = rep.consistent;
        human.push_back(std::string("inconclusive; intervals ") +
                        (rep.consistent ? "consistent" : "INCONSISTENT"));
        code = rep.consistent ? 3 : 1;
    }
    return emit(g, "ramsey sandwich", payload, timer, human, code);
}

int run_ramsey_sample(const GlobalOpts& g, int n, double p, int trials) {
    Timer timer;
    SampleSummary sum = sample_random_ramsey(n, p, trials, g.seed, g.cap, g.budget);
    json entries = json::array();
    for (const SampleEntry& e : sum.entries) {
        json je{{"order", e.pattern_order}, {"edges", e.pattern_edges}, {"exact", e.exact}};
        if (e.exact) {
            je["value"] = e.value;
            je["log2_r"] = e.log2_r;
        } else {
            je["lb"] = e.lb;
            je["ub"] = e.ub >= 0 ? json(e.ub) : json(nullptr);
        }
        entries.push_back(std::move(je));
    }
    json counts = json::object();
    for (auto& [v, c] : sum.value_counts) counts[std::to_string(v)] = c;
    json payload{{"n", n},
                 {"p", p},
                 {"seed", sum.seed},
                 {"entries", entries},
                 {"value_counts", counts},
                 {"censored", sum.censored},
                 {"log2_mean", sum.log2_mean},
                 {"log2_min", sum.log2_min},
                 {"log2_max", sum.log2_max},
                 {"spread", sum.spread}};
    std::ostringstream os;
    os << trials << " samples: log2(r) mean " << sum.log2_mean << ", spread " << sum.spread
       << ", censored " << sum.censored;
    return emit(g, "ramsey sample", payload, timer, {os.str()});
}

// -------------------------------------------------------------------- match

json cert_json(const MatchingCert& cert) {
    json edges = json::array();
    for (auto [u, v] : cert.edges) edges.push_back({u, v});
    return json{{"size", cert.size()},
                {"s", cert.s},
                {"edges", edges},
                {"pairwise_counts", cert.pairwise_counts}};
}

int run_match_exact(const GlobalOpts& g, const std::string& graph_arg, int s) {
    Timer timer;
    Graph host = resolve_graph(graph_arg);
    MatchingReport rep = max_s_connected_matching(host, s);
    std::ostringstream os;
    os << "maximum " << s << "-connected matching: size " << rep.cert.size();
    return emit(g, "match exact", cert_json(rep.cert), timer, {os.str()});
}

int run_match_aux(const GlobalOpts& g, const std::string& graph_arg, int s,
                  const std::string& mode, int threshold) {
    Timer timer;
    Graph host = resolve_graph(graph_arg);
    std::optional<int> thr;
    if (threshold >= 0) thr = threshold;
    MatchingReport rep = matching_via_aux(
        host, s, mode == "exact" ? AuxMode::Exact : AuxMode::Greedy, thr);
    json payload = cert_json(rep.cert);
    payload["mode"] = mode;
    if (thr) payload["a_threshold"] = *thr;
    std::ostringstream os;
    os << mode << " auxiliary route: size " << rep.cert.size();
    return emit(g, "match aux", payload, timer, {os.str()});
}

int run_match_structure(const GlobalOpts& g, const std::string& graph_arg) {
    Timer timer;
    Graph host = resolve_graph(graph_arg);
    TriangleStructureReport rep = check_hprime_triangle_structure(host);
    BBoundReport bb = b_bound_report(host);
    json payload{{"aux_vertices", rep.aux_vertices},
                 {"aux_edges", rep.aux_edges},
                 {"triangles", rep.triangles},
                 {"disjoint_triples", rep.disjoint_triples},
                 {"triangle_claim_holds", rep.holds},
                 {"b_bound_holds", bb.holds},
                 {"worst_b", bb.worst_b},
                 {"b_bound", bb.bound}};
    std::ostringstream os;
    os << "H' triangles " << rep.triangles << ", disjoint triples " << rep.disjoint_triples
       << "; |B| worst " << bb.worst_b << " vs bound " << bb.bound;
    bool ok = rep.holds && bb.holds;
    return emit(g, "match structure", payload, timer, {os.str()}, ok ? 0 : 1);
}

// ---------------------------------------------------------------------- kst

int run_kst_degsum(const GlobalOpts& g, const std::string& graph_arg, int s, int t,
                   const std::string& block_csv) {
    Timer timer;
    Graph host = resolve_graph(graph_arg);
    std::vector<int> block;
    if (!block_csv.empty()) {
        std::istringstream bs(block_csv);
        std::string tok;
        while (std::getline(bs, tok, ',')) block.push_back(std::stoi(tok));
    }
    DegreeSumReport rep = degree_sum_check(host, s, t, block.empty() ? nullptr : &block);
    json payload{{"kst_free", rep.kst_free}, {"asserted", rep.asserted},
                 {"holds", rep.holds},       {"lhs", rep.lhs},
                 {"rhs", rep.rhs},           {"block_size", rep.block_size}};
    std::ostringstream os;
    os << "sum C(d_v, s) = " << rep.lhs << " vs (t-1) C(n, s) = " << rep.rhs
       << (rep.kst_free ? " [asserted: K_{s,t}-free]" : " [report only]");
    return emit(g, "kst degsum", payload, timer, {os.str()});
}

int run_kst_blocks(const GlobalOpts& g, const std::string& stream_file, int n, int big_l) {
    Timer timer;
    PrefixStream s = read_prefix_stream_file(stream_file);
    BlockStats st = block_stats(s, n, big_l);
    json payload{{"n", st.n}, {"E", st.e}, {"F", st.f}};
    std::ostringstream os;
    os << "E:";
    for (auto e : st.e) os << " " << e;
    return emit(g, "kst blocks", payload, timer, {os.str()});
}

int run_kst_witness(const GlobalOpts& g, const std::string& stream_file, int s, int t,
                    int n, int big_l) {
    Timer timer;
    PrefixStream stream = read_prefix_stream_file(stream_file);
    auto w = low_degree_witness(stream, s, t, n, big_l);
    json payload;
    std::vector<std::string> human;
    if (w) {
        payload = {{"found", true},
                   {"block", w->block},
                   {"vertex", w->vertex},
                   {"degree", w->degree},
                   {"threshold", w->threshold}};
        std::ostringstream os;
        os << "witness: vertex " << w->vertex << " at block " << w->block << ", degree "
           << w->degree << " < " << w->threshold;
        human.push_back(os.str());
    } else {
        payload = {{"found", false}};
        human.push_back("no low-degree vertex up to L blocks");
    }
    return emit(g, "kst witness", payload, timer, human);
}

int run_kst_liminf(const GlobalOpts& g, const std::string& stream_file, int s, int nmax) {
    Timer timer;
    PrefixStream stream = read_prefix_stream_file(stream_file);
    auto pts = liminf_statistic(stream, s, nmax);
    json series = json::array();
    for (const LiminfPoint& p : pts)
        series.push_back({{"n", p.n},
                          {"min_degree", p.min_degree},
                          {"statistic", p.statistic},
                          {"running_min", p.running_min}});
    json payload{{"series", series}};
    std::ostringstream os;
    if (!pts.empty())
        os << "running min at n=" << pts.back().n << ": " << pts.back().running_min;
    else
        os << "stream shorter than 2 vertices";
    return emit(g, "kst liminf", payload, timer, {os.str()});
}

// ------------------------------------------------------------- verify-paper

int run_verify(const GlobalOpts& g, const std::string& suite) {
    Timer timer;
    std::vector<CriterionResult> results = run_acceptance(suite);
    bool all = true;
    json list = json::array();
    for (const CriterionResult& r : results) {
        all = all && r.pass;
        if (!g.json_out)
            std::printf("%s  criterion %2d: %-32s  %8.1f ms  %s\n",
                        r.pass ? "PASS" : "FAIL", r.index, r.name.c_str(), r.ms,
                        r.detail.c_str());
        list.push_back({{"index", r.index},
                        {"name", r.name},
                        {"pass", r.pass},
                        {"detail", r.detail},
                        {"ms", r.ms}});
    }
    json payload{{"criteria", list}, {"all_pass", all}};
    if (g.json_out) return emit(g, "verify-paper", payload, timer, {}, all ? 0 : 1);
    std::printf("%s\n", all ? "ALL PASS" : "FAILURES PRESENT");
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extremal: exact constructions, searches and verifiers for "
                 "desk-scale extremal combinatorics"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json_out, "machine-readable JSON report");
    app.add_flag("--strip-timing", g.strip_timing,
                 "omit the timing block (byte-identical reruns)");
    app.add_option("--seed", g.seed, "seed for randomized operations");
    app.add_option("--workers", g.workers, "worker threads for counting kernels");
    app.add_option("--budget", g.budget, "node budget for exhaustive searches");
    app.add_option("--cap", g.cap, "vertex cap for Ramsey searches");
    app.add_option("--out", g.out_file, "write the witness object to this file");

    int exit_code = 0;
    std::function<int()> action;

    // construct
    auto* construct = app.add_subcommand("construct", "build a named construction");
    std::string c_name, c_emit = "json";
    int c_n = 0, c_r = 2, c_s = 1, c_j = 1, c_k = 2, c_ell = 0;
    construct->add_option("name", c_name, "turan | joint-extremal | prism-blowup | pendant-clique")
        ->required();
    construct->add_option("--n", c_n);
    construct->add_option("--r", c_r);
    construct->add_option("--s", c_s);
    construct->add_option("--j", c_j);
    construct->add_option("--k", c_k);
    construct->add_option("--ell", c_ell);
    construct->add_option("--emit", c_emit)->check(CLI::IsMember({"graph6", "edgelist", "json"}));
    construct->callback([&] {
        action = [&, c_name, c_n, c_r, c_s, c_j, c_k, c_ell, c_emit] {
            return run_construct(g, c_name, c_n, c_r, c_s, c_j, c_k, c_ell, c_emit);
        };
    });

    // ap
    auto* ap = app.add_subcommand("ap", "arithmetic-progression machinery");
    ap->require_subcommand(1);
    auto* ap_find = ap->add_subcommand("find-independent", "independent AP in a graph on [n]");
    std::string apf_graph, apf_family = "all";
    int apf_k = 3;
    ap_find->add_option("--graph", apf_graph)->required();
    ap_find->add_option("--k", apf_k)->required();
    ap_find->add_option("--family", apf_family)
        ->check(CLI::IsMember({"coprime", "prime", "all"}));
    ap_find->callback([&] {
        action = [&, apf_graph, apf_k, apf_family] {
            return run_ap_find(g, apf_graph, apf_k, apf_family);
        };
    });
    auto* ap_sr = ap->add_subcommand("sr-exact", "exact sub-Ramsey number");
    int sr_m = 1, sr_k = 3;
    long sr_nmax = 20;
    ap_sr->add_option("--m", sr_m)->required();
    ap_sr->add_option("--k", sr_k)->required();
    ap_sr->add_option("--nmax", sr_nmax);
    ap_sr->callback([&] {
        action = [&, sr_m, sr_k, sr_nmax] { return run_ap_sr(g, sr_m, sr_k, sr_nmax); };
    });
    auto* ap_tk = ap->add_subcommand("tk", "equinumerous rainbow check");
    int tk_t = 2, tk_m = 1, tk_k = 3;
    ap_tk->add_option("--t", tk_t)->required();
    ap_tk->add_option("--m", tk_m)->required();
    ap_tk->add_option("--k", tk_k)->required();
    ap_tk->callback([&] {
        action = [&, tk_t, tk_m, tk_k] { return run_ap_tk(g, tk_t, tk_m, tk_k); };
    });
    auto* ap_sm = ap->add_subcommand("set-mapping", "progression avoiding its image");
    std::string sm_perm;
    int sm_k = 3;
    ap_sm->add_option("--perm", sm_perm)->required();
    ap_sm->add_option("--k", sm_k)->required();
    ap_sm->callback([&] {
        action = [&, sm_perm, sm_k] { return run_ap_set_mapping(g, sm_perm, sm_k); };
    });
    auto* ap_sv = ap->add_subcommand("survivors", "integers coprime to 1..k");
    long sv_n = 30;
    int sv_k = 5;
    ap_sv->add_option("--n", sv_n)->required();
    ap_sv->add_option("--k", sv_k)->required();
    ap_sv->callback([&] {
        action = [&, sv_n, sv_k] { return run_ap_survivors(g, sv_n, sv_k); };
    });

    // mult
    auto* mult = app.add_subcommand("mult", "Ramsey multiplicity machinery");
    mult->require_subcommand(1);
    auto* mc_cmd = mult->add_subcommand("count", "monochromatic copies per color");
    std::string mcc_coloring, mcc_pattern = "k3";
    int mcc_tk = 0, mcc_tell = 0;
    mc_cmd->add_option("--coloring", mcc_coloring)->required();
    mc_cmd->add_option("--pattern", mcc_pattern);
    mc_cmd->add_option("--tkl-k", mcc_tk, "use the specialized T(k,ell) counter");
    mc_cmd->add_option("--tkl-ell", mcc_tell);
    mc_cmd->callback([&] {
        action = [&, mcc_coloring, mcc_pattern, mcc_tk, mcc_tell] {
            return run_mult_count(g, mcc_coloring, mcc_pattern, mcc_tk, mcc_tell);
        };
    });
    auto* me_cmd = mult->add_subcommand("exact", "exact Ramsey multiplicity");
    std::string me_pattern = "k3";
    int me_n = 5, me_q = 2;
    me_cmd->add_option("--pattern", me_pattern)->required();
    me_cmd->add_option("--n", me_n)->required();
    me_cmd->add_option("--q", me_q)->required();
    me_cmd->callback([&] {
        action = [&, me_pattern, me_n, me_q] {
            return run_mult_exact(g, me_pattern, me_n, me_q);
        };
    });
    auto* mest_cmd = mult->add_subcommand("estimate", "random-coloring Monte Carlo");
    std::string mest_pattern = "k3";
    int mest_n = 30, mest_q = 2;
    std::uint64_t mest_trials = 10000;
    mest_cmd->add_option("--pattern", mest_pattern)->required();
    mest_cmd->add_option("--n", mest_n)->required();
    mest_cmd->add_option("--q", mest_q)->required();
    mest_cmd->add_option("--trials", mest_trials);
    mest_cmd->callback([&] {
        action = [&, mest_pattern, mest_n, mest_q, mest_trials] {
            return run_mult_estimate(g, mest_pattern, mest_n, mest_q, mest_trials);
        };
    });

    // ramsey
    auto* ramsey = app.add_subcommand("ramsey", "small exact Ramsey numbers");
    ramsey->require_subcommand(1);
    auto* re_cmd = ramsey->add_subcommand("exact", "exact r(H) under the cap");
    std::string re_pattern;
    re_cmd->add_option("--pattern", re_pattern)->required();
    re_cmd->callback([&] {
        action = [&, re_pattern] { return run_ramsey_exact(g, re_pattern); };
    });
    auto* rs_cmd = ramsey->add_subcommand("sandwich", "vertex-deletion sandwich bound");
    std::string rs_pattern;
    int rs_delete = 0;
    rs_cmd->add_option("--pattern", rs_pattern)->required();
    rs_cmd->add_option("--delete", rs_delete)->required();
    rs_cmd->callback([&] {
        action = [&, rs_pattern, rs_delete] {
            return run_ramsey_sandwich(g, rs_pattern, rs_delete);
        };
    });
    auto* rsam_cmd = ramsey->add_subcommand("sample", "Ramsey numbers of G(n,p) samples");
    int rsam_n = 4, rsam_trials = 10;
    double rsam_p = 0.5;
    rsam_cmd->add_option("--n", rsam_n)->required();
    rsam_cmd->add_option("--p", rsam_p)->required();
    rsam_cmd->add_option("--trials", rsam_trials);
    rsam_cmd->callback([&] {
        action = [&, rsam_n, rsam_p, rsam_trials] {
            return run_ramsey_sample(g, rsam_n, rsam_p, rsam_trials);
        };
    });

    // match
    auto* match = app.add_subcommand("match", "s-connected matchings");
    match->require_subcommand(1);
    auto* mx_cmd = match->add_subcommand("exact", "exact maximum s-connected matching");
    std::string mx_graph;
    int mx_s = 2;
    mx_cmd->add_option("--graph", mx_graph)->required();
    mx_cmd->add_option("--s", mx_s)->required();
    mx_cmd->callback([&] {
        action = [&, mx_graph, mx_s] { return run_match_exact(g, mx_graph, mx_s); };
    });
    auto* ma_cmd = match->add_subcommand("aux", "independent set in the auxiliary graph");
    std::string ma_graph, ma_mode = "greedy";
    int ma_s = 2, ma_threshold = -1;
    ma_cmd->add_option("--graph", ma_graph)->required();
    ma_cmd->add_option("--s", ma_s)->required();
    ma_cmd->add_option("--mode", ma_mode)->check(CLI::IsMember({"greedy", "exact"}));
    ma_cmd->add_option("--threshold", ma_threshold, "keep pairs with |A_{u,v}| <= this");
    ma_cmd->callback([&] {
        action = [&, ma_graph, ma_s, ma_mode, ma_threshold] {
            return run_match_aux(g, ma_graph, ma_s, ma_mode, ma_threshold);
        };
    });
    auto* ms_cmd = match->add_subcommand("structure", "H' triangle structure + B bound");
    std::string ms_graph;
    ms_cmd->add_option("--graph", ms_graph)->required();
    ms_cmd->callback([&] {
        action = [&, ms_graph] { return run_match_structure(g, ms_graph); };
    });

    // kst
    auto* kst = app.add_subcommand("kst", "K_{s,t}-free degree verifiers");
    kst->require_subcommand(1);
    auto* kd_cmd = kst->add_subcommand("degsum", "degree-sum inequality");
    std::string kd_graph, kd_block;
    int kd_s = 2, kd_t = 2;
    kd_cmd->add_option("--graph", kd_graph)->required();
    kd_cmd->add_option("--s", kd_s)->required();
    kd_cmd->add_option("--t", kd_t)->required();
    kd_cmd->add_option("--block", kd_block, "comma-separated block vertices");
    kd_cmd->callback([&] {
        action = [&, kd_graph, kd_s, kd_t, kd_block] {
            return run_kst_degsum(g, kd_graph, kd_s, kd_t, kd_block);
        };
    });
    auto* kb_cmd = kst->add_subcommand("blocks", "E_l / F_l block statistics");
    std::string kb_stream;
    int kb_n = 2, kb_L = 2;
    kb_cmd->add_option("--stream", kb_stream)->required();
    kb_cmd->add_option("--n", kb_n)->required();
    kb_cmd->add_option("--L", kb_L)->required();
    kb_cmd->callback([&] {
        action = [&, kb_stream, kb_n, kb_L] {
            return run_kst_blocks(g, kb_stream, kb_n, kb_L);
        };
    });
    auto* kw_cmd = kst->add_subcommand("witness", "low-degree witness scan");
    std::string kw_stream;
    int kw_s = 2, kw_t = 2, kw_n = 2, kw_L = 2;
    kw_cmd->add_option("--stream", kw_stream)->required();
    kw_cmd->add_option("--s", kw_s)->required();
    kw_cmd->add_option("--t", kw_t)->required();
    kw_cmd->add_option("--n", kw_n)->required();
    kw_cmd->add_option("--L", kw_L)->required();
    kw_cmd->callback([&] {
        action = [&, kw_stream, kw_s, kw_t, kw_n, kw_L] {
            return run_kst_witness(g, kw_stream, kw_s, kw_t, kw_n, kw_L);
        };
    });
    auto* kl_cmd = kst->add_subcommand("liminf", "normalized min-degree series");
    std::string kl_stream;
    int kl_s = 2, kl_nmax = 100;
    kl_cmd->add_option("--stream", kl_stream)->required();
    kl_cmd->add_option("--s", kl_s)->required();
    kl_cmd->add_option("--nmax", kl_nmax);
    kl_cmd->callback([&] {
        action = [&, kl_stream, kl_s, kl_nmax] {
            return run_kst_liminf(g, kl_stream, kl_s, kl_nmax);
        };
    });

    // verify-paper
    auto* verify = app.add_subcommand("verify-paper", "run the acceptance criteria");
    std::string v_suite;
    verify->add_option("--suite", v_suite, "substring filter on criterion names");
    verify->callback([&] {
        action = [&, v_suite] { return run_verify(g, v_suite); };
    });

    // let global flags (--json, --seed, ...) appear after the subcommand too
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands({})) {
            sub->fallthrough();
            allow_fallthrough(sub);
        }
    };
    allow_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (action) exit_code = action();
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
