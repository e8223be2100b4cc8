#include "extremal/kst.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "extremal/checked.hpp"

namespace extremal {

PrefixStream::PrefixStream(std::vector<std::vector<int>> back_edges)
    : back_(std::move(back_edges)) {
    for (std::size_t i = 0; i < back_.size(); ++i)
        for (int j : back_[i])
            if (j < 0 || j >= int(i))
                throw std::domain_error("prefix stream: back-edge out of range at vertex " +
                                        std::to_string(i));
}

PrefixStream PrefixStream::from_graph(const Graph& g) {
    std::vector<std::vector<int>> back(g.order());
    for (auto [u, v] : g.edges()) back[v].push_back(u);
    return PrefixStream(std::move(back));
}

Graph PrefixStream::prefix(int n) const {
    if (n < 0 || n > length()) throw std::domain_error("prefix longer than the stream");
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int u : back_[v]) g.add_edge(u, v);
    return g;
}

PrefixStream read_prefix_stream(std::istream& in) {
    std::vector<std::vector<int>> back;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<int> row;
        long u;
        while (ls >> u) {
            if (u < 0 || u >= long(back.size()))
                throw std::runtime_error("prefix stream, line " + std::to_string(lineno) +
                                         ": back-edge " + std::to_string(u) +
                                         " out of range");
            row.push_back(int(u));
        }
        back.push_back(std::move(row));
    }
    return PrefixStream(std::move(back));
}

void write_prefix_stream(std::ostream& out, const PrefixStream& s) {
    for (const auto& row : s.back_edges()) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << row[i] << (i + 1 < row.size() ? " " : "");
        out << "\n";
    }
}

PrefixStream read_prefix_stream_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stream file: " + path);
    return read_prefix_stream(in);
}

DegreeSumReport degree_sum_check(const Graph& g, int s, int t,
                                 const std::vector<int>* block) {
    if (s < 1 || t < s) throw std::domain_error("degree_sum_check requires 1 <= s <= t");
    Bitset in_block(g.order());
    int block_size = 0;
    if (block) {
        for (int v : *block) {
            if (v < 0 || v >= g.order())
                throw std::domain_error("degree_sum_check: block vertex out of range");
            if (!in_block.test(v)) {
                in_block.set(v);
                ++block_size;
            }
        }
    } else {
        for (int v = 0; v < g.order(); ++v) in_block.set(v);
        block_size = g.order();
    }
    DegreeSumReport rep;
    rep.block_size = block_size;
    for (int v = 0; v < g.order(); ++v) {
        int dv = in_block.count_and(g.row(v));
        rep.lhs = checked_add(rep.lhs,
                              checked_binomial(std::uint64_t(dv), std::uint64_t(s)));
    }
    rep.rhs = checked_mul(std::uint64_t(t - 1),
                          checked_binomial(std::uint64_t(block_size), std::uint64_t(s)));
    rep.kst_free = is_kst_free(g, s, t);
    rep.asserted = rep.kst_free;
    rep.holds = rep.lhs <= rep.rhs;
    if (rep.asserted && !rep.holds)
        throw std::logic_error("degree-sum inequality failed on a K_{s,t}-free graph");
    return rep;
}

BlockStats block_stats(const PrefixStream& stream, int n, int big_l) {
    if (n < 1 || big_l < 1) throw std::domain_error("block_stats requires n, L >= 1");
    if (std::int64_t(n) * big_l > stream.length())
        throw std::domain_error("stream too short: need " + std::to_string(n * big_l) +
                                " vertices, have " + std::to_string(stream.length()));
    Graph g = stream.prefix(n * big_l);
    BlockStats st;
    st.n = n;
    st.e.assign(big_l, 0);
    Bitset i1(g.order());
    for (int u = 0; u < n; ++u) i1.set(u);
    // summing |N(v) cap I_1| over v in I_l gives E_l, and over v in I_1
    // counts each internal edge twice, which is exactly the convention
    for (int v = 0; v < g.order(); ++v)
        st.e[v / n] += std::uint64_t(i1.count_and(g.row(v)));
    st.f.assign(big_l, 0);
    std::uint64_t run = 0;
    for (int l = 0; l < big_l; ++l) {
        run = checked_add(run, st.e[l]);
        st.f[l] = run;
    }
    return st;
}

double witness_threshold(int s, int t, int n, std::uint64_t j_size) {
    if (n == 1) return std::numeric_limits<double>::infinity();
    double logn = std::log(double(n));
    return 16.0 * std::pow(double(t), 1.0 / s) * double(s) *
           std::pow(double(j_size), 1.0 - 1.0 / s) / std::pow(logn, 1.0 / s);
}

double witness_threshold_reference(int s, int t, int n, std::uint64_t j_size) {
    // same quantity assembled through exp/log instead of pow
    if (n == 1) return std::numeric_limits<double>::infinity();
    double ln_t = std::log(double(t));
    double ln_j = std::log(double(j_size));
    double ln_ln_n = std::log(std::log(double(n)));
    double exponent = ln_t / s + (1.0 - 1.0 / s) * ln_j - ln_ln_n / s;
    return 16.0 * double(s) * std::exp(exponent);
}

std::optional<LowDegreeWitness> low_degree_witness(const PrefixStream& stream, int s,
                                                   int t, int n, int big_l) {
    if (s < 2 || t < s) throw std::domain_error("low_degree_witness requires 2 <= s <= t");
    if (big_l < 1 || big_l > n)
        throw std::domain_error("low_degree_witness requires 1 <= L <= n");
    if (std::int64_t(n) * big_l > stream.length())
        throw std::domain_error("stream too short for L blocks of width n");
    Graph g = stream.prefix(n * big_l);
    if (auto w = find_kst(g, s, t)) {
        std::string msg = "prefix is not K_{s,t}-free; offending sets {";
        for (int v : w->left) msg += std::to_string(v) + " ";
        msg += "} x {";
        for (int v : w->right) msg += std::to_string(v) + " ";
        msg += "}";
        throw std::domain_error(msg);
    }
    for (int l = 1; l <= big_l; ++l) {
        std::uint64_t j_size = std::uint64_t(l) * n;
        double threshold = witness_threshold(s, t, n, j_size);
        Bitset jl(g.order());
        for (int u = 0; u < l * n; ++u) jl.set(u);
        for (int v = 0; v < n; ++v) {
            int deg = jl.count_and(g.row(v));
            if (double(deg) < threshold)
                return LowDegreeWitness{l, v, deg, threshold};
        }
    }
    return std::nullopt;
}

std::vector<LiminfPoint> liminf_statistic(const PrefixStream& stream, int s, int n_max) {
    if (s < 2) throw std::domain_error("liminf_statistic requires s >= 2");
    std::vector<LiminfPoint> out;
    double running = std::numeric_limits<double>::infinity();
    int limit = std::min(n_max, stream.length());
    for (int n = 2; n <= limit; ++n) {
        Graph g = stream.prefix(n);
        LiminfPoint p;
        p.n = n;
        p.min_degree = min_degree(g);
        p.statistic = double(p.min_degree) * std::pow(std::log(double(n)), 1.0 / s) /
                      std::pow(double(n), 1.0 - 1.0 / s);
        running = std::min(running, p.statistic);
        p.running_min = running;
        out.push_back(p);
    }
    return out;
}

}  // namespace extremal
