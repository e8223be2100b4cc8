#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

// Finite prefix of a one-vertex-at-a-time graph stream: vertex i carries
// its back-edges to vertices < i. Prefix G_n is the induced graph on the
// first n vertices. Every statement in this module is evaluated on such a
// prefix and labeled by its horizon.
//
// This whole module uses the natural logarithm (unlike the base-2 default
// elsewhere in the toolkit).
class PrefixStream {
public:
    PrefixStream() = default;
    explicit PrefixStream(std::vector<std::vector<int>> back_edges);
    static PrefixStream from_graph(const Graph& g);

    int length() const { return int(back_.size()); }
    Graph prefix(int n) const;  // G_n; n <= length()

    const std::vector<std::vector<int>>& back_edges() const { return back_; }

private:
    std::vector<std::vector<int>> back_;
};

// One line per vertex listing its back-edges; blank line = none. Rejects
// forward or out-of-range references naming the offending line.
PrefixStream read_prefix_stream(std::istream& in);
void write_prefix_stream(std::ostream& out, const PrefixStream& s);
PrefixStream read_prefix_stream_file(const std::string& path);

struct DegreeSumReport {
    bool kst_free = false;
    bool asserted = false;   // inequality asserted (only when kst_free)
    bool holds = false;
    std::uint64_t lhs = 0;   // sum over all v of C(d_v, s), d_v = deg into block
    std::uint64_t rhs = 0;   // (t-1) C(|block|, s)
    int block_size = 0;
};

// sum_v C(d_v, s) <= (t-1) C(n, s) with d_v the degree of v into `block`
// (default: all vertices). Asserted when g is K_{s,t}-free; otherwise the
// two sides are only reported.
DegreeSumReport degree_sum_check(const Graph& g, int s, int t,
                                 const std::vector<int>* block = nullptr);

struct BlockStats {
    int n = 0;  // block width
    std::vector<std::uint64_t> e;  // E_l, l = 1..L (E_1 doubles internal edges)
    std::vector<std::uint64_t> f;  // prefix sums F_l
};

BlockStats block_stats(const PrefixStream& stream, int n, int big_l);

struct LowDegreeWitness {
    int block = 0;      // l with 1 <= l <= L
    int vertex = 0;     // v in I_1 (global label)
    int degree = 0;     // degree of v in J_l
    double threshold = 0;
};

// First vertex of I_1 whose degree in J_l = [0, l*n) falls below
// 16 t^{1/s} s |J_l|^{1-1/s} / (ln n)^{1/s}, scanning l = 1..L. Requires the
// prefix G_{Ln} to be K_{s,t}-free.
std::optional<LowDegreeWitness> low_degree_witness(const PrefixStream& stream, int s,
                                                   int t, int n, int big_l);

// Threshold evaluated through an independent formula path (for testing the
// primary evaluator to relative 1e-12).
double witness_threshold(int s, int t, int n, std::uint64_t j_size);
double witness_threshold_reference(int s, int t, int n, std::uint64_t j_size);

struct LiminfPoint {
    int n = 0;
    int min_degree = 0;
    double statistic = 0;    // delta(G_n) (ln n)^{1/s} / n^{1-1/s}
    double running_min = 0;
};

std::vector<LiminfPoint> liminf_statistic(const PrefixStream& stream, int s, int n_max);

}  // namespace extremal
