#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

// q-coloring of the edges of K_n. Pairs are stored at colex index
// v(v-1)/2 + u for u < v.
struct EdgeColoring {
    int n = 0;
    int q = 1;
    std::vector<std::uint8_t> color;

    EdgeColoring() = default;
    EdgeColoring(int nn, int qq);

    static std::size_t pair_index(int u, int v);
    int color_of(int u, int v) const { return color[pair_index(u, v)]; }
    void set_color(int u, int v, int c);

    // Spanning subgraph of K_n carrying the edges of one color.
    Graph color_graph(int c) const;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

// |Aut(h)| by brute force; patterns up to ~10 vertices.
std::uint64_t automorphism_count(const Graph& h);

// Injective maps V(pattern) -> V(host) sending edges to edges.
std::uint64_t count_labeled_embeddings(const Graph& host, const Graph& pattern);

// Unordered copies of `pattern` as a subgraph of `host`
// (= embeddings / |Aut|).
std::uint64_t count_subgraph_copies(const Graph& host, const Graph& pattern);

struct MonoCount {
    std::vector<std::uint64_t> per_color;
    std::uint64_t total = 0;
};

// Copies of h all of whose edges share one color, per color. Patterns with
// isolated vertices are rejected; a pattern larger than n gives zeros.
// workers > 1 counts the colors concurrently; the per-color slots make the
// result independent of scheduling.
MonoCount count_mono(const EdgeColoring& c, const Graph& h, int workers = 1);

// Specialized counter for the pendant-clique pattern T(k, ell): enumerate
// monochromatic K_k and multiply by pendant choices. Must agree with
// count_mono on pendant_clique({k, ell}).
MonoCount count_mono_pendant(const EdgeColoring& c, int k, int ell);

// Copies of h in K_n: (h!/|Aut|) * C(n, h).
std::uint64_t copies_in_complete(const Graph& h, int n);

// [n] split into `parts` classes as evenly as possible (larger classes on
// lower labels, contiguous); within-class edges red (0), cross edges blue (1).
EdgeColoring partition_coloring(int n, int parts);
// Class of each vertex under that split.
std::vector<int> partition_classes(int n, int parts);

// Blocks of size n/r (as equal as possible, larger blocks on lower base
// labels); intra-block edges get inner_color, cross-block edges inherit the
// base color of their block pair. inner_color must be a fresh color id.
EdgeColoring blowup_coloring(const EdgeColoring& base, int n, int inner_color);

struct MultiplicityReport {
    bool exact = false;
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;   // = lower when exact
    EdgeColoring witness;      // attains `upper`
    std::uint64_t nodes = 0;
};

// Exact M_q(h; n): minimum of count_mono(., h).total over q-colorings of
// K_n. DFS over pairs in colex order with first-appearance color
// canonicalization, incremental copy completion and branch-and-bound.
MultiplicityReport multiplicity_exact(const Graph& h, int n, int q,
                                      std::uint64_t budget = 100'000'000);

struct EstimateReport {
    double mean = 0;            // mean monochromatic proportion
    double stddev = 0;          // sample standard deviation
    double stderror = 0;        // stddev / sqrt(trials)
    double reference = 0;       // q^{1-m}
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    bool within_3se = false;
};

// Monte-Carlo mean of the monochromatic proportion of h over uniformly
// random q-colorings of K_n; the stream is seed-reproducible.
EstimateReport multiplicity_upper_estimate(const Graph& h, int n, int q,
                                           std::uint64_t trials, std::uint64_t seed);

// {"n":., "q":., "edges":[[u,v,c],...]} with every pair listed exactly once.
void write_coloring_json(std::ostream& out, const EdgeColoring& c);
EdgeColoring read_coloring_json(std::istream& in);
// Compact row-major text: "n q" then one line per vertex u < n-1 listing
// colors of (u, u+1), ..., (u, n-1).
void write_coloring_text(std::ostream& out, const EdgeColoring& c);
EdgeColoring read_coloring_text(std::istream& in);
EdgeColoring read_coloring_file(const std::string& path);

}  // namespace extremal
