#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extremal/coloring.hpp"
#include "extremal/graph.hpp"

namespace extremal {

struct RamseyResult {
    bool exact = false;
    long value = -1;                      // when exact
    long lb = 1;                          // r >= lb always holds
    long ub = -1;                         // -1 = unknown
    std::optional<EdgeColoring> witness;  // mono-free coloring of K_{value-1}
    std::uint64_t nodes = 0;
    bool convention_empty = false;        // r(edgeless) = 1 by convention
    std::string note;
};

// Exact 2-color Ramsey number of h by DFS over edge colorings of K_n in
// colex order, first edge fixed red (color swap), with incremental
// monochromatic-copy detection. Isolated vertices of h stay in v(h): a copy
// needs n >= v(h) before it can exist. Returns an interval when n_cap or
// the node budget truncates the search.
RamseyResult ramsey_exact(const Graph& h, int n_cap = 12,
                          std::uint64_t budget = 1'000'000'000,
                          bool color_swap_pruning = true);

struct SandwichReport {
    RamseyResult r_h;
    RamseyResult r_hp;
    int v_hp = 0;
    bool conclusive = false;  // both sides exact
    bool holds = false;       // r(H') <= r(H) <= 2 v(H') r(H')
    bool consistent = false;  // intervals do not contradict the bound
    double ratio = 0;         // r(H)/r(H') when conclusive
};

// Removes `deleted_vertex` from h and checks r(H') <= r(H) <= 2 v(H') r(H').
SandwichReport verify_sandwich(const Graph& h, int deleted_vertex, int n_cap = 12,
                               std::uint64_t budget = 1'000'000'000);

struct SampleEntry {
    int pattern_order = 0;       // after stripping isolated vertices
    std::uint64_t pattern_edges = 0;
    bool exact = false;
    long value = -1;
    long lb = 1;
    long ub = -1;
    double log2_r = 0;  // when exact
};

struct SampleSummary {
    int n = 0;
    double p = 0;
    std::uint64_t seed = 0;
    std::vector<SampleEntry> entries;
    std::map<long, int> value_counts;  // exact values only
    int censored = 0;                  // unresolved samples (reported, never dropped)
    double log2_min = 0, log2_max = 0, log2_mean = 0, spread = 0;
};

// Ramsey numbers of G_{n,p} samples; isolated vertices are stripped before
// the search. Per-trial substreams make the sample set seed-reproducible.
SampleSummary sample_random_ramsey(int n, double p, int trials, std::uint64_t seed,
                                   int n_cap = 12, std::uint64_t budget = 1'000'000'000);

}  // namespace extremal
