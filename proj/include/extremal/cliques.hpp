#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

struct CliqueCount {
    int r;
    std::uint64_t total;  // unordered r-cliques, each counted once
};

// Exact number of r-cliques. Recursion over neighborhood intersections in
// degeneracy order; workers > 1 splits the top-level branches, with the
// per-branch sums combined in a fixed order so the result is identical to
// the sequential run.
CliqueCount count_cliques(const Graph& g, int r, int workers = 1);

// r-cliques lying entirely inside `cand`.
std::uint64_t count_cliques_within(const Graph& g, const Bitset& cand, int r);

// Visits every r-clique once, vertices ascending; return false to stop.
void for_each_clique(const Graph& g, int r,
                     const std::function<bool(const std::vector<int>&)>& visit);

struct JointReport {
    int r;
    std::uint64_t size = 0;  // max over edges of #K_r containing the edge
    std::optional<std::pair<int, int>> best_edge;  // lex-smallest maximizer
};

JointReport joint_number(const Graph& g, int r);

struct CliqueWitness {
    int size = 0;
    std::vector<int> vertices;
};

// Exact maximum clique, branch and bound with a greedy coloring bound.
CliqueWitness max_clique(const Graph& g);

// alpha(G), computed as the clique number of the complement.
int independence_number(const Graph& g);

// Matula--Beck smallest-last order; ties broken by smallest label.
std::vector<int> degeneracy_order(const Graph& g);

}  // namespace extremal
