#pragma once

#include <string>
#include <vector>

#include "extremal/graph.hpp"
#include "extremal/rng.hpp"

namespace extremal {

// Canonical form: the lexicographically smallest upper-triangle bit string
// (colex edge order) over all relabelings that list vertex degrees in
// non-increasing order. Two graphs are isomorphic iff their forms match.
// Intended for n <= ~9.
std::string canonical_form(const Graph& g);

// All graphs on n vertices, one representative per isomorphism class,
// grown by one-vertex extensions with canonical-form rejection.
std::vector<Graph> all_graphs(int n);

// Exactly m edges, uniform over edge sets.
Graph random_gnm(int n, std::uint64_t m, SplitMix64& rng);

// Each edge independently with probability p.
Graph random_gnp(int n, double p, SplitMix64& rng);

// Random graph with independence number <= 2 (complement kept
// triangle-free greedily over a shuffled candidate list).
Graph random_alpha2(int n, SplitMix64& rng);

}  // namespace extremal
