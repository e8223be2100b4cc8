#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

// Disjoint edges with at least s connecting edges between the endpoint
// sets of every pair; pairwise_counts[i][j] is that connecting count.
struct MatchingCert {
    std::vector<std::pair<int, int>> edges;
    int s = 1;
    std::vector<std::vector<int>> pairwise_counts;

    std::size_t size() const { return edges.size(); }
};

// alpha(G) <= 2, checked as triangle-freeness of the complement.
bool alpha_at_most_2(const Graph& g);

// Edges of G between the endpoint sets of two disjoint edges (0..4).
int connecting_edges(const Graph& g, std::pair<int, int> e, std::pair<int, int> f);

// Rebuilds pairwise counts from g and validates disjointness and the
// s-threshold. Throws on an invalid certificate.
MatchingCert make_certificate(const Graph& g, std::vector<std::pair<int, int>> edges, int s);

struct MatchingReport {
    MatchingCert cert;
    std::uint64_t nodes = 0;
};

// Exact maximum s-connected matching (1 <= s <= 4). Candidate edges are
// ordered by degree-sum descending (ties lexicographic); the compatibility
// relation (disjoint + >= s connections) is an exact pairwise condition, so
// the search is a max-clique branch and bound over that relation.
MatchingReport max_s_connected_matching(const Graph& g, int s);

struct PairNeighborhoods {
    int u = 0, v = 0;
    std::vector<int> a;  // adjacent to neither u nor v (u,v excluded)
    std::vector<int> b;  // adjacent to at most one of u, v (u,v excluded)
};

PairNeighborhoods pair_neighborhoods(const Graph& g, int u, int v);

// Auxiliary conflict graph over the candidate edge set F: vertices are
// edges of g (optionally filtered to |A_{u,v}| <= a_threshold), two
// adjacent iff they share a vertex or have at most s-1 connecting edges.
// Independent sets are exactly s-connected matchings. s in {2, 3}.
struct AuxGraph {
    Graph h;
    std::vector<std::pair<int, int>> pairs;  // vertex i of h = pairs[i] in g
};
AuxGraph auxiliary_graph(const Graph& g, int s,
                         std::optional<int> a_threshold = std::nullopt);

enum class AuxMode { Greedy, Exact };

// Independent set in the auxiliary graph converted to a certificate
// (revalidated against g from scratch).
MatchingReport matching_via_aux(const Graph& g, int s, AuxMode mode,
                                std::optional<int> a_threshold = std::nullopt);

struct TriangleStructureReport {
    std::uint64_t triangles = 0;           // triangles of H' = auxiliary_graph(g, 2)
    std::uint64_t disjoint_triples = 0;    // triangles with three pairwise-disjoint pairs
    bool holds = false;                    // disjoint_triples == 0
    std::uint64_t aux_vertices = 0;
    std::uint64_t aux_edges = 0;
};

// Requires alpha(g) <= 2: every triangle of H' must have two intersecting
// pairs.
TriangleStructureReport check_hprime_triangle_structure(const Graph& g);

struct BBoundReport {
    bool holds = false;     // |B_{u,v}| <= 2(n - delta(G)) for every edge
    int worst_b = 0;
    int bound = 0;
    std::optional<std::pair<int, int>> worst_edge;
};

BBoundReport b_bound_report(const Graph& g);

}  // namespace extremal
