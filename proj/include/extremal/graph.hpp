#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "extremal/bitset.hpp"

namespace extremal {

// Undirected simple graph on vertices 0..n-1, one bit row per vertex.
// Values are treated as immutable once built; every operation below takes
// const&, so sharing across threads is safe.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    const Bitset& row(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    // Edges as (u,v) with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
};

std::uint64_t edge_count(const Graph& g);
int min_degree(const Graph& g);  // 0 for the empty-vertex graph
Graph complement(const Graph& g);

// Keeps the listed vertices, relabeled 0..k-1 in the order given.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

// Vertex i becomes an independent set of sizes[i] vertices; adjacency is
// inherited. sizes[i] == 0 deletes the vertex. New labels are grouped by
// original vertex, in label order.
Graph blow_up(const Graph& g, std::span<const int> sizes);

struct KstWitness {
    std::vector<int> left;   // s vertices
    std::vector<int> right;  // t common neighbors
};

// A K_{s,t} (s <= t) in g: some s-set of vertices with >= t common
// neighbors. nullopt means g is K_{s,t}-free.
std::optional<KstWitness> find_kst(const Graph& g, int s, int t);
bool is_kst_free(const Graph& g, int s, int t);

}  // namespace extremal
