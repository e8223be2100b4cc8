#include "extremal/matching.hpp"

#include <algorithm>
#include <stdexcept>

#include "extremal/cliques.hpp"

namespace extremal {

bool alpha_at_most_2(const Graph& g) {
    Graph co = complement(g);
    for (auto [u, v] : co.edges())
        if (co.row(u).intersects(co.row(v))) return false;
    return true;
}

int connecting_edges(const Graph& g, std::pair<int, int> e, std::pair<int, int> f) {
    int c = 0;
    for (int x : {e.first, e.second})
        for (int y : {f.first, f.second})
            if (g.has_edge(x, y)) ++c;
    return c;
}

MatchingCert make_certificate(const Graph& g, std::vector<std::pair<int, int>> edges,
                              int s) {
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (!g.has_edge(u, v)) throw std::domain_error("certificate edge not in graph");
    }
    std::sort(edges.begin(), edges.end());
    MatchingCert cert;
    cert.edges = edges;
    cert.s = s;
    const int t = int(edges.size());
    cert.pairwise_counts.assign(t, std::vector<int>(t, 0));
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d)
                throw std::domain_error("certificate edges are not disjoint");
            int k = connecting_edges(g, edges[i], edges[j]);
            if (k < s) throw std::domain_error("certificate pair below s connections");
            cert.pairwise_counts[i][j] = cert.pairwise_counts[j][i] = k;
        }
    return cert;
}

namespace {

// Compatibility graph: vertices are candidate edges, adjacency means the
// two edges can sit together in an s-connected matching.
struct Candidates {
    std::vector<std::pair<int, int>> edges;
    Graph compat;
};

Candidates build_candidates(const Graph& g, int s) {
    Candidates c;
    c.edges = g.edges();
    std::stable_sort(c.edges.begin(), c.edges.end(),
                     [&](const std::pair<int, int>& a, const std::pair<int, int>& b) {
                         int da = g.degree(a.first) + g.degree(a.second);
                         int db = g.degree(b.first) + g.degree(b.second);
                         if (da != db) return da > db;
                         return a < b;
                     });
    const int m = int(c.edges.size());
    c.compat = Graph(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = c.edges[i];
            auto [x, y] = c.edges[j];
            if (a == x || a == y || b == x || b == y) continue;
            if (connecting_edges(g, c.edges[i], c.edges[j]) >= s) c.compat.add_edge(i, j);
        }
    return c;
}

}  // namespace

MatchingReport max_s_connected_matching(const Graph& g, int s) {
    if (s < 1 || s > 4) throw std::domain_error("s-connected matching requires 1 <= s <= 4");
    Candidates cand = build_candidates(g, s);
    CliqueWitness best = max_clique(cand.compat);
    std::vector<std::pair<int, int>> chosen;
    for (int i : best.vertices) chosen.push_back(cand.edges[i]);
    MatchingReport rep;
    rep.cert = make_certificate(g, chosen, s);
    return rep;
}

PairNeighborhoods pair_neighborhoods(const Graph& g, int u, int v) {
    if (u == v) throw std::domain_error("pair_neighborhoods requires u != v");
    PairNeighborhoods pn;
    pn.u = u;
    pn.v = v;
    for (int w = 0; w < g.order(); ++w) {
        if (w == u || w == v) continue;
        int adj = int(g.has_edge(w, u)) + int(g.has_edge(w, v));
        if (adj == 0) pn.a.push_back(w);
        if (adj <= 1) pn.b.push_back(w);
    }
    return pn;
}

AuxGraph auxiliary_graph(const Graph& g, int s, std::optional<int> a_threshold) {
    if (s != 2 && s != 3) throw std::domain_error("auxiliary graph defined for s in {2,3}");
    AuxGraph aux;
    for (auto e : g.edges()) {
        if (a_threshold) {
            PairNeighborhoods pn = pair_neighborhoods(g, e.first, e.second);
            if (int(pn.a.size()) > *a_threshold) continue;
        }
        aux.pairs.push_back(e);
    }
    const int m = int(aux.pairs.size());
    aux.h = Graph(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = aux.pairs[i];
            auto [x, y] = aux.pairs[j];
            bool share = a == x || a == y || b == x || b == y;
            if (share || connecting_edges(g, aux.pairs[i], aux.pairs[j]) <= s - 1)
                aux.h.add_edge(i, j);
        }
    return aux;
}

namespace {

// Repeatedly take a minimum-degree vertex and delete its neighborhood.
std::vector<int> greedy_independent_set(const Graph& g) {
    std::vector<int> picked;
    Bitset alive(g.order());
    for (int v = 0; v < g.order(); ++v) alive.set(v);
    while (alive.any()) {
        int best = -1, best_deg = -1;
        for (int v = alive.first(); v != -1; v = alive.next(v)) {
            int d = alive.count_and(g.row(v));
            if (best == -1 || d < best_deg) {
                best = v;
                best_deg = d;
            }
        }
        picked.push_back(best);
        alive.reset(best);
        alive.setminus_with(g.row(best));
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

}  // namespace

MatchingReport matching_via_aux(const Graph& g, int s, AuxMode mode,
                                std::optional<int> a_threshold) {
    AuxGraph aux = auxiliary_graph(g, s, a_threshold);
    std::vector<int> indep;
    if (mode == AuxMode::Greedy) {
        indep = greedy_independent_set(aux.h);
    } else {
        indep = max_clique(complement(aux.h)).vertices;
    }
    std::vector<std::pair<int, int>> chosen;
    for (int i : indep) chosen.push_back(aux.pairs[i]);
    MatchingReport rep;
    rep.cert = make_certificate(g, chosen, s);
    return rep;
}

TriangleStructureReport check_hprime_triangle_structure(const Graph& g) {
    if (!alpha_at_most_2(g))
        throw std::domain_error("triangle-structure claim requires alpha(G) <= 2");
    AuxGraph aux = auxiliary_graph(g, 2);
    TriangleStructureReport rep;
    rep.aux_vertices = aux.pairs.size();
    rep.aux_edges = edge_count(aux.h);
    const int m = int(aux.pairs.size());
    auto disjoint = [&](int i, int j) {
        auto [a, b] = aux.pairs[i];
        auto [x, y] = aux.pairs[j];
        return a != x && a != y && b != x && b != y;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (!aux.h.has_edge(i, j)) continue;
            Bitset common = aux.h.row(i);
            common &= aux.h.row(j);
            for (int k = common.next(j); k != -1; k = common.next(k)) {
                ++rep.triangles;
                if (disjoint(i, j) && disjoint(i, k) && disjoint(j, k))
                    ++rep.disjoint_triples;
            }
        }
    rep.holds = rep.disjoint_triples == 0;
    return rep;
}

BBoundReport b_bound_report(const Graph& g) {
    BBoundReport rep;
    rep.bound = 2 * (g.order() - min_degree(g));
    rep.holds = true;
    for (auto [u, v] : g.edges()) {
        int b = int(pair_neighborhoods(g, u, v).b.size());
        if (b > rep.worst_b) {
            rep.worst_b = b;
            rep.worst_edge = {u, v};
        }
        if (b > rep.bound) rep.holds = false;
    }
    return rep;
}

}  // namespace extremal
