#include "extremal/graph.hpp"

#include <stdexcept>

namespace extremal {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::domain_error("negative vertex count");
    adj_.assign(n, Bitset(n));
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::domain_error("edge endpoint out of range");
    if (u == v) throw std::domain_error("self-loop rejected");
    adj_[u].set(v);
    adj_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        throw std::domain_error("remove_edge: bad endpoints");
    adj_[u].reset(v);
    adj_[v].reset(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) e.emplace_back(u, v);
        });
    return e;
}

std::uint64_t edge_count(const Graph& g) {
    std::uint64_t twice = 0;
    for (int v = 0; v < g.order(); ++v) twice += std::uint64_t(g.degree(v));
    return twice / 2;
}

int min_degree(const Graph& g) {
    if (g.order() == 0) return 0;
    int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

Graph complement(const Graph& g) {
    Graph c(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    const int k = int(vertices.size());
    std::vector<char> seen(g.order(), 0);
    for (int v : vertices) {
        if (v < 0 || v >= g.order())
            throw std::domain_error("induced_subgraph: vertex out of range");
        if (seen[v]) throw std::domain_error("induced_subgraph: duplicate vertex");
        seen[v] = 1;
    }
    Graph h(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(vertices[i], vertices[j])) h.add_edge(i, j);
    return h;
}

Graph blow_up(const Graph& g, std::span<const int> sizes) {
    if (int(sizes.size()) != g.order())
        throw std::domain_error("blow_up: one size per vertex required");
    std::vector<int> start(g.order() + 1, 0);
    for (int v = 0; v < g.order(); ++v) {
        if (sizes[v] < 0) throw std::domain_error("blow_up: negative part size");
        start[v + 1] = start[v] + sizes[v];
    }
    Graph h(start[g.order()]);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.has_edge(u, v)) continue;
            for (int a = start[u]; a < start[u + 1]; ++a)
                for (int b = start[v]; b < start[v + 1]; ++b) h.add_edge(a, b);
        }
    return h;
}

namespace {

bool kst_rec(const Graph& g, int s, int t, int from, std::vector<int>& chosen,
             const Bitset& common, KstWitness& out) {
    if (int(chosen.size()) == s) {
        if (common.count() < t) return false;
        out.left = chosen;
        out.right.clear();
        common.for_each([&](int v) {
            if (int(out.right.size()) < t) out.right.push_back(v);
        });
        return true;
    }
    // common neighborhoods only shrink, so prune on |common| + slack
    for (int v = from; v < g.order(); ++v) {
        Bitset next = common;
        if (chosen.empty())
            next = g.row(v);
        else
            next &= g.row(v);
        if (next.count() < t) continue;
        chosen.push_back(v);
        if (kst_rec(g, s, t, v + 1, chosen, next, out)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<KstWitness> find_kst(const Graph& g, int s, int t) {
    if (s < 1 || t < s) throw std::domain_error("find_kst requires 1 <= s <= t");
    std::vector<int> chosen;
    KstWitness w;
    if (kst_rec(g, s, t, 0, chosen, Bitset(g.order()), w)) return w;
    return std::nullopt;
}

bool is_kst_free(const Graph& g, int s, int t) { return !find_kst(g, s, t); }

}  // namespace extremal
