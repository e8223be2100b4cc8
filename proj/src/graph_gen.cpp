#include "extremal/graph_gen.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace extremal {

namespace {

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> target;  // degree at each position (non-increasing)
    std::vector<int> perm;    // perm[i] = original vertex at position i
    std::vector<char> used;
    std::string best;
    std::string cur;

    explicit CanonSearch(const Graph& gg) : g(gg), n(gg.order()), used(gg.order(), 0) {
        std::vector<int> degs(n);
        for (int v = 0; v < n; ++v) degs[v] = g.degree(v);
        target = degs;
        std::sort(target.begin(), target.end(), std::greater<int>());
        perm.reserve(n);
        cur.reserve(n * (n - 1) / 2);
    }

    void rec(int pos) {
        if (pos == n) {
            if (best.empty() || cur < best) best = cur;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || g.degree(v) != target[pos]) continue;
            std::size_t len0 = cur.size();
            for (int j = 0; j < pos; ++j) cur.push_back(g.has_edge(v, perm[j]) ? '1' : '0');
            // prune once the whole prefix already exceeds the best string
            if (!best.empty() && best.compare(0, cur.size(), cur) < 0) {
                cur.resize(len0);
                continue;
            }
            used[v] = 1;
            perm.push_back(v);
            rec(pos + 1);
            perm.pop_back();
            used[v] = 0;
            cur.resize(len0);
        }
    }
};

}  // namespace

std::string canonical_form(const Graph& g) {
    if (g.order() == 0) return "";
    CanonSearch s(g);
    s.rec(0);
    return std::to_string(g.order()) + ":" + s.best;
}

std::vector<Graph> all_graphs(int n) {
    if (n < 0) throw std::domain_error("all_graphs: negative n");
    std::vector<Graph> level{Graph(0)};
    for (int m = 0; m < n; ++m) {
        std::vector<Graph> next;
        std::unordered_set<std::string> seen;
        for (const Graph& g : level) {
            for (unsigned mask = 0; mask < (1u << m); ++mask) {
                Graph h(m + 1);
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                for (int u = 0; u < m; ++u)
                    if (mask & (1u << u)) h.add_edge(u, m);
                std::string form = canonical_form(h);
                if (seen.insert(form).second) next.push_back(h);
            }
        }
        level = std::move(next);
    }
    return level;
}

Graph random_gnm(int n, std::uint64_t m, SplitMix64& rng) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    if (m > pairs.size()) throw std::domain_error("random_gnm: too many edges");
    // partial Fisher-Yates: the first m positions become the edge set
    for (std::uint64_t i = 0; i < m; ++i) {
        std::uint64_t j = i + rng.below(pairs.size() - i);
        std::swap(pairs[i], pairs[j]);
    }
    Graph g(n);
    for (std::uint64_t i = 0; i < m; ++i) g.add_edge(pairs[i].first, pairs[i].second);
    return g;
}

Graph random_gnp(int n, double p, SplitMix64& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (rng.uniform01() < p) g.add_edge(u, v);
    return g;
}

Graph random_alpha2(int n, SplitMix64& rng) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
        std::uint64_t j = i + rng.below(pairs.size() - i);
        std::swap(pairs[i], pairs[j]);
    }
    std::uint64_t cap = pairs.empty() ? 0 : rng.below(pairs.size() + 1);
    Graph co(n);  // complement under construction, kept triangle-free
    std::uint64_t added = 0;
    for (auto [u, v] : pairs) {
        if (added >= cap) break;
        if (co.row(u).intersects(co.row(v))) continue;  // would close a triangle
        co.add_edge(u, v);
        ++added;
    }
    return complement(co);
}

}  // namespace extremal
