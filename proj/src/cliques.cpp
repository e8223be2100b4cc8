#include "extremal/cliques.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "extremal/checked.hpp"

namespace extremal {

std::vector<int> degeneracy_order(const Graph& g) {
    const int n = g.order();
    std::vector<int> deg(n), order;
    std::vector<char> removed(n, 0);
    order.reserve(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
        removed[best] = 1;
        order.push_back(best);
        g.row(best).for_each([&](int u) {
            if (!removed[u]) --deg[u];
        });
    }
    return order;
}

std::uint64_t count_cliques_within(const Graph& g, const Bitset& cand, int r) {
    if (r == 0) return 1;
    if (r == 1) return std::uint64_t(cand.count());
    if (cand.count() < r) return 0;
    std::uint64_t total = 0;
    Bitset rest = cand;  // vertices not yet taken as the smallest clique member
    for (int v = rest.first(); v != -1; v = rest.first()) {
        rest.reset(v);
        Bitset next = rest;
        next &= g.row(v);
        total = checked_add(total, count_cliques_within(g, next, r - 1));
    }
    return total;
}

namespace {

bool enumerate_cliques(const Graph& g, const Bitset& cand, int r,
                       std::vector<int>& current,
                       const std::function<bool(const std::vector<int>&)>& visit) {
    if (r == 0) return visit(current);
    Bitset rest = cand;
    for (int v = rest.first(); v != -1; v = rest.first()) {
        rest.reset(v);
        Bitset next = rest;
        next &= g.row(v);
        current.push_back(v);
        bool keep = enumerate_cliques(g, next, r - 1, current, visit);
        current.pop_back();
        if (!keep) return false;
    }
    return true;
}

}  // namespace

void for_each_clique(const Graph& g, int r,
                     const std::function<bool(const std::vector<int>&)>& visit) {
    if (r < 0) throw std::domain_error("for_each_clique: negative order");
    Bitset all(g.order());
    for (int v = 0; v < g.order(); ++v) all.set(v);
    std::vector<int> current;
    enumerate_cliques(g, all, r, current, visit);
}

CliqueCount count_cliques(const Graph& g, int r, int workers) {
    const int n = g.order();
    if (r < 1 || r > n) throw std::domain_error("count_cliques requires 1 <= r <= n");
    if (r == 1) return {r, std::uint64_t(n)};

    // Relabel by degeneracy order so the ascending recursion walks
    // small-back-degree vertices first.
    std::vector<int> order = degeneracy_order(g);
    Graph h = induced_subgraph(g, order);

    // Branch on the smallest clique vertex; branch v only sees later vertices.
    std::vector<Bitset> later(n, Bitset(n));
    for (int v = 0; v < n; ++v) {
        Bitset b = h.row(v);
        for (int u = 0; u <= v; ++u) b.reset(u);
        later[v] = b;
    }

    std::vector<std::uint64_t> branch(n, 0);
    auto run = [&](int begin, int stride) {
        for (int v = begin; v < n; v += stride)
            branch[v] = count_cliques_within(h, later[v], r - 1);
    };
    if (workers <= 1) {
        run(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
        for (auto& t : pool) t.join();
    }
    std::uint64_t total = 0;
    for (int v = 0; v < n; ++v) total = checked_add(total, branch[v]);
    return {r, total};
}

JointReport joint_number(const Graph& g, int r) {
    if (r < 2) throw std::domain_error("joint_number requires r >= 2");
    JointReport rep{r, 0, std::nullopt};
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.has_edge(u, v)) continue;
            Bitset common = g.row(u);
            common &= g.row(v);
            std::uint64_t cnt =
                r > g.order() ? 0 : count_cliques_within(g, common, r - 2);
            if (!rep.best_edge || cnt > rep.size) {
                rep.size = cnt;
                rep.best_edge = {u, v};
            }
        }
    if (!rep.best_edge) rep.size = 0;
    return rep;
}

namespace {

struct CliqueSearch {
    const Graph& g;
    CliqueWitness best;
    std::vector<int> current;

    explicit CliqueSearch(const Graph& gg) : g(gg) {}

    // Greedy coloring bound: vertices of P grouped into color classes,
    // processed in reverse so the bound |R| + color is tight-ish.
    void expand(std::vector<int>& p) {
        if (p.empty()) {
            if (int(current.size()) > best.size) {
                best.size = int(current.size());
                best.vertices = current;
            }
            return;
        }
        std::vector<std::pair<int, int>> colored;  // (color, vertex)
        colored.reserve(p.size());
        std::vector<Bitset> classes;
        for (int v : p) {
            std::size_t c = 0;
            while (c < classes.size() && classes[c].intersects(g.row(v))) ++c;
            if (c == classes.size()) classes.emplace_back(g.order());
            classes[c].set(v);
            colored.emplace_back(int(c) + 1, v);
        }
        std::stable_sort(colored.begin(), colored.end(),
                         [](auto& a, auto& b) { return a.first < b.first; });
        for (int i = int(colored.size()) - 1; i >= 0; --i) {
            if (int(current.size()) + colored[i].first <= best.size) return;
            int v = colored[i].second;
            current.push_back(v);
            std::vector<int> next;
            next.reserve(i);
            for (int j = 0; j < i; ++j)
                if (g.has_edge(v, colored[j].second)) next.push_back(colored[j].second);
            expand(next);
            current.pop_back();
        }
    }
};

}  // namespace

CliqueWitness max_clique(const Graph& g) {
    CliqueSearch s(g);
    // Degeneracy order gives both a good search order and an initial clique.
    std::vector<int> order = degeneracy_order(g);
    std::reverse(order.begin(), order.end());
    s.expand(order);
    std::sort(s.best.vertices.begin(), s.best.vertices.end());
    return s.best;
}

int independence_number(const Graph& g) { return max_clique(complement(g)).size; }

}  // namespace extremal
