#include "extremal/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "extremal/checked.hpp"
#include "extremal/cliques.hpp"
#include "extremal/constructions.hpp"
#include "extremal/rng.hpp"

namespace extremal {

EdgeColoring::EdgeColoring(int nn, int qq) : n(nn), q(qq) {
    if (n < 0 || q < 1 || q > 255) throw std::domain_error("EdgeColoring: bad n or q");
    color.assign(std::size_t(n) * (n - 1) / 2, 0);
}

std::size_t EdgeColoring::pair_index(int u, int v) {
    if (u > v) std::swap(u, v);
    return std::size_t(v) * (v - 1) / 2 + u;
}

void EdgeColoring::set_color(int u, int v, int c) {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n)
        throw std::domain_error("EdgeColoring: bad pair");
    if (c < 0 || c >= q) throw std::domain_error("EdgeColoring: color out of range");
    color[pair_index(u, v)] = std::uint8_t(c);
}

Graph EdgeColoring::color_graph(int c) const {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (color[pair_index(u, v)] == c) g.add_edge(u, v);
    return g;
}

namespace {

// Pattern vertex order for embedding search: each vertex after the first
// has as many already-placed neighbors as possible.
std::vector<int> embedding_order(const Graph& p) {
    const int h = p.order();
    std::vector<int> order;
    std::vector<char> placed(h, 0);
    for (int step = 0; step < h; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < h; ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (int u : order)
                if (p.has_edge(u, v)) ++links;
            if (links > best_links || (links == best_links && p.degree(v) > best_deg)) {
                best = v;
                best_links = links;
                best_deg = p.degree(v);
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }
    return order;
}

std::uint64_t embed_rec(const Graph& host, const Graph& p, const std::vector<int>& order,
                        std::size_t depth, std::vector<int>& image, Bitset& used) {
    if (depth == order.size()) return 1;
    int pv = order[depth];
    Bitset cand(host.order());
    bool constrained = false;
    for (std::size_t i = 0; i < depth; ++i) {
        if (!p.has_edge(order[i], pv)) continue;
        if (!constrained) {
            cand = host.row(image[order[i]]);
            constrained = true;
        } else {
            cand &= host.row(image[order[i]]);
        }
    }
    if (!constrained) {
        for (int v = 0; v < host.order(); ++v) cand.set(v);
    }
    cand.setminus_with(used);
    std::uint64_t total = 0;
    for (int v = cand.first(); v != -1; v = cand.next(v)) {
        image[pv] = v;
        used.set(v);
        total = checked_add(total, embed_rec(host, p, order, depth + 1, image, used));
        used.reset(v);
    }
    return total;
}

}  // namespace

std::uint64_t count_labeled_embeddings(const Graph& host, const Graph& pattern) {
    if (pattern.order() == 0) return 1;
    if (pattern.order() > host.order()) return 0;
    std::vector<int> order = embedding_order(pattern);
    std::vector<int> image(pattern.order(), -1);
    Bitset used(host.order());
    return embed_rec(host, pattern, order, 0, image, used);
}

std::uint64_t automorphism_count(const Graph& h) {
    if (h.order() > 10) throw std::domain_error("automorphism_count: pattern too large");
    std::uint64_t a = count_labeled_embeddings(h, h);
    // an edge-preserving permutation preserves the (equal, finite) edge count,
    // so it is an automorphism
    return a;
}

std::uint64_t count_subgraph_copies(const Graph& host, const Graph& pattern) {
    if (pattern.order() == 0) return 1;
    std::uint64_t emb = count_labeled_embeddings(host, pattern);
    std::uint64_t aut = automorphism_count(pattern);
    if (emb % aut != 0) throw std::logic_error("embedding count not divisible by |Aut|");
    return emb / aut;
}

std::uint64_t copies_in_complete(const Graph& h, int n) {
    std::uint64_t fact = 1;
    for (int i = 2; i <= h.order(); ++i) fact = checked_mul(fact, std::uint64_t(i));
    return checked_mul(checked_binomial(std::uint64_t(n), std::uint64_t(h.order())),
                       fact / automorphism_count(h));
}

MonoCount count_mono(const EdgeColoring& c, const Graph& h, int workers) {
    for (int v = 0; v < h.order(); ++v)
        if (h.degree(v) == 0)
            throw std::domain_error("count_mono: pattern has an isolated vertex");
    MonoCount mc;
    mc.per_color.assign(c.q, 0);
    if (h.order() > c.n) return mc;
    auto run = [&](int begin, int stride) {
        for (int col = begin; col < c.q; col += stride)
            mc.per_color[col] = count_subgraph_copies(c.color_graph(col), h);
    };
    if (workers <= 1 || c.q == 1) {
        run(0, 1);
    } else {
        int nthreads = std::min(workers, c.q);
        std::vector<std::thread> pool;
        for (int w = 0; w < nthreads; ++w) pool.emplace_back(run, w, nthreads);
        for (auto& t : pool) t.join();
    }
    for (int col = 0; col < c.q; ++col) mc.total = checked_add(mc.total, mc.per_color[col]);
    return mc;
}

MonoCount count_mono_pendant(const EdgeColoring& c, int k, int ell) {
    if (k < 2 || ell < 0) throw std::domain_error("count_mono_pendant: k >= 2, ell >= 0");
    MonoCount mc;
    mc.per_color.assign(c.q, 0);
    if (k + ell > c.n) return mc;
    for (int col = 0; col < c.q; ++col) {
        Graph g = c.color_graph(col);
        std::uint64_t count = 0;
        if (ell == 0) {
            count = count_cliques(g, k).total;
        } else if (k == 2) {
            // T(2, ell) is the star with ell+1 leaves
            for (int v = 0; v < g.order(); ++v)
                count = checked_add(
                    count, checked_binomial(std::uint64_t(g.degree(v)), std::uint64_t(ell + 1)));
        } else {
            for_each_clique(g, k, [&](const std::vector<int>& clique) {
                for (int v : clique) {
                    int outside = g.degree(v) - (k - 1);
                    count = checked_add(
                        count, checked_binomial(std::uint64_t(outside), std::uint64_t(ell)));
                }
                return true;
            });
        }
        mc.per_color[col] = count;
        mc.total = checked_add(mc.total, count);
    }
    return mc;
}

std::vector<int> partition_classes(int n, int parts) {
    if (parts < 1 || parts > n) throw std::domain_error("partition_coloring: bad part count");
    std::vector<int> sizes = balanced_parts(n, parts);
    std::vector<int> cls(n);
    int at = 0;
    for (int p = 0; p < parts; ++p)
        for (int i = 0; i < sizes[p]; ++i) cls[at++] = p;
    return cls;
}

EdgeColoring partition_coloring(int n, int parts) {
    std::vector<int> cls = partition_classes(n, parts);
    EdgeColoring c(n, 2);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) c.set_color(u, v, cls[u] == cls[v] ? 0 : 1);
    return c;
}

EdgeColoring blowup_coloring(const EdgeColoring& base, int n, int inner_color) {
    if (base.n < 1) throw std::domain_error("blowup_coloring: empty base");
    if (n < base.n) throw std::domain_error("blowup_coloring: n below base order");
    if (inner_color < base.q)
        throw std::domain_error("blowup_coloring: inner color must be fresh");
    std::vector<int> block = partition_classes(n, base.n);
    EdgeColoring c(n, std::max(base.q, inner_color + 1));
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            c.set_color(u, v, block[u] == block[v] ? inner_color
                                                   : base.color_of(block[u], block[v]));
    return c;
}

namespace {

// DFS state for multiplicity_exact. Pairs are colored in colex order; when
// pair e gets color c we add the copies of h whose colex-last pair is e,
// entirely in color c. Each copy is finished exactly once, so the partial
// count is exact at the leaves and monotone along any branch.
struct MultiplicitySearch {
    const Graph& h;
    int n, q;
    std::vector<std::pair<int, int>> pairs;    // colex
    std::vector<Graph> colored;                // one partial graph per color
    std::vector<int> assigned;
    std::uint64_t partial = 0;
    std::uint64_t best = ~std::uint64_t(0);
    std::vector<int> best_assign;
    std::uint64_t nodes = 0, budget;
    std::uint64_t aut;
    bool out_of_budget = false;

    MultiplicitySearch(const Graph& hh, int nn, int qq, std::uint64_t b)
        : h(hh), n(nn), q(qq), budget(b), aut(automorphism_count(hh)) {
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
        colored.assign(q, Graph(n));
        assigned.assign(pairs.size(), -1);
    }

    // Copies of h whose colex-last pair is pairs[idx], entirely in color c.
    // Every counted embedding runs through that pair, and the remaining
    // pattern edges can only map to already-colored (earlier) pairs.
    std::uint64_t copies_closed_by(int idx, int c) {
        auto [u, v] = pairs[idx];
        const Graph& gc = colored[c];  // edge (u,v) already added
        std::uint64_t embeddings = 0;
        std::vector<int> image(h.order(), -1);
        Bitset used(n);
        used.set(u);
        used.set(v);
        for (auto [a, b] : h.edges())
            for (int flip = 0; flip < 2; ++flip) {
                int pa = flip ? b : a, pb = flip ? a : b;
                image[pa] = u;
                image[pb] = v;
                embeddings = checked_add(embeddings, embed_anchored(gc, image, used));
                image[pa] = image[pb] = -1;
            }
        if (embeddings % aut != 0)
            throw std::logic_error("anchored embeddings not divisible by |Aut|");
        return embeddings / aut;
    }

    std::uint64_t embed_anchored(const Graph& gc, std::vector<int>& image, Bitset& used) {
        int next = -1;
        for (int v = 0; v < h.order(); ++v)
            if (image[v] == -1) {
                next = v;
                break;
            }
        if (next == -1) return 1;
        Bitset cand(n);
        bool constrained = false;
        for (int w = 0; w < h.order(); ++w) {
            if (image[w] == -1 || !h.has_edge(w, next)) continue;
            if (!constrained) {
                cand = gc.row(image[w]);
                constrained = true;
            } else {
                cand &= gc.row(image[w]);
            }
        }
        if (!constrained)
            for (int v = 0; v < n; ++v) cand.set(v);
        cand.setminus_with(used);
        std::uint64_t total = 0;
        for (int v = cand.first(); v != -1; v = cand.next(v)) {
            image[next] = v;
            used.set(v);
            total = checked_add(total, embed_anchored(gc, image, used));
            used.reset(v);
            image[next] = -1;
        }
        return total;
    }

    void rec(std::size_t idx, int used_colors) {
        if (out_of_budget || partial >= best) return;
        if (idx == pairs.size()) {
            best = partial;
            best_assign = assigned;
            return;
        }
        if (++nodes > budget) {
            out_of_budget = true;
            return;
        }
        auto [u, v] = pairs[idx];
        int limit = std::min(q - 1, used_colors);  // first-appearance canonical
        for (int c = 0; c <= limit; ++c) {
            colored[c].add_edge(u, v);
            std::uint64_t add = copies_closed_by(int(idx), c);
            assigned[idx] = c;
            partial += add;
            rec(idx + 1, std::max(used_colors, c + 1));
            partial -= add;
            assigned[idx] = -1;
            colored[c].remove_edge(u, v);
        }
    }
};

}  // namespace

MultiplicityReport multiplicity_exact(const Graph& h, int n, int q, std::uint64_t budget) {
    for (int v = 0; v < h.order(); ++v)
        if (h.degree(v) == 0)
            throw std::domain_error("multiplicity_exact: pattern has an isolated vertex");
    if (n < 1 || q < 1) throw std::domain_error("multiplicity_exact: bad n or q");
    MultiplicityReport rep;
    if (h.order() > n) {  // no copies at all
        rep.exact = true;
        rep.witness = EdgeColoring(n, q);
        return rep;
    }
    MultiplicitySearch search(h, n, q, budget);
    // all-one-color incumbent: a valid upper bound even if the budget dies
    // before the DFS reaches any leaf, and a pruning baseline otherwise
    search.best = count_mono(EdgeColoring(n, q), h).total;
    search.best_assign.assign(search.pairs.size(), 0);
    search.rec(0, 0);
    rep.nodes = search.nodes;
    if (search.out_of_budget) {
        rep.exact = false;
        rep.lower = 0;
        rep.upper = search.best;
    } else {
        rep.exact = true;
        rep.lower = rep.upper = search.best;
    }
    rep.witness = EdgeColoring(n, q);
    for (std::size_t i = 0; i < search.pairs.size(); ++i)
        rep.witness.set_color(search.pairs[i].first, search.pairs[i].second,
                              search.best_assign[i]);
    return rep;
}

EstimateReport multiplicity_upper_estimate(const Graph& h, int n, int q,
                                           std::uint64_t trials, std::uint64_t seed) {
    for (int v = 0; v < h.order(); ++v)
        if (h.degree(v) == 0)
            throw std::domain_error("estimate: pattern has an isolated vertex");
    EstimateReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.reference = std::pow(double(q), 1.0 - double(edge_count(h)));
    if (trials == 0) return rep;
    const double denom = double(copies_in_complete(h, n));
    std::vector<double> xs(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        SplitMix64 rng = substream(seed, t);
        EdgeColoring c(n, q);
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) c.set_color(u, v, int(rng.below(q)));
        xs[t] = double(count_mono(c, h).total) / denom;
    }
    double sum = std::accumulate(xs.begin(), xs.end(), 0.0);
    rep.mean = sum / double(trials);
    double ss = 0;
    for (double x : xs) ss += (x - rep.mean) * (x - rep.mean);
    rep.stddev = trials > 1 ? std::sqrt(ss / double(trials - 1)) : 0.0;
    rep.stderror = rep.stddev / std::sqrt(double(trials));
    rep.within_3se = std::abs(rep.mean - rep.reference) <= 3 * rep.stderror;
    return rep;
}

void write_coloring_json(std::ostream& out, const EdgeColoring& c) {
    nlohmann::json j;
    j["n"] = c.n;
    j["q"] = c.q;
    auto& edges = j["edges"] = nlohmann::json::array();
    for (int u = 0; u < c.n; ++u)
        for (int v = u + 1; v < c.n; ++v)
            edges.push_back({u, v, c.color_of(u, v)});
    out << j.dump(2) << "\n";
}

EdgeColoring read_coloring_json(std::istream& in) {
    nlohmann::json j = nlohmann::json::parse(in);
    EdgeColoring c(j.at("n").get<int>(), j.at("q").get<int>());
    std::vector<char> seen(c.color.size(), 0);
    for (const auto& e : j.at("edges")) {
        int u = e.at(0).get<int>(), v = e.at(1).get<int>(), col = e.at(2).get<int>();
        if (u == v || u < 0 || v < 0 || u >= c.n || v >= c.n)
            throw std::runtime_error("coloring json: bad pair");
        std::size_t idx = EdgeColoring::pair_index(u, v);
        if (seen[idx]) throw std::runtime_error("coloring json: duplicate pair");
        seen[idx] = 1;
        c.set_color(u, v, col);
    }
    for (char s : seen)
        if (!s) throw std::runtime_error("coloring json: missing pair");
    return c;
}

void write_coloring_text(std::ostream& out, const EdgeColoring& c) {
    out << c.n << " " << c.q << "\n";
    for (int u = 0; u + 1 < c.n; ++u) {
        for (int v = u + 1; v < c.n; ++v)
            out << c.color_of(u, v) << (v + 1 < c.n ? " " : "");
        out << "\n";
    }
}

EdgeColoring read_coloring_text(std::istream& in) {
    int n, q;
    if (!(in >> n >> q)) throw std::runtime_error("coloring text: bad header");
    EdgeColoring c(n, q);
    for (int u = 0; u + 1 < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int col;
            if (!(in >> col)) throw std::runtime_error("coloring text: truncated");
            c.set_color(u, v, col);
        }
    return c;
}

EdgeColoring read_coloring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coloring file: " + path);
    char first = 0;
    in >> first;
    in.seekg(0);
    if (first == '{') return read_coloring_json(in);
    return read_coloring_text(in);
}

}  // namespace extremal
