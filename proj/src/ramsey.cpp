#include "extremal/ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "extremal/graph_gen.hpp"
#include "extremal/rng.hpp"

namespace extremal {

namespace {

Graph strip_isolates(const Graph& g, std::vector<int>* kept = nullptr) {
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) keep.push_back(v);
    if (kept) *kept = keep;
    return induced_subgraph(g, keep);
}

// Is there a copy of `pattern` through host edge (u,v), all edges in `gc`?
// Pattern vertices are embedded most-constrained-first via the precomputed
// order pairs (edge anchor, then fill).
struct MonoDetector {
    const Graph& pattern;
    std::vector<std::pair<int, int>> pattern_edges;

    explicit MonoDetector(const Graph& p) : pattern(p), pattern_edges(p.edges()) {}

    bool closes_copy(const Graph& gc, int u, int v) const {
        std::vector<int> image(pattern.order(), -1);
        Bitset used(gc.order());
        used.set(u);
        used.set(v);
        for (auto [a, b] : pattern_edges)
            for (int flip = 0; flip < 2; ++flip) {
                int pa = flip ? b : a, pb = flip ? a : b;
                image[pa] = u;
                image[pb] = v;
                if (extend(gc, image, used)) return true;
                image[pa] = image[pb] = -1;
            }
        return false;
    }

    bool extend(const Graph& gc, std::vector<int>& image, Bitset& used) const {
        // pick the unplaced pattern vertex with the most placed neighbors
        int next = -1, best_links = -1;
        for (int w = 0; w < pattern.order(); ++w) {
            if (image[w] != -1) continue;
            int links = 0;
            for (int x = 0; x < pattern.order(); ++x)
                if (image[x] != -1 && pattern.has_edge(w, x)) ++links;
            if (links > best_links) {
                best_links = links;
                next = w;
            }
        }
        if (next == -1) return true;
        Bitset cand(gc.order());
        bool constrained = false;
        for (int w = 0; w < pattern.order(); ++w) {
            if (image[w] == -1 || !pattern.has_edge(w, next)) continue;
            if (!constrained) {
                cand = gc.row(image[w]);
                constrained = true;
            } else {
                cand &= gc.row(image[w]);
            }
        }
        if (!constrained)
            for (int x = 0; x < gc.order(); ++x) cand.set(x);
        cand.setminus_with(used);
        for (int x = cand.first(); x != -1; x = cand.next(x)) {
            image[next] = x;
            used.set(x);
            if (extend(gc, image, used)) return true;
            used.reset(x);
            image[next] = -1;
        }
        return false;
    }
};

struct GoodColoringSearch {
    const MonoDetector& detect;
    int n;
    std::vector<std::pair<int, int>> pairs;
    Graph red, blue;
    std::vector<int> assigned;
    std::uint64_t nodes = 0, budget;
    bool out_of_budget = false;
    bool color_swap;

    GoodColoringSearch(const MonoDetector& d, int nn, std::uint64_t b, bool swap)
        : detect(d), n(nn), red(nn), blue(nn), budget(b), color_swap(swap) {
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
        assigned.assign(pairs.size(), -1);
    }

    bool rec(std::size_t idx) {
        if (idx == pairs.size()) return true;
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        auto [u, v] = pairs[idx];
        int first = 0, last = (color_swap && idx == 0) ? 0 : 1;
        for (int c = first; c <= last; ++c) {
            Graph& gc = c == 0 ? red : blue;
            gc.add_edge(u, v);
            assigned[idx] = c;
            if (!detect.closes_copy(gc, u, v) && rec(idx + 1)) return true;
            assigned[idx] = -1;
            gc.remove_edge(u, v);
            if (out_of_budget) return false;
        }
        return false;
    }

    EdgeColoring coloring() const {
        EdgeColoring c(n, 2);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            c.set_color(pairs[i].first, pairs[i].second, assigned[i]);
        return c;
    }
};

}  // namespace

RamseyResult ramsey_exact(const Graph& h, int n_cap, std::uint64_t budget,
                          bool color_swap_pruning) {
    RamseyResult res;
    if (edge_count(h) == 0) {
        // the source material never defines r for edgeless patterns; the
        // toolkit fixes r = 1 and flags it as a convention
        res.exact = true;
        res.value = res.lb = res.ub = 1;
        res.convention_empty = true;
        res.note = "edgeless pattern: r = 1 by convention";
        return res;
    }
    Graph core = strip_isolates(h);
    MonoDetector detect(core);
    std::optional<EdgeColoring> last_good;
    for (long n = std::max(h.order(), 1); n_cap < 0 || n <= n_cap; ++n) {
        GoodColoringSearch search(detect, int(n), budget - res.nodes, color_swap_pruning);
        bool good = search.rec(0);
        res.nodes += search.nodes;
        if (search.out_of_budget) {
            res.exact = false;
            res.lb = n;  // every smaller board had a good coloring
            res.ub = -1;
            res.note = "node budget exhausted at n=" + std::to_string(n);
            res.witness = last_good;
            return res;
        }
        if (!good) {
            res.exact = true;
            res.value = res.lb = res.ub = n;
            if (!last_good) {
                // r equals v(h): any coloring of the smaller board is
                // vacuously free of copies
                last_good = EdgeColoring(int(n) - 1, 2);
            }
            res.witness = last_good;
            return res;
        }
        last_good = search.coloring();
        res.lb = n + 1;
    }
    res.exact = false;
    res.ub = -1;
    res.witness = last_good;
    res.note = "no decision up to n_cap=" + std::to_string(n_cap);
    return res;
}

SandwichReport verify_sandwich(const Graph& h, int deleted_vertex, int n_cap,
                               std::uint64_t budget) {
    if (h.order() < 2)
        throw std::domain_error("verify_sandwich: pattern needs at least two vertices");
    if (deleted_vertex < 0 || deleted_vertex >= h.order())
        throw std::domain_error("verify_sandwich: vertex out of range");
    std::vector<int> rest;
    for (int v = 0; v < h.order(); ++v)
        if (v != deleted_vertex) rest.push_back(v);
    Graph hp = induced_subgraph(h, rest);

    SandwichReport rep;
    rep.v_hp = hp.order();
    rep.r_hp = ramsey_exact(hp, n_cap, budget);
    rep.r_h = ramsey_exact(h, n_cap, budget);
    if (rep.r_h.exact && rep.r_hp.exact) {
        rep.conclusive = true;
        long bound = 2L * rep.v_hp * rep.r_hp.value;
        rep.holds = rep.r_hp.value <= rep.r_h.value && rep.r_h.value <= bound;
        rep.consistent = rep.holds;
        rep.ratio = double(rep.r_h.value) / double(rep.r_hp.value);
        return rep;
    }
    // interval consistency: known facts must not contradict the sandwich bound
    rep.conclusive = false;
    long h_lb = rep.r_h.exact ? rep.r_h.value : rep.r_h.lb;
    long h_ub = rep.r_h.exact ? rep.r_h.value : rep.r_h.ub;
    long hp_lb = rep.r_hp.exact ? rep.r_hp.value : rep.r_hp.lb;
    long hp_ub = rep.r_hp.exact ? rep.r_hp.value : rep.r_hp.ub;
    bool ok = true;
    if (h_ub >= 0 && hp_lb > h_ub) ok = false;             // r(H') <= r(H) refuted
    if (hp_ub >= 0 && h_lb > 2L * rep.v_hp * hp_ub) ok = false;  // upper bound refuted
    rep.consistent = ok;
    return rep;
}

SampleSummary sample_random_ramsey(int n, double p, int trials, std::uint64_t seed,
                                   int n_cap, std::uint64_t budget) {
    SampleSummary sum;
    sum.n = n;
    sum.p = p;
    sum.seed = seed;
    std::vector<double> logs;
    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng = substream(seed, std::uint64_t(t));
        Graph sample = random_gnp(n, p, rng);
        Graph pattern = strip_isolates(sample);
        RamseyResult r = ramsey_exact(pattern, n_cap, budget);
        SampleEntry e;
        e.pattern_order = pattern.order();
        e.pattern_edges = edge_count(pattern);
        e.exact = r.exact;
        e.value = r.value;
        e.lb = r.lb;
        e.ub = r.ub;
        if (r.exact) {
            e.log2_r = std::log2(double(r.value));
            logs.push_back(e.log2_r);
            ++sum.value_counts[r.value];
        } else {
            ++sum.censored;
        }
        sum.entries.push_back(e);
    }
    if (!logs.empty()) {
        sum.log2_min = *std::min_element(logs.begin(), logs.end());
        sum.log2_max = *std::max_element(logs.begin(), logs.end());
        double s = 0;
        for (double x : logs) s += x;
        sum.log2_mean = s / double(logs.size());
        sum.spread = sum.log2_max - sum.log2_min;
    }
    return sum;
}

}  // namespace extremal
