#include "extremal/ap.hpp"

#include <algorithm>
#include <stdexcept>

#include "extremal/checked.hpp"

namespace extremal {

std::vector<long> Progression::terms() const {
    std::vector<long> t(k);
    for (int i = 0; i < k; ++i) t[i] = a + std::int64_t(i) * d;
    return t;
}

int IntColoring::num_colors() const {
    int m = -1;
    for (int c : color) m = std::max(m, c);
    return m + 1;
}

std::vector<int> IntColoring::class_sizes() const {
    std::vector<int> sizes(num_colors(), 0);
    for (int c : color) ++sizes[c];
    return sizes;
}

int IntColoring::max_multiplicity() const {
    int m = 0;
    for (int s : class_sizes()) m = std::max(m, s);
    return m;
}

bool IntColoring::equinumerous(int t) const {
    if (num_colors() != t || n % t != 0) return false;
    for (int s : class_sizes())
        if (s != n / t) return false;
    return true;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Coprime: return "coprime";
        case Family::Prime: return "prime";
        case Family::All: return "all";
    }
    return "?";
}

std::vector<long> coprime_survivors(long n, int k) {
    if (n < 1) return {};
    std::vector<char> alive(std::size_t(n) + 1, 1);
    std::vector<char> composite(std::size_t(std::max(k, 1)) + 1, 0);
    for (long p = 2; p <= k; ++p) {
        if (composite[p]) continue;
        for (long q = p * p; q <= k; q += p) composite[q] = 1;
        for (long x = p; x <= n; x += p) alive[x] = 0;
    }
    std::vector<long> out;
    for (long x = 1; x <= n; ++x)
        if (alive[x]) out.push_back(x);
    return out;
}

namespace {

std::vector<long> primes_up_to(long n) {
    std::vector<long> ps;
    if (n < 2) return ps;
    std::vector<char> composite(std::size_t(n) + 1, 0);
    for (long p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        ps.push_back(p);
        for (long q = p * p; q <= n; q += p) composite[q] = 1;
    }
    return ps;
}

void require_family_pre(Family f, long n, int k) {
    if (f == Family::All) {
        if (k < 1 || n < k) throw std::domain_error("family requires 1 <= k <= n");
    } else if (k < 2 || n < k) {
        throw std::domain_error("coprime/prime families require 2 <= k <= n");
    }
}

}  // namespace

void for_each_progression(Family f, long n, int k,
                          const std::function<bool(const Progression&)>& visit) {
    require_family_pre(f, n, k);
    if (k == 1) {  // Family::All only
        for (long a = 1; a <= n; ++a)
            if (!visit({a, 1, 1})) return;
        return;
    }
    auto span = [&](long d) { return n - std::int64_t(k - 1) * d; };  // max first term
    switch (f) {
        case Family::Coprime: {
            long amax = n / 2;
            for (long d : coprime_survivors(n / (2 * k), k))
                for (long a = 1; a <= amax; ++a)
                    if (!visit({a, d, k})) return;
            return;
        }
        case Family::Prime: {
            for (long d : primes_up_to((n - 1) / (k - 1)))
                for (long a = 1; a <= span(d); ++a)
                    if (!visit({a, d, k})) return;
            return;
        }
        case Family::All: {
            for (long d = 1; d <= (n - 1) / (k - 1); ++d)
                for (long a = 1; a <= span(d); ++a)
                    if (!visit({a, d, k})) return;
            return;
        }
    }
}

std::uint64_t family_size(Family f, long n, int k) {
    require_family_pre(f, n, k);
    if (k == 1) return std::uint64_t(n);
    switch (f) {
        case Family::Coprime:
            return checked_mul(std::uint64_t(n / 2),
                               coprime_survivors(n / (2 * k), k).size());
        case Family::Prime: {
            std::uint64_t total = 0;
            for (long d : primes_up_to((n - 1) / (k - 1)))
                total = checked_add(total, std::uint64_t(n - std::int64_t(k - 1) * d));
            return total;
        }
        case Family::All: {
            std::uint64_t total = 0;
            for (long d = 1; d <= (n - 1) / (k - 1); ++d)
                total = checked_add(total, std::uint64_t(n - std::int64_t(k - 1) * d));
            return total;
        }
    }
    return 0;
}

APCertificate find_independent_ap(const Graph& g, int k, Family f,
                                  const std::vector<int>& banned) {
    const long n = g.order();
    if (k < 1 || k > n) throw std::domain_error("find_independent_ap requires 1 <= k <= n");
    Bitset ban(g.order());
    for (int v : banned) ban.set(v);

    APCertificate cert;
    cert.family = f;
    cert.family_size = family_size(f, n, k);
    cert.edges_hit_bound = checked_mul(edge_count(g), std::uint64_t(k));
    cert.scanned = 0;

    for_each_progression(f, n, k, [&](const Progression& p) {
        ++cert.scanned;
        std::vector<long> ts = p.terms();
        for (long t : ts)
            if (ban.test(int(t - 1))) return true;  // skip, keep scanning
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (g.has_edge(int(ts[i] - 1), int(ts[j] - 1))) return true;
        cert.progression = p;
        return false;  // found: stop
    });

    // Hard assertion of the counting argument: with no banned vertices,
    // e(G)*k < |family| guarantees some progression misses every edge.
    if (!cert.progression && banned.empty() && cert.counting_argument_applies())
        throw std::logic_error("counting certificate violated: family larger than "
                               "edge cover yet no independent progression found");
    return cert;
}

namespace {

Graph same_color_graph(const IntColoring& c) {
    Graph g(c.n);
    for (int i = 0; i < c.n; ++i)
        for (int j = i + 1; j < c.n; ++j)
            if (c.color[i] == c.color[j]) g.add_edge(i, j);
    return g;
}

}  // namespace

std::optional<Progression> rainbow_ap_witness(const IntColoring& c, int k) {
    if (int(c.color.size()) != c.n) throw std::domain_error("coloring size mismatch");
    if (k > c.n) return std::nullopt;
    APCertificate cert = find_independent_ap(same_color_graph(c), k, Family::All);
    if (!cert.progression) return std::nullopt;
    // revalidate: all k colors distinct
    std::vector<int> seen;
    for (long t : cert.progression->terms()) {
        int col = c.color[t - 1];
        if (std::count(seen.begin(), seen.end(), col))
            throw std::logic_error("rainbow witness failed revalidation");
        seen.push_back(col);
    }
    return cert.progression;
}

namespace {

// APs of [n] indexed by their largest element; used to prune a coloring
// search as soon as a completed progression is rainbow.
std::vector<std::vector<Progression>> aps_by_last(int n, int k) {
    std::vector<std::vector<Progression>> by_last(n + 1);
    if (k > n) return by_last;
    for_each_progression(Family::All, n, k,
                         [&](const Progression& p) {
                             by_last[p.last()].push_back(p);
                             return true;
                         });
    return by_last;
}

bool rainbow_when_complete(const Progression& p, const std::vector<int>& color) {
    // all terms are colored; rainbow iff pairwise distinct colors
    std::vector<long> ts = p.terms();
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j)
            if (color[ts[i] - 1] == color[ts[j] - 1]) return false;
    return true;
}

// Canonical colorings of [n]: color ids appear in first-use order. Visits
// only colorings where no completed k-AP is rainbow; returns true (and the
// witness) as soon as a full such coloring exists.
struct BadColoringSearch {
    int n, k;
    int max_mult;              // <= m occurrences per color; 0 = unbounded
    int exact_colors = 0;      // tk mode: exactly this many colors, all full
    int exact_size = 0;
    std::vector<std::vector<Progression>> by_last;
    std::vector<int> color;
    std::vector<int> count;
    std::uint64_t nodes = 0;
    std::uint64_t budget;
    bool exhausted_budget = false;
    std::optional<IntColoring> found;

    BadColoringSearch(int nn, int kk, std::uint64_t b)
        : n(nn), k(kk), max_mult(0), by_last(aps_by_last(nn, kk)), budget(b) {}

    // color ids appear in first-use order; c == used opens a new class
    bool usable(int c, int used) const {
        if (c == used) return exact_colors == 0 || used < exact_colors;
        return count[c] < (exact_colors ? exact_size : max_mult);
    }

    bool rec(int pos, int used) {
        if (exhausted_budget) return false;
        if (pos == n) {
            if (exact_colors && used != exact_colors) return false;
            found = IntColoring{n, color};
            return true;
        }
        if (++nodes > budget) {
            exhausted_budget = true;
            return false;
        }
        for (int c = 0; c <= used; ++c) {
            if (!usable(c, used)) continue;
            color[pos] = c;
            ++count[c];
            bool ok = true;
            for (const Progression& p : by_last[pos + 1])
                if (rainbow_when_complete(p, color)) {
                    ok = false;
                    break;
                }
            if (ok && rec(pos + 1, used + (c == used ? 1 : 0))) return true;
            --count[c];
            color[pos] = -1;
        }
        return false;
    }

    bool run() {
        color.assign(n, -1);
        count.assign(n + 1, 0);
        return rec(0, 0);
    }
};

// Number of set partitions of [n] with blocks of size <= m (canonical
// multiplicity-respecting colorings); the projected search space.
std::uint64_t projected_colorings(int n, int m) {
    std::vector<std::uint64_t> b(std::size_t(n) + 1, 0);
    b[0] = 1;
    for (int i = 1; i <= n; ++i) {
        unsigned __int128 total = 0;
        for (int j = 1; j <= std::min(i, m); ++j) {
            // place element i in a block of size j with j-1 earlier elements
            unsigned __int128 ways = checked_binomial(i - 1, j - 1);
            total += ways * b[i - j];
            if (total > ~std::uint64_t(0)) return ~std::uint64_t(0);
        }
        b[i] = std::uint64_t(total);
    }
    return b[n];
}

}  // namespace

SrReport sr_exact(int m, int k, long n_max, std::uint64_t budget) {
    if (m < 1 || k < 1) throw std::domain_error("sr_exact requires m, k >= 1");
    SrReport rep{SearchOutcome::Undecided, -1, std::nullopt, 0, 0, ""};
    for (long n = k; n <= n_max; ++n) {
        std::uint64_t projected = projected_colorings(int(n), m);
        if (projected > budget) {
            rep.outcome = SearchOutcome::Refused;
            rep.projected = projected;
            rep.note = "projected canonical colorings at n=" + std::to_string(n) +
                       " exceed the node budget";
            return rep;
        }
        BadColoringSearch search(int(n), k, budget - rep.nodes);
        search.max_mult = m;
        bool bad = search.run();
        rep.nodes += search.nodes;
        if (search.exhausted_budget) {
            rep.outcome = SearchOutcome::BudgetExhausted;
            rep.note = "node budget exhausted at n=" + std::to_string(n);
            return rep;
        }
        if (!bad) {
            rep.outcome = SearchOutcome::Exact;
            rep.value = n;
            return rep;
        }
        rep.witness = search.found;  // evidence that sr > n
    }
    rep.note = "undecided above n_max=" + std::to_string(n_max);
    return rep;
}

TkReport tk_check(int t, int m, int k, std::uint64_t budget) {
    if (t < 1 || m < 1 || k < 1) throw std::domain_error("tk_check requires t, m, k >= 1");
    const int n = t * m;
    TkReport rep{SearchOutcome::Exact, false, std::nullopt, 0, 0, ""};
    // multinomial / t!: canonical equinumerous colorings
    std::uint64_t proj64 = ~std::uint64_t(0);
    try {
        std::uint64_t p = 1, tfact = 1;
        for (int i = 0, left = n; i < t; ++i, left -= m) {
            p = checked_mul(p, checked_binomial(left, m));
            tfact = checked_mul(tfact, std::uint64_t(i + 1));
        }
        proj64 = p / tfact;
    } catch (const std::overflow_error&) {
        // leave saturated
    }
    if (proj64 > budget) {
        rep.outcome = SearchOutcome::Refused;
        rep.projected = proj64;
        rep.note = "projected equinumerous colorings exceed the node budget";
        return rep;
    }
    if (k > n) {  // no k-AP fits in [tm]: any coloring is a counterexample
        std::vector<int> color(n);
        for (int i = 0; i < n; ++i) color[i] = i / m;
        rep.holds = false;
        rep.counterexample = IntColoring{n, color};
        return rep;
    }
    BadColoringSearch search(n, k, budget);
    search.exact_colors = t;
    search.exact_size = m;
    bool bad = search.run();
    rep.nodes = search.nodes;
    if (search.exhausted_budget) {
        rep.outcome = SearchOutcome::BudgetExhausted;
        rep.note = "node budget exhausted";
        return rep;
    }
    rep.holds = !bad;
    rep.counterexample = search.found;
    return rep;
}

APCertificate set_mapping_ap(const std::vector<long>& pi, int k) {
    const int n = int(pi.size());
    std::vector<char> hit(n + 1, 0);
    for (long v : pi) {
        if (v < 1 || v > n || hit[v]) throw std::domain_error("pi is not a permutation of [n]");
        hit[v] = 1;
    }
    Graph g(n);
    std::vector<int> banned;
    for (int i = 1; i <= n; ++i) {
        if (pi[i - 1] == i)
            banned.push_back(i - 1);
        else if (!g.has_edge(i - 1, int(pi[i - 1]) - 1))
            g.add_edge(i - 1, int(pi[i - 1]) - 1);
    }
    APCertificate cert = find_independent_ap(g, k, Family::All, banned);
    if (cert.progression) {  // revalidate against the definition
        std::vector<long> ts = cert.progression->terms();
        for (long i : ts)
            if (std::count(ts.begin(), ts.end(), pi[i - 1]))
                throw std::logic_error("set-mapping witness failed revalidation");
    }
    return cert;
}

}  // namespace extremal
