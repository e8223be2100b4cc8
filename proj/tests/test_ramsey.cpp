#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "extremal/coloring.hpp"
#include "extremal/graph_io.hpp"
#include "extremal/ramsey.hpp"
#include "oracles.hpp"

using namespace extremal;

namespace {

// exhaustive oracle: smallest n such that all 2^C(n,2) colorings contain a
// monochromatic copy of h (h without isolated vertices, tiny n only)
long oracle_ramsey(const Graph& h, int n_max) {
    for (int n = h.order(); n <= n_max; ++n) {
        int m = n * (n - 1) / 2;
        bool all_contain = true;
        for (unsigned mask = 0; mask < (1u << m) && all_contain; ++mask) {
            EdgeColoring c(n, 2);
            int bit = 0;
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u) c.set_color(u, v, (mask >> bit++) & 1);
            bool mono = count_subgraph_copies(c.color_graph(0), h) > 0 ||
                        count_subgraph_copies(c.color_graph(1), h) > 0;
            if (!mono) all_contain = false;
        }
        if (all_contain) return n;
    }
    return -1;
}

}  // namespace

TEST_CASE("tiny Ramsey numbers against the exhaustive oracle") {
    Graph p3 = *named_graph("p3");
    RamseyResult r = ramsey_exact(p3);
    CHECK(r.exact);
    CHECK(r.value == 3);
    CHECK(oracle_ramsey(p3, 4) == 3);

    Graph k2 = *named_graph("k2");
    CHECK(ramsey_exact(k2).value == 2);
}

TEST_CASE("r(K_3) = 6 with a pentagon-class witness") {
    Graph k3 = *named_graph("k3");
    RamseyResult r = ramsey_exact(k3);
    REQUIRE(r.exact);
    CHECK(r.value == 6);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->n == 5);
    CHECK(count_mono(*r.witness, k3).total == 0);
    // the only triangle-free-complement split of K_5 is C_5 vs C_5
    CHECK(edge_count(r.witness->color_graph(0)) == 5);
}

TEST_CASE("conventions for degenerate patterns") {
    RamseyResult empty = ramsey_exact(Graph(3));
    CHECK(empty.exact);
    CHECK(empty.value == 1);
    CHECK(empty.convention_empty);

    RamseyResult single = ramsey_exact(Graph(1));
    CHECK(single.value == 1);
}

TEST_CASE("isolated vertices push the start of the search but not the core") {
    // K_2 plus one isolate: copies need 3 vertices, so r = 3
    Graph h(3);
    h.add_edge(0, 1);
    RamseyResult r = ramsey_exact(h);
    CHECK(r.exact);
    CHECK(r.value == 3);
}

TEST_CASE("color-swap pruning does not change the answer") {
    for (const char* name : {"p3", "k3", "p4", "c4", "star3", "paw", "diamond"}) {
        Graph h = *named_graph(name);
        RamseyResult pruned = ramsey_exact(h, 12, 1'000'000'000, true);
        RamseyResult full = ramsey_exact(h, 12, 1'000'000'000, false);
        REQUIRE(pruned.exact);
        REQUIRE(full.exact);
        CHECK(pruned.value == full.value);
    }
}

TEST_CASE("known 4-vertex values") {
    CHECK(ramsey_exact(*named_graph("p4")).value == 5);
    CHECK(ramsey_exact(*named_graph("c4")).value == 6);
    CHECK(ramsey_exact(*named_graph("star3")).value == 6);
    CHECK(ramsey_exact(*named_graph("paw")).value == 7);
    // fully independent confirmation for the cycle
    CHECK(oracle_ramsey(*named_graph("c4"), 7) == 6);
}

TEST_CASE("monotone under subgraphs on resolved pairs") {
    // P_3 subgraph P_4 subgraph paw-with-extra-edge chains
    long rp3 = ramsey_exact(*named_graph("p3")).value;
    long rp4 = ramsey_exact(*named_graph("p4")).value;
    long rpaw = ramsey_exact(*named_graph("paw")).value;
    long rk3 = ramsey_exact(*named_graph("k3")).value;
    CHECK(rp3 <= rp4);
    CHECK(rk3 <= rpaw);
    CHECK(rp3 <= rk3);
}

TEST_CASE("budget exhaustion yields an interval, not a crash") {
    RamseyResult r = ramsey_exact(*named_graph("k3"), 12, 40);
    CHECK(!r.exact);
    CHECK(r.lb >= 3);
    CHECK(r.ub == -1);
    CHECK(!r.note.empty());
}

TEST_CASE("n_cap truncation is reported with a witness") {
    RamseyResult r = ramsey_exact(*named_graph("k3"), 4);
    CHECK(!r.exact);
    CHECK(r.lb == 5);
    REQUIRE(r.witness.has_value());
    CHECK(count_mono(*r.witness, *named_graph("k3")).total == 0);
}

TEST_CASE("sandwich bound") {
    SUBCASE("K_3 vs K_2") {
        SandwichReport rep = verify_sandwich(*named_graph("k3"), 0);
        REQUIRE(rep.conclusive);
        CHECK(rep.holds);
        CHECK(rep.r_hp.value == 2);
        CHECK(rep.r_h.value == 6);
        CHECK(rep.ratio == 3.0);
    }
    SUBCASE("P_3 vs K_2") {
        SandwichReport rep = verify_sandwich(*named_graph("p3"), 2);
        REQUIRE(rep.conclusive);
        CHECK(rep.holds);
    }
    SUBCASE("single edge vs single vertex") {
        SandwichReport rep = verify_sandwich(*named_graph("k2"), 1);
        REQUIRE(rep.conclusive);
        CHECK(rep.r_hp.value == 1);  // convention
        CHECK(rep.r_h.value == 2);
        CHECK(rep.holds);  // 1 <= 2 <= 2*1*1
    }
    SUBCASE("intervals stay consistent under truncation") {
        SandwichReport rep = verify_sandwich(*named_graph("k4"), 0, 6, 2'000'000);
        CHECK(!rep.conclusive);
        CHECK(rep.consistent);
    }
    SUBCASE("single-vertex patterns are rejected") {
        CHECK_THROWS_AS(verify_sandwich(Graph(1), 0), std::domain_error);
    }
}

TEST_CASE("random-sample summary is reproducible and never drops samples") {
    SampleSummary a = sample_random_ramsey(3, 1.0, 5, 42, 8);
    CHECK(a.entries.size() == 5);
    CHECK(a.censored == 0);
    CHECK(a.value_counts.at(6) == 5);  // every sample is K_3
    CHECK(a.spread == 0.0);

    SampleSummary zero = sample_random_ramsey(3, 0.0, 4, 42, 8);
    CHECK(zero.value_counts.at(1) == 4);  // empty pattern, convention

    SampleSummary b = sample_random_ramsey(4, 0.5, 12, 7, 7);
    SampleSummary c = sample_random_ramsey(4, 0.5, 12, 7, 7);
    REQUIRE(b.entries.size() == c.entries.size());
    for (std::size_t i = 0; i < b.entries.size(); ++i) {
        CHECK(b.entries[i].exact == c.entries[i].exact);
        CHECK(b.entries[i].value == c.entries[i].value);
    }
    CHECK(b.censored + int(b.value_counts.size() ? 1 : 0) >= 0);  // censored reported
}
