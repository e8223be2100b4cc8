#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "extremal/coloring.hpp"
#include "extremal/cliques.hpp"
#include "extremal/constructions.hpp"
#include "extremal/graph_gen.hpp"
#include "extremal/graph_io.hpp"
#include "oracles.hpp"

using namespace extremal;

namespace {

EdgeColoring pentagon_coloring() {
    // red C_5 (color 0), blue complement (color 1)
    EdgeColoring c(5, 2);
    Graph c5 = *named_graph("c5");
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) c.set_color(u, v, c5.has_edge(u, v) ? 0 : 1);
    return c;
}

EdgeColoring all_one_color(int n) { return EdgeColoring(n, 2); }  // all color 0

}  // namespace

TEST_CASE("automorphism counts by brute force") {
    CHECK(automorphism_count(*named_graph("k4")) == 24);
    CHECK(automorphism_count(*named_graph("c5")) == 10);
    CHECK(automorphism_count(*named_graph("p4")) == 2);
    CHECK(automorphism_count(*named_graph("paw")) == 2);
    CHECK(automorphism_count(pendant_clique({3, 2})) == 4);       // 2! clique x 2! pendants
    CHECK(automorphism_count(*named_graph("petersen")) == 120);
}

TEST_CASE("subgraph copy counting matches the set-based oracle") {
    SplitMix64 rng(71);
    std::vector<Graph> patterns{*named_graph("k3"), *named_graph("p3"), *named_graph("p4"),
                                *named_graph("c4"), *named_graph("paw"),
                                pendant_clique({3, 2})};
    for (int trial = 0; trial < 15; ++trial) {
        Graph host = random_gnm(7, rng.below(22), rng);
        for (const Graph& p : patterns)
            CHECK(count_subgraph_copies(host, p) == oracle::count_copies(host, p));
    }
}

TEST_CASE("monochromatic counting basics") {
    Graph k3 = *named_graph("k3");
    SUBCASE("all-red K_5") {
        MonoCount mc = count_mono(all_one_color(5), k3);
        CHECK(mc.per_color == std::vector<std::uint64_t>{10, 0});
        CHECK(mc.total == 10);
    }
    SUBCASE("pentagon coloring has no monochromatic triangle") {
        MonoCount mc = count_mono(pentagon_coloring(), k3);
        CHECK(mc.per_color == std::vector<std::uint64_t>{0, 0});
    }
    SUBCASE("patterns larger than n give zero counts") {
        MonoCount mc = count_mono(all_one_color(3), *named_graph("k5"));
        CHECK(mc.total == 0);
    }
    SUBCASE("isolated-vertex patterns are rejected") {
        Graph iso(3);
        iso.add_edge(0, 1);
        CHECK_THROWS_AS(count_mono(all_one_color(4), iso), std::domain_error);
    }
    SUBCASE("normalization bound") {
        MonoCount mc = count_mono(all_one_color(6), k3);
        CHECK(mc.total <= copies_in_complete(k3, 6));
        CHECK(copies_in_complete(k3, 6) == 20);
    }
}

TEST_CASE("color and vertex relabeling invariance") {
    SplitMix64 rng(73);
    Graph paw = *named_graph("paw");
    for (int trial = 0; trial < 10; ++trial) {
        EdgeColoring c(7, 3);
        for (int u = 0; u < 7; ++u)
            for (int v = u + 1; v < 7; ++v) c.set_color(u, v, int(rng.below(3)));
        MonoCount base = count_mono(c, paw);

        // permute colors
        EdgeColoring swapped = c;
        for (int u = 0; u < 7; ++u)
            for (int v = u + 1; v < 7; ++v)
                swapped.set_color(u, v, (c.color_of(u, v) + 1) % 3);
        CHECK(count_mono(swapped, paw).total == base.total);

        // permute vertices
        std::vector<int> perm{3, 1, 6, 0, 2, 5, 4};
        EdgeColoring moved(7, 3);
        for (int u = 0; u < 7; ++u)
            for (int v = u + 1; v < 7; ++v)
                moved.set_color(perm[u], perm[v], c.color_of(u, v));
        CHECK(count_mono(moved, paw).total == base.total);
    }
}

TEST_CASE("partition coloring") {
    SUBCASE("n=6, parts=2 is two red triangles against blue K_{3,3}") {
        EdgeColoring c = partition_coloring(6, 2);
        Graph red = c.color_graph(0), blue = c.color_graph(1);
        CHECK(count_cliques(red, 3).total == 2);
        CHECK(edge_count(blue) == 9);
        CHECK(count_cliques(blue, 3).total == 0);
    }
    SUBCASE("blue side of T(3,6) vanishes at n=12") {
        EdgeColoring c = partition_coloring(12, 2);
        MonoCount mc = count_mono_pendant(c, 3, 6);
        CHECK(mc.per_color[1] == 0);
        // red copies live inside single classes; count them directly in one
        // class of 6 vertices: clique choices C(6,3), hub 3, pendants C(3,6)=0
        CHECK(mc.per_color[0] == 0);  // a class of 6 cannot host 9 vertices
    }
    SUBCASE("red copies are confined to classes") {
        EdgeColoring c = partition_coloring(9, 3);
        Graph red = c.color_graph(0);
        std::vector<int> cls = partition_classes(9, 3);
        for (auto [u, v] : red.edges()) CHECK(cls[u] == cls[v]);
    }
}

TEST_CASE("blow-up coloring") {
    SUBCASE("K_2 base, n=4") {
        EdgeColoring base(2, 1);
        EdgeColoring c = blowup_coloring(base, 4, 1);
        CHECK(c.q == 2);
        // blocks {0,1} and {2,3}: intra color 1, cross color 0
        CHECK(c.color_of(0, 1) == 1);
        CHECK(c.color_of(2, 3) == 1);
        CHECK(c.color_of(0, 2) == 0);
        CHECK(c.color_of(1, 3) == 0);
    }
    SUBCASE("blocks of size 1 reproduce the base") {
        EdgeColoring base = partition_coloring(5, 2);
        EdgeColoring c = blowup_coloring(base, 5, 2);
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v)
                CHECK(c.color_of(u, v) == base.color_of(u, v));
    }
    SUBCASE("mono cliques only in the inner color when the base is K_k-free") {
        // pentagon coloring has no mono K_3 in either color
        EdgeColoring c = blowup_coloring(pentagon_coloring(), 15, 2);
        MonoCount mc = count_mono(c, *named_graph("k3"));
        CHECK(mc.per_color[0] == 0);
        CHECK(mc.per_color[1] == 0);
        CHECK(mc.per_color[2] == 5);  // C(3,3) per block, five blocks of 3
        CHECK_THROWS_AS(blowup_coloring(pentagon_coloring(), 15, 1), std::domain_error);
    }
}

TEST_CASE("specialized pendant-clique counter agrees with the generic one") {
    SplitMix64 rng(79);
    for (int k = 2; k <= 4; ++k)
        for (int ell = 0; ell <= 4; ++ell)
            for (int n = 6; n <= 10; ++n)
                for (int trial = 0; trial < 2; ++trial) {
                    EdgeColoring c(n, 2);
                    for (int u = 0; u < n; ++u)
                        for (int v = u + 1; v < n; ++v)
                            c.set_color(u, v, int(rng.below(2)));
                    Graph pattern = pendant_clique({k, ell});
                    MonoCount generic = count_mono(c, pattern);
                    MonoCount fast = count_mono_pendant(c, k, ell);
                    CHECK(generic.per_color == fast.per_color);
                }
}

TEST_CASE("exact multiplicity at tiny scale") {
    Graph k3 = *named_graph("k3");
    SUBCASE("M_1(K_3; n) = C(n,3)") {
        MultiplicityReport rep = multiplicity_exact(k3, 6, 1);
        CHECK(rep.exact);
        CHECK(rep.lower == 20);
    }
    SUBCASE("M_2(K_3; 5) = 0 with a validating witness") {
        MultiplicityReport rep = multiplicity_exact(k3, 5, 2);
        CHECK(rep.exact);
        CHECK(rep.lower == 0);
        CHECK(count_mono(rep.witness, k3).total == 0);
    }
    SUBCASE("M_2(K_3; 6) matches the full-enumeration oracle") {
        MultiplicityReport rep = multiplicity_exact(k3, 6, 2);
        CHECK(rep.exact);
        CHECK(rep.lower == 2);  // frozen from the oracle below

        std::uint64_t best = ~std::uint64_t(0);
        for (unsigned mask = 0; mask < (1u << 15); ++mask) {
            EdgeColoring c(6, 2);
            int bit = 0;
            for (int v = 1; v < 6; ++v)
                for (int u = 0; u < v; ++u) c.set_color(u, v, (mask >> bit++) & 1);
            std::uint64_t mono = 0;
            oracle::for_each_subset(6, 3, [&](const std::vector<int>& t) {
                int c01 = c.color_of(t[0], t[1]);
                if (c01 == c.color_of(t[0], t[2]) && c01 == c.color_of(t[1], t[2])) ++mono;
            });
            best = std::min(best, mono);
        }
        CHECK(best == rep.lower);
        CHECK(count_mono(rep.witness, k3).total == rep.lower);
    }
    SUBCASE("constructed colorings are upper-bound witnesses") {
        MultiplicityReport rep = multiplicity_exact(k3, 6, 2);
        CHECK(rep.lower <= count_mono(partition_coloring(6, 2), k3).total);
    }
    SUBCASE("non-clique patterns and three colors against full enumeration") {
        for (auto [name, n, q] : {std::tuple{"p3", 4, 2}, {"p3", 4, 3}, {"p4", 5, 2}}) {
            Graph h = *named_graph(name);
            MultiplicityReport rep = multiplicity_exact(h, n, q);
            REQUIRE(rep.exact);
            std::uint64_t best = ~std::uint64_t(0);
            int m = n * (n - 1) / 2;
            std::vector<int> pick(m, 0);
            // odometer over q^m colorings
            while (true) {
                EdgeColoring c(n, q);
                int bit = 0;
                for (int v = 1; v < n; ++v)
                    for (int u = 0; u < v; ++u) c.set_color(u, v, pick[bit++]);
                std::uint64_t mono = 0;
                for (int col = 0; col < q; ++col)
                    mono += oracle::count_copies(c.color_graph(col), h);
                best = std::min(best, mono);
                int i = 0;
                while (i < m && ++pick[i] == q) pick[i++] = 0;
                if (i == m) break;
            }
            CHECK(rep.lower == best);
            CHECK(count_mono(rep.witness, h).total == best);
        }
    }
    SUBCASE("budget exhaustion degrades to bounds") {
        MultiplicityReport rep = multiplicity_exact(k3, 7, 2, 50);
        CHECK(!rep.exact);
        CHECK(rep.lower == 0);
        CHECK(count_mono(rep.witness, k3).total == rep.upper);
        // even a 1-node budget yields a usable witness (the all-red board)
        MultiplicityReport tiny = multiplicity_exact(k3, 7, 2, 1);
        CHECK(!tiny.exact);
        CHECK(tiny.upper == 35);  // C(7,3)
        CHECK(count_mono(tiny.witness, k3).total == tiny.upper);
    }
}

TEST_CASE("random-coloring estimate") {
    Graph k3 = *named_graph("k3");
    SUBCASE("q=1 gives proportion exactly 1") {
        EstimateReport rep = multiplicity_upper_estimate(k3, 8, 1, 20, 7);
        CHECK(rep.mean == 1.0);
        CHECK(rep.reference == 1.0);
    }
    SUBCASE("K_2 is always monochromatic") {
        EstimateReport rep = multiplicity_upper_estimate(*named_graph("k2"), 8, 3, 20, 7);
        CHECK(rep.mean == 1.0);
        CHECK(rep.reference == 1.0);
    }
    SUBCASE("triangles at q=2 sit near 1/4, reproducibly") {
        EstimateReport a = multiplicity_upper_estimate(k3, 12, 2, 400, 99);
        EstimateReport b = multiplicity_upper_estimate(k3, 12, 2, 400, 99);
        CHECK(a.mean == b.mean);  // identical seeds, identical stream
        CHECK(a.reference == 0.25);
        CHECK(std::abs(a.mean - 0.25) <= 5 * a.stderror);
    }
}

TEST_CASE("parallel mono counting equals sequential") {
    SplitMix64 rng(83);
    Graph paw = *named_graph("paw");
    for (int trial = 0; trial < 6; ++trial) {
        EdgeColoring c(9, 3);
        for (int u = 0; u < 9; ++u)
            for (int v = u + 1; v < 9; ++v) c.set_color(u, v, int(rng.below(3)));
        MonoCount seq = count_mono(c, paw, 1);
        MonoCount par = count_mono(c, paw, 4);
        CHECK(seq.per_color == par.per_color);
    }
}

TEST_CASE("coloring file round trips") {
    EdgeColoring c = partition_coloring(7, 3);
    SUBCASE("json") {
        std::stringstream s;
        write_coloring_json(s, c);
        CHECK(read_coloring_json(s) == c);
    }
    SUBCASE("text") {
        std::stringstream s;
        write_coloring_text(s, c);
        CHECK(read_coloring_text(s) == c);
    }
    SUBCASE("missing pairs are rejected") {
        std::stringstream s("{\"n\":3,\"q\":2,\"edges\":[[0,1,1]]}");
        CHECK_THROWS_AS(static_cast<void>(read_coloring_json(s)), std::runtime_error);
    }
}
