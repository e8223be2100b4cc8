#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "extremal/checked.hpp"
#include "extremal/cliques.hpp"
#include "extremal/graph.hpp"
#include "extremal/graph_gen.hpp"
#include "extremal/graph_io.hpp"
#include "oracles.hpp"

using namespace extremal;

TEST_CASE("clique counting matches the spec examples") {
    Graph k5 = *named_graph("k5");
    CHECK(count_cliques(k5, 3).total == 10);

    // T_{9,2} is bipartite, hence triangle-free
    Graph t92 = *named_graph("k5,4");
    CHECK(count_cliques(t92, 3).total == 0);

    CHECK_THROWS_AS(count_cliques(k5, 0), std::domain_error);
    CHECK_THROWS_AS(count_cliques(k5, 6), std::domain_error);
}

TEST_CASE("clique counting agrees with subset enumeration for all graphs up to 8 vertices") {
    // exhaustive over the canonical catalogue at n <= 7 (counting is
    // relabeling-invariant, so class representatives cover every graph),
    // random spot checks at n = 8
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : all_graphs(n))
            for (int r = 1; r <= n; ++r)
                CHECK(count_cliques(g, r).total == oracle::count_cliques(g, r));
    SplitMix64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_gnm(8, rng.below(29), rng);
        for (int r = 1; r <= 8; ++r)
            CHECK(count_cliques(g, r).total == oracle::count_cliques(g, r));
    }
}

TEST_CASE("parallel clique counting is identical to sequential") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_gnm(12, 40, rng);
        for (int r = 2; r <= 6; ++r)
            CHECK(count_cliques(g, r, 4).total == count_cliques(g, r, 1).total);
    }
}

TEST_CASE("joint number") {
    Graph t92 = *named_graph("k5,4");
    JointReport j = joint_number(t92, 3);
    CHECK(j.size == 0);
    CHECK(j.best_edge.has_value());  // edges exist, all in zero triangles

    Graph none(4);
    CHECK(joint_number(none, 3).size == 0);
    CHECK(!joint_number(none, 3).best_edge.has_value());

    // maximum over edges matches the definition-level count
    SplitMix64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_gnm(8, rng.below(29), rng);
        for (int r = 2; r <= 5; ++r) {
            JointReport rep = joint_number(g, r);
            std::uint64_t expect = 0;
            for (auto [u, v] : g.edges())
                expect = std::max(expect, oracle::cliques_through_edge(g, u, v, r));
            CHECK(rep.size == expect);
            if (r <= g.order()) CHECK(rep.size <= count_cliques(g, r).total);
        }
    }
}

TEST_CASE("joint number ties go to the lexicographically smallest edge") {
    Graph k4 = *named_graph("k4");
    JointReport j = joint_number(k4, 3);
    CHECK(j.size == 2);
    CHECK(*j.best_edge == std::pair<int, int>{0, 1});
}

TEST_CASE("independence number") {
    CHECK(independence_number(Graph(7)) == 7);
    CHECK(independence_number(*named_graph("c5")) == 2);
    Graph pc = complement(*named_graph("petersen"));
    CHECK(independence_number(pc) == 2);

    SplitMix64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 9 + int(rng.below(2));  // cross-checked by enumeration up to n=10
        Graph g = random_gnm(n, rng.below(std::uint64_t(n) * (n - 1) / 2 + 1), rng);
        CHECK(independence_number(g) == oracle::independence_number(g));
        CHECK(independence_number(complement(g)) == max_clique(g).size);
    }
}

TEST_CASE("max clique witness is a clique of the reported size") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_gnm(10, rng.below(46), rng);
        CliqueWitness w = max_clique(g);
        CHECK(int(w.vertices.size()) == w.size);
        CHECK(oracle::is_clique(g, w.vertices));
    }
}

TEST_CASE("K_{s,t} freeness") {
    CHECK(is_kst_free(*named_graph("c5"), 2, 2));
    Graph k22 = *named_graph("k2,2");
    auto w = find_kst(k22, 2, 2);
    REQUIRE(w.has_value());
    CHECK(w->left.size() == 2);
    CHECK(w->right.size() == 2);
    for (int u : w->left)
        for (int v : w->right) CHECK(k22.has_edge(u, v));

    CHECK(is_kst_free(*named_graph("fano"), 2, 2));

    SplitMix64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_gnm(8, rng.below(29), rng);
        for (auto [s, t] : {std::pair{2, 2}, {2, 3}, {3, 3}})
            CHECK(is_kst_free(g, s, t) == oracle::is_kst_free(g, s, t));
    }
}

TEST_CASE("blow-up") {
    Graph k2 = *named_graph("k2");
    std::vector<int> sz{2, 3};
    Graph b = blow_up(k2, sz);
    CHECK(b.order() == 5);
    CHECK(edge_count(b) == 6);
    CHECK(is_kst_free(b, 2, 2) == false);
    CHECK(canonical_form(b) == canonical_form(*named_graph("k2,3")));

    Graph prism = *named_graph("prism");
    std::vector<int> twos(6, 2);
    Graph p2 = blow_up(prism, twos);
    CHECK(p2.order() == 12);
    CHECK(edge_count(p2) == 36);

    // all-ones blow-up is the identity
    std::vector<int> ones(6, 1);
    CHECK(blow_up(prism, ones) == prism);
}

TEST_CASE("blow-up preserves K_{r+1}-freeness") {
    SplitMix64 rng(19);
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : all_graphs(n)) {
            std::vector<int> sizes(n);
            for (int& s : sizes) s = int(rng.below(4));
            Graph b = blow_up(g, sizes);
            for (int r = 2; r <= n; ++r) {
                if (oracle::count_cliques(g, r) != 0) continue;
                if (r <= b.order()) CHECK(count_cliques(b, r).total == 0);
            }
        }
}

TEST_CASE("edge list round trip and diagnostics") {
    Graph g = *named_graph("petersen");
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    CHECK(read_edge_list(in) == g);

    std::istringstream bad1("3\n0 3\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(read_edge_list(bad1)),
                         doctest::Contains("line 2"), std::runtime_error);
    std::istringstream bad2("3\n1 1\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(read_edge_list(bad2)),
                         doctest::Contains("self-loop"), std::runtime_error);
    std::istringstream bad3("3\n0 1\n1 0\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(read_edge_list(bad3)),
                         doctest::Contains("duplicate"), std::runtime_error);
}

TEST_CASE("graph6 round trip and a known encoding") {
    // K_4 in graph6 is "C~": header 'C' = 4 vertices, one full 6-bit block
    CHECK(to_graph6(*named_graph("k4")) == "C~");
    CHECK(from_graph6("C~") == *named_graph("k4"));
    CHECK(to_graph6(Graph(0)) == "?");

    SplitMix64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        int n = int(rng.below(70));
        Graph g = random_gnp(n, 0.4, rng);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    CHECK_THROWS_AS(static_cast<void>(from_graph6("A\x01")), std::runtime_error);
    CHECK_THROWS_WITH_AS(static_cast<void>(from_graph6("D")),
                         doctest::Contains("truncated"), std::runtime_error);
}

TEST_CASE("canonical catalogue sizes match the known sequence") {
    CHECK(all_graphs(1).size() == 1);
    CHECK(all_graphs(2).size() == 2);
    CHECK(all_graphs(3).size() == 4);
    CHECK(all_graphs(4).size() == 11);
    CHECK(all_graphs(5).size() == 34);
    CHECK(all_graphs(6).size() == 156);
}

TEST_CASE("canonical form separates and identifies") {
    Graph c5 = *named_graph("c5");
    std::vector<int> relabel{3, 1, 4, 0, 2};
    Graph c5b = induced_subgraph(c5, relabel);
    CHECK(canonical_form(c5) == canonical_form(c5b));
    CHECK(canonical_form(c5) != canonical_form(*named_graph("p5")));
}

TEST_CASE("checked counting overflows loudly") {
    CHECK_THROWS_AS(checked_binomial(80, 40), std::overflow_error);
    CHECK(checked_binomial(10, 3) == 120);
    CHECK(checked_binomial(3, 10) == 0);
}
