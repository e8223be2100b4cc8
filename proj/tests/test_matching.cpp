#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "extremal/cliques.hpp"
#include "extremal/graph_gen.hpp"
#include "extremal/graph_io.hpp"
#include "extremal/matching.hpp"
#include "oracles.hpp"

using namespace extremal;

TEST_CASE("independence-two detection") {
    CHECK(alpha_at_most_2(*named_graph("c5")));
    CHECK(alpha_at_most_2(complement(*named_graph("c7"))));
    CHECK(!alpha_at_most_2(Graph(3)));
    SplitMix64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_alpha2(10, rng);
        CHECK(alpha_at_most_2(g));
        CHECK(independence_number(g) <= 2);
    }
}

TEST_CASE("exact s-connected matchings on the named cases") {
    SUBCASE("complete graphs at s=4 give floor(n/2)") {
        for (int t = 1; t <= 5; ++t) {
            MatchingReport rep = max_s_connected_matching(*named_graph(("k" + std::to_string(2 * t)).c_str()), 4);
            CHECK(rep.cert.size() == std::size_t(t));
        }
    }
    SUBCASE("pentagon at s=1") {
        MatchingReport rep = max_s_connected_matching(*named_graph("c5"), 1);
        CHECK(rep.cert.size() == 2);
    }
    SUBCASE("disjoint edges only connect to themselves") {
        Graph g(6);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        g.add_edge(4, 5);
        MatchingReport rep = max_s_connected_matching(g, 1);
        CHECK(rep.cert.size() == 1);
    }
    SUBCASE("empty graph") {
        CHECK(max_s_connected_matching(Graph(4), 2).cert.size() == 0);
    }
}

namespace {

// brute force: max matching with every pair s-connected, over all edge subsets
std::size_t oracle_max_matching(const Graph& g, int s) {
    auto edges = g.edges();
    std::size_t best = 0;
    const int m = int(edges.size());
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<std::pair<int, int>> set;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) set.push_back(edges[i]);
        if (set.size() <= best) continue;
        bool ok = true;
        for (std::size_t i = 0; i < set.size() && ok; ++i)
            for (std::size_t j = i + 1; j < set.size() && ok; ++j) {
                auto [a, b] = set[i];
                auto [c, d] = set[j];
                if (a == c || a == d || b == c || b == d ||
                    connecting_edges(g, set[i], set[j]) < s)
                    ok = false;
            }
        if (ok) best = set.size();
    }
    return best;
}

}  // namespace

TEST_CASE("exact matcher agrees with subset enumeration on small graphs") {
    SplitMix64 rng(37);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = random_gnm(7, rng.below(16), rng);
        for (int s = 1; s <= 4; ++s)
            CHECK(max_s_connected_matching(g, s).cert.size() == oracle_max_matching(g, s));
    }
}

TEST_CASE("4-connected matchings are half-cliques") {
    SplitMix64 rng(41);
    std::vector<Graph> suite;
    for (int trial = 0; trial < 20; ++trial) suite.push_back(random_gnm(10, rng.below(46), rng));
    suite.push_back(*named_graph("k9"));
    suite.push_back(*named_graph("c9"));
    suite.push_back(complement(*named_graph("c9")));
    for (const Graph& g : suite)
        CHECK(max_s_connected_matching(g, 4).cert.size() ==
              std::size_t(max_clique(g).size / 2));
}

TEST_CASE("matching sizes are nonincreasing in s") {
    SplitMix64 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_gnm(9, rng.below(37), rng);
        std::size_t prev = ~std::size_t(0);
        for (int s = 1; s <= 4; ++s) {
            std::size_t sz = max_s_connected_matching(g, s).cert.size();
            CHECK(sz <= prev);
            prev = sz;
        }
    }
}

TEST_CASE("pair neighborhoods") {
    Graph c5 = *named_graph("c5");
    PairNeighborhoods pn = pair_neighborhoods(c5, 0, 1);
    CHECK(pn.a.size() == 1);
    CHECK(pn.b.size() == 3);
    PairNeighborhoods full = pair_neighborhoods(*named_graph("k6"), 2, 4);
    CHECK(full.a.empty());
    CHECK(full.b.empty());

    // alpha <= 2 makes A_{u,v} a clique
    SplitMix64 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_alpha2(9, rng);
        for (auto [u, v] : g.edges()) {
            PairNeighborhoods p = pair_neighborhoods(g, u, v);
            CHECK(oracle::is_clique(g, p.a));
        }
    }
}

TEST_CASE("auxiliary graph definitions") {
    SUBCASE("K_4 at s=3: disjoint edge pairs are fully connected") {
        AuxGraph aux = auxiliary_graph(*named_graph("k4"), 3);
        for (int i = 0; i < aux.h.order(); ++i)
            for (int j = i + 1; j < aux.h.order(); ++j) {
                auto [a, b] = aux.pairs[i];
                auto [c, d] = aux.pairs[j];
                bool share = a == c || a == d || b == c || b == d;
                CHECK(aux.h.has_edge(i, j) == share);  // 4 connecting edges otherwise
            }
    }
    SUBCASE("C_5 at s=2: disjoint pentagon edges are aux-adjacent") {
        AuxGraph aux = auxiliary_graph(*named_graph("c5"), 2);
        for (int i = 0; i < aux.h.order(); ++i)
            for (int j = i + 1; j < aux.h.order(); ++j) CHECK(aux.h.has_edge(i, j));
    }
    SUBCASE("independent sets convert to valid certificates") {
        SplitMix64 rng(53);
        for (int trial = 0; trial < 10; ++trial) {
            Graph g = random_gnm(8, 16 + rng.below(8), rng);
            for (int s : {2, 3}) {
                MatchingReport exact = matching_via_aux(g, s, AuxMode::Exact);
                MatchingReport greedy = matching_via_aux(g, s, AuxMode::Greedy);
                std::size_t truth = max_s_connected_matching(g, s).cert.size();
                CHECK(exact.cert.size() <= truth);
                CHECK(greedy.cert.size() <= exact.cert.size());
            }
        }
    }
    SUBCASE("threshold filtering only removes candidates") {
        Graph g = complement(*named_graph("c7"));
        AuxGraph all = auxiliary_graph(g, 2);
        AuxGraph some = auxiliary_graph(g, 2, 0);
        CHECK(some.pairs.size() <= all.pairs.size());
    }
}

TEST_CASE("aux route on complement of C_7 cross-checks the exact maximizer") {
    Graph g = complement(*named_graph("c7"));
    MatchingReport viaAux = matching_via_aux(g, 3, AuxMode::Exact);
    MatchingReport exact = max_s_connected_matching(g, 3);
    CHECK(viaAux.cert.size() >= 1);
    CHECK(viaAux.cert.size() <= exact.cert.size());
    MatchingReport k6 = max_s_connected_matching(*named_graph("k6"), 3);
    CHECK(k6.cert.size() == 3);
}

TEST_CASE("triangle structure of H-prime under alpha <= 2") {
    TriangleStructureReport pent = check_hprime_triangle_structure(*named_graph("c5"));
    CHECK(pent.holds);
    TriangleStructureReport petersen =
        check_hprime_triangle_structure(complement(*named_graph("petersen")));
    CHECK(petersen.holds);
    CHECK_THROWS_AS(check_hprime_triangle_structure(Graph(4)), std::domain_error);

    SplitMix64 rng(59);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_alpha2(10, rng);
        CHECK(check_hprime_triangle_structure(g).holds);
    }
}

TEST_CASE("B-set bound on independence-two graphs") {
    SplitMix64 rng(61);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_alpha2(11, rng);
        BBoundReport rep = b_bound_report(g);
        CHECK(rep.holds);
        CHECK(rep.worst_b <= rep.bound);
    }
}

TEST_CASE("certificates revalidate from scratch") {
    Graph g = *named_graph("k6");
    MatchingReport rep = max_s_connected_matching(g, 3);
    MatchingCert again = make_certificate(g, rep.cert.edges, rep.cert.s);
    CHECK(again.pairwise_counts == rep.cert.pairwise_counts);
    for (std::size_t i = 0; i < rep.cert.size(); ++i)
        for (std::size_t j = 0; j < rep.cert.size(); ++j) {
            if (i == j) continue;
            CHECK(rep.cert.pairwise_counts[i][j] >= rep.cert.s);
            CHECK(rep.cert.pairwise_counts[i][j] <= 4);
        }
    CHECK_THROWS_AS(make_certificate(g, {{0, 1}, {1, 2}}, 1), std::domain_error);
}
