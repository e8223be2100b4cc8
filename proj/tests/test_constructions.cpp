#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "extremal/checked.hpp"
#include "extremal/cliques.hpp"
#include "extremal/constructions.hpp"
#include "extremal/graph_io.hpp"
#include "extremal/inequalities.hpp"
#include "extremal/rng.hpp"
#include "oracles.hpp"

using namespace extremal;

TEST_CASE("Turan numbers and graphs") {
    CHECK(turan_number(4, 2) == 4);
    CHECK(turan_number(9, 2) == 20);
    CHECK(turan_number(10, 3) == 33);  // parts 4,3,3

    Graph t = turan_graph({10, 3});
    CHECK(edge_count(t) == 33);
    CHECK(count_cliques(t, 4).total == 0);
    // floor convention: matches floor((1-1/r)n^2/2) at (10,3) and for all of r=2
    CHECK(turan_number(10, 3) == 100 / 3);
    for (int n = 2; n <= 60; ++n)
        CHECK(turan_number(n, 2) == std::uint64_t(n) * n / 4);

    CHECK_THROWS_AS(turan_graph({3, 5}), std::domain_error);
}

TEST_CASE("Turan graphs are K_{r+1}-free with exactly t_r(n) edges across the range") {
    for (int r = 2; r <= 8; ++r)
        for (int n = r; n <= 60; ++n) {
            Graph g = turan_graph({n, r});  // generator self-checks both claims
            CHECK(edge_count(g) == turan_number(n, r));
        }
}

TEST_CASE("joint-extremal graph, s = 1") {
    SUBCASE("n=9, r=2") {
        Graph g = joint_extremal({9, 2, 1});
        CHECK(edge_count(g) == 20);
        CHECK(count_cliques(g, 3).total == 4);
        CHECK(joint_number(g, 3).size == 2);
    }
    SUBCASE("n=10, r=3") {
        Graph g = joint_extremal({10, 3, 1});
        CHECK(edge_count(g) == 33);
        CHECK(count_cliques(g, 4).total == 8);
        CHECK(oracle::count_cliques(g, 4) == 8);
        CHECK(joint_number(g, 4).size == 4);
    }
    SUBCASE("n=13, r=2") {
        Graph g = joint_extremal({13, 2, 1});
        CHECK(count_cliques(g, 3).total == 9);
        CHECK(joint_number(g, 3).size == 3);
    }
    SUBCASE("closed forms whenever n = 1 mod r^2") {
        for (int r = 2; r <= 4; ++r)
            for (int n = r * r + 1; n <= 37; n += r * r) {
                Graph g = joint_extremal({n, r, 1});
                JointExtremalExpect e = joint_extremal_expectation({n, r, 1});
                CHECK(edge_count(g) == e.edges);
                REQUIRE(e.cliques.has_value());
                CHECK(count_cliques(g, r + 1).total == *e.cliques);
                CHECK(joint_number(g, r + 1).size == *e.joint);
            }
    }
    SUBCASE("edge count is t_r(n) for every generated instance") {
        for (int r = 2; r <= 5; ++r)
            for (int n = r + 2; n <= 40; ++n) {
                Graph g = joint_extremal({n, r, 1});
                CHECK(edge_count(g) == turan_number(n, r));
            }
    }
}

TEST_CASE("joint-extremal graph, general s") {
    // no closed forms are asserted for s >= 2; the generator just reports
    // what it built and how far the edge count sits from t_r(n)
    JointExtremalReport r1 = joint_extremal_report({19, 3, 1});
    JointExtremalReport r3 = joint_extremal_report({19, 3, 3});
    CHECK(r1.deficit_vs_turan == 0);
    CHECK(r3.edges == edge_count(r3.g));
    CHECK(r3.deficit_vs_turan ==
          std::int64_t(turan_number(19, 3)) - std::int64_t(r3.edges));
    CHECK(count_cliques(r3.g, 4).total > 0);
    CHECK_THROWS_AS(joint_extremal({5, 2, 5}), std::domain_error);
}

TEST_CASE("prism blow-up") {
    SUBCASE("n=12, j=2") {
        Graph g = prism_blowup({12, 2});
        CHECK(edge_count(g) == 36);
        CHECK(count_cliques(g, 3).total == 16);
        CHECK(joint_number(g, 3).size == 2);
    }
    SUBCASE("n=14, j=3") {
        Graph g = prism_blowup({14, 3});
        CHECK(edge_count(g) == 49);
    }
    SUBCASE("n=6, j=1 is the prism itself") {
        Graph g = prism_blowup({6, 1});
        CHECK(edge_count(g) == 9);
        CHECK(g == *named_graph("prism"));
    }
    SUBCASE("even-split identities") {
        for (auto [n, j] : {std::pair{12, 2}, {18, 3}, {16, 3}, {20, 4}}) {
            Graph g = prism_blowup({n, j});
            CHECK(edge_count(g) >= std::uint64_t(n) * n / 4);
            CHECK(count_cliques(g, 3).total == std::uint64_t(j) * j * (n - 4 * j));
            CHECK(joint_number(g, 3).size <= std::uint64_t(j));
        }
    }
    CHECK_THROWS_AS(prism_blowup({9, 2}), std::domain_error);
}

TEST_CASE("pendant clique") {
    Graph t36 = pendant_clique({3, 6});
    CHECK(t36.order() == 9);
    CHECK(edge_count(t36) == 9);
    Graph t410 = pendant_clique({4, 10});
    CHECK(t410.order() == 14);
    CHECK(edge_count(t410) == 16);
    CHECK(pendant_clique({2, 0}) == *named_graph("k2"));
    for (int k = 2; k <= 12; ++k) {
        int ell = (k * k + k) / 2;
        Graph t = pendant_clique({k, ell});
        CHECK(t.order() == (k * k + 3 * k) / 2);
        CHECK(edge_count(t) == std::uint64_t(k) * k);
    }
}

TEST_CASE("product-decrease inequality") {
    using V = std::vector<Rat>;
    IneqReport eq = check_product_decrease(V{1, 2, 3}, V{1, 2, 3});
    CHECK(eq.holds);
    CHECK(eq.equality);

    IneqReport forced = check_product_decrease(V{2, 3}, V{1, 3});
    CHECK(forced.holds);
    CHECK(forced.equality);

    CHECK_THROWS_AS(check_product_decrease(V{3, 1}, V{1, 1}), std::domain_error);

    SplitMix64 rng(101);
    for (int trial = 0; trial < 10000; ++trial) {
        int s = 1 + int(rng.below(5));
        V x, y;
        Rat prev = 0;
        for (int i = 0; i < s; ++i) {
            prev += Rat(long(rng.below(8)), long(1 + rng.below(7)));
            x.push_back(prev);
            // y_i uniform-ish in [0, x_i]
            Rat f(long(rng.below(17)), 16);
            y.push_back(x.back() * f);
        }
        CHECK(check_product_decrease(x, y).holds);
    }
}

TEST_CASE("minimum-product inequality and its equality case") {
    using V = std::vector<Rat>;
    const int r = 4;
    V tight(r, Rat(r - 1, r));
    IneqReport rep = check_min_product(tight);
    CHECK(rep.holds);
    CHECK(rep.equality);
    CHECK(rep.slack == 0);

    V ones(5, Rat(1));
    IneqReport rep1 = check_min_product(ones);
    CHECK(rep1.holds);
    CHECK(rep1.lhs == 1);

    CHECK_THROWS_WITH_AS(static_cast<void>(check_min_product(V{Rat(1, 4), Rat(1, 4)})),
                         doctest::Contains("sum a_i"), std::domain_error);

    SplitMix64 rng(202);
    int done = 0;
    while (done < 10000) {
        int r2 = 2 + int(rng.below(5));
        V a;
        for (int i = 0; i < r2; ++i) a.push_back(Rat(long(rng.below(33)), 32));
        std::sort(a.begin(), a.end());
        Rat sum = 0;
        for (auto& v : a) sum += v;
        if (sum < r2 - 1) continue;
        CHECK(check_min_product(a).holds);
        ++done;
    }
}

TEST_CASE("perturbed minimum product keeps its lower bound") {
    using V = std::vector<Rat>;
    SplitMix64 rng(303);
    int done = 0;
    while (done < 10000) {
        int r = 2 + int(rng.below(5));
        V a;
        for (int i = 0; i < r; ++i) a.push_back(Rat(long(16 + rng.below(17)), 32));
        std::sort(a.begin(), a.end());
        Rat sum = 0;
        for (auto& v : a) sum += v;
        if (sum < r - 1) continue;
        // spread at most 1/4 of total decrease across the b_i
        V b = a;
        Rat budget(1, 4);
        for (int i = 0; i < r && budget > 0; ++i) {
            Rat cut = Rat(long(rng.below(9)), 128);
            if (cut > budget) cut = budget;
            if (cut > b[i]) cut = b[i];
            b[i] -= cut;
            budget -= cut;
        }
        CHECK(check_perturbed_min_product(a, b).holds);
        ++done;
    }
    CHECK_THROWS_AS(check_perturbed_min_product(V{Rat(1), Rat(1)}, V{Rat(0), Rat(0)}),
                    std::domain_error);  // alpha = 2 > 1/4
}

TEST_CASE("floating-point entry points tolerate representation error") {
    std::vector<double> a{0.75, 0.75, 0.75, 0.75};
    IneqReport rep = check_min_product(a);
    CHECK(rep.holds);  // equality case must not fail to rounding
    std::vector<double> x{1.0, 2.0}, y{0.5, 2.0};
    CHECK(check_product_decrease(x, y).holds);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == Rat(3, 4));
    CHECK(parse_rational("0.25") == Rat(1, 4));
    CHECK(parse_rational("-1.5e2") == Rat(-150));
    CHECK(parse_rational("7") == Rat(7));
    CHECK_THROWS_AS(parse_rational("x"), std::domain_error);
    CHECK_THROWS_AS(parse_rational("1e"), std::domain_error);
    CHECK_THROWS_AS(parse_rational("2e9x"), std::domain_error);
}
