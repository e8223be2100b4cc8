#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

struct TuranSpec {
    int n;
    int r;
};

// Part sizes of the balanced partition of n into r parts, larger parts first.
std::vector<int> balanced_parts(int n, int r);

// t_r(n): edge count of the balanced complete r-partite graph on n vertices.
std::uint64_t turan_number(int n, int r);

// T_{n,r}. Parts are contiguous label ranges, larger parts first; the
// generator re-checks its own edge count and K_{r+1}-freeness.
Graph turan_graph(TuranSpec spec);

struct JointExtremalSpec {
    int n;
    int r;
    int s = 1;
};

// Closed-form expectations for the s=1 instance; the clique/joint values
// exist only when n == 1 (mod r^2).
struct JointExtremalExpect {
    std::uint64_t edges;                      // t_r(n)
    std::optional<std::uint64_t> cliques;     // #K_{r+1} = ((r-1)/r^2)^r (n-1)^r
    std::optional<std::uint64_t> joint;       // j_{r+1} = ((r-1)/r^2)^{r-1} (n-1)^{r-1}
};
JointExtremalExpect joint_extremal_expectation(JointExtremalSpec spec);

// G_{n,r}(s). Layout: V_0 first (s vertices), then V_1..V_r. For s=1 the
// special vertex is attached so the edge count is exactly t_r(n); for s>=2
// the recipe fixes the edges and the report carries the deficit/surplus
// relative to t_r(n).
Graph joint_extremal(JointExtremalSpec spec);

struct JointExtremalReport {
    Graph g;
    std::uint64_t edges;
    std::int64_t deficit_vs_turan;  // t_r(n) - edges
};
JointExtremalReport joint_extremal_report(JointExtremalSpec spec);

struct PrismBlowupSpec {
    int n;
    int j;
};

// S_{j,n}: blow-up of the 3-prism (triangles {0,1,2},{3,4,5}, matching
// i -- i+3). Parts 0 and 3 get sizes floor/ceil of (n-4j)/2, the other four
// parts size j.
Graph prism_blowup(PrismBlowupSpec spec);

struct PendantCliqueSpec {
    int k;
    int ell;
};

// T(k,l): K_k on vertices 0..k-1 with vertex 0 joined to l pendants.
Graph pendant_clique(PendantCliqueSpec spec);

}  // namespace extremal
