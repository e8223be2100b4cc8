#include "extremal/constructions.hpp"

#include <stdexcept>
#include <string>

#include "extremal/checked.hpp"
#include "extremal/cliques.hpp"

namespace extremal {

std::vector<int> balanced_parts(int n, int r) {
    if (r < 1 || r > n) throw std::domain_error("balanced_parts requires 1 <= r <= n");
    std::vector<int> sizes(r, n / r);
    for (int i = 0; i < n % r; ++i) ++sizes[i];
    return sizes;
}

std::uint64_t turan_number(int n, int r) {
    std::vector<int> sizes = balanced_parts(n, r);
    std::uint64_t non_edges = 0;
    for (int s : sizes) non_edges += checked_binomial(s, 2);
    return checked_binomial(n, 2) - non_edges;
}

Graph turan_graph(TuranSpec spec) {
    std::vector<int> sizes = balanced_parts(spec.n, spec.r);
    Graph k1(spec.r);
    for (int i = 0; i < spec.r; ++i)
        for (int j = i + 1; j < spec.r; ++j) k1.add_edge(i, j);
    Graph g = blow_up(k1, sizes);
    if (edge_count(g) != turan_number(spec.n, spec.r))
        throw std::logic_error("turan_graph self-check failed: edge count");
    if (spec.r + 1 <= spec.n && count_cliques(g, spec.r + 1).total != 0)
        throw std::logic_error("turan_graph self-check failed: K_{r+1} found");
    return g;
}

namespace {

JointExtremalExpect expectation_impl(int n, int r) {
    JointExtremalExpect e{turan_number(n, r), std::nullopt, std::nullopt};
    if ((n - 1) % (r * r) == 0) {
        std::uint64_t base = std::uint64_t(n - 1) / (r * r) * (r - 1);  // ((r-1)/r^2)(n-1)
        std::uint64_t cliques = 1, joint = 1;
        for (int i = 0; i < r; ++i) cliques = checked_mul(cliques, base);
        for (int i = 0; i < r - 1; ++i) joint = checked_mul(joint, base);
        e.cliques = cliques;
        e.joint = joint;
    }
    return e;
}

}  // namespace

JointExtremalExpect joint_extremal_expectation(JointExtremalSpec spec) {
    if (spec.s != 1)
        throw std::domain_error("closed-form expectations exist only for s = 1");
    return expectation_impl(spec.n, spec.r);
}

namespace {

void validate_joint_spec(const JointExtremalSpec& spec) {
    if (spec.r < 2) throw std::domain_error("joint_extremal requires r >= 2");
    if (spec.s < 1) throw std::domain_error("joint_extremal requires s >= 1");
    if (spec.n <= spec.s) throw std::domain_error("joint_extremal requires n > s");
}

// s = 1: complete multipartite on the last n-1 vertices, special vertex v
// attached with floor/ceil((r-1)(n-1)/r^2) neighbors per part so that the
// total edge count is exactly t_r(n). Earlier parts receive the ceiling.
Graph joint_extremal_s1(int n, int r) {
    std::vector<int> sizes = balanced_parts(n - 1, r);
    Graph base(r);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) base.add_edge(i, j);
    Graph multi = blow_up(base, sizes);

    Graph g(n);  // vertex 0 is v; parts follow in label order
    for (auto [u, w] : multi.edges()) g.add_edge(u + 1, w + 1);

    std::uint64_t need = turan_number(n, r) - turan_number(n - 1, r);
    std::uint64_t flo = std::uint64_t(r - 1) * std::uint64_t(n - 1) / (std::uint64_t(r) * r);
    std::uint64_t cei = flo + (std::uint64_t(r - 1) * (n - 1) % (std::uint64_t(r) * r) ? 1 : 0);
    if (need < std::uint64_t(r) * flo || need > std::uint64_t(r) * cei)
        throw std::runtime_error(
            "joint_extremal: degree budget " + std::to_string(need) +
            " cannot be split into per-part " + std::to_string(flo) + "/" +
            std::to_string(cei) + " attachments");
    int ceil_parts = int(need - std::uint64_t(r) * flo);

    int offset = 1;
    for (int i = 0; i < r; ++i) {
        std::uint64_t take = (i < ceil_parts) ? cei : flo;
        if (take > std::uint64_t(sizes[i]))
            throw std::runtime_error("joint_extremal: attachment exceeds part size");
        for (std::uint64_t a = 0; a < take; ++a) g.add_edge(0, offset + int(a));
        offset += sizes[i];
    }
    if (edge_count(g) != turan_number(n, r))
        throw std::logic_error("joint_extremal self-check failed: edge count");
    return g;
}

// General s: V_0 of size s is internally balanced complete r-partite on
// subparts V_{0,1..r}; V_1..V_r are complete multipartite; V_{0,j} is
// complete to V_{i,j'} iff j != j'. Subparts within each part are equitable,
// larger subparts first.
Graph joint_extremal_general(int n, int r, int s) {
    std::vector<int> part_sizes = balanced_parts(n - s, r);
    std::vector<int> part_of(n), sub_of(n);

    int label = 0;
    auto lay_out = [&](int part, int size) {
        std::vector<int> subs = balanced_parts(size, r);
        for (int j = 0; j < r; ++j)
            for (int c = 0; c < subs[j]; ++c) {
                part_of[label] = part;
                sub_of[label] = j;
                ++label;
            }
    };
    lay_out(0, s);
    for (int i = 1; i <= r; ++i) lay_out(i, part_sizes[i - 1]);

    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int pu = part_of[u], pv = part_of[v];
            bool adjacent;
            if (pu == 0 && pv == 0)
                adjacent = sub_of[u] != sub_of[v];
            else if (pu == 0 || pv == 0)
                adjacent = sub_of[u] != sub_of[v];
            else
                adjacent = pu != pv;
            if (adjacent) g.add_edge(u, v);
        }
    return g;
}

}  // namespace

Graph joint_extremal(JointExtremalSpec spec) {
    validate_joint_spec(spec);
    if (spec.s == 1) return joint_extremal_s1(spec.n, spec.r);
    return joint_extremal_general(spec.n, spec.r, spec.s);
}

JointExtremalReport joint_extremal_report(JointExtremalSpec spec) {
    Graph g = joint_extremal(spec);
    std::uint64_t e = edge_count(g);
    std::int64_t turan = std::int64_t(turan_number(spec.n, spec.r));
    return {std::move(g), e, turan - std::int64_t(e)};
}

Graph prism_blowup(PrismBlowupSpec spec) {
    if (spec.j < 1) throw std::domain_error("prism_blowup requires j >= 1");
    if (spec.n < 4 * spec.j + 2)
        throw std::domain_error("prism_blowup requires n >= 4j + 2");
    int rest = spec.n - 4 * spec.j;
    Graph prism(6);
    for (int i = 0; i < 3; ++i) {
        prism.add_edge(i, (i + 1) % 3);
        prism.add_edge(3 + i, 3 + (i + 1) % 3);
        prism.add_edge(i, 3 + i);
    }
    // special matching edge is 0 -- 3
    std::vector<int> sizes = {rest / 2, spec.j, spec.j, (rest + 1) / 2, spec.j, spec.j};
    return blow_up(prism, sizes);
}

Graph pendant_clique(PendantCliqueSpec spec) {
    if (spec.k < 2 || spec.ell < 0)
        throw std::domain_error("pendant_clique requires k >= 2, ell >= 0");
    Graph g(spec.k + spec.ell);
    for (int i = 0; i < spec.k; ++i)
        for (int j = i + 1; j < spec.k; ++j) g.add_edge(i, j);
    for (int p = 0; p < spec.ell; ++p) g.add_edge(0, spec.k + p);
    return g;
}

}  // namespace extremal
