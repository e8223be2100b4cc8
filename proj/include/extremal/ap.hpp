#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

// k-term arithmetic progression a, a+d, ..., a+(k-1)d inside [n] (1-based).
struct Progression {
    long a;
    long d;
    int k;

    long last() const { return a + (std::int64_t(k) - 1) * d; }
    std::vector<long> terms() const;
    friend bool operator==(const Progression&, const Progression&) = default;
};

// Coloring of [n] (1-based); color[i-1] is the color of integer i.
struct IntColoring {
    int n;
    std::vector<int> color;

    int num_colors() const;
    std::vector<int> class_sizes() const;
    int max_multiplicity() const;
    bool equinumerous(int t) const;  // exactly t classes of equal size
};

enum class Family { Coprime, Prime, All };

std::string family_name(Family f);

// Integers in [n] with no prime factor <= k, by direct sieve.
std::vector<long> coprime_survivors(long n, int k);

// Enumeration order is (d, a) ascending for every family.
//   Coprime: a in [floor(n/2)], d in survivors(floor(n/2k), k)
//   Prime:   all k-APs in [n] with prime difference
//   All:     all k-APs in [n]
void for_each_progression(Family f, long n, int k,
                          const std::function<bool(const Progression&)>& visit);
std::uint64_t family_size(Family f, long n, int k);

struct APCertificate {
    std::optional<Progression> progression;  // nullopt = family exhausted
    Family family;
    std::uint64_t family_size;
    std::uint64_t edges_hit_bound;  // e(G) * k
    std::uint64_t scanned;
    bool counting_argument_applies() const { return family_size > edges_hit_bound; }
};

// First progression in family order whose k integers are pairwise
// non-adjacent in g (vertex v represents the integer v+1) and avoid
// `banned`. When the family is exhausted with no bans and the counting
// inequality e(G)*k < |family| held, a logic error is raised: the
// counting argument promised a witness.
APCertificate find_independent_ap(const Graph& g, int k, Family f,
                                  const std::vector<int>& banned = {});

// Same-color graph reduction: a rainbow AP of c is an independent AP of the
// graph joining equal-colored integers. Revalidates the witness directly.
std::optional<Progression> rainbow_ap_witness(const IntColoring& c, int k);

enum class SearchOutcome { Exact, Undecided, Refused, BudgetExhausted };

struct SrReport {
    SearchOutcome outcome;
    long value = -1;                      // smallest n, when Exact
    std::optional<IntColoring> witness;   // rainbow-free coloring at the last bad n
    std::uint64_t nodes = 0;
    std::uint64_t projected = 0;          // canonical colorings projected (Refused)
    std::string note;
};

// Smallest n <= n_max such that every coloring of [n] using no color more
// than m times has a rainbow k-AP. Exhaustive over colorings canonicalized
// by first appearance, pruned on completed rainbow APs.
SrReport sr_exact(int m, int k, long n_max, std::uint64_t budget = 100'000'000);

struct TkReport {
    SearchOutcome outcome;
    bool holds = false;                  // meaningful when Exact
    std::optional<IntColoring> counterexample;
    std::uint64_t nodes = 0;
    std::uint64_t projected = 0;
    std::string note;
};

// Does every equinumerous t-coloring of [tm] contain a rainbow k-AP?
TkReport tk_check(int t, int m, int k, std::uint64_t budget = 100'000'000);

// k-AP A with pi(i) not in A for every i in A; pi is a permutation of [n]
// (1-based). Fixed points are modeled as banned vertices, so the identity
// permutation exhausts every family.
APCertificate set_mapping_ap(const std::vector<long>& pi, int k);

}  // namespace extremal
