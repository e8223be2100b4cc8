#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace extremal {

// Exact rational scalar for the inequality checkers. Doubles convert
// exactly (every finite double is rational); decimal/fraction strings
// parse exactly.
using Rat = mpq_class;

Rat parse_rational(const std::string& s);  // "7", "3/4", "0.25", "-1.5e2"

struct IneqReport {
    bool holds;
    bool equality;
    Rat lhs;    // the product being bounded
    Rat rhs;    // the bound
    Rat slack;  // lhs - rhs
};

// Absolute tolerance applied when callers pass floating-point data; the
// rational entry points are exact.
inline constexpr double kFloatTolerance = 1e-12;

// x ascending, 0 <= y_i <= x_i; with alpha = sum(x_i - y_i), checks
// prod y_i >= (x_1 - alpha) * prod_{i>=2} x_i.
IneqReport check_product_decrease(const std::vector<Rat>& x, const std::vector<Rat>& y);
IneqReport check_product_decrease(const std::vector<double>& x, const std::vector<double>& y);

// a_1 <= ... <= a_r in [0,1] with sum >= r-1:
// prod_{i>=2} a_i >= ((r-1)/r)^{r-1}, equality iff all a_i = (r-1)/r.
IneqReport check_min_product(const std::vector<Rat>& a);
IneqReport check_min_product(const std::vector<double>& a);

// Perturbed variant: 0 <= b_i <= a_i with total decrease alpha <= 1/4 gives
// prod_{i>=2} b_i >= (1 - 2 alpha) ((r-1)/r)^{r-1}.
IneqReport check_perturbed_min_product(const std::vector<Rat>& a, const std::vector<Rat>& b);
IneqReport check_perturbed_min_product(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace extremal
