#include "extremal/inequalities.hpp"

#include <cctype>
#include <stdexcept>

namespace extremal {

namespace {

[[noreturn]] void fail_pre(const std::string& what) { throw std::domain_error(what); }

void require_ascending(const std::vector<Rat>& x, const char* name) {
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (x[i] > x[i + 1]) fail_pre(std::string(name) + " must be ascending");
}

void require_nonneg(const std::vector<Rat>& x, const char* name) {
    for (const Rat& v : x)
        if (v < 0) fail_pre(std::string(name) + " must be nonnegative");
}

Rat product_tail(const std::vector<Rat>& x) {  // prod_{i>=2} x_i
    Rat p = 1;
    for (std::size_t i = 1; i < x.size(); ++i) p *= x[i];
    return p;
}

IneqReport make_report(const Rat& lhs, const Rat& rhs, const Rat& tol) {
    IneqReport rep;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.slack = lhs - rhs;
    rep.holds = rep.slack >= -tol;
    rep.equality = rep.slack == 0;
    return rep;
}

std::vector<Rat> to_rat(const std::vector<double>& v) {
    std::vector<Rat> r;
    r.reserve(v.size());
    for (double d : v) r.emplace_back(d);  // exact binary-fraction conversion
    return r;
}

Rat float_tol() { return Rat(mpz_class(1), mpz_class(1000000000000)); }  // 1e-12, exactly

IneqReport product_decrease_impl(const std::vector<Rat>& x, const std::vector<Rat>& y,
                                 const Rat& tol) {
    if (x.size() != y.size() || x.empty()) fail_pre("x and y must be nonempty, same length");
    require_ascending(x, "x");
    require_nonneg(x, "x");
    require_nonneg(y, "y");
    Rat alpha = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (y[i] > x[i] + tol) fail_pre("y_i <= x_i violated");
        alpha += x[i] - y[i];
    }
    Rat lhs = 1;
    for (const Rat& v : y) lhs *= v;
    Rat rhs = (x[0] - alpha) * product_tail(x);
    return make_report(lhs, rhs, tol);
}

IneqReport min_product_impl(const std::vector<Rat>& a, const Rat& tol) {
    if (a.empty()) fail_pre("a must be nonempty");
    const int r = int(a.size());
    require_ascending(a, "a");
    require_nonneg(a, "a");
    Rat sum = 0;
    for (const Rat& v : a) {
        if (v > 1 + tol) fail_pre("a_i <= 1 violated");
        sum += v;
    }
    if (sum + tol < r - 1) fail_pre("sum a_i >= r-1 violated");
    Rat rhs = 1;
    Rat q(r - 1, r);
    for (int i = 0; i < r - 1; ++i) rhs *= q;
    return make_report(product_tail(a), rhs, tol);
}

IneqReport perturbed_min_product_impl(const std::vector<Rat>& a, const std::vector<Rat>& b,
                            const Rat& tol) {
    if (a.size() != b.size() || a.empty()) fail_pre("a and b must be nonempty, same length");
    const int r = int(a.size());
    require_ascending(a, "a");
    require_nonneg(a, "a");
    require_nonneg(b, "b");
    Rat sum = 0, alpha = 0;
    for (int i = 0; i < r; ++i) {
        if (a[i] > 1 + tol) fail_pre("a_i <= 1 violated");
        if (b[i] > a[i] + tol) fail_pre("b_i <= a_i violated");
        sum += a[i];
        alpha += a[i] - b[i];
    }
    if (sum + tol < r - 1) fail_pre("sum a_i >= r-1 violated");
    if (alpha > Rat(1, 4) + tol) fail_pre("alpha <= 1/4 violated");
    Rat rhs = 1 - 2 * alpha;
    Rat q(r - 1, r);
    for (int i = 0; i < r - 1; ++i) rhs *= q;
    return make_report(product_tail(b), rhs, tol);
}

}  // namespace

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::domain_error("empty rational literal");
    if (s.find('/') != std::string::npos) {
        Rat r;
        if (r.set_str(s, 10) != 0) throw std::domain_error("bad rational literal: " + s);
        r.canonicalize();
        if (r.get_den() == 0) throw std::domain_error("zero denominator: " + s);
        return r;
    }
    // decimal, possibly with exponent: mantissa * 10^exp
    std::string t = s;
    long exp10 = 0;
    if (auto e = t.find_first_of("eE"); e != std::string::npos) {
        try {
            std::size_t used = 0;
            exp10 = std::stol(t.substr(e + 1), &used);
            if (used != t.size() - e - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::domain_error("bad rational literal: " + s);
        }
        t = t.substr(0, e);
    }
    std::string digits;
    bool neg = false;
    long frac_digits = 0, seen_dot = 0;
    for (char c : t) {
        if (c == '-' && digits.empty() && !neg) {
            neg = true;
        } else if (c == '+' && digits.empty()) {
        } else if (c == '.') {
            if (seen_dot++) throw std::domain_error("bad rational literal: " + s);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_dot) ++frac_digits;
        } else {
            throw std::domain_error("bad rational literal: " + s);
        }
    }
    if (digits.empty()) throw std::domain_error("bad rational literal: " + s);
    mpz_class mant(digits, 10);
    if (neg) mant = -mant;
    Rat r(mant);
    long net = exp10 - frac_digits;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, std::labs(net));
    if (net >= 0)
        r *= Rat(p10);
    else
        r /= Rat(p10);
    r.canonicalize();
    return r;
}

IneqReport check_product_decrease(const std::vector<Rat>& x, const std::vector<Rat>& y) {
    return product_decrease_impl(x, y, Rat(0));
}
IneqReport check_product_decrease(const std::vector<double>& x,
                                  const std::vector<double>& y) {
    return product_decrease_impl(to_rat(x), to_rat(y), float_tol());
}

IneqReport check_min_product(const std::vector<Rat>& a) {
    return min_product_impl(a, Rat(0));
}
IneqReport check_min_product(const std::vector<double>& a) {
    return min_product_impl(to_rat(a), float_tol());
}

IneqReport check_perturbed_min_product(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    return perturbed_min_product_impl(a, b, Rat(0));
}
IneqReport check_perturbed_min_product(const std::vector<double>& a, const std::vector<double>& b) {
    return perturbed_min_product_impl(to_rat(a), to_rat(b), float_tol());
}

}  // namespace extremal
