#include "matchk/polynomial.hpp"

#include "matchk/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

namespace matchk {

namespace {

// dense univariate polynomials, index = power

void trim(std::vector<Rational>& p) {
    while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
}

bool is_zero(const std::vector<Rational>& p) {
    return p.size() == 1 && sgn(p[0]) == 0;
}

std::vector<Rational> derivative(const std::vector<Rational>& p) {
    if (p.size() <= 1) return {Rational(0)};
    std::vector<Rational> d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rational(static_cast<long>(i));
    trim(d);
    return d;
}

std::vector<Rational> remainder(std::vector<Rational> num, const std::vector<Rational>& den) {
    while (num.size() >= den.size() && !is_zero(num)) {
        Rational f = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
        num.pop_back();
        if (num.empty()) num.push_back(Rational(0));
        trim(num);
    }
    return num;
}

std::vector<Rational> quotient(std::vector<Rational> num, const std::vector<Rational>& den) {
    std::vector<Rational> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 1,
                            Rational(0));
    while (num.size() >= den.size() && !is_zero(num)) {
        Rational f = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        q[shift] = f;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
        num.pop_back();
        if (num.empty()) num.push_back(Rational(0));
        trim(num);
    }
    trim(q);
    return q;
}

void make_monic(std::vector<Rational>& p) {
    if (is_zero(p)) return;
    Rational lc = p.back();
    for (auto& c : p) c /= lc;
}

std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    trim(a);
    trim(b);
    while (!is_zero(b)) {
        std::vector<Rational> r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
        make_monic(b);
    }
    make_monic(a);
    return a;
}

int sign_at_minus_inf(const std::vector<Rational>& p) {
    int lc = sgn(p.back());
    return ((p.size() - 1) % 2 == 0) ? lc : -lc;
}

std::size_t sign_variations(const std::vector<int>& signs) {
    std::size_t v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

std::size_t sturm_negative_root_count(const std::vector<Rational>& poly) {
    std::vector<Rational> p = poly;
    trim(p);
    if (p.size() <= 1) return 0;
    if (sgn(p[0]) == 0) throw ArgumentError("sturm count requires p(0) != 0");
    std::vector<std::vector<Rational>> seq;
    seq.push_back(p);
    seq.push_back(derivative(p));
    while (!is_zero(seq.back())) {
        std::vector<Rational> r = remainder(seq[seq.size() - 2], seq.back());
        for (auto& c : r) c = -c;
        if (is_zero(r)) break;
        seq.push_back(std::move(r));
    }
    std::vector<int> at_minus_inf, at_zero;
    for (const auto& q : seq) {
        at_minus_inf.push_back(sign_at_minus_inf(q));
        at_zero.push_back(sgn(q[0]));
    }
    std::size_t v_inf = sign_variations(at_minus_inf);
    std::size_t v_zero = sign_variations(at_zero);
    return v_inf - v_zero;
}

MatchingPolynomial::MatchingPolynomial(std::vector<Rational> coefficients)
    : c_(std::move(coefficients)) {
    if (c_.empty()) throw ArgumentError("matching polynomial needs at least c_0");
    if (c_[0] != 1) throw ArgumentError("matching polynomial must have constant term 1");
    for (const auto& c : c_)
        if (sgn(c) < 0) throw ArgumentError("matching polynomial coefficients are nonnegative");
    trim(c_);
}

Rational MatchingPolynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

namespace {

// estimated kernel work, used only to pick the cheaper route
double direct_cost(std::size_t m, std::size_t n, std::size_t k) {
    auto log_binom = [](std::size_t a, std::size_t b) {
        return std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0);
    };
    return std::exp(log_binom(m, k) + log_binom(n, k)) * std::ldexp(double(k), int(k));
}

}  // namespace

MatchingPolynomial matching_poly_bipartite(const NonnegMatrix& b, const ExactCaps& caps) {
    const std::size_t m = b.rows(), n = b.cols(), top = std::min(m, n);
    std::vector<Rational> c(top + 1);
    c[0] = 1;
    for (std::size_t k = 1; k <= top; ++k) {
        double reduction_cost = std::ldexp(double(m + n - k), int(m + n - k));
        if (m + n - k <= caps.permanent_max_n && reduction_cost < direct_cost(m, n, k))
            c[k] = perm_k_via_reduction(b, k, caps);
        else
            c[k] = perm_k_direct(b, k, caps);
    }
    return MatchingPolynomial(std::move(c));
}

MatchingPolynomial matching_poly_general(const SymZeroDiagMatrix& a, const ExactCaps& caps) {
    const std::size_t top = a.order() / 2;
    std::vector<Rational> c(top + 1);
    c[0] = 1;
    for (std::size_t k = 1; k <= top; ++k) c[k] = haf_k_direct(a, k, caps);
    return MatchingPolynomial(std::move(c));
}

RootReport verify_real_negative_roots(const MatchingPolynomial& poly) {
    RootReport report;
    report.degree = poly.degree();
    std::vector<Rational> p = poly.coefficients();
    trim(p);
    if (p.size() <= 1) {
        report.all_real_negative = true;  // constant: vacuous
        return report;
    }
    bool ok = true;
    // peel squarefree parts: p = s * gcd(p, p'), recurse on the gcd
    while (p.size() > 1) {
        std::vector<Rational> g = poly_gcd(p, derivative(p));
        std::vector<Rational> s = quotient(p, g);  // squarefree, same distinct roots
        if (sgn(s[0]) == 0) {
            ok = false;  // root at zero
            break;
        }
        std::size_t found = sturm_negative_root_count(s);
        report.real_negative_roots += found;
        if (found != s.size() - 1) {
            ok = false;
            break;
        }
        p = std::move(g);
    }
    report.all_real_negative = ok;
    return report;
}

namespace {

void require_extraction_cap(std::size_t n, std::size_t max_n, const char* what) {
    if (n > max_n)
        throw ResourceLimitError(std::string(what) + ": n=" + std::to_string(n) +
                                 " exceeds cap " + std::to_string(max_n));
}

}  // namespace

Rational perm_by_coefficient_extraction(const NonnegMatrix& b, std::size_t max_n) {
    if (!b.square()) throw DimensionError("coefficient extraction requires a square matrix");
    const std::size_t n = b.rows();
    require_extraction_cap(n, max_n, "perm_by_coefficient_extraction");
    if (n == 0) return Rational(1);
    // multilinear coefficients indexed by variable subset
    std::vector<Rational> cur(std::size_t{1} << n, Rational(0));
    cur[0] = 1;
    std::vector<Rational> next(cur.size());
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(next.begin(), next.end(), Rational(0));
        for (std::size_t mask = 0; mask < cur.size(); ++mask) {
            if (sgn(cur[mask]) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (mask & (std::size_t{1} << j)) continue;
                const Rational& w = b.at(i, j);
                if (sgn(w) == 0) continue;
                next[mask | (std::size_t{1} << j)] += cur[mask] * w;
            }
        }
        std::swap(cur, next);
    }
    return cur[(std::size_t{1} << n) - 1];
}

Rational haf_by_coefficient_extraction(const SymZeroDiagMatrix& a, std::size_t max_n) {
    const std::size_t n = a.order();
    if (n % 2 != 0) throw ParityError("haf coefficient extraction requires even order");
    require_extraction_cap(n, max_n, "haf_by_coefficient_extraction");
    if (n == 0) return Rational(1);
    // q = x^T A x / 2 is already multilinear (zero diagonal)
    struct Term {
        std::size_t mask;
        Rational w;
    };
    std::vector<Term> q;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (sgn(a.at(i, j)) > 0)
                q.push_back({(std::size_t{1} << i) | (std::size_t{1} << j), a.at(i, j)});
    std::vector<Rational> cur(std::size_t{1} << n, Rational(0));
    cur[0] = 1;
    std::vector<Rational> next(cur.size());
    for (std::size_t p = 0; p < n / 2; ++p) {
        std::fill(next.begin(), next.end(), Rational(0));
        for (std::size_t mask = 0; mask < cur.size(); ++mask) {
            if (sgn(cur[mask]) == 0) continue;
            for (const auto& t : q) {
                if (mask & t.mask) continue;
                next[mask | t.mask] += cur[mask] * t.w;
            }
        }
        std::swap(cur, next);
    }
    Rational top = cur[(std::size_t{1} << n) - 1];
    return top / Rational(factorial(n / 2));
}

}  // namespace matchk
