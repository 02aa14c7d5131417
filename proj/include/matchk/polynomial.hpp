#pragma once

#include <cstddef>
#include <vector>

#include "matchk/exact.hpp"
#include "matchk/matrix.hpp"

namespace matchk {

// Generating polynomial of k-matching weight sums: coefficient k is
// perm_k / haf_k. Always has constant term 1 and nonnegative coefficients;
// trailing zeros trimmed.
class MatchingPolynomial {
  public:
    explicit MatchingPolynomial(std::vector<Rational> coefficients);

    const std::vector<Rational>& coefficients() const { return c_; }
    std::size_t degree() const { return c_.size() - 1; }
    Rational eval(const Rational& x) const;

    bool operator==(const MatchingPolynomial& o) const = default;

  private:
    std::vector<Rational> c_;
};

MatchingPolynomial matching_poly_bipartite(const NonnegMatrix& b, const ExactCaps& caps = {});
MatchingPolynomial matching_poly_general(const SymZeroDiagMatrix& a, const ExactCaps& caps = {});

struct RootReport {
    bool all_real_negative = false;
    std::size_t degree = 0;
    // real roots found in (-inf, 0), counted with multiplicity
    std::size_t real_negative_roots = 0;
};

// Exact decision via Sturm sequences over rational arithmetic. Repeated
// roots are handled by peeling squarefree parts off the gcd chain.
// Constant polynomials are vacuously true.
RootReport verify_real_negative_roots(const MatchingPolynomial& p);

// Exact count of distinct real roots of p in (-inf, 0); p(0) must be
// nonzero. Exposed for testing.
std::size_t sturm_negative_root_count(const std::vector<Rational>& p);

// Coefficient of x_1...x_n in prod_i (sum_j b_ij x_j), computed in the
// multilinear quotient algebra (monomials with a repeated variable cannot
// survive the full mixed derivative and are dropped). Equals perm(B).
Rational perm_by_coefficient_extraction(const NonnegMatrix& b, std::size_t max_n = 12);

// Coefficient of x_1...x_n in (x^T A x / 2)^{n/2}, divided by (n/2)!.
// Equals haf(A); n must be even.
Rational haf_by_coefficient_extraction(const SymZeroDiagMatrix& a, std::size_t max_n = 12);

}  // namespace matchk
