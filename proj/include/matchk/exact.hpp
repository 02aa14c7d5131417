#pragma once

#include "matchk/matrix.hpp"

namespace matchk {

// Size limits for the exponential kernels. Exceeding a cap raises
// ResourceLimitError before any work starts.
struct ExactCaps {
    std::size_t permanent_max_n = 30;
    std::size_t hafnian_max_order = 20;
    std::size_t pfaffian_max_order = 16;
};

// Ryser inclusion-exclusion with Gray-code column-subset updates,
// O(2^n * n). OpenMP-parallel over Gray-code ranges; exact arithmetic makes
// the result independent of the partitioning. 0x0 matrix -> 1.
Rational permanent(const NonnegMatrix& m, const ExactCaps& caps = {});

// Single-thread Gray-code Ryser, kept as the reference the parallel kernel
// is tested and benchmarked against.
Rational permanent_serial(const NonnegMatrix& m, const ExactCaps& caps = {});

// Sum over all perfect matchings of K_{2n} of the products of matched
// entries, by recursive pairing of the lowest unmatched vertex with
// zero-weight pruning. Diagonal never participates. 0x0 -> 1.
Rational hafnian(const SymZeroDiagMatrix& a, const ExactCaps& caps = {});

// Signed perfect-matching sum over a skew-symmetric matrix;
// det S = pfaffian(S)^2.
Rational pfaffian(const SkewMatrix& s, const ExactCaps& caps = {});

// Exact determinant by rational Gaussian elimination. Accepts any square
// entry grid (row-major), signed entries allowed.
Rational determinant(std::size_t n, const std::vector<Rational>& entries);
Rational determinant(const SkewMatrix& s);

// Definitional sum of perm B[alpha,beta] over all k-subsets of rows and
// columns. perm_0 := 1 (empty matching).
Rational perm_k_direct(const NonnegMatrix& b, std::size_t k, const ExactCaps& caps = {});

// Definitional sum of haf A[alpha,alpha] over all 2k-subsets. haf_0 := 1.
Rational haf_k_direct(const SymZeroDiagMatrix& a, std::size_t k, const ExactCaps& caps = {});

}  // namespace matchk
