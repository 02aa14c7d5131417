#pragma once

#include "matchk/exact.hpp"
#include "matchk/matrix.hpp"

namespace matchk {

// Block matrix [[B, 1_{m,m-k}], [1_{n-k,n}, 0]] of order (m+n-k).
// Its permanent equals (m-k)!(n-k)! * perm_k B. Requires 1 <= k <= min(m,n);
// for k = min(m,n) the padding blocks degenerate naturally.
NonnegMatrix build_Bk(const NonnegMatrix& b, std::size_t k);

// perm(B_k) / ((m-k)! (n-k)!). For integer B the division must be exact;
// a non-integer quotient raises InternalConsistencyError.
Rational perm_k_via_reduction(const NonnegMatrix& b, std::size_t k, const ExactCaps& caps = {});

// Symmetric block matrix [[A, 1_{m,m-2k}], [1_{m-2k,m}, 0]] of order 2m-2k.
// Its hafnian equals (m-2k)! * haf_k A. Requires 1 <= k <= floor(m/2).
SymZeroDiagMatrix build_Ak(const SymZeroDiagMatrix& a, std::size_t k);

// haf(A_k) / (m-2k)!, same exactness contract as perm_k_via_reduction.
Rational haf_k_via_reduction(const SymZeroDiagMatrix& a, std::size_t k,
                             const ExactCaps& caps = {});

// Embeds a k x k matrix in the top-left of an m x n zero matrix, the
// isolated-vertex padding: perm_k of the result equals perm of the input.
NonnegMatrix pad_isolated(const NonnegMatrix& b, std::size_t m, std::size_t n);

}  // namespace matchk
