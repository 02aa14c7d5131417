#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "matchk/rational.hpp"

namespace matchk {

// Dense m x n matrix of nonnegative exact rationals, row-major.
// Immutable after construction.
class NonnegMatrix {
  public:
    NonnegMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static NonnegMatrix zero(std::size_t rows, std::size_t cols);
    static NonnegMatrix ones(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    // 0-based access.
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    const std::vector<Rational>& entries() const { return entries_; }

    bool integer_entries() const;

    bool operator==(const NonnegMatrix& o) const = default;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

// Symmetric matrix with zero diagonal; only the strict upper triangle is
// stored, so symmetry and the zero diagonal hold by construction.
class SymZeroDiagMatrix {
  public:
    // upper holds entries (i,j), i<j, in row-major order of the strict
    // upper triangle: (0,1),(0,2),...,(0,m-1),(1,2),...
    SymZeroDiagMatrix(std::size_t order, std::vector<Rational> upper);

    // Builds from a full m x m grid, validating symmetry and zero diagonal.
    static SymZeroDiagMatrix from_full(std::size_t order, const std::vector<Rational>& full);
    static SymZeroDiagMatrix zero(std::size_t order);
    // Complete-graph weights: every off-diagonal entry 1.
    static SymZeroDiagMatrix complete(std::size_t order);

    std::size_t order() const { return order_; }
    const Rational& at(std::size_t i, std::size_t j) const;
    const std::vector<Rational>& upper() const { return upper_; }

    bool integer_entries() const;

    bool operator==(const SymZeroDiagMatrix& o) const = default;

  private:
    std::size_t upper_index(std::size_t i, std::size_t j) const;

    std::size_t order_;
    std::vector<Rational> upper_;
    Rational zero_;
};

// Skew-symmetric matrix of even order; upper triangle stored, b_ji = -b_ij.
class SkewMatrix {
  public:
    SkewMatrix(std::size_t order, std::vector<Rational> upper);

    std::size_t order() const { return order_; }
    // Signed 0-based access: at(i,i) = 0, at(j,i) = -at(i,j).
    Rational at(std::size_t i, std::size_t j) const;
    const std::vector<Rational>& upper() const { return upper_; }

  private:
    std::size_t order_, pad_ = 0;
    std::vector<Rational> upper_;
};

// Strictly increasing 1-based index sequence drawn from {1,...,universe}.
struct IndexSubset {
    std::vector<std::size_t> indices;
    std::size_t universe = 0;

    std::size_t size() const { return indices.size(); }
    static IndexSubset full(std::size_t m);
    bool operator==(const IndexSubset& o) const = default;
};

NonnegMatrix submatrix(const NonnegMatrix& b, const IndexSubset& row_set,
                       const IndexSubset& col_set);

SymZeroDiagMatrix principal_submatrix(const SymZeroDiagMatrix& a, const IndexSubset& rows);

// Visits all C(m,k) k-subsets of {1,...,m} in lexicographic order.
// k > m yields nothing.
void for_each_subset(std::size_t k, std::size_t m,
                     const std::function<void(const IndexSubset&)>& visit);

std::vector<IndexSubset> enumerate_subsets(std::size_t k, std::size_t m);

}  // namespace matchk
