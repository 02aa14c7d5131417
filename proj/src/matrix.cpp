#include "matchk/matrix.hpp"

#include <algorithm>
#include <string>

namespace matchk {

namespace {

void check_nonneg(const std::vector<Rational>& entries) {
    for (const auto& e : entries)
        if (sgn(e) < 0) throw ArgumentError("negative entry in nonnegative matrix");
}

}  // namespace

NonnegMatrix::NonnegMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionError("entry count " + std::to_string(entries_.size()) +
                             " does not match " + std::to_string(rows_) + "x" +
                             std::to_string(cols_));
    check_nonneg(entries_);
}

NonnegMatrix NonnegMatrix::zero(std::size_t rows, std::size_t cols) {
    return NonnegMatrix(rows, cols, std::vector<Rational>(rows * cols, Rational(0)));
}

NonnegMatrix NonnegMatrix::ones(std::size_t rows, std::size_t cols) {
    return NonnegMatrix(rows, cols, std::vector<Rational>(rows * cols, Rational(1)));
}

bool NonnegMatrix::integer_entries() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& q) { return is_integer(q); });
}

SymZeroDiagMatrix::SymZeroDiagMatrix(std::size_t order, std::vector<Rational> upper)
    : order_(order), upper_(std::move(upper)), zero_(0) {
    if (upper_.size() != order_ * (order_ - (order_ > 0 ? 1 : 0)) / 2)
        throw DimensionError("upper-triangle entry count does not match order " +
                             std::to_string(order_));
    check_nonneg(upper_);
}

SymZeroDiagMatrix SymZeroDiagMatrix::from_full(std::size_t order,
                                               const std::vector<Rational>& full) {
    if (full.size() != order * order)
        throw DimensionError("full grid size does not match order");
    std::vector<Rational> upper;
    upper.reserve(order * (order - (order > 0 ? 1 : 0)) / 2);
    for (std::size_t i = 0; i < order; ++i) {
        if (full[i * order + i] != 0)
            throw ArgumentError("nonzero diagonal entry in symmetric zero-diagonal matrix");
        for (std::size_t j = i + 1; j < order; ++j) {
            if (full[i * order + j] != full[j * order + i])
                throw ArgumentError("matrix is not symmetric");
            upper.push_back(full[i * order + j]);
        }
    }
    return SymZeroDiagMatrix(order, std::move(upper));
}

SymZeroDiagMatrix SymZeroDiagMatrix::zero(std::size_t order) {
    std::size_t n = order * (order - (order > 0 ? 1 : 0)) / 2;
    return SymZeroDiagMatrix(order, std::vector<Rational>(n, Rational(0)));
}

SymZeroDiagMatrix SymZeroDiagMatrix::complete(std::size_t order) {
    std::size_t n = order * (order - (order > 0 ? 1 : 0)) / 2;
    return SymZeroDiagMatrix(order, std::vector<Rational>(n, Rational(1)));
}

std::size_t SymZeroDiagMatrix::upper_index(std::size_t i, std::size_t j) const {
    // requires i < j
    return i * order_ - i * (i + 1) / 2 + (j - i - 1);
}

const Rational& SymZeroDiagMatrix::at(std::size_t i, std::size_t j) const {
    if (i == j) return zero_;
    if (i > j) std::swap(i, j);
    return upper_[upper_index(i, j)];
}

bool SymZeroDiagMatrix::integer_entries() const {
    return std::all_of(upper_.begin(), upper_.end(),
                       [](const Rational& q) { return is_integer(q); });
}

SkewMatrix::SkewMatrix(std::size_t order, std::vector<Rational> upper)
    : order_(order), upper_(std::move(upper)) {
    if (order_ % 2 != 0) throw ParityError("skew matrix order must be even");
    if (upper_.size() != order_ * (order_ - (order_ > 0 ? 1 : 0)) / 2)
        throw DimensionError("upper-triangle entry count does not match order");
}

Rational SkewMatrix::at(std::size_t i, std::size_t j) const {
    if (i == j) return Rational(0);
    bool flip = i > j;
    if (flip) std::swap(i, j);
    const Rational& v = upper_[i * order_ - i * (i + 1) / 2 + (j - i - 1)];
    return flip ? Rational(-v) : v;
}

IndexSubset IndexSubset::full(std::size_t m) {
    IndexSubset s;
    s.universe = m;
    s.indices.resize(m);
    for (std::size_t i = 0; i < m; ++i) s.indices[i] = i + 1;
    return s;
}

namespace {

void check_subset(const IndexSubset& s, std::size_t expected_universe, const char* what) {
    if (s.universe != expected_universe)
        throw DimensionError(std::string(what) + ": subset universe " +
                             std::to_string(s.universe) + " does not match dimension " +
                             std::to_string(expected_universe));
    std::size_t prev = 0;
    for (std::size_t idx : s.indices) {
        if (idx <= prev || idx > s.universe)
            throw ArgumentError(std::string(what) + ": indices not strictly increasing in range");
        prev = idx;
    }
}

}  // namespace

NonnegMatrix submatrix(const NonnegMatrix& b, const IndexSubset& row_set,
                       const IndexSubset& col_set) {
    check_subset(row_set, b.rows(), "submatrix rows");
    check_subset(col_set, b.cols(), "submatrix cols");
    std::vector<Rational> out;
    out.reserve(row_set.size() * col_set.size());
    for (std::size_t i : row_set.indices)
        for (std::size_t j : col_set.indices) out.push_back(b.at(i - 1, j - 1));
    return NonnegMatrix(row_set.size(), col_set.size(), std::move(out));
}

SymZeroDiagMatrix principal_submatrix(const SymZeroDiagMatrix& a, const IndexSubset& rows) {
    check_subset(rows, a.order(), "principal submatrix");
    std::size_t k = rows.size();
    std::vector<Rational> upper;
    upper.reserve(k * (k - (k > 0 ? 1 : 0)) / 2);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            upper.push_back(a.at(rows.indices[i] - 1, rows.indices[j] - 1));
    return SymZeroDiagMatrix(k, std::move(upper));
}

void for_each_subset(std::size_t k, std::size_t m,
                     const std::function<void(const IndexSubset&)>& visit) {
    if (k > m) return;
    IndexSubset s;
    s.universe = m;
    s.indices.resize(k);
    for (std::size_t i = 0; i < k; ++i) s.indices[i] = i + 1;
    while (true) {
        visit(s);
        // next lexicographic combination
        std::size_t i = k;
        while (i > 0 && s.indices[i - 1] == m - k + i) --i;
        if (i == 0) return;
        ++s.indices[i - 1];
        for (std::size_t j = i; j < k; ++j) s.indices[j] = s.indices[j - 1] + 1;
    }
}

std::vector<IndexSubset> enumerate_subsets(std::size_t k, std::size_t m) {
    std::vector<IndexSubset> out;
    for_each_subset(k, m, [&](const IndexSubset& s) { out.push_back(s); });
    return out;
}

}  // namespace matchk
