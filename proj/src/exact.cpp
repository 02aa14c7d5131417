#include "matchk/exact.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace matchk {

namespace {

void require_square(const NonnegMatrix& m) {
    if (!m.square())
        throw DimensionError("permanent requires a square matrix, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void require_cap(std::size_t n, std::size_t cap, const char* what) {
    if (n > cap)
        throw ResourceLimitError(std::string(what) + ": size " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(cap));
}

// One Gray-code Ryser chunk over subset indices [first, last) of the column
// power set, rational row sums. Returns the signed partial sum
// sum_S (-1)^(n-|S|) prod_i rowsum_i(S).
Rational ryser_chunk_rational(const NonnegMatrix& m, std::uint64_t first, std::uint64_t last) {
    const std::size_t n = m.rows();
    std::uint64_t gray = first ^ (first >> 1);
    std::vector<Rational> rowsum(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j)
        if (gray & (std::uint64_t{1} << j))
            for (std::size_t i = 0; i < n; ++i) rowsum[i] += m.at(i, j);
    Rational acc(0), prod;
    int parity = std::popcount(gray) & 1;
    for (std::uint64_t k = first;;) {
        prod = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (sgn(rowsum[i]) == 0) {
                prod = 0;
                break;
            }
            prod *= rowsum[i];
        }
        if ((static_cast<int>(n) & 1) == parity)
            acc += prod;
        else
            acc -= prod;
        if (++k == last) break;
        std::size_t bit = static_cast<std::size_t>(std::countr_zero(k));
        std::uint64_t mask = std::uint64_t{1} << bit;
        gray ^= mask;
        parity ^= 1;
        if (gray & mask)
            for (std::size_t i = 0; i < n; ++i) rowsum[i] += m.at(i, bit);
        else
            for (std::size_t i = 0; i < n; ++i) rowsum[i] -= m.at(i, bit);
    }
    return acc;
}

// Integer fast path: row sums tracked in int64, per-term product in mpz.
// Valid only when every entry is an integer with n * max|entry| < 2^62.
Integer ryser_chunk_int64(const std::vector<std::int64_t>& e, std::size_t n,
                          std::uint64_t first, std::uint64_t last) {
    std::uint64_t gray = first ^ (first >> 1);
    std::vector<std::int64_t> rowsum(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        if (gray & (std::uint64_t{1} << j))
            for (std::size_t i = 0; i < n; ++i) rowsum[i] += e[i * n + j];
    Integer acc(0);
    mpz_t prod;
    mpz_init(prod);
    int parity = std::popcount(gray) & 1;
    for (std::uint64_t k = first;;) {
        bool zero = false;
        for (std::size_t i = 0; i < n; ++i)
            if (rowsum[i] == 0) {
                zero = true;
                break;
            }
        if (!zero) {
            mpz_set_si(prod, rowsum[0]);
            for (std::size_t i = 1; i < n; ++i) {
                if (rowsum[i] >= 0)
                    mpz_mul_ui(prod, prod, static_cast<unsigned long>(rowsum[i]));
                else {
                    mpz_mul_ui(prod, prod, static_cast<unsigned long>(-rowsum[i]));
                    mpz_neg(prod, prod);
                }
            }
            if ((static_cast<int>(n) & 1) == parity)
                mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), prod);
            else
                mpz_sub(acc.get_mpz_t(), acc.get_mpz_t(), prod);
        }
        if (++k == last) break;
        std::size_t bit = static_cast<std::size_t>(std::countr_zero(k));
        std::uint64_t mask = std::uint64_t{1} << bit;
        gray ^= mask;
        parity ^= 1;
        if (gray & mask)
            for (std::size_t i = 0; i < n; ++i) rowsum[i] += e[i * n + bit];
        else
            for (std::size_t i = 0; i < n; ++i) rowsum[i] -= e[i * n + bit];
    }
    mpz_clear(prod);
    return acc;
}

// Entries as int64 when the integer fast path applies, empty otherwise.
std::vector<std::int64_t> int64_entries(const NonnegMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0 || !m.integer_entries()) return {};
    std::vector<std::int64_t> e;
    e.reserve(n * n);
    std::int64_t limit = (std::int64_t{1} << 62) / static_cast<std::int64_t>(n);
    for (const auto& q : m.entries()) {
        if (!q.get_num().fits_slong_p()) return {};
        std::int64_t v = q.get_num().get_si();
        if (v >= limit) return {};
        e.push_back(v);
    }
    return e;
}

}  // namespace

Rational permanent_serial(const NonnegMatrix& m, const ExactCaps& caps) {
    require_square(m);
    require_cap(m.rows(), caps.permanent_max_n, "permanent");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    std::uint64_t total = std::uint64_t{1} << n;
    return ryser_chunk_rational(m, 1, total);
}

Rational permanent(const NonnegMatrix& m, const ExactCaps& caps) {
    require_square(m);
    require_cap(m.rows(), caps.permanent_max_n, "permanent");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    const std::uint64_t total = std::uint64_t{1} << n;

    int max_threads = omp_get_max_threads();
    std::uint64_t want = static_cast<std::uint64_t>(max_threads) * 8;
    std::uint64_t chunks = std::min<std::uint64_t>(want, total - 1);
    if (chunks == 0) chunks = 1;

    std::vector<std::int64_t> fast = int64_entries(m);
    if (!fast.empty()) {
        std::vector<Integer> partial(chunks);
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
            std::uint64_t first = 1 + (total - 1) * c / chunks;
            std::uint64_t last = 1 + (total - 1) * (c + 1) / chunks;
            partial[c] = ryser_chunk_int64(fast, n, first, last);
        }
        Integer sum(0);
        for (const auto& p : partial) sum += p;
        return Rational(sum);
    }

    std::vector<Rational> partial(chunks);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
        std::uint64_t first = 1 + (total - 1) * c / chunks;
        std::uint64_t last = 1 + (total - 1) * (c + 1) / chunks;
        partial[c] = ryser_chunk_rational(m, first, last);
    }
    Rational sum(0);
    for (const auto& p : partial) sum += p;
    return sum;
}

namespace {

Rational hafnian_rec(const SymZeroDiagMatrix& a, std::uint64_t mask) {
    if (mask == 0) return Rational(1);
    std::size_t u = static_cast<std::size_t>(std::countr_zero(mask));
    std::uint64_t rest = mask & (mask - 1);
    Rational total(0);
    for (std::uint64_t r = rest; r != 0; r &= r - 1) {
        std::size_t v = static_cast<std::size_t>(std::countr_zero(r));
        const Rational& w = a.at(u, v);
        if (sgn(w) == 0) continue;
        total += w * hafnian_rec(a, rest & ~(std::uint64_t{1} << v));
    }
    return total;
}

}  // namespace

Rational hafnian(const SymZeroDiagMatrix& a, const ExactCaps& caps) {
    if (a.order() % 2 != 0)
        throw ParityError("hafnian requires even order, got " + std::to_string(a.order()));
    require_cap(a.order(), caps.hafnian_max_order, "hafnian");
    if (a.order() == 0) return Rational(1);
    std::uint64_t mask = (std::uint64_t{1} << a.order()) - 1;
    return hafnian_rec(a, mask);
}

namespace {

int matching_sign(const std::vector<std::size_t>& flat) {
    // parity of the permutation 1..2n -> i1 j1 i2 j2 ... by inversion count
    int inv = 0;
    for (std::size_t i = 0; i < flat.size(); ++i)
        for (std::size_t j = i + 1; j < flat.size(); ++j)
            if (flat[i] > flat[j]) ++inv;
    return (inv & 1) ? -1 : 1;
}

void pfaffian_rec(const SkewMatrix& s, std::uint64_t mask, std::vector<std::size_t>& flat,
                  Rational& prod, Rational& total) {
    if (mask == 0) {
        total += Rational(matching_sign(flat)) * prod;
        return;
    }
    std::size_t u = static_cast<std::size_t>(std::countr_zero(mask));
    std::uint64_t rest = mask & (mask - 1);
    for (std::uint64_t r = rest; r != 0; r &= r - 1) {
        std::size_t v = static_cast<std::size_t>(std::countr_zero(r));
        Rational w = s.at(u, v);
        if (sgn(w) == 0) continue;
        flat.push_back(u);
        flat.push_back(v);
        Rational saved = prod;
        prod *= w;
        pfaffian_rec(s, rest & ~(std::uint64_t{1} << v), flat, prod, total);
        prod = std::move(saved);
        flat.pop_back();
        flat.pop_back();
    }
}

}  // namespace

Rational pfaffian(const SkewMatrix& s, const ExactCaps& caps) {
    require_cap(s.order(), caps.pfaffian_max_order, "pfaffian");
    if (s.order() == 0) return Rational(1);
    std::uint64_t mask = (std::uint64_t{1} << s.order()) - 1;
    std::vector<std::size_t> flat;
    Rational prod(1), total(0);
    pfaffian_rec(s, mask, flat, prod, total);
    return total;
}

Rational determinant(std::size_t n, const std::vector<Rational>& entries) {
    if (entries.size() != n * n)
        throw DimensionError("determinant requires a square entry grid");
    std::vector<Rational> a = entries;
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(a[pivot * n + col]) == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a[pivot * n + j], a[col * n + j]);
            det = -det;
        }
        det *= a[col * n + col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (sgn(a[i * n + col]) == 0) continue;
            Rational f = a[i * n + col] / a[col * n + col];
            for (std::size_t j = col; j < n; ++j) a[i * n + j] -= f * a[col * n + j];
        }
    }
    return det;
}

Rational determinant(const SkewMatrix& s) {
    std::size_t n = s.order();
    std::vector<Rational> full;
    full.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) full.push_back(s.at(i, j));
    return determinant(n, full);
}

Rational perm_k_direct(const NonnegMatrix& b, std::size_t k, const ExactCaps& caps) {
    std::size_t bound = std::min(b.rows(), b.cols());
    if (k > bound)
        throw ArgumentError("perm_k: k=" + std::to_string(k) + " exceeds min(m,n)=" +
                            std::to_string(bound));
    if (k == 0) return Rational(1);
    Rational total(0);
    for_each_subset(k, b.rows(), [&](const IndexSubset& alpha) {
        for_each_subset(k, b.cols(), [&](const IndexSubset& beta) {
            total += permanent_serial(submatrix(b, alpha, beta), caps);
        });
    });
    return total;
}

Rational haf_k_direct(const SymZeroDiagMatrix& a, std::size_t k, const ExactCaps& caps) {
    if (2 * k > a.order())
        throw ArgumentError("haf_k: k=" + std::to_string(k) + " exceeds floor(m/2), m=" +
                            std::to_string(a.order()));
    if (k == 0) return Rational(1);
    Rational total(0);
    for_each_subset(2 * k, a.order(), [&](const IndexSubset& alpha) {
        total += hafnian(principal_submatrix(a, alpha), caps);
    });
    return total;
}

}  // namespace matchk
