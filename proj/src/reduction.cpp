#include "matchk/reduction.hpp"

#include <string>

namespace matchk {

namespace {

void check_k_range(std::size_t k, std::size_t bound, const char* what) {
    if (k < 1 || k > bound)
        throw ArgumentError(std::string(what) + ": k=" + std::to_string(k) +
                            " outside [1," + std::to_string(bound) + "]");
}

Rational exact_divide(const Rational& value, const Integer& divisor, bool integer_input,
                      const char* what) {
    Rational q = value / Rational(divisor);
    if (integer_input && !is_integer(q))
        throw InternalConsistencyError(std::string(what) + ": division not exact: " +
                                       format_rational(value) + " / " + divisor.get_str());
    return q;
}

}  // namespace

NonnegMatrix build_Bk(const NonnegMatrix& b, std::size_t k) {
    const std::size_t m = b.rows(), n = b.cols();
    check_k_range(k, std::min(m, n), "build_Bk");
    const std::size_t order = m + n - k;
    std::vector<Rational> e(order * order, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) e[i * order + j] = b.at(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = n; j < order; ++j) e[i * order + j] = 1;
    for (std::size_t i = m; i < order; ++i)
        for (std::size_t j = 0; j < n; ++j) e[i * order + j] = 1;
    return NonnegMatrix(order, order, std::move(e));
}

Rational perm_k_via_reduction(const NonnegMatrix& b, std::size_t k, const ExactCaps& caps) {
    const std::size_t m = b.rows(), n = b.cols();
    check_k_range(k, std::min(m, n), "perm_k_via_reduction");
    Rational p = permanent(build_Bk(b, k), caps);
    Integer divisor = factorial(m - k) * factorial(n - k);
    return exact_divide(p, divisor, b.integer_entries(), "perm_k_via_reduction");
}

SymZeroDiagMatrix build_Ak(const SymZeroDiagMatrix& a, std::size_t k) {
    const std::size_t m = a.order();
    check_k_range(k, m / 2, "build_Ak");
    const std::size_t order = 2 * m - 2 * k;
    std::vector<Rational> upper;
    upper.reserve(order * (order - 1) / 2);
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = i + 1; j < order; ++j) {
            if (j < m)
                upper.push_back(a.at(i, j));
            else if (i < m)
                upper.push_back(Rational(1));  // coupling block
            else
                upper.push_back(Rational(0));  // padding corner
        }
    return SymZeroDiagMatrix(order, std::move(upper));
}

Rational haf_k_via_reduction(const SymZeroDiagMatrix& a, std::size_t k, const ExactCaps& caps) {
    const std::size_t m = a.order();
    check_k_range(k, m / 2, "haf_k_via_reduction");
    Rational h = hafnian(build_Ak(a, k), caps);
    return exact_divide(h, factorial(m - 2 * k), a.integer_entries(), "haf_k_via_reduction");
}

NonnegMatrix pad_isolated(const NonnegMatrix& b, std::size_t m, std::size_t n) {
    if (m < b.rows() || n < b.cols())
        throw ArgumentError("pad_isolated: target dimensions smaller than input");
    std::vector<Rational> e(m * n, Rational(0));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) e[i * n + j] = b.at(i, j);
    return NonnegMatrix(m, n, std::move(e));
}

}  // namespace matchk
