#include <doctest.h>

#include "matchk/graph.hpp"
#include "matchk/polynomial.hpp"
#include "matchk/reduction.hpp"
#include "oracles.hpp"

using namespace matchk;
using oracles::TestRng;

namespace {

std::vector<Rational> coeffs(std::vector<long> v) {
    std::vector<Rational> c;
    for (long x : v) c.push_back(Rational(x));
    return c;
}

}  // namespace

TEST_CASE("matching polynomial construction") {
    MatchingPolynomial p(coeffs({1, 4, 2}));
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(1)) == 7);
    CHECK(p.eval(Rational(0)) == 1);
    CHECK_THROWS_AS(MatchingPolynomial(coeffs({2, 1})), ArgumentError);
    CHECK_THROWS_AS(MatchingPolynomial(std::vector<Rational>{}), ArgumentError);
    // trailing zeros trimmed
    CHECK(MatchingPolynomial(coeffs({1, 3, 0})).degree() == 1);
}

TEST_CASE("bipartite matching polynomial") {
    auto p = matching_poly_bipartite(NonnegMatrix::ones(2, 2));
    CHECK(p.coefficients() == coeffs({1, 4, 2}));
    CHECK(matching_poly_bipartite(NonnegMatrix::zero(3, 3)).coefficients() == coeffs({1}));
    CHECK(matching_poly_bipartite(NonnegMatrix::ones(1, 1)).coefficients() == coeffs({1, 1}));
}

TEST_CASE("general matching polynomial") {
    CHECK(matching_poly_general(SymZeroDiagMatrix::complete(4)).coefficients() ==
          coeffs({1, 6, 3}));
    SymZeroDiagMatrix edge(2, {Rational(7)});
    CHECK(matching_poly_general(edge).coefficients() == coeffs({1, 7}));
    CHECK(matching_poly_general(SymZeroDiagMatrix::zero(5)).coefficients() == coeffs({1}));
}

TEST_CASE("polynomial coefficients agree across both routes") {
    TestRng rng{301};
    for (int trial = 0; trial < 5; ++trial) {
        std::size_t m = 2 + rng.below(3), n = 2 + rng.below(3);
        auto b = oracles::random_int_matrix(rng, m, n);
        auto p = matching_poly_bipartite(b);
        for (std::size_t k = 1; k <= std::min(m, n); ++k) {
            CHECK(p.coefficients()[k] == perm_k_direct(b, k));
            CHECK(p.coefficients()[k] == perm_k_via_reduction(b, k));
        }
    }
}

TEST_CASE("real negative root verification") {
    CHECK(verify_real_negative_roots(MatchingPolynomial(coeffs({1, 4, 2}))).all_real_negative);
    CHECK(verify_real_negative_roots(MatchingPolynomial(coeffs({1, 1}))).all_real_negative);
    CHECK(verify_real_negative_roots(MatchingPolynomial(coeffs({1}))).all_real_negative);
    // negative control: 1 + x^2 has roots +-i
    auto bad = verify_real_negative_roots(MatchingPolynomial(coeffs({1, 0, 1})));
    CHECK_FALSE(bad.all_real_negative);
    // repeated roots: (1+x)^2, both at -1
    auto rep = verify_real_negative_roots(MatchingPolynomial(coeffs({1, 2, 1})));
    CHECK(rep.all_real_negative);
    CHECK(rep.real_negative_roots == 2);
}

TEST_CASE("sturm count on a known quadratic") {
    // 1 + 4x + 2x^2: both roots in (-inf, 0)
    CHECK(sturm_negative_root_count(coeffs({1, 4, 2})) == 2);
    CHECK(sturm_negative_root_count(coeffs({1, 0, 1})) == 0);
    CHECK(sturm_negative_root_count(coeffs({-1, 0, 1})) == 1);  // roots +-1
}

TEST_CASE("matching polynomials of random graphs are real-rooted") {
    TestRng rng{311};
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t v = 2 + rng.below(9);
        auto a = oracles::random_sym_matrix(rng, v, 3);
        auto report = verify_real_negative_roots(matching_poly_general(a));
        CHECK(report.all_real_negative);
    }
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t m = 1 + rng.below(5), n = 1 + rng.below(5);
        auto b = oracles::random_int_matrix(rng, m, n, 4);
        CHECK(verify_real_negative_roots(matching_poly_bipartite(b)).all_real_negative);
    }
}

TEST_CASE("permanent by coefficient extraction") {
    std::vector<Rational> e = {Rational(1), Rational(2), Rational(3), Rational(4)};
    CHECK(perm_by_coefficient_extraction(NonnegMatrix(2, 2, e)) == 10);
    std::vector<Rational> id(9, Rational(0));
    id[0] = id[4] = id[8] = 1;
    CHECK(perm_by_coefficient_extraction(NonnegMatrix(3, 3, id)) == 1);

    TestRng rng{321};
    for (std::size_t n = 1; n <= 6; ++n) {
        auto b = oracles::random_int_matrix(rng, n, n);
        CHECK(perm_by_coefficient_extraction(b) == permanent(b));
    }
    CHECK_THROWS_AS(perm_by_coefficient_extraction(NonnegMatrix::ones(2, 3)), DimensionError);
}

TEST_CASE("hafnian by coefficient extraction") {
    SymZeroDiagMatrix edge(2, {Rational(9)});
    CHECK(haf_by_coefficient_extraction(edge) == 9);
    CHECK(haf_by_coefficient_extraction(SymZeroDiagMatrix::complete(4)) == 3);

    // a_12 = 2, a_34 = 5, rest 0: single matching with weight 10
    std::vector<Rational> upper(6, Rational(0));
    upper[0] = 2;  // (1,2)
    upper[5] = 5;  // (3,4)
    CHECK(haf_by_coefficient_extraction(SymZeroDiagMatrix(4, upper)) == 10);

    TestRng rng{331};
    for (std::size_t n : {2, 4, 6, 8}) {
        auto a = oracles::random_sym_matrix(rng, n);
        CHECK(haf_by_coefficient_extraction(a) == hafnian(a));
    }
    CHECK_THROWS_AS(haf_by_coefficient_extraction(SymZeroDiagMatrix::complete(3)), ParityError);
}
