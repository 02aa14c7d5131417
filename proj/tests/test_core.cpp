#include <doctest.h>

#include "matchk/matrix.hpp"
#include "oracles.hpp"

using namespace matchk;

namespace {

NonnegMatrix mat(std::size_t m, std::size_t n, std::vector<long> v) {
    std::vector<Rational> e;
    for (long x : v) e.push_back(Rational(x));
    return NonnegMatrix(m, n, std::move(e));
}

IndexSubset subset(std::vector<std::size_t> idx, std::size_t universe) {
    return IndexSubset{std::move(idx), universe};
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4/2") == Rational(-2));
    CHECK(format_rational(Rational(10, 4)) == "5/2");
    CHECK(format_rational(Rational(7)) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == 479001600);
}

TEST_CASE("submatrix extraction") {
    auto b = mat(2, 2, {1, 2, 3, 4});
    CHECK(submatrix(b, subset({1}, 2), subset({2}, 2)) == mat(1, 1, {2}));
    CHECK(submatrix(b, subset({1, 2}, 2), subset({1, 2}, 2)) == b);
    auto c = mat(2, 3, {1, 2, 3, 4, 5, 6});
    CHECK(submatrix(c, subset({2}, 2), subset({1, 3}, 3)) == mat(1, 2, {4, 6}));
    CHECK(submatrix(c, IndexSubset::full(2), IndexSubset::full(3)) == c);
    CHECK_THROWS_AS(submatrix(c, subset({1}, 3), subset({1}, 3)), DimensionError);
}

TEST_CASE("principal submatrix") {
    auto k4 = SymZeroDiagMatrix::complete(4);
    auto sub = principal_submatrix(k4, subset({1, 2}, 4));
    CHECK(sub.order() == 2);
    CHECK(sub.at(0, 1) == 1);
    CHECK(principal_submatrix(k4, IndexSubset::full(4)) == k4);

    auto a = SymZeroDiagMatrix::zero(4);
    std::vector<Rational> upper = a.upper();
    upper[0] = 5;  // a_12
    auto a2 = SymZeroDiagMatrix(4, upper);
    auto z = principal_submatrix(a2, subset({3, 4}, 4));
    CHECK(z.at(0, 1) == 0);
}

TEST_CASE("symmetric matrix construction rejects bad input") {
    std::vector<Rational> full = {Rational(0), Rational(1), Rational(2), Rational(0)};
    CHECK_THROWS_AS(SymZeroDiagMatrix::from_full(2, full), ArgumentError);
    std::vector<Rational> diag = {Rational(1), Rational(1), Rational(1), Rational(0)};
    CHECK_THROWS_AS(SymZeroDiagMatrix::from_full(2, diag), ArgumentError);
    CHECK_THROWS_AS(mat(1, 1, {-1}), ArgumentError);
}

TEST_CASE("subset enumeration") {
    auto s = enumerate_subsets(2, 3);
    REQUIRE(s.size() == 3);
    CHECK(s[0].indices == std::vector<std::size_t>{1, 2});
    CHECK(s[1].indices == std::vector<std::size_t>{1, 3});
    CHECK(s[2].indices == std::vector<std::size_t>{2, 3});

    CHECK(enumerate_subsets(0, 5).size() == 1);
    CHECK(enumerate_subsets(0, 5)[0].indices.empty());
    CHECK(enumerate_subsets(3, 3).size() == 1);
    CHECK(enumerate_subsets(4, 3).empty());
}

TEST_CASE("subset counts match binomials and are distinct") {
    for (std::size_t m : {5, 9, 12}) {
        for (std::size_t k = 0; k <= m; ++k) {
            auto subs = enumerate_subsets(k, m);
            CHECK(Integer(static_cast<long>(subs.size())) == binomial(m, k));
            for (std::size_t i = 1; i < subs.size(); ++i)
                CHECK(subs[i - 1].indices < subs[i].indices);  // strict lexicographic order
        }
    }
}

TEST_CASE("exact arithmetic round trips") {
    oracles::TestRng rng{12345};
    for (int i = 0; i < 200; ++i) {
        Rational a = oracles::random_rational(rng);
        Rational b = oracles::random_rational(rng);
        CHECK((a + b) - b == a);
        if (sgn(b) != 0) CHECK((a * b) / b == a);
    }
}
