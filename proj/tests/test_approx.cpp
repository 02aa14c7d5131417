#include <doctest.h>

#include <cmath>

#include "matchk/approx.hpp"
#include "matchk/exact.hpp"
#include "oracles.hpp"

using namespace matchk;
using oracles::TestRng;

TEST_CASE("permutation matrix: every sample is exact") {
    std::vector<Rational> e(9, Rational(0));
    e[1] = e[3] = e[8] = 1;
    NonnegMatrix p(3, 3, e);
    auto r = estimate_permanent(p, 10, 42);
    CHECK(r.estimate == 1.0);
    CHECK(r.standard_error == 0.0);
    CHECK(r.samples == 10);
}

TEST_CASE("zero row forces estimate zero") {
    std::vector<Rational> e = {Rational(1), Rational(2), Rational(0), Rational(0)};
    auto r = estimate_permanent(NonnegMatrix(2, 2, e), 50, 7);
    CHECK(r.estimate == 0.0);
}

TEST_CASE("sample count zero is rejected") {
    CHECK_THROWS_AS(estimate_permanent(NonnegMatrix::ones(2, 2), 0, 1), ArgumentError);
}

TEST_CASE("J_5 concentration") {
    auto r = estimate_permanent(NonnegMatrix::ones(5, 5), 100000, 1234);
    CHECK(std::abs(r.estimate - 120.0) <= 3.0 * std::max(r.standard_error, 1e-9));
}

TEST_CASE("same seed gives bit-identical reports") {
    TestRng rng{401};
    auto b = oracles::random_int_matrix(rng, 4, 4, 3);
    auto r1 = estimate_permanent(b, 5000, 99);
    auto r2 = estimate_permanent(b, 5000, 99);
    CHECK(r1.estimate == r2.estimate);
    CHECK(r1.standard_error == r2.standard_error);
    auto r3 = estimate_permanent(b, 5000, 100);
    CHECK(r1.estimate != r3.estimate);
}

TEST_CASE("sampler expectation equals the permanent exactly") {
    TestRng rng{411};
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 1 + rng.below(4);
        auto b = oracles::random_01_matrix(rng, n, n);
        CHECK(permanent_sampler_expectation(b) == permanent(b));
        CHECK(permanent_sampler_expectation(b, true) == permanent(b));
    }
    // weighted entries too
    auto w = oracles::random_int_matrix(rng, 3, 3, 5);
    CHECK(permanent_sampler_expectation(w) == permanent(w));
    CHECK(permanent_sampler_expectation(w, true) == permanent(w));
}

TEST_CASE("sampler expectation equals the hafnian exactly") {
    TestRng rng{421};
    for (int trial = 0; trial < 10; ++trial) {
        auto a = oracles::random_sym_matrix(rng, 4, 2);
        CHECK(hafnian_sampler_expectation(a) == hafnian(a));
        CHECK(hafnian_sampler_expectation(a, true) == hafnian(a));
    }
}

TEST_CASE("hafnian estimator basics") {
    SymZeroDiagMatrix edge(2, {Rational(7, 2)});
    auto r = estimate_hafnian(edge, 20, 5);
    CHECK(r.estimate == doctest::Approx(3.5));
    CHECK(r.standard_error == 0.0);

    auto k4 = SymZeroDiagMatrix::complete(4);
    auto rk = estimate_hafnian(k4, 100000, 17);
    CHECK(std::abs(rk.estimate - 3.0) <= 3.0 * rk.standard_error);

    CHECK_THROWS_AS(estimate_hafnian(SymZeroDiagMatrix::complete(3), 10, 1), ParityError);
}

TEST_CASE("perm_k estimator through the block reduction") {
    auto j2 = NonnegMatrix::ones(2, 2);
    auto r2 = estimate_perm_k(j2, 2, 1000, 3);  // B_2 = B, no branching variance in J_2
    CHECK(std::abs(r2.estimate - 2.0) <= 3.0 * std::max(r2.standard_error, 1e-9));
    auto r1 = estimate_perm_k(j2, 1, 100000, 3);
    CHECK(std::abs(r1.estimate - 4.0) <= 3.0 * r1.standard_error);

    TestRng rng{431};
    auto b = oracles::random_01_matrix(rng, 4, 4);
    Rational exact = perm_k_direct(b, 2);
    auto r = estimate_perm_k(b, 2, 200000, 11);
    CHECK(std::abs(r.estimate - exact.get_d()) <= 3.0 * std::max(r.standard_error, 1e-9));
}

TEST_CASE("haf_k estimator") {
    auto k4 = SymZeroDiagMatrix::complete(4);
    auto r = estimate_haf_k(k4, 1, 200000, 23);
    CHECK(std::abs(r.estimate - 6.0) <= 3.0 * r.standard_error);
}

TEST_CASE("matching polynomial pointwise estimate") {
    auto j2 = NonnegMatrix::ones(2, 2);
    auto r0 = estimate_matching_poly_eval(j2, 0.0, 100, 1);
    CHECK(r0.estimate == 1.0);

    auto r1 = estimate_matching_poly_eval(j2, 1.0, 200000, 31);
    CHECK(std::abs(r1.estimate - 7.0) <= 3.0 * std::max(r1.standard_error, 1e-9));

    CHECK_THROWS_AS(estimate_matching_poly_eval(j2, -1.0, 100, 1), ArgumentError);
}

TEST_CASE("median-of-means schedule from (eps, delta)") {
    SamplerOptions opts;
    opts.target = EstimateTarget{0.5, 0.25};
    auto r = estimate_permanent(NonnegMatrix::ones(3, 3), 0, 77, opts);
    // ceil(72/0.25) = 288 per batch, 2*ceil(ln 4)+1 = 5 batches
    CHECK(r.samples == 288 * 5);
    CHECK(r.target.has_value());
    CHECK(std::abs(r.estimate - 6.0) <= 6.0 * 0.5);
}

TEST_CASE("weight-proportional variant stays concentrated") {
    TestRng rng{441};
    auto b = oracles::random_int_matrix(rng, 4, 4, 5);
    Rational exact = permanent(b);
    SamplerOptions opts;
    opts.weight_proportional = true;
    auto r = estimate_permanent(b, 100000, 13, opts);
    CHECK(std::abs(r.estimate - exact.get_d()) <= 4.0 * std::max(r.standard_error, 1e-9));
}
