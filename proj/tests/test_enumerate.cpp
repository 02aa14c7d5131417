#include <doctest.h>

#include <set>

#include "matchk/exact.hpp"
#include "matchk/graph.hpp"
#include "oracles.hpp"

using namespace matchk;
using oracles::TestRng;

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(WeightedGraph(3, {{2, 2, Rational(1)}}), ArgumentError);  // self-loop
    CHECK_THROWS_AS(WeightedGraph(3, {{1, 4, Rational(1)}}), ArgumentError);  // out of range
    CHECK_THROWS_AS(WeightedGraph(3, {{1, 2, Rational(0)}}), ArgumentError);  // zero weight
    CHECK_THROWS_AS(WeightedGraph(3, {{1, 2, Rational(1)}, {1, 2, Rational(2)}}),
                    ArgumentError);  // duplicate
    // isolated vertices are fine
    WeightedGraph g(5, {{1, 2, Rational(1)}});
    CHECK(g.vertex_count() == 5);
}

TEST_CASE("count_k_matchings on small graphs") {
    WeightedGraph path3(3, {{1, 2, Rational(1)}, {2, 3, Rational(1)}});
    CHECK(count_k_matchings(path3, 1) == 2);
    CHECK(count_k_matchings(path3, 2) == 0);
    CHECK(count_k_matchings(path3, 0) == 1);

    auto k4 = graph_from_symmetric(SymZeroDiagMatrix::complete(4));
    CHECK(count_k_matchings(k4, 2) == 3);

    WeightedGraph c6(6, {{1, 2, Rational(1)},
                         {2, 3, Rational(1)},
                         {3, 4, Rational(1)},
                         {4, 5, Rational(1)},
                         {5, 6, Rational(1)},
                         {1, 6, Rational(1)}});
    CHECK(count_k_matchings(c6, 3) == 2);
    CHECK(count_k_matchings(c6, 4) == 0);  // beyond floor(V/2)
}

TEST_CASE("weighted_matching_sum examples") {
    WeightedGraph e1(2, {{1, 2, Rational(5)}});
    CHECK(weighted_matching_sum(e1, 1) == 5);

    BipartiteGraph k22(2, 2,
                       {{1, 1, Rational(1)}, {1, 2, Rational(1)}, {2, 1, Rational(1)},
                        {2, 2, Rational(1)}});
    CHECK(weighted_matching_sum(k22, 2) == 2);

    TestRng rng{201};
    auto b = oracles::random_int_matrix(rng, 3, 3);
    auto g = graph_from_matrix(b);
    for (std::size_t k = 0; k <= 3; ++k)
        CHECK(weighted_matching_sum(g, k) == perm_k_direct(b, k));
}

TEST_CASE("unit weights collapse the weighted sum to the count") {
    TestRng rng{211};
    auto b01 = oracles::random_01_matrix(rng, 4, 4);
    auto g = graph_from_matrix(b01).as_general();
    for (std::size_t k = 0; k <= 2; ++k)
        CHECK(count_k_matchings(g, k) == weighted_matching_sum(g, k));
}

TEST_CASE("enumeration visits each matching exactly once") {
    TestRng rng{221};
    for (int trial = 0; trial < 5; ++trial) {
        auto a = oracles::random_sym_matrix(rng, 8, 1);  // random 0/1 graph
        auto g = graph_from_symmetric(a);
        for (std::size_t k = 0; k <= 4; ++k) {
            auto all = enumerate_k_matchings(g, k);
            std::set<std::vector<std::size_t>> dedup(all.begin(), all.end());
            CHECK(dedup.size() == all.size());
            CHECK(Rational(static_cast<long>(all.size())) == count_k_matchings(g, k));
        }
    }
}

TEST_CASE("general-graph sums match haf_k_direct") {
    TestRng rng{231};
    auto a = oracles::random_sym_matrix(rng, 7);
    auto g = graph_from_symmetric(a);
    for (std::size_t k = 0; k <= 3; ++k)
        CHECK(weighted_matching_sum(g, k) == haf_k_direct(a, k));
}

TEST_CASE("matrix-graph round trips") {
    CHECK(graph_from_matrix(NonnegMatrix::zero(3, 3)).edges().empty());

    auto k22 = graph_from_matrix(NonnegMatrix::ones(2, 2));
    CHECK(k22.edges().size() == 4);

    TestRng rng{241};
    auto b = oracles::random_int_matrix(rng, 4, 4, 2);
    CHECK(matrix_from_graph(graph_from_matrix(b)) == b);

    auto a = oracles::random_sym_matrix(rng, 5, 2);
    CHECK(symmetric_from_graph(graph_from_symmetric(a)) == a);
}
