#include <doctest.h>

#include <sstream>

#include "matchk/io.hpp"

using namespace matchk;

TEST_CASE("rectangular matrix parsing") {
    std::istringstream in("# comment\n2 3\n1 2 3\n4 5/2 6\n");
    auto p = parse_input(in);
    REQUIRE(p.kind == InputKind::Bipartite);
    CHECK(p.matrix->rows() == 2);
    CHECK(p.matrix->at(1, 1) == Rational(5, 2));
}

TEST_CASE("symmetric matrix parsing") {
    std::istringstream in("3\n0 1 2\n1 0 0\n2 0 0\n");
    auto p = parse_input(in);
    REQUIRE(p.kind == InputKind::Symmetric);
    CHECK(p.symmetric->at(0, 2) == 2);
}

TEST_CASE("graph parsing") {
    std::istringstream in("v 4\ne 1 2 3\ne 3 4 1/2\n");
    auto p = parse_input(in);
    REQUIRE(p.kind == InputKind::Graph);
    CHECK(p.graph->vertex_count() == 4);
    CHECK(p.graph->edges()[1].w == Rational(1, 2));
}

TEST_CASE("malformed inputs raise ParseError") {
    auto reject = [](const char* text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_input(in), ParseError);
    };
    reject("");
    reject("2 2\n1 2\n");              // missing row
    reject("2 2\n1 2 3\n4 5 6\n");     // wrong row width
    reject("2\n0 1\n2 0\n");           // not symmetric
    reject("2\n1 1\n1 1\n");           // nonzero diagonal
    reject("v 2\ne 1 1 1\n");          // self-loop
    reject("v 2\ne 1 3 1\n");          // endpoint out of range
    reject("v 2\nx 1 2 1\n");          // bad edge line
    reject("a b c\n");
    reject("2 2\n1 -2\n3 4\n");        // negative entry
}

TEST_CASE("matrix writing round trips") {
    std::istringstream in("2 2\n0 1/3\n2 5\n");
    auto p = parse_input(in);
    std::ostringstream out;
    write_matrix(out, *p.matrix);
    std::istringstream back(out.str());
    CHECK(*parse_input(back).matrix == *p.matrix);
}

TEST_CASE("symmetric writing round trips") {
    std::istringstream in("3\n0 4 0\n4 0 1/7\n0 1/7 0\n");
    auto p = parse_input(in);
    std::ostringstream out;
    write_symmetric(out, *p.symmetric);
    std::istringstream back(out.str());
    CHECK(*parse_input(back).symmetric == *p.symmetric);
}
