#include <doctest.h>

#include "lpa/matrix_units.hpp"
#include "test_support.hpp"

using namespace lpa;
using lpa::testing::graph_of;

namespace {

// The oracle: every pair of units multiplies to delta_jk E_il. Returns the
// number of products checked.
int check_delta_table(const Graph& g, const MatrixUnits& b) {
    int checked = 0;
    for (int i = 0; i < b.size; ++i)
        for (int j = 0; j < b.size; ++j)
            for (int k = 0; k < b.size; ++k)
                for (int l = 0; l < b.size; ++l) {
                    Element want = (j == k) ? b.unit(i, l) : Element::zero(g);
                    CHECK(b.unit(i, j) * b.unit(k, l) == want);
                    ++checked;
                }
    return checked;
}

}  // namespace

TEST_CASE("sink units: isolated vertex is the 1x1 block [v]") {
    Graph g = graph_of("vertex v\n");
    MatrixUnits b = sink_matrix_units(g, 0);
    CHECK(b.size == 1);
    CHECK_FALSE(b.laurent);
    CHECK(b.unit(0, 0) == Element::vertex(g, 0));
    CHECK(b.block_identity() * b.block_identity() == b.block_identity());
}

TEST_CASE("sink units: chain u->v gives {v, e^, e, u}") {
    Graph g = graph_of("vertex u\nvertex v\nedge e u v\n");
    MatrixUnits b = sink_matrix_units(g, g.vertex("v"));
    REQUIRE(b.size == 2);
    CHECK(b.unit(0, 0) == Element::vertex(g, g.vertex("v")));
    CHECK(b.unit(0, 1) == Element::ghost_edge(g, 0));
    CHECK(b.unit(1, 0) == Element::edge(g, 0));
    // ee^ collapses to u: the single-edge CK-2 relation
    CHECK(b.unit(1, 1) == Element::vertex(g, g.vertex("u")));
    check_delta_table(g, b);
}

TEST_CASE("sink units: 3-chain full 81-product table") {
    Graph g = graph_of("vertex a\nvertex b\nvertex c\nedge e1 a b\nedge e2 b c\n");
    MatrixUnits b = sink_matrix_units(g, g.vertex("c"));
    REQUIRE(b.size == 3);
    CHECK(check_delta_table(g, b) == 81);
    CHECK(b.block_identity() == identity_element(g));
}

TEST_CASE("sink units reject non-sinks") {
    Graph g = graph_of("vertex u\nvertex v\nedge e u v\n");
    CHECK_THROWS_AS(sink_matrix_units(g, g.vertex("u")), Error);
}

TEST_CASE("cycle units: single loop") {
    Graph g = graph_of("vertex v\nedge c v v\n");
    MatrixUnits b = cycle_matrix_units(g, simple_cycles(g)[0]);
    REQUIRE(b.size == 1);
    CHECK(b.laurent);
    CHECK(b.unit(0, 0) == Element::vertex(g, 0));
    CHECK(b.shift == Element::edge(g, 0));
    Element v = Element::vertex(g, 0);
    CHECK(b.shift_inverse * b.shift == v);
    CHECK(b.shift * b.shift_inverse == v);
}

TEST_CASE("cycle units: chain into a loop is the 2x2 Laurent block") {
    Graph g = graph_of("vertex u\nvertex v\nedge g u v\nedge c v v\n");
    MatrixUnits b = cycle_matrix_units(g, simple_cycles(g)[0]);
    REQUIRE(b.size == 2);
    CHECK(check_delta_table(g, b) == 16);
    Element id = b.block_identity();
    CHECK(id == identity_element(g));
    CHECK(b.shift * b.shift_inverse == id);
    CHECK(b.shift_inverse * b.shift == id);
    // x is central in the block
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(b.shift * b.unit(i, j) == b.unit(i, j) * b.shift);
}

TEST_CASE("cycle units: pure 2-cycle, shift squared is the full traversal") {
    Graph g = graph_of("vertex u\nvertex v\nedge p u v\nedge q v u\n");
    MatrixUnits b = cycle_matrix_units(g, simple_cycles(g)[0]);
    REQUIRE(b.size == 2);
    check_delta_table(g, b);
    Element id = b.block_identity();
    CHECK(b.shift * b.shift_inverse == id);
    CHECK(b.shift_inverse * b.shift == id);
    // oracle: x^2 = pq + qp, the two rotations of the full cycle
    Element pq = Element::edge(g, 0) * Element::edge(g, 1);
    Element qp = Element::edge(g, 1) * Element::edge(g, 0);
    CHECK(b.shift * b.shift == pq + qp);
}

TEST_CASE("cycle units reject cycles with exits") {
    Graph g = graph_of("vertex v\nvertex w\nedge c v v\nedge f v w\n");
    CHECK_THROWS_AS(cycle_matrix_units(g, simple_cycles(g)[0]), Error);
}

TEST_CASE("distinct blocks annihilate each other") {
    Graph g = graph_of("vertex u\nvertex v\nedge c1 u u\nedge c2 v v\n");
    auto cycles = simple_cycles(g);
    REQUIRE(cycles.size() == 2);
    MatrixUnits a = cycle_matrix_units(g, cycles[0]);
    MatrixUnits b = cycle_matrix_units(g, cycles[1]);
    CHECK((a.unit(0, 0) * b.unit(0, 0)).is_zero());
    CHECK((b.unit(0, 0) * a.unit(0, 0)).is_zero());
    CHECK((a.shift * b.shift).is_zero());
    CHECK(a.block_identity() + b.block_identity() == identity_element(g));
}

TEST_CASE("cycle units: longer tail into a 2-cycle") {
    // a -> u, u <-> v: one cycle of length 2 with three paths into it
    Graph g = graph_of("vertex a\nvertex u\nvertex v\n"
                       "edge t a u\nedge p u v\nedge q v u\n");
    auto cycles = simple_cycles(g);
    REQUIRE(cycles.size() == 1);
    MatrixUnits b = cycle_matrix_units(g, cycles[0]);
    REQUIRE(b.size == 3);
    check_delta_table(g, b);
    Element id = b.block_identity();
    CHECK(id == identity_element(g));
    CHECK(b.shift * b.shift_inverse == id);
    CHECK(b.shift_inverse * b.shift == id);
    for (int i = 0; i < b.size; ++i)
        for (int j = 0; j < b.size; ++j)
            CHECK(b.shift * b.unit(i, j) == b.unit(i, j) * b.shift);
}
