#include <doctest.h>

#include <numeric>

#include "lpa/analysis.hpp"
#include "lpa/corpus.hpp"
#include "test_support.hpp"

using namespace lpa;
using lpa::testing::graph_of;

namespace {

// Independent growth oracle: the normal monomials of total length <= n,
// counted by plain enumeration of path pairs. No elimination involved.
long long count_normal_monomials(const Graph& g, int n) {
    std::vector<std::vector<Path>> by_len(n + 1);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        by_len[0].push_back(Path::at_vertex(v));
    for (int k = 1; k <= n; ++k)
        for (const Path& p : by_len[k - 1])
            for (EdgeId e : g.out_edges(path_range(g, p))) {
                Path q = p;
                q.edges.push_back(e);
                by_len[k].push_back(q);
            }
    long long count = 0;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b)
            for (const Path& alpha : by_len[a])
                for (const Path& beta : by_len[b]) {
                    if (path_range(g, alpha) != path_range(g, beta)) continue;
                    if (monomial_is_normal(g, Monomial{alpha, beta})) ++count;
                }
    return count;
}

}  // namespace

TEST_CASE("check_pi: shapes from the corpus") {
    Graph loop = graph_of("vertex v\nedge c v v\n");
    PIReport r = check_pi(loop);
    CHECK(r.is_pi);
    CHECK(*r.bound_d == 1);
    CHECK_FALSE(r.offending_cycle.has_value());

    Graph rose = graph_of("vertex v\nedge e v v\nedge f v v\n");
    PIReport s = check_pi(rose);
    CHECK_FALSE(s.is_pi);
    CHECK_FALSE(s.bound_d.has_value());
    REQUIRE(s.offending_cycle.has_value());
    CHECK(s.offending_cycle->cycle.path().edges == std::vector<EdgeId>{0});
    CHECK(rose.edge(s.offending_cycle->exit_edge).name == "f");
}

TEST_CASE("check_pi: d grows along the E_n tower while GK stays One") {
    for (int n = 2; n <= 8; ++n) {
        Graph g = make_En(n);
        PIReport r = check_pi(g);
        CHECK(r.is_pi);
        CHECK(*r.bound_d == n);
        CHECK(classify_gk(g) == GKClass::One);
    }
}

TEST_CASE("decompose: desk-scale reproductions") {
    auto blocks_of = [](const Graph& g) {
        Decomposition d = decompose(g);
        std::vector<std::pair<char, int>> out;
        for (const auto& [v, n] : d.sink_blocks) out.push_back({'K', n});
        for (const auto& [c, m] : d.cycle_blocks) out.push_back({'L', m});
        return out;
    };
    CHECK(blocks_of(graph_of("vertex v\n")) ==
          std::vector<std::pair<char, int>>{{'K', 1}});
    CHECK(blocks_of(graph_of("vertex v\nedge c v v\n")) ==
          std::vector<std::pair<char, int>>{{'L', 1}});
    CHECK(blocks_of(graph_of("vertex u\nvertex v\nedge e u v\n")) ==
          std::vector<std::pair<char, int>>{{'K', 2}});
    CHECK(blocks_of(graph_of("vertex u\nvertex v\nedge g u v\nedge c v v\n")) ==
          std::vector<std::pair<char, int>>{{'L', 2}});
    CHECK(blocks_of(graph_of("vertex a\nvertex b\nvertex c\nedge e1 a b\nedge e2 b c\n")) ==
          std::vector<std::pair<char, int>>{{'K', 3}});

    Graph rose = graph_of("vertex v\nedge e v v\nedge f v v\n");
    CHECK_THROWS_AS(decompose(rose), NotPIError);
    try {
        decompose(rose);
    } catch (const NotPIError& e) {
        CHECK(rose.edge(e.witness().exit_edge).name == "f");
    }
}

TEST_CASE("classify_gk") {
    CHECK(classify_gk(graph_of("vertex a\nvertex b\nvertex c\nedge e1 a b\nedge e2 b c\n")) ==
          GKClass::Zero);
    CHECK(classify_gk(make_En(5)) == GKClass::One);
    CHECK(classify_gk(graph_of("vertex v\nedge e v v\nedge f v v\n")) ==
          GKClass::AtLeastTwo);
}

TEST_CASE("prime quotients") {
    Graph ex = graph_of("vertex w\nvertex v1\nvertex v2\nedge g1 w v1\nedge g2 w v2\n"
                        "edge c1 v1 v1\nedge c2 v2 v2\n");
    PrimeQuotient pq = prime_quotient(ex, ex.vertex("v1"));
    CHECK(pq.quotient.vertex_count() == 2);
    CHECK(pq.quotient.find_vertex("w"));
    CHECK(pq.quotient.find_vertex("v1"));
    CHECK(pq.laurent);
    CHECK(pq.size == 2);

    CHECK_THROWS_AS(prime_quotient(ex, ex.vertex("w")), Error);

    Graph chain = graph_of("vertex u\nvertex v\nedge e u v\n");
    PrimeQuotient ps = prime_quotient(chain, chain.vertex("v"));
    CHECK(ps.quotient.vertex_count() == 2);
    CHECK_FALSE(ps.laurent);
    CHECK(ps.size == 2);
}

TEST_CASE("subdirect cover") {
    Graph single = graph_of("vertex v\n");
    auto c1 = subdirect_cover(single);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].second == VertexSet{0});

    Graph chain = graph_of("vertex u\nvertex v\nedge e u v\n");
    auto c2 = subdirect_cover(chain);
    REQUIRE(c2.size() == 1);
    CHECK(chain.vertex_name(c2[0].first) == "v");
    CHECK(c2[0].second.size() == 2);

    Graph ex = graph_of("vertex w\nvertex v1\nvertex v2\nedge g1 w v1\nedge g2 w v2\n"
                        "edge c1 v1 v1\nedge c2 v2 v2\n");
    auto c3 = subdirect_cover(ex);
    REQUIRE(c3.size() == 2);
    VertexSet all;
    for (const auto& [v, m] : c3) {
        CHECK(m.size() == 2);
        CHECK(m.count(ex.vertex("w")));
        all.insert(m.begin(), m.end());
    }
    CHECK(static_cast<int>(all.size()) == ex.vertex_count());
}

TEST_CASE("growth series: degenerate and linear shapes") {
    Graph single = graph_of("vertex v\n");
    GrowthSeries s = growth_series(single, 8);
    CHECK(s.dims == std::vector<long long>(9, 1));

    Graph loop = graph_of("vertex v\nedge c v v\n");
    GrowthSeries t = growth_series(loop, 8);
    std::vector<long long> expect;
    for (int k = 0; k <= 8; ++k) expect.push_back(2 * k + 1);
    CHECK(t.dims == expect);
}

TEST_CASE("growth series: rose grows at least exponentially") {
    Graph rose = graph_of("vertex v\nedge e v v\nedge f v v\n");
    GrowthSeries s = growth_series(rose, 8);
    for (int k = 0; k <= 8; ++k) CHECK(s.dims[k] >= (1LL << k));
}

TEST_CASE("growth series matches the combinatorial basis count") {
    for (const char* text :
         {"vertex v\n", "vertex v\nedge c v v\n", "vertex u\nvertex v\nedge e u v\n",
          "vertex v\nedge e v v\nedge f v v\n",
          "vertex v\nvertex w\nedge c v v\nedge f v w\n",
          "vertex u\nvertex v\nedge g u v\nedge c v v\n",
          "vertex w\nvertex v1\nvertex v2\nedge g1 w v1\nedge g2 w v2\n"
          "edge c1 v1 v1\nedge c2 v2 v2\n"}) {
        Graph g = graph_of(text);
        GrowthSeries s = growth_series(g, 6);
        for (int k = 0; k <= 6; ++k) CHECK(s.dims[k] == count_normal_monomials(g, k));
    }
}

TEST_CASE("growth series: dims are nondecreasing and dims[0] counts vertices") {
    Rng rng(19);
    for (int t = 0; t < 10; ++t) {
        Graph g = lpa::testing::random_graph(rng, 3, 4);
        GrowthSeries s = growth_series(g, 5);
        CHECK(s.dims[0] == g.vertex_count());
        for (size_t k = 1; k < s.dims.size(); ++k) CHECK(s.dims[k] >= s.dims[k - 1]);
    }
}

TEST_CASE("growth series cap") {
    Graph g = graph_of("vertex v\n");
    CHECK_THROWS_AS(growth_series(g, 13), Error);
    CHECK_NOTHROW(growth_series(g, 13, 16));
}

TEST_CASE("estimate_gk") {
    CHECK(estimate_gk(GrowthSeries{{1, 1, 1, 1, 1, 1}}) == GKClass::Zero);
    CHECK(estimate_gk(GrowthSeries{{1, 3, 5, 7, 9, 11}}) == GKClass::One);
    CHECK(estimate_gk(GrowthSeries{{1, 3, 7, 15, 31, 63}}) == GKClass::AtLeastTwo);
    CHECK_THROWS_AS(estimate_gk(GrowthSeries{{1, 2, 3}}), Error);
}

TEST_CASE("PI iff GK at most one, and d equals the max block size (corpus)") {
    for (const CorpusEntry& e : builtin_corpus()) {
        const Graph& g = *e.graph;
        PIReport r = check_pi(g);
        CHECK(r.is_pi == e.expected_pi);
        CHECK(r.is_pi == no_cycle_has_exit(g));
        CHECK(r.is_pi == (classify_gk(g) != GKClass::AtLeastTwo));
        CHECK(classify_gk(g) == e.expected_gk);
        if (r.is_pi) {
            CHECK(*r.bound_d == *e.expected_d);
            CHECK(decompose(g).max_block_size() == *r.bound_d);
        }
    }
}

TEST_CASE("growth agrees with block structure") {
    // acyclic: dims stabilize at the sum of squared sink block sizes
    for (const char* text :
         {"vertex v\n", "vertex u\nvertex v\nedge e u v\n",
          "vertex a\nvertex b\nvertex c\nedge e1 a b\nedge e2 b c\n"}) {
        Graph g = graph_of(text);
        Decomposition d = decompose(g);
        long long expect = 0;
        for (const auto& [v, n] : d.sink_blocks) expect += 1LL * n * n;
        GrowthSeries s = growth_series(g, 8);
        CHECK(s.dims.back() == expect);
        CHECK(s.dims[s.dims.size() - 2] == expect);
    }
    // cyclic PI: the settled growth rate per step is 2 * sum of m_C^2
    struct Case {
        const char* text;
        int n;
    };
    for (const Case& c : {Case{"vertex v\nedge c v v\n", 8},
                          Case{"vertex u\nvertex v\nedge c1 u u\nedge c2 v v\n", 8},
                          Case{"vertex u\nvertex v\nedge g u v\nedge c v v\n", 8},
                          Case{"vertex w\nvertex v1\nvertex v2\nedge g1 w v1\n"
                               "edge g2 w v2\nedge c1 v1 v1\nedge c2 v2 v2\n",
                               10}}) {
        Graph g = graph_of(c.text);
        Decomposition d = decompose(g);
        long long rate = 0;
        for (const auto& [cy, m] : d.cycle_blocks) rate += 2LL * m * m;
        GrowthSeries s = growth_series(g, c.n);
        CHECK(s.dims[c.n] - s.dims[c.n - 1] == rate);
        CHECK(s.dims[c.n - 1] - s.dims[c.n - 2] == rate);
    }
}

TEST_CASE("growth estimate matches the graph criterion (corpus subset, n=8)") {
    for (const char* name : {"single_vertex", "single_loop", "chain2", "chain3",
                             "rose2", "example_w", "loop_exit", "two_loops_disjoint",
                             "E2", "E3", "E4"}) {
        const CorpusEntry& e = corpus_entry(name);
        CAPTURE(name);
        CHECK(estimate_gk(growth_series(*e.graph, 8)) == classify_gk(*e.graph));
    }
}
