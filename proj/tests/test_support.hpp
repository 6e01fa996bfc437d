#pragma once

#include <string>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/graph.hpp"
#include "lpa/verify.hpp"

namespace lpa::testing {

inline Graph graph_of(const std::string& text) { return Graph::parse(text); }

// Small random multigraph for property tests: 1..5 vertices, 0..8 edges
// with uniform endpoints.
inline Graph random_graph(Rng& rng, int max_vertices = 5, int max_edges = 8) {
    Graph g;
    int nv = rng.in_range(1, max_vertices);
    for (int i = 0; i < nv; ++i) g.add_vertex("v" + std::to_string(i));
    int ne = rng.in_range(0, max_edges);
    for (int i = 0; i < ne; ++i) {
        int s = rng.in_range(0, nv - 1);
        int d = rng.in_range(0, nv - 1);
        g.add_edge("e" + std::to_string(i), "v" + std::to_string(s),
                   "v" + std::to_string(d));
    }
    return g;
}

// A raw (not necessarily normal) random monomial over g.
inline Monomial random_monomial(const Graph& g, Rng& rng, int max_len = 3) {
    VertexId start = static_cast<VertexId>(rng.below(g.vertex_count()));
    Path alpha = Path::at_vertex(start);
    int la = rng.in_range(0, max_len);
    VertexId at = start;
    for (int i = 0; i < la; ++i) {
        const auto& out = g.out_edges(at);
        if (out.empty()) break;
        EdgeId e = out[rng.below(out.size())];
        alpha.edges.push_back(e);
        at = g.range(e);
    }
    std::vector<EdgeId> rev;
    int lb = rng.in_range(0, max_len);
    VertexId back = at;
    for (int i = 0; i < lb; ++i) {
        const auto& in = g.in_edges(back);
        if (in.empty()) break;
        EdgeId e = in[rng.below(in.size())];
        rev.push_back(e);
        back = g.source(e);
    }
    Path beta;
    beta.edges.assign(rev.rbegin(), rev.rend());
    beta.base = beta.edges.empty() ? at : g.source(beta.edges.front());
    return Monomial{alpha, beta};
}

// Generator symbols for word-reduction tests.
struct GenSym {
    enum Kind { Vertex, Edge, Ghost } kind;
    int id;
};

inline std::vector<GenSym> all_generators(const Graph& g) {
    std::vector<GenSym> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back({GenSym::Vertex, v});
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        out.push_back({GenSym::Edge, e});
        out.push_back({GenSym::Ghost, e});
    }
    return out;
}

inline Element generator_element(const Graph& g, GenSym s) {
    switch (s.kind) {
        case GenSym::Vertex: return Element::vertex(g, s.id);
        case GenSym::Edge: return Element::edge(g, s.id);
        case GenSym::Ghost: return Element::ghost_edge(g, s.id);
    }
    throw Error("bad generator");
}

inline Element fold_left(const Graph& g, const std::vector<GenSym>& word) {
    Element x = generator_element(g, word.front());
    for (size_t i = 1; i < word.size(); ++i) x = x * generator_element(g, word[i]);
    return x;
}

inline Element fold_right(const Graph& g, const std::vector<GenSym>& word) {
    Element x = generator_element(g, word.back());
    for (size_t i = word.size() - 1; i-- > 0;) x = generator_element(g, word[i]) * x;
    return x;
}

}  // namespace lpa::testing
