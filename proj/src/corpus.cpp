#include "lpa/corpus.hpp"

namespace lpa {

Graph make_En(int n) {
    if (n < 1) throw Error("E_n needs n >= 1");
    Graph g;
    for (int i = 1; i <= n; ++i) g.add_vertex("v" + std::to_string(i));
    for (int i = 1; i < n; ++i)
        g.add_edge("e" + std::to_string(i), "v" + std::to_string(i),
                   "v" + std::to_string(i + 1));
    g.add_edge("c", "v" + std::to_string(n), "v" + std::to_string(n));
    return g;
}

namespace {

std::shared_ptr<const Graph> from_text(const std::string& text) {
    return std::make_shared<const Graph>(Graph::parse(text));
}

std::vector<CorpusEntry> build() {
    std::vector<CorpusEntry> out;
    auto add = [&](std::string name, std::shared_ptr<const Graph> g, bool pi,
                   std::optional<int> d, GKClass gk, bool negative = false) {
        out.push_back(CorpusEntry{std::move(name), std::move(g), pi, d, gk, negative});
    };

    add("single_vertex", from_text("vertex v\n"), true, 1, GKClass::Zero);
    add("single_loop", from_text("vertex v\nedge c v v\n"), true, 1, GKClass::One);
    add("chain2", from_text("vertex u\nvertex v\nedge e u v\n"), true, 2, GKClass::Zero);
    add("chain3",
        from_text("vertex a\nvertex b\nvertex c\nedge e1 a b\nedge e2 b c\n"),
        true, 3, GKClass::Zero);
    add("rose2", from_text("vertex v\nedge e v v\nedge f v v\n"), false, std::nullopt,
        GKClass::AtLeastTwo, true);
    add("example_w",
        from_text("vertex w\nvertex v1\nvertex v2\n"
                  "edge g1 w v1\nedge g2 w v2\nedge c1 v1 v1\nedge c2 v2 v2\n"),
        true, 2, GKClass::One);
    add("loop_exit", from_text("vertex v\nvertex w\nedge c v v\nedge f v w\n"), false,
        std::nullopt, GKClass::AtLeastTwo, true);
    add("two_loops_disjoint",
        from_text("vertex u\nvertex v\nedge c1 u u\nedge c2 v v\n"), true, 1,
        GKClass::One);
    for (int n = 2; n <= 5; ++n)
        add("E" + std::to_string(n), std::make_shared<const Graph>(make_En(n)), true, n,
            GKClass::One);
    return out;
}

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
    static const std::vector<CorpusEntry> corpus = build();
    return corpus;
}

const CorpusEntry& corpus_entry(const std::string& name) {
    for (const CorpusEntry& e : builtin_corpus())
        if (e.name == name) return e;
    throw Error("unknown corpus graph '" + name + "'");
}

}  // namespace lpa
