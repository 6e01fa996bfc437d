#include "lpa/analysis.hpp"

#include <algorithm>

#include "lpa/rank.hpp"

namespace lpa {

std::string gk_class_name(GKClass c) {
    switch (c) {
        case GKClass::Zero: return "Zero";
        case GKClass::One: return "One";
        case GKClass::AtLeastTwo: return "AtLeastTwo";
    }
    return "?";
}

int Decomposition::max_block_size() const {
    int d = 0;
    for (const auto& [v, n] : sink_blocks) d = std::max(d, n);
    for (const auto& [c, m] : cycle_blocks) d = std::max(d, m);
    return d;
}

NotPIError::NotPIError(const Graph& g, const PIWitness& w)
    : Error("not a PI algebra: cycle " + w.cycle.to_string(g) + " has exit '" +
            g.edge(w.exit_edge).name + "'"),
      witness_(w) {}

PIReport check_pi(const Graph& g) {
    PIReport report;
    for (const Cycle& c : simple_cycles(g)) {
        for (EdgeId e : c.path().edges) {
            for (EdgeId f : g.out_edges(g.source(e))) {
                if (!c.contains_edge(f)) {
                    report.is_pi = false;
                    report.offending_cycle = PIWitness{c, f};
                    return report;
                }
            }
        }
    }
    report.is_pi = true;
    int d = 0;
    for (VertexId v : sinks(g))
        d = std::max(d, static_cast<int>(simple_paths_into(g, v).size()));
    for (const Cycle& c : simple_cycles(g))
        d = std::max(d, static_cast<int>(paths_into_cycle(g, c).size()));
    report.bound_d = d;
    return report;
}

Decomposition decompose(const Graph& g) {
    PIReport report = check_pi(g);
    if (!report.is_pi) throw NotPIError(g, *report.offending_cycle);
    Decomposition dec;
    for (VertexId v : sinks(g))
        dec.sink_blocks.emplace_back(v, static_cast<int>(simple_paths_into(g, v).size()));
    for (const Cycle& c : simple_cycles(g))
        dec.cycle_blocks.emplace_back(c, static_cast<int>(paths_into_cycle(g, c).size()));
    return dec;
}

GKClass classify_gk(const Graph& g) {
    auto cycles = simple_cycles(g);
    if (cycles.empty()) return GKClass::Zero;
    for (const Cycle& c : cycles)
        if (cycle_has_exit(g, c)) return GKClass::AtLeastTwo;
    return GKClass::One;
}

PrimeQuotient prime_quotient(const Graph& g, VertexId v) {
    if (v < 0 || v >= g.vertex_count()) throw Error("unknown vertex");
    PIReport report = check_pi(g);
    if (!report.is_pi) throw NotPIError(g, *report.offending_cycle);

    std::optional<Cycle> through;
    for (const Cycle& c : simple_cycles(g))
        if (c.contains_vertex(g, v)) {
            through = c;
            break;
        }
    if (!g.is_sink(v) && !through)
        throw Error("vertex '" + g.vertex_name(v) +
                    "' is neither a sink nor on a cycle; no prime quotient attached");

    auto [h, m] = restriction_sets(g, v);
    PrimeQuotient pq{quotient_graph(g, h), false, 0, ""};
    const Graph& q = pq.quotient;
    VertexId qv = q.vertex(g.vertex_name(v));
    if (g.is_sink(v)) {
        pq.laurent = false;
        pq.size = static_cast<int>(simple_paths_into(q, qv).size());
        pq.anchor = q.vertex_name(qv);
    } else {
        auto qcycles = simple_cycles(q);
        std::vector<Cycle> through_v;
        for (const Cycle& c : qcycles)
            if (c.contains_vertex(q, qv)) through_v.push_back(c);
        if (through_v.size() != 1)
            throw std::logic_error("prime quotient: vertex should lie on exactly one cycle");
        pq.laurent = true;
        pq.size = static_cast<int>(paths_into_cycle(q, through_v[0]).size());
        pq.anchor = through_v[0].to_string(q);
        // the block size must agree with the cycle's count in the full graph
        int m_full = static_cast<int>(paths_into_cycle(g, *through).size());
        if (m_full != pq.size)
            throw std::logic_error("prime quotient: block size mismatch with full graph");
    }
    return pq;
}

std::vector<std::pair<VertexId, VertexSet>> subdirect_cover(const Graph& g) {
    PIReport report = check_pi(g);
    if (!report.is_pi) throw NotPIError(g, *report.offending_cycle);
    std::vector<std::pair<VertexId, VertexSet>> cover;
    VertexSet covered;
    auto add = [&](VertexId v) {
        auto [h, m] = restriction_sets(g, v);
        covered.insert(m.begin(), m.end());
        cover.emplace_back(v, std::move(m));
    };
    for (VertexId v : sinks(g)) add(v);
    for (const Cycle& c : simple_cycles(g)) add(c.base(g));
    if (static_cast<int>(covered.size()) != g.vertex_count())
        throw std::logic_error("subdirect cover misses a vertex");
    return cover;
}

GrowthSeries growth_series(const Graph& g, int n, int cap) {
    if (n < 0) throw Error("growth series length must be nonnegative");
    if (n > cap)
        throw Error("growth series length " + std::to_string(n) +
                    " exceeds the cap of " + std::to_string(cap));

    std::vector<Element> generators;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        generators.push_back(Element::vertex(g, v));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        generators.push_back(Element::edge(g, e));
        generators.push_back(Element::ghost_edge(g, e));
    }

    GrowthSeries s;
    RowSpan span(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        span.insert(Element::vertex(g, v));
    s.dims.push_back(span.rank());

    // Level k multiplies only the rows added at level k-1: products of
    // older rows with a generator are already in the span.
    size_t level_begin = 0;
    for (int k = 1; k <= n; ++k) {
        size_t level_end = span.inserted_rows().size();
        for (size_t r = level_begin; r < level_end; ++r) {
            for (const Element& gen : generators) {
                // copy: inserted_rows() may reallocate as rows are added
                Element row = span.inserted_rows()[r];
                span.insert(row * gen);
            }
        }
        level_begin = level_end;
        s.dims.push_back(span.rank());
    }
    return s;
}

GKClass estimate_gk(const GrowthSeries& s) {
    size_t n = s.dims.size();
    if (n < 6) throw Error("growth series too short to classify (need >= 6 entries)");
    auto diff = [&](size_t k) { return s.dims[k] - s.dims[k - 1]; };
    if (diff(n - 1) == 0) return GKClass::Zero;
    long long d1 = diff(n - 1), d2 = diff(n - 2), d3 = diff(n - 3);
    if (d1 > 0 && d1 == d2 && d2 == d3) return GKClass::One;
    return GKClass::AtLeastTwo;
}

}  // namespace lpa
