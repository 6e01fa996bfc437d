#include "lpa/matrix_units.hpp"

namespace lpa {

Element MatrixUnits::block_identity() const {
    Element s = units.empty() ? Element() : Element::zero(*units[0][0].graph());
    for (int i = 0; i < size; ++i) s = s + units[i][i];
    return s;
}

MatrixUnits sink_matrix_units(const Graph& g, VertexId v) {
    if (!g.is_sink(v))
        throw Error("vertex '" + g.vertex_name(v) + "' is not a sink");
    std::vector<Path> alphas = simple_paths_into(g, v);
    int n = static_cast<int>(alphas.size());
    MatrixUnits mu;
    mu.size = n;
    mu.laurent = false;
    mu.anchor = g.vertex_name(v);
    mu.units.assign(n, std::vector<Element>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mu.units[i][j] = Element::monomial(g, Monomial{alphas[i], alphas[j]});
    return mu;
}

MatrixUnits cycle_matrix_units(const Graph& g, const Cycle& c) {
    std::vector<Path> betas = paths_into_cycle(g, c);  // throws if c has an exit
    int m = static_cast<int>(betas.size());
    VertexId base = c.base(g);
    const Path& cyc = c.path();

    // forward distance from the base to each path's endpoint, and the
    // corresponding cycle prefix t_i
    std::vector<int> dist(m);
    std::vector<Path> prefix(m);
    for (int i = 0; i < m; ++i) {
        VertexId w = path_range(g, betas[i]);
        int d = 0;
        while (d < c.length() && g.source(cyc.edges[d]) != w) ++d;
        if (d == c.length() && w != base)
            throw Error("path endpoint is not on the cycle");
        if (w == base) d = 0;
        dist[i] = d;
        prefix[i].base = base;
        prefix[i].edges.assign(cyc.edges.begin(), cyc.edges.begin() + d);
    }

    MatrixUnits mu;
    mu.size = m;
    mu.laurent = true;
    mu.anchor = c.to_string(g);
    mu.units.assign(m, std::vector<Element>(m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            // t_i^ t_j collapses to the cycle segment between the two
            // endpoints, real when j is further from the base, ghost when i is.
            Monomial u;
            if (dist[i] <= dist[j]) {
                Path seg;
                seg.base = path_range(g, prefix[i]);
                seg.edges.assign(cyc.edges.begin() + dist[i], cyc.edges.begin() + dist[j]);
                u.alpha = path_concat(g, betas[i], seg);
                u.beta = betas[j];
            } else {
                Path seg;
                seg.base = path_range(g, prefix[j]);
                seg.edges.assign(cyc.edges.begin() + dist[j], cyc.edges.begin() + dist[i]);
                u.alpha = betas[i];
                u.beta = path_concat(g, betas[j], seg);
            }
            mu.units[i][j] = Element::monomial(g, u);
        }
    }

    Element x(g), xinv(g);
    for (int i = 0; i < m; ++i) {
        Element r = Element::monomial(g, Monomial{betas[i], prefix[i]});
        Element r_star = Element::monomial(g, Monomial{prefix[i], betas[i]});
        x = x + r * Element::path(g, cyc) * r_star;
        xinv = xinv + r * Element::ghost_path(g, cyc) * r_star;
    }
    mu.shift = x;
    mu.shift_inverse = xinv;
    return mu;
}

}  // namespace lpa
