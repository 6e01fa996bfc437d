#include "lpa/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lpa {

namespace {

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

}  // namespace

void Graph::add_vertex(const std::string& name) {
    if (!valid_name(name)) throw ParseError("invalid vertex name '" + name + "'");
    if (vertex_index_.count(name))
        throw ParseError("duplicate vertex name '" + name + "'");
    vertex_index_[name] = static_cast<VertexId>(vertex_names_.size());
    vertex_names_.push_back(name);
    out_edges_.emplace_back();
    in_edges_.emplace_back();
    rebuild_name_ranks();
}

void Graph::add_edge(const std::string& name, const std::string& src,
                     const std::string& dst) {
    if (!valid_name(name)) throw ParseError("invalid edge name '" + name + "'");
    if (edge_index_.count(name))
        throw ParseError("duplicate edge name '" + name + "'");
    auto s = find_vertex(src);
    auto d = find_vertex(dst);
    if (!s || !d)
        throw ParseError("dangling endpoint: edge '" + name + "' references unknown vertex '" +
                         (!s ? src : dst) + "'");
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edge_index_[name] = id;
    edges_.push_back(Edge{name, *s, *d});
    out_edges_[*s].push_back(id);
    in_edges_[*d].push_back(id);
    rebuild_name_ranks();
}

void Graph::rebuild_name_ranks() {
    auto ranks = [](const auto& names, auto getter) {
        std::vector<int> idx(names.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [&](int a, int b) { return getter(a) < getter(b); });
        std::vector<int> rank(names.size());
        for (size_t i = 0; i < idx.size(); ++i) rank[idx[i]] = static_cast<int>(i);
        return rank;
    };
    vertex_name_rank_ =
        ranks(vertex_names_, [&](int i) { return vertex_names_[i]; });
    edge_name_rank_ = ranks(edges_, [&](int i) { return edges_[i].name; });
}

Graph Graph::parse(const std::string& text) {
    struct EdgeDecl {
        std::string name, src, dst;
        int line;
    };
    Graph g;
    std::vector<EdgeDecl> pending;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        try {
            if (kw == "vertex") {
                std::string name, extra;
                if (!(ls >> name)) throw ParseError("vertex declaration needs a name");
                if (ls >> extra) throw ParseError("unexpected token '" + extra + "'");
                g.add_vertex(name);
            } else if (kw == "edge") {
                EdgeDecl d;
                d.line = lineno;
                std::string extra;
                if (!(ls >> d.name >> d.src >> d.dst))
                    throw ParseError("edge declaration needs <name> <src> <dst>");
                if (ls >> extra) throw ParseError("unexpected token '" + extra + "'");
                pending.push_back(std::move(d));
            } else {
                throw ParseError("unknown directive '" + kw + "'");
            }
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    // Edges are resolved after all vertices so declarations may appear in
    // any order; edge declaration order itself is preserved.
    for (const auto& d : pending) {
        try {
            g.add_edge(d.name, d.src, d.dst);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), d.line);
        }
    }
    if (g.vertex_count() == 0) throw ParseError("graph has no vertices");
    return g;
}

std::optional<VertexId> Graph::find_vertex(const std::string& name) const {
    auto it = vertex_index_.find(name);
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<EdgeId> Graph::find_edge(const std::string& name) const {
    auto it = edge_index_.find(name);
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

VertexId Graph::vertex(const std::string& name) const {
    auto v = find_vertex(name);
    if (!v) throw Error("unknown vertex '" + name + "'");
    return *v;
}

EdgeId Graph::edge_id(const std::string& name) const {
    auto e = find_edge(name);
    if (!e) throw Error("unknown edge '" + name + "'");
    return *e;
}

EdgeId Graph::distinguished_edge(VertexId v) const {
    if (is_sink(v)) throw Error("sink '" + vertex_name(v) + "' has no distinguished edge");
    return out_edges_[v].back();
}

// --- paths ---

VertexId path_source(const Graph& g, const Path& p) {
    return p.empty() ? p.base : g.source(p.edges.front());
}

VertexId path_range(const Graph& g, const Path& p) {
    return p.empty() ? p.base : g.range(p.edges.back());
}

bool path_is_valid(const Graph& g, const Path& p) {
    if (p.empty())
        return p.base >= 0 && p.base < g.vertex_count();
    for (EdgeId e : p.edges)
        if (e < 0 || e >= g.edge_count()) return false;
    if (p.base != g.source(p.edges.front())) return false;
    for (size_t i = 0; i + 1 < p.edges.size(); ++i)
        if (g.range(p.edges[i]) != g.source(p.edges[i + 1])) return false;
    return true;
}

Path path_from_edges(const Graph& g, const std::vector<EdgeId>& edges) {
    if (edges.empty()) throw Error("path_from_edges: empty edge list has no base");
    Path p{g.source(edges.front()), edges};
    if (!path_is_valid(g, p)) throw Error("malformed path: ranges and sources do not match");
    return p;
}

Path path_concat(const Graph& g, const Path& p, const Path& q) {
    if (path_range(g, p) != path_source(g, q))
        throw Error("path_concat: range/source mismatch");
    if (p.empty()) return q;
    Path r = p;
    r.edges.insert(r.edges.end(), q.edges.begin(), q.edges.end());
    return r;
}

std::string path_to_string(const Graph& g, const Path& p) {
    if (p.empty()) return g.vertex_name(p.base);
    std::string s;
    for (size_t i = 0; i < p.edges.size(); ++i) {
        if (i) s += ' ';
        s += g.edge(p.edges[i]).name;
    }
    return s;
}

// --- cycles ---

Cycle Cycle::from_path(const Graph& g, const Path& p) {
    if (p.empty()) throw Error("a cycle has length >= 1");
    if (!path_is_valid(g, p)) throw Error("malformed path");
    if (path_range(g, p) != path_source(g, p)) throw Error("path is not closed");
    std::set<VertexId> seen;
    for (EdgeId e : p.edges)
        if (!seen.insert(g.source(e)).second)
            throw Error("closed path passes through a vertex twice");
    // canonical rotation: start at the least vertex in declaration order
    size_t best = 0;
    for (size_t i = 1; i < p.edges.size(); ++i)
        if (g.source(p.edges[i]) < g.source(p.edges[best])) best = i;
    Cycle c;
    c.path_.base = g.source(p.edges[best]);
    c.path_.edges.reserve(p.edges.size());
    for (size_t i = 0; i < p.edges.size(); ++i)
        c.path_.edges.push_back(p.edges[(best + i) % p.edges.size()]);
    return c;
}

std::vector<VertexId> Cycle::vertices(const Graph& g) const {
    std::vector<VertexId> vs;
    vs.reserve(path_.edges.size());
    for (EdgeId e : path_.edges) vs.push_back(g.source(e));
    return vs;
}

bool Cycle::contains_vertex(const Graph& g, VertexId v) const {
    for (EdgeId e : path_.edges)
        if (g.source(e) == v) return true;
    return false;
}

bool Cycle::contains_edge(EdgeId e) const {
    return std::find(path_.edges.begin(), path_.edges.end(), e) != path_.edges.end();
}

Path Cycle::rotation_based_at(const Graph& g, VertexId v) const {
    for (size_t i = 0; i < path_.edges.size(); ++i) {
        if (g.source(path_.edges[i]) != v) continue;
        Path p;
        p.base = v;
        for (size_t k = 0; k < path_.edges.size(); ++k)
            p.edges.push_back(path_.edges[(i + k) % path_.edges.size()]);
        return p;
    }
    throw Error("vertex '" + g.vertex_name(v) + "' is not on the cycle");
}

std::string Cycle::to_string(const Graph& g) const {
    return "(" + path_to_string(g, path_) + ")";
}

// --- predicates and constructions ---

std::vector<VertexId> sinks(const Graph& g) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.is_sink(v)) out.push_back(v);
    return out;
}

std::vector<VertexId> regular_vertices(const Graph& g) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.is_regular(v)) out.push_back(v);
    return out;
}

namespace {

// Enumerates every simple cycle once: a cycle is found from its least
// vertex s, extending only through vertices > s. Desk-scale graphs; no
// need for Johnson-style blocking.
void cycle_dfs(const Graph& g, VertexId s, VertexId u, std::vector<EdgeId>& stack,
               std::vector<bool>& on_path, std::vector<Cycle>& out) {
    for (EdgeId e : g.out_edges(u)) {
        VertexId t = g.range(e);
        if (t == s) {
            stack.push_back(e);
            out.push_back(Cycle::from_path(g, path_from_edges(g, stack)));
            stack.pop_back();
        } else if (t > s && !on_path[t]) {
            stack.push_back(e);
            on_path[t] = true;
            cycle_dfs(g, s, t, stack, on_path, out);
            on_path[t] = false;
            stack.pop_back();
        }
    }
}

}  // namespace

std::vector<Cycle> simple_cycles(const Graph& g) {
    std::vector<Cycle> out;
    std::vector<bool> on_path(g.vertex_count(), false);
    std::vector<EdgeId> stack;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        on_path[s] = true;
        cycle_dfs(g, s, s, stack, on_path, out);
        on_path[s] = false;
    }
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.path().base != b.path().base) return a.path().base < b.path().base;
        return a.path().edges < b.path().edges;
    });
    return out;
}

bool is_acyclic(const Graph& g) { return simple_cycles(g).empty(); }

VertexSet vertices_on_cycles(const Graph& g) {
    VertexSet out;
    for (const Cycle& c : simple_cycles(g))
        for (VertexId v : c.vertices(g)) out.insert(v);
    return out;
}

bool cycle_has_exit(const Graph& g, const Cycle& c) {
    if (!path_is_valid(g, c.path()) ||
        path_range(g, c.path()) != path_source(g, c.path()))
        throw Error("cycle does not belong to this graph");
    for (EdgeId e : c.path().edges) {
        for (EdgeId f : g.out_edges(g.source(e)))
            if (!c.contains_edge(f)) return true;
    }
    return false;
}

bool no_cycle_has_exit(const Graph& g) {
    for (const Cycle& c : simple_cycles(g))
        if (cycle_has_exit(g, c)) return false;
    return true;
}

bool reaches(const Graph& g, VertexId u, VertexId v) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw Error("unknown vertex");
    if (u == v) return true;
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<VertexId> queue{u};
    seen[u] = true;
    while (!queue.empty()) {
        VertexId w = queue.back();
        queue.pop_back();
        for (EdgeId e : g.out_edges(w)) {
            VertexId t = g.range(e);
            if (t == v) return true;
            if (!seen[t]) {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    return false;
}

namespace {

// Backward DFS from v; `blocked` masks edges that may not be used.
void paths_into_dfs(const Graph& g, VertexId front, std::vector<EdgeId>& rev_stack,
                    std::vector<bool>& on_path, const std::vector<bool>& blocked,
                    std::vector<Path>& out) {
    for (EdgeId e : g.in_edges(front)) {
        if (blocked[e]) continue;
        VertexId s = g.source(e);
        if (on_path[s]) continue;
        rev_stack.push_back(e);
        Path p;
        p.edges.assign(rev_stack.rbegin(), rev_stack.rend());
        p.base = g.source(p.edges.front());
        out.push_back(std::move(p));
        on_path[s] = true;
        paths_into_dfs(g, s, rev_stack, on_path, blocked, out);
        on_path[s] = false;
        rev_stack.pop_back();
    }
}

std::vector<Path> simple_paths_into_masked(const Graph& g, VertexId v,
                                           const std::vector<bool>& blocked) {
    std::vector<Path> out{Path::at_vertex(v)};
    std::vector<bool> on_path(g.vertex_count(), false);
    on_path[v] = true;
    std::vector<EdgeId> rev_stack;
    paths_into_dfs(g, v, rev_stack, on_path, blocked, out);
    std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.edges < b.edges;
    });
    return out;
}

}  // namespace

std::vector<Path> simple_paths_into(const Graph& g, VertexId v) {
    if (v < 0 || v >= g.vertex_count()) throw Error("unknown vertex");
    return simple_paths_into_masked(g, v, std::vector<bool>(g.edge_count(), false));
}

std::vector<Path> paths_into_cycle(const Graph& g, const Cycle& c) {
    if (cycle_has_exit(g, c))
        throw Error("cycle " + c.to_string(g) +
                    " has an exit; its path count is not a block size");
    std::vector<bool> blocked(g.edge_count(), false);
    for (EdgeId e : c.path().edges) blocked[e] = true;
    std::vector<Path> out;
    // Cycle vertices emit only their cycle edge, so with those edges masked
    // no path can pass *through* the cycle; every hit is an endpoint.
    for (VertexId w : c.vertices(g)) {
        auto paths = simple_paths_into_masked(g, w, blocked);
        out.insert(out.end(), paths.begin(), paths.end());
    }
    return out;
}

bool is_hereditary(const Graph& g, const VertexSet& h) {
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (h.count(g.source(e)) && !h.count(g.range(e))) return false;
    return true;
}

bool is_saturated(const Graph& g, const VertexSet& h) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!g.is_regular(v) || h.count(v)) continue;
        bool all_in = true;
        for (EdgeId e : g.out_edges(v))
            if (!h.count(g.range(e))) {
                all_in = false;
                break;
            }
        if (all_in) return false;
    }
    return true;
}

VertexSet hereditary_saturated_closure(const Graph& g, const VertexSet& x) {
    VertexSet h = x;
    bool changed = true;
    while (changed) {
        changed = false;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (h.count(g.source(e)) && h.insert(g.range(e)).second) changed = true;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (!g.is_regular(v) || h.count(v)) continue;
            bool all_in = true;
            for (EdgeId e : g.out_edges(v))
                if (!h.count(g.range(e))) {
                    all_in = false;
                    break;
                }
            if (all_in) {
                h.insert(v);
                changed = true;
            }
        }
    }
    return h;
}

std::pair<VertexSet, VertexSet> restriction_sets(const Graph& g, VertexId v) {
    if (v < 0 || v >= g.vertex_count()) throw Error("unknown vertex");
    VertexSet h, m;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        (reaches(g, u, v) ? m : h).insert(u);
    return {h, m};
}

bool is_downward_directed(const Graph& g, const VertexSet& d) {
    for (VertexId u : d)
        for (VertexId v : d) {
            bool found = false;
            for (VertexId w : d)
                if (reaches(g, u, w) && reaches(g, v, w)) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
    return true;
}

Graph quotient_graph(const Graph& g, const VertexSet& h) {
    if (!is_hereditary(g, h))
        throw Error("vertex set is not hereditary");
    if (!is_saturated(g, h))
        throw Error("vertex set is not saturated");
    Graph q;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!h.count(v)) q.add_vertex(g.vertex_name(v));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (!h.count(ed.dst))
            q.add_edge(ed.name, g.vertex_name(ed.src), g.vertex_name(ed.dst));
    }
    if (q.vertex_count() == 0)
        throw Error("quotient by the full vertex set is the zero algebra's graph");
    return q;
}

VertexSet line_points(const Graph& g) {
    VertexSet cyclic = vertices_on_cycles(g);
    VertexSet out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        bool ok = true;
        for (VertexId w = 0; w < g.vertex_count() && ok; ++w) {
            if (!reaches(g, v, w)) continue;
            if (g.out_degree(w) > 1 || cyclic.count(w)) ok = false;
        }
        if (ok) out.insert(v);
    }
    return out;
}

}  // namespace lpa
