#pragma once

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lpa/errors.hpp"

namespace lpa {

using VertexId = int;
using EdgeId = int;
using VertexSet = std::set<VertexId>;

struct Edge {
    std::string name;
    VertexId src;
    VertexId dst;
};

/// Finite directed multigraph with named vertices and edges. Immutable once
/// built; every operation below is a pure function of its inputs.
///
/// Declaration order matters: it fixes the canonical ordering of vertices
/// and edges used for cycle rotations, term ordering and the distinguished
/// edge of each regular vertex.
class Graph {
public:
    Graph() = default;

    void add_vertex(const std::string& name);
    void add_edge(const std::string& name, const std::string& src,
                  const std::string& dst);

    // Line-oriented grammar: `vertex <name>` | `edge <name> <src> <dst>`,
    // `#` comments, blank lines ignored. Names match [A-Za-z0-9_]+.
    // Vertices may be declared anywhere in the file.
    static Graph parse(const std::string& text);

    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    VertexId source(EdgeId e) const { return edges_[e].src; }
    VertexId range(EdgeId e) const { return edges_[e].dst; }

    const std::vector<EdgeId>& out_edges(VertexId v) const { return out_edges_[v]; }
    const std::vector<EdgeId>& in_edges(VertexId v) const { return in_edges_[v]; }
    int out_degree(VertexId v) const { return static_cast<int>(out_edges_[v].size()); }

    std::optional<VertexId> find_vertex(const std::string& name) const;
    std::optional<EdgeId> find_edge(const std::string& name) const;
    VertexId vertex(const std::string& name) const;  // throws on unknown name
    EdgeId edge_id(const std::string& name) const;   // throws on unknown name

    bool is_sink(VertexId v) const { return out_edges_[v].empty(); }
    bool is_regular(VertexId v) const { return !out_edges_[v].empty(); }

    // The CK-2 rewrite orientation: for a regular vertex the distinguished
    // edge is the last of its out-edges in declaration order.
    EdgeId distinguished_edge(VertexId v) const;

    // Rank of a name among all vertex (edge) names sorted lexicographically;
    // used by the canonical term order.
    int vertex_name_rank(VertexId v) const { return vertex_name_rank_[v]; }
    int edge_name_rank(EdgeId e) const { return edge_name_rank_[e]; }

private:
    std::vector<std::string> vertex_names_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, VertexId> vertex_index_;
    std::unordered_map<std::string, EdgeId> edge_index_;
    std::vector<std::vector<EdgeId>> out_edges_;
    std::vector<std::vector<EdgeId>> in_edges_;
    std::vector<int> vertex_name_rank_;
    std::vector<int> edge_name_rank_;

    void rebuild_name_ranks();
};

/// Finite edge sequence with matching ranges/sources. A length-0 path is a
/// vertex; `base` carries it. For longer paths `base` equals the source of
/// the first edge.
struct Path {
    VertexId base = -1;
    std::vector<EdgeId> edges;

    int length() const { return static_cast<int>(edges.size()); }
    bool empty() const { return edges.empty(); }

    static Path at_vertex(VertexId v) { return Path{v, {}}; }

    bool operator==(const Path& o) const { return base == o.base && edges == o.edges; }
    bool operator!=(const Path& o) const { return !(*this == o); }
};

VertexId path_source(const Graph& g, const Path& p);
VertexId path_range(const Graph& g, const Path& p);
bool path_is_valid(const Graph& g, const Path& p);
Path path_from_edges(const Graph& g, const std::vector<EdgeId>& edges);
// r(p) must equal s(q).
Path path_concat(const Graph& g, const Path& p, const Path& q);
std::string path_to_string(const Graph& g, const Path& p);

/// A closed vertex-simple path of length >= 1, stored in canonical rotation:
/// the rotation whose source is the least vertex (declaration order) on the
/// cycle. Two cycles are equal iff their canonical rotations are.
class Cycle {
public:
    // Validates closedness and vertex-simplicity, then rotates.
    static Cycle from_path(const Graph& g, const Path& p);

    const Path& path() const { return path_; }
    int length() const { return path_.length(); }
    VertexId base(const Graph& g) const { return path_source(g, path_); }

    std::vector<VertexId> vertices(const Graph& g) const;
    bool contains_vertex(const Graph& g, VertexId v) const;
    bool contains_edge(EdgeId e) const;
    Path rotation_based_at(const Graph& g, VertexId v) const;

    // Edge names in canonical rotation, e.g. "(g h)".
    std::string to_string(const Graph& g) const;

    bool operator==(const Cycle& o) const { return path_ == o.path_; }
    bool operator!=(const Cycle& o) const { return !(*this == o); }

private:
    Path path_;
};

// --- graph-theoretic predicates and constructions ---

std::vector<VertexId> sinks(const Graph& g);
std::vector<VertexId> regular_vertices(const Graph& g);

/// All vertex-simple directed cycles, one per rotation class, sorted by
/// (base vertex, edge sequence).
std::vector<Cycle> simple_cycles(const Graph& g);
bool is_acyclic(const Graph& g);
VertexSet vertices_on_cycles(const Graph& g);

/// True iff some vertex on c emits an edge not belonging to c.
/// Throws if c is not a cycle of g.
bool cycle_has_exit(const Graph& g, const Cycle& c);
bool no_cycle_has_exit(const Graph& g);

/// u >= v: there is a (possibly length-0) path from u to v.
bool reaches(const Graph& g, VertexId u, VertexId v);

/// All vertex-simple paths ending at v, including the length-0 path at v,
/// sorted by (length, edge sequence).
std::vector<Path> simple_paths_into(const Graph& g, VertexId v);

/// All vertex-simple paths ending at a vertex of c that use no edge of c,
/// including the length-0 path at each vertex of c. Requires c to have no
/// exit; the count is the cycle's matrix block size.
std::vector<Path> paths_into_cycle(const Graph& g, const Cycle& c);

bool is_hereditary(const Graph& g, const VertexSet& h);
bool is_saturated(const Graph& g, const VertexSet& h);

/// Least hereditary saturated set containing x (alternating closure rules
/// to fixpoint).
VertexSet hereditary_saturated_closure(const Graph& g, const VertexSet& x);

/// H(v) = vertices that do not reach v; M(v) = complement.
std::pair<VertexSet, VertexSet> restriction_sets(const Graph& g, VertexId v);

/// Every pair in d has a common descendant in d.
bool is_downward_directed(const Graph& g, const VertexSet& d);

/// Vertex set E0\H, edges with range outside H. Throws unless h is
/// hereditary and saturated.
Graph quotient_graph(const Graph& g, const VertexSet& h);

/// Vertices v such that no vertex reachable from v emits more than one edge
/// or lies on a cycle.
VertexSet line_points(const Graph& g);

}  // namespace lpa
