#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/matrix_units.hpp"

namespace lpa {

/// PI verdict. is_pi true comes with the bound d (max matrix block size);
/// is_pi false comes with a witness cycle and exit edge.
struct PIWitness {
    Cycle cycle;
    EdgeId exit_edge;
};

struct PIReport {
    bool is_pi = false;
    std::optional<int> bound_d;
    std::optional<PIWitness> offending_cycle;
};

enum class GKClass { Zero, One, AtLeastTwo };

std::string gk_class_name(GKClass c);

/// Matrix-ring decomposition of a PI algebra: one M_{n_v}(K) block per
/// sink, one M_{m_C}(K[x,x^-1]) block per cycle.
struct Decomposition {
    std::vector<std::pair<VertexId, int>> sink_blocks;
    std::vector<std::pair<Cycle, int>> cycle_blocks;

    int max_block_size() const;
};

/// dims[k] = dimension of the span of all products of at most k generators
/// (vertices, edges and ghost edges); dims[0] counts the vertices.
struct GrowthSeries {
    std::vector<long long> dims;
};

/// Raised when a decomposition is requested for a non-PI graph; carries
/// the witness.
class NotPIError : public Error {
public:
    NotPIError(const Graph& g, const PIWitness& w);
    const PIWitness& witness() const { return witness_; }

private:
    PIWitness witness_;
};

/// The algebra is PI iff no cycle has an exit (finite graph; the paper's
/// other two conditions are automatic here). d is the max over sinks of
/// n_v and over cycles of m_C.
PIReport check_pi(const Graph& g);

/// Throws NotPIError when some cycle has an exit.
Decomposition decompose(const Graph& g);

/// Zero iff acyclic; One iff cyclic with no exits; AtLeastTwo otherwise.
GKClass classify_gk(const Graph& g);

struct PrimeQuotient {
    Graph quotient;
    bool laurent = false;
    int size = 0;
    std::string anchor;
};

/// Quotient by the prime ideal attached to a sink or cycle vertex v,
/// together with the induced matrix block. Requires the PI condition and
/// v to be a sink or lie on a cycle.
PrimeQuotient prime_quotient(const Graph& g, VertexId v);

/// One representative per sink and per cycle with its M(v); checks the
/// representatives' M(v) cover every vertex (the finite shadow of the
/// paper's zero intersection of prime ideals).
std::vector<std::pair<VertexId, VertexSet>> subdirect_cover(const Graph& g);

inline constexpr int kGrowthCap = 12;

/// Exact growth series up to length n: ranks are computed by incremental
/// exact elimination over the monomial coordinates, level by level.
GrowthSeries growth_series(const Graph& g, int n, int cap = kGrowthCap);

/// Empirical classifier: Zero when the series has stabilized, One when the
/// tail first differences are constant and positive, AtLeastTwo otherwise.
/// Needs at least 6 entries.
GKClass estimate_gk(const GrowthSeries& s);

}  // namespace lpa
