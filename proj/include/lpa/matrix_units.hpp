#pragma once

#include <string>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/graph.hpp"

namespace lpa {

/// A family of elements E_ij realizing one matrix block of the structure
/// decomposition inside the algebra itself: E_ij * E_kl = delta_jk * E_il
/// and the trace sum is an idempotent. Laurent blocks additionally carry
/// the image of x and its inverse; shift * shift_inverse equals the block
/// identity.
struct MatrixUnits {
    int size = 0;
    bool laurent = false;
    std::string anchor;  // sink vertex name, or canonical cycle string
    std::vector<std::vector<Element>> units;
    Element shift;
    Element shift_inverse;

    const Element& unit(int i, int j) const { return units[i][j]; }
    Element block_identity() const;
};

/// Units for a sink block: with a_1..a_n the simple paths into v,
/// E_ij = a_i * a_j^. Throws if v is not a sink.
MatrixUnits sink_matrix_units(const Graph& g, VertexId v);

/// Units for a no-exit cycle block, anchored at the cycle's canonical base
/// w: with b_1..b_m the paths into the cycle and t_i the cycle prefix from
/// w to the endpoint of b_i, E_ij = b_i * t_i^ * t_j * b_j^. The middle
/// collapses to a single cycle segment (real or ghost), so no delta
/// relation ever picks up a spurious full-cycle factor. The shift is
/// sum_i b_i t_i^ c t_i b_i^ with c the full cycle at w. Throws if the
/// cycle has an exit.
MatrixUnits cycle_matrix_units(const Graph& g, const Cycle& c);

}  // namespace lpa
