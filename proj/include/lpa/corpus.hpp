#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lpa/analysis.hpp"
#include "lpa/graph.hpp"

namespace lpa {

/// A named test graph with its expected verdicts. Negative controls are
/// the graphs whose algebra is deliberately not PI; the suite uses them to
/// prove the oracles can fail.
struct CorpusEntry {
    std::string name;
    std::shared_ptr<const Graph> graph;
    bool expected_pi = false;
    std::optional<int> expected_d;
    GKClass expected_gk = GKClass::Zero;
    bool negative_control = false;
};

/// Chain of n vertices v1 -> ... -> vn with a loop at vn; the matrix block
/// is M_n(Q[x,x^-1]), so the PI bound grows with n while the GK class
/// stays One. E_1 is the single loop.
Graph make_En(int n);

/// The twelve built-in graphs: single vertex, single loop, 2- and 3-chains,
/// rose with two petals, the two-branch loop graph, a loop with an exit,
/// two disjoint loops, and E_2..E_5.
const std::vector<CorpusEntry>& builtin_corpus();

/// Entry lookup by name; throws on unknown names.
const CorpusEntry& corpus_entry(const std::string& name);

}  // namespace lpa
