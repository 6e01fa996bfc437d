#pragma once

#include <json.hpp>

#include "lpa/analysis.hpp"
#include "lpa/graph.hpp"
#include "lpa/verify.hpp"

namespace lpa {

/// {"vertices": [...], "edges": [[name, src, dst], ...]} -- the JSON
/// equivalent of the line-oriented graph grammar.
Graph graph_from_json(const std::string& text);

// Report serializations. nlohmann::json orders object keys, so dumping is
// byte-stable and re-rendering parsed output reproduces it exactly.
nlohmann::json to_json(const Graph& g, const PIReport& r);
nlohmann::json to_json(const Graph& g, const Decomposition& d);
nlohmann::json to_json(const GrowthSeries& s);
nlohmann::json to_json(const VerificationReport& r);

}  // namespace lpa
