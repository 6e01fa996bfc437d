#include "lpa/json_io.hpp"

namespace lpa {

using nlohmann::json;

Graph graph_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError("graph JSON needs 'vertices' and 'edges' fields");
    Graph g;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw ParseError("vertex entries must be strings");
        g.add_vertex(v.get<std::string>());
    }
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3)
            throw ParseError("edge entries must be [name, src, dst] triples");
        g.add_edge(e[0].get<std::string>(), e[1].get<std::string>(),
                   e[2].get<std::string>());
    }
    if (g.vertex_count() == 0) throw ParseError("graph has no vertices");
    return g;
}

json to_json(const Graph& g, const PIReport& r) {
    json j;
    j["is_pi"] = r.is_pi;
    j["d"] = r.bound_d ? json(*r.bound_d) : json(nullptr);
    if (r.offending_cycle) {
        json w;
        json cyc = json::array();
        for (EdgeId e : r.offending_cycle->cycle.path().edges)
            cyc.push_back(g.edge(e).name);
        w["cycle"] = cyc;
        w["exit"] = g.edge(r.offending_cycle->exit_edge).name;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

json to_json(const Graph& g, const Decomposition& d) {
    json blocks = json::array();
    for (const auto& [v, n] : d.sink_blocks) {
        json b;
        b["kind"] = "K";
        b["size"] = n;
        b["anchor"] = g.vertex_name(v);
        blocks.push_back(b);
    }
    for (const auto& [c, m] : d.cycle_blocks) {
        json b;
        b["kind"] = "Laurent";
        b["size"] = m;
        b["anchor"] = c.to_string(g);
        blocks.push_back(b);
    }
    json j;
    j["blocks"] = blocks;
    return j;
}

json to_json(const GrowthSeries& s) {
    json j;
    j["dims"] = s.dims;
    return j;
}

json to_json(const VerificationReport& r) {
    json j;
    j["check"] = r.check;
    j["graph"] = r.graph_id;
    j["trials"] = r.trials;
    j["failures"] = r.failures;
    j["seed"] = r.seed;
    j["millis"] = r.millis;
    return j;
}

}  // namespace lpa
