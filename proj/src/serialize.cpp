#include "motifgraph/serialize.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace motifgraph {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

namespace {

nlohmann::ordered_json graph_document(const UnderlyingGraph& g,
                                      const std::vector<Edge>& decorations) {
    nlohmann::ordered_json doc;
    doc["motif"] = motif_name(g.motif);
    doc["k"] = g.level;
    doc["num_nodes"] = g.num_nodes();
    doc["externals"] = g.external;
    auto& nodes = doc["nodes"] = nlohmann::ordered_json::array();
    for (int v = 0; v < g.num_nodes(); ++v)
        nodes.push_back({{"id", v}, {"level", g.node_level[v]}});
    auto& basic = doc["basic_edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : g.basic_edges) basic.push_back({u, v});
    auto& deco = doc["decorating_edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : decorations) deco.push_back({u, v});
    return doc;
}

}  // namespace

std::string to_json(const UnderlyingGraph& g) {
    return graph_document(g, g.decorating_edges).dump(2);
}

std::string to_json(const RealizedGraph& g) {
    std::vector<Edge> present;
    for (std::size_t e = 0; e < g.present.size(); ++e)
        if (g.present[e]) present.push_back(g.base->decorating_edges[e]);
    nlohmann::ordered_json doc = graph_document(*g.base, present);
    doc["p"] = g.p;
    doc["seed"] = g.seed;
    return doc.dump(2);
}

void write_edgelist(std::ostream& os, const RealizedGraph& g) {
    for (auto [u, v] : g.base->basic_edges) os << u << ' ' << v << " B\n";
    for (std::size_t e = 0; e < g.present.size(); ++e)
        if (g.present[e]) {
            auto [u, v] = g.base->decorating_edges[e];
            os << u << ' ' << v << " D\n";
        }
}

}  // namespace motifgraph
