#include "polychrome/json_io.hpp"

namespace polychrome {

using nlohmann::json;

json coloring_to_json(const EdgeColoring& coloring)
{
    json edges = json::array();
    for (const auto& [u, v, c] : coloring.edge_triples()) edges.push_back({u, v, c});
    return json{{"n", coloring.n()}, {"k", coloring.k()}, {"edges", std::move(edges)}};
}

EdgeColoring coloring_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("edges"))
        throw precondition_error("coloring JSON needs fields n, k, edges");
    int n = j.at("n").get<int>();
    int k = j.at("k").get<int>();
    std::vector<std::array<int, 3>> triples;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3)
            throw precondition_error("each edge must be [u, v, c]");
        int u = e[0].get<int>();
        int v = e[1].get<int>();
        if (u >= v) throw precondition_error("edges must be listed with u < v");
        triples.push_back({u, v, e[2].get<int>()});
    }
    return EdgeColoring::from_edges(n, k, triples);
}

json subgraph_to_json(const Subgraph& h)
{
    json edges = json::array();
    for (const auto& [u, v] : h.edges) edges.push_back({u, v});
    return json{{"edges", std::move(edges)}};
}

Subgraph subgraph_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("edges"))
        throw precondition_error("subgraph JSON needs field edges");
    std::vector<Edge> pairs;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw precondition_error("each edge must be [u, v]");
        pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Subgraph::from_pairs(std::move(pairs));
}

json verdict_to_json(const Verdict& verdict)
{
    json missing = json::array();
    for (const auto& m : verdict.missing)
        missing.push_back({{"color", m.color}, {"witness", subgraph_to_json(m.witness)}});
    return json{{"polychromatic", verdict.polychromatic}, {"missing", std::move(missing)}};
}

json blocks_to_json(const BlockSequence& blocks)
{
    json out = json::array();
    for (const auto& b : blocks.blocks) out.push_back({b.color, b.length});
    return json{{"blocks", std::move(out)}};
}

BlockSequence blocks_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("blocks"))
        throw precondition_error("block JSON needs field blocks");
    BlockSequence out;
    for (const auto& b : j.at("blocks")) {
        if (!b.is_array() || b.size() != 2)
            throw precondition_error("each block must be [color, length]");
        out.blocks.push_back({b[0].get<int>(), b[1].get<int>()});
    }
    return out;
}

}  // namespace polychrome
