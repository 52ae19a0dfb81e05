#include "affweights/weight_graph.hpp"

#include "affweights/oracle.hpp"

#include <algorithm>
#include <map>

namespace affweights {

WeightGraph build_weight_graph(const NbarTable& table, long floors)
{
    WeightGraph graph;
    graph.floors = floors;
    const auto weights = enumerate_weights(table.lambda(), floors - 1);
    std::map<Content, std::size_t> index;
    for (const auto& b : weights) {
        index.emplace(b, graph.nodes.size());
        graph.nodes.push_back({b, defect(table.lambda(), b), delta_shift(table, b).shift});
    }
    for (std::size_t from = 0; from < graph.nodes.size(); ++from) {
        for (std::size_t i = 0; i < table.data().size(); ++i) {
            Content lower = graph.nodes[from].content;
            lower[i] += 1;
            if (const auto it = index.find(lower); it != index.end())
                graph.edges.push_back({from, it->second, i});
        }
    }
    return graph;
}

namespace {

std::string node_id(std::size_t i) { return "w" + std::to_string(i); }

std::string node_label(const WeightGraph::Node& node)
{
    const bool digits = std::all_of(node.content.begin(), node.content.end(),
        [](const Integer& x) { return x >= 0 && x < 10; });
    return join(node.content.values(), digits ? "" : ",") + "^" + to_string(node.defect);
}

} // namespace

void write_dot(std::ostream& out, const WeightGraph& graph)
{
    static const char* colours[] = {"red", "darkgreen", "blue", "purple", "orange", "brown", "black"};
    out << "digraph weights {\n";
    out << "  rankdir=TB;\n";
    out << "  node [shape=plaintext, fontname=\"Helvetica\"];\n";
    for (long f = 0; f < graph.floors; ++f) {
        out << "  subgraph floor" << f << " {\n    rank=same;\n";
        for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
            const auto& node = graph.nodes[i];
            if (node.content[0] != f)
                continue;
            out << "    " << node_id(i) << " [label=\"" << node_label(node) << "\"";
            if (node.shift == 0)
                out << ", shape=box";
            out << "];\n";
        }
        out << "  }\n";
    }
    for (const auto& e : graph.edges) {
        out << "  " << node_id(e.from) << " -> " << node_id(e.to) << " [label=\"" << e.root
            << "\", color=" << colours[e.root % std::size(colours)] << "];\n";
    }
    out << "}\n";
}

Json to_json(const WeightGraph& graph)
{
    Json j;
    j["floors"] = graph.floors;
    Json nodes = Json::array();
    for (const auto& node : graph.nodes) {
        Json n;
        n["content"] = to_json(node.content);
        n["floor"] = to_json(node.content[0]);
        n["defect"] = to_json(node.defect);
        n["shift"] = to_json(node.shift);
        n["label"] = node_label(node);
        nodes.push_back(std::move(n));
    }
    j["nodes"] = std::move(nodes);
    Json edges = Json::array();
    for (const auto& e : graph.edges)
        edges.push_back({{"from", e.from}, {"to", e.to}, {"root", e.root}});
    j["edges"] = std::move(edges);
    return j;
}

} // namespace affweights
