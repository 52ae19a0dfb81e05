#pragma once

#include "affweights/membership.hpp"
#include "affweights/serialize.hpp"

#include <ostream>
#include <vector>

namespace affweights {

/// Weights of the first few floors with an edge b -> b + e_i for every
/// subtraction of alpha_i that stays inside the set.
struct WeightGraph {
    struct Node {
        Content content;
        Rational defect;
        Integer shift;
    };
    struct Edge {
        std::size_t from;
        std::size_t to;
        std::size_t root;
    };

    std::vector<Node> nodes; // sorted by content
    std::vector<Edge> edges;
    long floors = 0;
};

/// Floors 0..floors-1, enumerated by the oracle and annotated with the
/// delta-shift from the table.
WeightGraph build_weight_graph(const NbarTable& table, long floors);

/// Graphviz digraph, one rank per floor, nodes labelled "content^defect";
/// maximal weights are drawn with a box.
void write_dot(std::ostream& out, const WeightGraph& graph);

Json to_json(const WeightGraph& graph);

} // namespace affweights
