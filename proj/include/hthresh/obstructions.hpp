#pragma once

#include "hthresh/graph.hpp"

namespace hthresh {

/// Induced-subgraph search: a vertex map preserving edges and non-edges.
/// The returned vector maps pattern vertex -> host vertex.
std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& pattern);

/// One canonical representative per isomorphism class of n-vertex graphs,
/// by canonical augmentation from the (n-1)-vertex representatives.
std::vector<Graph> enumerate_graphs(int n);

struct Obstruction {
    Graph graph;
    std::string key;            // canonical key
    std::string complement_key; // canonical key of the complement
    std::string name;           // matched named graph, or "X/Y/Z candidate"
    std::vector<int> deleted_width_class; // recognize_width2 of every one-vertex deletion
};

/// All minimal graphs of threshold-width > 2 on at most max_n vertices:
/// width > 2 but every one-vertex-deleted induced subgraph has width <= 2.
std::vector<Obstruction> mine_minimal_obstructions(int max_n, int jobs = 1);

/// Exhaustive check that width <= 2 is equivalent to containing no mined
/// obstruction induced in g or in its complement, over all graphs with at
/// most max_n vertices.
bool verify_obstruction_equivalence(int max_n, const std::vector<Obstruction>& obs);

/// The named members of the width-2 forbidden list, keyed by name.
std::vector<std::pair<std::string, Graph>> named_obstructions();

} // namespace hthresh
