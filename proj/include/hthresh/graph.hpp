#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hthresh {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph, vertices 0..n-1, no loops.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {}

    int order() const { return n_; }

    bool adjacent(int u, int v) const { return adj_[idx(u, v)] != 0; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("loops are not allowed in graphs");
        adj_[idx(u, v)] = adj_[idx(v, u)] = 1;
    }

    void remove_edge(int u, int v) { adj_[idx(u, v)] = adj_[idx(v, u)] = 0; }

    int degree(int v) const {
        int d = 0;
        for (int u = 0; u < n_; ++u)
            d += adj_[idx(v, u)];
        return d;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (adj_[idx(v, u)])
                out.push_back(u);
        return out;
    }

    size_t edge_count() const {
        size_t m = 0;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                m += adj_[idx(u, v)];
        return m;
    }

    bool operator==(const Graph&) const = default;

private:
    size_t idx(int u, int v) const { return static_cast<size_t>(u) * n_ + v; }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex id out of range");
    }

    int n_ = 0;
    std::vector<char> adj_;
};

/// Directed graph, loops allowed, no multi-arcs.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n) : n_(n), arc_(static_cast<size_t>(n) * n, 0) {}

    int order() const { return n_; }

    bool arc(int u, int v) const { return arc_[idx(u, v)] != 0; }

    void add_arc(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (arc_[idx(u, v)])
            throw std::invalid_argument("duplicate arc");
        arc_[idx(u, v)] = 1;
    }

    void set_arc(int u, int v, bool present = true) {
        check_vertex(u);
        check_vertex(v);
        arc_[idx(u, v)] = present ? 1 : 0;
    }

    std::vector<int> out_neighbors(int v) const {
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (u != v && arc_[idx(v, u)])
                out.push_back(u);
        return out;
    }

    std::vector<int> in_neighbors(int v) const {
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (u != v && arc_[idx(u, v)])
                out.push_back(u);
        return out;
    }

    bool loop(int v) const { return arc_[idx(v, v)] != 0; }

    size_t arc_count() const {
        size_t m = 0;
        for (char c : arc_)
            m += c;
        return m;
    }

    bool operator==(const Digraph&) const = default;

private:
    size_t idx(int u, int v) const { return static_cast<size_t>(u) * n_ + v; }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex id out of range");
    }

    int n_ = 0;
    std::vector<char> arc_;
};

/// Graph plus a total assignment of its vertices to classes 1..k.
/// Classes may be empty.
class PartitionedGraph {
public:
    PartitionedGraph() = default;
    PartitionedGraph(Graph g, int class_count, std::vector<int> class_of)
        : graph_(std::move(g)), k_(class_count), class_of_(std::move(class_of)) {
        if (k_ < 1)
            throw std::invalid_argument("class count must be positive");
        if (static_cast<int>(class_of_.size()) != graph_.order())
            throw std::invalid_argument("class assignment size mismatch");
        for (int c : class_of_)
            if (c < 1 || c > k_)
                throw std::invalid_argument("class id out of range");
    }

    const Graph& graph() const { return graph_; }
    int class_count() const { return k_; }
    int class_of(int v) const { return class_of_.at(v); }
    const std::vector<int>& classes() const { return class_of_; }
    int order() const { return graph_.order(); }

    std::vector<std::vector<int>> class_members() const {
        std::vector<std::vector<int>> out(k_);
        for (int v = 0; v < order(); ++v)
            out[class_of_[v] - 1].push_back(v);
        return out;
    }

    bool operator==(const PartitionedGraph&) const = default;

private:
    Graph graph_;
    int k_ = 1;
    std::vector<int> class_of_;
};

// --- graph6 wire format ---

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// --- line formats for digraphs and partitioned graphs ---

Digraph parse_digraph(std::string_view text);
std::string write_digraph(const Digraph& d);

PartitionedGraph parse_partitioned(std::string_view text);
std::string write_partitioned(const PartitionedGraph& t);

// --- basic operations ---

Graph complement(const Graph& g);
Digraph complement_digraph(const Digraph& h);

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);
PartitionedGraph induced_partitioned(const PartitionedGraph& t, const std::vector<int>& verts);

/// Canonical byte-string: equal keys iff class-preserving isomorphic.
/// Exhaustive refinement + backtracking, desk scale only.
std::string canonical_key(const PartitionedGraph& t, int limit = 12);
std::string canonical_key(const Graph& g, int limit = 12);

/// Canonical representative (relabeling of g realizing canonical_key).
Graph canonical_form(const Graph& g, int limit = 12);

struct Condensation {
    std::vector<int> component_of;          // vertex -> component id, topologically ordered
    std::vector<std::vector<int>> components; // component id -> vertices
    Digraph condensation;                   // acyclic, arcs follow component ids
};

Condensation scc_condensation(const Digraph& d);

struct TopoResult {
    std::optional<std::vector<int>> order; // all arcs go forward
    std::vector<int> cycle;                // directed cycle when no order exists
};

TopoResult topological_sort(const Digraph& d);

struct BipartiteResult {
    std::optional<std::vector<int>> coloring; // 0/1 per vertex
    std::vector<int> odd_cycle;               // when not bipartite
};

BipartiteResult two_color_bipartite(const Graph& g);

} // namespace hthresh
