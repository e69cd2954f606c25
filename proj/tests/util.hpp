#pragma once

#include "hthresh/graph.hpp"

#include <algorithm>
#include <numeric>

namespace testutil {

using hthresh::Digraph;
using hthresh::Graph;
using hthresh::PartitionedGraph;

inline Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

inline Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(int n) {
    Graph g = path(n);
    if (n >= 3)
        g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            g.add_edge(u, v);
    return g;
}

/// All 2^k digraphs on k vertices that have arcs drawn from the given list.
inline std::vector<Digraph> all_digraphs(int k) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            slots.emplace_back(i, j);
    std::vector<Digraph> out;
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
        Digraph h(k);
        for (size_t s = 0; s < slots.size(); ++s)
            if ((mask >> s) & 1)
                h.add_arc(slots[s].first, slots[s].second);
        out.push_back(std::move(h));
    }
    return out;
}

/// Brute-force class-preserving isomorphism by trying every permutation.
inline bool brute_iso(const PartitionedGraph& a, const PartitionedGraph& b) {
    if (a.order() != b.order() || a.class_count() != b.class_count())
        return false;
    int n = a.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            ok = a.class_of(v) == b.class_of(perm[v]);
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                ok = a.graph().adjacent(u, v) == b.graph().adjacent(perm[u], perm[v]);
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Deterministic xorshift; tests must not depend on library RNG details.
struct Rng {
    uint64_t s = 0x9e3779b97f4a7c15ull;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    int below(int n) { return static_cast<int>(next() % n); }
    bool coin() { return next() & 1; }
};

} // namespace testutil
