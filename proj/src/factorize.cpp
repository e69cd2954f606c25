#include "hthresh/factorize.hpp"

#include <algorithm>

namespace hthresh {

Digraph build_implications(const PartitionedGraph& t, const Digraph& h) {
    if (t.class_count() != h.order())
        throw DimensionError("build_implications: class count does not match |V(H)|");
    int n = t.order();
    Digraph d(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v)
                continue;
            bool edge = t.graph().adjacent(u, v);
            bool want = h.arc(t.class_of(u) - 1, t.class_of(v) - 1);
            if (edge != want)
                d.add_arc(u, v);
        }
    return d;
}

bool is_prime(const PartitionedGraph& t, const Digraph& h) {
    if (t.order() == 0)
        throw std::invalid_argument("is_prime: empty partitioned graph");
    return scc_condensation(build_implications(t, h)).components.size() == 1;
}

FactorSequence factorize(const PartitionedGraph& t, const Digraph& h) {
    if (t.order() == 0)
        throw std::invalid_argument("factorize: empty partitioned graph");
    Condensation cond = scc_condensation(build_implications(t, h));
    int nc = static_cast<int>(cond.components.size());

    std::vector<PartitionedGraph> parts;
    std::vector<std::string> keys;
    parts.reserve(nc);
    for (int c = 0; c < nc; ++c) {
        parts.push_back(induced_partitioned(t, cond.components[c]));
        keys.push_back(canonical_key(parts.back(), t.order()));
    }

    // Kahn over the reversed condensation: a component is ready once all of
    // its implication successors are already emitted.
    std::vector<int> outdeg(nc, 0);
    for (int a = 0; a < nc; ++a)
        for (int b = 0; b < nc; ++b)
            if (a != b && cond.condensation.arc(a, b))
                ++outdeg[a];
    std::vector<char> emitted(nc, 0);
    FactorSequence seq;
    seq.h = h;
    for (int step = 0; step < nc; ++step) {
        int pick = -1;
        for (int c = 0; c < nc; ++c) {
            if (emitted[c] || outdeg[c] != 0)
                continue;
            if (pick == -1 || keys[c] < keys[pick])
                pick = c;
        }
        emitted[pick] = 1;
        seq.factors.push_back(parts[pick]);
        for (int a = 0; a < nc; ++a)
            if (a != pick && cond.condensation.arc(a, pick))
                --outdeg[a];
    }
    return seq;
}

FactorSequence normalize(const FactorSequence& seq) {
    seq.validate();
    int m = static_cast<int>(seq.factors.size());
    std::vector<std::string> keys;
    keys.reserve(m);
    int limit = 12;
    for (const auto& f : seq.factors)
        limit = std::max(limit, f.order());
    for (const auto& f : seq.factors)
        keys.push_back(canonical_key(f, limit));

    std::vector<int> remaining(m);
    for (int i = 0; i < m; ++i)
        remaining[i] = i;
    FactorSequence out;
    out.h = seq.h;
    while (!remaining.empty()) {
        // movable to front = commutes with every factor before it
        int pick = -1;
        for (size_t p = 0; p < remaining.size(); ++p) {
            bool movable = true;
            for (size_t q = 0; q < p && movable; ++q)
                movable = factors_commute(seq.factors[remaining[q]],
                                          seq.factors[remaining[p]], seq.h);
            if (movable && (pick == -1 || keys[remaining[p]] < keys[remaining[pick]]))
                pick = static_cast<int>(p);
        }
        out.factors.push_back(seq.factors[remaining[pick]]);
        remaining.erase(remaining.begin() + pick);
    }
    return out;
}

} // namespace hthresh
