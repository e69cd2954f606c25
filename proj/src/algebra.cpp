#include "hthresh/algebra.hpp"

#include <algorithm>

namespace hthresh {

PartitionedGraph h_product(const PartitionedGraph& t, const PartitionedGraph& s,
                           const Digraph& h) {
    int k = h.order();
    if (t.class_count() != k || s.class_count() != k)
        throw DimensionError("h_product: class count does not match |V(H)|");
    int nt = t.order(), ns = s.order();
    Graph g(nt + ns);
    for (int u = 0; u < nt; ++u)
        for (int v = u + 1; v < nt; ++v)
            if (t.graph().adjacent(u, v))
                g.add_edge(u, v);
    for (int u = 0; u < ns; ++u)
        for (int v = u + 1; v < ns; ++v)
            if (s.graph().adjacent(u, v))
                g.add_edge(nt + u, nt + v);
    for (int x = 0; x < nt; ++x)
        for (int y = 0; y < ns; ++y)
            if (h.arc(t.class_of(x) - 1, s.class_of(y) - 1))
                g.add_edge(x, nt + y);
    std::vector<int> classes(t.classes());
    classes.insert(classes.end(), s.classes().begin(), s.classes().end());
    return PartitionedGraph(std::move(g), k, std::move(classes));
}

PartitionedGraph product_chain(const FactorSequence& seq) {
    seq.validate();
    PartitionedGraph acc = seq.factors.front();
    for (size_t i = 1; i < seq.factors.size(); ++i)
        acc = h_product(acc, seq.factors[i], seq.h);
    return acc;
}

bool commute_predicate(const PartitionedGraph& t, const PartitionedGraph& s,
                       const Digraph& h) {
    int k = h.order();
    if (t.class_count() != k || s.class_count() != k)
        throw DimensionError("commute_predicate: class count does not match |V(H)|");
    std::vector<char> a_empty(k, 1), b_empty(k, 1);
    for (int v = 0; v < t.order(); ++v)
        a_empty[t.class_of(v) - 1] = 0;
    for (int v = 0; v < s.order(); ++v)
        b_empty[s.class_of(v) - 1] = 0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j || !h.arc(i, j) || h.arc(j, i))
                continue;
            bool ok = (a_empty[i] && a_empty[j]) || (a_empty[j] && b_empty[j]) ||
                      (a_empty[i] && b_empty[i]) || (b_empty[i] && b_empty[j]);
            if (!ok)
                return false;
        }
    return true;
}

bool factors_commute(const PartitionedGraph& t, const PartitionedGraph& s,
                     const Digraph& h) {
    int limit = std::max(12, t.order() + s.order());
    bool iso = canonical_key(h_product(t, s, h), limit) ==
               canonical_key(h_product(s, t, h), limit);
    if (commute_predicate(t, s, h) && !iso)
        throw std::logic_error("factors_commute: predicate holds but products differ");
    return iso;
}

} // namespace hthresh
