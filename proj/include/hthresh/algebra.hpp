#pragma once

#include "hthresh/graph.hpp"

namespace hthresh {

/// Ordered factors over a shared digraph H; every factor has
/// class_count == |V(H)|.
struct FactorSequence {
    Digraph h;
    std::vector<PartitionedGraph> factors;

    void validate() const {
        if (factors.empty())
            throw std::invalid_argument("factor sequence must be nonempty");
        for (const auto& f : factors)
            if (f.class_count() != h.order())
                throw DimensionError("factor class count does not match |V(H)|");
    }
};

/// The product t ∘_H s. Result vertices are t's 0..|t|-1 followed by s's
/// shifted by |t|; classes are the unions; cross edges run from class i of t
/// to class j of s for every arc (i,j) of h (loops included).
PartitionedGraph h_product(const PartitionedGraph& t, const PartitionedGraph& s,
                           const Digraph& h);

/// Left fold of h_product over the sequence.
PartitionedGraph product_chain(const FactorSequence& seq);

/// Structural commutation test: for every one-way arc (i,j) of h one of the
/// four emptiness conditions holds. Sufficient for commuting, not necessary.
bool commute_predicate(const PartitionedGraph& t, const PartitionedGraph& s,
                       const Digraph& h);

/// True iff h_product(t,s,h) and h_product(s,t,h) are isomorphic as
/// partitioned graphs. Checks commute_predicate implies the isomorphism.
bool factors_commute(const PartitionedGraph& t, const PartitionedGraph& s,
                     const Digraph& h);

} // namespace hthresh
