#pragma once

#include "hthresh/algebra.hpp"

namespace hthresh {

/// Implication digraph over t's vertices: arc u -> v iff putting u in the
/// left factor and v in the right one would violate the product equation,
/// i.e. [uv in E] != [(class(u),class(v)) in A(h)]. A valid ordered split
/// (L, R) is exactly a split where L has no outgoing implication arcs.
Digraph build_implications(const PartitionedGraph& t, const Digraph& h);

/// True iff t admits no ordered split, i.e. the implication digraph is
/// strongly connected.
bool is_prime(const PartitionedGraph& t, const Digraph& h);

/// Unique H-decomposition into prime factors. The factors are the strongly
/// connected components of the implication digraph, emitted in a topological
/// order of the reversed condensation (a left factor must keep all its
/// implication successors); among simultaneously ready components the one
/// with the smaller canonical key goes first.
FactorSequence factorize(const PartitionedGraph& t, const Digraph& h);

/// Canonical representative of the equivalence class generated by swapping
/// adjacent commuting factors: repeatedly emits the smallest-key factor that
/// commutes with every factor still in front of it.
FactorSequence normalize(const FactorSequence& seq);

} // namespace hthresh
