#pragma once

#include "hthresh/algebra.hpp"

#include <array>

namespace hthresh {

enum class PairKind { Descending, Ascending, Full, Empty };

/// Witness for a partition satisfying the neighborhoods ordering property:
/// per-class permutations psi plus, for every ordered class pair (i,j), the
/// chain direction (or full/empty adjacency). Class and vertex indices are
/// 0-based here; class ids in wire formats stay 1-based.
struct OrderingCertificate {
    std::vector<std::vector<int>> parts; // V_1..V_k
    std::vector<char> clique_flag;       // part is a clique (of size >= 2)
    std::vector<std::vector<int>> psi;   // psi[i] = ordering of parts[i]
    std::vector<std::vector<PairKind>> direction; // direction[i][j], i != j
};

struct OrderingFailure {
    int i = -1, j = -1, u = -1, v = -1;
    std::string reason;
};

/// Family S of in/out-neighborhood candidate set pairs {X^i_1, X^i_2}.
struct Family {
    int k = 0;
    std::vector<std::array<std::vector<int>, 2>> x; // x[i][r], sorted

    bool proper() const;
};

/// First certificate found, or the failure witness. The full search over
/// the per-class orientation freedom lives in test_partition.
struct OrderingResult {
    std::optional<OrderingCertificate> certificate;
    OrderingFailure failure;
};

OrderingResult check_neighborhood_ordering(const Graph& g,
                                           const std::vector<std::vector<int>>& parts);

Family build_family(const OrderingCertificate& cert);

/// Auxiliary graph on the 2k set slots; slot (i,r) maps to vertex 2i+r.
Graph build_R(const Family& s);

struct RealizeResult {
    std::optional<Digraph> d;
    std::vector<int> odd_cycle; // in R(S), when not bipartite
};

RealizeResult realize_family(const Family& s);

/// All realizations of s (one per proper 2-coloring of R(S)); empty when
/// R(S) is not bipartite.
std::vector<Digraph> all_realizations(const Family& s);

/// The digraph F: cross-class edges oriented along d, cross-class non-edges
/// against d, plus a directed path through every class along psi.
/// Throws if d does not realize build_family(cert).
Digraph build_F(const Graph& g, const OrderingCertificate& cert, const Digraph& d);

struct ThresholdRepresentation {
    Digraph h;
    std::vector<int> sequence;     // class ids 1..k, one per vertex position
    std::vector<int> vertex_order; // vertex_order[p] = vertex of g at position p
};

/// Rebuild the basic graph of K_{i_1} o_H ... o_H K_{i_n}.
Graph expand_representation(const Digraph& h, const std::vector<int>& sequence);

enum class Stage { Ok, Ordering, Bipartite, Acyclic };

struct PartitionTest {
    Stage failed = Stage::Ok;
    std::optional<ThresholdRepresentation> rep;
    OrderingFailure ordering_failure; // filled when failed == Ordering
};

/// Runs the whole pipeline for one partition, searching over the per-class
/// orientation choices. On success synthesizes H and a build sequence whose
/// product reproduces g.
PartitionTest test_partition(const Graph& g, const std::vector<std::vector<int>>& parts);

struct WidthResult {
    std::optional<int> width; // empty means > max_k
    std::optional<ThresholdRepresentation> rep;
    std::vector<std::vector<int>> partition;
};

WidthResult threshold_width(const Graph& g, int max_k);

/// Backtracking search for a build sequence under a fixed h.
std::optional<ThresholdRepresentation> is_h_threshold(const Graph& g, const Digraph& h);

bool is_threshold(const Graph& g);
bool is_difference(const Graph& g);

struct Width2Result {
    int width_class = 0; // 1, 2, or 3 meaning "> 2"
    std::string route;   // which recognizer fired
    std::optional<ThresholdRepresentation> rep;
};

Width2Result recognize_width2(const Graph& g);

} // namespace hthresh
