#include "hthresh/threshold.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace hthresh {

namespace {

enum class PairBase { Full, Empty, Nontrivial };

// One admissible (psi, chain-direction) choice for a single class.
struct ClassOption {
    std::vector<int> psi;
    std::vector<PairKind> direction; // indexed by class j, entry for j == i unused
};

struct ClassAnalysis {
    bool ok = true;
    OrderingFailure failure;
    std::vector<ClassOption> options;
    bool clique_flag = false;
};

std::vector<int> sorted_cross_neighborhood(const Graph& g, int v,
                                           const std::vector<int>& part) {
    std::vector<int> out;
    for (int u : part)
        if (g.adjacent(v, u))
            out.push_back(u);
    return out;
}

bool includes_sorted(const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// All admissible orderings of class i, up to a global flip (which downstream
// machinery absorbs). Per-class freedom: the relative orientation of the
// independent blocks of strictly ordered chains, and the Y-side of every
// nontrivial pair whose chain is constant.
ClassAnalysis analyze_class(const Graph& g, const std::vector<std::vector<int>>& parts,
                            int i) {
    ClassAnalysis out;
    int k = static_cast<int>(parts.size());
    const std::vector<int>& part = parts[i];
    int r = static_cast<int>(part.size());

    // clique / independent check
    bool clique = true, indep = true;
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            (g.adjacent(part[a], part[b]) ? indep : clique) = false;
    if (!clique && !indep) {
        out.ok = false;
        out.failure = {i, i, -1, -1, "part is neither a clique nor an independent set"};
        return out;
    }
    out.clique_flag = clique && r >= 2;

    std::vector<PairBase> base(k, PairBase::Empty);
    std::vector<std::vector<std::vector<int>>> nbhd(k); // nbhd[j][t] for part[t]
    std::vector<char> strict(k, 0);
    for (int j = 0; j < k; ++j) {
        if (j == i || part.empty() || parts[j].empty())
            continue;
        auto& nb = nbhd[j];
        nb.resize(r);
        size_t total = 0;
        for (int t = 0; t < r; ++t) {
            nb[t] = sorted_cross_neighborhood(g, part[t], parts[j]);
            total += nb[t].size();
        }
        if (total == part.size() * parts[j].size()) {
            base[j] = PairBase::Full;
            continue;
        }
        if (total == 0)
            continue;
        base[j] = PairBase::Nontrivial;
        // chain check: sort by size, adjacent sets must nest
        std::vector<int> order(r);
        for (int t = 0; t < r; ++t)
            order[t] = t;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return nb[a].size() > nb[b].size();
        });
        for (int t = 0; t + 1 < r; ++t) {
            const auto& big = nb[order[t]];
            const auto& small = nb[order[t + 1]];
            if (!includes_sorted(big, small)) {
                out.ok = false;
                out.failure = {i, j, part[order[t]], part[order[t + 1]],
                               "incomparable neighborhoods"};
                return out;
            }
        }
        for (int t = 0; t < r; ++t)
            if (nb[t].size() != nb[0].size())
                strict[j] = 1;
    }

    // orientation constraints between strictly ordered chains: same when two
    // chains order some pair identically, opposite when reversed
    std::vector<int> strict_js;
    for (int j = 0; j < k; ++j)
        if (strict[j])
            strict_js.push_back(j);
    int m = static_cast<int>(strict_js.size());
    // union-find with parity over strict_js
    std::vector<int> uf_parent(m), uf_parity(m, 0);
    for (int a = 0; a < m; ++a)
        uf_parent[a] = a;
    auto find = [&](int a) {
        int root = a, par = 0;
        while (uf_parent[root] != root) {
            par ^= uf_parity[root];
            root = uf_parent[root];
        }
        // path compression
        while (uf_parent[a] != root) {
            int next = uf_parent[a];
            int np = uf_parity[a];
            uf_parent[a] = root;
            uf_parity[a] = par;
            par ^= np;
            a = next;
        }
        return root;
    };
    auto parity_to_root = [&](int a) {
        find(a);
        return uf_parity[a] == 0 && uf_parent[a] == a ? 0 : uf_parity[a];
    };
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            int ja = strict_js[a], jb = strict_js[b];
            bool same = false, opp = false;
            for (int t = 0; t < r; ++t)
                for (int u = 0; u < r; ++u) {
                    auto sa = nbhd[ja][t].size(), sb = nbhd[ja][u].size();
                    auto ta = nbhd[jb][t].size(), tb = nbhd[jb][u].size();
                    if (sa > sb && ta > tb)
                        same = true;
                    if (sa > sb && ta < tb)
                        opp = true;
                }
            if (same && opp) {
                out.ok = false;
                out.failure = {i, ja, -1, -1, "chain orientations conflict"};
                return out;
            }
            if (!same && !opp)
                continue;
            int ra = find(a), rb = find(b);
            int pa = uf_parity[a], pb = uf_parity[b];
            int want = same ? 0 : 1;
            if (ra == rb) {
                if ((pa ^ pb) != want) {
                    out.ok = false;
                    out.failure = {i, ja, -1, -1, "chain orientations conflict"};
                    return out;
                }
            } else {
                uf_parent[ra] = rb;
                uf_parity[ra] = pa ^ pb ^ want;
            }
        }

    std::vector<int> comp_roots;
    for (int a = 0; a < m; ++a)
        if (find(a) == a)
            comp_roots.push_back(a);
    int ncomp = static_cast<int>(comp_roots.size());

    std::vector<int> const_js;
    for (int j = 0; j < k; ++j)
        if (base[j] == PairBase::Nontrivial && !strict[j])
            const_js.push_back(j);

    int free_bits = std::max(0, ncomp - 1) + static_cast<int>(const_js.size());
    if (free_bits > 20)
        throw std::logic_error("orientation search space too large");

    for (int mask = 0; mask < (1 << free_bits); ++mask) {
        // orientation per strict j: component 0 fixed to descending
        std::vector<int> orient(k, +1);
        for (int a = 0; a < m; ++a) {
            int root = find(a);
            int ci = static_cast<int>(std::find(comp_roots.begin(), comp_roots.end(), root) -
                                      comp_roots.begin());
            int flip = ci == 0 ? 0 : (mask >> (ci - 1)) & 1;
            orient[strict_js[a]] = ((uf_parity[a] ^ flip) == 0) ? +1 : -1;
        }
        // DAG over positions of part: u before v per oriented strict chains
        Digraph dag(r);
        bool feasible = true;
        for (int j : strict_js) {
            for (int t = 0; t < r && feasible; ++t)
                for (int u = 0; u < r; ++u) {
                    bool before = orient[j] == +1 ? nbhd[j][t].size() > nbhd[j][u].size()
                                                 : nbhd[j][t].size() < nbhd[j][u].size();
                    if (before && !dag.arc(t, u))
                        dag.set_arc(t, u);
                }
        }
        auto topo = topological_sort(dag);
        if (!topo.order)
            continue;
        ClassOption opt;
        opt.psi.reserve(r);
        for (int t : *topo.order)
            opt.psi.push_back(part[t]);
        opt.direction.assign(k, PairKind::Empty);
        int const_bit = std::max(0, ncomp - 1);
        for (int j = 0; j < k; ++j) {
            if (j == i)
                continue;
            switch (base[j]) {
            case PairBase::Full:
                opt.direction[j] = PairKind::Full;
                break;
            case PairBase::Empty:
                opt.direction[j] = PairKind::Empty;
                break;
            case PairBase::Nontrivial:
                if (strict[j]) {
                    opt.direction[j] =
                        orient[j] == +1 ? PairKind::Descending : PairKind::Ascending;
                } else {
                    int idx = static_cast<int>(std::find(const_js.begin(), const_js.end(), j) -
                                               const_js.begin());
                    opt.direction[j] = ((mask >> (const_bit + idx)) & 1)
                                           ? PairKind::Ascending
                                           : PairKind::Descending;
                }
                break;
            }
        }
        out.options.push_back(std::move(opt));
    }
    if (out.options.empty()) {
        out.ok = false;
        out.failure = {i, -1, -1, -1, "no consistent vertex ordering"};
    }
    return out;
}

void validate_partition(const Graph& g, const std::vector<std::vector<int>>& parts) {
    std::vector<char> seen(g.order(), 0);
    for (const auto& part : parts)
        for (int v : part) {
            if (v < 0 || v >= g.order() || seen[v])
                throw std::invalid_argument("not a partition of the vertex set");
            seen[v] = 1;
        }
    for (char c : seen)
        if (!c)
            throw std::invalid_argument("not a partition of the vertex set");
}

} // namespace

bool Family::proper() const {
    for (int i = 0; i < k; ++i)
        for (int r = 0; r < 2; ++r)
            for (int j : x[i][r]) {
                bool back = std::find(x[j][0].begin(), x[j][0].end(), i) != x[j][0].end() ||
                            std::find(x[j][1].begin(), x[j][1].end(), i) != x[j][1].end();
                if (!back)
                    return false;
            }
    return true;
}

OrderingResult check_neighborhood_ordering(const Graph& g,
                                           const std::vector<std::vector<int>>& parts) {
    validate_partition(g, parts);
    int k = static_cast<int>(parts.size());
    OrderingCertificate cert;
    cert.parts = parts;
    cert.clique_flag.assign(k, 0);
    cert.psi.resize(k);
    cert.direction.assign(k, std::vector<PairKind>(k, PairKind::Empty));
    for (int i = 0; i < k; ++i) {
        ClassAnalysis a = analyze_class(g, parts, i);
        if (!a.ok)
            return {std::nullopt, a.failure};
        cert.clique_flag[i] = a.clique_flag;
        cert.psi[i] = a.options.front().psi;
        cert.direction[i] = a.options.front().direction;
    }
    return {std::move(cert), {}};
}

Family build_family(const OrderingCertificate& cert) {
    int k = static_cast<int>(cert.parts.size());
    Family s;
    s.k = k;
    s.x.resize(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (j == i)
                continue;
            if (cert.direction[i][j] == PairKind::Descending)
                s.x[i][0].push_back(j);
            else if (cert.direction[i][j] == PairKind::Ascending)
                s.x[i][1].push_back(j);
        }
    return s;
}

Graph build_R(const Family& s) {
    if (!s.proper())
        throw std::invalid_argument("build_R: family is not proper");
    Graph r(2 * s.k);
    for (int i = 0; i < s.k; ++i)
        r.add_edge(2 * i, 2 * i + 1);
    for (int i = 0; i < s.k; ++i)
        for (int j = i + 1; j < s.k; ++j)
            for (int q = 0; q < 2; ++q)
                for (int p = 0; p < 2; ++p) {
                    bool iin = std::find(s.x[j][p].begin(), s.x[j][p].end(), i) !=
                               s.x[j][p].end();
                    bool jin = std::find(s.x[i][q].begin(), s.x[i][q].end(), j) !=
                               s.x[i][q].end();
                    if (iin && jin)
                        r.add_edge(2 * i + q, 2 * j + p);
                }
    return r;
}

namespace {

Digraph realization_from_coloring(const Family& s, const std::vector<int>& color) {
    // color 0 slots become out-neighborhoods
    Digraph d(s.k);
    for (int i = 0; i < s.k; ++i)
        for (int q = 0; q < 2; ++q) {
            if (color[2 * i + q] != 0)
                continue;
            for (int j : s.x[i][q])
                if (!d.arc(i, j))
                    d.add_arc(i, j);
        }
    return d;
}

} // namespace

RealizeResult realize_family(const Family& s) {
    Graph r = build_R(s);
    BipartiteResult b = two_color_bipartite(r);
    if (!b.coloring)
        return {std::nullopt, std::move(b.odd_cycle)};
    return {realization_from_coloring(s, *b.coloring), {}};
}

std::vector<Digraph> all_realizations(const Family& s) {
    Graph r = build_R(s);
    BipartiteResult b = two_color_bipartite(r);
    if (!b.coloring)
        return {};
    // connected components of R
    int n = r.order();
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int start = 0; start < n; ++start) {
        if (comp[start] != -1)
            continue;
        std::vector<int> stack{start};
        comp[start] = nc;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : r.neighbors(v))
                if (comp[u] == -1) {
                    comp[u] = nc;
                    stack.push_back(u);
                }
        }
        ++nc;
    }
    std::vector<Digraph> out;
    for (int mask = 0; mask < (1 << nc); ++mask) {
        std::vector<int> color(n);
        for (int v = 0; v < n; ++v)
            color[v] = (*b.coloring)[v] ^ ((mask >> comp[v]) & 1);
        Digraph d = realization_from_coloring(s, color);
        if (std::find(out.begin(), out.end(), d) == out.end())
            out.push_back(std::move(d));
    }
    return out;
}

Digraph build_F(const Graph& g, const OrderingCertificate& cert, const Digraph& d) {
    Family s = build_family(cert);
    int k = s.k;
    if (d.order() != k)
        throw std::invalid_argument("build_F: realization has wrong order");
    std::vector<char> out_is_slot1(k, 1);
    for (int i = 0; i < k; ++i) {
        std::vector<int> nout = d.out_neighbors(i);
        std::vector<int> nin = d.in_neighbors(i);
        if (d.loop(i))
            throw std::invalid_argument("build_F: realization has a loop");
        if (nout == s.x[i][0] && nin == s.x[i][1])
            out_is_slot1[i] = 1;
        else if (nout == s.x[i][1] && nin == s.x[i][0])
            out_is_slot1[i] = 0;
        else
            throw std::invalid_argument("build_F: digraph does not realize the family");
    }

    Digraph f(g.order());
    // A1 / A2: orient cross edges along D, cross non-edges against D
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j || !d.arc(i, j))
                continue;
            for (int u : cert.parts[i])
                for (int v : cert.parts[j]) {
                    if (g.adjacent(u, v))
                        f.set_arc(u, v);
                    else
                        f.set_arc(v, u);
                }
        }
    // A3: directed path through every class
    for (int i = 0; i < k; ++i) {
        const std::vector<int>& psi = cert.psi[i];
        for (size_t t = 0; t + 1 < psi.size(); ++t) {
            if (out_is_slot1[i])
                f.set_arc(psi[t], psi[t + 1]);
            else
                f.set_arc(psi[t + 1], psi[t]);
        }
    }
    return f;
}

Graph expand_representation(const Digraph& h, const std::vector<int>& sequence) {
    int n = static_cast<int>(sequence.size());
    Graph g(n);
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (h.arc(sequence[p] - 1, sequence[q] - 1))
                g.add_edge(p, q);
    return g;
}

PartitionTest test_partition(const Graph& g, const std::vector<std::vector<int>>& parts) {
    validate_partition(g, parts);
    int k = static_cast<int>(parts.size());

    std::vector<ClassAnalysis> analyses;
    analyses.reserve(k);
    for (int i = 0; i < k; ++i) {
        analyses.push_back(analyze_class(g, parts, i));
        if (!analyses.back().ok) {
            PartitionTest t;
            t.failed = Stage::Ordering;
            t.ordering_failure = analyses.back().failure;
            return t;
        }
    }

    Stage deepest = Stage::Bipartite;
    std::vector<size_t> choice(k, 0);
    for (;;) {
        OrderingCertificate cert;
        cert.parts = parts;
        cert.clique_flag.assign(k, 0);
        cert.psi.resize(k);
        cert.direction.resize(k);
        for (int i = 0; i < k; ++i) {
            cert.clique_flag[i] = analyses[i].clique_flag;
            cert.psi[i] = analyses[i].options[choice[i]].psi;
            cert.direction[i] = analyses[i].options[choice[i]].direction;
        }
        Family s = build_family(cert);
        RealizeResult real = realize_family(s);
        if (real.d) {
            Digraph f = build_F(g, cert, *real.d);
            TopoResult topo = topological_sort(f);
            if (topo.order) {
                // synthesize H and the build sequence
                Digraph h(k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        if (i != j && real.d->arc(i, j))
                            h.add_arc(i, j);
                for (int i = 0; i < k; ++i)
                    if (cert.clique_flag[i])
                        h.add_arc(i, i);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        if (i != j && cert.direction[i][j] == PairKind::Full &&
                            !h.arc(i, j))
                            h.add_arc(i, j);
                std::vector<int> class_of(g.order());
                for (int i = 0; i < k; ++i)
                    for (int v : parts[i])
                        class_of[v] = i + 1;
                ThresholdRepresentation rep;
                rep.h = std::move(h);
                rep.vertex_order = *topo.order;
                for (int v : rep.vertex_order)
                    rep.sequence.push_back(class_of[v]);
                PartitionTest t;
                t.failed = Stage::Ok;
                t.rep = std::move(rep);
                return t;
            }
            deepest = Stage::Acyclic;
        }
        // next combination
        int pos = 0;
        while (pos < k) {
            if (++choice[pos] < analyses[pos].options.size())
                break;
            choice[pos] = 0;
            ++pos;
        }
        if (pos == k)
            break;
    }
    PartitionTest t;
    t.failed = deepest;
    return t;
}

namespace {

struct PartitionSearch {
    const Graph* g;
    int n, k;
    std::vector<int> assign; // vertex -> class 0..k-1
    std::vector<char> can_clique, can_indep;
    std::optional<WidthResult> found;

    void rec(int v, int used) {
        if (found)
            return;
        if (n - v < k - used)
            return;
        if (v == n) {
            if (used != k)
                return;
            std::vector<std::vector<int>> parts(k);
            for (int u = 0; u < n; ++u)
                parts[assign[u]].push_back(u);
            PartitionTest t = test_partition(*g, parts);
            if (t.failed == Stage::Ok)
                found = WidthResult{k, std::move(t.rep), std::move(parts)};
            return;
        }
        int top = std::min(used, k - 1);
        for (int c = 0; c <= top; ++c) {
            bool cq = true, id = true;
            for (int u = 0; u < v; ++u) {
                if (assign[u] != c)
                    continue;
                (g->adjacent(u, v) ? id : cq) = false;
            }
            char save_cq = 0, save_id = 0;
            if (c < used) {
                save_cq = can_clique[c];
                save_id = can_indep[c];
                can_clique[c] = can_clique[c] && cq;
                can_indep[c] = can_indep[c] && id;
            } else {
                can_clique[c] = 1;
                can_indep[c] = 1;
            }
            if (can_clique[c] || can_indep[c]) {
                assign[v] = c;
                rec(v + 1, std::max(used, c + 1));
                assign[v] = -1;
            }
            if (c < used) {
                can_clique[c] = save_cq;
                can_indep[c] = save_id;
            }
            if (found)
                return;
        }
    }
};

} // namespace

WidthResult threshold_width(const Graph& g, int max_k) {
    if (max_k < 1)
        throw std::invalid_argument("threshold_width: max_k must be >= 1");
    if (g.order() == 0) {
        // empty product over a 1-vertex digraph
        return {1, ThresholdRepresentation{Digraph(1), {}, {}}, {{}}};
    }
    for (int k = 1; k <= std::min(max_k, g.order()); ++k) {
        PartitionSearch s;
        s.g = &g;
        s.n = g.order();
        s.k = k;
        s.assign.assign(s.n, -1);
        s.can_clique.assign(k, 0);
        s.can_indep.assign(k, 0);
        s.rec(0, 0);
        if (s.found)
            return std::move(*s.found);
    }
    return {std::nullopt, std::nullopt, {}};
}

std::optional<ThresholdRepresentation> is_h_threshold(const Graph& g, const Digraph& h) {
    int n = g.order(), k = h.order();
    if (n == 0)
        return ThresholdRepresentation{h, {}, {}};
    std::vector<int> cls(n, 0); // 0 = unassigned, else 1..k
    std::vector<int> order;
    std::unordered_set<std::string> dead;
    auto state_key = [&]() { return std::string(cls.begin(), cls.end()); };

    auto dfs = [&](auto&& self, int placed) -> bool {
        if (placed == n)
            return true;
        std::string key = state_key();
        if (dead.count(key))
            return false;
        for (int v = 0; v < n; ++v) {
            if (cls[v])
                continue;
            for (int c = 1; c <= k; ++c) {
                bool ok = true;
                for (int u : order)
                    if (g.adjacent(u, v) != h.arc(cls[u] - 1, c - 1)) {
                        ok = false;
                        break;
                    }
                if (!ok)
                    continue;
                cls[v] = c;
                order.push_back(v);
                if (self(self, placed + 1))
                    return true;
                order.pop_back();
                cls[v] = 0;
            }
        }
        dead.insert(std::move(key));
        return false;
    };
    if (!dfs(dfs, 0))
        return std::nullopt;
    ThresholdRepresentation rep;
    rep.h = h;
    rep.vertex_order = order;
    for (int v : order)
        rep.sequence.push_back(cls[v]);
    return rep;
}

bool is_threshold(const Graph& g) {
    int n = g.order();
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n, 0);
    for (int v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    int remaining = n;
    while (remaining > 0) {
        int pick = -1;
        for (int v = 0; v < n && pick == -1; ++v)
            if (alive[v] && (deg[v] == 0 || deg[v] == remaining - 1))
                pick = v;
        if (pick == -1)
            return false;
        alive[pick] = 0;
        --remaining;
        for (int u = 0; u < n; ++u)
            if (alive[u] && g.adjacent(pick, u))
                --deg[u];
    }
    return true;
}

namespace {

bool side_chain_ordered(const Graph& g, const std::vector<int>& side,
                        const std::vector<int>& other) {
    std::vector<std::vector<int>> nbhd;
    nbhd.reserve(side.size());
    for (int v : side)
        nbhd.push_back(sorted_cross_neighborhood(g, v, other));
    std::sort(nbhd.begin(), nbhd.end(),
              [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (size_t t = 0; t + 1 < nbhd.size(); ++t)
        if (!includes_sorted(nbhd[t], nbhd[t + 1]))
            return false;
    return true;
}

} // namespace

bool is_difference(const Graph& g) {
    BipartiteResult b = two_color_bipartite(g);
    if (!b.coloring)
        return false;
    std::vector<int> a_side, b_side;
    for (int v = 0; v < g.order(); ++v)
        ((*b.coloring)[v] == 0 ? a_side : b_side).push_back(v);
    return side_chain_ordered(g, a_side, b_side) && side_chain_ordered(g, b_side, a_side);
}

namespace {

// Split partition of a threshold graph: universal peels to the clique side,
// isolated to the independent side.
std::vector<std::vector<int>> threshold_split_partition(const Graph& g) {
    int n = g.order();
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n, 0);
    for (int v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    std::vector<int> clique_side, indep_side;
    int remaining = n;
    while (remaining > 0) {
        int pick = -1;
        bool universal = false;
        for (int v = 0; v < n && pick == -1; ++v) {
            if (!alive[v])
                continue;
            if (deg[v] == remaining - 1 && remaining > 1) {
                pick = v;
                universal = true;
            } else if (deg[v] == 0) {
                pick = v;
            }
        }
        if (pick == -1)
            throw std::logic_error("threshold_split_partition: not a threshold graph");
        (universal ? clique_side : indep_side).push_back(pick);
        alive[pick] = 0;
        --remaining;
        for (int u = 0; u < n; ++u)
            if (alive[u] && g.adjacent(pick, u))
                --deg[u];
    }
    std::sort(clique_side.begin(), clique_side.end());
    std::sort(indep_side.begin(), indep_side.end());
    return {clique_side, indep_side};
}

std::vector<std::vector<int>> bipartition_parts(const Graph& g) {
    BipartiteResult b = two_color_bipartite(g);
    std::vector<int> a_side, b_side;
    for (int v = 0; v < g.order(); ++v)
        ((*b.coloring)[v] == 0 ? a_side : b_side).push_back(v);
    return {a_side, b_side};
}

} // namespace

Width2Result recognize_width2(const Graph& g) {
    int n = g.order();
    size_t m = g.edge_count();
    size_t full = static_cast<size_t>(n) * (n - 1) / 2;
    if (m == 0 || m == full) {
        Width2Result out;
        out.width_class = 1;
        out.route = m == 0 ? "empty" : "complete";
        Digraph h(1);
        if (m > 0)
            h.add_arc(0, 0);
        ThresholdRepresentation rep;
        rep.h = std::move(h);
        rep.sequence.assign(n, 1);
        for (int v = 0; v < n; ++v)
            rep.vertex_order.push_back(v);
        out.rep = std::move(rep);
        return out;
    }

    std::string route;
    std::vector<std::vector<int>> parts;
    Graph co = complement(g);
    if (is_threshold(g)) {
        route = "threshold";
        parts = threshold_split_partition(g);
    } else if (is_difference(g)) {
        route = "difference";
        parts = bipartition_parts(g);
    } else if (is_threshold(co)) {
        route = "co-threshold";
        parts = threshold_split_partition(co);
    } else if (is_difference(co)) {
        route = "co-difference";
        parts = bipartition_parts(co);
    } else {
        return {3, ">2", std::nullopt};
    }

    PartitionTest t = test_partition(g, parts);
    if (t.failed != Stage::Ok)
        throw std::logic_error("recognize_width2: structural partition failed the pipeline");
    return {2, route, std::move(t.rep)};
}

} // namespace hthresh
