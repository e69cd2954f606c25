#include "hthresh/obstructions.hpp"

#include "hthresh/threshold.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

namespace hthresh {

namespace {

struct InducedSearch {
    const Graph *host, *pat;
    std::vector<int> porder; // pattern vertices, high degree first
    std::vector<int> map;    // pattern vertex -> host vertex
    std::vector<char> used;

    bool place(size_t pos) {
        if (pos == porder.size())
            return true;
        int p = porder[pos];
        for (int cand = 0; cand < host->order(); ++cand) {
            if (used[cand] || host->degree(cand) < pat->degree(p))
                continue;
            bool ok = true;
            for (size_t q = 0; q < pos && ok; ++q)
                ok = pat->adjacent(p, porder[q]) == host->adjacent(cand, map[porder[q]]);
            if (!ok)
                continue;
            used[cand] = 1;
            map[p] = cand;
            if (place(pos + 1))
                return true;
            used[cand] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& pattern) {
    if (pattern.order() > g.order())
        return std::nullopt;
    InducedSearch s;
    s.host = &g;
    s.pat = &pattern;
    s.porder.resize(pattern.order());
    for (int v = 0; v < pattern.order(); ++v)
        s.porder[v] = v;
    std::stable_sort(s.porder.begin(), s.porder.end(), [&](int a, int b) {
        return pattern.degree(a) > pattern.degree(b);
    });
    s.map.assign(pattern.order(), -1);
    s.used.assign(g.order(), 0);
    if (!s.place(0))
        return std::nullopt;
    return s.map;
}

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 0 || n > 8)
        throw std::invalid_argument("enumerate_graphs: order out of range 0..8");
    std::vector<Graph> level{Graph(0)};
    for (int sz = 1; sz <= n; ++sz) {
        std::vector<Graph> next;
        std::unordered_set<std::string> seen;
        for (const Graph& parent : level) {
            int pn = parent.order();
            for (unsigned mask = 0; mask < (1u << pn); ++mask) {
                Graph g(pn + 1);
                for (int u = 0; u < pn; ++u) {
                    for (int v = u + 1; v < pn; ++v)
                        if (parent.adjacent(u, v))
                            g.add_edge(u, v);
                    if ((mask >> u) & 1)
                        g.add_edge(u, pn);
                }
                std::string key = canonical_key(g);
                if (seen.insert(std::move(key)).second)
                    next.push_back(canonical_form(g));
            }
        }
        level = std::move(next);
    }
    return level;
}

std::vector<std::pair<std::string, Graph>> named_obstructions() {
    auto from_edges = [](int n, std::initializer_list<std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [u, v] : edges)
            g.add_edge(u, v);
        return g;
    };
    std::vector<std::pair<std::string, Graph>> out;
    out.emplace_back("C5", from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
    out.emplace_back("P5", from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
    out.emplace_back("House", complement(out.back().second));
    out.emplace_back("P3+P2", from_edges(5, {{0, 1}, {1, 2}, {3, 4}}));
    out.emplace_back("co-(P3+P2)", complement(out.back().second));
    out.emplace_back("W4", from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}));
    out.emplace_back("co-W4", complement(out.back().second));
    out.emplace_back("Bull", from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}}));
    return out;
}

std::vector<Obstruction> mine_minimal_obstructions(int max_n, int jobs) {
    if (max_n > 7)
        throw std::invalid_argument("mine_minimal_obstructions: max_n over limit 7");
    if (jobs < 1)
        jobs = 1;

    std::vector<Graph> candidates;
    for (int n = 2; n <= max_n; ++n) {
        std::vector<Graph> graphs = enumerate_graphs(n);
        candidates.insert(candidates.end(), graphs.begin(), graphs.end());
    }

    std::vector<char> minimal(candidates.size(), 0);
    std::vector<std::vector<int>> deleted_class(candidates.size());
    auto work = [&](size_t begin, size_t end) {
        for (size_t idx = begin; idx < end; ++idx) {
            const Graph& g = candidates[idx];
            if (recognize_width2(g).width_class <= 2)
                continue;
            bool is_minimal = true;
            std::vector<int> classes;
            for (int v = 0; v < g.order(); ++v) {
                std::vector<int> rest;
                for (int u = 0; u < g.order(); ++u)
                    if (u != v)
                        rest.push_back(u);
                int wc = recognize_width2(induced_subgraph(g, rest)).width_class;
                classes.push_back(wc);
                if (wc > 2)
                    is_minimal = false;
            }
            if (is_minimal) {
                minimal[idx] = 1;
                deleted_class[idx] = std::move(classes);
            }
        }
    };
    if (jobs == 1) {
        work(0, candidates.size());
    } else {
        std::vector<std::thread> threads;
        size_t chunk = (candidates.size() + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            size_t begin = std::min(candidates.size(), t * chunk);
            size_t end = std::min(candidates.size(), (t + 1) * chunk);
            threads.emplace_back(work, begin, end);
        }
        for (auto& th : threads)
            th.join();
    }

    std::vector<Obstruction> out;
    auto named = named_obstructions();
    for (size_t idx = 0; idx < candidates.size(); ++idx) {
        if (!minimal[idx])
            continue;
        Obstruction o;
        o.graph = candidates[idx];
        o.key = canonical_key(o.graph);
        o.complement_key = canonical_key(complement(o.graph));
        o.name = "X/Y/Z candidate";
        for (const auto& [name, ng] : named)
            if (canonical_key(ng) == o.key)
                o.name = name;
        o.deleted_width_class = deleted_class[idx];
        out.push_back(std::move(o));
    }
    return out;
}

bool verify_obstruction_equivalence(int max_n, const std::vector<Obstruction>& obs) {
    for (int n = 0; n <= max_n; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            bool small_width = recognize_width2(g).width_class <= 2;
            bool hit = false;
            Graph co = complement(g);
            for (const Obstruction& o : obs) {
                if (contains_induced(g, o.graph) || contains_induced(co, o.graph)) {
                    hit = true;
                    break;
                }
            }
            if (small_width == hit)
                return false;
        }
    }
    return true;
}

} // namespace hthresh
