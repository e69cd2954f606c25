#include "hthresh/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace hthresh {

// --- graph6 ---

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

int decode_byte(char c) {
    unsigned char b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
        throw ParseError("graph6: byte out of range 63..126");
    return b - 63;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.substr(0, kGraph6Header.size()) == kGraph6Header)
        text.remove_prefix(kGraph6Header.size());
    if (text.empty())
        throw ParseError("graph6: empty input");

    size_t pos = 0;
    long long n;
    int first = decode_byte(text[pos]);
    if (first < 63) {
        n = first;
        pos = 1;
    } else {
        if (text.size() < 4)
            throw ParseError("graph6: truncated length header");
        if (decode_byte(text[1]) == 63) {
            if (text.size() < 8)
                throw ParseError("graph6: truncated length header");
            n = 0;
            for (int i = 2; i < 8; ++i)
                n = (n << 6) | decode_byte(text[i]);
            pos = 8;
        } else {
            n = 0;
            for (int i = 1; i < 4; ++i)
                n = (n << 6) | decode_byte(text[i]);
            pos = 4;
        }
    }
    if (n > 100000)
        throw ParseError("graph6: graph too large");

    long long bits = n * (n - 1) / 2;
    long long bytes = (bits + 5) / 6;
    if (static_cast<long long>(text.size()) - static_cast<long long>(pos) != bytes)
        throw ParseError("graph6: wrong data length");

    Graph g(static_cast<int>(n));
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = decode_byte(text[pos + bit / 6]);
            if ((byte >> (5 - bit % 6)) & 1)
                g.add_edge(u, v);
        }
    }
    // trailing padding bits must be zero
    for (long long b = bits; b < bytes * 6; ++b) {
        int byte = decode_byte(text[pos + b / 6]);
        if ((byte >> (5 - b % 6)) & 1)
            throw ParseError("graph6: nonzero trailing bits");
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw std::invalid_argument("graph6: graph too large to encode");
    }
    long long bits = static_cast<long long>(n) * (n - 1) / 2;
    long long bytes = (bits + 5) / 6;
    std::vector<int> data(bytes, 0);
    long long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.adjacent(u, v))
                data[bit / 6] |= 1 << (5 - bit % 6);
    for (int b : data)
        out.push_back(static_cast<char>(b + 63));
    return out;
}

// --- digraph / partitioned graph line formats ---

namespace {

std::vector<std::string> nonempty_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    std::istringstream in{std::string(text)};
    while (std::getline(in, cur)) {
        while (!cur.empty() && (cur.back() == '\r' || cur.back() == ' '))
            cur.pop_back();
        if (!cur.empty())
            lines.push_back(cur);
    }
    return lines;
}

} // namespace

Digraph parse_digraph(std::string_view text) {
    auto lines = nonempty_lines(text);
    if (lines.empty())
        throw ParseError("digraph: missing vertex count");
    int k;
    try {
        size_t used;
        k = std::stoi(lines[0], &used);
        if (used != lines[0].size())
            throw ParseError("digraph: bad vertex count line");
    } catch (const std::logic_error&) {
        throw ParseError("digraph: bad vertex count line");
    }
    if (k < 0)
        throw ParseError("digraph: negative vertex count");
    Digraph d(k);
    for (size_t l = 1; l < lines.size(); ++l) {
        std::istringstream in(lines[l]);
        int i, j;
        if (!(in >> i >> j))
            throw ParseError("digraph: bad arc line: " + lines[l]);
        std::string rest;
        if (in >> rest)
            throw ParseError("digraph: trailing tokens on arc line: " + lines[l]);
        if (i < 1 || i > k || j < 1 || j > k)
            throw ParseError("digraph: arc endpoint out of range: " + lines[l]);
        if (d.arc(i - 1, j - 1))
            throw ParseError("digraph: duplicate arc: " + lines[l]);
        d.add_arc(i - 1, j - 1);
    }
    return d;
}

std::string write_digraph(const Digraph& d) {
    std::ostringstream out;
    out << d.order() << "\n";
    for (int i = 0; i < d.order(); ++i)
        for (int j = 0; j < d.order(); ++j)
            if (d.arc(i, j))
                out << i + 1 << " " << j + 1 << "\n";
    return out.str();
}

PartitionedGraph parse_partitioned(std::string_view text) {
    auto lines = nonempty_lines(text);
    if (lines.size() < 3)
        throw ParseError("partitioned graph: expected graph6, class count and class line");
    Graph g = parse_graph6(lines[0]);
    int k;
    try {
        k = std::stoi(lines[1]);
    } catch (const std::logic_error&) {
        throw ParseError("partitioned graph: bad class count");
    }
    std::vector<int> classes;
    std::istringstream in(lines[2]);
    int c;
    while (in >> c)
        classes.push_back(c);
    if (static_cast<int>(classes.size()) != g.order())
        throw ParseError("partitioned graph: class line length mismatch");
    for (int ci : classes)
        if (ci < 1 || ci > k)
            throw ParseError("partitioned graph: class id out of range");
    return PartitionedGraph(std::move(g), k, std::move(classes));
}

std::string write_partitioned(const PartitionedGraph& t) {
    std::ostringstream out;
    out << write_graph6(t.graph()) << "\n" << t.class_count() << "\n";
    for (int v = 0; v < t.order(); ++v)
        out << (v ? " " : "") << t.class_of(v);
    out << "\n";
    return out.str();
}

// --- basic operations ---

Graph complement(const Graph& g) {
    Graph c(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                c.add_edge(u, v);
    return c;
}

Digraph complement_digraph(const Digraph& h) {
    Digraph c(h.order());
    for (int u = 0; u < h.order(); ++u)
        for (int v = 0; v < h.order(); ++v)
            if (!h.arc(u, v))
                c.add_arc(u, v);
    return c;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    Graph s(static_cast<int>(verts.size()));
    for (size_t a = 0; a < verts.size(); ++a)
        for (size_t b = a + 1; b < verts.size(); ++b)
            if (g.adjacent(verts[a], verts[b]))
                s.add_edge(static_cast<int>(a), static_cast<int>(b));
    return s;
}

PartitionedGraph induced_partitioned(const PartitionedGraph& t, const std::vector<int>& verts) {
    std::vector<int> classes;
    classes.reserve(verts.size());
    for (int v : verts)
        classes.push_back(t.class_of(v));
    return PartitionedGraph(induced_subgraph(t.graph(), verts), t.class_count(), std::move(classes));
}

// --- canonical form ---

namespace {

// Color refinement starting from class ids; returns stable colors whose
// order refines the class order (classes stay contiguous blocks).
std::vector<int> refine_colors(const PartitionedGraph& t) {
    int n = t.order();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v)
        color[v] = t.class_of(v) - 1;
    int ncolors = t.class_count();
    for (;;) {
        std::map<std::vector<int>, std::vector<int>> groups;
        for (int v = 0; v < n; ++v) {
            std::vector<int> sig{color[v]};
            std::vector<int> nb;
            for (int u = 0; u < n; ++u)
                if (t.graph().adjacent(v, u))
                    nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            sig.insert(sig.end(), nb.begin(), nb.end());
            groups[sig].push_back(v);
        }
        if (static_cast<int>(groups.size()) == ncolors)
            return color;
        ncolors = static_cast<int>(groups.size());
        int next = 0;
        for (const auto& [sig, verts] : groups) {
            for (int v : verts)
                color[v] = next;
            ++next;
        }
    }
}

struct CanonSearch {
    const Graph* g;
    int n;
    std::vector<std::vector<int>> cells; // vertices grouped by color, color order
    std::vector<int> cell_of_pos;        // position -> cell index
    std::vector<int> perm;               // position -> vertex
    std::vector<char> used;
    std::vector<char> best;              // upper-triangle bits, row-by-row per position
    std::vector<char> cur;
    bool have_best = false;

    void run() {
        perm.assign(n, -1);
        used.assign(n, 0);
        cur.assign(static_cast<size_t>(n) * (n - 1) / 2, 0);
        place(0, 0);
    }

    void place(int pos, size_t bit_base) {
        if (pos == n) {
            best = cur;
            have_best = true;
            return;
        }
        for (int v : cells[cell_of_pos[pos]]) {
            if (used[v])
                continue;
            // bits of column pos against already placed vertices
            bool worse = false, better = false;
            for (int q = 0; q < pos; ++q) {
                char b = g->adjacent(perm[q], v) ? 1 : 0;
                cur[bit_base + q] = b;
                if (have_best && !better) {
                    char bb = best[bit_base + q];
                    if (b > bb) {
                        worse = true;
                        break;
                    }
                    if (b < bb)
                        better = true;
                }
            }
            if (worse)
                continue;
            if (better) {
                // prefix strictly improves: everything below refreshes best
                have_best = false;
            }
            std::vector<char> saved_best;
            bool saved_have = have_best;
            if (better)
                saved_best = best;
            used[v] = 1;
            perm[pos] = v;
            place(pos + 1, bit_base + pos);
            used[v] = 0;
            if (better && !have_best) {
                // no completion happened (cannot occur, but keep state sane)
                best = std::move(saved_best);
                have_best = saved_have;
            }
        }
    }
};

} // namespace

std::string canonical_key(const PartitionedGraph& t, int limit) {
    int n = t.order();
    if (n > limit)
        throw std::invalid_argument("canonical_key: vertex count over limit");
    std::vector<int> color = refine_colors(t);
    int ncolors = n == 0 ? 0 : 1 + *std::max_element(color.begin(), color.end());

    CanonSearch s;
    s.g = &t.graph();
    s.n = n;
    s.cells.assign(ncolors, {});
    for (int v = 0; v < n; ++v)
        s.cells[color[v]].push_back(v);
    for (int c = 0; c < ncolors; ++c)
        for (size_t i = 0; i < s.cells[c].size(); ++i)
            s.cell_of_pos.push_back(c);
    s.run();

    std::string key;
    key.push_back(static_cast<char>(n));
    key.push_back(static_cast<char>(t.class_count()));
    std::vector<int> class_size(t.class_count(), 0);
    for (int v = 0; v < n; ++v)
        ++class_size[t.class_of(v) - 1];
    for (int sz : class_size)
        key.push_back(static_cast<char>(sz));
    char acc = 0;
    int nb = 0;
    for (char b : s.best) {
        acc = static_cast<char>((acc << 1) | b);
        if (++nb == 7) {
            key.push_back(static_cast<char>(acc + 32));
            acc = 0;
            nb = 0;
        }
    }
    if (nb)
        key.push_back(static_cast<char>((acc << (7 - nb)) + 32));
    return key;
}

std::string canonical_key(const Graph& g, int limit) {
    return canonical_key(PartitionedGraph(g, 1, std::vector<int>(g.order(), 1)), limit);
}

Graph canonical_form(const Graph& g, int limit) {
    int n = g.order();
    if (n > limit)
        throw std::invalid_argument("canonical_form: vertex count over limit");
    PartitionedGraph t(g, 1, std::vector<int>(n, 1));
    std::vector<int> color = refine_colors(t);
    int ncolors = n == 0 ? 0 : 1 + *std::max_element(color.begin(), color.end());
    CanonSearch s;
    s.g = &g;
    s.n = n;
    s.cells.assign(ncolors, {});
    for (int v = 0; v < n; ++v)
        s.cells[color[v]].push_back(v);
    for (int c = 0; c < ncolors; ++c)
        for (size_t i = 0; i < s.cells[c].size(); ++i)
            s.cell_of_pos.push_back(c);
    s.run();
    Graph out(n);
    size_t bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (s.best[bit])
                out.add_edge(u, v);
    return out;
}

// --- SCC (Tarjan) ---

namespace {

struct Tarjan {
    const Digraph* d;
    int n, counter = 0;
    std::vector<int> low, num, comp;
    std::vector<int> stack;
    std::vector<char> on_stack;
    std::vector<std::vector<int>> components;

    void dfs(int v) {
        low[v] = num[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
        for (int u = 0; u < n; ++u) {
            if (u == v || !d->arc(v, u))
                continue;
            if (num[u] == -1) {
                dfs(u);
                low[v] = std::min(low[v], low[u]);
            } else if (on_stack[u]) {
                low[v] = std::min(low[v], num[u]);
            }
        }
        if (low[v] == num[v]) {
            std::vector<int> scc;
            for (;;) {
                int u = stack.back();
                stack.pop_back();
                on_stack[u] = 0;
                comp[u] = static_cast<int>(components.size());
                scc.push_back(u);
                if (u == v)
                    break;
            }
            std::sort(scc.begin(), scc.end());
            components.push_back(std::move(scc));
        }
    }
};

} // namespace

Condensation scc_condensation(const Digraph& d) {
    Tarjan t;
    t.d = &d;
    t.n = d.order();
    t.low.assign(t.n, -1);
    t.num.assign(t.n, -1);
    t.comp.assign(t.n, -1);
    t.on_stack.assign(t.n, 0);
    for (int v = 0; v < t.n; ++v)
        if (t.num[v] == -1)
            t.dfs(v);

    // Tarjan completes components in reverse topological order; renumber so
    // that condensation arcs go from lower to higher ids.
    int nc = static_cast<int>(t.components.size());
    Condensation out;
    out.component_of.assign(t.n, -1);
    out.components.assign(nc, {});
    for (int v = 0; v < t.n; ++v)
        out.component_of[v] = nc - 1 - t.comp[v];
    for (int c = 0; c < nc; ++c)
        out.components[nc - 1 - c] = std::move(t.components[c]);
    out.condensation = Digraph(nc);
    for (int u = 0; u < t.n; ++u)
        for (int v = 0; v < t.n; ++v) {
            if (u == v || !d.arc(u, v))
                continue;
            int cu = out.component_of[u], cv = out.component_of[v];
            if (cu != cv && !out.condensation.arc(cu, cv))
                out.condensation.add_arc(cu, cv);
        }
    return out;
}

// --- topological sort with cycle witness ---

TopoResult topological_sort(const Digraph& d) {
    int n = d.order();
    for (int v = 0; v < n; ++v)
        if (d.loop(v))
            return {std::nullopt, {v}};
    std::vector<int> indeg(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && d.arc(u, v))
                ++indeg[v];
    std::vector<int> order;
    std::deque<int> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0)
            ready.push_back(v);
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop_front();
        order.push_back(v);
        for (int u = 0; u < n; ++u)
            if (u != v && d.arc(v, u) && --indeg[u] == 0)
                ready.push_back(u);
    }
    if (static_cast<int>(order.size()) == n)
        return {std::move(order), {}};

    // every leftover vertex keeps an in-arc from another leftover vertex, so
    // walking predecessors must revisit some vertex; the segment in between
    // is a directed cycle (reversed)
    std::vector<char> left(n, 1);
    for (int v : order)
        left[v] = 0;
    int start = 0;
    while (!left[start])
        ++start;
    std::vector<int> path;
    std::vector<int> seen_at(n, -1);
    int v = start;
    for (;;) {
        if (seen_at[v] != -1) {
            std::vector<int> cycle(path.begin() + seen_at[v], path.end());
            std::reverse(cycle.begin(), cycle.end());
            return {std::nullopt, std::move(cycle)};
        }
        seen_at[v] = static_cast<int>(path.size());
        path.push_back(v);
        for (int u = 0; u < n; ++u)
            if (left[u] && u != v && d.arc(u, v)) {
                v = u;
                break;
            }
    }
}

// --- bipartite 2-coloring with odd-cycle witness ---

BipartiteResult two_color_bipartite(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, -1), parent(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1)
            continue;
        color[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u = 0; u < n; ++u) {
                if (!g.adjacent(v, u))
                    continue;
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    parent[u] = v;
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    // odd cycle: paths to the common ancestor plus edge uv
                    std::vector<int> pv, pu;
                    for (int x = v; x != -1; x = parent[x])
                        pv.push_back(x);
                    for (int x = u; x != -1; x = parent[x])
                        pu.push_back(x);
                    while (pv.size() > 1 && pu.size() > 1 &&
                           pv[pv.size() - 2] == pu[pu.size() - 2]) {
                        pv.pop_back();
                        pu.pop_back();
                    }
                    std::vector<int> cycle(pv.begin(), pv.end());
                    for (size_t i = pu.size() - 1; i > 0;)
                        cycle.push_back(pu[--i]);
                    return {std::nullopt, std::move(cycle)};
                }
            }
        }
    }
    return {std::move(color), {}};
}

} // namespace hthresh
