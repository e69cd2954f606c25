#include "hthresh/threshold.hpp"

#include "hthresh/obstructions.hpp"
#include "util.hpp"

#include <doctest.h>

using namespace hthresh;
using namespace testutil;

namespace {

Digraph h0() {
    Digraph h(2);
    h.add_arc(0, 0);
    h.add_arc(0, 1);
    return h;
}

Digraph h_prime() {
    Digraph h(2);
    h.add_arc(0, 1);
    return h;
}

bool free_of(const Graph& g, std::initializer_list<Graph> patterns) {
    for (const Graph& p : patterns)
        if (contains_induced(g, p))
            return false;
    return true;
}

} // namespace

TEST_CASE("neighborhood ordering on fixed partitions") {
    // difference graph: star plus a pendant chain structure
    Graph diff = complete_bipartite(2, 3);
    auto ok = check_neighborhood_ordering(diff, {{0, 1}, {2, 3, 4}});
    CHECK(ok.certificate.has_value());

    // 2K2 with parts {a,c},{b,d}: incomparable neighborhoods
    Graph twok2 = from_edges(4, {{0, 1}, {2, 3}});
    auto bad = check_neighborhood_ordering(twok2, {{0, 2}, {1, 3}});
    CHECK(!bad.certificate.has_value());
    CHECK(bad.failure.i != -1);

    // single class covering K_n: always fine
    auto kn = check_neighborhood_ordering(complete(4), {{0, 1, 2, 3}});
    REQUIRE(kn.certificate.has_value());
    CHECK(kn.certificate->clique_flag[0]);

    // a part that is neither clique nor independent fails
    auto mixed = check_neighborhood_ordering(path(3), {{0, 1, 2}});
    CHECK(!mixed.certificate.has_value());
}

TEST_CASE("family, R and realization for the split partition") {
    // split graph: triangle {0,1,2} plus independent {3,4}, mixed adjacency
    Graph g = complete(3);
    Graph split(5);
    for (int u = 0; u < 3; ++u)
        for (int v = u + 1; v < 3; ++v)
            split.add_edge(u, v);
    split.add_edge(0, 3);
    split.add_edge(0, 4);
    split.add_edge(1, 3);
    (void)g;

    auto res = check_neighborhood_ordering(split, {{0, 1, 2}, {3, 4}});
    REQUIRE(res.certificate.has_value());
    Family s = build_family(*res.certificate);
    CHECK(s.proper());
    // mixed adjacency between the two classes: each side names the other once
    CHECK(s.x[0][0].size() + s.x[0][1].size() == 1);
    CHECK(s.x[1][0].size() + s.x[1][1].size() == 1);

    Graph r = build_R(s);
    CHECK(r.order() == 4);
    auto real = realize_family(s);
    REQUIRE(real.d.has_value());
    // exactly one cross arc, no loops
    CHECK(real.d->arc_count() == 1);
    CHECK(real.d->arc(0, 1) != real.d->arc(1, 0));

    auto all = all_realizations(s);
    CHECK(all.size() == 2); // the arc or its reversal
}

TEST_CASE("all-empty family realizes arcless") {
    Family s;
    s.k = 2;
    s.x.resize(2);
    CHECK(s.proper());
    Graph r = build_R(s);
    CHECK(r.order() == 4);
    CHECK(r.edge_count() == 2); // just the intra-class slot pairs
    auto real = realize_family(s);
    REQUIRE(real.d.has_value());
    CHECK(real.d->arc_count() == 0);
}

TEST_CASE("test_partition on K_n with a single class") {
    auto res = test_partition(complete(4), {{0, 1, 2, 3}});
    REQUIRE(res.rep.has_value());
    CHECK(res.rep->h.order() == 1);
    CHECK(res.rep->h.loop(0));
    CHECK(canonical_key(expand_representation(res.rep->h, res.rep->sequence)) ==
          canonical_key(complete(4)));
}

TEST_CASE("test_partition succeeds on P4 with the two-edge partition") {
    Graph p4 = path(4);
    // {0,1} and {2,3} are both cliques with chained cross-neighborhoods;
    // the split partition {1,2}/{0,3} fails: cross-neighborhoods {0} vs {3}
    // are incomparable
    auto bad = test_partition(p4, {{1, 2}, {0, 3}});
    CHECK(bad.failed == Stage::Ordering);
    auto res = test_partition(p4, {{0, 1}, {2, 3}});
    REQUIRE(res.rep.has_value());
    CHECK(canonical_key(expand_representation(res.rep->h, res.rep->sequence)) ==
          canonical_key(p4));
}

TEST_CASE("C5 fails every 2-partition") {
    Graph c5 = cycle(5);
    for (unsigned mask = 0; mask < 32; ++mask) {
        std::vector<std::vector<int>> parts(2);
        for (int v = 0; v < 5; ++v)
            parts[(mask >> v) & 1].push_back(v);
        if (parts[0].empty() || parts[1].empty())
            continue;
        CHECK(test_partition(c5, parts).failed != Stage::Ok);
    }
}

TEST_CASE("threshold width on the landmark graphs") {
    auto check_width = [](const Graph& g, int expect) {
        WidthResult r = threshold_width(g, 3);
        REQUIRE(r.width.has_value());
        CHECK(*r.width == expect);
        REQUIRE(r.rep.has_value());
        CHECK(canonical_key(expand_representation(r.rep->h, r.rep->sequence)) ==
              canonical_key(g));
    };
    check_width(complete(5), 1);
    check_width(Graph(4), 1);
    check_width(path(4), 2);
    check_width(cycle(4), 2);
    check_width(cycle(5), 3);

    WidthResult over = threshold_width(cycle(5), 2);
    CHECK(!over.width.has_value());
}

TEST_CASE("empty graph has width 1 by convention") {
    WidthResult r = threshold_width(Graph(0), 3);
    REQUIRE(r.width.has_value());
    CHECK(*r.width == 1);
}

TEST_CASE("is_h_threshold on complete bipartite graphs") {
    Digraph sym(2);
    sym.add_arc(0, 1);
    sym.add_arc(1, 0);
    auto rep = is_h_threshold(complete_bipartite(2, 3), sym);
    REQUIRE(rep.has_value());
    CHECK(canonical_key(expand_representation(rep->h, rep->sequence)) ==
          canonical_key(complete_bipartite(2, 3)));

    // C5 admits no 2-vertex H at all
    for (const Digraph& h : all_digraphs(2))
        CHECK(!is_h_threshold(cycle(5), h).has_value());
}

TEST_CASE("threshold recognizer") {
    CHECK(is_threshold(complete_bipartite(1, 3))); // star
    CHECK(!is_threshold(path(4)));
    CHECK(is_threshold(Graph(1)));
    CHECK(!is_threshold(from_edges(4, {{0, 1}, {2, 3}}))); // 2K2
    CHECK(!is_threshold(cycle(4)));
}

TEST_CASE("threshold matches the forbidden-subgraph oracle") {
    Graph twok2 = from_edges(4, {{0, 1}, {2, 3}});
    for (int n = 0; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n))
            CHECK(is_threshold(g) == free_of(g, {twok2, cycle(4), path(4)}));
}

TEST_CASE("difference recognizer") {
    CHECK(is_difference(complete_bipartite(3, 2)));
    CHECK(!is_difference(from_edges(4, {{0, 1}, {2, 3}}))); // 2K2
    CHECK(is_difference(from_edges(2, {{0, 1}})));
    CHECK(is_difference(Graph(3)));
    CHECK(!is_difference(cycle(6)));
    CHECK(is_difference(path(4)));
    CHECK(!is_difference(complete(3)));
}

TEST_CASE("difference equals H'-threshold on small graphs") {
    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n))
            CHECK(is_difference(g) == is_h_threshold(g, h_prime()).has_value());
}

TEST_CASE("threshold equals H0-threshold on small graphs") {
    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n))
            CHECK(is_threshold(g) == is_h_threshold(g, h0()).has_value());
}

TEST_CASE("recognize_width2 on the landmark graphs") {
    CHECK(recognize_width2(complete(3)).width_class == 1);
    CHECK(recognize_width2(Graph(2)).width_class == 1);

    Width2Result c4 = recognize_width2(cycle(4));
    CHECK(c4.width_class == 2);
    CHECK(c4.route == "difference");
    REQUIRE(c4.rep.has_value());
    CHECK(canonical_key(expand_representation(c4.rep->h, c4.rep->sequence)) ==
          canonical_key(cycle(4)));

    Graph bull = from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}});
    CHECK(recognize_width2(bull).width_class == 3);
}

TEST_CASE("recognize_width2 synthesizes a valid witness on every route") {
    for (int n = 0; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            Width2Result r = recognize_width2(g);
            if (r.width_class <= 2) {
                REQUIRE(r.rep.has_value());
                CHECK(canonical_key(expand_representation(r.rep->h, r.rep->sequence)) ==
                      canonical_key(g));
            }
        }
}
