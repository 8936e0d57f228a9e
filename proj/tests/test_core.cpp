#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lcf/generators.hpp"
#include "lcf/hypergraph.hpp"
#include "lcf/oracle.hpp"

using namespace lcf;

// Three edges 012, 123, 234 on five vertices: the small running example.
static Hypergraph e2() { return make_hypergraph(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}); }

TEST_CASE("triples canonicalize and validate") {
    CHECK(make_triple(4, 0, 2) == Triple{0, 2, 4});

    Hypergraph h = make_hypergraph(4, {{2, 1, 0}, {0, 1, 2}, {1, 2, 3}});
    CHECK(h.edge_count() == 2); // duplicates collapse after sorting
    CHECK(h.has_edge(0, 1, 2));
    CHECK(h.has_edge(3, 1, 2));
    CHECK_FALSE(h.has_edge(0, 1, 3));

    CHECK_THROWS_AS(make_hypergraph(3, {{0, 0, 1}}), DegenerateEdge);
    CHECK_THROWS_AS(make_hypergraph(3, {{0, 1, 3}}), VertexOutOfRange);
    CHECK_THROWS_AS(make_hypergraph(2, {{-1, 0, 1}}), VertexOutOfRange);
}

TEST_CASE("induced subhypergraphs relabel and lift") {
    Hypergraph h = e2();

    InducedSubhypergraph sub = induced(h, {0, 1, 2});
    REQUIRE(sub.graph.n() == 3);
    REQUIRE(sub.graph.edge_count() == 1);
    CHECK(sub.graph.has_edge(0, 1, 2));

    // Ascending relabeling: original 1,2,3 become 0,1,2.
    InducedSubhypergraph mid = induced(h, {3, 1, 2});
    REQUIRE(mid.graph.edge_count() == 1);
    CHECK(mid.graph.has_edge(0, 1, 2));
    CHECK(mid.lift(0) == 1);
    CHECK(mid.lift(2) == 3);
    CHECK(mid.to_induced.at(3) == 2);

    CHECK(induced(h, {}).graph.n() == 0);
    CHECK_THROWS_AS(induced(h, {0, 7}), VertexOutOfRange);

    // Independence commutes with restriction.
    CHECK(is_independent(h, {0, 3}) ==
          is_independent(induced(h, {0, 3, 4}).graph, {0, 1}));
}

TEST_CASE("independence is the no-edge-inside predicate") {
    Hypergraph k5 = complete_k53(1);
    CHECK(is_independent(k5, {0, 4}));
    CHECK(is_independent(k5, {}));
    CHECK_FALSE(is_independent(k5, {0, 1, 2}));

    CHECK(is_independent(e2(), {0, 1, 3}));
    CHECK_FALSE(is_independent(e2(), {1, 2, 3}));
    CHECK_THROWS_AS(is_independent(e2(), {9}), VertexOutOfRange);
}

TEST_CASE("link graphs collect the pairs through a vertex") {
    LinkGraph l0 = link_graph(complete_k53(1), 0);
    CHECK(l0.pairs.size() == 6); // complete graph on the other four vertices
    for (const Pair& p : l0.pairs) {
        CHECK(p[0] != 0);
        CHECK(p[1] != 0);
    }

    LinkGraph l4 = link_graph(e2(), 4);
    REQUIRE(l4.pairs.size() == 1);
    CHECK(l4.pairs[0] == Pair{2, 3});

    CHECK(link_graph(Hypergraph(3, {}), 0).pairs.empty());
    CHECK_THROWS_AS(link_graph(e2(), 5), VertexOutOfRange);
}

TEST_CASE("maximum matching on small explicit graphs") {
    auto graph_of = [](int n, std::vector<Pair> pairs) {
        LinkGraph g;
        g.n = n;
        g.pairs = std::move(pairs);
        std::sort(g.pairs.begin(), g.pairs.end());
        return g;
    };

    CHECK(maximum_matching(graph_of(4, {})).size() == 0);
    CHECK(maximum_matching(graph_of(4, {{2, 3}})).size() == 1);
    // Path a-b-c-d: two disjoint pairs.
    CHECK(maximum_matching(graph_of(4, {{0, 1}, {1, 2}, {2, 3}})).size() == 2);
    // Odd cycles: a 5-cycle holds 2 disjoint pairs, a 7-cycle 3.
    CHECK(maximum_matching(graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})).size() == 2);
    CHECK(maximum_matching(
              graph_of(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 6}}))
              .size() == 3);
    // Two triangles joined by a bridge: the classic blossom shape, matching 3.
    CHECK(maximum_matching(graph_of(
                               6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}))
              .size() == 3);

    // The returned pairs really form a matching inside the graph.
    LinkGraph g = graph_of(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {1, 4}});
    Matching m = maximum_matching(g);
    CHECK(m.size() == 3);
    std::vector<char> hit(6, 0);
    for (const Pair& p : m.pairs) {
        CHECK(std::binary_search(g.pairs.begin(), g.pairs.end(), p));
        CHECK_FALSE(hit[static_cast<size_t>(p[0])]);
        CHECK_FALSE(hit[static_cast<size_t>(p[1])]);
        hit[static_cast<size_t>(p[0])] = hit[static_cast<size_t>(p[1])] = 1;
    }
}

TEST_CASE("maximum matching agrees with the exhaustive oracle") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        LinkGraph g;
        g.n = n;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                if (rng() % 3 == 0) g.pairs.push_back({a, b});
        if (g.pairs.size() > 12) {
            g.pairs.resize(12);
        }
        std::sort(g.pairs.begin(), g.pairs.end());
        CHECK(maximum_matching(g).size() == oracle::brute_matching(g));
    }
}

TEST_CASE("strong degrees on the named families") {
    Hypergraph k5 = complete_k53(1);
    for (Vertex v = 0; v < 5; ++v) CHECK(strong_degree(k5, v) == 2);

    // Cyclically consecutive triples on {0..4} plus both extras joined to
    // every cycle vertex: each cycle vertex reaches matching 3, while the
    // link of an extra is a star through the other extra, so matching 1.
    Hypergraph tight = tight_two_exceptions(5);
    for (Vertex i = 0; i < 5; ++i) CHECK(strong_degree(tight, i) == 3);
    CHECK(strong_degree(tight, 5) == 1);
    CHECK(strong_degree(tight, 6) == 1);

    CHECK(strong_degree(e2(), 0) == 1);
    CHECK(strong_degree(e2(), 2) == 2);
    CHECK(strong_degree(Hypergraph(4, {}), 0) == 0);
}

TEST_CASE("minimum strong degree with exceptions") {
    Hypergraph tight = tight_two_exceptions(5);
    MinStrongDegree d0 = min_strong_degree(tight, 0);
    CHECK(d0.value == 1);
    CHECK(d0.excluded.empty());

    MinStrongDegree d1 = min_strong_degree(tight, 1);
    CHECK(d1.value == 1);
    CHECK(d1.excluded == std::vector<Vertex>{5});

    // Excluding both extras lifts the minimum to the cycle vertices' 3.
    MinStrongDegree d2 = min_strong_degree(tight, 2);
    CHECK(d2.value == 3);
    CHECK(d2.excluded == std::vector<Vertex>{5, 6});

    CHECK(min_strong_degree(Hypergraph(3, {}), 0).value == 0);
    CHECK(min_strong_degree(complete_k53(1), 0).value == 2);

    // strong_degree(v) is 0 exactly on isolated vertices and never exceeds
    // the number of edges through v.
    Hypergraph h = e2();
    for (Vertex v = 0; v < h.n(); ++v) {
        int incident = 0;
        for (const Triple& e : h.edges())
            if (e[0] == v || e[1] == v || e[2] == v) ++incident;
        CHECK(strong_degree(h, v) <= incident);
        CHECK((strong_degree(h, v) == 0) == (incident == 0));
    }
}
