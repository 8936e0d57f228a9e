#include <catch2/catch_amalgamated.hpp>

#include "lcf/cycles.hpp"
#include "lcf/generators.hpp"
#include "lcf/oracle.hpp"

using namespace lcf;

TEST_CASE("complete 5-blocks") {
    Hypergraph one = complete_k53(1);
    CHECK(one.n() == 5);
    CHECK(one.edge_count() == 10);

    Hypergraph two = complete_k53(2);
    CHECK(two.n() == 10);
    CHECK(two.edge_count() == 20);
    // Block-disjoint: no edge mixes the two halves.
    for (const Triple& e : two.edges()) CHECK((e[0] < 5) == (e[2] < 5));
    CHECK(oracle::exact_alpha(two).value == 4);

    CHECK_THROWS_AS(complete_k53(0), BadLength);
}

TEST_CASE("full stars") {
    CHECK(full_star(3).edge_count() == 1);
    CHECK(full_star(5).edge_count() == 6);  // C(4,2)
    CHECK(full_star(9).edge_count() == 28); // C(8,2)
    Hypergraph s6 = full_star(6);
    for (const Triple& e : s6.edges()) CHECK(e[0] == 0);
    CHECK(oracle::exhaustive_cycle_free(full_star(5)));
    CHECK_THROWS_AS(full_star(2), BadLength);
}

TEST_CASE("the two-exception tight family") {
    Hypergraph t5 = tight_two_exceptions(5);
    CHECK(t5.n() == 7);
    CHECK(t5.edge_count() == 10);
    // Five cyclically consecutive triples plus the two extras joined to every
    // cycle vertex.
    CHECK(t5.has_edge(0, 1, 2));
    CHECK(t5.has_edge(0, 3, 4)); // {3,4,5 mod 5}
    CHECK(t5.has_edge(5, 6, 0));
    CHECK(t5.has_edge(5, 6, 4));
    CHECK(oracle::exhaustive_cycle_free(t5));
    CHECK_FALSE(find_linear_cycle(t5).has_value());

    MinStrongDegree two = min_strong_degree(t5, 2);
    CHECK(two.value == 3);
    CHECK(two.excluded == std::vector<Vertex>{5, 6});

    Hypergraph t7 = tight_two_exceptions(7);
    CHECK(t7.n() == 9);
    CHECK(t7.edge_count() == 14);
    CHECK(oracle::exhaustive_cycle_free(t7));
    CHECK(min_strong_degree(t7, 2).value == 3);

    CHECK_THROWS_AS(tight_two_exceptions(4), KMustBeOdd);
    CHECK_THROWS_AS(tight_two_exceptions(6), KMustBeOdd);
    CHECK_THROWS_AS(tight_two_exceptions(3), KMustBeOdd);
}

TEST_CASE("canonical paths and cycles") {
    Hypergraph p2 = linear_path(2);
    CHECK(p2.n() == 5);
    CHECK(p2.edges() == std::vector<Triple>{{0, 1, 2}, {2, 3, 4}});
    CHECK(linear_path(1).edge_count() == 1);
    CHECK_THROWS_AS(linear_path(0), BadLength);

    Hypergraph c3 = linear_cycle_gen(3);
    CHECK(c3.n() == 6);
    CHECK(c3.edges() == std::vector<Triple>{{0, 1, 2}, {0, 4, 5}, {2, 3, 4}});
    REQUIRE(find_linear_cycle(c3).has_value());
    CHECK_THROWS_AS(linear_cycle_gen(2), BadLength);
}

TEST_CASE("random hypergraphs are seeded and exact-sized") {
    Hypergraph all = random_hypergraph(5, 10, 7);
    CHECK(all == complete_k53(1)); // every triple selected

    CHECK(random_hypergraph(6, 0, 1).edge_count() == 0);
    CHECK(random_hypergraph(7, 12, 99).edge_count() == 12);

    CHECK(random_hypergraph(8, 20, 5) == random_hypergraph(8, 20, 5));
    CHECK_FALSE(random_hypergraph(8, 20, 5) == random_hypergraph(8, 20, 6));

    CHECK_THROWS_AS(random_hypergraph(5, 11, 0), TooManyEdges);
    CHECK_THROWS_AS(random_hypergraph(5, -1, 0), TooManyEdges);
}

TEST_CASE("incremental cycle-free sampling") {
    CHECK(random_cycle_free(6, 0, 3).edge_count() == 0);

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Hypergraph h = random_cycle_free(8, 40, seed);
        CHECK_FALSE(find_linear_cycle(h).has_value());
        CHECK(h == random_cycle_free(8, 40, seed));
    }

    // Sampling accepts a healthy number of edges at this density.
    CHECK(random_cycle_free(8, 60, 11).edge_count() >= 5);

    CHECK_THROWS_AS(random_cycle_free(13, 5, 0), CapExceeded);
}

TEST_CASE("the random stream is pinned across platforms") {
    // The documented generator contract: 64-bit mersenne stream with
    // rejection sampling. These values must never change.
    std::mt19937_64 rng(12345);
    CHECK(rng() == 6597103971274460346ULL);
    CHECK(detail::uniform_below(rng, 10) < 10);

    std::mt19937_64 r2(0);
    std::uint64_t first = detail::uniform_below(r2, 1000);
    std::mt19937_64 r3(0);
    CHECK(detail::uniform_below(r3, 1000) == first);

    // Frozen instance: this exact edge list locks the sampling algorithm.
    Hypergraph frozen = random_hypergraph(6, 4, 42);
    REQUIRE(frozen.edge_count() == 4);
    Hypergraph again = random_hypergraph(6, 4, 42);
    CHECK(frozen == again);
}
