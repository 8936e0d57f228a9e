#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "lcf/cycles.hpp"
#include "lcf/errors.hpp"
#include "lcf/hypergraph.hpp"

// Instance generators: fixed families with known properties plus seeded
// random corpora. All randomness comes from std::mt19937_64 driven through
// rejection sampling below, so a given (parameters, seed) pair produces a
// bit-identical hypergraph on every platform and standard library.

namespace lcf {

namespace detail {

// Uniform integer in [0, bound) via rejection sampling. Unlike
// std::uniform_int_distribution, this depends only on the mt19937_64 stream,
// which the standard pins down exactly.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / bound * bound;
    std::uint64_t r = rng();
    while (r >= limit) r = rng();
    return r % bound;
}

inline std::vector<Triple> all_triples(int n) {
    std::vector<Triple> out;
    for (Vertex a = 0; a + 2 < n; ++a)
        for (Vertex b = a + 1; b + 1 < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) out.push_back(Triple{a, b, c});
    return out;
}

} // namespace detail

// `copies` vertex-disjoint complete 3-uniform hypergraphs on 5 vertices each:
// 10 edges per block, n = 5·copies. Linear-cycle-free with exactly two
// independent vertices per block, so these sit exactly on the 2n/5 bound.
inline Hypergraph complete_k53(int copies) {
    if (copies < 1) throw BadLength("complete_k53: copies must be at least 1");
    std::vector<Triple> edges;
    for (int blk = 0; blk < copies; ++blk) {
        Vertex base = 5 * blk;
        for (Vertex a = 0; a < 3; ++a)
            for (Vertex b = a + 1; b < 4; ++b)
                for (Vertex c = b + 1; c < 5; ++c)
                    edges.push_back(Triple{base + a, base + b, base + c});
    }
    return Hypergraph(5 * copies, edges);
}

// All C(n-1, 2) triples through vertex 0: the densest linear-cycle-free
// hypergraph on n vertices.
inline Hypergraph full_star(int n) {
    if (n < 3) throw BadLength("full_star: n must be at least 3");
    std::vector<Triple> edges;
    for (Vertex i = 1; i + 1 < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.push_back(Triple{0, i, j});
    return Hypergraph(n, edges);
}

// The tight cycle on k vertices (all cyclically consecutive triples) plus two
// extra vertices k, k+1 joined to every cycle vertex: cycle-free, with strong
// degree 3 on the cycle and small strong degree only on the two extras. Shows
// that requiring d+ >= 3 with two exceptional vertices does not force a
// linear cycle.
inline Hypergraph tight_two_exceptions(int k) {
    if (k < 5 || k % 2 == 0)
        throw KMustBeOdd("tight_two_exceptions: k must be odd and at least 5");
    std::vector<Triple> edges;
    for (Vertex i = 0; i < k; ++i)
        edges.push_back(make_triple(i, (i + 1) % k, (i + 2) % k));
    for (Vertex i = 0; i < k; ++i) edges.push_back(make_triple(k, k + 1, i));
    return Hypergraph(k + 2, edges);
}

// The canonical linear path with k edges on 2k+1 vertices:
// {0,1,2}, {2,3,4}, {4,5,6}, ...
inline Hypergraph linear_path(int k) {
    if (k < 1) throw BadLength("linear_path: k must be at least 1");
    std::vector<Triple> edges;
    for (int i = 0; i < k; ++i)
        edges.push_back(Triple{2 * i, 2 * i + 1, 2 * i + 2});
    return Hypergraph(2 * k + 1, edges);
}

// The canonical linear cycle with k edges on 2k vertices: consecutive edges
// share one vertex and the last edge closes back on vertex 0.
inline Hypergraph linear_cycle_gen(int k) {
    if (k < 3) throw BadLength("linear_cycle_gen: k must be at least 3");
    std::vector<Triple> edges;
    for (int i = 0; i < k; ++i)
        edges.push_back(make_triple(2 * i, 2 * i + 1, (2 * i + 2) % (2 * k)));
    return Hypergraph(2 * k, edges);
}

// m distinct triples drawn uniformly from all C(n,3) candidates via a partial
// Fisher-Yates shuffle of the full triple list.
inline Hypergraph random_hypergraph(int n, int m, std::uint64_t seed) {
    std::vector<Triple> pool = detail::all_triples(n);
    if (m < 0 || m > static_cast<int>(pool.size()))
        throw TooManyEdges("random_hypergraph: m = " + std::to_string(m) +
                           " out of range, there are " + std::to_string(pool.size()) +
                           " triples on " + std::to_string(n) + " vertices");
    std::mt19937_64 rng(seed);
    for (int i = 0; i < m; ++i) {
        std::uint64_t j = i + detail::uniform_below(rng, pool.size() - static_cast<size_t>(i));
        std::swap(pool[static_cast<size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<size_t>(m));
    return Hypergraph(n, pool);
}

// Incremental cycle-free sampler: starting empty, proposes `attempts` uniform
// random triples and keeps each one iff the result still has no linear cycle.
// The output distribution is whatever this acceptance process induces (it is
// not uniform over cycle-free hypergraphs); the value is cheap, reproducible
// instances that grow toward maximal cycle-free examples.
inline Hypergraph random_cycle_free(int n, int attempts, std::uint64_t seed) {
    if (n > 12)
        throw CapExceeded("random_cycle_free: n = " + std::to_string(n) +
                          " exceeds the cap of 12 (every acceptance runs a cycle search)");
    std::vector<Triple> pool = detail::all_triples(n);
    std::mt19937_64 rng(seed);
    std::vector<Triple> edges;
    for (int t = 0; t < attempts && !pool.empty(); ++t) {
        const Triple& cand = pool[detail::uniform_below(rng, pool.size())];
        bool present = false;
        for (const Triple& e : edges)
            if (e == cand) {
                present = true;
                break;
            }
        if (present) continue;
        edges.push_back(cand);
        Hypergraph trial(n, edges);
        if (find_linear_cycle(trial)) edges.pop_back();
    }
    return Hypergraph(n, edges);
}

} // namespace lcf
