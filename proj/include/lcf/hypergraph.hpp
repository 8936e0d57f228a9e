#pragma once

// 3-uniform hypergraphs on dense 0-based vertices, their induced
// subhypergraphs, link graphs, and the strong degree d+(v) = size of a
// maximum matching in the link of v.
//
// All types are immutable after construction; every operation is a pure
// function, so values can be shared freely across threads.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lcf/errors.hpp"

namespace lcf {

using Vertex = int;
using Triple = std::array<Vertex, 3>; // always sorted ascending
using Pair = std::array<Vertex, 2>;   // always sorted ascending

inline Triple make_triple(Vertex a, Vertex b, Vertex c) {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

inline Pair make_pair_sorted(Vertex a, Vertex b) {
    return a < b ? Pair{a, b} : Pair{b, a};
}

class Hypergraph {
public:
    Hypergraph() = default;

    // Canonicalizes (sorts within and across triples) and deduplicates.
    // Rejects out-of-range vertices and triples with a repeated vertex.
    Hypergraph(int n, std::vector<Triple> triples) : n_(n) {
        if (n < 0) throw VertexOutOfRange("vertex count must be nonnegative");
        for (Triple& t : triples) {
            std::sort(t.begin(), t.end());
            if (t[0] < 0 || t[2] >= n)
                throw VertexOutOfRange("vertex " + std::to_string(t[0] < 0 ? t[0] : t[2]) +
                                       " outside [0," + std::to_string(n) + ")");
            if (t[0] == t[1] || t[1] == t[2])
                throw DegenerateEdge("repeated vertex in triple {" + std::to_string(t[0]) + "," +
                                     std::to_string(t[1]) + "," + std::to_string(t[2]) + "}");
        }
        std::sort(triples.begin(), triples.end());
        triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
        edges_ = std::move(triples);
    }

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Triple>& edges() const { return edges_; }

    bool has_edge(Vertex a, Vertex b, Vertex c) const {
        return std::binary_search(edges_.begin(), edges_.end(), make_triple(a, b, c));
    }
    bool has_edge(const Triple& t) const {
        return std::binary_search(edges_.begin(), edges_.end(), t);
    }

    bool operator==(const Hypergraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Triple> edges_; // sorted, unique
};

inline Hypergraph new_hypergraph(int n, std::vector<Triple> triples) {
    return Hypergraph(n, std::move(triples));
}

// Convenience for tests and generators: triples given as initializer lists.
inline Hypergraph make_hypergraph(int n, const std::vector<std::array<Vertex, 3>>& triples) {
    return Hypergraph(n, std::vector<Triple>(triples.begin(), triples.end()));
}

struct InducedSubhypergraph {
    Hypergraph graph;                 // on vertices 0..|keep|-1
    std::vector<Vertex> to_original;  // new index -> original vertex (ascending)
    std::unordered_map<Vertex, Vertex> to_induced; // original -> new index

    Vertex lift(Vertex v) const { return to_original.at(static_cast<size_t>(v)); }
};

// Edges fully inside `keep`, relabeled onto 0..|keep|-1 in ascending order of
// the original vertices. The mapping lifts results back.
inline InducedSubhypergraph induced(const Hypergraph& h, std::vector<Vertex> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (!keep.empty() && (keep.front() < 0 || keep.back() >= h.n()))
        throw VertexOutOfRange("induced: kept vertex outside [0,n)");
    InducedSubhypergraph out;
    out.to_original = keep;
    for (size_t i = 0; i < keep.size(); ++i)
        out.to_induced.emplace(keep[i], static_cast<Vertex>(i));
    std::vector<Triple> edges;
    for (const Triple& e : h.edges()) {
        auto a = out.to_induced.find(e[0]);
        auto b = out.to_induced.find(e[1]);
        auto c = out.to_induced.find(e[2]);
        if (a != out.to_induced.end() && b != out.to_induced.end() && c != out.to_induced.end())
            edges.push_back(Triple{a->second, b->second, c->second});
    }
    out.graph = Hypergraph(static_cast<int>(keep.size()), std::move(edges));
    return out;
}

// True iff no edge of h lies inside s.
inline bool is_independent(const Hypergraph& h, const std::vector<Vertex>& s) {
    std::vector<char> in(static_cast<size_t>(h.n()), 0);
    for (Vertex v : s) {
        if (v < 0 || v >= h.n()) throw VertexOutOfRange("is_independent: vertex outside [0,n)");
        in[static_cast<size_t>(v)] = 1;
    }
    for (const Triple& e : h.edges())
        if (in[e[0]] && in[e[1]] && in[e[2]]) return false;
    return true;
}

// The link of `center`: pairs {x,y} with {center,x,y} an edge.
struct LinkGraph {
    int n = 0;
    Vertex center = -1;
    std::vector<Pair> pairs; // sorted, unique; never contain `center`
};

inline LinkGraph link_graph(const Hypergraph& h, Vertex v) {
    if (v < 0 || v >= h.n()) throw VertexOutOfRange("link_graph: vertex outside [0,n)");
    LinkGraph g;
    g.n = h.n();
    g.center = v;
    for (const Triple& e : h.edges()) {
        if (e[0] == v) g.pairs.push_back(Pair{e[1], e[2]});
        else if (e[1] == v) g.pairs.push_back(Pair{e[0], e[2]});
        else if (e[2] == v) g.pairs.push_back(Pair{e[0], e[1]});
    }
    std::sort(g.pairs.begin(), g.pairs.end());
    return g;
}

struct Matching {
    std::vector<Pair> pairs; // pairwise disjoint edges of the graph
    int size() const { return static_cast<int>(pairs.size()); }
};

Matching maximum_matching(const LinkGraph& g); // defined in matching.hpp

inline int strong_degree(const Hypergraph& h, Vertex v) {
    return maximum_matching(link_graph(h, v)).size();
}

struct MinStrongDegree {
    int value = 0;
    std::vector<Vertex> excluded; // smallest-d+ first, ties by index
};

// Largest d such that d+(v) >= d for all but at most `exceptions` vertices.
// Excludes the smallest-d+ vertices first, ties by index. If every vertex is
// excluded the value is 0.
inline MinStrongDegree min_strong_degree(const Hypergraph& h, int exceptions) {
    std::vector<std::pair<int, Vertex>> by_degree;
    by_degree.reserve(static_cast<size_t>(h.n()));
    for (Vertex v = 0; v < h.n(); ++v) by_degree.emplace_back(strong_degree(h, v), v);
    std::sort(by_degree.begin(), by_degree.end());
    MinStrongDegree out;
    const size_t skip = std::min<size_t>(static_cast<size_t>(std::max(exceptions, 0)),
                                         by_degree.size());
    for (size_t i = 0; i < skip; ++i) out.excluded.push_back(by_degree[i].second);
    out.value = skip < by_degree.size() ? by_degree[skip].first : 0;
    return out;
}

} // namespace lcf

#include "lcf/matching.hpp"
