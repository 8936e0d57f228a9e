#pragma once

// Mixed trees and forests (2- and 3-element edges), skeletons, stars,
// opposite pairs, the edge swap, path/star-ending extraction, and vertex
// deletion. A mixed tree is built from a single edge by repeatedly adding
// edges that meet the current vertex set in exactly one vertex; a linear tree
// is the all-3-edge special case. The pair-expansion graph G(T) turns each
// edge into a clique; distances in G(T) define the pair of an edge opposite
// to a vertex.

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "lcf/errors.hpp"
#include "lcf/hypergraph.hpp"

namespace lcf {

using Edge = std::vector<Vertex>; // sorted; size 2 or 3

inline Edge triple_to_edge(const Triple& t) { return Edge(t.begin(), t.end()); }

struct MixedTree {
    std::vector<Vertex> vertices; // sorted union of the edges
    std::vector<Edge> edges;      // in build order
    std::vector<Vertex> attach;   // attach[i] = vertex edges[i] shares with the
                                  // earlier tree; attach[0] = -1 for the root

    bool contains(Vertex v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }
    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

struct MixedForest {
    std::vector<MixedTree> trees;
    std::vector<Vertex> isolated; // trivial one-vertex trees, sorted

    bool has_edge() const {
        for (const MixedTree& t : trees)
            if (!t.edges.empty()) return true;
        return false;
    }
};

namespace detail {

inline bool sorted_contains(const std::vector<Vertex>& vs, Vertex v) {
    return std::binary_search(vs.begin(), vs.end(), v);
}

inline int count_in(const Edge& e, const std::vector<Vertex>& vs, Vertex& last_hit) {
    int cnt = 0;
    for (Vertex v : e)
        if (sorted_contains(vs, v)) {
            last_hit = v;
            ++cnt;
        }
    return cnt;
}

inline std::vector<Vertex> edge_union(const std::vector<Edge>& edges) {
    std::vector<Vertex> out;
    for (const Edge& e : edges) out.insert(out.end(), e.begin(), e.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Canonical greedy rebuild: root at the lexicographically smallest edge, then
// repeatedly attach the smallest remaining edge meeting the tree in exactly
// one vertex. Succeeds for exactly the edge sets that form a mixed tree.
inline std::optional<MixedTree> rebuild_tree(std::vector<Edge> edges) {
    if (edges.empty()) return std::nullopt;
    std::sort(edges.begin(), edges.end());
    MixedTree t;
    t.edges.push_back(edges.front());
    t.attach.push_back(-1);
    t.vertices = edges.front();
    std::vector<char> used(edges.size(), 0);
    used[0] = 1;
    for (size_t added = 1; added < edges.size(); ++added) {
        bool found = false;
        for (size_t i = 1; i < edges.size() && !found; ++i) {
            if (used[i]) continue;
            Vertex hit = -1;
            if (count_in(edges[i], t.vertices, hit) != 1) continue;
            used[i] = 1;
            t.edges.push_back(edges[i]);
            t.attach.push_back(hit);
            std::vector<Vertex> merged;
            std::set_union(t.vertices.begin(), t.vertices.end(), edges[i].begin(),
                           edges[i].end(), std::back_inserter(merged));
            t.vertices = std::move(merged);
            found = true;
        }
        if (!found) return std::nullopt; // disconnected or overlapping remains
    }
    return t;
}

// Adjacency of the pair-expansion graph G(T), keyed by vertex.
inline std::map<Vertex, std::vector<Vertex>> pair_expansion(const MixedTree& t) {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (Vertex v : t.vertices) adj[v]; // vertices of 0-edge trees don't occur
    for (const Edge& e : t.edges)
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j) {
                adj[e[i]].push_back(e[j]);
                adj[e[j]].push_back(e[i]);
            }
    return adj;
}

inline std::map<Vertex, int> bfs_distances(const MixedTree& t, Vertex from) {
    auto adj = pair_expansion(t);
    std::map<Vertex, int> dist;
    dist[from] = 0;
    std::queue<Vertex> q;
    q.push(from);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex u : adj[v])
            if (!dist.count(u)) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
    }
    return dist;
}

inline bool valid_edge_shape(const Edge& e) {
    if (e.size() != 2 && e.size() != 3) return false;
    if (!std::is_sorted(e.begin(), e.end())) return false;
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) return false;
    return e.front() >= 0;
}

} // namespace detail

// True iff the build invariant holds as recorded: each non-root edge meets
// the union of its predecessors in exactly its attach vertex. With H given,
// additionally every 3-edge must be an edge of H.
inline bool validate_tree(const MixedTree& t, const Hypergraph* h = nullptr) {
    if (t.edges.empty()) return false;
    if (t.attach.size() != t.edges.size()) return false;
    if (t.attach[0] != -1) return false;
    for (const Edge& e : t.edges)
        if (!detail::valid_edge_shape(e)) return false;
    if (t.vertices != detail::edge_union(t.edges)) return false;
    std::vector<Vertex> seen = t.edges[0];
    for (size_t i = 1; i < t.edges.size(); ++i) {
        Vertex hit = -1;
        if (detail::count_in(t.edges[i], seen, hit) != 1) return false;
        if (hit != t.attach[i]) return false;
        std::vector<Vertex> merged;
        std::set_union(seen.begin(), seen.end(), t.edges[i].begin(), t.edges[i].end(),
                       std::back_inserter(merged));
        seen = std::move(merged);
    }
    if (h) {
        for (const Edge& e : t.edges)
            if (e.size() == 3 && !h->has_edge(Triple{e[0], e[1], e[2]})) return false;
    }
    return true;
}

// Maximal-by-inclusion linear tree containing `seed` inside `active`:
// repeatedly adds the lexicographically smallest H-edge within `active`
// meeting the tree in exactly one vertex.
inline MixedTree grow_skeleton(const Hypergraph& h, std::vector<Vertex> active,
                               const Triple& seed) {
    std::sort(active.begin(), active.end());
    active.erase(std::unique(active.begin(), active.end()), active.end());
    if (!h.has_edge(seed))
        throw SeedNotInActive("grow_skeleton: seed is not an edge of the hypergraph");
    for (Vertex v : seed)
        if (!detail::sorted_contains(active, v))
            throw SeedNotInActive("grow_skeleton: seed vertex " + std::to_string(v) +
                                  " is not active");
    MixedTree t;
    t.edges.push_back(triple_to_edge(seed));
    t.attach.push_back(-1);
    t.vertices = t.edges[0];
    std::vector<char> used(static_cast<size_t>(h.edge_count()), 0);
    for (;;) {
        bool grown = false;
        for (int i = 0; i < h.edge_count() && !grown; ++i) {
            if (used[static_cast<size_t>(i)]) continue;
            const Triple& e = h.edges()[static_cast<size_t>(i)];
            if (e == seed) {
                used[static_cast<size_t>(i)] = 1;
                continue;
            }
            bool inside = true;
            for (Vertex v : e)
                if (!detail::sorted_contains(active, v)) inside = false;
            if (!inside) continue;
            Edge cand = triple_to_edge(e);
            Vertex hit = -1;
            if (detail::count_in(cand, t.vertices, hit) != 1) continue;
            used[static_cast<size_t>(i)] = 1;
            t.edges.push_back(cand);
            t.attach.push_back(hit);
            std::vector<Vertex> merged;
            std::set_union(t.vertices.begin(), t.vertices.end(), cand.begin(), cand.end(),
                           std::back_inserter(merged));
            t.vertices = std::move(merged);
            grown = true;
        }
        if (!grown) break;
    }
    return t;
}

namespace detail {

// Exact branch-and-bound for the maximum-vertex-count linear tree. Trees are
// enumerated once per root (their lexicographically smallest edge); at each
// node the smallest addable edge is either included or forbidden. The bound
// |V(T)| + 2 * (edges still compatible) prunes strictly dominated branches
// while keeping ties alive for the lexicographic tie-break.
struct SkeletonSearch {
    const std::vector<Triple>& cand;
    long long budget;
    long long nodes = 0;
    int root = 0;
    std::vector<char> in_tree, forbidden;
    std::vector<Vertex> tree_vertices; // sorted
    int best_count = 0;
    std::vector<Vertex> best_vertices;
    std::vector<int> best_edges; // sorted indices into cand

    SkeletonSearch(const std::vector<Triple>& c, long long b)
        : cand(c), budget(b), in_tree(c.size(), 0), forbidden(c.size(), 0) {}

    void spend() {
        if (++nodes > budget)
            throw SearchBudgetExceeded("maximum_skeleton: exceeded " + std::to_string(budget) +
                                       " search nodes");
    }

    void consider_leaf() {
        const int count = static_cast<int>(tree_vertices.size());
        if (count < best_count) return;
        std::vector<int> edges;
        for (size_t i = 0; i < cand.size(); ++i)
            if (in_tree[i]) edges.push_back(static_cast<int>(i));
        if (count > best_count || tree_vertices < best_vertices ||
            (tree_vertices == best_vertices && edges < best_edges)) {
            best_count = count;
            best_vertices = tree_vertices;
            best_edges = std::move(edges);
        }
    }

    void dfs() {
        spend();
        int pivot = -1;
        int live = 0;
        for (size_t i = static_cast<size_t>(root) + 1; i < cand.size(); ++i) {
            if (in_tree[i] || forbidden[i]) continue;
            int inside = 0;
            for (Vertex v : cand[i])
                if (sorted_contains(tree_vertices, v)) ++inside;
            if (inside >= 2) continue; // can never be attached in this branch
            ++live;
            if (inside == 1 && pivot < 0) pivot = static_cast<int>(i);
        }
        if (pivot < 0) {
            consider_leaf();
            return;
        }
        if (static_cast<int>(tree_vertices.size()) + 2 * live < best_count) return;
        // include the pivot
        in_tree[static_cast<size_t>(pivot)] = 1;
        std::vector<Vertex> saved = tree_vertices;
        std::vector<Vertex> merged;
        std::set_union(tree_vertices.begin(), tree_vertices.end(),
                       cand[static_cast<size_t>(pivot)].begin(),
                       cand[static_cast<size_t>(pivot)].end(), std::back_inserter(merged));
        tree_vertices = std::move(merged);
        dfs();
        tree_vertices = std::move(saved);
        in_tree[static_cast<size_t>(pivot)] = 0;
        // exclude the pivot
        forbidden[static_cast<size_t>(pivot)] = 1;
        dfs();
        forbidden[static_cast<size_t>(pivot)] = 0;
    }

    void run(int r) {
        root = r;
        in_tree[static_cast<size_t>(r)] = 1;
        tree_vertices.assign(cand[static_cast<size_t>(r)].begin(),
                             cand[static_cast<size_t>(r)].end());
        dfs();
        in_tree[static_cast<size_t>(r)] = 0;
        tree_vertices.clear();
    }
};

} // namespace detail

// Linear tree inside `active` with maximum vertex count (exact search, node
// budget); None when the induced subhypergraph has no edges. Ties go to the
// lexicographically smallest vertex set, then the smallest edge list.
inline std::optional<MixedTree> maximum_skeleton(const Hypergraph& h,
                                                 std::vector<Vertex> active,
                                                 long long budget = 10'000'000) {
    std::sort(active.begin(), active.end());
    active.erase(std::unique(active.begin(), active.end()), active.end());
    std::vector<Triple> cand;
    for (const Triple& e : h.edges()) {
        bool inside = true;
        for (Vertex v : e)
            if (!detail::sorted_contains(active, v)) inside = false;
        if (inside) cand.push_back(e);
    }
    if (cand.empty()) return std::nullopt;
    detail::SkeletonSearch search(cand, budget);
    for (int r = 0; r < static_cast<int>(cand.size()); ++r) search.run(r);
    std::vector<Edge> best;
    for (int i : search.best_edges) best.push_back(triple_to_edge(cand[static_cast<size_t>(i)]));
    auto rebuilt = detail::rebuild_tree(std::move(best));
    if (!rebuilt) throw Error("maximum_skeleton: internal rebuild failed");
    return rebuilt;
}

// The edges of t incident to v.
inline std::vector<Edge> star_at(const MixedTree& t, Vertex v) {
    if (!t.contains(v))
        throw VertexNotInTree("star_at: vertex " + std::to_string(v) + " is not in the tree");
    std::vector<Edge> out;
    for (const Edge& e : t.edges)
        if (std::binary_search(e.begin(), e.end(), v)) out.push_back(e);
    return out;
}

// The unique pair of e whose two vertices are equidistant from v in G(T):
// the third vertex of e is the one nearest to v (its gate), the other two
// sit one step further.
inline Pair opposite_pair(const MixedTree& t, Vertex v, const Edge& e) {
    if (!t.contains(v))
        throw VertexNotInTree("opposite_pair: vertex " + std::to_string(v) +
                              " is not in the tree");
    if (std::find(t.edges.begin(), t.edges.end(), e) == t.edges.end())
        throw Error("opposite_pair: edge is not in the tree");
    if (e.size() != 3) throw Error("opposite_pair: edge must have 3 vertices");
    auto dist = detail::bfs_distances(t, v);
    for (size_t i = 0; i < 3; ++i) {
        Vertex x = e[(i + 1) % 3], y = e[(i + 2) % 3];
        if (dist.at(x) == dist.at(y)) return make_pair_sorted(x, y);
    }
    throw NotAnOppositePair("opposite_pair: no equidistant pair (tree invariant broken)");
}

// The swap move: f = {v,a,b} with v in the tree, {a,b} off the star of v and
// opposite to v in some tree edge e; replaces e by f. The result is a linear
// tree on the same vertex set whenever the hypergraph has no linear cycle.
inline MixedTree swap(const MixedTree& t, const Triple& f, const Hypergraph& h) {
    if (!h.has_edge(f)) throw Error("swap: replacement is not an edge of the hypergraph");
    for (Vertex v : f) { // try each role assignment for v, ascending
        if (!t.contains(v)) continue;
        Edge ab;
        for (Vertex u : f)
            if (u != v) ab.push_back(u);
        if (!t.contains(ab[0]) || !t.contains(ab[1])) continue;
        bool off_star = true;
        for (const Edge& se : star_at(t, v))
            for (Vertex u : se)
                if (u == ab[0] || u == ab[1]) off_star = false;
        if (!off_star) continue;
        // the tree edge containing both of a,b is unique if it exists
        const Edge* target = nullptr;
        for (const Edge& e : t.edges)
            if (std::binary_search(e.begin(), e.end(), ab[0]) &&
                std::binary_search(e.begin(), e.end(), ab[1]))
                target = &e;
        if (!target || target->size() != 3) continue;
        if (opposite_pair(t, v, *target) != make_pair_sorted(ab[0], ab[1])) continue;
        std::vector<Edge> edges;
        for (const Edge& e : t.edges)
            if (e != *target) edges.push_back(e);
        edges.push_back(triple_to_edge(f));
        auto rebuilt = detail::rebuild_tree(std::move(edges));
        if (!rebuilt || rebuilt->vertices != t.vertices)
            throw Error("swap: result is not a linear tree on the same vertex set "
                        "(does the hypergraph have a linear cycle?)");
        return *rebuilt;
    }
    throw NotAnOppositePair("swap: no role assignment makes the pair opposite to v off its star");
}

struct Ending {
    enum class Kind { PathEnding, StarEnding, Degenerate, IsolatedOnly };
    Kind kind = Kind::IsolatedOnly;
    int tree = -1; // index into forest.trees; -1 for IsolatedOnly
    Edge h;        // pendant edge (PathEnding) or the lone edge (Degenerate)
    Edge g;        // the second edge of the path-ending
    Vertex b = -1; // connector g∩h, of degree exactly 2
    Vertex center = -1;             // StarEnding
    std::vector<Edge> pendant_edges; // StarEnding: all pendant edges at center
};

namespace detail {

struct PendantInfo {
    Edge edge;
    Vertex connector; // the unique vertex of degree >= 2
};

// Pendant edges of a tree with >= 2 edges: exactly one vertex of degree >= 2.
inline std::vector<PendantInfo> pendant_edges(const MixedTree& t) {
    std::map<Vertex, int> degree;
    for (const Edge& e : t.edges)
        for (Vertex v : e) ++degree[v];
    std::vector<PendantInfo> out;
    for (const Edge& e : t.edges) {
        Vertex conn = -1;
        int heavy = 0;
        for (Vertex v : e)
            if (degree[v] >= 2) {
                conn = v;
                ++heavy;
            }
        if (heavy == 1) out.push_back(PendantInfo{e, conn});
    }
    return out;
}

} // namespace detail

// Precedence: path-ending with a 3-edge h, then with a 2-edge h, then the
// degenerate lone-edge tree, then a star-ending; lexicographically smallest
// within each class. IsolatedOnly when no tree has an edge.
inline Ending find_ending(const MixedForest& f) {
    Ending best3, best2, star;
    std::optional<Edge> lone;
    int lone_tree = -1;
    for (int ti = 0; ti < static_cast<int>(f.trees.size()); ++ti) {
        const MixedTree& t = f.trees[static_cast<size_t>(ti)];
        if (t.edges.empty()) continue;
        if (t.edges.size() == 1) {
            if (!lone || t.edges[0] < *lone) {
                lone = t.edges[0];
                lone_tree = ti;
            }
            continue;
        }
        std::map<Vertex, int> degree;
        for (const Edge& e : t.edges)
            for (Vertex v : e) ++degree[v];
        auto pendants = detail::pendant_edges(t);
        for (const auto& p : pendants) {
            if (degree[p.connector] != 2) continue;
            const Edge* other = nullptr; // the second edge at the connector
            for (const Edge& e : t.edges)
                if (e != p.edge && std::binary_search(e.begin(), e.end(), p.connector))
                    other = &e;
            Ending cand;
            cand.kind = Ending::Kind::PathEnding;
            cand.tree = ti;
            cand.h = p.edge;
            cand.g = *other;
            cand.b = p.connector;
            Ending& best = p.edge.size() == 3 ? best3 : best2;
            if (best.kind == Ending::Kind::IsolatedOnly ||
                std::make_pair(cand.g, cand.h) < std::make_pair(best.g, best.h))
                best = cand;
        }
        std::map<Vertex, std::vector<Edge>> stars;
        for (const auto& p : pendants) stars[p.connector].push_back(p.edge);
        for (auto& [center, edges] : stars) {
            if (edges.size() < 2) continue;
            if (star.kind == Ending::Kind::IsolatedOnly || center < star.center) {
                star.kind = Ending::Kind::StarEnding;
                star.tree = ti;
                star.center = center;
                std::sort(edges.begin(), edges.end());
                star.pendant_edges = edges;
            }
        }
    }
    if (best3.kind == Ending::Kind::PathEnding) return best3;
    if (best2.kind == Ending::Kind::PathEnding) return best2;
    if (lone) {
        Ending d;
        d.kind = Ending::Kind::Degenerate;
        d.tree = lone_tree;
        d.h = *lone;
        return d;
    }
    if (star.kind == Ending::Kind::StarEnding) return star;
    return Ending{}; // IsolatedOnly
}

// Removes the vertices in d: edges shrink (dropped below 2 vertices), trees
// split into components, vertices losing every incidence become isolated.
inline MixedForest delete_vertices(const MixedForest& f, const std::vector<Vertex>& d) {
    std::set<Vertex> gone(d.begin(), d.end());
    MixedForest out;
    for (Vertex v : f.isolated)
        if (!gone.count(v)) out.isolated.push_back(v);
    for (const MixedTree& t : f.trees) {
        std::vector<Edge> kept;
        for (const Edge& e : t.edges) {
            Edge shrunk;
            for (Vertex v : e)
                if (!gone.count(v)) shrunk.push_back(v);
            if (shrunk.size() >= 2) kept.push_back(shrunk);
        }
        std::vector<Vertex> covered = detail::edge_union(kept);
        for (Vertex v : t.vertices)
            if (!gone.count(v) && !detail::sorted_contains(covered, v))
                out.isolated.push_back(v);
        // split the kept edges into connected components
        std::vector<char> assigned(kept.size(), 0);
        for (size_t i = 0; i < kept.size(); ++i) {
            if (assigned[i]) continue;
            std::vector<Edge> comp{kept[i]};
            assigned[i] = 1;
            std::vector<Vertex> verts = kept[i];
            bool grew = true;
            while (grew) {
                grew = false;
                for (size_t j = 0; j < kept.size(); ++j) {
                    if (assigned[j]) continue;
                    Vertex hit = -1;
                    if (detail::count_in(kept[j], verts, hit) == 0) continue;
                    assigned[j] = 1;
                    comp.push_back(kept[j]);
                    std::vector<Vertex> merged;
                    std::set_union(verts.begin(), verts.end(), kept[j].begin(), kept[j].end(),
                                   std::back_inserter(merged));
                    verts = std::move(merged);
                    grew = true;
                }
            }
            auto rebuilt = detail::rebuild_tree(std::move(comp));
            if (!rebuilt) throw Error("delete_vertices: component is not a mixed tree");
            out.trees.push_back(std::move(*rebuilt));
        }
    }
    std::sort(out.isolated.begin(), out.isolated.end());
    std::sort(out.trees.begin(), out.trees.end(),
              [](const MixedTree& a, const MixedTree& b) { return a.vertices < b.vertices; });
    return out;
}

} // namespace lcf
