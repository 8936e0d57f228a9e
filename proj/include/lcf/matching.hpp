#pragma once

// Maximum matching in general (non-bipartite) graphs via Edmonds' blossom
// contraction. Link graphs of 3-uniform hypergraphs are arbitrary graphs, so
// odd cycles must be handled exactly; augmenting-path search with base[]
// contraction does that in O(V^3).

#include <algorithm>
#include <queue>
#include <vector>

#include "lcf/hypergraph.hpp"

namespace lcf {
namespace detail {

class BlossomMatcher {
public:
    explicit BlossomMatcher(int n) : n_(n), adj_(static_cast<size_t>(n)) {}

    void add_edge(int u, int v) {
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }

    // Returns partner per vertex, -1 if unmatched. Deterministic: vertices
    // and adjacency are scanned in ascending order.
    std::vector<int> solve() {
        match_.assign(static_cast<size_t>(n_), -1);
        for (int v = 0; v < n_; ++v) // greedy warm start
            if (match_[v] < 0)
                for (int u : adj_[v])
                    if (match_[u] < 0) {
                        match_[u] = v;
                        match_[v] = u;
                        break;
                    }
        for (int v = 0; v < n_; ++v)
            if (match_[v] < 0) augment_from(v);
        return match_;
    }

private:
    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, blossom_;

    // Walk both alternating paths to the root; the first common base is the
    // blossom's stem vertex.
    int lca(int a, int b) {
        std::vector<char> seen(static_cast<size_t>(n_), 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (match_[a] < 0) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = 1;
            blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    // BFS from an exposed root; returns the exposed far end of an augmenting
    // path, or -1 when none exists.
    int find_path(int root) {
        used_.assign(static_cast<size_t>(n_), 0);
        parent_.assign(static_cast<size_t>(n_), -1);
        base_.resize(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
                    // Even vertex reached: odd cycle; contract the blossom.
                    int stem = lca(v, to);
                    blossom_.assign(static_cast<size_t>(n_), 0);
                    mark_path(v, stem, to);
                    mark_path(to, stem, v);
                    for (int i = 0; i < n_; ++i)
                        if (blossom_[base_[i]]) {
                            base_[i] = stem;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent_[to] < 0) {
                    parent_[to] = v;
                    if (match_[to] < 0) return to;
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    void augment_from(int root) {
        int v = find_path(root);
        if (v < 0) return;
        while (v >= 0) { // flip matched/unmatched along the path
            int pv = parent_[v];
            int next = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = next;
        }
    }
};

} // namespace detail

inline Matching maximum_matching(const LinkGraph& g) {
    detail::BlossomMatcher matcher(g.n);
    for (const Pair& p : g.pairs) matcher.add_edge(p[0], p[1]);
    const std::vector<int> match = matcher.solve();
    Matching out;
    for (int v = 0; v < g.n; ++v)
        if (match[static_cast<size_t>(v)] > v)
            out.pairs.push_back(Pair{v, match[static_cast<size_t>(v)]});
    return out;
}

} // namespace lcf
