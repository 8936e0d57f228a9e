#pragma once

// Linear cycles: a cyclic sequence of >= 3 edges in which cyclically
// consecutive edges meet in exactly one vertex, non-consecutive edges are
// disjoint, and consecutive connector vertices differ. Three edges through a
// common vertex are NOT a cycle — the connector-distinctness clause is what
// rules that out, so a full star is cycle-free.
//
// find_linear_cycle is an exact backtracking search; running out of budget
// throws instead of returning None, because "no cycle" is a mathematical
// claim downstream checks rely on and must never mean "gave up".

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lcf/errors.hpp"
#include "lcf/hypergraph.hpp"

namespace lcf {

struct CycleCertificate {
    std::vector<Triple> edges; // cyclic order; edges[i] meets edges[i+1 mod k]
    int length() const { return static_cast<int>(edges.size()); }
};

namespace detail {

inline int triple_common(const Triple& a, const Triple& b, Vertex& shared) {
    int cnt = 0;
    for (Vertex x : a)
        for (Vertex y : b)
            if (x == y) {
                shared = x;
                ++cnt;
            }
    return cnt;
}

} // namespace detail

inline bool verify_cycle(const Hypergraph& h, const CycleCertificate& c) {
    const int k = c.length();
    if (k < 3) return false;
    for (const Triple& e : c.edges)
        if (!h.has_edge(e)) return false;
    std::vector<Vertex> connector(static_cast<size_t>(k), -1);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            Vertex shared = -1;
            const int cnt = detail::triple_common(c.edges[static_cast<size_t>(i)],
                                                  c.edges[static_cast<size_t>(j)], shared);
            if (consecutive) {
                if (cnt != 1) return false;
                connector[static_cast<size_t>(j == i + 1 ? i : k - 1)] = shared;
            } else if (cnt != 0) {
                return false;
            }
        }
    for (int i = 0; i < k; ++i) // consecutive connectors must differ
        if (connector[static_cast<size_t>(i)] == connector[static_cast<size_t>((i + 1) % k)])
            return false;
    return true;
}

namespace detail {

// Canonicalized path search: a cycle is reported exactly once, as the
// ascending-lex rotation starting at its smallest edge, traversed in the
// direction that makes the second edge smaller than the last.
struct CycleSearch {
    const std::vector<Triple>& edges;
    int max_len;
    long long budget;
    long long nodes = 0;
    std::vector<int> seq;
    std::vector<char> used;

    CycleSearch(const std::vector<Triple>& es, int ml, long long b)
        : edges(es), max_len(ml), budget(b), used(es.size(), 0) {}

    void spend() {
        if (++nodes > budget)
            throw SearchBudgetExceeded("find_linear_cycle: exceeded " + std::to_string(budget) +
                                       " search nodes");
    }

    const Triple& at(size_t pos) const { return edges[static_cast<size_t>(seq[pos])]; }

    bool closes() const {
        if (static_cast<int>(seq.size()) < 3) return false;
        Vertex closing = -1;
        if (triple_common(at(seq.size() - 1), at(0), closing) != 1) return false;
        Vertex prev = -1, first = -1;
        triple_common(at(seq.size() - 2), at(seq.size() - 1), prev);
        triple_common(at(0), at(1), first);
        if (closing == prev || closing == first) return false;
        return at(1) < at(seq.size() - 1); // direction normalization
    }

    bool dfs() {
        spend();
        if (static_cast<int>(seq.size()) == max_len) return false;
        const int start = seq.front();
        for (int i = start + 1; i < static_cast<int>(edges.size()); ++i) {
            if (used[static_cast<size_t>(i)]) continue;
            const Triple& cand = edges[static_cast<size_t>(i)];
            Vertex shared = -1;
            if (triple_common(edges[static_cast<size_t>(seq.back())], cand, shared) != 1)
                continue;
            if (seq.size() >= 2) {
                Vertex prev = -1;
                triple_common(at(seq.size() - 2), at(seq.size() - 1), prev);
                if (prev == shared) continue;
            }
            bool disjoint = true;
            for (size_t j = 1; j + 1 < seq.size() && disjoint; ++j) {
                Vertex dummy = -1;
                if (triple_common(at(j), cand, dummy) != 0) disjoint = false;
            }
            if (!disjoint) continue;
            Vertex dummy = -1;
            const bool touches_start =
                seq.size() >= 2 && triple_common(at(0), cand, dummy) != 0;
            used[static_cast<size_t>(i)] = 1;
            seq.push_back(i);
            // An edge meeting the start edge can only be the closing edge.
            const bool found = touches_start ? (spend(), closes()) : dfs();
            if (found) return true;
            seq.pop_back();
            used[static_cast<size_t>(i)] = 0;
        }
        return false;
    }
};

} // namespace detail

inline std::optional<CycleCertificate> find_linear_cycle(const Hypergraph& h,
                                                         long long budget = 10'000'000) {
    const int max_len = std::min(h.edge_count(), h.n() / 2);
    if (max_len < 3) return std::nullopt;
    detail::CycleSearch search(h.edges(), max_len, budget);
    for (int s = 0; s + 2 < h.edge_count(); ++s) {
        search.used[static_cast<size_t>(s)] = 1;
        search.seq.push_back(s);
        if (search.dfs()) {
            CycleCertificate cert;
            for (int idx : search.seq)
                cert.edges.push_back(h.edges()[static_cast<size_t>(idx)]);
            return cert;
        }
        search.seq.pop_back();
        search.used[static_cast<size_t>(s)] = 0;
    }
    return std::nullopt;
}

} // namespace lcf
