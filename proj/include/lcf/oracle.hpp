#pragma once

// Brute-force ground truth for cross-validation: exact independence number,
// exact chromatic number, exhaustive matching, exhaustive cycle-freeness and
// K5^3 detection. Everything here is deliberately algorithm-independent from
// the main modules — different enumeration orders, no shared pruning — so
// agreement between the two is evidence rather than tautology. All functions
// enforce hard size caps and throw CapExceeded beyond them.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lcf/errors.hpp"
#include "lcf/hypergraph.hpp"

namespace lcf::oracle {

inline constexpr int kAlphaCap = 24;      // vertices
inline constexpr int kChiCap = 16;        // vertices
inline constexpr int kMatchingCap = 14;   // pairs
inline constexpr int kCycleEdgeCap = 14;  // edges (or n <= kCycleVertexCap)
inline constexpr int kCycleVertexCap = 8;
inline constexpr int kK53Cap = 40;        // vertices

struct AlphaResult {
    int value = 0;
    std::vector<Vertex> witness; // lexicographically smallest maximum set
};

namespace detail {

struct AlphaSearch {
    const Hypergraph& h;
    std::vector<Vertex> current;
    std::vector<char> chosen;
    AlphaResult best;

    explicit AlphaSearch(const Hypergraph& hg)
        : h(hg), chosen(static_cast<size_t>(hg.n()), 0) {}

    bool can_add(Vertex v) const {
        for (const Triple& e : h.edges()) {
            if (e[0] != v && e[1] != v && e[2] != v) continue;
            int inside = 0;
            for (Vertex u : e)
                if (u != v && chosen[static_cast<size_t>(u)]) ++inside;
            if (inside == 2) return false;
        }
        return true;
    }

    // Include-first DFS over vertices in ascending order: the first maximum
    // set encountered is the lexicographically smallest one, and pruning on
    // "cannot strictly beat best" never skips it.
    void dfs(Vertex v) {
        if (static_cast<int>(current.size()) + (h.n() - v) <= best.value) return;
        if (v == h.n()) {
            best.value = static_cast<int>(current.size());
            best.witness = current;
            return;
        }
        if (can_add(v)) {
            chosen[static_cast<size_t>(v)] = 1;
            current.push_back(v);
            dfs(v + 1);
            current.pop_back();
            chosen[static_cast<size_t>(v)] = 0;
        }
        dfs(v + 1);
    }
};

} // namespace detail

inline AlphaResult exact_alpha(const Hypergraph& h, int cap = kAlphaCap) {
    if (h.n() > cap)
        throw CapExceeded("exact_alpha: n = " + std::to_string(h.n()) + " exceeds cap " +
                          std::to_string(cap));
    detail::AlphaSearch search(h);
    search.best.value = -1; // so the empty set is recorded for n = 0
    search.dfs(0);
    return search.best;
}

struct ChiResult {
    int value = 0;
    std::vector<int> colors; // per vertex, values 1..value (empty for n = 0)
};

namespace detail {

// Backtracking k-colorability; vertex v only checks edges whose largest
// vertex is v, so each edge is tested exactly once, when completed.
inline bool color_from(const Hypergraph& h, int k, std::vector<int>& colors, Vertex v) {
    if (v == h.n()) return true;
    for (int c = 1; c <= k; ++c) {
        colors[static_cast<size_t>(v)] = c;
        bool ok = true;
        for (const Triple& e : h.edges()) {
            if (e[2] != v) continue;
            if (colors[static_cast<size_t>(e[0])] == c && colors[static_cast<size_t>(e[1])] == c) {
                ok = false;
                break;
            }
        }
        if (ok && color_from(h, k, colors, v + 1)) return true;
    }
    colors[static_cast<size_t>(v)] = 0;
    return false;
}

} // namespace detail

inline ChiResult exact_chi(const Hypergraph& h, int cap = kChiCap) {
    if (h.n() > cap)
        throw CapExceeded("exact_chi: n = " + std::to_string(h.n()) + " exceeds cap " +
                          std::to_string(cap));
    ChiResult out;
    if (h.n() == 0) return out; // zero colors color nothing
    for (int k = 1; k <= h.n(); ++k) {
        std::vector<int> colors(static_cast<size_t>(h.n()), 0);
        if (detail::color_from(h, k, colors, 0)) {
            out.value = k;
            out.colors = std::move(colors);
            return out;
        }
    }
    // Unreachable: n distinct colors always avoid monochromatic triples.
    throw Error("exact_chi: no coloring found");
}

namespace detail {

inline int brute_match_from(const std::vector<Pair>& pairs, size_t i, std::vector<char>& used) {
    if (i == pairs.size()) return 0;
    int best = brute_match_from(pairs, i + 1, used); // skip pair i
    const Pair& p = pairs[i];
    if (!used[static_cast<size_t>(p[0])] && !used[static_cast<size_t>(p[1])]) {
        used[static_cast<size_t>(p[0])] = used[static_cast<size_t>(p[1])] = 1;
        best = std::max(best, 1 + brute_match_from(pairs, i + 1, used));
        used[static_cast<size_t>(p[0])] = used[static_cast<size_t>(p[1])] = 0;
    }
    return best;
}

} // namespace detail

inline int brute_matching(const LinkGraph& g, int cap = kMatchingCap) {
    if (static_cast<int>(g.pairs.size()) > cap)
        throw CapExceeded("brute_matching: " + std::to_string(g.pairs.size()) +
                          " pairs exceed cap " + std::to_string(cap));
    std::vector<char> used(static_cast<size_t>(g.n), 0);
    return detail::brute_match_from(g.pairs, 0, used);
}

namespace detail {

// DFS over edge sequences that are prefix-valid linear paths: consecutive
// edges meet in exactly one vertex, all other pairs in the prefix are
// disjoint, and consecutive connector vertices differ. A prefix violating any
// of these can never extend to a valid cycle, so pruning on them still
// enumerates every candidate cycle. Unlike the pruned search in the cycles
// module, every edge is tried as the start and no rotation or orientation is
// canonicalized.
struct CycleHunt {
    const std::vector<Triple>& edges;
    int max_len;
    std::vector<int> seq;      // indices into edges
    std::vector<char> in_seq;

    CycleHunt(const std::vector<Triple>& es, int ml)
        : edges(es), max_len(ml), in_seq(es.size(), 0) {}

    static int common_count(const Triple& a, const Triple& b, Vertex& shared) {
        int cnt = 0;
        for (Vertex x : a)
            for (Vertex y : b)
                if (x == y) {
                    shared = x;
                    ++cnt;
                }
        return cnt;
    }

    bool closes_cycle() const {
        if (static_cast<int>(seq.size()) < 3) return false;
        Vertex tail_shared = -1;
        if (common_count(edges[static_cast<size_t>(seq.back())],
                         edges[static_cast<size_t>(seq.front())], tail_shared) != 1)
            return false;
        // The closing connector must differ from its two neighbours' ones.
        Vertex prev_shared = -1;
        common_count(edges[static_cast<size_t>(seq[seq.size() - 2])],
                     edges[static_cast<size_t>(seq.back())], prev_shared);
        Vertex first_shared = -1;
        common_count(edges[static_cast<size_t>(seq.front())],
                     edges[static_cast<size_t>(seq[1])], first_shared);
        return tail_shared != prev_shared && tail_shared != first_shared;
    }

    bool extend() {
        if (static_cast<int>(seq.size()) == max_len) return false;
        for (size_t i = 0; i < edges.size(); ++i) {
            if (in_seq[i]) continue;
            const Triple& cand = edges[i];
            Vertex shared = -1;
            if (common_count(edges[static_cast<size_t>(seq.back())], cand, shared) != 1) continue;
            if (seq.size() >= 2) {
                Vertex prev_shared = -1;
                common_count(edges[static_cast<size_t>(seq[seq.size() - 2])],
                             edges[static_cast<size_t>(seq.back())], prev_shared);
                if (prev_shared == shared) continue;
            }
            // Mid-path edges must avoid every earlier edge except their
            // predecessor; meeting the FIRST edge is allowed only for the
            // closing edge, so such a candidate gets the closure test and
            // nothing more.
            bool disjoint = true;
            for (size_t j = 1; j + 1 < seq.size() && disjoint; ++j) {
                Vertex dummy = -1;
                if (common_count(edges[static_cast<size_t>(seq[j])], cand, dummy) != 0)
                    disjoint = false;
            }
            if (!disjoint) continue;
            Vertex dummy = -1;
            const bool touches_first =
                seq.size() >= 2 &&
                common_count(edges[static_cast<size_t>(seq.front())], cand, dummy) != 0;
            in_seq[i] = 1;
            seq.push_back(static_cast<int>(i));
            const bool found = touches_first ? closes_cycle() : extend();
            if (found) return true;
            seq.pop_back();
            in_seq[i] = 0;
        }
        return false;
    }

    bool any_cycle() {
        for (size_t i = 0; i < edges.size(); ++i) {
            in_seq[i] = 1;
            seq.push_back(static_cast<int>(i));
            if (extend()) return true;
            seq.pop_back();
            in_seq[i] = 0;
        }
        return false;
    }
};

} // namespace detail

inline bool exhaustive_cycle_free(const Hypergraph& h) {
    if (h.edge_count() > kCycleEdgeCap && h.n() > kCycleVertexCap)
        throw CapExceeded("exhaustive_cycle_free: needs |E| <= " + std::to_string(kCycleEdgeCap) +
                          " or n <= " + std::to_string(kCycleVertexCap) + ", got |E| = " +
                          std::to_string(h.edge_count()) + ", n = " + std::to_string(h.n()));
    // A linear cycle of k edges spans 2k distinct vertices.
    const int max_len = std::min(h.edge_count(), h.n() / 2);
    if (max_len < 3) return true;
    detail::CycleHunt hunt(h.edges(), max_len);
    return !hunt.any_cycle();
}

// First 5-subset (ascending lexicographic) inducing all 10 triples, if any.
inline std::optional<std::array<Vertex, 5>> contains_k53(const Hypergraph& h,
                                                         int cap = kK53Cap) {
    if (h.n() > cap)
        throw CapExceeded("contains_k53: n = " + std::to_string(h.n()) + " exceeds cap " +
                          std::to_string(cap));
    if (h.n() < 5 || h.edge_count() < 10) return std::nullopt;
    std::array<Vertex, 5> s{};
    for (s[0] = 0; s[0] < h.n(); ++s[0])
        for (s[1] = s[0] + 1; s[1] < h.n(); ++s[1])
            for (s[2] = s[1] + 1; s[2] < h.n(); ++s[2])
                for (s[3] = s[2] + 1; s[3] < h.n(); ++s[3])
                    for (s[4] = s[3] + 1; s[4] < h.n(); ++s[4]) {
                        bool all = true;
                        for (int i = 0; i < 3 && all; ++i)
                            for (int j = i + 1; j < 4 && all; ++j)
                                for (int k = j + 1; k < 5 && all; ++k)
                                    all = h.has_edge(s[i], s[j], s[k]);
                        if (all) return s;
                    }
    return std::nullopt;
}

} // namespace lcf::oracle
