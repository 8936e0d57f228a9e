// Acceptance harness: one PASS/FAIL line per criterion, exit code = number of
// failed criteria. Runtime limits are pinned here as constants; every random
// draw is seeded, so a run is reproducible bit for bit.

#include "lcf/lcf.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace lcf;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kTightSeconds = 1.0;        // per equality instance
constexpr double kConstructSeconds = 120.0;  // whole cycle-free sweep
constexpr double kDegreeSeconds = 300.0;     // whole degree/cycle sweep
constexpr double kPartitionSeconds = 600.0;  // whole exact-cover sweep

int failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int num, const std::string& label, bool ok, const std::string& detail = "") {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", num, label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

std::vector<Vertex> all_vertices(const Hypergraph& h) {
    std::vector<Vertex> v(static_cast<size_t>(h.n()));
    for (int i = 0; i < h.n(); ++i) v[static_cast<size_t>(i)] = i;
    return v;
}

// The shared cycle-free corpus: 500 seeded instances with n in 6..10. Five
// vertices are too few to host a linear cycle at all, so every 5-vertex
// hypergraph is vacuously cycle-free and the extremal edge-count bound only
// starts to bite at n = 6; the corpus starts there.
struct CorpusEntry {
    Hypergraph graph;
    std::uint64_t seed;
};

std::vector<CorpusEntry> cycle_free_corpus() {
    std::vector<CorpusEntry> out;
    out.reserve(500);
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        int n = 6 + static_cast<int>(seed % 5);
        out.push_back({random_cycle_free(n, 8 * n, seed), seed});
    }
    return out;
}

// 1. On disjoint complete 5-vertex blocks the constructed independent set
//    meets the two-fifths bound with equality, and matches the exact optimum.
void criterion1() {
    bool ok = true;
    std::string detail;
    for (int m = 1; m <= 5 && ok; ++m) {
        auto t0 = Clock::now();
        Hypergraph h = complete_k53(m);
        ConstructionState st = independent_two_fifths(h);
        int n = h.n();
        if (!is_independent(h, st.s)) {
            ok = false;
            detail = "constructed set not independent at copies=" + std::to_string(m);
        } else if (5 * static_cast<int>(st.s.size()) != 2 * n) {
            ok = false;
            detail = "expected 5|S| = 2n at copies=" + std::to_string(m) + ", got |S|=" +
                     std::to_string(st.s.size());
        } else if (oracle::exact_alpha(h, 25).value != 2 * m) {
            ok = false;
            detail = "exact optimum differs from 2*copies at copies=" + std::to_string(m);
        }
        double dt = seconds_since(t0);
        if (ok && dt >= kTightSeconds) {
            ok = false;
            char buf[64];
            std::snprintf(buf, sizeof buf, "copies=%d took %.2f s", m, dt);
            detail = buf;
        }
    }
    report(1, "equality instances: 5|S| = 2n on disjoint complete blocks, optimum 2m", ok,
           detail);
}

// 2. Every constructed independent set on the 500-instance cycle-free corpus
//    is independent, meets 5|S| >= 2n, and every trace step meets 5|R0| >= 2|R|.
void criterion2(const std::vector<CorpusEntry>& corpus) {
    auto t0 = Clock::now();
    long long bad = 0;
    std::string detail;
    for (const CorpusEntry& entry : corpus) {
        const Hypergraph& h = entry.graph;
        ConstructionState st = independent_two_fifths(h);
        bool good = is_independent(h, st.s) &&
                    5 * static_cast<int>(st.s.size()) >= 2 * h.n();
        for (const TraceStep& step : st.trace)
            if (5 * static_cast<int>(step.r0.size()) < 2 * static_cast<int>(step.r.size()))
                good = false;
        if (!good) {
            ++bad;
            if (detail.empty()) detail = "first failing seed " + std::to_string(entry.seed);
        }
    }
    double dt = seconds_since(t0);
    bool ok = bad == 0 && dt < kConstructSeconds;
    if (ok) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "500 instances in %.1f s", dt);
        detail = buf;
    } else if (bad == 0) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "over time budget: %.1f s", dt);
        detail = buf;
    }
    report(2, "two-fifths construction holds on 500 seeded cycle-free instances", ok, detail);
}

// 3. Minimum strong degree >= 3 (allowing up to one exceptional vertex) forces
//    a verified linear cycle across 500 random instances spanning densities.
void criterion3() {
    auto t0 = Clock::now();
    long long bad = 0, budget = 0, qualifying = 0;
    std::string detail;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        int n = 5 + static_cast<int>(seed % 4);
        int lo = n;
        int hi = n * (n - 1) * (n - 2) / 12; // half of C(n,3)
        int m = lo + static_cast<int>((seed / 4) % static_cast<std::uint64_t>(hi - lo + 1));
        Hypergraph h = random_hypergraph(n, m, seed);
        bool plain = min_strong_degree(h, 0).value >= 3;
        bool one = min_strong_degree(h, 1).value >= 3;
        if (!plain && !one) continue;
        ++qualifying;
        try {
            auto cert = find_linear_cycle(h);
            if (!cert || !verify_cycle(h, *cert)) {
                ++bad;
                if (detail.empty()) detail = "no verified cycle at seed " + std::to_string(seed);
            }
        } catch (const SearchBudgetExceeded&) {
            ++budget;
        }
    }
    double dt = seconds_since(t0);
    bool ok = bad == 0 && budget == 0 && dt < kDegreeSeconds;
    if (ok) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%lld qualifying of 500 in %.1f s", qualifying, dt);
        detail = buf;
    } else if (budget > 0) {
        detail = std::to_string(budget) + " searches hit the budget";
    }
    report(3, "strong degree >= 3 (up to one exception) forces a verified cycle", ok, detail);
}

// 4. The two-exception family is certified cycle-free by both the direct
//    search and the exhaustive oracle, with pinned strong degrees.
void criterion4() {
    bool ok = true;
    std::string detail;
    for (int k : {5, 7}) {
        Hypergraph h = tight_two_exceptions(k);
        if (find_linear_cycle(h)) {
            ok = false;
            detail = "direct search found a cycle at k=" + std::to_string(k);
            break;
        }
        if (!oracle::exhaustive_cycle_free(h)) {
            ok = false;
            detail = "exhaustive oracle found a cycle at k=" + std::to_string(k);
            break;
        }
        for (Vertex v = 0; v < k; ++v)
            if (strong_degree(h, v) != 3) {
                ok = false;
                detail = "cycle vertex " + std::to_string(v) + " has strong degree " +
                         std::to_string(strong_degree(h, v)) + " at k=" + std::to_string(k) +
                         ", expected 3";
            }
        for (Vertex v = k; v < k + 2 && ok; ++v)
            if (strong_degree(h, v) != 2) {
                ok = false;
                detail = "extra vertex " + std::to_string(v) + " has strong degree " +
                         std::to_string(strong_degree(h, v)) + " at k=" + std::to_string(k) +
                         ", expected 2";
            }
        if (!ok) break;
    }
    report(4, "two-exception family: cycle-free twice over, strong degrees 3 and 2", ok,
           detail);
}

// 5. On the same cycle-free corpus: the greedy partition uses at most alpha
//    classes, and the constructive 3-coloring is proper with exact chi <= 3.
void criterion5(const std::vector<CorpusEntry>& corpus) {
    long long bad = 0;
    std::string detail;
    for (const CorpusEntry& entry : corpus) {
        const Hypergraph& h = entry.graph;
        bool good = true;
        VertexPartition part = rho_partition(h);
        if (static_cast<int>(part.classes.size()) > oracle::exact_alpha(h).value) good = false;
        try {
            Coloring c = three_coloring(h);
            for (const Triple& e : h.edges())
                if (c.color[static_cast<size_t>(e[0])] == c.color[static_cast<size_t>(e[1])] &&
                    c.color[static_cast<size_t>(e[1])] == c.color[static_cast<size_t>(e[2])])
                    good = false;
        } catch (const ColoringViolation&) {
            good = false;
        }
        if (oracle::exact_chi(h).value > 3) good = false;
        if (!good) {
            ++bad;
            if (detail.empty()) detail = "first failing seed " + std::to_string(entry.seed);
        }
    }
    report(5, "partition count <= alpha and proper 3-coloring on the cycle-free corpus",
           bad == 0, detail);
}

// 6. Full stars attain C(n-1,2) edges while staying cycle-free, and no
//    cycle-free corpus instance ever exceeds that bound.
void criterion6(const std::vector<CorpusEntry>& corpus) {
    bool ok = true;
    std::string detail;
    for (int n = 5; n <= 9 && ok; ++n) {
        Hypergraph h = full_star(n);
        if (h.edge_count() != (n - 1) * (n - 2) / 2) {
            ok = false;
            detail = "star on " + std::to_string(n) + " vertices has wrong edge count";
        } else if (find_linear_cycle(h)) {
            ok = false;
            detail = "star on " + std::to_string(n) + " vertices contains a cycle";
        }
    }
    for (const CorpusEntry& entry : corpus) {
        if (!ok) break;
        int n = entry.graph.n();
        if (entry.graph.edge_count() > (n - 1) * (n - 2) / 2) {
            ok = false;
            detail = "seed " + std::to_string(entry.seed) + " exceeds the extremal edge count";
        }
    }
    report(6, "extremal edge count: stars attain it, the cycle-free corpus never exceeds it",
           ok, detail);
}

// 7. The augmenting-path matcher agrees with the brute-force oracle on 200
//    link graphs, and the cycle search agrees with the exhaustive oracle on
//    200 small instances.
void criterion7() {
    bool ok = true;
    std::string detail;
    for (std::uint64_t trial = 0; trial < 200 && ok; ++trial) {
        // Links of random instances with m <= 12 have at most 12 pairs.
        Hypergraph h = random_hypergraph(7, 4 + static_cast<int>(trial % 9), 1000 + trial);
        LinkGraph g = link_graph(h, static_cast<Vertex>(trial % 7));
        if (static_cast<int>(maximum_matching(g).size()) != oracle::brute_matching(g)) {
            ok = false;
            detail = "matching disagreement at trial " + std::to_string(trial);
        }
    }
    for (std::uint64_t trial = 0; trial < 200 && ok; ++trial) {
        int n = 5 + static_cast<int>(trial % 3);
        int m = 3 + static_cast<int>(trial % 8);
        Hypergraph h = random_hypergraph(n, m, 2000 + trial);
        bool direct_free = !find_linear_cycle(h).has_value();
        if (direct_free != oracle::exhaustive_cycle_free(h)) {
            ok = false;
            detail = "cycle-search disagreement at trial " + std::to_string(trial);
        }
    }
    report(7, "matcher and cycle search agree with the brute-force oracles (200 + 200)", ok,
           detail);
}

// 8. Swapping a qualifying hypergraph edge into a skeleton yields a valid
//    tree on the same vertex set, and random swap sequences keep it a
//    skeleton.
void criterion8() {
    bool ok = true;
    std::string detail;
    long long triples = 0;
    std::mt19937_64 rng(77);
    std::vector<std::pair<Hypergraph, MixedTree>> walkers;
    for (std::uint64_t seed = 0; triples < 100 && seed < 400; ++seed) {
        Hypergraph h = random_cycle_free(8, 45, 9000 + seed);
        if (h.edge_count() < 2) continue;
        auto t = maximum_skeleton(h, all_vertices(h));
        if (!t) continue;
        long long here = 0;
        for (const Triple& f : h.edges()) {
            if (triples >= 100 || here >= 5) break;
            bool in_tree = false;
            for (const Edge& e : t->edges)
                if (e.size() == 3 && Triple{e[0], e[1], e[2]} == f) in_tree = true;
            if (in_tree) continue;
            MixedTree swapped;
            try {
                swapped = swap(*t, f, h);
            } catch (const NotAnOppositePair&) {
                continue;
            }
            ++triples;
            ++here;
            if (!validate_tree(swapped, &h) || swapped.vertices != t->vertices) {
                ok = false;
                detail = "swap broke the tree at seed " + std::to_string(9000 + seed);
            }
        }
        if (here > 0 && walkers.size() < 20) walkers.emplace_back(h, *t);
        if (!ok) break;
    }
    if (ok && triples < 100) {
        ok = false;
        detail = "only found " + std::to_string(triples) + " qualifying swaps";
    }
    // Iterated swaps: apply up to 10 random qualifying swaps and re-check the
    // skeleton property (no hypergraph edge meets the tree in exactly one
    // vertex) after every step.
    for (auto& [h, start] : walkers) {
        if (!ok) break;
        MixedTree cur = start;
        int steps = 1 + static_cast<int>(rng() % 10);
        for (int s = 0; s < steps; ++s) {
            std::vector<MixedTree> moves;
            for (const Triple& f : h.edges()) {
                try {
                    moves.push_back(swap(cur, f, h));
                } catch (const NotAnOppositePair&) {
                }
            }
            if (moves.empty()) break;
            cur = moves[rng() % moves.size()];
            bool skeleton = validate_tree(cur, &h) && cur.vertices == start.vertices;
            for (const Triple& e : h.edges()) {
                int inside = 0;
                for (Vertex v : e)
                    if (cur.contains(v)) ++inside;
                if (inside == 1) skeleton = false;
            }
            if (!skeleton) {
                ok = false;
                detail = "swap sequence left a non-skeleton";
                break;
            }
        }
    }
    report(8, "edge swaps preserve tree validity, the vertex set, and skeleton-ness", ok,
           detail);
}

// 9. The exact-cover partition verdict is Holds on every instance of a
//    100-strong cycle-free corpus with n <= 7; a Fails verdict would be
//    serialized in full.
void criterion9() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (std::uint64_t seed = 0; seed < 100 && ok; ++seed) {
        int n = 5 + static_cast<int>(seed % 3);
        Hypergraph h = random_cycle_free(n, 40, seed);
        Conjecture1Verdict v = check_conjecture1(h);
        if (v.kind == Conjecture1Verdict::Kind::Fails) {
            ok = false;
            detail = "counterexample at seed " + std::to_string(seed);
            std::printf("counterexample instance:\n%s", emit_hypergraph(h).c_str());
        } else if (v.kind == Conjecture1Verdict::Kind::Budget) {
            ok = false;
            detail = "budget exhausted at seed " + std::to_string(seed);
        }
    }
    double dt = seconds_since(t0);
    if (ok && dt >= kPartitionSeconds) {
        ok = false;
        char buf[64];
        std::snprintf(buf, sizeof buf, "over time budget: %.1f s", dt);
        detail = buf;
    } else if (ok) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "100 instances in %.1f s", dt);
        detail = buf;
    }
    report(9, "partition-into-alpha-classes verdict holds on 100 cycle-free instances", ok,
           detail);
}

} // namespace

int main() {
    std::vector<CorpusEntry> corpus = cycle_free_corpus();
    criterion1();
    criterion2(corpus);
    criterion3();
    criterion4();
    criterion5(corpus);
    criterion6(corpus);
    criterion7();
    criterion8();
    criterion9();
    std::printf("acceptance: %d/9 criteria passed\n", 9 - failures);
    return failures;
}
