#pragma once

#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "lcf/construct.hpp"
#include "lcf/cycles.hpp"
#include "lcf/errors.hpp"
#include "lcf/generators.hpp"
#include "lcf/hypergraph.hpp"
#include "lcf/io.hpp"
#include "lcf/oracle.hpp"

// Corpus-level checks: each one sweeps a corpus, asserts one implication on
// every instance it can decide, and returns a self-contained report. An
// undecidable instance (search budget or oracle cap hit) is counted in
// `budget_exhausted`, never silently treated as passing.

namespace lcf {

struct Violation {
    std::string instance; // full text serialization: a standalone repro case
    std::string details;
};

struct Report {
    std::string check;
    std::string corpus;
    long long instances = 0;
    std::vector<Violation> violations;
    std::vector<std::pair<std::string, std::string>> stats; // in insertion order
    long long budget_exhausted = 0;
};

inline nlohmann::ordered_json report_to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["corpus"] = r.corpus;
    j["instances"] = r.instances;
    j["violations"] = nlohmann::ordered_json::array();
    for (const Violation& v : r.violations)
        j["violations"].push_back({{"instance", v.instance}, {"details", v.details}});
    j["stats"] = nlohmann::ordered_json::object();
    for (const auto& kv : r.stats) j["stats"][kv.first] = kv.second;
    j["budget_exhausted"] = r.budget_exhausted;
    return j;
}

namespace detail {

enum class CycleStatus { Free, Cyclic, Budget };

inline CycleStatus cycle_status(const Hypergraph& g) {
    try {
        return find_linear_cycle(g) ? CycleStatus::Cyclic : CycleStatus::Free;
    } catch (const SearchBudgetExceeded&) {
        return CycleStatus::Budget;
    }
}

inline std::string format_ratio(long long num, long long den) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", static_cast<double>(num) / static_cast<double>(den));
    return buf;
}

// Tracks the minimum of a set of fractions without floating-point compares.
struct FractionMin {
    long long num = 0, den = 0; // den == 0 means "nothing tracked yet"
    int arg = -1;

    void offer(long long n, long long d, int index) {
        if (den == 0 || n * den < num * d) {
            num = n;
            den = d;
            arg = index;
        }
    }
};

} // namespace detail

// ---------------------------------------------------------------------------
// Strong-degree forcing checks: min d+ >= 3 (allowing `exceptions` vertices
// below) must force a linear cycle.
// ---------------------------------------------------------------------------

namespace detail {

inline Report check_min_degree(const Corpus& corpus, int exceptions, const std::string& name) {
    Report r;
    r.check = name;
    r.corpus = corpus.description;
    r.instances = static_cast<long long>(corpus.instances.size());
    long long qualifying = 0;
    for (const CorpusInstance& inst : corpus.instances) {
        if (min_strong_degree(inst.graph, exceptions).value < 3) continue;
        ++qualifying;
        try {
            auto cert = find_linear_cycle(inst.graph);
            if (!cert)
                r.violations.push_back({emit_hypergraph(inst.graph),
                                        inst.name + ": strong degree >= 3 (up to " +
                                            std::to_string(exceptions) +
                                            " exceptions) but no linear cycle found"});
            else if (!verify_cycle(inst.graph, *cert))
                r.violations.push_back({emit_hypergraph(inst.graph),
                                        inst.name + ": cycle search returned an invalid "
                                                    "certificate"});
        } catch (const SearchBudgetExceeded&) {
            ++r.budget_exhausted;
        }
    }
    r.stats.emplace_back("qualifying", std::to_string(qualifying));
    r.stats.emplace_back("note",
                         "near-skeleton strengthening is exercised only at whole-hypergraph "
                         "scale");
    return r;
}

} // namespace detail

inline Report check_min3(const Corpus& corpus) {
    return detail::check_min_degree(corpus, 0, "min3");
}

// Same forcing with one exceptional vertex allowed; additionally demonstrates
// sharpness: the two-extra-vertex family qualifies at two exceptions yet has
// no linear cycle, so two exceptions cannot be allowed.
inline Report check_min3_one_exception(const Corpus& corpus) {
    Report r = detail::check_min_degree(corpus, 1, "min3x1");
    for (int k : {5, 7}) {
        Hypergraph tight = tight_two_exceptions(k);
        bool qualifies = min_strong_degree(tight, 2).value >= 3;
        bool cycle_free = detail::cycle_status(tight) == detail::CycleStatus::Free;
        std::string key = "sharpness_tight_k" + std::to_string(k);
        if (qualifies && cycle_free) {
            r.stats.emplace_back(key, "cycle-free and qualifies at two exceptions");
        } else {
            r.stats.emplace_back(key, "FAILED");
            r.violations.push_back({emit_hypergraph(tight),
                                    "two-exception family k=" + std::to_string(k) +
                                        ": expected cycle-free and qualifying at two "
                                        "exceptions"});
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// The 2n/5 independence bound on every cycle-free instance.
// ---------------------------------------------------------------------------

inline Report check_alpha_bound(const Corpus& corpus) {
    Report r;
    r.check = "alpha";
    r.corpus = corpus.description;
    r.instances = static_cast<long long>(corpus.instances.size());
    long long cycle_free = 0, skipped_cyclic = 0, alpha_capped = 0;
    detail::FractionMin min_ratio;
    for (int idx = 0; idx < static_cast<int>(corpus.instances.size()); ++idx) {
        const CorpusInstance& inst = corpus.instances[static_cast<size_t>(idx)];
        const Hypergraph& g = inst.graph;
        switch (detail::cycle_status(g)) {
        case detail::CycleStatus::Budget: ++r.budget_exhausted; continue;
        case detail::CycleStatus::Cyclic: ++skipped_cyclic; continue;
        case detail::CycleStatus::Free: break;
        }
        ++cycle_free;
        std::optional<ConstructionState> st;
        try {
            st = independent_two_fifths(g);
            if (!is_independent(g, st->s))
                r.violations.push_back({emit_hypergraph(g),
                                        inst.name + ": constructed set is not independent"});
            else if (5 * static_cast<long long>(st->s.size()) < 2 * static_cast<long long>(g.n()))
                r.violations.push_back({emit_hypergraph(g),
                                        inst.name + ": constructed set below the 2/5 bound"});
        } catch (const SearchBudgetExceeded&) {
            ++r.budget_exhausted;
            continue;
        } catch (const Error& e) {
            r.violations.push_back({emit_hypergraph(g),
                                    inst.name + ": construction failed: " + e.what()});
            continue;
        }
        if (g.n() > oracle::kAlphaCap) {
            ++alpha_capped;
            continue;
        }
        int alpha = oracle::exact_alpha(g).value;
        if (5LL * alpha < 2LL * g.n())
            r.violations.push_back({emit_hypergraph(g),
                                    inst.name + ": exact independence number below 2n/5"});
        if (static_cast<int>(st->s.size()) > alpha)
            r.violations.push_back({emit_hypergraph(g),
                                    inst.name + ": constructed set larger than exact alpha"});
        if (g.n() > 0) min_ratio.offer(alpha, g.n(), idx);
    }
    r.stats.emplace_back("cycle_free", std::to_string(cycle_free));
    r.stats.emplace_back("skipped_cyclic", std::to_string(skipped_cyclic));
    r.stats.emplace_back("alpha_capped", std::to_string(alpha_capped));
    r.stats.emplace_back("min_alpha_over_n", min_ratio.den == 0
                                                 ? "n/a"
                                                 : detail::format_ratio(min_ratio.num,
                                                                        min_ratio.den));
    return r;
}

// ---------------------------------------------------------------------------
// Partition and coloring bounds on every cycle-free instance.
// ---------------------------------------------------------------------------

namespace detail {

// Structural self-check of a partition: disjoint classes covering V, each a
// singleton or contained in some edge.
inline std::optional<std::string> partition_defect(const Hypergraph& g,
                                                   const VertexPartition& p) {
    std::vector<char> seen(static_cast<size_t>(g.n()), 0);
    for (const auto& cls : p.classes) {
        if (cls.empty()) return "empty class";
        for (Vertex v : cls) {
            if (v < 0 || v >= g.n()) return "class vertex out of range";
            if (seen[static_cast<size_t>(v)]) return "classes overlap";
            seen[static_cast<size_t>(v)] = 1;
        }
        if (cls.size() == 1) continue;
        if (cls.size() > 3) return "class larger than an edge";
        bool inside = false;
        for (const Triple& e : g.edges()) {
            int hit = 0;
            for (Vertex v : cls)
                if (v == e[0] || v == e[1] || v == e[2]) ++hit;
            if (hit == static_cast<int>(cls.size())) {
                inside = true;
                break;
            }
        }
        if (!inside) return "class not contained in any edge";
    }
    for (Vertex v = 0; v < g.n(); ++v)
        if (!seen[static_cast<size_t>(v)]) return "classes do not cover every vertex";
    return std::nullopt;
}

} // namespace detail

inline Report check_theorem1(const Corpus& corpus) {
    Report r;
    r.check = "thm1";
    r.corpus = corpus.description;
    r.instances = static_cast<long long>(corpus.instances.size());
    long long cycle_free = 0, skipped_cyclic = 0, alpha_capped = 0, chi_capped = 0;
    for (const CorpusInstance& inst : corpus.instances) {
        const Hypergraph& g = inst.graph;
        switch (detail::cycle_status(g)) {
        case detail::CycleStatus::Budget: ++r.budget_exhausted; continue;
        case detail::CycleStatus::Cyclic: ++skipped_cyclic; continue;
        case detail::CycleStatus::Free: break;
        }
        ++cycle_free;
        VertexPartition part = rho_partition(g);
        if (auto defect = detail::partition_defect(g, part)) {
            r.violations.push_back({emit_hypergraph(g),
                                    inst.name + ": malformed partition: " + *defect});
            continue;
        }
        if (g.n() <= oracle::kAlphaCap) {
            int alpha = oracle::exact_alpha(g).value;
            if (static_cast<int>(part.classes.size()) > alpha)
                r.violations.push_back({emit_hypergraph(g),
                                        inst.name + ": partition uses " +
                                            std::to_string(part.classes.size()) +
                                            " classes, exact alpha is " +
                                            std::to_string(alpha)});
        } else {
            ++alpha_capped;
        }
        try {
            Coloring col = three_coloring(g);
            for (const Triple& e : g.edges())
                if (col.color[static_cast<size_t>(e[0])] == col.color[static_cast<size_t>(e[1])] &&
                    col.color[static_cast<size_t>(e[1])] == col.color[static_cast<size_t>(e[2])]) {
                    r.violations.push_back({emit_hypergraph(g),
                                            inst.name + ": coloring left a monochromatic edge"});
                    break;
                }
        } catch (const ColoringViolation& e) {
            r.violations.push_back({emit_hypergraph(g), inst.name + ": " + e.what()});
        }
        if (g.n() <= oracle::kChiCap) {
            if (oracle::exact_chi(g).value > 3)
                r.violations.push_back({emit_hypergraph(g),
                                        inst.name + ": chromatic number exceeds 3"});
        } else {
            ++chi_capped;
        }
    }
    r.stats.emplace_back("cycle_free", std::to_string(cycle_free));
    r.stats.emplace_back("skipped_cyclic", std::to_string(skipped_cyclic));
    r.stats.emplace_back("alpha_capped", std::to_string(alpha_capped));
    r.stats.emplace_back("chi_capped", std::to_string(chi_capped));
    return r;
}

// ---------------------------------------------------------------------------
// Conjecture: V partitions into at most alpha(H) classes, each the vertex set
// of a linear cycle of H, a subset of an edge, or a singleton.
// ---------------------------------------------------------------------------

struct Conjecture1Verdict {
    enum class Kind { Holds, Fails, Budget };
    Kind kind = Kind::Fails;
    std::vector<std::vector<Vertex>> classes;                  // witness when Holds
    std::vector<std::optional<CycleCertificate>> certificates; // per class, cycle classes only
};

namespace detail {

// Finds a linear cycle with exactly k edges, if any; such a cycle covers
// exactly 2k vertices, so on a 2k-vertex hypergraph it is spanning.
inline std::optional<CycleCertificate> cycle_with_length(const Hypergraph& h, int k,
                                                         long long& nodes, long long budget) {
    const std::vector<Triple>& es = h.edges();
    const int m = h.edge_count();
    if (k < 3 || m < k) return std::nullopt;
    std::vector<int> seq;
    std::vector<char> used(static_cast<size_t>(m), 0);
    std::optional<CycleCertificate> found;
    std::function<bool()> dfs = [&]() -> bool {
        if (++nodes > budget)
            throw SearchBudgetExceeded("cycle_with_length: exceeded " + std::to_string(budget) +
                                       " nodes");
        int t = static_cast<int>(seq.size());
        if (t == k) {
            CycleCertificate cert;
            for (int i : seq) cert.edges.push_back(es[static_cast<size_t>(i)]);
            if (verify_cycle(h, cert)) {
                found = std::move(cert);
                return true;
            }
            return false;
        }
        for (int j = 0; j < m; ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            if (t > 0) {
                Vertex shared = -1;
                if (triple_common(es[static_cast<size_t>(seq[static_cast<size_t>(t - 1)])],
                                  es[static_cast<size_t>(j)], shared) != 1)
                    continue;
                bool ok = true;
                for (int i = 0; i + 1 < t && ok; ++i) {
                    int need = (i == 0 && t == k - 1) ? 1 : 0;
                    if (triple_common(es[static_cast<size_t>(seq[static_cast<size_t>(i)])],
                                      es[static_cast<size_t>(j)], shared) != need)
                        ok = false;
                }
                if (!ok) continue;
            }
            used[static_cast<size_t>(j)] = 1;
            seq.push_back(j);
            if (dfs()) return true;
            seq.pop_back();
            used[static_cast<size_t>(j)] = 0;
        }
        return false;
    };
    dfs();
    return found;
}

} // namespace detail

// Exhaustive search for a witness partition. Candidate classes are gathered
// up front (every vertex subset spanned by a linear cycle, every edge, every
// pair inside an edge, every singleton) and the cover search takes them in
// order of decreasing size, lexicographic within a size, so the first witness
// found is deterministic. Beyond n = 9, or past the node budget, the verdict
// is Budget.
inline Conjecture1Verdict check_conjecture1(const Hypergraph& h, long long budget = 10'000'000) {
    Conjecture1Verdict out;
    if (h.n() > 9) {
        out.kind = Conjecture1Verdict::Kind::Budget;
        return out;
    }
    const int n = h.n();
    long long nodes = 0;
    struct Candidate {
        std::vector<Vertex> verts;
        unsigned mask = 0;
        std::optional<CycleCertificate> cert;
    };
    std::vector<Candidate> cands;
    try {
        for (int size = 6; size <= n; size += 2) {
            // every subset of this size that carries a spanning linear cycle
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                if (__builtin_popcount(mask) != size) continue;
                std::vector<Vertex> verts;
                for (Vertex v = 0; v < n; ++v)
                    if (mask & (1u << v)) verts.push_back(v);
                InducedSubhypergraph ind = induced(h, verts);
                auto cert = detail::cycle_with_length(ind.graph, size / 2, nodes, budget);
                if (!cert) continue;
                Candidate c;
                c.verts = verts;
                c.mask = mask;
                CycleCertificate lifted;
                for (const Triple& e : cert->edges)
                    lifted.edges.push_back(make_triple(ind.lift(e[0]), ind.lift(e[1]),
                                                       ind.lift(e[2])));
                c.cert = std::move(lifted);
                cands.push_back(std::move(c));
            }
        }
    } catch (const SearchBudgetExceeded&) {
        out.kind = Conjecture1Verdict::Kind::Budget;
        return out;
    }
    auto add_plain = [&](std::vector<Vertex> verts) {
        Candidate c;
        for (Vertex v : verts) c.mask |= 1u << v;
        c.verts = std::move(verts);
        for (const Candidate& other : cands)
            if (other.verts == c.verts) return;
        cands.push_back(std::move(c));
    };
    for (const Triple& e : h.edges()) {
        add_plain({e[0], e[1], e[2]});
        add_plain({e[0], e[1]});
        add_plain({e[0], e[2]});
        add_plain({e[1], e[2]});
    }
    for (Vertex v = 0; v < n; ++v) add_plain({v});
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.verts.size() != b.verts.size()) return a.verts.size() > b.verts.size();
        return a.verts < b.verts;
    });
    const int alpha = oracle::exact_alpha(h).value;
    const unsigned full = (n == 0) ? 0u : ((1u << n) - 1u);
    std::vector<int> chosen;
    std::function<bool(unsigned)> cover = [&](unsigned mask) -> bool {
        if (++nodes > budget)
            throw SearchBudgetExceeded("check_conjecture1: exceeded " + std::to_string(budget) +
                                       " nodes");
        if (mask == full) return true;
        if (static_cast<int>(chosen.size()) == alpha) return false;
        Vertex v = 0;
        while (mask & (1u << v)) ++v;
        for (int i = 0; i < static_cast<int>(cands.size()); ++i) {
            const Candidate& c = cands[static_cast<size_t>(i)];
            if (!(c.mask & (1u << v)) || (c.mask & mask)) continue;
            chosen.push_back(i);
            if (cover(mask | c.mask)) return true;
            chosen.pop_back();
        }
        return false;
    };
    try {
        if (cover(0u)) {
            out.kind = Conjecture1Verdict::Kind::Holds;
            for (int i : chosen) {
                out.classes.push_back(cands[static_cast<size_t>(i)].verts);
                out.certificates.push_back(cands[static_cast<size_t>(i)].cert);
            }
        } else {
            out.kind = Conjecture1Verdict::Kind::Fails;
        }
    } catch (const SearchBudgetExceeded&) {
        out.kind = Conjecture1Verdict::Kind::Budget;
    }
    return out;
}

inline Report check_conjecture1(const Corpus& corpus) {
    Report r;
    r.check = "conj1";
    r.corpus = corpus.description;
    r.instances = static_cast<long long>(corpus.instances.size());
    long long holds = 0;
    for (const CorpusInstance& inst : corpus.instances) {
        Conjecture1Verdict v = check_conjecture1(inst.graph);
        switch (v.kind) {
        case Conjecture1Verdict::Kind::Holds: ++holds; break;
        case Conjecture1Verdict::Kind::Fails:
            r.violations.push_back({emit_hypergraph(inst.graph),
                                    inst.name + ": no partition into at most alpha classes of "
                                                "cycle vertex sets, edge subsets and singletons"});
            break;
        case Conjecture1Verdict::Kind::Budget: ++r.budget_exhausted; break;
        }
    }
    r.stats.emplace_back("holds", std::to_string(holds));
    r.stats.emplace_back("class_semantics",
                         "a cycle class must equal the exact vertex set of some linear cycle "
                         "(certificate checked); spanning-substructure semantics not assumed");
    return r;
}

// ---------------------------------------------------------------------------
// Open-question scans over cycle-free, K5-complete-free instances.
// ---------------------------------------------------------------------------

inline Report check_problem1(const Corpus& corpus) {
    Report r;
    r.check = "prob1";
    r.corpus = corpus.description;
    r.instances = static_cast<long long>(corpus.instances.size());
    long long eligible = 0, skipped_cyclic = 0, skipped_k53 = 0;
    std::vector<long long> chi_count;
    for (const CorpusInstance& inst : corpus.instances) {
        const Hypergraph& g = inst.graph;
        switch (detail::cycle_status(g)) {
        case detail::CycleStatus::Budget: ++r.budget_exhausted; continue;
        case detail::CycleStatus::Cyclic: ++skipped_cyclic; continue;
        case detail::CycleStatus::Free: break;
        }
        try {
            if (oracle::contains_k53(g)) {
                ++skipped_k53;
                continue;
            }
            ++eligible;
            int chi = oracle::exact_chi(g).value;
            if (chi >= static_cast<int>(chi_count.size())) chi_count.resize(chi + 1, 0);
            ++chi_count[static_cast<size_t>(chi)];
            if (chi == 3)
                r.violations.push_back({emit_hypergraph(g),
                                        inst.name + ": chromatic number 3 without a complete "
                                                    "5-vertex block: candidate answer to the "
                                                    "2-colorability question"});
            else if (chi > 3)
                r.violations.push_back({emit_hypergraph(g),
                                        inst.name + ": chromatic number " + std::to_string(chi) +
                                            " on a cycle-free instance"});
        } catch (const CapExceeded&) {
            ++r.budget_exhausted;
        }
    }
    r.stats.emplace_back("eligible", std::to_string(eligible));
    r.stats.emplace_back("skipped_cyclic", std::to_string(skipped_cyclic));
    r.stats.emplace_back("skipped_k53", std::to_string(skipped_k53));
    for (size_t k = 0; k < chi_count.size(); ++k)
        if (chi_count[k] > 0)
            r.stats.emplace_back("chi_" + std::to_string(k), std::to_string(chi_count[k]));
    return r;
}

inline Report stability_scan(const Corpus& corpus) {
    Report r;
    r.check = "stability";
    r.corpus = corpus.description;
    r.instances = static_cast<long long>(corpus.instances.size());
    long long eligible = 0, skipped_cyclic = 0, skipped_k53 = 0;
    detail::FractionMin min_ratio;
    for (int idx = 0; idx < static_cast<int>(corpus.instances.size()); ++idx) {
        const CorpusInstance& inst = corpus.instances[static_cast<size_t>(idx)];
        const Hypergraph& g = inst.graph;
        if (g.n() == 0) continue;
        switch (detail::cycle_status(g)) {
        case detail::CycleStatus::Budget: ++r.budget_exhausted; continue;
        case detail::CycleStatus::Cyclic: ++skipped_cyclic; continue;
        case detail::CycleStatus::Free: break;
        }
        try {
            if (oracle::contains_k53(g)) {
                ++skipped_k53;
                continue;
            }
            ++eligible;
            min_ratio.offer(oracle::exact_alpha(g).value, g.n(), idx);
        } catch (const CapExceeded&) {
            ++r.budget_exhausted;
        }
    }
    r.stats.emplace_back("eligible", std::to_string(eligible));
    r.stats.emplace_back("skipped_cyclic", std::to_string(skipped_cyclic));
    r.stats.emplace_back("skipped_k53", std::to_string(skipped_k53));
    if (min_ratio.den == 0) {
        r.stats.emplace_back("min_alpha_over_n", "n/a");
    } else {
        const CorpusInstance& arg = corpus.instances[static_cast<size_t>(min_ratio.arg)];
        r.stats.emplace_back("min_alpha_over_n",
                             detail::format_ratio(min_ratio.num, min_ratio.den));
        r.stats.emplace_back("argmin_instance", arg.name);
        r.stats.emplace_back("argmin_text", emit_hypergraph(arg.graph));
    }
    return r;
}

} // namespace lcf
