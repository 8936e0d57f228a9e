#pragma once

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "lcf/errors.hpp"
#include "lcf/generators.hpp"
#include "lcf/hypergraph.hpp"

// Text formats: the hypergraph file format and the corpus expression language
// used by the command-line `check` subcommand.

namespace lcf {

// ---------------------------------------------------------------------------
// Hypergraph text format
//
//   Line 1: `n m`; then m lines `u v w` with 0-based vertices. `#` starts a
//   comment running to the end of the line; blank lines are skipped. Edges
//   are canonicalized on load and emitted sorted, so parsing what emit wrote
//   reproduces the hypergraph exactly.
// ---------------------------------------------------------------------------

namespace detail {

// Strips comments/whitespace and returns the whitespace-separated tokens.
inline std::vector<std::string> data_tokens(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline long long parse_int_token(const std::string& tok, int line_no) {
    size_t i = (tok.size() > 1 && tok[0] == '-') ? 1 : 0;
    if (i == tok.size()) throw ParseError(line_no, "expected an integer, got `" + tok + "`");
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            throw ParseError(line_no, "expected an integer, got `" + tok + "`");
    return std::stoll(tok);
}

} // namespace detail

inline Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    long long m = -1, found = 0;
    std::vector<Triple> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> toks = detail::data_tokens(line);
        if (toks.empty()) continue;
        if (n < 0) {
            if (toks.size() != 2)
                throw ParseError(line_no, "expected header `n m`, got " +
                                              std::to_string(toks.size()) + " tokens");
            long long nn = detail::parse_int_token(toks[0], line_no);
            m = detail::parse_int_token(toks[1], line_no);
            if (nn < 0) throw ParseError(line_no, "vertex count must be nonnegative");
            if (m < 0) throw ParseError(line_no, "edge count must be nonnegative");
            n = static_cast<int>(nn);
            continue;
        }
        if (found == m)
            throw ParseError(line_no, "more than the declared " + std::to_string(m) +
                                          " edge lines");
        if (toks.size() != 3)
            throw ParseError(line_no, "expected an edge line `u v w`, got " +
                                          std::to_string(toks.size()) + " tokens");
        long long u = detail::parse_int_token(toks[0], line_no);
        long long v = detail::parse_int_token(toks[1], line_no);
        long long w = detail::parse_int_token(toks[2], line_no);
        for (long long x : {u, v, w})
            if (x < 0 || x >= n)
                throw VertexOutOfRange("line " + std::to_string(line_no) + ": vertex " +
                                       std::to_string(x) + " outside [0, " + std::to_string(n) +
                                       ")");
        if (u == v || u == w || v == w)
            throw DegenerateEdge("line " + std::to_string(line_no) + ": repeated vertex in edge " +
                                 toks[0] + " " + toks[1] + " " + toks[2]);
        edges.push_back(make_triple(static_cast<Vertex>(u), static_cast<Vertex>(v),
                                    static_cast<Vertex>(w)));
        ++found;
    }
    if (n < 0) throw ParseError(line_no + 1, "missing header `n m`");
    if (found != m)
        throw ParseError(line_no + 1, "declared " + std::to_string(m) + " edges but found " +
                                          std::to_string(found));
    return Hypergraph(n, edges);
}

inline std::string emit_hypergraph(const Hypergraph& h) {
    std::string out = std::to_string(h.n()) + " " + std::to_string(h.edge_count()) + "\n";
    for (const Triple& e : h.edges())
        out += std::to_string(e[0]) + " " + std::to_string(e[1]) + " " + std::to_string(e[2]) +
               "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Corpus expressions
//
//   A corpus is a comma-separated list of generator calls, e.g.
//     `k53(copies=2),randomfree(n=8,attempts=60,seeds=0..99)`
//   Each call names a generator and passes integer parameters; the seeded
//   generators take either `seed=S` or an inclusive range `seeds=A..B`, which
//   expands to one instance per seed. Expansion is deterministic.
// ---------------------------------------------------------------------------

struct CorpusInstance {
    std::string name; // the concrete generator call, e.g. "random(n=6,m=9,seed=3)"
    Hypergraph graph;
};

struct Corpus {
    std::string description; // the corpus expression as given
    std::vector<CorpusInstance> instances;
};

namespace detail {

struct GeneratorCall {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params; // in written order
};

inline long long corpus_int(const std::string& value, const std::string& key) {
    if (value.empty()) throw ParseError(1, "corpus: empty value for `" + key + "`");
    for (char c : value)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(1, "corpus: value for `" + key + "` must be a nonnegative integer, "
                                "got `" + value + "`");
    return std::stoll(value);
}

// Splits `name(k=v,...)` calls at top-level commas (commas inside parentheses
// separate parameters, not calls).
inline std::vector<GeneratorCall> parse_corpus_calls(const std::string& spec) {
    std::string flat;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) flat += c;
    if (flat.empty()) throw ParseError(1, "corpus: empty expression");
    std::vector<std::string> pieces;
    int depth = 0;
    std::string cur;
    for (char c : flat) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth < 0) throw ParseError(1, "corpus: unbalanced `)`");
        if (c == ',' && depth == 0) {
            pieces.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (depth != 0) throw ParseError(1, "corpus: unbalanced `(`");
    pieces.push_back(cur);
    std::vector<GeneratorCall> out;
    for (const std::string& piece : pieces) {
        size_t open = piece.find('(');
        if (open == std::string::npos || piece.back() != ')')
            throw ParseError(1, "corpus: expected `name(...)`, got `" + piece + "`");
        GeneratorCall call;
        call.name = piece.substr(0, open);
        if (call.name.empty()) throw ParseError(1, "corpus: missing generator name");
        std::string args = piece.substr(open + 1, piece.size() - open - 2);
        if (!args.empty()) {
            std::istringstream in(args);
            std::string kv;
            while (std::getline(in, kv, ',')) {
                size_t eq = kv.find('=');
                if (eq == std::string::npos)
                    throw ParseError(1, "corpus: expected `key=value`, got `" + kv + "`");
                call.params.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
            }
        }
        out.push_back(std::move(call));
    }
    return out;
}

// Returns the seed list of a call (singleton `seed=S` or the range
// `seeds=A..B`) and strips those keys from the parameter list.
inline std::vector<std::uint64_t> take_seeds(GeneratorCall& call) {
    std::vector<std::uint64_t> seeds;
    std::vector<std::pair<std::string, std::string>> rest;
    for (auto& kv : call.params) {
        if (kv.first == "seed") {
            seeds.push_back(static_cast<std::uint64_t>(corpus_int(kv.second, "seed")));
        } else if (kv.first == "seeds") {
            size_t dots = kv.second.find("..");
            if (dots == std::string::npos)
                throw ParseError(1, "corpus: `seeds` takes a range `a..b`, got `" + kv.second +
                                        "`");
            long long a = corpus_int(kv.second.substr(0, dots), "seeds");
            long long b = corpus_int(kv.second.substr(dots + 2), "seeds");
            if (a > b) throw ParseError(1, "corpus: empty seed range `" + kv.second + "`");
            for (long long s = a; s <= b; ++s) seeds.push_back(static_cast<std::uint64_t>(s));
        } else {
            rest.push_back(kv);
        }
    }
    call.params = std::move(rest);
    return seeds;
}

inline long long require_param(const GeneratorCall& call, const std::string& key) {
    for (const auto& kv : call.params)
        if (kv.first == key) return corpus_int(kv.second, key);
    throw ParseError(1, "corpus: " + call.name + " needs `" + key + "=...`");
}

inline void reject_unknown(const GeneratorCall& call,
                           std::initializer_list<const char*> known) {
    for (const auto& kv : call.params) {
        bool ok = false;
        for (const char* k : known)
            if (kv.first == k) ok = true;
        if (!ok)
            throw ParseError(1, "corpus: " + call.name + " does not take `" + kv.first + "`");
    }
}

} // namespace detail

inline Corpus expand_corpus(const std::string& spec) {
    Corpus out;
    out.description = spec;
    for (detail::GeneratorCall call : detail::parse_corpus_calls(spec)) {
        std::vector<std::uint64_t> seeds = detail::take_seeds(call);
        auto named = [&](const std::string& params, const Hypergraph& g) {
            out.instances.push_back({call.name + "(" + params + ")", g});
        };
        if (call.name == "k53") {
            detail::reject_unknown(call, {"copies"});
            long long copies = detail::require_param(call, "copies");
            if (!seeds.empty()) throw ParseError(1, "corpus: k53 takes no seed");
            named("copies=" + std::to_string(copies), complete_k53(static_cast<int>(copies)));
        } else if (call.name == "star") {
            detail::reject_unknown(call, {"n"});
            long long n = detail::require_param(call, "n");
            if (!seeds.empty()) throw ParseError(1, "corpus: star takes no seed");
            named("n=" + std::to_string(n), full_star(static_cast<int>(n)));
        } else if (call.name == "tight") {
            detail::reject_unknown(call, {"k"});
            long long k = detail::require_param(call, "k");
            if (!seeds.empty()) throw ParseError(1, "corpus: tight takes no seed");
            named("k=" + std::to_string(k), tight_two_exceptions(static_cast<int>(k)));
        } else if (call.name == "path") {
            detail::reject_unknown(call, {"k"});
            long long k = detail::require_param(call, "k");
            if (!seeds.empty()) throw ParseError(1, "corpus: path takes no seed");
            named("k=" + std::to_string(k), linear_path(static_cast<int>(k)));
        } else if (call.name == "cyclegen") {
            detail::reject_unknown(call, {"k"});
            long long k = detail::require_param(call, "k");
            if (!seeds.empty()) throw ParseError(1, "corpus: cyclegen takes no seed");
            named("k=" + std::to_string(k), linear_cycle_gen(static_cast<int>(k)));
        } else if (call.name == "random") {
            detail::reject_unknown(call, {"n", "m"});
            long long n = detail::require_param(call, "n");
            long long m = detail::require_param(call, "m");
            if (seeds.empty())
                throw ParseError(1, "corpus: random needs `seed=S` or `seeds=A..B`");
            for (std::uint64_t s : seeds)
                named("n=" + std::to_string(n) + ",m=" + std::to_string(m) +
                          ",seed=" + std::to_string(s),
                      random_hypergraph(static_cast<int>(n), static_cast<int>(m), s));
        } else if (call.name == "randomfree") {
            detail::reject_unknown(call, {"n", "attempts"});
            long long n = detail::require_param(call, "n");
            long long attempts = detail::require_param(call, "attempts");
            if (seeds.empty())
                throw ParseError(1, "corpus: randomfree needs `seed=S` or `seeds=A..B`");
            for (std::uint64_t s : seeds)
                named("n=" + std::to_string(n) + ",attempts=" + std::to_string(attempts) +
                          ",seed=" + std::to_string(s),
                      random_cycle_free(static_cast<int>(n), static_cast<int>(attempts), s));
        } else {
            throw ParseError(1, "corpus: unknown generator `" + call.name + "`");
        }
    }
    return out;
}

} // namespace lcf
