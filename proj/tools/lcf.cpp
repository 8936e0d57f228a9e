// Command-line front end. Exit codes are the machine contract:
//   0 success / property holds    1 violation or counterexample found
//   2 usage or parse error        3 search budget or oracle cap exceeded

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lcf/lcf.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lcf::Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

lcf::Hypergraph load(const std::string& path) { return lcf::parse_hypergraph(slurp(path)); }

std::string join(const std::vector<lcf::Vertex>& vs) {
    std::string out;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(vs[i]);
    }
    return out;
}

std::string join_cycle(const lcf::CycleCertificate& c) {
    std::string out;
    for (size_t i = 0; i < c.edges.size(); ++i) {
        if (i) out += " / ";
        const lcf::Triple& e = c.edges[i];
        out += std::to_string(e[0]) + ' ' + std::to_string(e[1]) + ' ' + std::to_string(e[2]);
    }
    return out;
}

void print_trace(const lcf::ConstructionState& st) {
    for (const lcf::TraceStep& step : st.trace)
        std::cout << "step " << step.tag << ": r0 = " << join(step.r0)
                  << " ; r = " << join(step.r) << "\n";
}

int cmd_analyze(const std::string& path) {
    lcf::Hypergraph h = load(path);
    std::cout << "n " << h.n() << "\n";
    std::cout << "m " << h.edge_count() << "\n";
    std::cout << "min_strong_degree " << lcf::min_strong_degree(h, 0).value << "\n";
    auto cert = lcf::find_linear_cycle(h);
    if (cert) {
        std::cout << "cycle_free no\n";
        std::cout << "cycle: " << join_cycle(*cert) << "\n";
        return 0;
    }
    std::cout << "cycle_free yes\n";
    lcf::ConstructionState st = lcf::independent_two_fifths(h);
    std::cout << "independent_set: " << join(st.s) << "\n";
    std::cout << "alpha_bound: 5*" << st.s.size() << " >= 2*" << h.n() << " ok\n";
    return 0;
}

int cmd_cycle(const std::string& path) {
    lcf::Hypergraph h = load(path);
    auto cert = lcf::find_linear_cycle(h);
    if (cert)
        std::cout << "cycle: " << join_cycle(*cert) << "\n";
    else
        std::cout << "cycle: none\n";
    return 0;
}

int cmd_alpha(const std::string& path) {
    lcf::Hypergraph h = load(path);
    lcf::oracle::AlphaResult a = lcf::oracle::exact_alpha(h);
    std::cout << "alpha " << a.value << "\n";
    std::cout << "witness: " << join(a.witness) << "\n";
    return 0;
}

int cmd_indep(const std::string& path) {
    lcf::Hypergraph h = load(path);
    lcf::ConstructionState st = lcf::independent_two_fifths(h);
    std::cout << "size " << st.s.size() << "\n";
    std::cout << "set: " << join(st.s) << "\n";
    print_trace(st);
    return 0;
}

int cmd_color(const std::string& path) {
    lcf::Hypergraph h = load(path);
    lcf::Coloring col = lcf::three_coloring(h);
    std::cout << "colors:";
    for (int c : col.color) std::cout << ' ' << c;
    std::cout << "\n";
    return 0;
}

int cmd_partition(const std::string& path) {
    lcf::Hypergraph h = load(path);
    lcf::VertexPartition part = lcf::rho_partition(h);
    for (const auto& cls : part.classes) std::cout << "class: " << join(cls) << "\n";
    std::cout << "classes " << part.classes.size() << "\n";
    return 0;
}

int cmd_gen(const std::string& name, const std::vector<long long>& params, bool seed_given,
            long long seed) {
    auto arity = [&](size_t want) {
        if (params.size() != want)
            throw lcf::Error("gen " + name + ": expected " + std::to_string(want) +
                             " parameter(s), got " + std::to_string(params.size()));
    };
    bool random = (name == "random" || name == "randomfree");
    if (seed_given && !random)
        throw lcf::Error("gen " + name + ": --seed applies only to random generators");
    lcf::Hypergraph h;
    if (name == "k53") {
        arity(1);
        h = lcf::complete_k53(static_cast<int>(params[0]));
    } else if (name == "star") {
        arity(1);
        h = lcf::full_star(static_cast<int>(params[0]));
    } else if (name == "tight") {
        arity(1);
        h = lcf::tight_two_exceptions(static_cast<int>(params[0]));
    } else if (name == "path") {
        arity(1);
        h = lcf::linear_path(static_cast<int>(params[0]));
    } else if (name == "cyclegen") {
        arity(1);
        h = lcf::linear_cycle_gen(static_cast<int>(params[0]));
    } else if (name == "random") {
        arity(2);
        h = lcf::random_hypergraph(static_cast<int>(params[0]), static_cast<int>(params[1]),
                                   static_cast<std::uint64_t>(seed));
    } else {
        arity(2);
        h = lcf::random_cycle_free(static_cast<int>(params[0]), static_cast<int>(params[1]),
                                   static_cast<std::uint64_t>(seed));
    }
    std::cout << lcf::emit_hypergraph(h);
    return 0;
}

int cmd_check(const std::string& name, const std::string& spec, const std::string& out_path) {
    lcf::Corpus corpus = lcf::expand_corpus(spec);
    lcf::Report rep;
    if (name == "min3")
        rep = lcf::check_min3(corpus);
    else if (name == "min3x1")
        rep = lcf::check_min3_one_exception(corpus);
    else if (name == "alpha")
        rep = lcf::check_alpha_bound(corpus);
    else if (name == "thm1")
        rep = lcf::check_theorem1(corpus);
    else if (name == "conj1")
        rep = lcf::check_conjecture1(corpus);
    else if (name == "prob1")
        rep = lcf::check_problem1(corpus);
    else
        rep = lcf::stability_scan(corpus);
    std::string text = lcf::report_to_json(rep).dump(2) + "\n";
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw lcf::Error("cannot write " + out_path);
        out << text;
    }
    if (!rep.violations.empty()) return 1;
    if (rep.budget_exhausted > 0) return 3;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear-cycle-free 3-uniform hypergraph toolkit"};
    app.require_subcommand(1);

    std::string file;
    CLI::App* analyze = app.add_subcommand("analyze", "summary: sizes, cycle status, bounds");
    analyze->add_option("FILE", file, "hypergraph file")->required();
    CLI::App* cycle = app.add_subcommand("cycle", "search for a linear cycle");
    cycle->add_option("FILE", file, "hypergraph file")->required();
    CLI::App* alpha = app.add_subcommand("alpha", "exact independence number (cap-guarded)");
    alpha->add_option("FILE", file, "hypergraph file")->required();
    CLI::App* indep = app.add_subcommand("indep", "2n/5 independent set with trace");
    indep->add_option("FILE", file, "hypergraph file")->required();
    CLI::App* color = app.add_subcommand("color", "3-coloring of a cycle-free instance");
    color->add_option("FILE", file, "hypergraph file")->required();
    CLI::App* partition = app.add_subcommand("partition", "partition into edge subsets");
    partition->add_option("FILE", file, "hypergraph file")->required();

    std::string gen_name;
    std::vector<long long> gen_params;
    long long seed = 0;
    CLI::App* gen = app.add_subcommand("gen", "emit a generated instance");
    gen->add_option("NAME", gen_name, "generator")
        ->required()
        ->check(CLI::IsMember({"k53", "star", "tight", "path", "cyclegen", "random",
                               "randomfree"}));
    gen->add_option("PARAMS", gen_params, "generator parameters");
    CLI::Option* seed_opt = gen->add_option("--seed", seed, "RNG seed (random generators)");

    std::string check_name, corpus_spec, out_path;
    CLI::App* check = app.add_subcommand("check", "run a corpus check, print JSON report");
    check->add_option("NAME", check_name, "check name")
        ->required()
        ->check(CLI::IsMember({"min3", "min3x1", "alpha", "thm1", "conj1", "prob1",
                               "stability"}));
    check->add_option("--corpus", corpus_spec, "corpus spec, e.g. star(n=6),random(n=6,m=8,seeds=0..4)")
        ->required();
    check->add_option("--out", out_path, "also write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*analyze) return cmd_analyze(file);
        if (*cycle) return cmd_cycle(file);
        if (*alpha) return cmd_alpha(file);
        if (*indep) return cmd_indep(file);
        if (*color) return cmd_color(file);
        if (*partition) return cmd_partition(file);
        if (*gen) return cmd_gen(gen_name, gen_params, seed_opt->count() > 0, seed);
        if (*check) return cmd_check(check_name, corpus_spec, out_path);
    } catch (const lcf::SearchBudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const lcf::CapExceeded& e) {
        std::cerr << "cap: " << e.what() << "\n";
        return 3;
    } catch (const lcf::IndependenceViolation& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return 1;
    } catch (const lcf::ColoringViolation& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return 1;
    } catch (const lcf::CaseContradiction& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return 1;
    } catch (const lcf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
