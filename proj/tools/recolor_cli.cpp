// Batch front-end: instance generation, recoloring, verification, oracle
// queries, grid parity reports and benchmark tables.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>

#include "CLI11.hpp"
#include "recolor/basic.hpp"
#include "recolor/grid.hpp"
#include "recolor/io.hpp"
#include "recolor/oracle.hpp"
#include "recolor/subcubic.hpp"
#include "recolor/tree.hpp"

using namespace recolor;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitIo = 3;

struct InstanceFiles {
    std::string graph;
    std::string s;
    std::string t;
    std::string lists;
    int k = 3;
    int c = 0;
};

RecoloringInstance load_instance(const InstanceFiles& f) {
    RecoloringInstance inst{load_graph(f.graph), load_coloring(f.s), load_coloring(f.t), f.k, f.c, std::nullopt};
    if (!f.lists.empty()) {
        inst.lists = load_lists(f.lists);
    }
    return inst;
}

void add_instance_options(CLI::App* cmd, InstanceFiles& f) {
    cmd->add_option("--graph", f.graph, "graph file")->required();
    cmd->add_option("--s", f.s, "initial coloring file")->required();
    cmd->add_option("--t", f.t, "target coloring file")->required();
    cmd->add_option("--lists", f.lists, "list assignment file");
    cmd->add_option("--k", f.k, "colors of s and t");
    cmd->add_option("--c", f.c, "extra colors");
}

// Largest color any list mentions; list instances use it as k.
int list_palette(const ListAssignment& lists) {
    int k = 0;
    for (const auto& list : lists) {
        k = std::max(k, list.back());
    }
    return k;
}

ListAssignment uniform_lists(int n, int k) {
    std::vector<Color> all(k);
    std::iota(all.begin(), all.end(), 1);
    return ListAssignment(n, all);
}

struct Dims {
    int h = 0;
    int w = 0;
};

ToroidalGrid grid_for(const Dims& dims) {
    require(dims.h > 0 && dims.w > 0, ErrorKind::precondition, "grid algorithms need --h and --w");
    return build_toroidal_grid(dims.h, dims.w);
}

// Runs `algorithm` and returns the result together with the instance used to
// verify it (list algorithms verify against their lists).
std::pair<Recoloring, RecoloringInstance> run_algorithm(const std::string& algorithm, RecoloringInstance inst,
                                                        const Dims& dims) {
    using Fn = std::function<Recoloring(RecoloringInstance&)>;
    const std::map<std::string, Fn> table = {
        {"trivial", [](auto& i) { return recolor_trivial(i); }},
        {"bipartite", [](auto& i) { return recolor_bipartite(i); }},
        {"pathcycle3plus1", [](auto& i) { return recolor_path_cycle_3plus1(i); }},
        {"subcubic4plus1", [](auto& i) { return recolor_subcubic_4plus1(i); }},
        {"grid4plus2", [](auto& i) { return recolor_grid_4plus2(i); }},
        {"grid5plus1", [](auto& i) { return recolor_grid_5plus1(i); }},
        {"tree3plus1", [](auto& i) { return recolor_tree_3plus1(i); }},
        {"subcubic3plus1", [](auto& i) { return recolor_subcubic_3plus1(i); }},
        {"grid3plus1", [&](auto& i) { return recolor_grid_3plus1(grid_for(dims), i); }},
        {"grid4xw", [&](auto& i) { return recolor_grid_4xw(grid_for(dims), i); }},
        {"tree3",
         [](auto& i) {
             i.k = 3;
             i.c = 0;
             return recolor_tree_plain(i.g, i.s, i.t);
         }},
        {"treelist",
         [](auto& i) {
             require(i.lists.has_value(), ErrorKind::precondition, "treelist needs --lists");
             i.k = list_palette(*i.lists);
             i.c = 0;
             return recolor_tree_list(i.g, i.s, i.t, *i.lists);
         }},
        {"treelist4",
         [](auto& i) {
             if (!i.lists) {
                 i.lists = uniform_lists(i.g.size(), 4);
             }
             i.k = list_palette(*i.lists);
             i.c = 0;
             return recolor_tree_list4(i.g, i.s, i.t, *i.lists);
         }},
    };
    auto it = table.find(algorithm);
    require(it != table.end(), ErrorKind::precondition, "unknown algorithm: " + algorithm);
    auto rec = it->second(inst);
    return {std::move(rec), std::move(inst)};
}

void print_violation(const VerifyReport& report) {
    if (report.ok) {
        return;
    }
    const auto& v = *report.violation;
    std::cout << "violation step=" << v.step << " kind=" << to_string(v.kind) << " u=" << v.u << " v=" << v.v
              << '\n';
}

// Generated instance: graph and, when available, two colorings.
struct Generated {
    Graph g;
    std::optional<Coloring> s;
    std::optional<Coloring> t;
    int k = 0;
};

Generated generate(const std::string& family, const std::vector<std::string>& params, int k,
                   std::uint64_t seed) {
    auto num = [&](std::size_t i) {
        require(i < params.size(), ErrorKind::precondition, family + " needs more parameters");
        return std::stoi(params[i]);
    };
    Generated out;
    out.k = k;
    if (family == "fixture") {
        require(!params.empty(), ErrorKind::precondition, "fixture needs a name");
        const std::string name = params[0];
        const std::string prefix = "needsextra-";
        if (name.rfind(prefix, 0) == 0) {
            auto f = fixture_needsextra(name.substr(prefix.size()));
            return {std::move(f.g), std::move(f.s), std::move(f.t), f.k};
        }
        if (name == "3pathslb") {
            auto inst = fixture_3pathslb(num(1));
            return {std::move(inst.g), std::move(inst.s), std::move(inst.t), inst.k};
        }
        if (name == "4treelb") {
            auto inst = fixture_4treelb(num(1));
            return {std::move(inst.g), std::move(inst.s), std::move(inst.t), inst.k};
        }
        fail(ErrorKind::precondition, "unknown fixture: " + name);
    }
    if (family == "counterexample") {
        auto pair = construct_counterexample(num(0), num(1));
        return {build_toroidal_grid(num(0), num(1)).graph, std::move(pair.s), std::move(pair.t), 3};
    }
    if (family == "path") {
        out.g = build_path(num(0));
    } else if (family == "cycle") {
        out.g = build_cycle(num(0));
    } else if (family == "tree") {
        out.g = random_tree(num(0), seed);
    } else if (family == "tree3reg") {
        out.g = build_balanced_3regular_tree(num(0));
    } else if (family == "torus") {
        out.g = build_toroidal_grid(num(0), num(1)).graph;
    } else if (family == "prism") {
        out.g = build_prism();
    } else if (family == "k4") {
        out.g = build_complete(4);
    } else if (family == "kab") {
        out.g = build_complete_bipartite(num(0), num(1));
    } else if (family == "subcubic-random") {
        out.g = random_subcubic(num(0), seed);
    } else {
        fail(ErrorKind::precondition, "unknown family: " + family);
    }
    if (k > 0) {
        out.s = random_proper_coloring(out.g, k, seed);
        out.t = random_proper_coloring(out.g, k, seed + 1);
    }
    return out;
}

struct BenchRow {
    int n = 0;
    int rounds = 0;
    int length = 0;
    bool ok = false;
};

BenchRow bench_one(const std::string& algorithm, int size, std::uint64_t seed) {
    RecoloringInstance inst;
    Dims dims;
    if (algorithm == "tree3plus1" || algorithm == "tree3" || algorithm == "treelist4") {
        const int k = algorithm == "treelist4" ? 4 : 3;
        inst.g = random_tree(size, seed);
        inst.s = random_proper_coloring(inst.g, k, seed + 1);
        inst.t = random_proper_coloring(inst.g, k, seed + 2);
        inst.k = k;
        inst.c = algorithm == "tree3plus1" ? 1 : 0;
    } else if (algorithm == "subcubic3plus1") {
        inst.g = random_subcubic(size, seed);
        inst.s = random_proper_coloring(inst.g, 3, seed + 1);
        inst.t = random_proper_coloring(inst.g, 3, seed + 2);
        inst.k = 3;
        inst.c = 1;
    } else if (algorithm == "grid4xw" || algorithm == "grid3plus1") {
        dims = {4, size};
        inst.g = build_toroidal_grid(4, size).graph;
        inst.s = random_proper_coloring(inst.g, 3, seed + 1);
        inst.t = random_proper_coloring(inst.g, 3, seed + 2);
        inst.k = 3;
        inst.c = 1;
    } else {
        fail(ErrorKind::precondition, "bench supports tree3plus1, tree3, treelist4, subcubic3plus1, grid4xw");
    }
    auto [rec, used] = run_algorithm(algorithm, inst, dims);
    return {inst.g.size(), rec.rounds, rec.schedule.length(), verify_strong(used, rec.schedule).ok};
}

int run(int argc, char** argv) {
    CLI::App app{"distributed recoloring toolkit"};
    // --h is the torus height, so help is long-form only.
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);

    // gen
    std::string family;
    std::vector<std::string> params;
    int gen_k = 3;
    std::uint64_t seed = 1;
    std::string out_prefix = "instance";
    auto* gen = app.add_subcommand("gen", "generate a graph and two colorings");
    gen->add_option("family", family, "path cycle tree tree3reg torus prism k4 kab subcubic-random fixture counterexample")
        ->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("--k", gen_k, "colors for random colorings (0: graph only)");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--out", out_prefix, "output prefix: <out>.graph, <out>.s, <out>.t");

    // recolor
    std::string algorithm;
    InstanceFiles rec_files;
    Dims dims;
    std::string schedule_out;
    auto* recolor = app.add_subcommand("recolor", "run an algorithm and verify its schedule");
    recolor->add_option("algorithm", algorithm, "algorithm name")->required();
    add_instance_options(recolor, rec_files);
    recolor->add_option("--h", dims.h, "torus height for grid algorithms");
    recolor->add_option("--w", dims.w, "torus width for grid algorithms");
    recolor->add_option("--out", schedule_out, "schedule output file");

    // verify
    InstanceFiles ver_files;
    std::string schedule_in;
    std::string mode = "strong";
    auto* verify = app.add_subcommand("verify", "check a schedule");
    add_instance_options(verify, ver_files);
    verify->add_option("--schedule", schedule_in, "schedule file")->required();
    verify->add_option("--mode", mode, "strong or weak")->check(CLI::IsMember({"strong", "weak"}));

    // oracle
    InstanceFiles orc_files;
    std::int64_t max_states = OracleOptions{}.max_states;
    auto* oracle = app.add_subcommand("oracle", "exact reachability by breadth-first search");
    add_instance_options(oracle, orc_files);
    oracle->add_option("--max-states", max_states, "state cap");

    // parity
    Dims parity_dims;
    std::string parity_coloring;
    auto* parity = app.add_subcommand("parity", "type-A and type-B tile counts of a torus coloring");
    parity->add_option("--h", parity_dims.h, "torus height")->required();
    parity->add_option("--w", parity_dims.w, "torus width")->required();
    parity->add_option("--coloring", parity_coloring, "coloring file")->required();

    // check-ab
    int palette = 4;
    auto* check_ab = app.add_subcommand("check-ab", "exhaustive 3x3 parity check");
    check_ab->add_option("--palette", palette, "colors 1..palette");

    // bench
    std::string bench_algorithm;
    std::vector<int> sizes;
    int seeds = 1;
    auto* bench = app.add_subcommand("bench", "rounds and length per size, as TSV");
    bench->add_option("algorithm", bench_algorithm, "algorithm name")->required();
    bench->add_option("--sizes", sizes, "sizes (n, or w for grids)")->required()->delimiter(',');
    bench->add_option("--seed", seed, "first seed");
    bench->add_option("--seeds", seeds, "seeds per size");

    CLI11_PARSE(app, argc, argv);

    if (*gen) {
        const auto generated = generate(family, params, gen_k, seed);
        save_graph(out_prefix + ".graph", generated.g);
        if (generated.s) {
            save_coloring(out_prefix + ".s", *generated.s);
            save_coloring(out_prefix + ".t", *generated.t);
        }
        std::cout << "n=" << generated.g.size() << " m=" << generated.g.edge_count() << " k=" << generated.k
                  << '\n';
        return 0;
    }
    if (*recolor) {
        const auto start = std::chrono::steady_clock::now();
        auto [rec, used] = run_algorithm(algorithm, load_instance(rec_files), dims);
        const auto report = verify_strong(used, rec.schedule);
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        if (!schedule_out.empty()) {
            save_schedule(schedule_out, rec.schedule);
        }
        std::cout << "rounds=" << rec.rounds << " length=" << rec.schedule.length()
                  << " verified=" << (report.ok ? "ok" : "fail") << '\n';
        std::cerr << "algorithm=" << algorithm << " n=" << used.g.size() << " time_ms=" << ms << '\n';
        print_violation(report);
        return report.ok ? 0 : kExitFail;
    }
    if (*verify) {
        const auto inst = load_instance(ver_files);
        const auto sch = load_schedule(schedule_in);
        const auto report = mode == "weak" ? verify_weak(inst, sch) : verify_strong(inst, sch);
        std::cout << "verified=" << (report.ok ? "ok" : "fail") << '\n';
        print_violation(report);
        return report.ok ? 0 : kExitFail;
    }
    if (*oracle) {
        const auto inst = load_instance(orc_files);
        OracleOptions options;
        options.max_states = max_states;
        const auto result = search(inst, options);
        std::cout << "reachable=" << (result.reachable ? "true" : "false") << " shortest=";
        if (result.reachable) {
            std::cout << result.moves.size();
        } else {
            std::cout << "inf";
        }
        std::cout << " states_explored=" << result.states_explored << '\n';
        return 0;
    }
    if (*parity) {
        const auto grid = build_toroidal_grid(parity_dims.h, parity_dims.w);
        const auto c = census(grid, load_coloring(parity_coloring));
        std::cout << "a=" << c.a_count << " b=" << c.b_count << " a_parity=" << (c.a_odd ? "odd" : "even")
                  << " b_parity=" << (c.b_odd ? "odd" : "even") << '\n';
        return 0;
    }
    if (*check_ab) {
        const auto r = check_ab_parity_lemma(palette);
        std::cout << "patches=" << r.patches << " moves=" << r.moves << " a_flips=" << r.a_flips
                  << " counterexamples=" << r.counterexamples << '\n';
        return r.counterexamples == 0 ? 0 : kExitFail;
    }
    if (*bench) {
        std::cout << "algorithm\tn\tseed\trounds\tlength\tverified\n";
        bool all_ok = true;
        for (int size : sizes) {
            for (int i = 0; i < seeds; ++i) {
                const auto row = bench_one(bench_algorithm, size, seed + i);
                all_ok = all_ok && row.ok;
                std::cout << bench_algorithm << '\t' << row.n << '\t' << seed + i << '\t' << row.rounds << '\t'
                          << row.length << '\t' << (row.ok ? "ok" : "fail") << '\n';
            }
        }
        return all_ok ? 0 : kExitFail;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return e.kind() == ErrorKind::io || e.kind() == ErrorKind::format ? kExitIo : kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    }
}
