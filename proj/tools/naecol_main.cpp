// naecol: command line front door for the 2-coloring / NAE-SAT toolkit.
//
// Exit codes: 0 = affirmative (colorable, certified, agreement, artifact
// written), 1 = negative (not colorable, not certified, disagreement,
// nothing found), 2 = usage or input error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "naecol/formula.hpp"
#include "naecol/gadgets.hpp"
#include "naecol/graph.hpp"
#include "naecol/io.hpp"
#include "naecol/reduction.hpp"
#include "naecol/search.hpp"
#include "naecol/solver.hpp"

namespace {

using namespace naecol;

Formula load_formula(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open CNF file: " + path);
    return parse_dimacs(in);
}

void emit_json(const nlohmann::json& value, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << value.dump(2) << "\n";
    } else {
        write_json_file(out_path, value);
    }
}

std::optional<Coloring> load_optional_coloring(const std::string& path) {
    if (path.empty()) return std::nullopt;
    return coloring_from_json(read_json_file(path));
}

void print_size_table(const SizePrediction& prediction, const ReductionStats& stats) {
    auto row = [](const char* label, long long published, long long derived, int built) {
        std::printf("%-10s %12lld %12lld %12d%s\n", label, published, derived, built,
                    published == derived ? "" : "   (published formula disagrees)");
    };
    std::printf("%-10s %12s %12s %12s\n", "", "published", "derived", "built");
    row("vertices", prediction.vertices_published, prediction.vertices_derived,
        stats.num_vertices);
    row("edges", prediction.edges_published, prediction.edges_derived, stats.num_edges);
}

int run_reduce(const std::string& cnf_path, int k, bool necklace, const std::string& out_path) {
    const Formula padded = pad_to_width(load_formula(cnf_path), k);
    const ReductionOutput reduction =
        necklace ? reduce_necklace(padded) : reduce(padded, k);
    const SizePrediction prediction =
        predicted_sizes(k, padded.num_variables, static_cast<int>(padded.clauses.size()),
                        necklace ? ReductionVariant::Necklace : ReductionVariant::Basic);
    print_size_table(prediction, reduction.stats);
    emit_json(reduction_to_json(reduction), out_path);
    return 0;
}

int run_solve(const std::string& graph_path, int k, const std::string& method,
              const std::string& out_path) {
    const Graph graph = graph_from_json(read_json_file(graph_path));
    std::optional<Coloring> coloring;
    if (method == "brute") {
        coloring = brute_force_coloring(graph, k);
    } else {
        coloring = decide_col(graph, k);
    }
    if (!coloring) {
        std::cerr << "not colorable: every 2-coloring has a monochromatic " << k << "-cycle\n";
        return 1;
    }
    emit_json(coloring_to_json(*coloring), out_path);
    return 0;
}

int run_check(const std::string& graph_path, const std::string& coloring_path, int k) {
    const Graph graph = graph_from_json(read_json_file(graph_path));
    const Coloring coloring = coloring_from_json(read_json_file(coloring_path));
    const bool valid = is_valid_coloring(graph, k, coloring);
    std::cout << (valid ? "valid" : "invalid") << ": coloring "
              << (valid ? "leaves no" : "has a") << " monochromatic " << k << "-cycle\n";
    return valid ? 0 : 1;
}

int run_gadget_gen(const std::string& family, int param, const std::string& out_path) {
    Gadget gadget;
    if (family == "loop") {
        gadget = k4_loop(param);
    } else {
        gadget = tree_gadget(param);
    }
    emit_json(gadget_to_json(gadget), out_path);
    return 0;
}

int run_gadget_verify(const std::string& gadget_path, const std::string& method) {
    const Gadget gadget = gadget_from_json(read_json_file(gadget_path));
    const VerificationReport report = verify_super_edge(
        gadget, method == "brute" ? VerifyMethod::Exhaustive : VerifyMethod::Sat);
    std::cout << "existence=" << (report.existence ? "yes" : "no")
              << " forcing=" << (report.forcing ? "yes" : "no");
    if (report.valid_colorings) std::cout << " valid_colorings=" << *report.valid_colorings;
    std::cout << " certified=" << (report.certified() ? "yes" : "no") << "\n";
    return report.certified() ? 0 : 1;
}

int run_gadget_search(int k, int max_vertices, const std::string& objective, int workers,
                      uint64_t max_graphs, const std::string& resume, bool no_prune,
                      const std::string& out_path) {
    SearchOptions options;
    options.k = k;
    options.max_vertices = max_vertices;
    options.objective =
        objective == "edges" ? SearchObjective::Edges : SearchObjective::Vertices;
    options.workers = workers;
    options.max_graphs = max_graphs;
    options.resume = resume;
    options.prune = !no_prune;
    const SearchResult result = search_min_gadget(options);

    const SearchReport& report = result.report;
    std::cerr << "examined " << report.graphs_examined << " canonical graphs in "
              << report.elapsed_seconds << "s; level counts:";
    for (uint64_t count : report.canonical_counts) std::cerr << " " << count;
    std::cerr << "\n";
    if (!report.completed) {
        std::cerr << "budget exhausted; resume with --resume '" << report.resume_token << "'\n";
    }
    if (result.gadget) {
        std::cerr << "smallest certified gadget: " << result.gadget->graph.num_vertices()
                  << " vertices, " << result.gadget->graph.num_edges() << " edges\n";
    } else {
        std::cerr << "no certified gadget up to " << max_vertices << " vertices\n";
    }
    if (!out_path.empty()) {
        write_json_file(out_path, search_report_to_json(report, result.gadget));
    }
    return result.gadget ? 0 : 1;
}

int run_roundtrip(const std::string& cnf_path, int k, bool necklace, int random_vars,
                  int random_clauses, uint64_t seed) {
    Formula formula;
    if (!cnf_path.empty()) {
        formula = load_formula(cnf_path);
    } else if (random_vars > 0) {
        formula = random_formula(random_vars, random_clauses, k, seed);
    } else {
        std::cerr << "roundtrip: need a CNF file or --random-vars\n";
        return 2;
    }
    const Formula padded = pad_to_width(formula, k);
    const ReductionOutput reduction =
        necklace ? reduce_necklace(padded) : reduce(padded, k);

    const std::optional<Assignment> nae_model = brute_force_nae(padded);
    const std::optional<Coloring> coloring = decide_col(reduction.graph, k);

    bool agreement = nae_model.has_value() == coloring.has_value();
    bool extracted_ok = true;
    if (coloring) {
        const Assignment extracted = extract_assignment(reduction, *coloring);
        extracted_ok = eval_nae(padded, extracted);
        agreement = agreement && extracted_ok;
    }
    std::cout << "nae=" << (nae_model ? "satisfiable" : "unsatisfiable")
              << " colorable=" << (coloring ? "yes" : "no");
    if (coloring) std::cout << " extracted_assignment=" << (extracted_ok ? "valid" : "INVALID");
    std::cout << " agreement=" << (agreement ? "yes" : "NO") << "\n";
    return agreement ? 0 : 1;
}

int run_export_dot(const std::string& graph_path, const std::string& coloring_path,
                   const std::string& out_path) {
    const nlohmann::json value = read_json_file(graph_path);
    const Graph graph = graph_from_json(value);
    const std::optional<Coloring> coloring = load_optional_coloring(coloring_path);
    std::optional<std::pair<int, int>> highlight;
    if (value.is_object() && value.contains("designated_edge")) {
        const Gadget gadget = gadget_from_json(value);
        highlight = std::make_pair(gadget.x, gadget.y);
    }
    const std::string dot = to_dot(graph, coloring ? &*coloring : nullptr, highlight);
    if (out_path.empty()) {
        std::cout << dot;
    } else {
        write_text_file(out_path, dot);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-coloring with no monochromatic k-cycle: reductions, gadgets, solving"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "naecol 0.1.0");

    int exit_code = 2;

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a NAE-CNF formula to a graph");
    auto reduce_cnf = std::make_shared<std::string>();
    auto reduce_k = std::make_shared<int>(3);
    auto reduce_necklace_flag = std::make_shared<bool>(false);
    auto reduce_out = std::make_shared<std::string>();
    reduce_cmd->add_option("cnf-file", *reduce_cnf, "DIMACS CNF input")->required();
    reduce_cmd->add_option("--k", *reduce_k, "cycle length")->required()->check(CLI::Range(3, 16));
    reduce_cmd->add_flag("--necklace", *reduce_necklace_flag,
                         "share one variable loop (k=3 only)");
    reduce_cmd->add_option("--out", *reduce_out, "output reduction JSON")->required();
    reduce_cmd->callback([=, &exit_code] {
        if (*reduce_necklace_flag && *reduce_k != 3) {
            throw CLI::ValidationError("--necklace requires --k 3");
        }
        exit_code = run_reduce(*reduce_cnf, *reduce_k, *reduce_necklace_flag, *reduce_out);
    });

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Decide 2-colorability without a mono k-cycle");
    auto solve_graph = std::make_shared<std::string>();
    auto solve_k = std::make_shared<int>(3);
    auto solve_method = std::make_shared<std::string>("sat");
    auto solve_out = std::make_shared<std::string>();
    solve_cmd->add_option("graph-json", *solve_graph, "graph JSON input")->required();
    solve_cmd->add_option("--k", *solve_k, "cycle length")->required()->check(CLI::Range(3, 16));
    solve_cmd->add_option("--method", *solve_method, "sat or brute")
        ->check(CLI::IsMember({"sat", "brute"}));
    solve_cmd->add_option("--out", *solve_out, "coloring JSON output (stdout when omitted)");
    solve_cmd->callback(
        [=, &exit_code] { exit_code = run_solve(*solve_graph, *solve_k, *solve_method, *solve_out); });

    // check
    auto* check_cmd = app.add_subcommand("check", "Check a coloring for monochromatic k-cycles");
    auto check_graph = std::make_shared<std::string>();
    auto check_coloring = std::make_shared<std::string>();
    auto check_k = std::make_shared<int>(3);
    check_cmd->add_option("graph-json", *check_graph, "graph JSON input")->required();
    check_cmd->add_option("coloring-json", *check_coloring, "coloring JSON input")->required();
    check_cmd->add_option("--k", *check_k, "cycle length")->required()->check(CLI::Range(3, 16));
    check_cmd->callback(
        [=, &exit_code] { exit_code = run_check(*check_graph, *check_coloring, *check_k); });

    // gadget gen | verify | search
    auto* gadget_cmd = app.add_subcommand("gadget", "Generate, verify, or search for gadgets");
    gadget_cmd->require_subcommand(1);

    auto* gen_cmd = gadget_cmd->add_subcommand("gen", "Emit a gadget as JSON");
    auto gen_family = std::make_shared<std::string>();
    auto gen_param = std::make_shared<int>(0);
    auto gen_out = std::make_shared<std::string>();
    gen_cmd->add_option("--family", *gen_family, "loop or tree")
        ->required()
        ->check(CLI::IsMember({"loop", "tree"}));
    gen_cmd->add_option("--param", *gen_param, "loop length / tree k")->required();
    gen_cmd->add_option("--out", *gen_out, "output gadget JSON")->required();
    gen_cmd->callback(
        [=, &exit_code] { exit_code = run_gadget_gen(*gen_family, *gen_param, *gen_out); });

    auto* verify_cmd = gadget_cmd->add_subcommand("verify", "Run the super-edge contract");
    auto verify_path = std::make_shared<std::string>();
    auto verify_method = std::make_shared<std::string>("sat");
    verify_cmd->add_option("gadget-json", *verify_path, "gadget JSON input")->required();
    verify_cmd->add_option("--method", *verify_method, "sat or brute")
        ->check(CLI::IsMember({"sat", "brute"}));
    verify_cmd->callback(
        [=, &exit_code] { exit_code = run_gadget_verify(*verify_path, *verify_method); });

    auto* search_cmd = gadget_cmd->add_subcommand("search", "Search for the smallest gadget");
    auto search_k = std::make_shared<int>(3);
    auto search_max = std::make_shared<int>(7);
    auto search_objective = std::make_shared<std::string>("vertices");
    auto search_workers = std::make_shared<int>(1);
    auto search_budget = std::make_shared<uint64_t>(0);
    auto search_resume = std::make_shared<std::string>();
    auto search_no_prune = std::make_shared<bool>(false);
    auto search_out = std::make_shared<std::string>();
    search_cmd->add_option("--k", *search_k, "cycle length")->check(CLI::Range(3, 16));
    search_cmd->add_option("--max-vertices", *search_max, "largest vertex count explored")
        ->required()
        ->check(CLI::Range(1, 11));
    search_cmd->add_option("--objective", *search_objective, "vertices or edges")
        ->check(CLI::IsMember({"vertices", "edges"}));
    search_cmd->add_option("--workers", *search_workers, "worker threads")
        ->check(CLI::Range(1, 64));
    search_cmd->add_option("--max-graphs", *search_budget,
                           "budget on canonical graphs examined (0 = unlimited)");
    search_cmd->add_option("--resume", *search_resume, "resume token from an interrupted run");
    search_cmd->add_flag("--no-prune", *search_no_prune,
                         "disable provably-safe candidate pruning (self-check path)");
    search_cmd->add_option("--out", *search_out, "search report JSON output");
    search_cmd->callback([=, &exit_code] {
        exit_code = run_gadget_search(*search_k, *search_max, *search_objective, *search_workers,
                                      *search_budget, *search_resume, *search_no_prune,
                                      *search_out);
    });

    // roundtrip
    auto* round_cmd =
        app.add_subcommand("roundtrip", "Compare brute-force NAE with the reduction + decider");
    auto round_cnf = std::make_shared<std::string>();
    auto round_k = std::make_shared<int>(3);
    auto round_necklace = std::make_shared<bool>(false);
    auto round_vars = std::make_shared<int>(0);
    auto round_clauses = std::make_shared<int>(0);
    auto round_seed = std::make_shared<uint64_t>(0);
    round_cmd->add_option("cnf-file", *round_cnf, "DIMACS CNF input (omit with --random-vars)");
    round_cmd->add_option("--k", *round_k, "cycle length")->required()->check(CLI::Range(3, 16));
    round_cmd->add_flag("--necklace", *round_necklace, "use the shared-loop variant (k=3 only)");
    round_cmd->add_option("--random-vars", *round_vars, "generate a random formula instead");
    round_cmd->add_option("--random-clauses", *round_clauses, "clauses for --random-vars");
    round_cmd->add_option("--seed", *round_seed, "seed for --random-vars");
    round_cmd->callback([=, &exit_code] {
        if (*round_necklace && *round_k != 3) {
            throw CLI::ValidationError("--necklace requires --k 3");
        }
        exit_code = run_roundtrip(*round_cnf, *round_k, *round_necklace, *round_vars,
                                  *round_clauses, *round_seed);
    });

    // export-dot
    auto* dot_cmd = app.add_subcommand("export-dot", "Write a GraphViz rendering");
    auto dot_graph = std::make_shared<std::string>();
    auto dot_coloring = std::make_shared<std::string>();
    auto dot_out = std::make_shared<std::string>();
    dot_cmd->add_option("graph-json", *dot_graph, "graph or gadget JSON input")->required();
    dot_cmd->add_option("--coloring", *dot_coloring, "coloring JSON to fill vertices");
    dot_cmd->add_option("--out", *dot_out, "output DOT file (stdout when omitted)");
    dot_cmd->callback([=, &exit_code] {
        exit_code = run_export_dot(*dot_graph, *dot_coloring, *dot_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const DimacsError& e) {
        std::cerr << "CNF parse error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
