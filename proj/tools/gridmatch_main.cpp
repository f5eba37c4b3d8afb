// gridmatch command line tool.
//
// Exit codes: 0 solvable/OK, 1 unsolvable/FAIL, 2 usage or parse error,
// 3 validation failure (sequence longer than the visitable cell count),
// 4 node budget exhausted before a decision.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gridmatch/gridmatch.hpp"

namespace fs = std::filesystem;
using namespace gridmatch;

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitUnsolvable = 1;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitUnknown = 4;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("GRIDMATCH_SEED")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return value;
        std::cerr << "warning: ignoring non-numeric GRIDMATCH_SEED\n";
    }
    return 0;
}

struct SolveFlags {
    bool no_count_prune = false;
    bool connectivity_prune = false;
    std::optional<std::uint64_t> budget;
    bool parallel = false;

    SolverConfig config() const {
        SolverConfig cfg;
        cfg.pruning_counts = !no_count_prune;
        cfg.pruning_connectivity = connectivity_prune;
        cfg.node_budget = budget;
        cfg.parallel = parallel;
        return cfg;
    }
};

void add_solver_flags(CLI::App* cmd, SolveFlags& flags) {
    cmd->add_flag("--no-count-prune", flags.no_count_prune,
                  "disable suffix digit-count pruning");
    cmd->add_flag("--connectivity-prune", flags.connectivity_prune,
                  "enable flood-fill reachability pruning");
    cmd->add_option("--budget", flags.budget,
                    "abort after this many expanded search nodes (outcome: unknown)");
    cmd->add_flag("--parallel", flags.parallel, "split the search across start cells");
}

int report_outcome(const SolveOutcome& out) {
    std::fprintf(stderr, "nodes=%llu elapsed_ms=%.3f\n",
                 static_cast<unsigned long long>(out.nodes_expanded), out.elapsed_ms());
    switch (out.status) {
        case SolveStatus::solved:
            std::cout << format_path(*out.path) << "\n";
            return kExitSolved;
        case SolveStatus::unsolvable:
            std::cout << "UNSOLVABLE\n";
            return kExitUnsolvable;
        case SolveStatus::unknown:
            std::cout << "UNKNOWN\n";
            return kExitUnknown;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact search for 0/1 sequences along king-move paths in digit matrices"};
    app.require_subcommand(1);

    // --- solve ---
    auto* solve_cmd = app.add_subcommand("solve", "decide a matrix/sequence instance");
    std::string solve_matrix, solve_seq;
    SolveFlags solve_flags;
    solve_cmd->add_option("matrix", solve_matrix, "matrix file")->required();
    solve_cmd->add_option("sequence", solve_seq, "sequence file")->required();
    add_solver_flags(solve_cmd, solve_flags);

    // --- verify ---
    auto* verify_cmd = app.add_subcommand("verify", "check a witness path against an instance");
    std::string verify_matrix, verify_seq, verify_path_file;
    verify_cmd->add_option("matrix", verify_matrix, "matrix file")->required();
    verify_cmd->add_option("sequence", verify_seq, "sequence file")->required();
    verify_cmd->add_option("path", verify_path_file, "path file (row,col;row,col;...)")
        ->required();

    // --- reduce ---
    auto* reduce_cmd =
        app.add_subcommand("reduce", "turn a grid graph into matrix/sequence instances");
    std::string reduce_grid;
    std::optional<int> reduce_k;
    std::string reduce_out_dir = ".";
    reduce_cmd->add_option("grid", reduce_grid, "grid file ('.' present, '#' absent)")
        ->required();
    reduce_cmd->add_option("--k", reduce_k,
                           "target path order (default: twice the minority color count)");
    reduce_cmd->add_option("--out-dir", reduce_out_dir, "directory for the instance files");

    // --- pad ---
    auto* pad_cmd = app.add_subcommand("pad", "pad a matrix to a square with blocked cells");
    std::string pad_matrix;
    std::string pad_out;
    pad_cmd->add_option("matrix", pad_matrix, "matrix file")->required();
    pad_cmd->add_option("--out", pad_out, "write to file instead of stdout");

    // --- gen ---
    auto* gen_cmd = app.add_subcommand("gen", "generate instances");
    GenSpec gen_spec;
    gen_spec.seed = default_seed();
    std::string gen_out;
    const std::map<std::string, GenKind> kind_names{
        {"random-matrix", GenKind::random_matrix},
        {"random-grid", GenKind::random_grid},
        {"snake", GenKind::snake},
    };
    gen_cmd->add_option("--kind", gen_spec.kind, "instance family")
        ->transform(CLI::CheckedTransformer(kind_names, CLI::ignore_case))
        ->required();
    gen_cmd->add_option("--n", gen_spec.rows, "rows")->required();
    gen_cmd->add_option("--m", gen_spec.cols, "columns")->required();
    gen_cmd->add_option("--blocked-fraction", gen_spec.blocked_fraction,
                        "probability of a blocked cell / absent node");
    gen_cmd->add_option("--seed", gen_spec.seed, "PRNG seed (default: $GRIDMATCH_SEED or 0)");
    gen_cmd->add_option("--out", gen_out, "output file prefix")->required();

    // --- bench ---
    auto* bench_cmd = app.add_subcommand("bench", "solve generated instances, write CSV");
    GenSpec bench_spec;
    bench_spec.seed = default_seed();
    int bench_count = 10;
    std::string bench_csv;
    SolveFlags bench_flags;
    bench_cmd->add_option("--kind", bench_spec.kind, "instance family")
        ->transform(CLI::CheckedTransformer(kind_names, CLI::ignore_case))
        ->required();
    bench_cmd->add_option("--n", bench_spec.rows, "rows")->required();
    bench_cmd->add_option("--m", bench_spec.cols, "columns")->required();
    bench_cmd->add_option("--blocked-fraction", bench_spec.blocked_fraction,
                          "probability of a blocked cell / absent node");
    bench_cmd->add_option("--seed", bench_spec.seed,
                          "base seed; instance i uses seed + i");
    bench_cmd->add_option("--count", bench_count, "number of instances");
    bench_cmd->add_option("--csv", bench_csv, "output CSV file")->required();
    add_solver_flags(bench_cmd, bench_flags);

    // --- render ---
    auto* render_cmd = app.add_subcommand("render", "draw a matrix (and optional path)");
    std::string render_matrix;
    std::string render_path_file;
    std::string render_svg_file;
    render_cmd->add_option("matrix", render_matrix, "matrix file")->required();
    render_cmd->add_option("path", render_path_file, "optional path file");
    render_cmd->add_option("--svg", render_svg_file, "also write an SVG document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(solve_cmd)) {
            const DigitMatrix matrix = load_matrix(solve_matrix);
            const BitSequence sequence = load_sequence(solve_seq);
            const ValidationReport report = validate_instance(matrix, sequence);
            if (!report.ok) {
                std::cerr << "validation failed: sequence length " << report.sequence_length
                          << " exceeds " << report.count_zero << "+" << report.count_one
                          << " visitable cells\n";
                return kExitValidation;
            }
            return report_outcome(solve(matrix, sequence, solve_flags.config()));
        }

        if (app.got_subcommand(verify_cmd)) {
            const DigitMatrix matrix = load_matrix(verify_matrix);
            const BitSequence sequence = load_sequence(verify_seq);
            const CellPath path = load_path(verify_path_file);
            if (verify_path(matrix, sequence, path)) {
                std::cout << "OK\n";
                return kExitSolved;
            }
            std::cout << "FAIL\n";
            return kExitUnsolvable;
        }

        if (app.got_subcommand(reduce_cmd)) {
            const InducedGridGraph grid = load_grid(reduce_grid);
            const auto [blue, white] = grid_color_counts(grid);
            const int k = reduce_k.value_or(2 * std::min(blue, white));
            const std::vector<ReducedInstance> instances = reduce_longest_path(grid, k);
            const std::string stem = fs::path(reduce_grid).stem().string();
            for (std::size_t i = 0; i < instances.size(); ++i) {
                const fs::path out = fs::path(reduce_out_dir) /
                                     (stem + "_k" + std::to_string(k) + "_" +
                                      std::to_string(i) + ".inst");
                write_file(out, instances[i].to_text());
                std::cout << out.string() << "\n";
            }
            return kExitSolved;
        }

        if (app.got_subcommand(pad_cmd)) {
            const std::string text = pad_to_square(load_matrix(pad_matrix)).to_text();
            if (pad_out.empty())
                std::cout << text;
            else
                write_file(pad_out, text);
            return kExitSolved;
        }

        if (app.got_subcommand(gen_cmd)) {
            const GeneratedInstance inst = gen_instance(gen_spec);
            if (inst.matrix) {
                write_file(gen_out + ".mat", inst.matrix->to_text());
                std::cout << gen_out << ".mat\n";
            }
            if (inst.grid) {
                write_file(gen_out + ".grid", inst.grid->to_text());
                std::cout << gen_out << ".grid\n";
            }
            if (inst.sequence) {
                write_file(gen_out + ".seq", inst.sequence->str() + "\n");
                std::cout << gen_out << ".seq\n";
            }
            if (inst.witness) {
                write_file(gen_out + ".path", format_path(*inst.witness) + "\n");
                std::cout << gen_out << ".path\n";
            }
            return kExitSolved;
        }

        if (app.got_subcommand(bench_cmd)) {
            std::vector<GenSpec> specs;
            specs.reserve(static_cast<std::size_t>(bench_count));
            for (int i = 0; i < bench_count; ++i) {
                GenSpec spec = bench_spec;
                spec.seed = bench_spec.seed + static_cast<std::uint64_t>(i);
                specs.push_back(spec);
            }
            const std::vector<BenchRecord> records = bench_run(specs, bench_flags.config());
            write_file(bench_csv, to_csv(records));
            std::fprintf(stderr, "wrote %zu records to %s\n", records.size(),
                         bench_csv.c_str());
            return kExitSolved;
        }

        if (app.got_subcommand(render_cmd)) {
            const DigitMatrix matrix = load_matrix(render_matrix);
            std::optional<CellPath> path;
            if (!render_path_file.empty()) path = load_path(render_path_file);
            std::cout << render_ascii(matrix, path ? &*path : nullptr);
            if (!render_svg_file.empty())
                write_file(render_svg_file, render_svg(matrix, path ? &*path : nullptr));
            return kExitSolved;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    return kExitUsage;
}
