#pragma once

#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridmatch/errors.hpp"
#include "gridmatch/gen.hpp"
#include "gridmatch/solver.hpp"

namespace gridmatch {

struct BenchRecord {
    std::string instance_id;
    int rows = 0;
    int cols = 0;
    std::size_t sequence_length = 0;
    SolveStatus outcome = SolveStatus::unknown;
    std::uint64_t nodes_expanded = 0;
    double elapsed_ms = 0.0;  // quantized to microseconds so CSV round-trips exactly

    friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

inline constexpr std::string_view kBenchCsvHeader =
    "instance_id,n,m,sequence_length,outcome,nodes_expanded,elapsed_ms";

// The (matrix, sequence) pair a bench run solves for this spec.
// random_matrix continues the spec's own engine stream to draw a sequence of
// length uniform in [0, min(#visitable, 12)]; random_grid pairs the reduced
// matrix with its canonical alternating sequence; snake ships both already.
inline std::pair<DigitMatrix, BitSequence> bench_instance(const GenSpec& spec) {
    detail::check_spec(spec);
    std::mt19937_64 rng(spec.seed);
    switch (spec.kind) {
        case GenKind::random_matrix: {
            DigitMatrix matrix = detail::random_matrix_cells(rng, spec);
            const std::uint64_t cap =
                std::min<std::uint64_t>(12, static_cast<std::uint64_t>(matrix.count_zero()) +
                                                static_cast<std::uint64_t>(matrix.count_one()));
            const std::uint64_t len = rng() % (cap + 1);
            std::string bits;
            for (std::uint64_t i = 0; i < len; ++i)
                bits += detail::unit_draw(rng) < 0.5 ? '0' : '1';
            return {std::move(matrix), BitSequence(std::move(bits))};
        }
        case GenKind::random_grid: {
            const InducedGridGraph grid = detail::random_grid_nodes(rng, spec);
            const auto [blue, white] = grid_color_counts(grid);
            return {grid_to_matrix(grid), alternating_sequence(blue, white)};
        }
        case GenKind::snake: {
            GeneratedInstance inst = gen_instance(spec);
            return {std::move(*inst.matrix), std::move(*inst.sequence)};
        }
    }
    throw InvalidSpec("bench_instance: unknown generator kind");
}

inline std::string bench_instance_id(const GenSpec& spec) {
    return std::string(to_string(spec.kind)) + "-" + std::to_string(spec.rows) + "x" +
           std::to_string(spec.cols) + "-s" + std::to_string(spec.seed);
}

// One record per spec, solved sequentially so timings stay uncontended.
inline std::vector<BenchRecord> bench_run(const std::vector<GenSpec>& specs,
                                          const SolverConfig& cfg = {}) {
    std::vector<BenchRecord> records;
    records.reserve(specs.size());
    for (const GenSpec& spec : specs) {
        auto [matrix, sequence] = bench_instance(spec);
        SolveOutcome outcome = solve(matrix, sequence, cfg);
        const auto us =
            std::chrono::duration_cast<std::chrono::microseconds>(outcome.elapsed).count();
        records.push_back({bench_instance_id(spec), matrix.rows(), matrix.cols(),
                           sequence.size(), outcome.status, outcome.nodes_expanded,
                           static_cast<double>(us) / 1000.0});
    }
    return records;
}

inline std::string to_csv(const std::vector<BenchRecord>& records) {
    std::string out(kBenchCsvHeader);
    out += '\n';
    char buf[64];
    for (const BenchRecord& r : records) {
        out += r.instance_id;
        out += ',';
        out += std::to_string(r.rows);
        out += ',';
        out += std::to_string(r.cols);
        out += ',';
        out += std::to_string(r.sequence_length);
        out += ',';
        out += to_string(r.outcome);
        out += ',';
        out += std::to_string(r.nodes_expanded);
        out += ',';
        std::snprintf(buf, sizeof buf, "%.3f", r.elapsed_ms);
        out += buf;
        out += '\n';
    }
    return out;
}

inline std::vector<BenchRecord> parse_csv(std::string_view text) {
    std::vector<std::string_view> lines = detail::split_lines(text);
    if (lines.empty() || lines[0] != kBenchCsvHeader)
        throw ParseError("bench CSV: missing or unexpected header row");

    auto split_fields = [](std::string_view line) {
        std::vector<std::string_view> fields;
        while (true) {
            std::size_t pos = line.find(',');
            fields.push_back(line.substr(0, pos));
            if (pos == std::string_view::npos) break;
            line.remove_prefix(pos + 1);
        }
        return fields;
    };
    auto parse_u64 = [](std::string_view sv) {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
        if (ec != std::errc{} || ptr != sv.data() + sv.size())
            throw ParseError("bench CSV: bad integer '" + std::string(sv) + "'");
        return value;
    };

    std::vector<BenchRecord> records;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        std::vector<std::string_view> f = split_fields(lines[i]);
        if (f.size() != 7) throw ParseError("bench CSV: row must have 7 fields");
        BenchRecord r;
        r.instance_id = std::string(f[0]);
        r.rows = static_cast<int>(parse_u64(f[1]));
        r.cols = static_cast<int>(parse_u64(f[2]));
        r.sequence_length = static_cast<std::size_t>(parse_u64(f[3]));
        if (f[4] == "solvable")
            r.outcome = SolveStatus::solved;
        else if (f[4] == "unsolvable")
            r.outcome = SolveStatus::unsolvable;
        else if (f[4] == "unknown")
            r.outcome = SolveStatus::unknown;
        else
            throw ParseError("bench CSV: unknown outcome '" + std::string(f[4]) + "'");
        r.nodes_expanded = parse_u64(f[5]);
        r.elapsed_ms = std::strtod(std::string(f[6]).c_str(), nullptr);
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace gridmatch
