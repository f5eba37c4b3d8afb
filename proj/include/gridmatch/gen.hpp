#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gridmatch/errors.hpp"
#include "gridmatch/grid_graph.hpp"
#include "gridmatch/instance.hpp"
#include "gridmatch/reduction.hpp"

namespace gridmatch {

enum class GenKind { random_matrix, random_grid, snake };

inline const char* to_string(GenKind k) {
    switch (k) {
        case GenKind::random_matrix: return "random_matrix";
        case GenKind::random_grid: return "random_grid";
        case GenKind::snake: return "snake";
    }
    return "random_matrix";
}

// Reproducible generator request. Identical specs produce byte-identical
// output: draws come from std::mt19937_64 (a portable, fully specified
// engine) and are mapped with plain threshold arithmetic, never with
// library distributions, whose output varies across standard libraries.
struct GenSpec {
    GenKind kind = GenKind::random_matrix;
    int rows = 0;
    int cols = 0;
    double blocked_fraction = 0.0;
    std::uint64_t seed = 0;
};

struct GeneratedInstance {
    std::optional<DigitMatrix> matrix;
    std::optional<InducedGridGraph> grid;
    std::optional<BitSequence> sequence;
    std::optional<CellPath> witness;
};

namespace detail {

// Uniform draw in [0,1) from the top 53 bits of the engine output.
inline double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline void check_spec(const GenSpec& spec) {
    if (spec.rows < 1 || spec.cols < 1)
        throw InvalidSpec("generator dimensions must be at least 1x1");
    if (spec.blocked_fraction < 0.0 || spec.blocked_fraction > 1.0)
        throw InvalidSpec("blocked_fraction must lie in [0,1]");
}

inline DigitMatrix random_matrix_cells(std::mt19937_64& rng, const GenSpec& spec) {
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(spec.rows) * spec.cols);
    for (int i = 0; i < spec.rows * spec.cols; ++i) {
        if (unit_draw(rng) < spec.blocked_fraction)
            cells.push_back(Cell::from_digit(kPaddingDigit));
        else
            cells.push_back(Cell::from_digit(unit_draw(rng) < 0.5 ? '0' : '1'));
    }
    return DigitMatrix(spec.rows, spec.cols, std::move(cells));
}

inline InducedGridGraph random_grid_nodes(std::mt19937_64& rng, const GenSpec& spec) {
    std::vector<unsigned char> present;
    present.reserve(static_cast<std::size_t>(spec.rows) * spec.cols);
    for (int i = 0; i < spec.rows * spec.cols; ++i)
        present.push_back(unit_draw(rng) < spec.blocked_fraction ? 0 : 1);
    return InducedGridGraph(spec.rows, spec.cols, std::move(present));
}

// Row 0 left to right, row 1 right to left, and so on.
inline std::vector<Coord> boustrophedon(int rows, int cols) {
    std::vector<Coord> out;
    out.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
        if (r % 2 == 0)
            for (int c = 0; c < cols; ++c) out.push_back({r, c});
        else
            for (int c = cols - 1; c >= 0; --c) out.push_back({r, c});
    }
    return out;
}

}  // namespace detail

// random_matrix: each cell '2' with probability blocked_fraction, else a
//   fair coin over {'0','1'}.
// random_grid: each lattice node absent with probability blocked_fraction.
// snake: the full grid's reduced matrix, its alternating sequence, and the
//   boustrophedon witness prefix matching it.
inline GeneratedInstance gen_instance(const GenSpec& spec) {
    detail::check_spec(spec);
    GeneratedInstance out;
    std::mt19937_64 rng(spec.seed);
    switch (spec.kind) {
        case GenKind::random_matrix:
            out.matrix = detail::random_matrix_cells(rng, spec);
            break;
        case GenKind::random_grid:
            out.grid = detail::random_grid_nodes(rng, spec);
            break;
        case GenKind::snake: {
            const InducedGridGraph full = InducedGridGraph::full(spec.rows, spec.cols);
            const auto [blue, white] = grid_color_counts(full);
            out.matrix = grid_to_matrix(full);
            out.sequence = alternating_sequence(blue, white);
            std::vector<Coord> snake = detail::boustrophedon(spec.rows, spec.cols);
            snake.resize(out.sequence->size());
            out.witness = CellPath{std::move(snake)};
            break;
        }
    }
    return out;
}

}  // namespace gridmatch
