#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "gridmatch/errors.hpp"
#include "gridmatch/grid_graph.hpp"
#include "gridmatch/instance.hpp"

namespace gridmatch {

// One emitted instance of the longest-path-to-matrix reduction. The matrix
// encodes the source grid (blue nodes as '1', white as '0', absent as '2');
// the strictly alternating sequence is what makes diagonal moves unusable.
struct ReducedInstance {
    DigitMatrix matrix;
    BitSequence sequence;
    int blue_count = 0;
    int white_count = 0;
    int target_order = 0;  // the path order k this instance decides

    std::string to_text() const {
        std::string out = "k=" + std::to_string(target_order) + " b=" +
                          std::to_string(blue_count) + " w=" + std::to_string(white_count) +
                          "\n";
        out += matrix.to_text();
        out += sequence.str();
        out += '\n';
        return out;
    }
};

// Parity colors of the present nodes: (blue, white) = (even, odd) row+col.
inline std::pair<int, int> grid_color_counts(const InducedGridGraph& g) {
    int blue = 0, white = 0;
    for (Coord c : g.present_nodes()) ((c.row + c.col) % 2 == 0 ? blue : white)++;
    return {blue, white};
}

// Present nodes become '1' (blue) or '0' (white) by parity; absent nodes
// become blocked '2' cells.
inline DigitMatrix grid_to_matrix(const InducedGridGraph& g) {
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(g.rows()) * g.cols());
    for (int r = 0; r < g.rows(); ++r)
        for (int c = 0; c < g.cols(); ++c) {
            if (!g.present({r, c}))
                cells.push_back(Cell::from_digit(kPaddingDigit));
            else
                cells.push_back(Cell::from_digit((r + c) % 2 == 0 ? '1' : '0'));
        }
    return DigitMatrix(g.rows(), g.cols(), std::move(cells));
}

// "10" repeated min(blue, white) times.
inline BitSequence alternating_sequence(int blue, int white) {
    if (blue < 0 || white < 0) throw Error("alternating_sequence: negative count");
    const int p = std::min(blue, white);
    std::string bits;
    bits.reserve(static_cast<std::size_t>(p) * 2);
    for (int i = 0; i < p; ++i) bits += "10";
    return BitSequence(std::move(bits));
}

namespace detail {

inline BitSequence alternating_of_length(int length, char first) {
    std::string bits;
    bits.reserve(static_cast<std::size_t>(length));
    char cur = first;
    for (int i = 0; i < length; ++i) {
        bits += cur;
        cur = cur == '1' ? '0' : '1';
    }
    return BitSequence(std::move(bits));
}

}  // namespace detail

// Instances deciding "G has a simple path of order k". Even k needs a single
// instance: an even-order path in a bipartite graph has exactly one blue
// endpoint, and read from that end it spells 1010...10. For odd k the
// endpoint color is unknown, so both alternating sequences are emitted.
inline std::vector<ReducedInstance> reduce_longest_path(const InducedGridGraph& g, int k) {
    if (k < 0 || k > g.present_count())
        throw KTooLarge("reduce_longest_path: k=" + std::to_string(k) +
                        " outside [0, " + std::to_string(g.present_count()) + "]");
    const auto [blue, white] = grid_color_counts(g);
    DigitMatrix matrix = grid_to_matrix(g);
    std::vector<ReducedInstance> out;
    if (k % 2 == 0) {
        out.push_back({matrix, detail::alternating_of_length(k, '1'), blue, white, k});
    } else {
        out.push_back({matrix, detail::alternating_of_length(k, '1'), blue, white, k});
        out.push_back({matrix, detail::alternating_of_length(k, '0'), blue, white, k});
    }
    return out;
}

// Reads a matrix witness back as a path in the source grid graph. The
// alternating sequence forces a color change at every step while diagonal
// neighbors share a color, so a verified witness can contain no diagonal
// step; finding one means the reduction itself is broken.
inline std::vector<Coord> lift_path(const ReducedInstance& inst, const CellPath& p) {
    if (!verify_path(inst.matrix, inst.sequence, p))
        throw Error("lift_path: path is not a witness for the reduced instance");
    for (std::size_t i = 1; i < p.steps.size(); ++i) {
        const int dr = p.steps[i].row - p.steps[i - 1].row;
        const int dc = p.steps[i].col - p.steps[i - 1].col;
        if ((dr < 0 ? -dr : dr) + (dc < 0 ? -dc : dc) != 1)
            throw DiagonalStepFound("lift_path: diagonal step between step " +
                                    std::to_string(i - 1) + " and " + std::to_string(i));
    }
    return p.steps;
}

// Inverse of ReducedInstance::to_text.
inline ReducedInstance parse_reduced_instance(std::string_view text) {
    std::vector<std::string_view> lines = detail::split_lines(text);
    if (lines.size() < 3)
        throw ParseError("reduced instance needs a header, matrix rows and a sequence line");

    auto parse_field = [&](std::string_view token, std::string_view key) {
        if (!token.starts_with(key))
            throw ParseError("reduced instance header: expected '" + std::string(key) +
                             "<int>', got '" + std::string(token) + "'");
        token.remove_prefix(key.size());
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw ParseError("reduced instance header: bad integer in '" + std::string(token) +
                             "'");
        return value;
    };

    std::string_view header = lines[0];
    std::vector<std::string_view> tokens;
    while (!header.empty()) {
        std::size_t sp = header.find(' ');
        tokens.push_back(header.substr(0, sp));
        if (sp == std::string_view::npos) break;
        header.remove_prefix(sp + 1);
    }
    if (tokens.size() != 3)
        throw ParseError("reduced instance header must be 'k=<k> b=<b> w=<w>'");

    ReducedInstance inst{
        [&] {
            std::string matrix_text;
            for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
                matrix_text += lines[i];
                matrix_text += '\n';
            }
            return parse_matrix(matrix_text);
        }(),
        BitSequence(std::string(lines.back())),
        parse_field(tokens[1], "b="),
        parse_field(tokens[2], "w="),
        parse_field(tokens[0], "k="),
    };

    if (inst.sequence.size() != static_cast<std::size_t>(inst.target_order))
        throw ParseError("reduced instance: sequence length does not equal k");
    if (inst.matrix.count_one() != inst.blue_count || inst.matrix.count_zero() != inst.white_count)
        throw ParseError("reduced instance: matrix digit counts disagree with header");
    for (std::size_t i = 1; i < inst.sequence.size(); ++i)
        if (inst.sequence.symbol(i) == inst.sequence.symbol(i - 1))
            throw ParseError("reduced instance: sequence does not alternate");
    return inst;
}

}  // namespace gridmatch
