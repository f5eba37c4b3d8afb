#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridmatch/errors.hpp"

namespace gridmatch {

struct Coord {
    int row = 0;
    int col = 0;

    friend constexpr bool operator==(const Coord&, const Coord&) = default;
    friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
};

enum class CellKind : unsigned char { zero, one, blocked };

struct Cell {
    CellKind kind = CellKind::blocked;
    char digit = '2';

    static Cell from_digit(char d) {
        if (d < '0' || d > '9')
            throw InvalidCharacter(std::string("not a decimal digit: '") + d + "'");
        if (d == '0') return {CellKind::zero, '0'};
        if (d == '1') return {CellKind::one, '1'};
        return {CellKind::blocked, d};
    }

    bool visitable() const { return kind != CellKind::blocked; }

    // The {0,1} value of a visitable cell.
    int bit() const { return kind == CellKind::one ? 1 : 0; }

    friend bool operator==(const Cell&, const Cell&) = default;
};

// Rectangular matrix of decimal digits. Cells holding '0' or '1' are the
// visitable ones; every other digit is a wall.
class DigitMatrix {
public:
    DigitMatrix(int rows, int cols, std::vector<Cell> cells)
        : rows_(rows), cols_(cols), cells_(std::move(cells)) {
        if (rows_ < 1 || cols_ < 1 ||
            cells_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_))
            throw Error("DigitMatrix: dimensions do not match cell count");
        for (const Cell& c : cells_) {
            if (c.kind == CellKind::zero) ++count_zero_;
            if (c.kind == CellKind::one) ++count_one_;
        }
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int count_zero() const { return count_zero_; }
    int count_one() const { return count_one_; }

    bool in_bounds(Coord c) const {
        return c.row >= 0 && c.row < rows_ && c.col >= 0 && c.col < cols_;
    }

    int index(Coord c) const { return c.row * cols_ + c.col; }

    const Cell& at(Coord c) const {
        if (!in_bounds(c))
            throw OutOfBounds("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                              ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
        return cells_[static_cast<std::size_t>(index(c))];
    }

    const Cell& at(int row, int col) const { return at(Coord{row, col}); }

    const std::vector<Cell>& cells() const { return cells_; }

    std::string to_text() const {
        std::string out;
        out.reserve(static_cast<std::size_t>(rows_) * (static_cast<std::size_t>(cols_) + 1));
        for (int r = 0; r < rows_; ++r) {
            for (int c = 0; c < cols_; ++c) out += cells_[static_cast<std::size_t>(r * cols_ + c)].digit;
            out += '\n';
        }
        return out;
    }

    friend bool operator==(const DigitMatrix& a, const DigitMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
    }

private:
    int rows_;
    int cols_;
    std::vector<Cell> cells_;
    int count_zero_ = 0;
    int count_one_ = 0;
};

// Query string over {0,1}.
class BitSequence {
public:
    BitSequence() = default;

    explicit BitSequence(std::string bits) : bits_(std::move(bits)) {
        for (char ch : bits_)
            if (ch != '0' && ch != '1')
                throw InvalidCharacter(std::string("sequence symbol must be 0 or 1, got '") + ch +
                                       "'");
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    char symbol(std::size_t i) const { return bits_[i]; }
    int bit(std::size_t i) const { return bits_[i] - '0'; }

    const std::string& str() const { return bits_; }

    BitSequence reversed() const {
        return BitSequence(std::string(bits_.rbegin(), bits_.rend()));
    }

    friend bool operator==(const BitSequence&, const BitSequence&) = default;

private:
    std::string bits_;
};

// Candidate matching path: an ordered list of coordinates.
struct CellPath {
    std::vector<Coord> steps;

    std::size_t size() const { return steps.size(); }
    bool empty() const { return steps.empty(); }

    friend bool operator==(const CellPath&, const CellPath&) = default;
};

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    // One trailing newline is part of the format, not an extra empty line.
    if (text.ends_with('\n')) text.remove_suffix(1);
    std::vector<std::string_view> lines;
    while (true) {
        std::size_t pos = text.find('\n');
        std::string_view line = text.substr(0, pos);
        if (line.ends_with('\r')) line.remove_suffix(1);
        lines.push_back(line);
        if (pos == std::string_view::npos) break;
        text.remove_prefix(pos + 1);
    }
    return lines;
}

}  // namespace detail

inline DigitMatrix parse_matrix(std::string_view text) {
    if (text.empty()) throw EmptyInput("matrix text is empty");
    std::vector<std::string_view> lines = detail::split_lines(text);
    if (lines.size() == 1 && lines[0].empty()) throw EmptyInput("matrix text is empty");
    const std::size_t cols = lines[0].size();
    if (cols == 0) throw EmptyInput("matrix rows are empty");
    std::vector<Cell> cells;
    cells.reserve(lines.size() * cols);
    for (std::size_t r = 0; r < lines.size(); ++r) {
        if (lines[r].size() != cols)
            throw RaggedRows("row " + std::to_string(r) + " has length " +
                             std::to_string(lines[r].size()) + ", expected " +
                             std::to_string(cols));
        for (char ch : lines[r]) cells.push_back(Cell::from_digit(ch));
    }
    return DigitMatrix(static_cast<int>(lines.size()), static_cast<int>(cols), std::move(cells));
}

inline BitSequence parse_sequence(std::string_view text) {
    return BitSequence(std::string(text));
}

// King-move step offsets in the fixed enumeration order N, NE, E, SE, S, SW, W, NW.
inline constexpr std::array<std::pair<int, int>, 8> kKingSteps = {{
    {-1, 0}, {-1, 1}, {0, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, -1},
}};

// All in-bounds king neighbors of c, blocked cells included.
inline std::vector<Coord> neighbors(const DigitMatrix& m, Coord c) {
    if (!m.in_bounds(c))
        throw OutOfBounds("neighbors: (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                          ") out of bounds");
    std::vector<Coord> out;
    out.reserve(8);
    for (auto [dr, dc] : kKingSteps) {
        Coord nb{c.row + dr, c.col + dc};
        if (m.in_bounds(nb)) out.push_back(nb);
    }
    return out;
}

// Linear-time certificate check: does P spell S through visitable cells,
// king-adjacent step by step, visiting no cell twice? Never throws; any
// malformed path is simply not a certificate.
inline bool verify_path(const DigitMatrix& m, const BitSequence& s, const CellPath& p) {
    if (p.size() != s.size()) return false;
    std::vector<unsigned char> seen(static_cast<std::size_t>(m.rows()) * m.cols(), 0);
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        const Coord c = p.steps[i];
        if (!m.in_bounds(c)) return false;
        unsigned char& mark = seen[static_cast<std::size_t>(m.index(c))];
        if (mark) return false;
        mark = 1;
        const Cell& cell = m.at(c);
        if (!cell.visitable() || cell.digit != s.symbol(i)) return false;
        if (i > 0) {
            const Coord prev = p.steps[i - 1];
            int dr = c.row - prev.row;
            int dc = c.col - prev.col;
            if (std::max(dr < 0 ? -dr : dr, dc < 0 ? -dc : dc) != 1) return false;
        }
    }
    return true;
}

struct ValidationReport {
    int count_zero = 0;
    int count_one = 0;
    std::size_t sequence_length = 0;
    bool ok = false;
};

// The instance is well-posed iff |S| <= (number of 0 cells) + (number of 1 cells).
inline ValidationReport validate_instance(const DigitMatrix& m, const BitSequence& s) {
    ValidationReport r;
    r.count_zero = m.count_zero();
    r.count_one = m.count_one();
    r.sequence_length = s.size();
    r.ok = s.size() <= static_cast<std::size_t>(r.count_zero) + static_cast<std::size_t>(r.count_one);
    return r;
}

inline constexpr char kPaddingDigit = '2';

// Embed M in the top-left corner of an l x l matrix, l = max(rows, cols),
// with blocked '2' cells everywhere else.
inline DigitMatrix pad_to_square(const DigitMatrix& m) {
    const int l = std::max(m.rows(), m.cols());
    if (l == m.rows() && l == m.cols()) return m;
    std::vector<Cell> cells(static_cast<std::size_t>(l) * l, Cell::from_digit(kPaddingDigit));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            cells[static_cast<std::size_t>(r) * l + c] = m.at(r, c);
    return DigitMatrix(l, l, std::move(cells));
}

inline std::string format_path(const CellPath& p) {
    std::string out;
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        if (i > 0) out += ';';
        out += std::to_string(p.steps[i].row);
        out += ',';
        out += std::to_string(p.steps[i].col);
    }
    return out;
}

// Parses "row,col;row,col;..." as printed by format_path. A trailing ';'
// and surrounding whitespace are tolerated; anything else is rejected.
inline CellPath parse_path(std::string_view text) {
    auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'; };
    while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
    while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
    CellPath path;
    if (text.empty()) return path;
    if (text.ends_with(';')) text.remove_suffix(1);
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        std::string_view pair =
            text.substr(start, end == std::string_view::npos ? end : end - start);
        std::size_t comma = pair.find(',');
        if (comma == std::string_view::npos)
            throw InvalidCharacter("path step '" + std::string(pair) + "' is not 'row,col'");
        auto parse_int = [&](std::string_view sv) {
            int value = 0;
            auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
            if (ec != std::errc{} || ptr != sv.data() + sv.size())
                throw InvalidCharacter("path coordinate '" + std::string(sv) +
                                       "' is not an integer");
            return value;
        };
        path.steps.push_back(
            Coord{parse_int(pair.substr(0, comma)), parse_int(pair.substr(comma + 1))});
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return path;
}

}  // namespace gridmatch
