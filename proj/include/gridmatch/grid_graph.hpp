#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridmatch/errors.hpp"
#include "gridmatch/instance.hpp"

namespace gridmatch {

enum class NodeColor : unsigned char { blue, white };

// Parity (checkerboard) coloring of an n x m lattice: blue on even row+col,
// white on odd. Orthogonal neighbors differ, diagonal neighbors match.
class Coloring {
public:
    Coloring(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    NodeColor at(Coord c) const {
        if (c.row < 0 || c.row >= rows_ || c.col < 0 || c.col >= cols_)
            throw OutOfBounds("Coloring::at: lattice point out of bounds");
        return (c.row + c.col) % 2 == 0 ? NodeColor::blue : NodeColor::white;
    }

private:
    int rows_;
    int cols_;
};

inline Coloring checkerboard_color(int rows, int cols) {
    if (rows < 1 || cols < 1) throw Error("checkerboard_color: board must be at least 1x1");
    return Coloring(rows, cols);
}

// Orthogonal step offsets, fixed order N, E, S, W.
inline constexpr std::array<std::pair<int, int>, 4> kOrthoSteps = {{
    {-1, 0}, {0, 1}, {1, 0}, {0, -1},
}};

// Node-induced subgraph of the rectangular lattice. Edges are implicit:
// two present nodes are adjacent iff at Manhattan distance 1.
class InducedGridGraph {
public:
    InducedGridGraph(int rows, int cols, std::vector<unsigned char> present)
        : rows_(rows), cols_(cols), present_(std::move(present)) {
        if (rows_ < 1 || cols_ < 1 ||
            present_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_))
            throw Error("InducedGridGraph: dimensions do not match node flags");
        for (unsigned char f : present_) present_count_ += f ? 1 : 0;
    }

    static InducedGridGraph full(int rows, int cols) {
        return InducedGridGraph(
            rows, cols,
            std::vector<unsigned char>(static_cast<std::size_t>(rows) * cols, 1));
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int present_count() const { return present_count_; }

    bool in_bounds(Coord c) const {
        return c.row >= 0 && c.row < rows_ && c.col >= 0 && c.col < cols_;
    }

    bool present(Coord c) const {
        return in_bounds(c) && present_[static_cast<std::size_t>(index(c))];
    }

    int index(Coord c) const { return c.row * cols_ + c.col; }

    std::vector<Coord> present_nodes() const {
        std::vector<Coord> out;
        out.reserve(static_cast<std::size_t>(present_count_));
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (present_[static_cast<std::size_t>(r * cols_ + c)]) out.push_back({r, c});
        return out;
    }

    std::vector<Coord> neighbors(Coord c) const {
        std::vector<Coord> out;
        out.reserve(4);
        for (auto [dr, dc] : kOrthoSteps) {
            Coord nb{c.row + dr, c.col + dc};
            if (present(nb)) out.push_back(nb);
        }
        return out;
    }

    std::string to_text() const {
        std::string out;
        for (int r = 0; r < rows_; ++r) {
            for (int c = 0; c < cols_; ++c)
                out += present_[static_cast<std::size_t>(r * cols_ + c)] ? '.' : '#';
            out += '\n';
        }
        return out;
    }

    friend bool operator==(const InducedGridGraph& a, const InducedGridGraph& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.present_ == b.present_;
    }

private:
    int rows_;
    int cols_;
    std::vector<unsigned char> present_;
    int present_count_ = 0;
};

// Grid file format: '.' = present node, '#' = absent node.
inline InducedGridGraph parse_grid(std::string_view text) {
    if (text.empty()) throw EmptyInput("grid text is empty");
    std::vector<std::string_view> lines = detail::split_lines(text);
    if (lines.size() == 1 && lines[0].empty()) throw EmptyInput("grid text is empty");
    const std::size_t cols = lines[0].size();
    if (cols == 0) throw EmptyInput("grid rows are empty");
    std::vector<unsigned char> present;
    present.reserve(lines.size() * cols);
    for (std::size_t r = 0; r < lines.size(); ++r) {
        if (lines[r].size() != cols)
            throw RaggedRows("row " + std::to_string(r) + " has length " +
                             std::to_string(lines[r].size()) + ", expected " +
                             std::to_string(cols));
        for (char ch : lines[r]) {
            if (ch == '.')
                present.push_back(1);
            else if (ch == '#')
                present.push_back(0);
            else
                throw InvalidCharacter(std::string("grid cell must be '.' or '#', got '") + ch +
                                       "'");
        }
    }
    return InducedGridGraph(static_cast<int>(lines.size()), static_cast<int>(cols),
                            std::move(present));
}

// 8-way adjacency view of a digit matrix: visitable cells become nodes,
// One cells blue and Zero cells white, blocked cells are simply absent.
class KingGraph {
public:
    KingGraph(int rows, int cols, std::vector<unsigned char> present,
              std::vector<unsigned char> blue)
        : rows_(rows), cols_(cols), present_(std::move(present)), blue_(std::move(blue)) {
        for (unsigned char f : present_) present_count_ += f ? 1 : 0;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int present_count() const { return present_count_; }

    bool in_bounds(Coord c) const {
        return c.row >= 0 && c.row < rows_ && c.col >= 0 && c.col < cols_;
    }

    bool present(Coord c) const {
        return in_bounds(c) && present_[static_cast<std::size_t>(c.row * cols_ + c.col)];
    }

    NodeColor color(Coord c) const {
        if (!present(c)) throw OutOfBounds("KingGraph::color: node absent");
        return blue_[static_cast<std::size_t>(c.row * cols_ + c.col)] ? NodeColor::blue
                                                                      : NodeColor::white;
    }

    std::vector<Coord> neighbors(Coord c) const {
        std::vector<Coord> out;
        out.reserve(8);
        for (auto [dr, dc] : kKingSteps) {
            Coord nb{c.row + dr, c.col + dc};
            if (present(nb)) out.push_back(nb);
        }
        return out;
    }

private:
    int rows_;
    int cols_;
    std::vector<unsigned char> present_;
    std::vector<unsigned char> blue_;
    int present_count_ = 0;
};

inline KingGraph matrix_to_king_graph(const DigitMatrix& m) {
    std::vector<unsigned char> present(static_cast<std::size_t>(m.rows()) * m.cols(), 0);
    std::vector<unsigned char> blue(present.size(), 0);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const Cell& cell = m.at(r, c);
            if (!cell.visitable()) continue;
            present[static_cast<std::size_t>(r * m.cols() + c)] = 1;
            blue[static_cast<std::size_t>(r * m.cols() + c)] = cell.kind == CellKind::one;
        }
    return KingGraph(m.rows(), m.cols(), std::move(present), std::move(blue));
}

struct GraphPathResult {
    bool found = false;
    std::vector<Coord> path;
    std::uint64_t nodes_expanded = 0;
};

// True iff the coordinate list is a simple path in G: distinct present
// nodes, consecutive ones orthogonally adjacent.
inline bool is_simple_grid_path(const InducedGridGraph& g, const std::vector<Coord>& path) {
    std::vector<unsigned char> seen(static_cast<std::size_t>(g.rows()) * g.cols(), 0);
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!g.present(path[i])) return false;
        unsigned char& mark = seen[static_cast<std::size_t>(g.index(path[i]))];
        if (mark) return false;
        mark = 1;
        if (i > 0) {
            int dr = path[i].row - path[i - 1].row;
            int dc = path[i].col - path[i - 1].col;
            if ((dr < 0 ? -dr : dr) + (dc < 0 ? -dc : dc) != 1) return false;
        }
    }
    return true;
}

inline constexpr int kDefaultNodeGuard = 24;

namespace detail {

// Shared state for the exact grid-graph searches.
struct GridSearch {
    const InducedGridGraph& g;
    std::vector<unsigned char> visited;
    std::vector<int> path;  // flattened indices
    std::uint64_t nodes = 0;
    std::vector<std::vector<int>> adj;  // per flattened index, present neighbors in fixed order
    std::vector<int> present_idx;       // row-major list of present flattened indices

    explicit GridSearch(const InducedGridGraph& graph) : g(graph) {
        const std::size_t total = static_cast<std::size_t>(g.rows()) * g.cols();
        visited.assign(total, 0);
        adj.resize(total);
        for (int r = 0; r < g.rows(); ++r)
            for (int c = 0; c < g.cols(); ++c) {
                Coord u{r, c};
                if (!g.present(u)) continue;
                present_idx.push_back(g.index(u));
                for (Coord v : g.neighbors(u)) adj[static_cast<std::size_t>(g.index(u))].push_back(g.index(v));
            }
    }

    Coord coord(int idx) const { return {idx / g.cols(), idx % g.cols()}; }

    std::vector<Coord> coord_path() const {
        std::vector<Coord> out;
        out.reserve(path.size());
        for (int idx : path) out.push_back(coord(idx));
        return out;
    }

    // Number of unvisited nodes reachable from `from` (itself excluded when visited).
    int reachable_from(int from, std::vector<int>& stack, std::vector<unsigned char>& seen) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.clear();
        int count = 0;
        seen[static_cast<std::size_t>(from)] = 1;
        stack.push_back(from);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (seen[static_cast<std::size_t>(v)] || visited[static_cast<std::size_t>(v)])
                    continue;
                seen[static_cast<std::size_t>(v)] = 1;
                ++count;
                stack.push_back(v);
            }
        }
        return count;
    }
};

}  // namespace detail

// Exact Hamiltonian-path decision by backtracking with connectivity and
// degree-1 pruning. Throws TooLarge above the node guard.
inline GraphPathResult has_hamiltonian_path(const InducedGridGraph& g,
                                            int node_guard = kDefaultNodeGuard) {
    GraphPathResult result;
    const int n = g.present_count();
    if (n == 0) {
        result.found = true;
        return result;
    }
    if (n > node_guard)
        throw TooLarge("has_hamiltonian_path: " + std::to_string(n) + " nodes exceeds guard " +
                       std::to_string(node_guard) + " (raise the guard to override)");

    detail::GridSearch s(g);
    std::vector<int> stack;
    std::vector<unsigned char> seen(s.visited.size(), 0);

    auto prune = [&](int head, int remaining) {
        // All unvisited nodes must stay reachable from the head.
        if (s.reachable_from(head, stack, seen) != remaining) return true;
        // Unvisited nodes that cannot be interior: degree-0 nodes strand the
        // rest, and at most one degree-1 node not next to the head may serve
        // as the far endpoint.
        int far_leaves = 0;
        for (int u : s.present_idx) {
            if (s.visited[static_cast<std::size_t>(u)]) continue;
            int deg = 0;
            bool next_to_head = false;
            for (int v : s.adj[static_cast<std::size_t>(u)]) {
                if (v == head) next_to_head = true;
                if (!s.visited[static_cast<std::size_t>(v)]) ++deg;
            }
            if (deg == 0 && remaining > 1) return true;
            if (deg == 1 && !next_to_head && ++far_leaves > 1) return true;
        }
        return false;
    };

    auto dfs = [&](auto&& self, int head) -> bool {
        ++s.nodes;
        const int remaining = n - static_cast<int>(s.path.size());
        if (remaining == 0) return true;
        if (prune(head, remaining)) return false;
        for (int v : s.adj[static_cast<std::size_t>(head)]) {
            if (s.visited[static_cast<std::size_t>(v)]) continue;
            s.visited[static_cast<std::size_t>(v)] = 1;
            s.path.push_back(v);
            if (self(self, v)) return true;
            s.path.pop_back();
            s.visited[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };

    for (int start : s.present_idx) {
        s.visited[static_cast<std::size_t>(start)] = 1;
        s.path.push_back(start);
        if (dfs(dfs, start)) {
            result.found = true;
            result.path = s.coord_path();
            result.nodes_expanded = s.nodes;
            return result;
        }
        s.path.pop_back();
        s.visited[static_cast<std::size_t>(start)] = 0;
    }
    result.nodes_expanded = s.nodes;
    return result;
}

// Exact maximum order (vertex count) over all simple s-t paths; 0 when t is
// unreachable from s. The paper-style "length" is this value minus one.
inline int longest_path_between(const InducedGridGraph& g, Coord src, Coord dst,
                                int node_guard = kDefaultNodeGuard) {
    if (!g.present(src) || !g.present(dst))
        throw AbsentEndpoint("longest_path_between: endpoint not a present node");
    if (g.present_count() > node_guard)
        throw TooLarge("longest_path_between: " + std::to_string(g.present_count()) +
                       " nodes exceeds guard " + std::to_string(node_guard));
    if (src == dst) return 1;

    detail::GridSearch s(g);
    const int target = g.index(dst);
    std::vector<int> stack;
    std::vector<unsigned char> seen(s.visited.size(), 0);
    int best = 0;

    auto dfs = [&](auto&& self, int head, int order) -> void {
        ++s.nodes;
        if (head == target) {
            best = std::max(best, order);
            return;  // a simple s-t path cannot continue past t
        }
        // Bound: even absorbing every reachable unvisited node cannot beat
        // the current best, or t itself became unreachable.
        const int reach = s.reachable_from(head, stack, seen);
        if (!seen[static_cast<std::size_t>(target)]) return;
        if (order + reach <= best) return;
        for (int v : s.adj[static_cast<std::size_t>(head)]) {
            if (s.visited[static_cast<std::size_t>(v)]) continue;
            s.visited[static_cast<std::size_t>(v)] = 1;
            self(self, v, order + 1);
            s.visited[static_cast<std::size_t>(v)] = 0;
        }
    };

    const int start = g.index(src);
    s.visited[static_cast<std::size_t>(start)] = 1;
    dfs(dfs, start, 1);
    return best;
}

// Direct decision: does G contain a simple path with at least k vertices?
inline GraphPathResult has_simple_path_of_order(const InducedGridGraph& g, int k,
                                                int node_guard = kDefaultNodeGuard) {
    GraphPathResult result;
    if (k <= 0) {
        result.found = true;
        return result;
    }
    if (g.present_count() == 0) return result;
    if (k == 1) {
        result.found = true;
        result.path = {g.present_nodes().front()};
        return result;
    }
    if (g.present_count() > node_guard)
        throw TooLarge("has_simple_path_of_order: " + std::to_string(g.present_count()) +
                       " nodes exceeds guard " + std::to_string(node_guard));
    if (k > g.present_count()) return result;

    detail::GridSearch s(g);
    std::vector<int> stack;
    std::vector<unsigned char> seen(s.visited.size(), 0);

    auto dfs = [&](auto&& self, int head, int order) -> bool {
        ++s.nodes;
        if (order >= k) return true;
        if (order + s.reachable_from(head, stack, seen) < k) return false;
        for (int v : s.adj[static_cast<std::size_t>(head)]) {
            if (s.visited[static_cast<std::size_t>(v)]) continue;
            s.visited[static_cast<std::size_t>(v)] = 1;
            s.path.push_back(v);
            if (self(self, v, order + 1)) return true;
            s.path.pop_back();
            s.visited[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };

    for (int start : s.present_idx) {
        s.visited[static_cast<std::size_t>(start)] = 1;
        s.path.push_back(start);
        if (dfs(dfs, start, 1)) {
            result.found = true;
            result.path = s.coord_path();
            result.nodes_expanded = s.nodes;
            return result;
        }
        s.path.pop_back();
        s.visited[static_cast<std::size_t>(start)] = 0;
    }
    result.nodes_expanded = s.nodes;
    return result;
}

// Same decision realized by iterating the two-endpoint longest-path search
// over every node pair. Kept as a second, independently structured route.
inline bool has_simple_path_of_order_via_pairs(const InducedGridGraph& g, int k,
                                               int node_guard = kDefaultNodeGuard) {
    if (k <= 0) return true;
    std::vector<Coord> nodes = g.present_nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i; j < nodes.size(); ++j)
            if (longest_path_between(g, nodes[i], nodes[j], node_guard) >= k) return true;
    return false;
}

}  // namespace gridmatch
