#pragma once

#include <string>
#include <vector>

#include "gridmatch/instance.hpp"

namespace gridmatch {

namespace detail {

// The renderer draws whatever path it is given; structural problems are
// reported alongside instead of rejected.
inline std::vector<std::string> path_violations(const DigitMatrix& m, const CellPath& p) {
    std::vector<std::string> out;
    std::vector<unsigned char> seen(static_cast<std::size_t>(m.rows()) * m.cols(), 0);
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        const Coord c = p.steps[i];
        const std::string where =
            "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
        if (!m.in_bounds(c)) {
            out.push_back("step " + std::to_string(i + 1) + " out of bounds " + where);
            continue;
        }
        if (seen[static_cast<std::size_t>(m.index(c))])
            out.push_back("step " + std::to_string(i + 1) + " revisits " + where);
        seen[static_cast<std::size_t>(m.index(c))] = 1;
        if (!m.at(c).visitable())
            out.push_back("step " + std::to_string(i + 1) + " lands on blocked " + where);
        if (i > 0 && m.in_bounds(p.steps[i - 1])) {
            const int dr = c.row - p.steps[i - 1].row;
            const int dc = c.col - p.steps[i - 1].col;
            if (std::max(dr < 0 ? -dr : dr, dc < 0 ? -dc : dc) != 1)
                out.push_back("step " + std::to_string(i + 1) + " not king-adjacent to step " +
                              std::to_string(i));
        }
    }
    return out;
}

}  // namespace detail

// Digit grid, and when a path is given, a step-index overlay ('.' unvisited,
// '#' blocked) followed by one "! ..." line per structural violation.
inline std::string render_ascii(const DigitMatrix& m, const CellPath* path = nullptr) {
    std::string out = m.to_text();
    if (!path) return out;

    std::vector<int> step_at(static_cast<std::size_t>(m.rows()) * m.cols(), 0);
    for (std::size_t i = 0; i < path->steps.size(); ++i) {
        const Coord c = path->steps[i];
        if (m.in_bounds(c) && step_at[static_cast<std::size_t>(m.index(c))] == 0)
            step_at[static_cast<std::size_t>(m.index(c))] = static_cast<int>(i) + 1;
    }
    std::size_t width = std::to_string(path->steps.size() == 0 ? 1 : path->steps.size()).size();

    out += "\nsteps:\n";
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            std::string token;
            const int step = step_at[static_cast<std::size_t>(r * m.cols() + c)];
            if (step > 0)
                token = std::to_string(step);
            else
                token = m.at(r, c).visitable() ? "." : "#";
            if (c > 0) out += ' ';
            out += std::string(width - std::min(width, token.size()), ' ') + token;
        }
        out += '\n';
    }
    for (const std::string& v : detail::path_violations(m, *path)) out += "! " + v + "\n";
    return out;
}

// Static SVG: one disc per visitable cell (blue for '1', white for '0'),
// blocked cells omitted, the path as a polyline with step labels.
inline std::string render_svg(const DigitMatrix& m, const CellPath* path = nullptr) {
    constexpr int cell = 40;
    const std::vector<std::string> violations =
        path ? detail::path_violations(m, *path) : std::vector<std::string>{};
    const int width = m.cols() * cell;
    const int height = m.rows() * cell + static_cast<int>(violations.size()) * 16;

    auto cx = [&](Coord c) { return std::to_string(c.col * cell + cell / 2); };
    auto cy = [&](Coord c) { return std::to_string(c.row * cell + cell / 2); };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";

    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const Cell& cellv = m.at(r, c);
            if (!cellv.visitable()) continue;
            const char* fill = cellv.kind == CellKind::one ? "#4878d0" : "#ffffff";
            out += "  <circle cx=\"" + cx({r, c}) + "\" cy=\"" + cy({r, c}) +
                   "\" r=\"14\" fill=\"" + fill + "\" stroke=\"#222222\"/>\n";
        }

    if (path && !path->steps.empty()) {
        std::string points;
        for (const Coord& c : path->steps) {
            if (!m.in_bounds(c)) continue;
            if (!points.empty()) points += ' ';
            points += cx(c) + "," + cy(c);
        }
        if (!points.empty())
            out += "  <polyline points=\"" + points +
                   "\" fill=\"none\" stroke=\"#d04848\" stroke-width=\"3\"/>\n";
        for (std::size_t i = 0; i < path->steps.size(); ++i) {
            const Coord c = path->steps[i];
            if (!m.in_bounds(c)) continue;
            out += "  <text x=\"" + cx(c) + "\" y=\"" + cy(c) +
                   "\" font-size=\"11\" text-anchor=\"middle\" dy=\"4\">" +
                   std::to_string(i + 1) + "</text>\n";
        }
    }

    int line = m.rows() * cell + 12;
    for (const std::string& v : violations) {
        out += "  <text x=\"4\" y=\"" + std::to_string(line) +
               "\" font-size=\"12\" fill=\"#c00000\">! " + v + "</text>\n";
        line += 16;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace gridmatch
