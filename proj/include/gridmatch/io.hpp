#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "gridmatch/errors.hpp"
#include "gridmatch/grid_graph.hpp"
#include "gridmatch/instance.hpp"

namespace gridmatch {

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoFailure("error reading " + path.string());
    return std::move(buf).str();
}

inline void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot create " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoFailure("error writing " + path.string());
}

namespace detail {

inline std::string_view strip_trailing_ws(std::string_view sv) {
    while (!sv.empty() && (sv.back() == '\n' || sv.back() == '\r' || sv.back() == ' ' ||
                           sv.back() == '\t'))
        sv.remove_suffix(1);
    return sv;
}

}  // namespace detail

inline DigitMatrix load_matrix(const std::filesystem::path& path) {
    return parse_matrix(read_file(path));
}

inline InducedGridGraph load_grid(const std::filesystem::path& path) {
    return parse_grid(read_file(path));
}

// Sequence files hold a single line over {0,1}; trailing whitespace is not
// part of the sequence.
inline BitSequence load_sequence(const std::filesystem::path& path) {
    return parse_sequence(detail::strip_trailing_ws(read_file(path)));
}

inline CellPath load_path(const std::filesystem::path& path) {
    return parse_path(read_file(path));
}

}  // namespace gridmatch
