#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "meg/graph.hpp"

namespace meg {

// Edge-list text: one edge per line as two whitespace-separated tokens,
// '#' lines ignored, and an optional "vertices: a b c" line declaring
// vertices (including isolated ones). Throws ParseError with the line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph read_edge_list(const std::filesystem::path& path);

// Writes a "vertices:" line followed by one edge per line. Each line of
// `comment` becomes a leading "# " line.
void write_edge_list(std::ostream& out, const Graph& g, std::string_view comment = {});

}  // namespace meg
