#include "meg/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "meg/error.hpp"

namespace meg {
namespace {

constexpr std::string_view kVerticesHeader = "vertices:";

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> vertices;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(std::move(w));
    if (words.empty() || words[0].starts_with('#')) continue;
    if (words[0] == kVerticesHeader) {
      vertices.insert(vertices.end(), words.begin() + 1, words.end());
      continue;
    }
    if (words.size() != 2) {
      throw ParseError(line_no, "expected two vertex tokens, found " + std::to_string(words.size()));
    }
    if (words[0] == words[1]) throw ParseError(line_no, "self-loop on '" + words[0] + "'");
    edges.emplace_back(std::move(words[0]), std::move(words[1]));
  }
  return Graph::from_labels(edges, vertices);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open '" + path.string() + "'");
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, std::string_view comment) {
  std::istringstream lines{std::string(comment)};
  for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
  out << kVerticesHeader;
  for (const auto& label : g.labels()) out << ' ' << label;
  out << '\n';
  for (Edge e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

}  // namespace meg
