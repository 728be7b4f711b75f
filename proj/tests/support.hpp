#pragma once

#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meg/graph.hpp"

namespace meg::test {

// "a-b b-c c-d" style edge lists; a bare token declares an isolated vertex.
inline Graph parse(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> vertices;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) {
    auto dash = tok.find('-');
    if (dash == std::string::npos) {
      vertices.push_back(tok);
    } else {
      edges.emplace_back(tok.substr(0, dash), tok.substr(dash + 1));
    }
  }
  return Graph::from_labels(edges, vertices);
}

inline Vertex id(const Graph& g, std::string_view label) { return *g.find(label); }

inline VertexSet ids(const Graph& g, std::initializer_list<std::string_view> labels) {
  std::vector<Vertex> out;
  for (auto l : labels) out.push_back(id(g, l));
  return VertexSet(std::move(out));
}

inline Edge edge(const Graph& g, std::string_view a, std::string_view b) {
  Vertex u = id(g, a), v = id(g, b);
  return {std::min(u, v), std::max(u, v)};
}

// Graph on 0..n-1 whose edges are the set bits of `mask` over the pairs
// (0,1), (0,2), ..., (n-2,n-1).
inline Graph from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// A chain of `layers` two-vertex layers, each fully joined to the next, so
// path counts double per layer; the tail ends in a pendant edge.
inline Graph doubling_ladder(std::size_t layers) {
  std::vector<Edge> edges;
  Vertex source = 0;
  std::vector<Vertex> prev{source};
  Vertex next = 1;
  for (std::size_t i = 0; i < layers; ++i) {
    std::vector<Vertex> cur{next, next + 1};
    next += 2;
    for (Vertex p : prev)
      for (Vertex c : cur) edges.push_back({p, c});
    prev = cur;
  }
  Vertex sink = next++;
  for (Vertex p : prev) edges.push_back({p, sink});
  Vertex tail = next++;
  edges.push_back({sink, tail});
  return Graph::from_edges(next, edges);
}

}  // namespace meg::test
