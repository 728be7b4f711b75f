#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace meg {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, deduplicated list of vertex ids. Comparison is lexicographic on the
// sorted sequence, which is the canonical order used for witnesses.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> ids);
  VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

  static VertexSet range(std::size_t n);

  bool contains(Vertex v) const;
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  const std::vector<Vertex>& ids() const noexcept { return ids_; }

  VertexSet unite(const VertexSet& other) const;
  VertexSet intersect(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

// Immutable simple undirected graph. Vertex ids are dense (0..n-1); every
// vertex carries an external label. Neighbor lists are sorted ascending and
// the edge list keeps first-appearance order of the input.
class Graph {
 public:
  Graph() = default;

  // Ids are assigned in first-appearance order: declared vertices first, then
  // edge endpoints. Repeated pairs are merged; a pair (x, x) throws kSelfLoop.
  static Graph from_labels(std::span<const std::pair<std::string, std::string>> edges,
                           std::span<const std::string> vertices = {});

  // Labels default to the decimal ids.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t n() const noexcept { return adjacency_.size(); }
  std::size_t m() const noexcept { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Vertex> find(std::string_view label) const;

  // Equality compares labels and adjacency, not edge-list order.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> by_label_;
};

// Hop distances. kUnreachable encodes infinity.
inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), dist_(n * n, kUnreachable) {}

  std::size_t n() const noexcept { return n_; }
  std::uint32_t at(Vertex u, Vertex v) const { return dist_[std::size_t{u} * n_ + v]; }
  std::span<std::uint32_t> row(Vertex s) { return {dist_.data() + std::size_t{s} * n_, n_}; }
  std::span<const std::uint32_t> row(Vertex s) const {
    return {dist_.data() + std::size_t{s} * n_, n_};
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> dist_;
};

// BFS from `source`; when `skip` is set, that edge is treated as deleted.
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source,
                                         std::optional<Edge> skip = std::nullopt);
DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
VertexSet articulation_points(const Graph& g);

// Vertex i of the result is W[i]; labels are carried over.
Graph induced_subgraph(const Graph& g, const VertexSet& w);
Graph complement(const Graph& g);
std::vector<VertexSet> co_components(const Graph& g);

// Throws kTooSmall / kNotConnected unless g is connected with at least two vertices.
void require_connected(const Graph& g);

}  // namespace meg
