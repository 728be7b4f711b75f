#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "meg/graph.hpp"

namespace meg {

// True iff every shortest a-b path uses e, i.e. deleting e increases d(a, b).
bool monitors(const Graph& g, Vertex a, Vertex b, Edge e);

// Per-source shortest-path counts in 64-bit saturating arithmetic.
// kSaturated marks an entry that overflowed.
class PathCounts {
 public:
  static constexpr std::uint64_t kSaturated = ~std::uint64_t{0};

  PathCounts() = default;
  explicit PathCounts(const Graph& g);

  std::size_t n() const noexcept { return n_; }
  std::uint64_t at(Vertex s, Vertex t) const { return counts_[std::size_t{s} * n_ + t]; }
  bool saturated(Vertex s, Vertex t) const { return at(s, t) == kSaturated; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> counts_;
};

enum class CountVerdict { kMonitored, kNotMonitored, kIndeterminate };

// Counting form of monitors(). A saturated count (or an overflowing product)
// yields kIndeterminate; the caller must then fall back to monitors().
CountVerdict monitors_by_counting(const Graph& g, const DistanceMatrix& dist,
                                  const PathCounts& counts, Vertex a, Vertex b, Edge e);

struct MonitorWitness {
  Edge edge;
  std::optional<std::pair<Vertex, Vertex>> pair;
};

struct MegCheck {
  bool is_meg = false;
  // First unmonitored edge in edge-list order when is_meg is false.
  std::optional<Edge> uncovered;
};

MegCheck is_meg_set(const Graph& g, const VertexSet& s);

// For each edge, the first pair of S (lexicographic) that monitors it, if any.
std::vector<MonitorWitness> monitor_witnesses(const Graph& g, const VertexSet& s);

// Vertex v is mandatory iff some neighbor u has every induced 2-path u-v-x
// closed into a 4-cycle u-v-x-w. Returns that u.
std::optional<Vertex> is_mandatory(const Graph& g, Vertex v);
VertexSet mandatory_vertices(const Graph& g);

struct Bounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  VertexSet mandatory;
  VertexSet non_cut;
};

Bounds bounds(const Graph& g);

// Bit b of pairs(e, a) is set iff (a, b) monitors edge e. Needs n <= 64.
class MonitorTable {
 public:
  MonitorTable() = default;
  MonitorTable(std::size_t n, std::size_t m) : n_(n), m_(m), masks_(n * m, 0) {}

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  std::uint64_t pairs(std::size_t edge, Vertex a) const { return masks_[edge * n_ + a]; }
  std::uint64_t& pairs(std::size_t edge, Vertex a) { return masks_[edge * n_ + a]; }

  // True iff the vertex subset encoded by `subset` monitors every edge.
  bool covers(std::uint64_t subset) const;

  friend bool operator==(const MonitorTable&, const MonitorTable&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> masks_;
};

MonitorTable monitor_table(const Graph& g);

}  // namespace meg
