#include "meg/monitoring.hpp"

#include <bit>

#include "meg/error.hpp"
#include "meg/kernels.hpp"

namespace meg {
namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t sum = 0;
  if (__builtin_add_overflow(a, b, &sum) || sum == PathCounts::kSaturated) return PathCounts::kSaturated;
  return sum;
}

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.n()) throw Error(ErrorKind::kInvalidArgument, "vertex id out of range");
}

void check_query(const Graph& g, Vertex a, Vertex b, Edge e) {
  check_vertex(g, a);
  check_vertex(g, b);
  if (a == b) throw Error(ErrorKind::kInvalidArgument, "monitoring pair needs two distinct vertices");
  if (e.u >= g.n() || e.v >= g.n() || !g.adjacent(e.u, e.v)) {
    throw Error(ErrorKind::kInvalidArgument, "not an edge of the graph");
  }
}

}  // namespace

bool monitors(const Graph& g, Vertex a, Vertex b, Edge e) {
  check_query(g, a, b, e);
  auto base = bfs_distances(g, a)[b];
  if (base == kUnreachable) return false;
  return bfs_distances(g, a, e)[b] > base;
}

PathCounts::PathCounts(const Graph& g) : n_(g.n()), counts_(g.n() * g.n(), 0) {
  std::vector<std::uint32_t> dist(n_);
  std::vector<Vertex> queue;
  queue.reserve(n_);
  for (Vertex s = 0; s < n_; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    std::uint64_t* cnt = counts_.data() + std::size_t{s} * n_;
    queue.clear();
    dist[s] = 0;
    cnt[s] = 1;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == kUnreachable) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
        if (dist[y] == dist[x] + 1) cnt[y] = saturating_add(cnt[y], cnt[x]);
      }
    }
  }
}

CountVerdict monitors_by_counting(const Graph& g, const DistanceMatrix& dist,
                                  const PathCounts& counts, Vertex a, Vertex b, Edge e) {
  check_query(g, a, b, e);
  const std::uint64_t total_len = dist.at(a, b);
  if (total_len == kUnreachable) return CountVerdict::kNotMonitored;
  // At most one orientation of e can lie on a shortest a-b path.
  for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
    std::uint64_t ax = dist.at(a, x);
    std::uint64_t yb = dist.at(y, b);
    if (ax == kUnreachable || yb == kUnreachable || ax + 1 + yb != total_len) continue;
    if (counts.saturated(a, x) || counts.saturated(y, b) || counts.saturated(a, b)) {
      return CountVerdict::kIndeterminate;
    }
    std::uint64_t through = 0;
    if (__builtin_mul_overflow(counts.at(a, x), counts.at(y, b), &through)) {
      return CountVerdict::kIndeterminate;
    }
    return through == counts.at(a, b) ? CountVerdict::kMonitored : CountVerdict::kNotMonitored;
  }
  return CountVerdict::kNotMonitored;
}

MegCheck is_meg_set(const Graph& g, const VertexSet& s) {
  require_connected(g);
  for (Vertex v : s) check_vertex(g, v);
  auto dist = all_pairs_distances(g);
  auto miss = kernels::parallel::first_unmonitored_edge(g, dist, s);
  if (!miss) return {true, std::nullopt};
  return {false, g.edges()[*miss]};
}

std::vector<MonitorWitness> monitor_witnesses(const Graph& g, const VertexSet& s) {
  require_connected(g);
  for (Vertex v : s) check_vertex(g, v);
  auto dist = all_pairs_distances(g);
  std::vector<MonitorWitness> out;
  out.reserve(g.m());
  for (Edge e : g.edges()) {
    MonitorWitness w{e, std::nullopt};
    for (std::size_t i = 0; i + 1 < s.size() && !w.pair; ++i) {
      auto cut = bfs_distances(g, s[i], e);
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (cut[s[j]] > dist.at(s[i], s[j])) {
          w.pair = std::pair{s[i], s[j]};
          break;
        }
      }
    }
    out.push_back(w);
  }
  return out;
}

std::optional<Vertex> is_mandatory(const Graph& g, Vertex v) {
  require_connected(g);
  check_vertex(g, v);
  return kernels::mandatory_witness(g, v);
}

VertexSet mandatory_vertices(const Graph& g) {
  require_connected(g);
  auto witnesses = kernels::parallel::mandatory_witnesses(g);
  std::vector<Vertex> ids;
  for (Vertex v = 0; v < g.n(); ++v)
    if (witnesses[v]) ids.push_back(v);
  return VertexSet(std::move(ids));
}

Bounds bounds(const Graph& g) {
  require_connected(g);
  Bounds b;
  b.mandatory = mandatory_vertices(g);
  b.non_cut = VertexSet::range(g.n()).minus(articulation_points(g));
  b.lower = b.mandatory.size();
  b.upper = b.non_cut.size();
  return b;
}

bool MonitorTable::covers(std::uint64_t subset) const {
  // Bits at or above n name no vertex.
  if (n_ < 64) subset &= (std::uint64_t{1} << n_) - 1;
  for (std::size_t e = 0; e < m_; ++e) {
    bool monitored = false;
    for (std::uint64_t rest = subset; rest != 0 && !monitored; rest &= rest - 1) {
      auto a = static_cast<Vertex>(std::countr_zero(rest));
      monitored = (pairs(e, a) & subset) != 0;
    }
    if (!monitored) return false;
  }
  return true;
}

MonitorTable monitor_table(const Graph& g) {
  require_connected(g);
  return kernels::parallel::monitor_table(g);
}

}  // namespace meg
