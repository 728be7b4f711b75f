#include "meg/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#include "meg/error.hpp"

namespace meg::kernels {
namespace {

constexpr std::size_t kNone = ~std::size_t{0};

// Lowers `best` to `value` if smaller; safe under concurrent callers.
void lower_to(std::atomic<std::size_t>& best, std::size_t value) {
  std::size_t cur = best.load(std::memory_order_relaxed);
  while (value < cur && !best.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

bool edge_unmonitored(const Graph& g, const DistanceMatrix& dist, const VertexSet& s, Edge e) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    Vertex a = s[i];
    // e can only lie on a shortest path out of a if its ends are on
    // consecutive BFS levels.
    auto du = dist.at(a, e.u);
    auto dv = dist.at(a, e.v);
    if (du == dv) continue;
    auto cut = bfs_distances(g, a, e);
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (cut[s[j]] > dist.at(a, s[j])) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<Vertex> mandatory_witness(const Graph& g, Vertex v) {
  auto nv = g.neighbors(v);
  for (Vertex u : nv) {
    auto nu = g.neighbors(u);
    bool every_path_closes = true;
    for (Vertex x : nv) {
      if (x == u || g.adjacent(u, x)) continue;
      // Need w != v adjacent to both u and x.
      auto nx = g.neighbors(x);
      bool closed = false;
      auto i = nu.begin();
      auto j = nx.begin();
      while (i != nu.end() && j != nx.end()) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          if (*i != v) {
            closed = true;
            break;
          }
          ++i;
          ++j;
        }
      }
      if (!closed) {
        every_path_closes = false;
        break;
      }
    }
    if (every_path_closes) return u;
  }
  return std::nullopt;
}

namespace {

void fill_monitor_row(const Graph& g, const DistanceMatrix& dist, std::size_t index,
                      MonitorTable& table) {
  Edge e = g.edges()[index];
  for (Vertex a = 0; a < g.n(); ++a) {
    if (dist.at(a, e.u) == dist.at(a, e.v)) continue;
    auto cut = bfs_distances(g, a, e);
    std::uint64_t mask = 0;
    for (Vertex b = 0; b < g.n(); ++b) {
      if (b != a && cut[b] > dist.at(a, b)) mask |= std::uint64_t{1} << b;
    }
    table.pairs(index, a) = mask;
  }
}

void require_table_size(const Graph& g) {
  if (g.n() > 64) throw Error(ErrorKind::kLimitExceeded, "monitor table supports at most 64 vertices");
}

// Dense adjacency for the 5-subset scan.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(const Graph& g) : n_(g.n()), bits_(g.n() * g.n(), 0) {
    for (Edge e : g.edges()) {
      bits_[e.u * n_ + e.v] = 1;
      bits_[e.v * n_ + e.u] = 1;
    }
    if (n_ <= 64) {
      rows_.assign(n_, 0);
      for (Edge e : g.edges()) {
        rows_[e.u] |= std::uint64_t{1} << e.v;
        rows_[e.v] |= std::uint64_t{1} << e.u;
      }
    }
  }
  bool operator()(Vertex u, Vertex v) const { return bits_[u * n_ + v] != 0; }

  // Bit rows, available when n <= 64.
  const std::vector<std::uint64_t>& rows() const { return rows_; }

 private:
  std::size_t n_;
  std::vector<char> bits_;
  std::vector<std::uint64_t> rows_;
};

// Four vertices induce a P4 iff every induced degree is 1 or 2 and the
// degrees sum to 6.
int is_p4(const std::vector<std::uint64_t>& rows, std::uint64_t quad) {
  int sum = 0;
  for (std::uint64_t rest = quad; rest != 0; rest &= rest - 1) {
    int d = std::popcount(rows[std::countr_zero(rest)] & quad);
    if (d == 0 || d == 3) return 0;
    sum += d;
  }
  return sum == 6;
}

std::optional<FiveSet> first_violation_bits(const std::vector<std::uint64_t>& rows, std::size_t n,
                                            Vertex a) {
  auto bit = [](Vertex v) { return std::uint64_t{1} << v; };
  for (Vertex b = a + 1; b < n; ++b)
    for (Vertex c = b + 1; c < n; ++c) {
      const std::uint64_t abc = bit(a) | bit(b) | bit(c);
      for (Vertex d = c + 1; d < n; ++d) {
        const std::uint64_t abcd = abc | bit(d);
        const int base = is_p4(rows, abcd);
        for (Vertex e = d + 1; e < n; ++e) {
          int count = base;
          for (Vertex drop : {a, b, c, d}) {
            count += is_p4(rows, (abcd | bit(e)) & ~bit(drop));
            if (count >= 2) return FiveSet{a, b, c, d, e};
          }
        }
      }
    }
  return std::nullopt;
}

template <typename Adj>
int count_p4(const Adj& adj, const FiveSet& five) {
  int found = 0;
  for (int skip = 0; skip < 5; ++skip) {
    std::array<Vertex, 4> q{};
    int k = 0;
    for (int i = 0; i < 5; ++i)
      if (i != skip) q[k++] = five[i];
    std::array<int, 4> deg{};
    int edges = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        if (adj(q[i], q[j])) {
          ++edges;
          ++deg[i];
          ++deg[j];
        }
      }
    }
    // Three edges with degree sequence 1,1,2,2 is exactly P4.
    std::sort(deg.begin(), deg.end());
    if (edges == 3 && deg == std::array<int, 4>{1, 1, 2, 2}) ++found;
  }
  return found;
}

std::optional<FiveSet> first_violation_from(const AdjacencyMatrix& adj, std::size_t n, Vertex a) {
  if (n <= 64) return first_violation_bits(adj.rows(), n, a);
  for (Vertex b = a + 1; b < n; ++b)
    for (Vertex c = b + 1; c < n; ++c)
      for (Vertex d = c + 1; d < n; ++d)
        for (Vertex e = d + 1; e < n; ++e) {
          FiveSet five{a, b, c, d, e};
          if (count_p4(adj, five) >= 2) return five;
        }
  return std::nullopt;
}

}  // namespace

int count_induced_p4(const Graph& g, const FiveSet& five) {
  return count_p4([&g](Vertex u, Vertex v) { return g.adjacent(u, v); }, five);
}

namespace serial {

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix dist(g.n());
  for (Vertex s = 0; s < g.n(); ++s) {
    auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), dist.row(s).begin());
  }
  return dist;
}

std::optional<std::size_t> first_unmonitored_edge(const Graph& g, const DistanceMatrix& dist,
                                                  const VertexSet& s) {
  for (std::size_t i = 0; i < g.m(); ++i) {
    if (edge_unmonitored(g, dist, s, g.edges()[i])) return i;
  }
  return std::nullopt;
}

std::vector<std::optional<Vertex>> mandatory_witnesses(const Graph& g) {
  std::vector<std::optional<Vertex>> out(g.n());
  for (Vertex v = 0; v < g.n(); ++v) out[v] = mandatory_witness(g, v);
  return out;
}

MonitorTable monitor_table(const Graph& g) {
  require_table_size(g);
  auto dist = serial::all_pairs_distances(g);
  MonitorTable table(g.n(), g.m());
  for (std::size_t i = 0; i < g.m(); ++i) fill_monitor_row(g, dist, i, table);
  return table;
}

std::optional<FiveSet> first_p4_violation(const Graph& g) {
  AdjacencyMatrix adj(g);
  for (Vertex a = 0; a < g.n(); ++a) {
    if (auto hit = first_violation_from(adj, g.n(), a)) return hit;
  }
  return std::nullopt;
}

std::optional<std::size_t> first_covering(const MonitorTable& table,
                                          std::span<const std::uint64_t> subsets) {
  for (std::size_t i = 0; i < subsets.size(); ++i)
    if (table.covers(subsets[i])) return i;
  return std::nullopt;
}

}  // namespace serial

namespace parallel {

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix dist(g.n());
  const auto n = static_cast<long>(g.n());
#pragma omp parallel for schedule(dynamic, 8)
  for (long s = 0; s < n; ++s) {
    auto row = bfs_distances(g, static_cast<Vertex>(s));
    std::copy(row.begin(), row.end(), dist.row(static_cast<Vertex>(s)).begin());
  }
  return dist;
}

std::optional<std::size_t> first_unmonitored_edge(const Graph& g, const DistanceMatrix& dist,
                                                  const VertexSet& s) {
  std::atomic<std::size_t> best{kNone};
  const auto m = static_cast<long>(g.m());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < m; ++i) {
    auto idx = static_cast<std::size_t>(i);
    if (idx > best.load(std::memory_order_relaxed)) continue;
    if (edge_unmonitored(g, dist, s, g.edges()[idx])) lower_to(best, idx);
  }
  if (best == kNone) return std::nullopt;
  return best.load();
}

std::vector<std::optional<Vertex>> mandatory_witnesses(const Graph& g) {
  std::vector<std::optional<Vertex>> out(g.n());
  const auto n = static_cast<long>(g.n());
#pragma omp parallel for schedule(dynamic, 16)
  for (long v = 0; v < n; ++v) out[v] = mandatory_witness(g, static_cast<Vertex>(v));
  return out;
}

MonitorTable monitor_table(const Graph& g) {
  require_table_size(g);
  auto dist = parallel::all_pairs_distances(g);
  MonitorTable table(g.n(), g.m());
  const auto m = static_cast<long>(g.m());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < m; ++i) fill_monitor_row(g, dist, static_cast<std::size_t>(i), table);
  return table;
}

std::optional<FiveSet> first_p4_violation(const Graph& g) {
  AdjacencyMatrix adj(g);
  const auto n = static_cast<long>(g.n());
  std::vector<std::optional<FiveSet>> per_first(g.n());
  std::atomic<std::size_t> best{kNone};
#pragma omp parallel for schedule(dynamic)
  for (long a = 0; a < n; ++a) {
    auto first = static_cast<std::size_t>(a);
    if (first > best.load(std::memory_order_relaxed)) continue;
    per_first[first] = first_violation_from(adj, g.n(), static_cast<Vertex>(a));
    if (per_first[first]) lower_to(best, first);
  }
  if (best == kNone) return std::nullopt;
  return per_first[best.load()];
}

std::optional<std::size_t> first_covering(const MonitorTable& table,
                                          std::span<const std::uint64_t> subsets) {
  std::atomic<std::size_t> best{kNone};
  const auto count = static_cast<long>(subsets.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < count; ++i) {
    auto idx = static_cast<std::size_t>(i);
    if (idx > best.load(std::memory_order_relaxed)) continue;
    if (table.covers(subsets[idx])) lower_to(best, idx);
  }
  if (best == kNone) return std::nullopt;
  return best.load();
}

}  // namespace parallel
}  // namespace meg::kernels
