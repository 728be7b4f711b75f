#include "meg/generators.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "meg/error.hpp"
#include "meg/random.hpp"

namespace meg {
namespace {

struct Draft {
  std::size_t n = 0;
  std::vector<Edge> edges;

  void add(Vertex u, Vertex v) { edges.push_back({u, v}); }

  // Appends `other` shifted past the current vertices; returns the offset.
  Vertex absorb(const Draft& other) {
    auto offset = static_cast<Vertex>(n);
    for (Edge e : other.edges) add(e.u + offset, e.v + offset);
    n += other.n;
    return offset;
  }
};

std::vector<Vertex> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  rng.shuffle(perm);
  return perm;
}

Graph finish(const Draft& d, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  edges.reserve(d.edges.size());
  for (Edge e : d.edges) edges.push_back({perm[e.u], perm[e.v]});
  std::sort(edges.begin(), edges.end(), [](Edge a, Edge b) {
    return std::pair{std::min(a.u, a.v), std::max(a.u, a.v)} < std::pair{std::min(b.u, b.v), std::max(b.u, b.v)};
  });
  return Graph::from_edges(d.n, edges);
}

Graph finish_shuffled(const Draft& d, Rng& rng) { return finish(d, random_permutation(d.n, rng)); }

Draft from_graph(const Graph& g) {
  Draft d;
  d.n = g.n();
  d.edges.assign(g.edges().begin(), g.edges().end());
  return d;
}

Draft spider_draft(std::size_t legs, SpiderKind kind, const Draft& head) {
  Draft d;
  d.n = 2 * legs;
  for (std::size_t i = 0; i < legs; ++i) {
    for (std::size_t j = i + 1; j < legs; ++j) d.add(static_cast<Vertex>(legs + i), static_cast<Vertex>(legs + j));
    for (std::size_t j = 0; j < legs; ++j) {
      bool linked = kind == SpiderKind::kThin ? i == j : i != j;
      if (linked) d.add(static_cast<Vertex>(i), static_cast<Vertex>(legs + j));
    }
  }
  Vertex offset = d.absorb(head);
  for (std::size_t r = 0; r < head.n; ++r)
    for (std::size_t c = 0; c < legs; ++c) d.add(static_cast<Vertex>(offset + r), static_cast<Vertex>(legs + c));
  return d;
}

Draft join_draft(const Draft& a, const Draft& b) {
  Draft d;
  d.absorb(a);
  Vertex offset = d.absorb(b);
  for (Vertex u = 0; u < a.n; ++u)
    for (Vertex v = 0; v < b.n; ++v) d.add(u, offset + v);
  return d;
}

// Random P4-sparse graph on n vertices, built from the union, join and
// spider operations.
Draft p4_sparse_draft(std::size_t n, bool connected, Rng& rng) {
  Draft d;
  if (n == 1) {
    d.n = 1;
    return d;
  }
  double roll = rng.unit();
  bool can_spider = n >= 4;
  if (!connected && roll < 0.3) {
    std::size_t a = rng.between(1, n - 1);
    d = p4_sparse_draft(a, false, rng);
    d.absorb(p4_sparse_draft(n - a, false, rng));
    return d;
  }
  if (can_spider && rng.chance(0.5)) {
    std::size_t legs = rng.between(2, n / 2);
    auto kind = rng.chance(0.5) ? SpiderKind::kThin : SpiderKind::kThick;
    Draft head;
    if (n > 2 * legs) head = p4_sparse_draft(n - 2 * legs, false, rng);
    return spider_draft(legs, kind, head);
  }
  std::size_t a = rng.between(1, n - 1);
  return join_draft(p4_sparse_draft(a, false, rng), p4_sparse_draft(n - a, false, rng));
}

}  // namespace

Graph gen_distance_hereditary(const DistanceHereditaryParams& params) {
  if (params.n < 1) throw Error(ErrorKind::kInvalidArgument, "need at least one vertex");
  Rng rng(params.seed, 1);
  const double total = params.pendant + params.true_twin + params.false_twin;
  if (!(total > 0)) throw Error(ErrorKind::kInvalidArgument, "extension weights must be positive");
  std::vector<std::vector<Vertex>> adj(params.n);
  Draft d;
  d.n = 1;
  for (Vertex v = 1; v < params.n; ++v) {
    auto w = static_cast<Vertex>(rng.below(v));
    double roll = rng.unit() * total;
    // With a single vertex a false twin would be isolated.
    bool pendant = v == 1 ? roll >= params.pendant + params.true_twin || roll < params.pendant
                          : roll < params.pendant;
    if (pendant) {
      adj[v].push_back(w);
    } else {
      adj[v] = adj[w];
      if (roll < params.pendant + params.true_twin) adj[v].push_back(w);
    }
    for (Vertex x : adj[v]) {
      if (x != v) adj[x].push_back(v);
      d.add(x, v);
    }
    d.n = v + 1;
  }
  return finish_shuffled(d, rng);
}

Graph make_spider(std::size_t legs, SpiderKind kind, const Graph& head) {
  if (legs < 2) throw Error(ErrorKind::kInvalidArgument, "a spider needs at least two legs");
  Draft d = spider_draft(legs, kind, from_graph(head));
  return Graph::from_edges(d.n, d.edges);
}

Graph gen_spider(std::size_t legs, SpiderKind kind, std::size_t head_size, std::uint64_t seed) {
  Rng rng(seed, 2);
  Graph head = head_size == 0 ? Graph{} : Graph::from_edges(head_size, p4_sparse_draft(head_size, false, rng).edges);
  return make_spider(legs, kind, head);
}

Graph gen_p4_sparse(const P4SparseParams& params) {
  if (params.n < 2) throw Error(ErrorKind::kInvalidArgument, "need at least two vertices");
  Rng rng(params.seed, 3);
  Draft d = p4_sparse_draft(params.n, true, rng);
  return finish_shuffled(d, rng);
}

GeneratedBipartitePermutation gen_bipartite_permutation(const BipartitePermutationParams& params) {
  const std::size_t p = params.p;
  const std::size_t q = params.q;
  if (p < 1 || q < 1) throw Error(ErrorKind::kInvalidArgument, "both sides need at least one vertex");
  Rng rng(params.seed, 4);
  // Neighbor interval [first[i], last[i]] of x_i over the y order: both ends
  // nondecreasing and consecutive intervals overlapping, which keeps the
  // graph connected and the orders strong.
  std::vector<std::size_t> first(p), last(p);
  const std::size_t stride = 2 * ((q + p - 1) / p);
  for (std::size_t i = 0; i < p; ++i) {
    if (i == 0) {
      first[i] = 0;
    } else {
      first[i] = rng.between(first[i - 1], last[i - 1]);
    }
    std::size_t lo = i == 0 ? 0 : std::max(last[i - 1], first[i]);
    last[i] = std::min(q - 1, static_cast<std::size_t>(rng.between(lo, lo + stride)));
  }
  last[p - 1] = q - 1;
  Draft d;
  d.n = p + q;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = first[i]; j <= last[i]; ++j) d.add(static_cast<Vertex>(i), static_cast<Vertex>(p + j));
  auto perm = random_permutation(d.n, rng);
  Graph g = finish(d, perm);
  std::vector<Vertex> xs, ys;
  for (std::size_t i = 0; i < p; ++i) xs.push_back(perm[i]);
  for (std::size_t j = 0; j < q; ++j) ys.push_back(perm[p + j]);
  auto ord = make_strong_ordering(g, std::move(xs), std::move(ys));
  return {std::move(g), std::move(ord)};
}

Graph interval_graph(std::span<const std::pair<int, int>> intervals) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    for (std::size_t j = i + 1; j < intervals.size(); ++j) {
      auto [a0, a1] = intervals[i];
      auto [b0, b1] = intervals[j];
      if (std::max(a0, b0) <= std::min(a1, b1)) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  return Graph::from_edges(intervals.size(), edges);
}

Graph gen_strongly_chordal(const StronglyChordalParams& params) {
  const std::size_t n = params.n;
  if (n < 2) throw Error(ErrorKind::kInvalidArgument, "need at least two vertices");
  Rng rng(params.seed, 5);
  Draft d;
  if (params.model == ChordalModel::kInterval) {
    std::vector<std::pair<int, int>> iv(n);
    const int span = static_cast<int>(2 * n);
    for (auto& [lo, hi] : iv) {
      lo = static_cast<int>(rng.below(span));
      hi = lo + 1 + static_cast<int>(rng.below(4));
    }
    std::sort(iv.begin(), iv.end());
    // Pull any interval that starts past the covered prefix back onto it.
    int reach = iv[0].second;
    for (std::size_t i = 1; i < n; ++i) {
      if (iv[i].first > reach) {
        int len = iv[i].second - iv[i].first;
        iv[i].first = reach;
        iv[i].second = reach + len;
      }
      reach = std::max(reach, iv[i].second);
    }
    d = from_graph(interval_graph(iv));
  } else {
    // Block graph: cliques glued at single vertices along a random tree.
    d.n = std::min<std::size_t>(n, rng.between(2, 4));
    for (Vertex u = 0; u < d.n; ++u)
      for (Vertex v = u + 1; v < d.n; ++v) d.add(u, v);
    while (d.n < n) {
      auto anchor = static_cast<Vertex>(rng.below(d.n));
      std::size_t extra = std::min<std::size_t>(n - d.n, rng.between(1, 3));
      std::vector<Vertex> block{anchor};
      for (std::size_t i = 0; i < extra; ++i) block.push_back(static_cast<Vertex>(d.n + i));
      d.n += extra;
      for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t j = i + 1; j < block.size(); ++j) d.add(block[i], block[j]);
    }
  }
  return finish_shuffled(d, rng);
}

Graph gen_random_connected(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 1 || m + 1 < n || m > n * (n - 1) / 2) {
    throw Error(ErrorKind::kInvalidArgument, "edge count must lie in [n-1, n(n-1)/2]");
  }
  Rng rng(seed, 6);
  Draft d;
  d.n = n;
  std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
  for (Vertex v = 1; v < n; ++v) {
    auto w = static_cast<Vertex>(rng.below(v));
    d.add(w, v);
    used[w][v] = used[v][w] = 1;
  }
  std::vector<Edge> spare;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!used[u][v]) spare.push_back({u, v});
  rng.shuffle(spare);
  for (std::size_t i = 0; i + n - 1 < m; ++i) d.edges.push_back(spare[i]);
  return finish_shuffled(d, rng);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  if (n >= 3) edges.push_back({static_cast<Vertex>(n - 1), 0});
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::from_edges(leaves + 1, edges);
}

Graph join(const Graph& a, const Graph& b) {
  Draft d = join_draft(from_graph(a), from_graph(b));
  return Graph::from_edges(d.n, d.edges);
}

Graph generate(const GenSpec& spec) {
  if (spec.family == "dh") return gen_distance_hereditary({spec.n, spec.seed});
  if (spec.family == "p4sparse") return gen_p4_sparse({spec.n, spec.seed});
  if (spec.family == "spider") {
    SpiderKind kind;
    if (spec.spider_kind == "thin") {
      kind = SpiderKind::kThin;
    } else if (spec.spider_kind == "thick") {
      kind = SpiderKind::kThick;
    } else {
      throw Error(ErrorKind::kInvalidArgument, "spider kind must be thin or thick");
    }
    return gen_spider(spec.legs, kind, spec.head, spec.seed);
  }
  if (spec.family == "bipperm") {
    std::size_t p = spec.p ? spec.p : (spec.n + 1) / 2;
    std::size_t q = spec.q ? spec.q : spec.n - (spec.n + 1) / 2;
    return gen_bipartite_permutation({p, q, spec.seed}).graph;
  }
  if (spec.family == "chordal") {
    ChordalModel model;
    if (spec.model == "interval") {
      model = ChordalModel::kInterval;
    } else if (spec.model == "block") {
      model = ChordalModel::kBlock;
    } else {
      throw Error(ErrorKind::kInvalidArgument, "chordal model must be interval or block");
    }
    return gen_strongly_chordal({spec.n, spec.seed, model});
  }
  if (spec.family == "random") {
    std::size_t m = spec.m ? spec.m : spec.n + spec.n / 2;
    return gen_random_connected(spec.n, m, spec.seed);
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown generator family '" + spec.family + "'");
}

std::string describe(const GenSpec& spec) {
  std::ostringstream out;
  out << "family=" << spec.family << " seed=" << spec.seed;
  if (spec.family == "spider") {
    out << " legs=" << spec.legs << " head=" << spec.head << " kind=" << spec.spider_kind;
  } else if (spec.family == "bipperm" && (spec.p || spec.q)) {
    out << " p=" << spec.p << " q=" << spec.q;
  } else {
    out << " n=" << spec.n;
  }
  if (spec.family == "chordal") out << " model=" << spec.model;
  if (spec.family == "random" && spec.m) out << " m=" << spec.m;
  return out.str();
}

}  // namespace meg
