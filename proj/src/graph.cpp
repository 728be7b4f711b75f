#include "meg/graph.hpp"

#include <algorithm>
#include <queue>

#include "meg/error.hpp"
#include "meg/kernels.hpp"

namespace meg {

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(std::size_t n) {
  std::vector<Vertex> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<Vertex>(i);
  VertexSet out;
  out.ids_ = std::move(ids);
  return out;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

VertexSet VertexSet::unite(const VertexSet& other) const {
  VertexSet out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out.ids_));
  return out;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
  VertexSet out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out.ids_));
  return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                      std::back_inserter(out.ids_));
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

Graph Graph::from_labels(std::span<const std::pair<std::string, std::string>> edges,
                         std::span<const std::string> vertices) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> ids;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };
  for (const auto& v : vertices) intern(v);
  std::vector<Edge> id_edges;
  id_edges.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) throw Error(ErrorKind::kSelfLoop, "self-loop on vertex '" + a + "'");
    id_edges.push_back({intern(a), intern(b)});
  }
  const std::size_t n = labels.size();
  return from_edges(n, id_edges, std::move(labels));
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  Graph g;
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n) throw Error(ErrorKind::kInvalidArgument, "label count does not match n");
  g.labels_ = std::move(labels);
  g.adjacency_.resize(n);
  for (Edge e : edges) {
    if (e.u >= n || e.v >= n) throw Error(ErrorKind::kInvalidArgument, "edge endpoint out of range");
    if (e.u == e.v) {
      throw Error(ErrorKind::kSelfLoop, "self-loop on vertex '" + g.labels_[e.u] + "'");
    }
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : g.adjacency_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  // Keep the first appearance of each undirected pair.
  std::vector<std::vector<Vertex>> seen(n);
  for (Edge e : edges) {
    Edge canon{std::min(e.u, e.v), std::max(e.u, e.v)};
    auto& row = seen[canon.u];
    if (std::find(row.begin(), row.end(), canon.v) != row.end()) continue;
    row.push_back(canon.v);
    g.edges_.push_back(canon);
  }
  g.by_label_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.by_label_.emplace(g.labels_[i], static_cast<Vertex>(i)).second) {
      throw Error(ErrorKind::kInvalidArgument, "duplicate label '" + g.labels_[i] + "'");
    }
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
  Edge canon{std::min(u, v), std::max(u, v)};
  if (canon.v >= n() || !adjacent(canon.u, canon.v)) return std::nullopt;
  auto it = std::find(edges_.begin(), edges_.end(), canon);
  return static_cast<std::size_t>(it - edges_.begin());
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  auto it = by_label_.find(std::string(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source, std::optional<Edge> skip) {
  if (source >= g.n()) throw Error(ErrorKind::kInvalidArgument, "BFS source out of range");
  std::vector<std::uint32_t> dist(g.n(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.n());
  dist[source] = 0;
  queue.push_back(source);
  Edge cut{};
  if (skip) cut = {std::min(skip->u, skip->v), std::max(skip->u, skip->v)};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] != kUnreachable) continue;
      if (skip && std::min(x, y) == cut.u && std::max(x, y) == cut.v) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) { return kernels::parallel::all_pairs_distances(g); }

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Vertex y : g.neighbors(members[head])) {
        if (comp[y] >= 0) continue;
        comp[y] = comp[s];
        members.push_back(y);
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

VertexSet articulation_points(const Graph& g) {
  // Iterative low-link DFS; a root is a cut vertex iff it has two or more
  // DFS children.
  const std::size_t n = g.n();
  std::vector<std::uint32_t> disc(n, 0), low(n, 0);
  std::vector<char> cut(n, 0);
  std::uint32_t timer = 0;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != 0) continue;
    std::size_t root_children = 0;
    disc[root] = low[root] = ++timer;
    stack.push_back({root, root, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex y = nb[f.next++];
        if (disc[y] == 0) {
          if (f.v == root) ++root_children;
          disc[y] = low[y] = ++timer;
          stack.push_back({y, f.v, 0});
        } else if (y != f.parent) {
          low[f.v] = std::min(low[f.v], disc[y]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      Vertex p = done.parent;
      low[p] = std::min(low[p], low[done.v]);
      if (p != root && low[done.v] >= disc[p]) cut[p] = 1;
    }
    if (root_children >= 2) cut[root] = 1;
  }
  std::vector<Vertex> ids;
  for (Vertex v = 0; v < n; ++v)
    if (cut[v]) ids.push_back(v);
  return VertexSet(std::move(ids));
}

Graph induced_subgraph(const Graph& g, const VertexSet& w) {
  if (w.empty()) throw Error(ErrorKind::kInvalidArgument, "induced subgraph of an empty vertex set");
  std::vector<Vertex> local(g.n(), kUnreachable);
  std::vector<std::string> labels;
  labels.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= g.n()) throw Error(ErrorKind::kInvalidArgument, "vertex id out of range");
    local[w[i]] = static_cast<Vertex>(i);
    labels.push_back(g.label(w[i]));
  }
  std::vector<Edge> edges;
  for (Edge e : g.edges()) {
    if (local[e.u] != kUnreachable && local[e.v] != kUnreachable) edges.push_back({local[e.u], local[e.v]});
  }
  return Graph::from_edges(w.size(), edges, std::move(labels));
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.n(); ++u) {
    auto nb = g.neighbors(u);
    auto it = std::upper_bound(nb.begin(), nb.end(), u);
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (it != nb.end() && *it == v) {
        ++it;
        continue;
      }
      edges.push_back({u, v});
    }
  }
  return Graph::from_edges(g.n(), edges, g.labels());
}

std::vector<VertexSet> co_components(const Graph& g) { return connected_components(complement(g)); }

void require_connected(const Graph& g) {
  if (g.n() < 2) throw Error(ErrorKind::kTooSmall, "graph needs at least two vertices");
  if (!is_connected(g)) throw Error(ErrorKind::kNotConnected, "graph is not connected; MEG sets require a connected input");
}

}  // namespace meg
