#include "meg/recognizers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include <boost/dynamic_bitset.hpp>

#include "meg/error.hpp"

namespace meg {
namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<Bits> open_neighborhoods(const Graph& g) {
  std::vector<Bits> out(g.n(), Bits(g.n()));
  for (Edge e : g.edges()) {
    out[e.u].set(e.v);
    out[e.v].set(e.u);
  }
  return out;
}

std::vector<Bits> closed_neighborhoods(const Graph& g) {
  auto out = open_neighborhoods(g);
  for (Vertex v = 0; v < g.n(); ++v) out[v].set(v);
  return out;
}

std::vector<Vertex> members(const Bits& bits) {
  std::vector<Vertex> out;
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) out.push_back(static_cast<Vertex>(i));
  return out;
}

// Generates k-subsets of {0..n-1} in lexicographic order.
template <typename F>
bool for_each_combination(std::size_t n, std::size_t k, F&& visit) {
  if (k > n) return false;
  std::vector<Vertex> idx(k);
  std::iota(idx.begin(), idx.end(), Vertex{0});
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Two-colouring; nullopt when an odd cycle exists.
std::optional<std::vector<int>> two_colouring(const Graph& g) {
  std::vector<int> colour(g.n(), -1);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    case Verdict::kUnknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(PruneKind k) {
  switch (k) {
    case PruneKind::kPendant: return "pendant";
    case PruneKind::kTrueTwin: return "true_twin";
    case PruneKind::kFalseTwin: return "false_twin";
  }
  return "pendant";
}

std::string to_string(SpiderKind k) { return k == SpiderKind::kThin ? "thin" : "thick"; }

// ---------------------------------------------------------------------------
// Distance-hereditary

std::optional<PruneSequence> recognize_distance_hereditary(const Graph& g) {
  const std::size_t n = g.n();
  if (n == 0) return std::nullopt;
  auto open = open_neighborhoods(g);
  Bits alive(n);
  alive.set();
  PruneSequence seq;
  for (std::size_t remaining = n; remaining > 1; --remaining) {
    std::optional<PruneStep> step;
    for (auto v = alive.find_first(); v != Bits::npos && !step; v = alive.find_next(v)) {
      Bits nb = open[v] & alive;
      if (nb.count() == 1) {
        auto w = nb.find_first();
        // Both ends of an isolated edge are pendant; report them as true twins.
        auto kind = (open[w] & alive).count() == 1 ? PruneKind::kTrueTwin : PruneKind::kPendant;
        step = PruneStep{static_cast<Vertex>(v), kind, static_cast<Vertex>(w)};
      }
    }
    if (!step) {
      std::map<Bits, Vertex> open_seen, closed_seen;
      for (auto v = alive.find_first(); v != Bits::npos && !step; v = alive.find_next(v)) {
        Bits nb = open[v] & alive;
        Bits cl = nb;
        cl.set(v);
        if (auto it = open_seen.find(nb); it != open_seen.end()) {
          step = PruneStep{static_cast<Vertex>(v), PruneKind::kFalseTwin, it->second};
        } else if (auto jt = closed_seen.find(cl); jt != closed_seen.end()) {
          step = PruneStep{static_cast<Vertex>(v), PruneKind::kTrueTwin, jt->second};
        } else {
          open_seen.emplace(std::move(nb), static_cast<Vertex>(v));
          closed_seen.emplace(std::move(cl), static_cast<Vertex>(v));
        }
      }
    }
    if (!step) return std::nullopt;
    alive.reset(step->vertex);
    seq.steps.push_back(*step);
  }
  seq.last = static_cast<Vertex>(alive.find_first());
  return seq;
}

bool verify_prune_sequence(const Graph& g, const PruneSequence& seq) {
  const std::size_t n = g.n();
  if (n == 0 || seq.steps.size() + 1 != n) return false;
  auto open = open_neighborhoods(g);
  Bits alive(n);
  alive.set();
  for (const auto& step : seq.steps) {
    Vertex v = step.vertex;
    Vertex w = step.partner;
    if (v >= n || w >= n || v == w || !alive.test(v) || !alive.test(w)) return false;
    Bits nv = open[v] & alive;
    Bits nw = open[w] & alive;
    switch (step.kind) {
      case PruneKind::kPendant:
        if (nv.count() != 1 || !nv.test(w)) return false;
        break;
      case PruneKind::kFalseTwin:
        if (nv != nw || nv.test(w)) return false;
        break;
      case PruneKind::kTrueTwin: {
        if (!nv.test(w)) return false;
        nv.set(v);
        nw.set(w);
        if (nv != nw) return false;
        break;
      }
    }
    alive.reset(v);
  }
  return seq.last < n && alive.test(seq.last) && alive.count() == 1;
}

// ---------------------------------------------------------------------------
// P4-sparse

std::optional<kernels::FiveSet> find_p4_obstruction(const Graph& g, std::size_t limit) {
  if (g.n() > limit) {
    throw Error(ErrorKind::kLimitExceeded,
                "P4-sparse scan limited to " + std::to_string(limit) + " vertices");
  }
  return kernels::parallel::first_p4_violation(g);
}

bool recognize_p4_sparse(const Graph& g, std::size_t limit) { return !find_p4_obstruction(g, limit); }

bool verify_spider(const Graph& g, const SpiderPartition& p) {
  const std::size_t l = p.legs.size();
  if (l < 2 || p.body.size() != l) return false;
  std::vector<int> role(g.n(), -1);  // 0 leg, 1 body, 2 head
  auto claim = [&](Vertex v, int r) {
    if (v >= g.n() || role[v] != -1) return false;
    role[v] = r;
    return true;
  };
  for (Vertex s : p.legs)
    if (!claim(s, 0)) return false;
  for (Vertex c : p.body)
    if (!claim(c, 1)) return false;
  for (Vertex r : p.head)
    if (!claim(r, 2)) return false;
  if (std::find(role.begin(), role.end(), -1) != role.end()) return false;

  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 1; j < l; ++j) {
      if (g.adjacent(p.legs[i], p.legs[j])) return false;
      if (!g.adjacent(p.body[i], p.body[j])) return false;
    }
  }
  for (Vertex r : p.head) {
    for (Vertex c : p.body)
      if (!g.adjacent(r, c)) return false;
    for (Vertex s : p.legs)
      if (g.adjacent(r, s)) return false;
  }
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      bool expected = p.kind == SpiderKind::kThin ? i == j : i != j;
      if (g.adjacent(p.legs[i], p.body[j]) != expected) return false;
    }
  }
  return true;
}

namespace {

// Thin spider from pendant vertices: S is exactly the pendant set and C the
// stems. Any other candidate fails verification.
std::optional<SpiderPartition> thin_from_pendants(const Graph& g) {
  SpiderPartition p;
  p.kind = SpiderKind::kThin;
  std::vector<char> used(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) != 1) continue;
    p.legs.push_back(v);
    p.body.push_back(g.neighbors(v)[0]);
  }
  if (p.legs.size() < 2) return std::nullopt;
  for (Vertex v : p.legs) used[v] = 1;
  for (Vertex c : p.body) {
    if (used[c]) return std::nullopt;
    used[c] = 1;
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.n(); ++v)
    if (!used[v]) rest.push_back(v);
  p.head = VertexSet(std::move(rest));
  if (!verify_spider(g, p)) return std::nullopt;
  return p;
}

}  // namespace

std::optional<SpiderPartition> detect_spider_exhaustive(const Graph& g) {
  const std::size_t n = g.n();
  auto open = open_neighborhoods(g);
  std::optional<SpiderPartition> found;
  for (std::size_t l = 2; 2 * l <= n && !found; ++l) {
    for_each_combination(n, l, [&](const std::vector<Vertex>& legs) {
      for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j)
          if (open[legs[i]].test(legs[j])) return false;
      std::vector<Vertex> others;
      for (Vertex v = 0; v < n; ++v)
        if (!std::binary_search(legs.begin(), legs.end(), v)) others.push_back(v);
      return for_each_combination(others.size(), l, [&](const std::vector<Vertex>& pick) {
        std::vector<Vertex> body;
        for (Vertex i : pick) body.push_back(others[i]);
        Bits body_bits(n);
        for (Vertex c : body) body_bits.set(c);
        for (SpiderKind kind : {SpiderKind::kThin, SpiderKind::kThick}) {
          // Pair each leg with its unique C-neighbor (thin) or unique
          // C-non-neighbor (thick).
          SpiderPartition p;
          p.kind = kind;
          p.legs = legs;
          bool ok = true;
          for (Vertex s : legs) {
            Bits nc = open[s] & body_bits;
            if (kind == SpiderKind::kThick) nc = body_bits - nc;
            if (nc.count() != 1) {
              ok = false;
              break;
            }
            p.body.push_back(static_cast<Vertex>(nc.find_first()));
          }
          if (!ok) continue;
          Bits taken = body_bits;
          for (Vertex s : legs) taken.set(s);
          taken.flip();
          p.head = VertexSet(members(taken));
          if (verify_spider(g, p)) {
            found = std::move(p);
            return true;
          }
        }
        return false;
      });
    });
  }
  return found;
}

std::optional<SpiderPartition> detect_spider(const Graph& g) {
  if (g.n() < 4) return std::nullopt;
  if (auto thin = thin_from_pendants(g)) return thin;
  // The complement of a thick spider is a thin spider with the roles of S
  // and C exchanged.
  if (auto flipped = thin_from_pendants(complement(g))) {
    SpiderPartition p;
    p.kind = SpiderKind::kThick;
    p.legs = flipped->body;
    p.body = flipped->legs;
    p.head = flipped->head;
    if (verify_spider(g, p)) return p;
  }
  if (g.n() <= kSpiderExhaustiveLimit) return detect_spider_exhaustive(g);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Bipartite permutation

namespace {

struct Sides {
  std::vector<int> side;  // 0 = X, 1 = Y, -1 = missing
};

Sides check_bipartition(const Graph& g, const std::vector<Vertex>& x_order,
                        const std::vector<Vertex>& y_order) {
  Sides s{std::vector<int>(g.n(), -1)};
  for (int side = 0; side < 2; ++side) {
    for (Vertex v : side == 0 ? x_order : y_order) {
      if (v >= g.n() || s.side[v] != -1) {
        throw Error(ErrorKind::kInvalidArgument, "ordering repeats a vertex or names an unknown one");
      }
      s.side[v] = side;
    }
  }
  if (std::find(s.side.begin(), s.side.end(), -1) != s.side.end()) {
    throw Error(ErrorKind::kInvalidArgument, "ordering does not cover every vertex");
  }
  for (Edge e : g.edges()) {
    if (s.side[e.u] == s.side[e.v]) throw Error(ErrorKind::kInvalidArgument, "ordering is not a bipartition");
  }
  return s;
}

// Cheap necessary conditions: consecutive neighborhoods and monotone
// first/last on both sides.
bool intervals_monotone(const Graph& g, const StrongOrdering& ord) {
  for (const auto* order : {&ord.x_order, &ord.y_order}) {
    std::size_t prev_first = 0, prev_last = 0;
    for (std::size_t i = 0; i < order->size(); ++i) {
      Vertex v = (*order)[i];
      std::size_t f = ord.position[ord.first[v]];
      std::size_t l = ord.position[ord.last[v]];
      if (l - f + 1 != g.degree(v)) return false;
      if (i > 0 && (f < prev_first || l < prev_last)) return false;
      prev_first = f;
      prev_last = l;
    }
  }
  return true;
}

std::optional<StrongOrdering> layered_ordering(const Graph& g, Vertex start) {
  auto dist = bfs_distances(g, start);
  std::uint32_t depth = 0;
  for (auto d : dist) depth = std::max(depth, d);
  std::vector<std::vector<Vertex>> layers(depth + 1);
  for (Vertex v = 0; v < g.n(); ++v) layers[dist[v]].push_back(v);
  for (std::uint32_t k = 1; k <= depth; ++k) {
    // Within a layer, neighborhoods are a suffix of the previous layer and a
    // prefix of the next one: longer suffix first, then shorter prefix.
    std::vector<std::tuple<std::size_t, std::size_t, Vertex>> keyed;
    for (Vertex v : layers[k]) {
      std::size_t prev = 0, next = 0;
      for (Vertex y : g.neighbors(v)) {
        if (dist[y] + 1 == k) ++prev;
        if (dist[y] == k + 1) ++next;
      }
      keyed.emplace_back(g.n() - prev, next, v);
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i < keyed.size(); ++i) layers[k][i] = std::get<2>(keyed[i]);
  }
  std::vector<Vertex> x, y;
  for (std::uint32_t k = 0; k <= depth; ++k) {
    auto& side = k % 2 == 0 ? x : y;
    side.insert(side.end(), layers[k].begin(), layers[k].end());
  }
  auto ord = make_strong_ordering(g, std::move(x), std::move(y));
  if (!intervals_monotone(g, ord)) return std::nullopt;
  return ord;
}

}  // namespace

StrongOrdering make_strong_ordering(const Graph& g, std::vector<Vertex> x_order,
                                    std::vector<Vertex> y_order) {
  check_bipartition(g, x_order, y_order);
  StrongOrdering ord;
  ord.position.assign(g.n(), 0);
  for (std::size_t i = 0; i < x_order.size(); ++i) ord.position[x_order[i]] = i;
  for (std::size_t i = 0; i < y_order.size(); ++i) ord.position[y_order[i]] = i;
  ord.first.assign(g.n(), 0);
  ord.last.assign(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    auto nb = g.neighbors(v);
    if (nb.empty()) throw Error(ErrorKind::kInvalidArgument, "isolated vertex has no first/last neighbor");
    auto [lo, hi] = std::minmax_element(nb.begin(), nb.end(), [&](Vertex a, Vertex b) {
      return ord.position[a] < ord.position[b];
    });
    ord.first[v] = *lo;
    ord.last[v] = *hi;
  }
  ord.x_order = std::move(x_order);
  ord.y_order = std::move(y_order);
  return ord;
}

bool verify_strong_ordering(const Graph& g, const StrongOrdering& ord) {
  auto sides = check_bipartition(g, ord.x_order, ord.y_order);
  if (ord.position.size() != g.n() || ord.first.size() != g.n() || ord.last.size() != g.n()) return false;
  for (int side = 0; side < 2; ++side) {
    const auto& order = side == 0 ? ord.x_order : ord.y_order;
    for (std::size_t i = 0; i < order.size(); ++i)
      if (ord.position[order[i]] != i) return false;
  }
  // Recorded first/last must match the graph.
  for (Vertex v = 0; v < g.n(); ++v) {
    auto nb = g.neighbors(v);
    if (nb.empty()) return false;
    auto [lo, hi] = std::minmax_element(nb.begin(), nb.end(), [&](Vertex a, Vertex b) {
      return ord.position[a] < ord.position[b];
    });
    if (ord.first[v] != *lo || ord.last[v] != *hi) return false;
  }
  // Crossing-edge condition: a < a0 in X and b0 < b in Y with ab, a0b0 in E
  // forces ab0 and a0b.
  std::vector<Edge> oriented;
  oriented.reserve(g.m());
  for (Edge e : g.edges()) oriented.push_back(sides.side[e.u] == 0 ? e : Edge{e.v, e.u});
  for (Edge e1 : oriented) {
    for (Edge e2 : oriented) {
      if (ord.position[e1.u] < ord.position[e2.u] && ord.position[e2.v] < ord.position[e1.v]) {
        if (!g.adjacent(e1.u, e2.v) || !g.adjacent(e2.u, e1.v)) return false;
      }
    }
  }
  if (!intervals_monotone(g, ord)) return false;
  // Enclosure: N(y) within N(y0) leaves a consecutive remainder.
  for (const auto* order : {&ord.x_order, &ord.y_order}) {
    for (Vertex y : *order) {
      for (Vertex y0 : *order) {
        if (y == y0) continue;
        auto ny = g.neighbors(y);
        auto ny0 = g.neighbors(y0);
        if (!std::includes(ny0.begin(), ny0.end(), ny.begin(), ny.end())) continue;
        std::vector<std::size_t> rest;
        for (Vertex w : ny0)
          if (!std::binary_search(ny.begin(), ny.end(), w)) rest.push_back(ord.position[w]);
        if (rest.empty()) continue;
        auto [lo, hi] = std::minmax_element(rest.begin(), rest.end());
        if (*hi - *lo + 1 != rest.size()) return false;
      }
    }
  }
  return true;
}

std::optional<StrongOrdering> find_strong_ordering_exhaustive(const Graph& g) {
  auto colour = two_colouring(g);
  if (!colour) return std::nullopt;
  std::vector<Vertex> side[2];
  for (Vertex v = 0; v < g.n(); ++v) side[(*colour)[v]].push_back(v);
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) return std::nullopt;
  int small = side[0].size() <= side[1].size() ? 0 : 1;
  if (side[small].size() > 10) {
    throw Error(ErrorKind::kLimitExceeded, "exhaustive strong-ordering search limited to sides of 10");
  }
  std::vector<Vertex> perm = side[small];
  std::vector<std::size_t> pos(g.n(), 0);
  do {
    for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = i;
    // The other side's order is forced: sort by (first, last).
    std::vector<std::tuple<std::size_t, std::size_t, Vertex>> keyed;
    bool consecutive = true;
    for (Vertex v : side[1 - small]) {
      std::size_t lo = g.n(), hi = 0;
      for (Vertex w : g.neighbors(v)) {
        lo = std::min(lo, pos[w]);
        hi = std::max(hi, pos[w]);
      }
      if (hi - lo + 1 != g.degree(v)) {
        consecutive = false;
        break;
      }
      keyed.emplace_back(lo, hi, v);
    }
    if (!consecutive) continue;
    std::sort(keyed.begin(), keyed.end());
    std::vector<Vertex> other;
    for (const auto& k : keyed) other.push_back(std::get<2>(k));
    auto ord = small == 0 ? make_strong_ordering(g, perm, other) : make_strong_ordering(g, other, perm);
    if (verify_strong_ordering(g, ord)) return ord;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

BipartitePermutationResult recognize_bipartite_permutation(const Graph& g, std::size_t exhaustive_limit) {
  require_connected(g);
  BipartitePermutationResult out;
  if (!two_colouring(g)) {
    out.verdict = Verdict::kNo;
    out.reason = "not bipartite";
    return out;
  }
  for (Vertex s = 0; s < g.n(); ++s) {
    auto ord = layered_ordering(g, s);
    if (ord && verify_strong_ordering(g, *ord)) {
      out.verdict = Verdict::kYes;
      out.ordering = std::move(ord);
      out.reason = "layered ordering from vertex " + g.label(s);
      return out;
    }
  }
  if (g.n() <= exhaustive_limit) {
    if (auto ord = find_strong_ordering_exhaustive(g)) {
      out.verdict = Verdict::kYes;
      out.ordering = std::move(ord);
      out.reason = "exhaustive search";
    } else {
      out.verdict = Verdict::kNo;
      out.reason = "no strong ordering exists (exhaustive search)";
    }
    return out;
  }
  out.verdict = Verdict::kUnknown;
  out.reason = "no layered ordering verified; graph too large for exhaustive search";
  return out;
}

// ---------------------------------------------------------------------------
// Strongly chordal

namespace {

SimpleCheck simple_in(const std::vector<Bits>& closed, const Bits& alive, Vertex v) {
  SimpleCheck out;
  Bits nv = closed[v] & alive;
  std::vector<std::pair<Bits, Vertex>> hoods;
  for (Vertex w : members(nv)) hoods.emplace_back(closed[w] & alive, w);
  std::sort(hoods.begin(), hoods.end(), [v](const auto& a, const auto& b) {
    auto ca = a.first.count(), cb = b.first.count();
    if (ca != cb) return ca < cb;
    if ((a.second == v) != (b.second == v)) return a.second == v;
    return a.second < b.second;
  });
  for (std::size_t i = 0; i + 1 < hoods.size(); ++i) {
    if (!hoods[i].first.is_subset_of(hoods[i + 1].first)) return out;
  }
  out.simple = true;
  for (const auto& h : hoods) out.chain.push_back(h.second);
  return out;
}

}  // namespace

SimpleCheck is_simple(const Graph& g, Vertex v) {
  if (v >= g.n()) throw Error(ErrorKind::kInvalidArgument, "vertex id out of range");
  Bits alive(g.n());
  alive.set();
  return simple_in(closed_neighborhoods(g), alive, v);
}

std::optional<EliminationOrdering> recognize_strongly_chordal(const Graph& g) {
  auto closed = closed_neighborhoods(g);
  Bits alive(g.n());
  alive.set();
  EliminationOrdering seo;
  for (std::size_t step = 0; step < g.n(); ++step) {
    bool removed = false;
    for (auto v = alive.find_first(); v != Bits::npos; v = alive.find_next(v)) {
      auto check = simple_in(closed, alive, static_cast<Vertex>(v));
      if (!check.simple) continue;
      seo.order.push_back(static_cast<Vertex>(v));
      seo.chains.push_back(std::move(check.chain));
      alive.reset(v);
      removed = true;
      break;
    }
    if (!removed) return std::nullopt;
  }
  return seo;
}

bool verify_elimination_ordering(const Graph& g, const EliminationOrdering& seo) {
  if (seo.order.size() != g.n() || seo.chains.size() != g.n()) return false;
  auto closed = closed_neighborhoods(g);
  Bits alive(g.n());
  alive.set();
  for (std::size_t i = 0; i < seo.order.size(); ++i) {
    Vertex v = seo.order[i];
    if (v >= g.n() || !alive.test(v)) return false;
    const auto& chain = seo.chains[i];
    Bits nv = closed[v] & alive;
    Bits listed(g.n());
    for (Vertex w : chain) {
      if (w >= g.n() || listed.test(w)) return false;
      listed.set(w);
    }
    if (listed != nv || chain.empty() || chain.front() != v) return false;
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
      if (!(closed[chain[j]] & alive).is_subset_of(closed[chain[j + 1]] & alive)) return false;
    }
    alive.reset(v);
  }
  return true;
}

}  // namespace meg
