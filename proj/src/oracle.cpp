#include "meg/oracle.hpp"

#include "meg/error.hpp"
#include "meg/kernels.hpp"
#include "meg/monitoring.hpp"

namespace meg {
namespace {

void check_limit(const Graph& g, std::size_t limit) {
  require_connected(g);
  if (g.n() > limit || g.n() > 64) {
    throw Error(ErrorKind::kLimitExceeded,
                "oracle limited to " + std::to_string(std::min<std::size_t>(limit, 64)) + " vertices, graph has " +
                    std::to_string(g.n()));
  }
}

std::uint64_t mask_of(const VertexSet& s) {
  std::uint64_t m = 0;
  for (Vertex v : s) m |= std::uint64_t{1} << v;
  return m;
}

VertexSet set_of(std::uint64_t mask) {
  std::vector<Vertex> ids;
  for (Vertex v = 0; mask != 0; ++v, mask >>= 1)
    if (mask & 1) ids.push_back(v);
  return VertexSet(std::move(ids));
}

// All k-subsets of `pool` OR-ed with `base`, in lexicographic order of the
// chosen pool positions.
std::vector<std::uint64_t> subsets_of_size(const std::vector<Vertex>& pool, std::size_t k,
                                           std::uint64_t base) {
  std::vector<std::uint64_t> out;
  if (k > pool.size()) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  const std::size_t n = pool.size();
  while (true) {
    std::uint64_t m = base;
    for (std::size_t i : idx) m |= std::uint64_t{1} << pool[i];
    out.push_back(m);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

OracleResult min_meg_bruteforce(const Graph& g, const OracleOptions& opts) {
  check_limit(g, opts.vertex_limit);
  auto table = kernels::parallel::monitor_table(g);
  OracleResult out;
  out.trusted_bounds = opts.trust_bounds;
  std::uint64_t required = 0;
  std::vector<Vertex> pool;
  if (opts.trust_bounds) {
    auto b = bounds(g);
    required = mask_of(b.mandatory);
    pool = b.non_cut.minus(b.mandatory).ids();
  } else {
    pool = VertexSet::range(g.n()).ids();
  }
  // Lexicographic order of the pool choices is lexicographic order of the
  // resulting sets, since `required` is disjoint from the pool.
  for (std::size_t k = 0; k <= pool.size(); ++k) {
    auto subsets = subsets_of_size(pool, k, required);
    auto hit = kernels::parallel::first_covering(table, subsets);
    if (hit) {
      out.explored += *hit + 1;
      out.witness = set_of(subsets[*hit]);
      out.meg = out.witness.size();
      return out;
    }
    out.explored += subsets.size();
  }
  throw Error(ErrorKind::kInvalidArgument, "no MEG set inside the bounded search space");
}

bool mandatory_bruteforce(const Graph& g, Vertex v, std::size_t vertex_limit) {
  check_limit(g, vertex_limit);
  if (v >= g.n()) throw Error(ErrorKind::kInvalidArgument, "vertex id out of range");
  auto table = kernels::parallel::monitor_table(g);
  std::uint64_t all = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
  return !table.covers(all & ~(std::uint64_t{1} << v));
}

std::vector<VertexSet> all_min_meg_sets(const Graph& g, std::size_t vertex_limit) {
  OracleOptions opts;
  opts.vertex_limit = vertex_limit;
  auto best = min_meg_bruteforce(g, opts);
  auto table = kernels::parallel::monitor_table(g);
  std::vector<VertexSet> out;
  for (std::uint64_t m : subsets_of_size(VertexSet::range(g.n()).ids(), best.meg, 0)) {
    if (table.covers(m)) out.push_back(set_of(m));
  }
  return out;
}

}  // namespace meg
