#pragma once

#include <cstdint>
#include <vector>

#include "meg/graph.hpp"

namespace meg {

inline constexpr std::size_t kDefaultOracleLimit = 12;

struct OracleOptions {
  std::size_t vertex_limit = kDefaultOracleLimit;
  // Restrict the search to supersets of the mandatory vertices inside the
  // non-cut vertices. Sound, but relies on the bounds it would otherwise test.
  bool trust_bounds = false;
};

struct OracleResult {
  std::size_t meg = 0;
  // Lexicographically smallest minimum MEG set.
  VertexSet witness;
  std::uint64_t explored = 0;
  bool trusted_bounds = false;
};

// Exhaustive minimum MEG set by increasing cardinality. Worst case
// O(2^k * m * k) subset checks over a precomputed monitor table (k = size of
// the search space), plus O(m * n * (n + m)) to build the table.
OracleResult min_meg_bruteforce(const Graph& g, const OracleOptions& opts = {});

// True iff V \ {v} is not an MEG set, i.e. v lies in every MEG set.
bool mandatory_bruteforce(const Graph& g, Vertex v, std::size_t vertex_limit = kDefaultOracleLimit);

// Every minimum MEG set, sorted lexicographically. Never uses the bounds.
std::vector<VertexSet> all_min_meg_sets(const Graph& g, std::size_t vertex_limit = kDefaultOracleLimit);

}  // namespace meg
