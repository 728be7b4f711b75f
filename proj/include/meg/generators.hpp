#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>

#include "meg/graph.hpp"
#include "meg/recognizers.hpp"

namespace meg {

// All generators are pure functions of their parameters. Vertex ids of the
// output are randomly permuted (labels are the decimal ids) so downstream
// recognizers never see the construction order.

struct DistanceHereditaryParams {
  std::size_t n = 10;
  std::uint64_t seed = 1;
  // Relative weights of the three one-vertex extensions.
  double pendant = 1.0;
  double true_twin = 1.0;
  double false_twin = 1.0;
};

Graph gen_distance_hereditary(const DistanceHereditaryParams& params);

struct P4SparseParams {
  std::size_t n = 10;
  std::uint64_t seed = 1;
};

// Connected P4-sparse graph: a random join or spider at the top level, with
// recursively generated (possibly disconnected) parts.
Graph gen_p4_sparse(const P4SparseParams& params);

// Spider with ids legs 0..l-1, body l..2l-1 and the head graph's vertices after.
Graph make_spider(std::size_t legs, SpiderKind kind, const Graph& head);
// Spider whose head is a random P4-sparse graph of the given size.
Graph gen_spider(std::size_t legs, SpiderKind kind, std::size_t head_size, std::uint64_t seed);

struct BipartitePermutationParams {
  std::size_t p = 5;
  std::size_t q = 5;
  std::uint64_t seed = 1;
};

struct GeneratedBipartitePermutation {
  Graph graph;
  // The construction ordering; verifies as a strong ordering of `graph`.
  StrongOrdering ordering;
};

GeneratedBipartitePermutation gen_bipartite_permutation(const BipartitePermutationParams& params);

enum class ChordalModel { kInterval, kBlock };

struct StronglyChordalParams {
  std::size_t n = 10;
  std::uint64_t seed = 1;
  ChordalModel model = ChordalModel::kInterval;
};

Graph gen_strongly_chordal(const StronglyChordalParams& params);

// Intersection graph of closed integer intervals, vertex i for interval i.
Graph interval_graph(std::span<const std::pair<int, int>> intervals);

// Random spanning tree plus uniformly chosen extra edges.
// Throws kInvalidArgument unless n - 1 <= m <= n(n-1)/2.
Graph gen_random_connected(std::size_t n, std::size_t m, std::uint64_t seed);

// Named small graphs, labelled 0..n-1 unless stated.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
// Center 0, leaves 1..k.
Graph star_graph(std::size_t leaves);
// Disjoint copies of a and b with every a-b pair joined; b's ids follow a's.
Graph join(const Graph& a, const Graph& b);

// Command-line description of one generated instance.
struct GenSpec {
  std::string family = "dh";  // dh | p4sparse | spider | bipperm | chordal | random
  std::size_t n = 10;
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t m = 0;
  std::uint64_t seed = 1;
  std::size_t legs = 3;
  std::size_t head = 0;
  std::string spider_kind = "thin";
  std::string model = "interval";
};

Graph generate(const GenSpec& spec);
std::string describe(const GenSpec& spec);

}  // namespace meg
