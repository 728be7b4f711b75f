#pragma once

#include <optional>
#include <string>
#include <vector>

#include "meg/graph.hpp"
#include "meg/kernels.hpp"

namespace meg {

enum class Verdict { kYes, kNo, kUnknown };

std::string to_string(Verdict v);

// ---------------------------------------------------------------------------
// Distance-hereditary graphs: repeatedly delete a pendant vertex or a twin.

enum class PruneKind { kPendant, kTrueTwin, kFalseTwin };

std::string to_string(PruneKind k);

struct PruneStep {
  Vertex vertex;
  PruneKind kind;
  // Stem of a pendant vertex, or the twin that stays behind.
  Vertex partner;
};

struct PruneSequence {
  std::vector<PruneStep> steps;
  // The single vertex left after all steps.
  Vertex last = 0;
};

std::optional<PruneSequence> recognize_distance_hereditary(const Graph& g);

// Replays the steps against g and checks each against the graph at that step.
bool verify_prune_sequence(const Graph& g, const PruneSequence& seq);

// ---------------------------------------------------------------------------
// P4-sparse graphs: every 5 vertices induce at most one P4.

inline constexpr std::size_t kDefaultP4ScanLimit = 60;

// Throws kLimitExceeded above `limit` vertices.
bool recognize_p4_sparse(const Graph& g, std::size_t limit = kDefaultP4ScanLimit);
// The lexicographically first 5-set inducing two or more P4s.
std::optional<kernels::FiveSet> find_p4_obstruction(const Graph& g,
                                                    std::size_t limit = kDefaultP4ScanLimit);

enum class SpiderKind { kThin, kThick };

std::string to_string(SpiderKind k);

// legs[i] is paired with body[i]: thin spiders have N_C(legs[i]) = {body[i]},
// thick spiders have N_C(legs[i]) = C \ {body[i]}.
struct SpiderPartition {
  std::vector<Vertex> legs;  // S, independent
  std::vector<Vertex> body;  // C, clique
  VertexSet head;            // R, complete to C and anticomplete to S
  SpiderKind kind = SpiderKind::kThin;
};

inline constexpr std::size_t kSpiderExhaustiveLimit = 12;

std::optional<SpiderPartition> detect_spider(const Graph& g);
bool verify_spider(const Graph& g, const SpiderPartition& p);
// Partition search over all (S, C) pairs. Exponential; for cross-checks.
std::optional<SpiderPartition> detect_spider_exhaustive(const Graph& g);

// ---------------------------------------------------------------------------
// Bipartite permutation graphs: strong orderings of the bipartition.

struct StrongOrdering {
  std::vector<Vertex> x_order;
  std::vector<Vertex> y_order;
  // Indexed by vertex: first and last neighbor under the opposite order.
  std::vector<Vertex> first;
  std::vector<Vertex> last;
  // Indexed by vertex: position within its own side's order.
  std::vector<std::size_t> position;
};

// Fills first/last/position from the two orders. Throws kInvalidArgument if
// the orders do not cover a bipartition of g, or a vertex is isolated.
StrongOrdering make_strong_ordering(const Graph& g, std::vector<Vertex> x_order,
                                    std::vector<Vertex> y_order);

// Exact check of the crossing-edge condition (quadratic in m), plus
// consecutive neighborhoods, enclosure and monotone first/last on both sides.
bool verify_strong_ordering(const Graph& g, const StrongOrdering& ord);

struct BipartitePermutationResult {
  Verdict verdict = Verdict::kUnknown;
  std::optional<StrongOrdering> ordering;
  std::string reason;
};

inline constexpr std::size_t kStrongOrderingExhaustiveLimit = 12;

BipartitePermutationResult recognize_bipartite_permutation(
    const Graph& g, std::size_t exhaustive_limit = kStrongOrderingExhaustiveLimit);

// Tries every ordering of the smaller side. Exponential; for cross-checks.
std::optional<StrongOrdering> find_strong_ordering_exhaustive(const Graph& g);

// ---------------------------------------------------------------------------
// Strongly chordal graphs: simple elimination.

struct SimpleCheck {
  bool simple = false;
  // Members of N[v] ordered so that closed neighborhoods increase.
  std::vector<Vertex> chain;
};

SimpleCheck is_simple(const Graph& g, Vertex v);

struct EliminationOrdering {
  std::vector<Vertex> order;
  std::vector<std::vector<Vertex>> chains;
};

std::optional<EliminationOrdering> recognize_strongly_chordal(const Graph& g);
bool verify_elimination_ordering(const Graph& g, const EliminationOrdering& seo);

}  // namespace meg
