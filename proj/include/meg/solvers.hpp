#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>

#include "meg/graph.hpp"
#include "meg/monitoring.hpp"
#include "meg/oracle.hpp"
#include "meg/recognizers.hpp"

namespace meg {

enum class GraphClass { kDistanceHereditary, kBipartitePermutation, kStronglyChordal, kP4Sparse, kGeneral };

enum class Method { kCutBased, kMandatoryBased, kP4Structural, kOracle, kDecomposition, kNone };

std::string to_string(GraphClass c);
std::string to_string(Method m);

struct MegResult {
  GraphClass class_used = GraphClass::kGeneral;
  Method method = Method::kNone;
  // Unset only for method kNone, where `bounds` is filled instead.
  std::optional<std::size_t> meg;
  VertexSet witness;
  // False for decomposition results, which are valid but not proven minimum.
  bool minimum = true;
  std::optional<Bounds> bounds;
  std::chrono::nanoseconds elapsed{0};
};

enum class Strategy { kAuto, kCutBased, kMandatoryBased, kP4Structural, kOracle, kDecomposition };

struct SolveOptions {
  Strategy strategy = Strategy::kAuto;
  std::size_t oracle_limit = kDefaultOracleLimit;
  std::size_t p4_scan_limit = kDefaultP4ScanLimit;
  bool oracle_trust_bounds = false;
};

// Auto: distance-hereditary, bipartite permutation, strongly chordal, then
// P4-sparse; otherwise the oracle if small enough, else bounds only.
MegResult solve(const Graph& g, const SolveOptions& opts = {});

// V \ Cut(G). Throws kMethodMismatch unless g is distance-hereditary or
// bipartite permutation.
MegResult solve_cut_based(const Graph& g, const SolveOptions& opts = {});

// The mandatory vertices. Throws kMethodMismatch unless g is strongly chordal
// or P4-sparse.
MegResult solve_mandatory_based(const Graph& g, const SolveOptions& opts = {});

// Case analysis on the top-level join / spider shape of a P4-sparse graph.
MegResult solve_p4_structural(const Graph& g, const SolveOptions& opts = {});

// A vertex u with d(u, x) <= 2 for every x, if any.
std::optional<Vertex> eccentricity_at_most_two(const Graph& g);

// Cut vertices among the interim (non-extreme) vertices of a verified strong
// ordering: u is not a cut vertex iff some neighbor w has first(w) < u < last(w).
VertexSet cut_vertices_via_strong_ordering(const Graph& g, const StrongOrdering& ord);

using PieceSolver = std::function<VertexSet(const Graph&)>;

// Splits at cut vertices recursively and unites the piece solutions minus the
// cut vertex. Valid MEG set; minimality is not claimed.
VertexSet solve_by_cut_decomposition(const Graph& g, const PieceSolver& piece_solver);

// Decomposition with the oracle on small pieces and the whole vertex set on
// larger ones.
MegResult solve_decomposition(const Graph& g, const SolveOptions& opts = {});

}  // namespace meg
