#include "meg/solvers.hpp"

#include <algorithm>

#include "meg/error.hpp"

namespace meg {
namespace {

using Clock = std::chrono::steady_clock;

MegResult finish(MegResult r, Clock::time_point start) {
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return r;
}

MegResult cut_based(const Graph& g, GraphClass cls) {
  MegResult r;
  r.class_used = cls;
  r.method = Method::kCutBased;
  r.witness = VertexSet::range(g.n()).minus(articulation_points(g));
  r.meg = r.witness.size();
  return r;
}

MegResult mandatory_based(const Graph& g, GraphClass cls) {
  MegResult r;
  r.class_used = cls;
  r.method = Method::kMandatoryBased;
  r.witness = mandatory_vertices(g);
  r.meg = r.witness.size();
  return r;
}

MegResult oracle_based(const Graph& g, const SolveOptions& opts) {
  OracleOptions o;
  o.vertex_limit = opts.oracle_limit;
  o.trust_bounds = opts.oracle_trust_bounds;
  auto res = min_meg_bruteforce(g, o);
  MegResult r;
  r.class_used = GraphClass::kGeneral;
  r.method = Method::kOracle;
  r.meg = res.meg;
  r.witness = res.witness;
  return r;
}

bool is_p4_sparse_within(const Graph& g, const SolveOptions& opts) {
  return g.n() <= opts.p4_scan_limit && recognize_p4_sparse(g, opts.p4_scan_limit);
}

std::optional<GraphClass> cut_class(const Graph& g) {
  if (recognize_distance_hereditary(g)) return GraphClass::kDistanceHereditary;
  if (recognize_bipartite_permutation(g).verdict == Verdict::kYes) return GraphClass::kBipartitePermutation;
  return std::nullopt;
}

std::optional<GraphClass> mandatory_class(const Graph& g, const SolveOptions& opts) {
  if (recognize_strongly_chordal(g)) return GraphClass::kStronglyChordal;
  if (is_p4_sparse_within(g, opts)) return GraphClass::kP4Sparse;
  return std::nullopt;
}

VertexSet lift(const VertexSet& local, const VertexSet& w) {
  std::vector<Vertex> ids;
  ids.reserve(local.size());
  for (Vertex v : local) ids.push_back(w[v]);
  return VertexSet(std::move(ids));
}

VertexSet decompose(const Graph& g, const PieceSolver& piece_solver) {
  auto cuts = articulation_points(g);
  if (cuts.empty()) return piece_solver(g);
  Vertex v = cuts[0];
  VertexSet rest = VertexSet::range(g.n()).minus(VertexSet{v});
  VertexSet out;
  for (const auto& comp : connected_components(induced_subgraph(g, rest))) {
    VertexSet piece = lift(comp, rest).unite(VertexSet{v});
    out = out.unite(lift(decompose(induced_subgraph(g, piece), piece_solver), piece));
  }
  return out.minus(VertexSet{v});
}

}  // namespace

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::kDistanceHereditary: return "distance_hereditary";
    case GraphClass::kBipartitePermutation: return "bipartite_permutation";
    case GraphClass::kStronglyChordal: return "strongly_chordal";
    case GraphClass::kP4Sparse: return "p4_sparse";
    case GraphClass::kGeneral: return "general";
  }
  return "general";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::kCutBased: return "cut_based";
    case Method::kMandatoryBased: return "mandatory_based";
    case Method::kP4Structural: return "p4_structural";
    case Method::kOracle: return "oracle";
    case Method::kDecomposition: return "decomposition";
    case Method::kNone: return "none";
  }
  return "none";
}

MegResult solve_cut_based(const Graph& g, const SolveOptions&) {
  auto start = Clock::now();
  require_connected(g);
  auto cls = cut_class(g);
  if (!cls) {
    throw Error(ErrorKind::kMethodMismatch,
                "cut-based method needs a distance-hereditary or bipartite permutation graph; "
                "both recognizers rejected the input");
  }
  return finish(cut_based(g, *cls), start);
}

MegResult solve_mandatory_based(const Graph& g, const SolveOptions& opts) {
  auto start = Clock::now();
  require_connected(g);
  auto cls = mandatory_class(g, opts);
  if (!cls) {
    throw Error(ErrorKind::kMethodMismatch,
                "mandatory-based method needs a strongly chordal or P4-sparse graph; "
                "both recognizers rejected the input");
  }
  return finish(mandatory_based(g, *cls), start);
}

std::optional<Vertex> eccentricity_at_most_two(const Graph& g) {
  auto dist = all_pairs_distances(g);
  for (Vertex u = 0; u < g.n(); ++u) {
    auto row = dist.row(u);
    if (std::all_of(row.begin(), row.end(), [](std::uint32_t d) { return d <= 2; })) return u;
  }
  return std::nullopt;
}

MegResult solve_p4_structural(const Graph& g, const SolveOptions& opts) {
  auto start = Clock::now();
  require_connected(g);
  if (g.n() > opts.p4_scan_limit) {
    throw Error(ErrorKind::kLimitExceeded,
                "P4-sparse scan limited to " + std::to_string(opts.p4_scan_limit) + " vertices");
  }
  if (!recognize_p4_sparse(g, opts.p4_scan_limit)) {
    throw Error(ErrorKind::kMethodMismatch, "structural method needs a P4-sparse graph; recognizer rejected");
  }
  MegResult r;
  r.class_used = GraphClass::kP4Sparse;
  r.method = Method::kP4Structural;
  const VertexSet all = VertexSet::range(g.n());

  auto parts = co_components(g);
  if (parts.size() >= 2) {
    // Join of the co-components.
    std::size_t singletons = 0;
    std::optional<VertexSet> nontrivial;
    std::size_t nontrivial_count = 0;
    for (const auto& p : parts) {
      if (p.size() == 1) {
        ++singletons;
      } else {
        ++nontrivial_count;
        nontrivial = p;
      }
    }
    if (nontrivial_count >= 2 || singletons >= 2) {
      r.witness = all;
    } else {
      // One universal vertex joined with a nontrivial part.
      Graph part = induced_subgraph(g, *nontrivial);
      if (!is_connected(part)) {
        r.witness = *nontrivial;
      } else if (eccentricity_at_most_two(part)) {
        r.witness = all;
      } else {
        r.witness = *nontrivial;
      }
    }
  } else {
    auto spider = detect_spider(g);
    if (!spider) throw Error(ErrorKind::kNotP4Sparse, "complement is connected but no spider partition found");
    bool acts_thin = spider->kind == SpiderKind::kThin || spider->body.size() == 2;
    if (acts_thin) {
      r.witness = VertexSet(spider->legs).unite(spider->head);
    } else {
      r.witness = all;
    }
  }
  r.meg = r.witness.size();
  return finish(r, start);
}

VertexSet cut_vertices_via_strong_ordering(const Graph& g, const StrongOrdering& ord) {
  if (!verify_strong_ordering(g, ord)) {
    throw Error(ErrorKind::kInvalidArgument, "strong ordering does not verify for this graph");
  }
  std::vector<Vertex> cuts;
  for (const auto* order : {&ord.x_order, &ord.y_order}) {
    for (std::size_t i = 1; i + 1 < order->size(); ++i) {
      Vertex u = (*order)[i];
      bool spanned = std::any_of(g.neighbors(u).begin(), g.neighbors(u).end(), [&](Vertex w) {
        return ord.position[ord.first[w]] < i && ord.position[ord.last[w]] > i;
      });
      if (!spanned) cuts.push_back(u);
    }
  }
  return VertexSet(std::move(cuts));
}

VertexSet solve_by_cut_decomposition(const Graph& g, const PieceSolver& piece_solver) {
  require_connected(g);
  return decompose(g, piece_solver);
}

MegResult solve_decomposition(const Graph& g, const SolveOptions& opts) {
  auto start = Clock::now();
  require_connected(g);
  OracleOptions o;
  o.vertex_limit = opts.oracle_limit;
  o.trust_bounds = opts.oracle_trust_bounds;
  auto piece = [&o](const Graph& h) {
    if (h.n() <= o.vertex_limit) return min_meg_bruteforce(h, o).witness;
    return VertexSet::range(h.n());
  };
  MegResult r;
  r.class_used = GraphClass::kGeneral;
  r.method = Method::kDecomposition;
  r.minimum = false;
  r.witness = solve_by_cut_decomposition(g, piece);
  r.meg = r.witness.size();
  return finish(r, start);
}

MegResult solve(const Graph& g, const SolveOptions& opts) {
  switch (opts.strategy) {
    case Strategy::kCutBased: return solve_cut_based(g, opts);
    case Strategy::kMandatoryBased: return solve_mandatory_based(g, opts);
    case Strategy::kP4Structural: return solve_p4_structural(g, opts);
    case Strategy::kDecomposition: return solve_decomposition(g, opts);
    case Strategy::kOracle: {
      auto start = Clock::now();
      require_connected(g);
      return finish(oracle_based(g, opts), start);
    }
    case Strategy::kAuto: break;
  }
  auto start = Clock::now();
  require_connected(g);
  if (auto cls = cut_class(g)) return finish(cut_based(g, *cls), start);
  if (auto cls = mandatory_class(g, opts)) return finish(mandatory_based(g, *cls), start);
  if (g.n() <= opts.oracle_limit) return finish(oracle_based(g, opts), start);
  MegResult r;
  r.method = Method::kNone;
  r.witness = {};
  r.bounds = bounds(g);
  return finish(r, start);
}

}  // namespace meg
