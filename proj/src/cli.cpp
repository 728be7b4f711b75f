#include "meg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "meg/generators.hpp"
#include "meg/io.hpp"
#include "meg/monitoring.hpp"
#include "meg/oracle.hpp"
#include "meg/recognizers.hpp"
#include "meg/solvers.hpp"

namespace meg::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;
namespace fs = std::filesystem;

constexpr const char* kOracleLimitEnv = "MEGSOLVE_ORACLE_LIMIT";

std::string kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid_argument";
    case ErrorKind::kSelfLoop: return "self_loop";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kNotConnected: return "not_connected";
    case ErrorKind::kTooSmall: return "too_small";
    case ErrorKind::kLimitExceeded: return "limit_exceeded";
    case ErrorKind::kMethodMismatch: return "method_mismatch";
    case ErrorKind::kNotP4Sparse: return "not_p4_sparse";
  }
  return "unknown";
}

std::vector<std::string> sorted_labels(const Graph& g, const VertexSet& s) {
  std::vector<std::string> out;
  for (Vertex v : s) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

// Order-preserving, for certificates where the order is the content.
std::vector<std::string> ordered_labels(const Graph& g, const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

Json input_summary(const Graph& g) {
  return Json{{"n", g.n()}, {"m", g.m()}, {"labels", sorted_labels(g, VertexSet::range(g.n()))}};
}

std::size_t parse_size(const std::string& text, const std::string& what) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw Error(ErrorKind::kInvalidArgument, what + " must be a non-negative integer, got '" + text + "'");
  }
  return value;
}

// Explicit flag, then the environment, then the library default.
std::size_t oracle_limit(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kOracleLimitEnv)) return parse_size(env, kOracleLimitEnv);
  return kDefaultOracleLimit;
}

Graph load(const std::string& path) {
  Graph g = read_edge_list(path);
  if (g.n() == 0) throw Error(ErrorKind::kTooSmall, "graph has no vertices");
  return g;
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::kNo || b == Verdict::kNo) return Verdict::kNo;
  if (a == Verdict::kUnknown || b == Verdict::kUnknown) return Verdict::kUnknown;
  return Verdict::kYes;
}

Json spider_json(const Graph& g, const SpiderPartition& p) {
  return Json{{"kind", to_string(p.kind)},
              {"legs", ordered_labels(g, p.legs)},
              {"body", ordered_labels(g, p.body)},
              {"head", sorted_labels(g, p.head)}};
}

Json parts_json(const Graph& g, const std::vector<VertexSet>& parts) {
  Json out = Json::array();
  for (const auto& p : parts) out.push_back(sorted_labels(g, p));
  return out;
}

Json cmd_recognize(const Graph& g, bool certificate) {
  Json r;
  const bool connected = is_connected(g);
  r["connected"] = connected;
  Json certs;

  auto dh = recognize_distance_hereditary(g);
  r["distanceHereditary"] = dh ? "yes" : "no";
  if (dh) {
    Json steps = Json::array();
    for (const auto& s : dh->steps) {
      steps.push_back({{"vertex", g.label(s.vertex)}, {"kind", to_string(s.kind)}, {"partner", g.label(s.partner)}});
    }
    certs["distanceHereditary"] = {{"pruneSequence", steps}, {"last", g.label(dh->last)}};
  } else {
    certs["distanceHereditary"] = nullptr;
  }

  auto sc = recognize_strongly_chordal(g);
  r["stronglyChordal"] = sc ? "yes" : "no";
  certs["stronglyChordal"] = sc ? Json{{"eliminationOrder", ordered_labels(g, sc->order)}} : Json(nullptr);

  // A disjoint union is a bipartite permutation graph iff every component is.
  Verdict bp = Verdict::kYes;
  Json bp_cert = nullptr;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() == 1) continue;
    Graph h = induced_subgraph(g, comp);
    auto res = recognize_bipartite_permutation(h);
    bp = combine(bp, res.verdict);
    if (connected && res.ordering) {
      std::vector<Vertex> xs, ys;
      for (Vertex v : res.ordering->x_order) xs.push_back(comp[v]);
      for (Vertex v : res.ordering->y_order) ys.push_back(comp[v]);
      bp_cert = {{"xOrder", ordered_labels(g, xs)}, {"yOrder", ordered_labels(g, ys)}};
    } else if (res.verdict != Verdict::kYes && !res.reason.empty()) {
      bp_cert = {{"reason", res.reason}};
    }
  }
  r["bipartitePermutation"] = to_string(bp);
  certs["bipartitePermutation"] = bp_cert;

  if (g.n() > kDefaultP4ScanLimit) {
    r["p4Sparse"] = to_string(Verdict::kUnknown);
    certs["p4Sparse"] = {{"reason", "5-set scan limited to " + std::to_string(kDefaultP4ScanLimit) + " vertices"}};
  } else if (auto five = find_p4_obstruction(g)) {
    r["p4Sparse"] = "no";
    certs["p4Sparse"] = {{"obstruction", ordered_labels(g, {five->begin(), five->end()})}};
  } else {
    r["p4Sparse"] = "yes";
    if (!connected) {
      certs["p4Sparse"] = {{"components", parts_json(g, connected_components(g))}};
    } else if (auto parts = co_components(g); parts.size() >= 2) {
      certs["p4Sparse"] = {{"coComponents", parts_json(g, parts)}};
    } else if (auto spider = detect_spider(g)) {
      certs["p4Sparse"] = {{"spider", spider_json(g, *spider)}};
    } else {
      certs["p4Sparse"] = nullptr;
    }
  }
  if (certificate) r["certificates"] = certs;
  return r;
}

Strategy parse_method(const std::string& name) {
  if (name == "auto") return Strategy::kAuto;
  if (name == "cut") return Strategy::kCutBased;
  if (name == "mandatory") return Strategy::kMandatoryBased;
  if (name == "structural") return Strategy::kP4Structural;
  if (name == "oracle") return Strategy::kOracle;
  if (name == "decomposition") return Strategy::kDecomposition;
  throw Error(ErrorKind::kInvalidArgument, "unknown method '" + name + "'");
}

Json meg_json(const Graph& g, const MegResult& res) {
  Json r;
  r["class"] = to_string(res.class_used);
  r["method"] = to_string(res.method);
  r["meg"] = res.meg ? Json(*res.meg) : Json(nullptr);
  r["witness"] = sorted_labels(g, res.witness);
  r["minimum"] = res.meg.has_value() && res.minimum;
  if (res.bounds) {
    r["bounds"] = {{"lower", res.bounds->lower},
                   {"upper", res.bounds->upper},
                   {"mandatory", sorted_labels(g, res.bounds->mandatory)},
                   {"nonCut", sorted_labels(g, res.bounds->non_cut)}};
  }
  return r;
}

VertexSet parse_set(const Graph& g, const std::string& text) {
  std::vector<Vertex> ids;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
    auto v = g.find(item);
    if (!v) throw Error(ErrorKind::kInvalidArgument, "unknown vertex label '" + item + "' in --set");
    ids.push_back(*v);
  }
  return VertexSet(std::move(ids));
}

Json cmd_verify(const Graph& g, const std::string& set) {
  require_connected(g);
  VertexSet s = parse_set(g, set);
  auto check = is_meg_set(g, s);
  Json r{{"isMeg", check.is_meg}};
  if (check.uncovered) {
    r["uncovered"] = sorted_labels(g, VertexSet{check.uncovered->u, check.uncovered->v});
  }
  return r;
}

Json cmd_oracle(const Graph& g, bool trust, std::size_t limit) {
  require_connected(g);
  OracleOptions o;
  o.vertex_limit = limit;
  o.trust_bounds = trust;
  auto res = min_meg_bruteforce(g, o);
  return Json{{"meg", res.meg},
              {"witness", sorted_labels(g, res.witness)},
              {"explored", res.explored},
              {"trustedBounds", res.trusted_bounds},
              {"vertexLimit", limit}};
}

struct BenchRow {
  std::string file;
  std::string cls;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string method;
  std::string meg;
  double elapsed_ms = 0;
  std::string agreed;
};

BenchRow bench_one(const fs::path& path, std::size_t limit) {
  BenchRow row;
  row.file = path.filename().string();
  Graph g = read_edge_list(path);
  row.n = g.n();
  row.m = g.m();
  SolveOptions opts;
  opts.oracle_limit = limit;
  try {
    auto res = solve(g, opts);
    row.cls = to_string(res.class_used);
    row.method = to_string(res.method);
    row.elapsed_ms = std::chrono::duration<double, std::milli>(res.elapsed).count();
    if (res.meg) row.meg = std::to_string(*res.meg);
    if (!res.meg || g.n() > limit) {
      row.agreed = "n/a";
    } else if (res.method == Method::kOracle) {
      row.agreed = "yes";
    } else {
      OracleOptions o;
      o.vertex_limit = limit;
      o.trust_bounds = true;
      row.agreed = min_meg_bruteforce(g, o).meg == *res.meg ? "yes" : "no";
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kNotConnected && e.kind() != ErrorKind::kTooSmall) throw;
    row.cls = to_string(GraphClass::kGeneral);
    row.method = "skipped:" + kind_name(e.kind());
    row.agreed = "n/a";
  }
  return row;
}

Json cmd_bench(const std::string& dir, const std::string& csv_path, std::size_t limit) {
  if (!fs::is_directory(dir)) throw Error(ErrorKind::kInvalidArgument, "'" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<BenchRow> rows;
  for (const auto& f : files) rows.push_back(bench_one(f, limit));

  std::size_t agreed = 0, disagreed = 0, unchecked = 0;
  for (const auto& r : rows) {
    if (r.agreed == "yes") {
      ++agreed;
    } else if (r.agreed == "no") {
      ++disagreed;
    } else {
      ++unchecked;
    }
  }
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw Error(ErrorKind::kInvalidArgument, "cannot write '" + csv_path + "'");
    csv << "file,class,n,m,method,meg,elapsed_ms,agreed_with_oracle\n";
    for (const auto& r : rows) {
      csv << r.file << ',' << r.cls << ',' << r.n << ',' << r.m << ',' << r.method << ',' << r.meg << ','
          << std::fixed << std::setprecision(3) << r.elapsed_ms << ',' << r.agreed << '\n';
    }
  }
  return Json{{"instances", rows.size()},
              {"agreed", agreed},
              {"disagreed", disagreed},
              {"unchecked", unchecked},
              {"oracleLimit", limit}};
}

void write_report(std::ostream& out, const std::string& command, const std::optional<Graph>& g, Json result,
                  std::optional<double> elapsed_ms, int code) {
  Json report;
  report["schema"] = 1;
  report["command"] = command;
  if (g) report["input"] = input_summary(*g);
  report[code == kExitOk ? "result" : "error"] = std::move(result);
  if (elapsed_ms) report["elapsedMs"] = *elapsed_ms;
  report["exitCode"] = code;
  out << report.dump(2) << '\n';
}

}  // namespace

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kSelfLoop:
    case ErrorKind::kParse: return kExitInput;
    case ErrorKind::kNotConnected:
    case ErrorKind::kTooSmall: return kExitPrecondition;
    case ErrorKind::kMethodMismatch:
    case ErrorKind::kNotP4Sparse: return kExitMismatch;
    case ErrorKind::kLimitExceeded: return kExitLimit;
  }
  return kExitInput;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum monitoring edge-geodetic sets", "megsolve"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Include elapsed milliseconds in the report");

  std::string path;
  auto add_input = [&path](CLI::App* sub) { sub->add_option("graph", path, "Edge-list file")->required(); };

  auto* recognize = app.add_subcommand("recognize", "Run the four class recognizers");
  add_input(recognize);
  bool certificate = false;
  recognize->add_flag("--certificate", certificate, "Include recognition certificates");

  auto* meg = app.add_subcommand("meg", "Compute a minimum MEG set");
  add_input(meg);
  std::string method = "auto";
  meg->add_option("--method", method, "auto|cut|mandatory|structural|oracle|decomposition")
      ->check(CLI::IsMember({"auto", "cut", "mandatory", "structural", "oracle", "decomposition"}));
  std::optional<std::size_t> limit_flag;
  meg->add_option("--oracle-limit", limit_flag, "Oracle vertex cap");

  auto* verify = app.add_subcommand("verify", "Check whether a vertex set is an MEG set");
  add_input(verify);
  std::string set;
  verify->add_option("--set", set, "Comma-separated labels")->required();

  auto* mandatory = app.add_subcommand("mandatory", "List the mandatory vertices");
  add_input(mandatory);
  auto* cut = app.add_subcommand("cut", "List the cut vertices");
  add_input(cut);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive minimum MEG set");
  add_input(oracle);
  bool trust = true;
  oracle->add_option("--trust-bounds", trust, "Search only between the mandatory and non-cut bounds");
  oracle->add_option("--oracle-limit", limit_flag, "Oracle vertex cap");

  auto* gen = app.add_subcommand("gen", "Generate an edge list");
  GenSpec spec;
  std::string output;
  gen->add_option("--family", spec.family, "dh|p4sparse|spider|bipperm|chordal|random")
      ->check(CLI::IsMember({"dh", "p4sparse", "spider", "bipperm", "chordal", "random"}));
  gen->add_option("-n,--n", spec.n, "Vertex count");
  gen->add_option("--p", spec.p, "Bipartite permutation side X size");
  gen->add_option("--q", spec.q, "Bipartite permutation side Y size");
  gen->add_option("--m", spec.m, "Edge count for random graphs");
  gen->add_option("--seed", spec.seed, "Seed");
  gen->add_option("--legs", spec.legs, "Spider legs");
  gen->add_option("--head", spec.head, "Spider head size");
  gen->add_option("--kind", spec.spider_kind, "thin|thick");
  gen->add_option("--model", spec.model, "interval|block");
  gen->add_option("-o,--output", output, "Write to a file instead of stdout");

  auto* bench = app.add_subcommand("bench", "Solve every graph in a directory");
  std::string corpus;
  std::string csv_path;
  bench->add_option("corpus", corpus, "Directory of edge-list files")->required();
  bench->add_option("--csv", csv_path, "CSV output path");
  bench->add_option("--oracle-limit", limit_flag, "Oracle vertex cap");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::optional<Graph> graph;
  auto start = Clock::now();
  try {
    Json result;
    if (command == "gen") {
      Graph g = generate(spec);
      std::string header = "genspec: " + describe(spec);
      if (output.empty()) {
        write_edge_list(out, g, header);
      } else {
        std::ofstream file(output);
        if (!file) throw Error(ErrorKind::kInvalidArgument, "cannot write '" + output + "'");
        write_edge_list(file, g, header);
      }
      return kExitOk;
    }
    if (command == "bench") {
      result = cmd_bench(corpus, csv_path, oracle_limit(limit_flag));
    } else {
      graph = load(path);
      const Graph& g = *graph;
      if (command == "recognize") {
        result = cmd_recognize(g, certificate);
      } else if (command == "meg") {
        SolveOptions opts;
        opts.strategy = parse_method(method);
        opts.oracle_limit = oracle_limit(limit_flag);
        opts.oracle_trust_bounds = true;
        result = meg_json(g, solve(g, opts));
      } else if (command == "verify") {
        result = cmd_verify(g, set);
      } else if (command == "mandatory") {
        require_connected(g);
        result = Json{{"mandatory", sorted_labels(g, mandatory_vertices(g))}};
      } else if (command == "cut") {
        result = Json{{"cutVertices", sorted_labels(g, articulation_points(g))}};
      } else if (command == "oracle") {
        result = cmd_oracle(g, trust, oracle_limit(limit_flag));
      }
    }
    std::optional<double> elapsed;
    if (timing) elapsed = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    write_report(out, command, graph, std::move(result), elapsed, kExitOk);
    return kExitOk;
  } catch (const Error& e) {
    int code = exit_code(e.kind());
    err << "megsolve: " << e.what() << '\n';
    write_report(out, command, graph, Json{{"kind", kind_name(e.kind())}, {"message", e.what()}}, std::nullopt, code);
    return code;
  }
}

}  // namespace meg::cli
