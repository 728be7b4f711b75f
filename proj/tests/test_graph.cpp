#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "meg/error.hpp"
#include "meg/generators.hpp"
#include "meg/graph.hpp"
#include "meg/io.hpp"
#include "meg/random.hpp"
#include "support.hpp"

using namespace meg;
using test::id;
using test::ids;

namespace {

std::size_t component_count_without(const Graph& g, Vertex v) {
  return connected_components(induced_subgraph(g, VertexSet::range(g.n()).minus(VertexSet{v}))).size();
}

void check_invariants(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    auto nb = g.neighbors(v);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
    for (Vertex w : nb) {
      CHECK(w != v);
      CHECK(g.adjacent(w, v));
    }
    degree_sum += nb.size();
  }
  CHECK(degree_sum == 2 * g.m());
}

}  // namespace

TEST_CASE("build_graph from labels") {
  auto p3 = test::parse("a-b b-c");
  CHECK(p3.n() == 3);
  CHECK(p3.m() == 2);
  CHECK(p3.label(0) == "a");
  CHECK(p3.adjacent(id(p3, "a"), id(p3, "b")));
  CHECK_FALSE(p3.adjacent(id(p3, "a"), id(p3, "c")));

  auto k2 = test::parse("a-b b-a");
  CHECK(k2.n() == 2);
  CHECK(k2.m() == 1);

  CHECK_THROWS_AS(test::parse("a-a"), Error);
  try {
    test::parse("a-a");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSelfLoop);
    CHECK(std::string(e.what()).find("'a'") != std::string::npos);
  }

  auto isolated = test::parse("z a-b");
  CHECK(isolated.n() == 3);
  CHECK(isolated.label(0) == "z");
  CHECK(isolated.degree(0) == 0);
}

TEST_CASE("bfs distances") {
  auto p3 = test::parse("a-b b-c");
  CHECK(bfs_distances(p3, id(p3, "a")) == std::vector<std::uint32_t>{0, 1, 2});

  auto c4 = test::parse("a-b b-c c-d d-a");
  CHECK(bfs_distances(c4, id(c4, "a")) == std::vector<std::uint32_t>{0, 1, 2, 1});
  CHECK(bfs_distances(c4, id(c4, "a"), test::edge(c4, "a", "b"))[id(c4, "b")] == 3);

  auto thick = make_spider(3, SpiderKind::kThick, Graph{});
  CHECK(bfs_distances(thick, 0)[1] == 2);

  auto two = test::parse("a-b c-d");
  CHECK(bfs_distances(two, 0)[id(two, "c")] == kUnreachable);
}

TEST_CASE("all pairs distances") {
  auto k2 = test::parse("a-b");
  auto d = all_pairs_distances(k2);
  CHECK(d.at(0, 0) == 0);
  CHECK(d.at(0, 1) == 1);
  CHECK(d.at(1, 0) == 1);

  auto p3 = all_pairs_distances(path_graph(3));
  std::uint32_t max_entry = 0;
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = 0; v < 3; ++v) max_entry = std::max(max_entry, p3.at(u, v));
  CHECK(max_entry == 2);

  auto c5 = cycle_graph(5);
  auto dc5 = all_pairs_distances(c5);
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex v = 0; v < 5; ++v) {
      if (u == v) continue;
      CHECK(dc5.at(u, v) >= 1);
      CHECK(dc5.at(u, v) <= 2);
    }
  }
}

TEST_CASE("distance matrix invariants and row agreement") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto g = gen_random_connected(15, 25, seed);
    auto d = all_pairs_distances(g);
    for (Vertex s = 0; s < g.n(); ++s) {
      auto row = bfs_distances(g, s);
      CHECK(std::equal(row.begin(), row.end(), d.row(s).begin()));
      CHECK(d.at(s, s) == 0);
      for (Vertex t = 0; t < g.n(); ++t) {
        CHECK(d.at(s, t) == d.at(t, s));
        for (Vertex w = 0; w < g.n(); ++w) CHECK(d.at(s, t) <= d.at(s, w) + d.at(w, t));
      }
    }
  }
}

TEST_CASE("articulation points") {
  auto p3 = test::parse("a-b b-c");
  CHECK(articulation_points(p3) == ids(p3, {"b"}));
  CHECK(articulation_points(cycle_graph(4)).empty());

  auto thin = make_spider(3, SpiderKind::kThin, Graph{});
  CHECK(articulation_points(thin) == VertexSet{3, 4, 5});

  // Two triangles sharing a vertex, plus a disjoint edge.
  auto g = test::parse("a-b b-c c-a c-d d-e e-c x-y");
  CHECK(articulation_points(g) == ids(g, {"c"}));
}

TEST_CASE("articulation points match brute-force deletion") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = rng.between(2, 50);
    std::size_t m = rng.between(n - 1, std::min<std::size_t>(n * (n - 1) / 2, 2 * n));
    auto g = gen_random_connected(n, m, rng.next());
    std::vector<Vertex> expected;
    for (Vertex v = 0; v < n; ++v)
      if (n > 1 && component_count_without(g, v) > 1) expected.push_back(v);
    CHECK(articulation_points(g) == VertexSet(expected));
  }
  // Disconnected input: the count must increase relative to the whole graph.
  auto g = test::parse("a-b b-c x-y y-z z-x");
  CHECK(articulation_points(g) == ids(g, {"b"}));
}

TEST_CASE("components, induced subgraphs, complement") {
  auto k3 = complete_graph(3);
  auto parts = co_components(k3);
  CHECK(parts.size() == 3);
  for (const auto& p : parts) CHECK(p.size() == 1);

  auto c4 = test::parse("a-b b-c c-d d-a");
  auto co = complement(c4);
  CHECK(co.m() == 2);
  CHECK(co.adjacent(id(c4, "a"), id(c4, "c")));
  CHECK(co.adjacent(id(c4, "b"), id(c4, "d")));
  CHECK(connected_components(co).size() == 2);

  auto p4 = test::parse("v1-v2 v2-v3 v3-v4");
  auto sub = induced_subgraph(p4, ids(p4, {"v1", "v2", "v3"}));
  CHECK(sub.n() == 3);
  CHECK(sub.m() == 2);
  CHECK(sub.label(0) == "v1");
  CHECK(sub.adjacent(0, 1));
  CHECK_FALSE(sub.adjacent(0, 2));

  CHECK_THROWS_AS(induced_subgraph(p4, VertexSet{}), Error);

  auto two = test::parse("a-b c-d");
  CHECK_FALSE(is_connected(two));
  CHECK(is_connected(p4));
}

TEST_CASE("complement involution and co-component join structure") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto g = seed % 2 ? gen_random_connected(9, 14, seed) : gen_p4_sparse({9, seed});
    check_invariants(g);
    CHECK(complement(complement(g)) == g);
    auto parts = co_components(g);
    CHECK((parts.size() >= 2) == !is_connected(complement(g)));
    VertexSet all;
    for (const auto& p : parts) all = all.unite(p);
    CHECK(all == VertexSet::range(g.n()));
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        for (Vertex u : parts[i])
          for (Vertex v : parts[j]) CHECK(g.adjacent(u, v));
  }
}

TEST_CASE("require_connected") {
  CHECK_THROWS_AS(require_connected(test::parse("a")), Error);
  try {
    require_connected(test::parse("a-b c-d"));
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotConnected);
  }
  CHECK_NOTHROW(require_connected(test::parse("a-b")));
}

TEST_CASE("edge-list parsing") {
  auto g = parse_edge_list("# comment\nvertices: z\na b\n\n  b   c  \n# trailing\n");
  CHECK(g.n() == 4);
  CHECK(g.m() == 2);
  CHECK(g.label(0) == "z");

  try {
    parse_edge_list("a b\na\n");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.kind() == ErrorKind::kParse);
  }
  CHECK_THROWS_AS(parse_edge_list("a b c\n"), ParseError);
  try {
    parse_edge_list("a b\nq q\n");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("edge-list round trip") {
  auto g = gen_random_connected(12, 20, 5);
  std::ostringstream out;
  write_edge_list(out, g, "genspec: test");
  CHECK(out.str().rfind("# genspec: test\nvertices:", 0) == 0);
  auto back = parse_edge_list(out.str());
  CHECK(back == g);
  CHECK(std::ranges::equal(back.edges(), g.edges()));
}
