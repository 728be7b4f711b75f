#include <doctest.h>

#include <sstream>

#include "meg/error.hpp"
#include "meg/generators.hpp"
#include "meg/io.hpp"
#include "meg/recognizers.hpp"

using namespace meg;

namespace {

std::string bytes(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

bool bipartite_connected(const Graph& g) {
  if (!is_connected(g)) return false;
  return recognize_bipartite_permutation(g).reason != "not bipartite";
}

}  // namespace

TEST_CASE("distance-hereditary generator") {
  auto k2 = gen_distance_hereditary({2, 5});
  CHECK(k2.n() == 2);
  CHECK(k2.m() == 1);

  auto a = gen_distance_hereditary({10, 42});
  CHECK(recognize_distance_hereditary(a));
  CHECK(bytes(a) == bytes(gen_distance_hereditary({10, 42})));
  CHECK(bytes(a) != bytes(gen_distance_hereditary({10, 43})));

  DistanceHereditaryParams twins_only{12, 1, 0.0, 0.0, 1.0};
  auto g = gen_distance_hereditary(twins_only);
  CHECK(is_connected(g));
}

TEST_CASE("P4-sparse generator") {
  auto p4 = make_spider(2, SpiderKind::kThin, Graph{});
  CHECK(p4.m() == 3);
  CHECK(recognize_p4_sparse(p4));
  CHECK(recognize_p4_sparse(gen_p4_sparse({12, 7})));
  auto thick = make_spider(5, SpiderKind::kThick, Graph{});
  CHECK(recognize_p4_sparse(thick));
  auto sp = detect_spider(thick);
  REQUIRE(sp);
  CHECK(sp->kind == SpiderKind::kThick);
  CHECK_THROWS_AS(make_spider(1, SpiderKind::kThin, Graph{}), Error);
}

TEST_CASE("bipartite permutation generator") {
  auto k2 = gen_bipartite_permutation({1, 1, 9});
  CHECK(k2.graph.n() == 2);
  CHECK(k2.graph.m() == 1);
  auto g = gen_bipartite_permutation({5, 5, 3});
  CHECK(verify_strong_ordering(g.graph, g.ordering));
  CHECK(bipartite_connected(g.graph));
  CHECK_THROWS_AS(gen_bipartite_permutation({0, 3, 1}), Error);
}

TEST_CASE("strongly chordal generator") {
  std::vector<std::pair<int, int>> chained{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  auto path = interval_graph(chained);
  CHECK(path.m() == 3);
  CHECK(articulation_points(path) == VertexSet{1, 2});

  std::vector<std::pair<int, int>> nested{{0, 10}, {1, 9}, {2, 8}, {3, 7}};
  CHECK(interval_graph(nested).m() == 6);

  auto g = gen_strongly_chordal({15, 9});
  auto seo = recognize_strongly_chordal(g);
  REQUIRE(seo);
  CHECK(verify_elimination_ordering(g, *seo));
}

TEST_CASE("random connected generator") {
  auto tree = gen_random_connected(4, 3, 1);
  CHECK(tree.m() == 3);
  CHECK(is_connected(tree));
  CHECK(gen_random_connected(5, 10, 1).m() == 10);
  CHECK(is_connected(gen_random_connected(9, 12, 1)));
  CHECK_THROWS_AS(gen_random_connected(5, 3, 1), Error);
  CHECK_THROWS_AS(gen_random_connected(5, 11, 1), Error);
}

TEST_CASE("certification across seeds") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    std::size_t n = 2 + seed % 58;
    auto dh = gen_distance_hereditary({n, seed});
    CHECK(dh.n() == n);
    CHECK(is_connected(dh));
    auto seq = recognize_distance_hereditary(dh);
    REQUIRE(seq);
    CHECK(verify_prune_sequence(dh, *seq));

    auto p4 = gen_p4_sparse({n, seed});
    CHECK(p4.n() == n);
    CHECK(is_connected(p4));
    CHECK(recognize_p4_sparse(p4));

    std::size_t p = 1 + seed % 12, q = 1 + seed % 17;
    auto bp = gen_bipartite_permutation({p, q, seed});
    CHECK(bp.graph.n() == p + q);
    CHECK(is_connected(bp.graph));
    CHECK(verify_strong_ordering(bp.graph, bp.ordering));
    CHECK(recognize_bipartite_permutation(bp.graph).verdict == Verdict::kYes);

    for (auto model : {ChordalModel::kInterval, ChordalModel::kBlock}) {
      auto sc = gen_strongly_chordal({n, seed, model});
      CHECK(sc.n() == n);
      CHECK(is_connected(sc));
      auto seo = recognize_strongly_chordal(sc);
      REQUIRE(seo);
      CHECK(verify_elimination_ordering(sc, *seo));
    }

    auto spider = gen_spider(2 + seed % 5, seed % 2 ? SpiderKind::kThin : SpiderKind::kThick, seed % 4, seed);
    auto part = detect_spider(spider);
    REQUIRE(part);
    CHECK(verify_spider(spider, *part));
  }
}

TEST_CASE("large generated instances are recognized") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    CHECK(recognize_distance_hereditary(gen_distance_hereditary({200, seed})));
    CHECK(recognize_strongly_chordal(gen_strongly_chordal({200, seed})));
    CHECK(recognize_p4_sparse(gen_p4_sparse({60, seed})));
    auto bp = gen_bipartite_permutation({90, 110, seed});
    CHECK(verify_strong_ordering(bp.graph, bp.ordering));
  }
}

TEST_CASE("determinism of every family") {
  for (const char* family : {"dh", "p4sparse", "spider", "bipperm", "chordal", "random"}) {
    GenSpec spec;
    spec.family = family;
    spec.n = 14;
    spec.seed = 99;
    CHECK(bytes(generate(spec)) == bytes(generate(spec)));
    CHECK(describe(spec).find(std::string("family=") + family) == 0);
  }
  GenSpec bad;
  bad.family = "nope";
  CHECK_THROWS_AS(generate(bad), Error);
}
