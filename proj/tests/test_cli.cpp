#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "meg/cli.hpp"
#include "meg/io.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome megsolve(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = meg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() {
    dir_ = fs::temp_directory_path() / ("megsolve_cli_" + std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) const {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  fs::path path(const std::string& name) const { return dir_ / name; }

 private:
  fs::path dir_;
};

const char* kP5 = "a b\nb c\nc d\nd e\n";
const char* kC5 = "a b\nb c\nc d\nd e\ne a\n";
const char* kC4 = "a b\nb c\nc d\nd a\n";
const char* kK4 = "a b\na c\na d\nb c\nb d\nc d\n";
// Legs s1..s3 each matched to one body vertex; the body is a clique.
const char* kThinSpider = "s1 c1\ns2 c2\ns3 c3\nc1 c2\nc1 c3\nc2 c3\n";

}  // namespace

TEST_CASE("recognize reports verdicts per class") {
  Scratch tmp;
  auto p5 = megsolve({"recognize", tmp.file("p5.txt", kP5)});
  REQUIRE(p5.code == 0);
  auto r = p5.json()["result"];
  CHECK(r["connected"] == true);
  CHECK(r["distanceHereditary"] == "yes");
  CHECK(r["stronglyChordal"] == "yes");
  CHECK(r["bipartitePermutation"] == "yes");
  // Two induced P4s on five vertices.
  CHECK(r["p4Sparse"] == "no");

  auto c5 = megsolve({"recognize", tmp.file("c5.txt", kC5), "--certificate"}).json()["result"];
  for (const char* key : {"distanceHereditary", "stronglyChordal", "bipartitePermutation", "p4Sparse"})
    CHECK(c5[key] == "no");
  CHECK(c5["certificates"]["p4Sparse"]["obstruction"].size() == 5);

  auto bad = megsolve({"recognize", tmp.file("bad.txt", "a b\na\n")});
  CHECK(bad.code == meg::cli::kExitInput);
  CHECK(bad.json()["error"]["kind"] == "parse");
  CHECK(bad.err.find("line 2") != std::string::npos);

  auto split = megsolve({"recognize", tmp.file("split.txt", "a b\nc d\n")}).json()["result"];
  CHECK(split["connected"] == false);
}

TEST_CASE("meg subcommand") {
  Scratch tmp;
  auto spider = megsolve({"meg", tmp.file("spider.txt", kThinSpider)});
  REQUIRE(spider.code == 0);
  auto r = spider.json()["result"];
  CHECK(r["meg"] == 3);
  CHECK((r["method"] == "mandatory_based" || r["method"] == "cut_based"));
  CHECK(r["witness"] == Json{"s1", "s2", "s3"});
  CHECK(r["minimum"] == true);

  auto c5 = tmp.file("c5.txt", kC5);
  auto oracle = megsolve({"meg", c5, "--method", "oracle"});
  REQUIRE(oracle.code == 0);
  auto direct = megsolve({"oracle", c5, "--trust-bounds", "false"}).json()["result"];
  CHECK(oracle.json()["result"]["meg"] == direct["meg"]);

  CHECK(megsolve({"meg", c5, "--method", "cut"}).code == meg::cli::kExitMismatch);
  CHECK(megsolve({"meg", c5, "--method", "bogus"}).code == meg::cli::kExitInput);

  auto split = megsolve({"meg", tmp.file("split.txt", "a b\nc d\n")});
  CHECK(split.code == meg::cli::kExitPrecondition);
  CHECK(split.err.find("connected") != std::string::npos);

  CHECK(megsolve({"meg", tmp.file("one.txt", "vertices: a\n")}).code == meg::cli::kExitPrecondition);
  CHECK(megsolve({"meg", tmp.path("missing.txt").string()}).code == meg::cli::kExitInput);
}

TEST_CASE("verify, mandatory and cut") {
  Scratch tmp;
  auto c4 = tmp.file("c4.txt", kC4);
  auto v = megsolve({"verify", c4, "--set", "a,b,c"});
  REQUIRE(v.code == 0);
  CHECK(v.json()["result"] == Json::parse(R"({"isMeg": false, "uncovered": ["c", "d"]})"));
  CHECK(megsolve({"verify", c4, "--set", "a,b,c,d"}).json()["result"]["isMeg"] == true);
  CHECK(megsolve({"verify", c4, "--set", "a,zz"}).code == meg::cli::kExitInput);

  auto k4 = megsolve({"mandatory", tmp.file("k4.txt", kK4)});
  CHECK(k4.json()["result"]["mandatory"] == Json{"a", "b", "c", "d"});

  auto cut = megsolve({"cut", tmp.file("p5.txt", kP5)});
  CHECK(cut.json()["result"]["cutVertices"] == Json{"b", "c", "d"});
}

TEST_CASE("oracle limit from the environment") {
  Scratch tmp;
  std::string p13;
  for (int i = 0; i < 12; ++i) p13 += "v" + std::to_string(i) + " v" + std::to_string(i + 1) + "\n";
  auto path = tmp.file("p13.txt", p13);
  ::unsetenv("MEGSOLVE_ORACLE_LIMIT");
  CHECK(megsolve({"oracle", path}).code == meg::cli::kExitLimit);
  ::setenv("MEGSOLVE_ORACLE_LIMIT", "13", 1);
  auto ok = megsolve({"oracle", path});
  CHECK(ok.code == 0);
  CHECK(ok.json()["result"]["vertexLimit"] == 13);
  // An explicit flag wins over the environment.
  CHECK(megsolve({"oracle", path, "--oracle-limit", "12"}).code == meg::cli::kExitLimit);
  ::setenv("MEGSOLVE_ORACLE_LIMIT", "lots", 1);
  CHECK(megsolve({"oracle", path}).code == meg::cli::kExitInput);
  ::unsetenv("MEGSOLVE_ORACLE_LIMIT");
}

TEST_CASE("reports are byte-identical across runs") {
  Scratch tmp;
  auto spider = tmp.file("spider.txt", kThinSpider);
  for (auto args : std::vector<std::vector<std::string>>{{"meg", spider},
                                                         {"recognize", spider, "--certificate"},
                                                         {"oracle", spider},
                                                         {"gen", "--family", "dh", "--n", "20", "--seed", "4"}}) {
    auto first = megsolve(args);
    CHECK(first.out == megsolve(args).out);
  }
  CHECK(megsolve({"meg", spider}).out.find("elapsedMs") == std::string::npos);
  CHECK(megsolve({"--timing", "meg", spider}).json().contains("elapsedMs"));
}

TEST_CASE("gen output round-trips") {
  auto g = megsolve({"gen", "--family", "bipperm", "--p", "4", "--q", "6", "--seed", "2"});
  REQUIRE(g.code == 0);
  CHECK(g.out.rfind("# genspec: family=bipperm", 0) == 0);
  auto parsed = meg::parse_edge_list(g.out);
  CHECK(parsed.n() == 10);
  CHECK(megsolve({"gen", "--family", "nope"}).code == meg::cli::kExitInput);
}

TEST_CASE("help and usage") {
  auto help = megsolve({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("recognize") != std::string::npos);
  CHECK(megsolve({}).code == meg::cli::kExitInput);
}

TEST_CASE("bench over a 50-instance corpus") {
  Scratch tmp;
  fs::create_directories(tmp.path("corpus"));
  const char* families[] = {"dh", "p4sparse", "spider", "bipperm", "chordal"};
  for (int i = 0; i < 50; ++i) {
    auto out = tmp.path("corpus") / ("g" + std::to_string(100 + i) + ".txt");
    auto code = megsolve({"gen", "--family", families[i % 5], "--n", std::to_string(4 + i % 7), "--p", "3",
                          "--q", std::to_string(2 + i % 5), "--seed", std::to_string(i + 1), "-o", out.string()})
                    .code;
    REQUIRE(code == 0);
  }
  auto csv = tmp.path("bench.csv");
  auto b = megsolve({"bench", tmp.path("corpus").string(), "--csv", csv.string()});
  REQUIRE(b.code == 0);
  auto r = b.json()["result"];
  CHECK(r["instances"] == 50);
  CHECK(r["disagreed"] == 0);

  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "file,class,n,m,method,meg,elapsed_ms,agreed_with_oracle");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 50);

  CHECK(megsolve({"bench", tmp.path("nowhere").string()}).code == meg::cli::kExitInput);
}
