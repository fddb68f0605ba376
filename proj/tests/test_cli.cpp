#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "esd/cli.hpp"
#include "esd/families.hpp"
#include "esd/game.hpp"
#include "esd/io.hpp"
#include "json.hpp"

using namespace esd;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "esd");
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("esd-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("verify") {
  TempDir dir;
  auto g = dir.write("p4.json", graph_to_json(path_graph(4)).dump());
  auto phi = dir.write("phi.json", R"({"l":4,"labels":{"1":1,"2":2,"3":3,"4":4}})");
  auto r = run({"verify", g, phi});
  CHECK(r.code == cli::kOk);
  CHECK(r.parsed() == json::parse(R"({"esd":true})"));

  auto c4 = dir.write("c4.json", graph_to_json(cycle_graph(4)).dump());
  auto bad = run({"verify", c4, phi});
  CHECK(bad.code == cli::kNegative);
  CHECK(bad.parsed()["conflict"]["weight"] == 5);

  auto partial = dir.write("partial.json", R"({"l":4,"labels":{"1":1}})");
  CHECK(run({"verify", g, partial}).code == cli::kUsage);
  CHECK(run({"verify", g, partial, "--partial"}).code == cli::kOk);

  auto table = run({"--format", "table", "verify", g, phi});
  CHECK(table.out.find("esd yes") != std::string::npos);
  auto dot = run({"--format", "dot", "verify", g, phi});
  CHECK(dot.out.find("weight=3") != std::string::npos);
}

TEST_CASE("graph from standard input") {
  TempDir dir;
  auto phi = dir.write("phi.json", R"({"l":2,"labels":{"1":1,"2":2}})");
  CHECK(run({"verify", "-", phi}, R"({"n":2,"edges":[[1,2]]})").code == cli::kOk);
  CHECK(run({"verify", "-", phi}, "graph { v1 -- v2; }").code == cli::kOk);
}

TEST_CASE("malformed input and usage errors exit 2") {
  TempDir dir;
  auto bad = dir.write("bad.json", "{\"n\": 3,\n \"edges\": [[1,2],, ]}");
  auto r = run({"search", bad});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("bad.json:2:") != std::string::npos);
  CHECK(run({"search", (fs::temp_directory_path() / "no-such-esd-file.json").string()}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"search", "x", "--bogus"}).code == cli::kUsage);
  CHECK(run({"construct", "wheel:5"}).code == cli::kUsage);
  CHECK(run({"--format", "yaml", "gen", "path:3"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
}

TEST_CASE("construct") {
  auto r = run({"construct", "fan:6"});
  CHECK(r.code == cli::kOk);
  auto j = r.parsed();
  CHECK(j["canonical"] == true);
  CHECK(graph_from_json(j["graph"]) == fan_graph(6));

  auto none = run({"construct", "fan:8"});
  CHECK(none.code == cli::kNegative);
  CHECK(none.parsed()["status"] == "noneExists");
  auto unsupported = run({"construct", "grid:3x3"});
  CHECK(unsupported.code == cli::kNegative);
  CHECK(unsupported.parsed()["status"] == "unsupported");
  CHECK(run({"--format", "dot", "construct", "grid:4x3"}).out.find("v12") != std::string::npos);
}

TEST_CASE("search") {
  TempDir dir;
  auto fan8 = dir.write("fan8.json", graph_to_json(fan_graph(8)).dump());
  auto r = run({"search", fan8, "--labels", "8"});
  CHECK(r.code == cli::kNegative);
  CHECK(r.parsed()["status"] == "exhaustedNoneExists");

  auto k23 = dir.write("k23.json", graph_to_json(complete_bipartite_graph(2, 3)).dump());
  auto iso = run({"search", k23, "--mode", "enum-iso"});
  CHECK(iso.code == cli::kOk);
  CHECK(iso.parsed()["labelings"].size() == 1);
  auto count = run({"search", k23, "--mode", "count", "--ordering", "degree", "--jobs", "2"});
  CHECK(count.parsed()["count"].get<int>() > 1);

  auto limited = run({"--node-limit", "5", "search", dir.write("fan10.json", graph_to_json(fan_graph(10)).dump())});
  CHECK(limited.code == cli::kAborted);
  CHECK(limited.parsed()["status"] == "aborted");
  CHECK(run({"search", k23, "--mode", "all"}).code == cli::kUsage);
}

TEST_CASE("gen output feeds search and verify") {
  TempDir dir;
  for (const char* family : {"tree:20,4", "cycle:9", "grid:4x3", "tight:7", "sunlet:5,2"}) {
    CAPTURE(family);
    auto gen = run({"gen", family});
    REQUIRE(gen.code == cli::kOk);
    auto path = dir.write("g.json", gen.out);
    auto found = run({"search", path});
    CHECK(found.code == cli::kOk);
    auto labeling = found.parsed()["labelings"][0];
    auto phi = dir.write("phi.json", labeling.dump());
    CHECK(run({"verify", path, phi}).code == cli::kOk);
  }
}

TEST_CASE("convert round trip") {
  TempDir dir;
  Graph g = grid_graph(3, 3);
  auto json_path = dir.write("g.json", graph_to_json(g).dump());
  auto dot = run({"--format", "dot", "convert", json_path});
  REQUIRE(dot.code == cli::kOk);
  auto dot_path = dir.write("g.dot", dot.out);
  auto back = run({"convert", dot_path});
  CHECK(graph_from_json(back.parsed()) == g);
}

TEST_CASE("game subcommands") {
  TempDir dir;
  auto p10 = dir.write("p10.json", graph_to_json(path_graph(10)).dump());
  auto bound = run({"game", "bound", p10});
  CHECK(bound.code == cli::kOk);
  CHECK(bound.parsed()["bound"] == 50);

  auto play = run({"--seed", "9", "game", "play", p10, "--labels", "50", "--alice", "candidate", "--bob", "random"});
  CHECK(play.code == cli::kOk);
  auto transcript = play.parsed();
  CHECK(transcript["winner"] == "Alice");
  std::vector<Move> moves;
  for (const auto& m : transcript["moves"]) moves.push_back(move_from_json(m));
  CHECK(replay(path_graph(10), 50, moves).status() == GameStatus::AliceWon);
  auto again = run({"--seed", "9", "game", "play", p10, "--labels", "50", "--alice", "candidate", "--bob", "random"});
  CHECK(again.out == play.out);

  auto k23 = dir.write("k23.json", graph_to_json(complete_bipartite_graph(2, 3)).dump());
  auto solve = run({"game", "solve", k23});
  CHECK(solve.code == cli::kOk);
  CHECK(solve.parsed()["winner"] == "Bob");
  auto fan8 = dir.write("fan8.json", graph_to_json(fan_graph(8)).dump());
  CHECK(run({"game", "solve", fan8}).code == cli::kAborted);
  CHECK(run({"game", "play", k23, "--alice", "sneaky"}).code == cli::kUsage);
  auto bob_first = run({"game", "play", k23, "--bob-starts", "--alice", "optimal", "--bob", "optimal"});
  CHECK(bob_first.code == cli::kOk);
}
