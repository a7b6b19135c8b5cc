#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "loopbraid/cli.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = loopbraid::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("loopbraid_cli_" + name);
  std::ofstream(path, std::ios::binary) << contents;
  return path;
}

}  // namespace

TEST_CASE("equal") {
  CHECK(run({"equal", "-n", "3", "s1 s2 s1", "s2 s1 s2"}).status == 0);
  const Result diff = run({"equal", "-n", "2", "s1 s1", ""});
  CHECK(diff.status == 1);
  CHECK(diff.out == "different\n");
  const Result bad = run({"equal", "-n", "3", "s1 s2 q1", "s1"});
  CHECK(bad.status == 2);
  CHECK(bad.err.find("offset 6") != std::string::npos);
  CHECK(run({"equal", "s1", "s1"}).status == 2);  // -n is required
}

TEST_CASE("eval") {
  const Result r = run({"eval", "-n", "2", "t1"});
  CHECK(r.status == 0);
  CHECK(r.out == "x_1 -> x1^-1\nx_2 -> x2\nperm: [1, 2]\nsigns: [-1, 1]\n");
  CHECK(run({"eval", "-n", "2", "r2"}).status == 2);
}

TEST_CASE("perm") {
  const Result r = run({"perm", "-n", "3", "r1 r2"});
  CHECK(r.status == 0);
  CHECK(r.out == "perm: [2, 3, 1]\nstrands: [3, 1, 2]\npure: false\nextended: false\n");
}

TEST_CASE("Gauss conversion round trip") {
  const Result g = run({"to-gauss", "-n", "3", "s1 r2 S1"});
  REQUIRE(g.status == 0);
  const auto file = scratch("diagram.json", g.out);
  const Result w = run({"from-gauss", file.string()});
  REQUIRE(w.status == 0);
  std::string word = w.out;
  word.pop_back();
  const Result again = run({"to-gauss", "-n", "3", word});
  CHECK(again.out == g.out);

  CHECK(run({"to-gauss", "-n", "2", "t1"}).status == 2);
  CHECK(run({"from-gauss", scratch("bad.json", "{").string()}).status == 2);
  CHECK(run({"from-gauss", "/nonexistent/loopbraid.json"}).status == 2);
}

TEST_CASE("search and replay") {
  const Result s = run({"search", "-n", "3", "r2 r1 s2", "s1 r2 r1"});
  REQUIRE(s.status == 0);
  CHECK(nlohmann::json::parse(s.out.substr(0, s.out.find('\n'))).contains("rule"));
  const auto path = scratch("path.jsonl", s.out);
  const Result r = run({"replay", "-n", "3", "r2 r1 s2", path.string()});
  CHECK(r.status == 0);
  CHECK(r.out == "s1 r2 r1\n");

  const Result none = run({"search", "-n", "2", "s1", "r1", "--depth", "3"});
  CHECK(none.status == 3);
  CHECK(none.out == "inconclusive\n");
}

TEST_CASE("simplify, random, render") {
  CHECK(run({"simplify", "-n", "3", "s1 S1 r2 r2"}).out == "\n");
  const Result a = run({"random", "-n", "4", "--length", "7", "--seed", "5", "--extended"});
  CHECK(a.status == 0);
  CHECK(a.out == run({"random", "-n", "4", "--length", "7", "--seed", "5", "--extended"}).out);
  const Result ascii = run({"render", "-n", "2", "s1 r1 t1"});
  CHECK(ascii.status == 0);
  CHECK(ascii.out.find('o') != std::string::npos);
  CHECK(ascii.out.find('*') != std::string::npos);
  const Result svg = run({"render", "-n", "2", "s1", "--svg"});
  CHECK(svg.out.find("<svg") != std::string::npos);
}

TEST_CASE("verify-presentation") {
  const Result table = run({"verify-presentation", "-n", "3", "--name", "r"});
  CHECK(table.status == 0);
  CHECK(table.out.find("PASS") != std::string::npos);
  const Result json = run({"verify-presentation", "-n", "3", "--name", "plbe", "--json"});
  CHECK(json.status == 0);
  CHECK(nlohmann::json::parse(json.out)["pass"] == true);
  CHECK(run({"verify-presentation", "-n", "3", "--name", "xyz"}).status == 2);
  CHECK(run({"verify-presentation", "-n", "1"}).status == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"--help"}).status == 0);
}
