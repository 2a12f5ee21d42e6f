#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "distpoly/cli.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "distpoly");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = distpoly::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("distpoly_test_" + name);
  std::ofstream(path) << contents;
  return path;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("charpoly from an edge list") {
  const auto path = temp_file("p3.txt", "# path\n0 1\n1 2\n");
  const Run r = run({"charpoly", "--input", path.string()});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("charpoly") == json({"-4", "-6", "0", "1"}));
  CHECK(j.at("d") == json({"2", "6"}));
}

TEST_CASE("charpoly from graph6, several graphs") {
  // "Bw" is K3; "BW" is the path 0-2-1.
  const auto path = temp_file("g6.txt", "Bw\nBW\n");
  const Run r = run({"charpoly", "--input", path.string(), "--format", "graph6"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  // K3 has D = J - I, det(xI - D) = (x - 2)(x + 1)^2 = x^3 - 3x - 2.
  CHECK(json::parse(ls[0]).at("charpoly") == json({"-2", "-3", "0", "1"}));
  CHECK(json::parse(ls[1]).at("charpoly") == json({"-4", "-6", "0", "1"}));
}

TEST_CASE("analyze builtins") {
  const Run h = run({"analyze", "--builtin", "heawood"});
  CHECK(h.code == 0);  // findings on a non-tree are not violations
  const json j = json::parse(h.out);
  CHECK(j.at("checks").at("unimodal_d") == false);
  CHECK(j.at("witnesses").at("unimodal") == 4);
  CHECK(j.at("is_tree") == false);

  const Run s = run({"analyze", "--builtin", "star:6"});
  CHECK(s.code == 0);
  CHECK(json::parse(s.out).at("peak").at("first") == 3);
}

TEST_CASE("enumerate") {
  const Run c = run({"enumerate", "--order", "7", "--count-only"});
  CHECK(c.code == 0);
  CHECK(c.out == "11\n");
  const Run p = run({"enumerate", "--order", "5"});
  CHECK(p.code == 0);
  const auto ls = lines(p.out);
  REQUIRE(ls.size() == 3);
  for (const auto& l : ls) CHECK(l.rfind("-1 ", 0) == 0);
  CHECK(lines(run({"enumerate", "--order", "6", "--emit", "graph6"}).out).size() == 6);
  CHECK(lines(run({"enumerate", "--order", "6", "--emit", "edgelist"}).out).size() == 6);
}

TEST_CASE("verify") {
  const auto out_path = std::filesystem::temp_directory_path() / "distpoly_test_verify.json";
  const Run r = run({"verify", "--max-order", "12", "--output", out_path.string()});
  CHECK(r.code == 0);
  CHECK_FALSE(r.err.empty());
  std::ifstream in(out_path);
  const json j = json::parse(in);
  CHECK(j.at("passed") == true);
  CHECK(j.at("total_trees") == 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106 + 235 + 551);
  CHECK_FALSE(j.contains("duration_seconds"));

  const Run stdout_run = run({"verify", "--max-order", "12", "--jobs", "3"});
  CHECK(json::parse(stdout_run.out) == j);

  const Run per_tree = run({"verify", "--min-order", "6", "--max-order", "7", "--per-tree"});
  CHECK(per_tree.code == 0);
  const auto ls = lines(per_tree.out);
  REQUIRE(ls.size() == 6 + 11 + 1);
  CHECK(json::parse(ls.front()).at("n") == 6);
  CHECK(json::parse(ls.back()).at("total_trees") == 17);

  const Run timed = run({"verify", "--max-order", "5", "--timing"});
  CHECK(json::parse(timed.out).contains("duration_seconds"));
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"enumerate"}).code == 2);
  CHECK(run({"enumerate", "--order", "0"}).code == 2);
  CHECK(run({"verify", "--min-order", "9", "--max-order", "5"}).code == 2);
  CHECK(run({"charpoly"}).code == 2);
  CHECK(run({"charpoly", "--builtin", "petersen"}).code == 2);
  CHECK(run({"analyze", "--builtin", "path:2"}).code == 2);
  const Run small = run({"charpoly", "--builtin", "path:2"});  // defined, but no d-sequence
  CHECK(small.code == 0);
  CHECK(json::parse(small.out).at("d").is_null());
  CHECK(run({"charpoly", "--input", "/nonexistent/file"}).code == 2);
  CHECK(run({"verify", "--max-order", "5", "--output", "/nonexistent/dir/out.json"}).code == 2);
  const auto bad = temp_file("bad.txt", "0 1\n2 3\n");
  const Run r = run({"analyze", "--input", bad.string()});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"--help"}).code == 0);
}
