#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::vector<nlohmann::json> lines;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o{azposet::cli::run(args, out, err), {}, err.str()};
  std::istringstream in(out.str());
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.front() == '{') o.lines.push_back(nlohmann::json::parse(line));
  }
  return o;
}

}  // namespace

TEST_CASE("check reports a failing property with exit code one") {
  const auto o = invoke({"check", "--poset", "fig1a", "--property", "regular"});
  CHECK(o.code == 1);
  REQUIRE(o.lines.size() == 1);
  CHECK(o.lines[0]["verdict"] == "fail");
  CHECK(o.lines[0]["violation"]["rank"] == 2);
}

TEST_CASE("az verify prints exact values") {
  const auto dev = invoke({"az", "verify", "--poset", "fig1a", "--family", "a,c", "--identity", "thm1"});
  CHECK(dev.code == 1);
  CHECK(dev.lines[0]["result"] == "5/4");
  CHECK(dev.lines[0]["verdict"] == "deviates");
  const auto ok = invoke({"az", "verify", "--poset", "boolean:3", "--family", "{1},{2,3}"});
  CHECK(ok.code == 0);
  CHECK(ok.lines[0]["result"] == "1/1");
}

TEST_CASE("random families report seed and generator") {
  const auto o = invoke({"az", "verify", "--poset", "boolean:4", "--family", "random:5:9"});
  CHECK(o.code == 0);
  CHECK(o.lines[0]["inputs"]["seed"] == 9);
  CHECK(o.lines[0]["inputs"]["rng"] == "mt19937_64");
}

TEST_CASE("usage errors exit with two") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"check", "--poset", "nosuch:1"}).code == 2);
  CHECK(invoke({"az", "verify", "--poset", "boolean:2", "--family", "{9}"}).code == 2);
  CHECK(invoke({"check", "--poset", "boolean:2", "--mode", "sideways"}).code == 2);
}

TEST_CASE("library errors exit with one") {
  const auto o = invoke({"az", "verify", "--poset", "star:2,2", "--family", "#0"});
  CHECK(o.code == 1);
  CHECK(o.lines[0]["error"] == "NotUPoset");
}

TEST_CASE("twopart and sperner subcommands") {
  const auto m = invoke({"twopart", "max", "--p", "boolean:2", "--q", "boolean:2", "--all"});
  CHECK(m.code == 0);
  CHECK(m.lines[0]["size"] == 6);
  CHECK(m.lines[0]["families"].size() == 2);
  const auto s = invoke({"sperner", "--poset", "boolean:3", "--k", "2"});
  CHECK(s.code == 0);
  CHECK(s.lines[0]["maximum_size"] == 6);
}

TEST_CASE("suite runs a single criterion") {
  const auto o = invoke({"suite", "--level", "desk", "--criterion", "2"});
  CHECK(o.code == 0);
  REQUIRE(o.lines.size() == 2);
  CHECK(o.lines[0]["criterion"] == 2);
  CHECK(o.lines[1]["passed"] == 1);
}
