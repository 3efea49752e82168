#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

using nlohmann::json;
using doctest::Approx;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = janowski::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("janowski_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("bounds for the square root") {
  const Run r = run({"bounds", "--A", "1", "--B", "0", "--alpha", "0.5", "--r", "1"});
  REQUIRE(r.code == 0);
  const json j = r.parsed();
  CHECK(j["command"] == "bounds");
  CHECK(j["version"] == janowski::cli::kVersion);
  CHECK(j["result"]["re"][0].get<double>() == Approx(0.0));
  CHECK(j["result"]["re"][1].get<double>() == Approx(1.41421356));
  CHECK_FALSE(j.contains("oracle"));
}

TEST_CASE("verify appends an oracle block without changing the result") {
  const std::vector<std::string> base{"bounds", "--A", "0.5+0.3i", "--B=-0.4", "--alpha", "0.7", "--r", "0.8"};
  const Run plain = run(base);
  std::vector<std::string> with = base;
  with.push_back("--verify");
  const Run verified = run(with);
  REQUIRE(plain.code == 0);
  REQUIRE(verified.code == 0);
  const json a = plain.parsed(), b = verified.parsed();
  CHECK(a["result"] == b["result"]);
  REQUIRE(b.contains("oracle"));
  CHECK(b["oracle"]["max_endpoint_deviation"].get<double>() < 1e-5);
}

TEST_CASE("alpha-star and geometry") {
  const json a = run({"radius", "alpha-star"}).parsed();
  CHECK(a["result"]["alpha_star"].get<double>() == Approx(0.3834486).epsilon(1e-6));
  const json g = run({"geometry", "image-disk", "--A", "1", "--B", "0", "--r", "0.5"}).parsed();
  CHECK(g["result"]["center"]["re"].get<double>() == Approx(1.0));
  CHECK(g["result"]["center"]["im"].get<double>() == Approx(0.0));
  CHECK(g["result"]["radius"].get<double>() == Approx(0.5));
  CHECK(g["result"]["kind"] == "disk");
  const json h = run({"geometry", "image-disk", "--A", "1", "--B=-1", "--r", "1"}).parsed();
  CHECK(h["result"]["kind"] == "half-plane");
  CHECK_FALSE(h["result"].contains("radius"));
}

TEST_CASE("every command family runs") {
  const std::vector<std::vector<std::string>> commands{
      {"geometry", "origin", "--A", "0.5", "--B", "0"},
      {"geometry", "canonicalize", "--A", "1", "--B", "i", "--verify"},
      {"geometry", "contains", "--outer-A", "1", "--outer-B=-1", "--inner-A", "1", "--inner-B", "0", "--verify"},
      {"bounds", "critical", "--A", "0.5i", "--B", "0", "--alpha", "0.5", "--r", "0.5"},
      {"bounds", "sector", "--m", "0.5", "--alpha", "0.5"},
      {"bounds", "tilt", "--b", "1", "--m", "0.5"},
      {"bounds", "nesting", "--A", "1", "--B=-1", "--a1", "0.25", "--a2", "0.5", "--verify"},
      {"bounds", "quotient-params", "--alpha", "0.5", "--m", "0.5", "--beta", "0.5"},
      {"bounds", "derivative-params", "--alpha", "1", "--m", "0.5"},
      {"bounds", "power-params", "--alpha", "1", "--beta", "1", "--gamma", "1", "--eta", "1"},
      {"bounds", "reciprocal-order", "--alpha", "0.5", "--beta", "0.25"},
      {"bounds", "double-tilt", "--a", "0.3", "--b", "0.4", "--c", "0.2", "--d", "0.5"},
      {"bounds", "eta", "--lambda0", "1", "--lambda1", "0.5", "--n", "64"},
      {"radius", "subordination", "--A", "1", "--B", "0", "--C", "1", "--D=-1", "--verify"},
      {"radius", "inclusion", "--A", "1", "--B=-1", "--alpha", "0.5", "--C", "1", "--D=-1", "--beta", "0.25"},
      {"radius", "uralegaddi", "--A", "1", "--B=-1", "--beta2", "2"},
      {"radius", "reciprocal", "--A", "1", "--B=-1", "--beta2", "0.5"},
      {"radius", "starlike"},
      {"special", "hyp3f2", "--upper", "1,1,1", "--lower", "2,2", "--x", "0.5"},
      {"special", "K", "--A", "1", "--b", "1", "--alpha", "0.5", "--z", "0.3", "--verify"},
      {"special", "macgregor", "--beta", "0.25"},
      {"special", "dominant-h", "--mu", "0.5", "--eta", "0.5", "--z", "0.5"},
      {"special", "best-q", "--z", "0.5"},
      {"special", "silverman", "--A", "1", "--b", "1", "--alpha", "1", "--beta", "0.5"},
      {"verify", "--theorem", "silverman", "--seed-from", "0", "--seed-to", "2"},
  };
  for (const auto& c : commands) {
    const Run r = run(c);
    CAPTURE(c[0] + " " + c[1]);
    CAPTURE(r.err);
    REQUIRE(r.code == 0);
    const json j = r.parsed();
    CHECK(json::parse(j.dump()) == j);
    CHECK(j.contains("parameters"));
    CHECK(j.contains("result"));
    CHECK(j.contains("seed"));
  }
}

TEST_CASE("selected results") {
  CHECK(run({"radius", "subordination", "--A", "1", "--B", "0", "--C", "1", "--D=-1"})
            .parsed()["result"]["radius"]
            .get<double>() == Approx(1.0 / 3.0));
  CHECK(run({"special", "best-q", "--z", "0.5"}).parsed()["result"]["value"]["re"].get<double>() ==
        Approx(1.27074704126839914));
  CHECK(run({"special", "dominant-h", "--mu", "0.5", "--eta", "0.5", "--z", "0.5"})
            .parsed()["result"]["value"]["re"]
            .get<double>() == Approx(3.5));
  CHECK(run({"geometry", "canonicalize", "--A", "1", "--B", "i"}).parsed()["result"]["A"]["im"].get<double>() ==
        Approx(1.0));
  const json k = run({"special", "K", "--A", "1", "--b", "1", "--alpha", "0.5", "--z", "0.3", "--verify"}).parsed();
  CHECK(k["oracle"]["difference"].get<double>() < 1e-12);
}

TEST_CASE("exit codes") {
  const Run bad = run({"bounds", "--A", "1", "--B", "0", "--alpha", "1.5"});
  CHECK(bad.code == 2);
  const json e = json::parse(bad.err);
  CHECK(e["error"] == "InvalidParams");

  CHECK(run({"bounds", "--A", "nonsense"}).code == 2);
  CHECK(run({"nosuchcommand"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "--theorem", "unknown"}).code == 2);

  const Run slow = run({"special", "hyp3f2", "--x", "0.99999", "--tol", "1e-15"});
  CHECK(slow.code == 3);
  CHECK(json::parse(slow.err)["error"] == "NoConvergence");

  const Run tilt = run({"bounds", "double-tilt", "--a", "1", "--b", "1", "--c", "1", "--d", "1"});
  CHECK(tilt.code == 2);
  CHECK(json::parse(tilt.err)["excess"].get<double>() == Approx(1.5707963267948966));

  CHECK(run({"--version"}).code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("seed handling is deterministic") {
  const Run a = run({"--seed", "5", "verify", "--theorem", "dominant-h", "--seed-to", "7"});
  const Run b = run({"verify", "--theorem", "dominant-h", "--seed-from", "5", "--seed-to", "7", "--seed", "5"});
  REQUIRE(a.code == 0);
  CHECK(a.parsed()["result"] == b.parsed()["result"]);
  CHECK(a.parsed()["seed"] == 5);
  CHECK(a.parsed()["parameters"]["seed_from"] == 5);
}

TEST_CASE("files: json, jsonl, csv and svg") {
  const std::string out = temp_path("out.json");
  REQUIRE(run({"radius", "alpha-star", "--out", out}).code == 0);
  CHECK(json::parse(slurp(out))["command"] == "radius alpha-star");

  const std::string jsonl = temp_path("trials.jsonl");
  REQUIRE(run({"verify", "--theorem", "silverman", "--seed-from", "0", "--seed-to", "3", "--jsonl", jsonl}).code == 0);
  std::istringstream lines(slurp(jsonl));
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(json::parse(line)["theorem"] == "silverman");
    ++count;
  }
  CHECK(count == 4);

  const std::string csv = temp_path("curve.csv");
  const std::string svg = temp_path("domain.svg");
  REQUIRE(run({"plot", "--A", "0.5+0.5i", "--B=-0.5", "--alpha", "0.8", "--svg", svg, "--csv", csv, "--samples", "256"})
              .code == 0);
  const std::string table = slurp(csv);
  CHECK(table.rfind("t,u,v,M,N\n", 0) == 0);
  CHECK(std::count(table.begin(), table.end(), '\n') == 257);
  const std::string picture = slurp(svg);
  CHECK(picture.find("<svg") != std::string::npos);
  CHECK(picture.find("<polygon") != std::string::npos);
  CHECK(picture.find("</svg>") != std::string::npos);

  CHECK(run({"plot", "--A", "1", "--B", "0"}).code == 2);
  for (const auto& p : {out, jsonl, csv, svg}) std::remove(p.c_str());
}
