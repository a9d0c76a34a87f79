// Copyright 2026 The Matroid Census Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = mcensus::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("mcensus_cli_" + name);
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream(p, std::ios::binary) << content;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("census command") {
  const Result r = run({"census", "--n", "3", "--r", "2", "--method", "naive"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("matroid-census v1 n=3 r=2 order=colex count=8\n", 0) == 0);
  CHECK(count_lines(r.out) == 9);

  const auto path = temp_file("census32.txt");
  const Result w = run({"census", "--n", "3", "--r", "2", "--out", path.string()});
  CHECK(w.code == 0);
  CHECK(read_file(path) == r.out);
  const auto j = nlohmann::json::parse(w.out);
  CHECK(j["count"] == 8);
  CHECK(j["matroids"] == 7);
  std::filesystem::remove(path);

  CHECK(run({"census", "--n", "3", "--r", "2", "--out", "/nonexistent/dir/x"}).code == 2);
  CHECK(run({"census", "--n", "7", "--r", "3", "--method", "naive"}).code == 2);
}

TEST_CASE("census output is identical across worker counts") {
  const std::string serial = run({"census", "--n", "6", "--r", "3", "--workers", "1"}).out;
  CHECK(run({"census", "--n", "6", "--r", "3", "--workers", "4"}).out == serial);
  ::setenv(mcensus::cli::kWorkersEnv, "3", 1);
  CHECK(run({"census", "--n", "6", "--r", "3"}).out == serial);
  ::setenv(mcensus::cli::kWorkersEnv, "lots", 1);
  CHECK(run({"census", "--n", "6", "--r", "3"}).code == 2);
  ::unsetenv(mcensus::cli::kWorkersEnv);
}

TEST_CASE("bounds command") {
  const Result csv = run({"bounds", "--max-n", "4", "--format", "csv"});
  CHECK(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "name,n,r,t,lhs,rhs,holds,slack");
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 7);
    CHECK(line.find(",true,") != std::string::npos);
  }
  CHECK(rows == 70);
  CHECK(csv.out.find("lemma2,3,2,1,64,64,true,equal\n") != std::string::npos);

  const Result js = run({"bounds", "--max-n", "3"});
  CHECK(js.code == 0);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["all_hold"] == true);
  CHECK(j["rows"].size() == 20 + 8 + 3 + 3 + 12);
  CHECK(j["rows"][0].contains("slack"));

  CHECK(run({"bounds", "--max-n", "8"}).code == 2);
  CHECK(run({"bounds", "--max-n", "3", "--format", "xml"}).code == 2);
}

TEST_CASE("verify command") {
  const auto good = temp_file("good42.txt");
  REQUIRE(run({"census", "--n", "4", "--r", "2", "--out", good.string()}).code == 0);
  Result r = run({"verify", "--in", good.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "all 37 families valid\n");

  const auto empty_only = temp_file("empty.txt");
  write_file(empty_only, "matroid-census v1 n=4 r=2 order=colex count=1\n00\n");
  r = run({"verify", "--in", empty_only.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "all 1 families valid\n");

  const auto tampered = temp_file("tampered.txt");
  std::string text = read_file(good);
  text.replace(text.find("\n0b\n"), 4, "\n0c\n");
  write_file(tampered, text);
  r = run({"verify", "--in", tampered.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("family 0c violates the exchange axiom: B={1,2} B'={0,3} e=1") != std::string::npos);
  CHECK(r.out.find("1 of 37 families invalid") != std::string::npos);

  const auto malformed = temp_file("malformed.txt");
  write_file(malformed, "matroid-census v1 n=4 r=2 order=colex count=2\n00\nxyz\n");
  r = run({"verify", "--in", malformed.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 3") != std::string::npos);

  CHECK(run({"verify", "--in", "/nonexistent/file"}).code == 2);
  for (const auto& p : {good, empty_only, tampered, malformed}) std::filesystem::remove(p);
}

TEST_CASE("shearer, rank2, counts and report commands") {
  Result r = run({"shearer", "--n", "3", "--r", "2", "--t", "1"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["lhs"].get<double>() == doctest::Approx(3.0));
  CHECK(j["rhs"].get<double>() == doctest::Approx(3.0));
  CHECK(j["holds"] == true);
  CHECK(run({"shearer", "--n", "3", "--r", "2", "--t", "3"}).code == 2);

  r = run({"rank2", "--n", "5"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["families"] == 172);
  CHECK(j["round_trips"] == 172);
  CHECK(j["partition_count"] == 172);
  CHECK(j["bell_n_plus_1"] == 203);
  CHECK(j["ok"] == true);

  r = run({"counts", "--max-n", "4"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["totals"][4]["m"] == 68);
  CHECK(j["entries"].size() == 15);

  r = run({"report", "--max-n", "5"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["normative"] == false);
  CHECK(j["rows"].size() == 4);
  CHECK(j["rows"][3]["m_n"] == 406);
}

TEST_CASE("usage errors exit with 2") {
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"frobnicate"},
      {"census"},
      {"census", "--n", "3"},
      {"census", "--n", "x", "--r", "1"},
      {"census", "--n", "9", "--r", "1"},
      {"census", "--n", "3", "--r", "-1"},
      {"census", "--n", "3", "--r", "1", "--method", "magic"},
      {"census", "--n", "3", "--r", "1", "--workers", "0"},
      {"counts", "--max-n", "8"},
      {"verify"},
      {"shearer", "--n", "3", "--r", "2"},
      {"bounds", "--max-n", "2", "--bogus"},
  };
  for (const auto& args : bad) {
    CAPTURE(args.size());
    const Result r = run(args);
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
  }
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify exit codes over mutated census files") {
  const std::string base = run({"census", "--n", "4", "--r", "2"}).out;
  const auto path = temp_file("mutant.txt");
  std::mt19937 rng(2026);
  const std::string alphabet = "0123456789abcdefxX \n=";
  for (int trial = 0; trial < 300; ++trial) {
    std::string m = base;
    switch (rng() % 4) {
      case 0:
        m[rng() % m.size()] = alphabet[rng() % alphabet.size()];
        break;
      case 1:
        m.resize(rng() % m.size());
        break;
      case 2:
        m.erase(rng() % m.size(), 1 + rng() % 5);
        break;
      default:
        m.insert(rng() % m.size(), 1, alphabet[rng() % alphabet.size()]);
        break;
    }
    write_file(path, m);
    const Result r = run({"verify", "--in", path.string()});
    REQUIRE((r.code == 0 || r.code == 1));
    if (r.code == 1) REQUIRE_FALSE((r.out + r.err).empty());
    if (m == base) REQUIRE(r.code == 0);
  }
  std::filesystem::remove(path);
}
