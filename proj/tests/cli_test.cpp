// Copyright 2026 The tlhom Authors.
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

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "tlhom/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tlhom::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("dim") {
  const auto r = run({"dim", "--n", "6", "--d", "0"});
  CHECK(r.code == tlhom::cli::kOk);
  CHECK(r.out == "5\n");
  CHECK(run({"dim", "--n", "9", "--d", "1"}).out == "42\n");
}

TEST_CASE("parity and usage errors exit with 2") {
  CHECK(run({"dim", "--n", "5", "--d", "0"}).code == tlhom::cli::kUsageError);
  CHECK(run({"dim", "--n", "5"}).code == tlhom::cli::kUsageError);
  CHECK(run({"frobnicate"}).code == tlhom::cli::kUsageError);
  CHECK(run({}).code == tlhom::cli::kUsageError);
  CHECK(run({"scan", "--n", "4", "--d", "0", "--braid", "s1 x"}).code == tlhom::cli::kUsageError);
  CHECK(run({"scan", "--n", "4", "--d", "0", "--braid", "s9"}).code == tlhom::cli::kUsageError);
  CHECK(run({"order-report", "--n", "6", "--d", "0", "--braid", "s1"}).code ==
        tlhom::cli::kUsageError);
  CHECK(run({"matrix", "--n", "4", "--d", "0", "--braid", "s1", "--at", "0.5", "--A-frac", "1/8"})
            .code == tlhom::cli::kUsageError);
  const auto bad = run({"homology", "--n", "6", "--braid", "s1", "--surface", "one-boundary"});
  CHECK(bad.code == tlhom::cli::kUsageError);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("basis lists canonical diagrams") {
  const auto r = run({"basis", "--n", "4", "--d", "0"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"(1 2)(3 4)", "(1 4)(2 3)"});
}

TEST_CASE("scan of the Torelli braid") {
  const auto r = run({"scan", "--braid", "@brown", "--n", "6", "--d", "0", "--grid", "512"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 513);
  CHECK(rows[0] == "x,sr");
  CHECK(rows[1].rfind("0,", 0) == 0);
  const std::string last = rows.back();
  REQUIRE(last.rfind("1,", 0) == 0);
  CHECK(std::abs(std::stod(last.substr(2)) - 1) < 1e-6);
}

TEST_CASE("order report") {
  const auto r = run({"order-report", "--braid", "s1 s2 s3^-1", "--n", "6", "--d", "0",
                      "--levels", "7..8", "--rank-N", "2"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 2);
  const auto j = nlohmann::json::parse(rows[1]);
  CHECK(j["k"] == 8);
  CHECK(j["N"] == 2);
  CHECK(j["d"] == 0);
  CHECK(j["verdict"] == "infinite_order");
  CHECK(j["A"].get<std::string>().find("/(4*(k+N))") != std::string::npos);
  CHECK(std::abs(j["sr"].get<double>() - 1.665) < 1e-3);
}

TEST_CASE("stretch") {
  const auto r = run({"stretch", "--braid", "@lt3", "--n", "3", "--surface", "one-boundary"});
  CHECK(r.code == 0);
  CHECK(r.out == "2.61803398875\n");
  CHECK(run({"stretch", "--braid", "@brown", "--n", "6", "--surface", "closed"}).out == "1\n");
}

TEST_CASE("matrix output") {
  const auto r = run({"matrix", "--braid", "s1", "--n", "2", "--d", "0"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["entries"] == nlohmann::json::parse(R"([{"-3": "-1"}])"));
  CHECK(j["normalization"] == "raw");
  CHECK(run({"matrix", "--braid", "s1", "--n", "2", "--d", "0", "--format", "text"}).code ==
        tlhom::cli::kUsageError);
  const auto c = run({"matrix", "--braid", "s1 s2", "--n", "4", "--d", "0", "--at", "0.5"});
  CHECK(c.code == 0);
  CHECK_FALSE(c.out.empty());
}

TEST_CASE("homology matrix of the Torelli braid is the identity") {
  const auto r = run({"homology", "--braid", "@brown", "--n", "6", "--surface", "closed",
                      "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["matrix"] == nlohmann::json::parse("[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]"));
  CHECK(j["symplectic"] == true);
}

TEST_CASE("verify") {
  const auto e = run({"verify", "equivariance", "--n", "6", "--d", "0"});
  CHECK(e.code == 0);
  CHECK(lines(e.out).size() == 2);  // two-boundary and closed
  const auto t = run({"verify", "theorems", "--max-n", "9"});
  CHECK(t.code == 0);
  for (const auto& line : lines(t.out)) CHECK(nlohmann::json::parse(line)["ok"] == true);
}

TEST_CASE("catalog") {
  const auto r = run({"catalog"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 8);
  const auto b = run({"catalog", "bigelow", "--format", "json"});
  CHECK(b.code == 0);
  CHECK(nlohmann::json::parse(b.out)["exponent_sum"] == 0);
  CHECK(run({"catalog", "nosuch"}).code == tlhom::cli::kUsageError);
}

TEST_CASE("--out writes the file and nothing else") {
  const auto path = std::filesystem::temp_directory_path() / "tlhom_cli_test_out.csv";
  std::filesystem::remove(path);
  const auto r = run({"scan", "--braid", "s1 s2^-1", "--n", "3", "--d", "1", "--grid", "5",
                      "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(lines(body.str()).size() == 6);
  std::filesystem::remove(path);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"scan", "--braid", "@lt5", "--n", "5", "--d", "1",
                                         "--grid", "64"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> rep = {"order-report", "--braid", "@lt4", "--n", "4", "--d", "0",
                                        "--levels", "1..6"};
  CHECK(run(rep).out == run(rep).out);
}

TEST_CASE("format_number") {
  CHECK(tlhom::cli::format_number(1.0) == "1");
  CHECK(tlhom::cli::format_number(2.618033988749895) == "2.61803398875");
  CHECK(tlhom::cli::format_number(std::nan("")) == "nan");
}

TEST_CASE("the installed binary reports exit codes") {
  const std::string bin = TLHOM_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int s = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  CHECK(status("dim --n 6 --d 0") == 0);
  CHECK(status("dim --n 6 --d 1") == 2);
  CHECK(status("--bogus") == 2);
  FILE* pipe = popen((bin + " dim --n 8 --d 0").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[64] = {0};
  const std::size_t got = fread(buf, 1, sizeof(buf) - 1, pipe);
  pclose(pipe);
  CHECK(std::string(buf, got) == "14\n");
}
