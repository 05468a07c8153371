// Copyright 2026 The tame-certify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tame/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tame::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "tame-certify");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("tame_cli_" + std::to_string(::testing::UnitTest::GetInstance()
                                              ->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

TEST(ParsePrimeList, Forms) {
  EXPECT_EQ(parse_prime_list(""), (std::vector<unsigned long long>{}));
  EXPECT_EQ(parse_prime_list("7, 13,19"),
            (std::vector<unsigned long long>{7, 13, 19}));
  EXPECT_THROW(parse_prime_list("7,x"), std::invalid_argument);
  EXPECT_THROW(parse_prime_list("-7"), std::invalid_argument);
}

TEST(Dims, Examples) {
  auto r = run_cli({"dims", "--p", "3", "--S", "7", "--T", ""});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("h = (1,1,1,0)"), std::string::npos) << r.out;
  r = run_cli({"dims", "--p", "3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("h = (1,0,0,0)"), std::string::npos);
  EXPECT_EQ(run_cli({"dims", "--p", "3", "--S", "7", "--T", "7"}).code, kUsage);
  EXPECT_EQ(run_cli({"dims", "--p", "9"}).code, kUsage);
  EXPECT_EQ(run_cli({"dims", "--p", "3", "--S", "7,9"}).code, kUsage);
}

TEST(Dims, Json) {
  const auto r =
      run_cli({"dims", "--p", "3", "--S", "7,13", "--T", "2", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["h"], nlohmann::json({1, 1, 2, 0}));
  EXPECT_EQ(doc["euler_char"], 2);
  EXPECT_TRUE(doc["euler_ok"]);
  EXPECT_TRUE(doc["excision_ok"]);
  EXPECT_EQ(doc["delta_v"]["7"], 1);
}

TEST(Vst, Examples) {
  auto r = run_cli({"vst", "--p", "3", "--T", "2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("dim V = 1"), std::string::npos);
  EXPECT_NE(r.out.find("  2\n"), std::string::npos);
  r = run_cli({"vst", "--p", "3", "--T", "2", "--S", "7"});
  EXPECT_NE(r.out.find("dim V = 0"), std::string::npos);
  r = run_cli({"vst", "--p", "3", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["dim"], 0);
}

TEST(Usage, Errors) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"dims"}).code, kUsage);
  EXPECT_EQ(run_cli({"certify", "--bound", "10"}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({"dims", "--p", "3", "--format", "xml"}).code, kUsage);
  EXPECT_EQ(run_cli({"certify", "--p", "3", "--bound", "0"}).code, kUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
}

TEST(Certify, WritesVerifiableFile) {
  TempDir dir;
  const auto path = dir.file("cert.json");
  const auto r = run_cli({"certify", "--p", "3", "--T", "2", "--avoid", "3",
                          "--bound", "1000000", "-o", path});
  ASSERT_EQ(r.code, kOk) << r.out << r.err;
  EXPECT_NE(r.out.find("verdict: pass"), std::string::npos);
  const auto v = run_cli({"verify", path});
  EXPECT_EQ(v.code, kOk) << v.out;
  EXPECT_EQ(v.out, "OK\n");

  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  auto doc = nlohmann::json::parse(text.str());
  EXPECT_EQ(doc["q_list"], nlohmann::json({277, 9013, 103993}));
  doc["cup_matrix"]["entries"][0][0] = 2;
  std::ofstream(path) << doc.dump(2) << "\n";
  EXPECT_EQ(run_cli({"verify", path}).code, kFailed);
  std::ofstream(path) << "{ not json";
  EXPECT_EQ(run_cli({"verify", path}).code, kFailed);
  EXPECT_EQ(run_cli({"verify", dir.file("missing.json")}).code, kUsage);
}

TEST(Certify, ExitCodes) {
  EXPECT_EQ(run_cli({"certify", "--p", "3", "--bound", "10"}).code, kFailed);
  EXPECT_EQ(run_cli({"certify", "--p", "3", "--T", "2", "--bound", "50000"}).code,
            kFailed);
  EXPECT_EQ(run_cli({"certify", "--p", "3", "--S", "7", "--T", "7"}).code,
            kUsage);
  EXPECT_EQ(run_cli({"certify", "--p", "3", "-o", "/nonexistent/dir/c.json"}).code,
            kUsage);
}

TEST(Certify, DefaultAvoidContainsP) {
  auto doc = nlohmann::json::parse(
      run_cli({"certify", "--p", "3", "--format", "json"}).out);
  EXPECT_EQ(doc["input"]["avoid"], nlohmann::json({3}));
  doc = nlohmann::json::parse(
      run_cli({"certify", "--p", "3", "--avoid", "", "--format", "json"}).out);
  EXPECT_EQ(doc["input"]["avoid"], nlohmann::json::array());
  doc = nlohmann::json::parse(
      run_cli({"certify", "--p", "3", "--S", "3", "--format", "json"}).out);
  EXPECT_EQ(doc["input"]["avoid"], nlohmann::json::array());
}

TEST(Certify, OutputDirectoryVariable) {
  TempDir dir;
  const auto base = std::filesystem::path(dir.file("x")).parent_path();
  ::setenv("TAME_CERTIFY_OUTDIR", base.c_str(), 1);
  const auto r = run_cli({"certify", "--p", "5", "-o", "rel.json"});
  ::unsetenv("TAME_CERTIFY_OUTDIR");
  ASSERT_EQ(r.code, kOk);
  EXPECT_TRUE(std::filesystem::exists(base / "rel.json"));
  EXPECT_EQ(run_cli({"verify", (base / "rel.json").string()}).code, kOk);
}

TEST(Certify, JsonOutputMatchesFile) {
  TempDir dir;
  const auto path = dir.file("c.json");
  const auto r = run_cli({"certify", "--p", "5", "--format", "json", "-o", path});
  std::ifstream in(path, std::ios::binary);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(r.out, text.str());
}

}  // namespace
}  // namespace tame::cli
