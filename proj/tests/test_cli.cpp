// Copyright 2026 The Butson Bent Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(BUTSON_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("butson_cli_test_" + name)).string();
}

const std::string kExample = std::string(BUTSON_DATA) + "/example21.bh";

TEST(Cli, ConstructFourier) {
  const CliRun r = run("construct fourier --n 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "BH 3 3\n0 0 0\n0 1 2\n0 2 1\n");
}

TEST(Cli, VerifyExample) {
  EXPECT_EQ(run("verify hadamard " + kExample).status, 0);
  const CliRun j = run("verify hadamard --json " + kExample);
  EXPECT_TRUE(nlohmann::json::parse(j.out)["result"].get<bool>());
}

TEST(Cli, VerifyFalseIsExitOne) {
  const std::string path = tmp("zeros.bh");
  std::ofstream(path) << "BH 2 2\n0 0\n0 0\n";
  EXPECT_EQ(run("verify hadamard " + path).status, 1);
}

TEST(Cli, UsageAndParseErrorsAreExitTwo) {
  const std::string path = tmp("bad.bh");
  std::ofstream(path) << "BH 2 2\n0 0\n0 x\n";
  EXPECT_EQ(run("verify hadamard " + path).status, 2);
  const std::string cmd = std::string(BUTSON_CLI) + " verify hadamard " + path + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::array<char, 512> buf{};
  const std::size_t got = fread(buf.data(), 1, buf.size(), pipe);
  pclose(pipe);
  EXPECT_NE(std::string(buf.data(), got).find("line 3"), std::string::npos);
  EXPECT_EQ(run("verify hadamard /nonexistent.bh").status, 2);
  EXPECT_EQ(run("obstructions --n 5").status, 2);
  EXPECT_EQ(run("no-such-command").status, 2);
}

TEST(Cli, Obstructions) {
  const CliRun r = run("obstructions --n 5 --k 13 --json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["violated"].get<bool>());
  EXPECT_EQ(j["dual_entry_ambient_phase"], 52);
  EXPECT_NE(run("obstructions --n 5 --k 13").out.find("self_conjugate_square"), std::string::npos);
}

TEST(Cli, RoundTripConstructors) {
  for (const std::string sub : {"fourier --n 5", "fourier --group 2,4", "sylvester --m 3", "bush --p 5 --a 2"}) {
    const std::string path = tmp("rt.bh");
    ASSERT_EQ(run("construct " + sub + " --out " + path).status, 0) << sub;
    EXPECT_EQ(run("verify hadamard " + path).status, 0) << sub;
    const std::string json_path = tmp("rt.json");
    ASSERT_EQ(run("construct " + sub + " --json --out " + json_path).status, 0);
    EXPECT_EQ(run("verify hadamard " + json_path).status, 0) << sub;
  }
  const std::string a = tmp("a.bh"), b = tmp("b.bh"), ab = tmp("ab.bh");
  run("construct fourier --n 2 --out " + a);
  run("construct fourier --n 3 --out " + b);
  ASSERT_EQ(run("construct kron " + a + " " + b + " --out " + ab).status, 0);
  EXPECT_EQ(run("verify hadamard " + ab).status, 0);
}

TEST(Cli, BentCheckAndSearch) {
  const std::string h = tmp("f33.bh"), x = tmp("k32.vec");
  run("construct fourier --group 3,3 --out " + h);
  run("construct ksw --k 3 --m 2 --out " + x);
  const CliRun c = run("bent-check --json " + h + " " + x);
  EXPECT_EQ(c.status, 0);
  EXPECT_EQ(nlohmann::json::parse(c.out)["kind"], "conjugate_self_dual");

  const CliRun s1 = run("bent-search " + h + " --mode conjugate-self-dual --workers 1");
  const CliRun s4 = run("bent-search " + h + " --mode conjugate-self-dual --workers 4");
  EXPECT_EQ(s1.status, 0);
  EXPECT_EQ(s1.out, s4.out);
  EXPECT_NE(s1.out.find(" 0 0 0 0 1 2 0 2 1\n"), std::string::npos);

  const std::string zero = tmp("zero.vec");
  std::ofstream(zero) << "VEC 9 3\n0 0 0 0 0 0 0 0 0\n";
  EXPECT_EQ(run("bent-check " + h + " " + zero).status, 1);
}

TEST(Cli, CoveringRadius) {
  const CliRun r = run("covering-radius --rm 3,2 --exact --json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["radius_or_bound"], 5);
  EXPECT_TRUE(j["exact"].get<bool>());
  EXPECT_TRUE(j["premises"]["self_complementary"].get<bool>());
  EXPECT_TRUE(j["premises"]["strength_2"].get<bool>());

  const std::string h = tmp("f33c.bh"), x = tmp("k32c.vec");
  run("construct fourier --group 3,3 --out " + h);
  run("construct ksw --k 3 --m 2 --out " + x);
  const auto k = nlohmann::json::parse(run("covering-radius --code-from " + h + " --bent-vector " + x + " --json").out);
  EXPECT_EQ(k["radius_or_bound"], 5);
  EXPECT_EQ(k["upper_bound"]["floor"], 5);
  EXPECT_EQ(k["lower_bound"]["value"], 4);

  const CliRun s1 = run("covering-radius --code-from " + kExample + " --sample 100 --seed 3 --json");
  const CliRun s2 = run("covering-radius --code-from " + kExample + " --sample 100 --seed 3 --json");
  EXPECT_EQ(s1.out, s2.out);
  EXPECT_FALSE(nlohmann::json::parse(s1.out)["exact"].get<bool>());
  EXPECT_EQ(run("covering-radius --code-from " + h + " --budget 10").status, 2);
}

TEST(Cli, OrderAndBush) {
  const std::string b = tmp("b31.bh");
  ASSERT_EQ(run("bush --p 3 --a 1 --out " + b).status, 0);
  const auto o = nlohmann::json::parse(run("order --json " + b).out);
  EXPECT_EQ(o["order"], 3);
  EXPECT_TRUE(o["divides_lcm"].get<bool>());
  EXPECT_EQ(run("bush --p 5 --verify-algebra").status, 0);
  EXPECT_EQ(run("verify bush " + b).status, 0);
  EXPECT_EQ(run("verify bush " + kExample + " --block-size 2").status, 1);
}

TEST(Cli, Unbiased) {
  const std::string a = tmp("u1.bh"), b = tmp("u2.bh");
  run("construct fourier --n 3 --out " + a);
  EXPECT_EQ(run("verify unbiased " + a + " " + a).status, 1);
}

}  // namespace
