#include "hyperladder/hyperladder.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <set>
#include <sys/wait.h>

using namespace hyperladder;

namespace {

struct Invocation {
  int code;
  std::string out;
};

Invocation run(const std::string& args) {
  const std::string cmd = std::string(HYPERLADDER_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, SpectrumOfTheWorkedExample) {
  const Invocation r = run("spectrum --l0 0 --l1 0 --l2 -5");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  ASSERT_EQ(j["levels"].size(), 2u);
  EXPECT_EQ(j["levels"][0]["energy"], "-35/4");
  EXPECT_EQ(j["levels"][1]["degeneracy"], 2);
  EXPECT_TRUE(spectrum_from_json(j) == bound_spectrum({0, 0, -5}));
}

TEST(Cli, BadInputExitsTwo) {
  EXPECT_EQ(run("spectrum --l2 -2").code, 2);
  EXPECT_EQ(run("spectrum --l2 abc").code, 2);
  EXPECT_EQ(run("spectrum --l0 0.5").code, 2);
  EXPECT_EQ(run("state --l0 1 --l2 -4 --word 'D+'").code, 2);
  EXPECT_EQ(run("nonsense").code, 2);
  EXPECT_EQ(run("lattice --algebra su3").code, 2);
}

TEST(Cli, StateReportsEigenvalue) {
  const Invocation r = run("state --l0 1 --l1 0 --l2 -4 --word 'C+ A+'");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["label"]["l2"], "-5");
  EXPECT_EQ(j["eigenstate"], true);
  EXPECT_EQ(j["energy"], "-3/4");
}

TEST(Cli, VerifyPassesAndIsDeterministic) {
  EXPECT_EQ(run("verify").code, 0);
  const Invocation a = run("verify --seed 7 --probes 20");
  const Invocation b = run("verify --seed 7 --probes 20");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["passed"], true);
}

TEST(Cli, VerifyDetectsInjectedFault) { EXPECT_EQ(run("verify --fault C+").code, 1); }

TEST(Cli, LatticeStaysInOnePlane) {
  const Invocation r = run("lattice --l0 0 --l1 0 --l2 -3 --algebra su21 --depth 3");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_GT(j["nodes"].size(), 1u);
  for (const auto& n : j["nodes"]) EXPECT_EQ(n["cprime"], "-3");
  const json j0 = json::parse(run("lattice --l2 -3 --depth 0").out);
  EXPECT_EQ(j0["nodes"].size(), 1u);
  const Invocation dot = run("lattice --l2 -3 --depth 2 --format dot");
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
}

TEST(Cli, SampleWritesTheGrid) {
  const Invocation r = run("sample --l0 0 --l1 0 --l2 -5 --level 1 --grid 64");
  ASSERT_EQ(r.code, 0);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  EXPECT_EQ(lines, 64u * 64u + 1u);
  EXPECT_EQ(r.out.rfind("theta,xi,value,value_2\n", 0), 0u);
  EXPECT_EQ(run("sample --level 5").code, 2);
}

TEST(Cli, CrosscheckAgreesAtDefaultResolution) {
  const Invocation r = run("crosscheck --l0 0 --l1 0 --l2 -5 --grid 2000");
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["grid"]["n"], 2000);
  EXPECT_EQ(j["grid"]["cutoff"], 25.0);
  EXPECT_EQ(j["passed"], true);
}

TEST(Cli, CoarseCrosscheckFails) { EXPECT_EQ(run("crosscheck --grid 64").code, 1); }
