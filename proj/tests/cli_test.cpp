#include <gtest/gtest.h>

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "mcpnet/cli.hpp"

namespace mcpnet {
namespace {

const std::string kGolden = MCPNET_GOLDEN_DIR;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv = {"mcpnet"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(kGolden + "/" + name);
  EXPECT_TRUE(in) << name;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(CliTest, PhiTrajectoryGolden) {
  const CliRun r = run({"trajectory", "--phi", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("phi3_trajectory.txt"));
}

TEST(CliTest, PhiFourTableGolden) {
  std::string table;
  for (std::uint32_t k = 0; k < 16; ++k) {
    std::string bits;
    for (int i = 3; i >= 0; --i) bits += ((k >> i) & 1u) ? '1' : '0';
    const CliRun r = run({"trajectory", "--phi", "4", "--start", bits.c_str(), "--steps", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string from, to;
    lines >> from >> to;
    table += from + " " + to + "\n";
  }
  EXPECT_EQ(table, golden("phi4_table.txt"));
}

TEST(CliTest, RankTableGolden) {
  const CliRun r = run({"rank", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("rank4_table.txt"));
  EXPECT_EQ(run({"rank", "0101", "1110"}).out, "15\n4\n");
}

TEST(CliTest, UnrankInvertsRank) {
  EXPECT_EQ(run({"unrank", "--n", "4", "4", "0"}).out, "1110\n0000\n");
  EXPECT_EQ(run({"unrank", "--n", "4", "16"}).code, 2);
}

TEST(CliTest, DoublingGolden) {
  const CliRun r = run({"doubling", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("doubling_3.txt"));
}

TEST(CliTest, WeightsGolden) {
  const CliRun r = run({"weights", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("weights_2.txt"));
}

TEST(CliTest, NetworkFileTrajectories) {
  const std::string four = kGolden + "/four_neuron.net";
  const std::string three = kGolden + "/second_class.net";
  EXPECT_EQ(run({"trajectory", "--net", four.c_str()}).out, golden("four_neuron_trajectory.txt"));
  EXPECT_EQ(run({"trajectory", "--net", three.c_str()}).out, golden("second_class_trajectory.txt"));
  const CliRun p = run({"period", "--net", four.c_str()});
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("period 16\n"), std::string::npos);
  EXPECT_NE(p.out.find("full_period yes\n"), std::string::npos);
}

TEST(CliTest, VerifyExitCodes) {
  const CliRun ok = run({"verify", "--n", "12"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "OK\n");
  const std::string four = kGolden + "/four_neuron.net";
  const CliRun bad = run({"verify", "--net", four.c_str()});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out.substr(0, 4), "FAIL");
}

TEST(CliTest, EnumerateOutputs) {
  EXPECT_EQ(run({"enumerate", "--n", "2"}).out, golden("enumerate_2.txt"));
  const CliRun c = run({"enumerate", "--n", "3", "--classify"});
  EXPECT_EQ(c.code, 0);
  std::istringstream lines(c.out);
  std::string line;
  int classes = 0;
  while (std::getline(lines, line)) {
    ++classes;
    EXPECT_EQ(line.substr(line.rfind(' ') + 1), "24") << line;
  }
  EXPECT_EQ(classes, 2);
  EXPECT_EQ(run({"enumerate", "--n", "5"}).code, 2);
}

TEST(CliTest, PrngFormats) {
  EXPECT_EQ(run({"prng", "--n", "3", "--count", "4"}).out, "0.500\n0.750\n0.250\n0.875\n");
  EXPECT_EQ(run({"prng", "--n", "3", "--count", "2", "--format", "u32"}).out, "2147483648\n3221225472\n");
  EXPECT_EQ(run({"prng", "--n", "4", "--count", "2", "--format", "bits"}).out,
            std::string("\x80\x00\x00\x00\xc0\x00\x00\x00", 8));
  EXPECT_EQ(run({"prng", "--n", "3", "--count", "2", "--lsb-first", "--format", "u32"}).out,
            "536870912\n1610612736\n");
  EXPECT_EQ(run({"prng", "--n", "3", "--format", "hex"}).code, 2);
}

TEST(CliTest, OutputIsDeterministic) {
  for (auto args : {std::initializer_list<const char*>{"enumerate", "--n", "3"},
                    std::initializer_list<const char*>{"prng", "--n", "10", "--count", "100"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(CliTest, MalformedInputsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nosuch"}).code, 2);
  EXPECT_EQ(run({"weights", "--n", "99"}).code, 2);
  EXPECT_EQ(run({"trajectory", "--net", "/nonexistent.net"}).code, 2);
  EXPECT_EQ(run({"trajectory", "--phi", "3", "--start", "01"}).code, 2);
  const std::string garbage = kGolden + "/phi4_table.txt";
  EXPECT_EQ(run({"trajectory", "--net", garbage.c_str()}).code, 2);
}

TEST(CliTest, EverySubcommandHasHelp) {
  for (const char* sub : {"trajectory", "doubling", "rank", "unrank", "weights", "verify", "period",
                          "enumerate", "prng", "test"}) {
    const CliRun r = run({sub, "--help"});
    EXPECT_EQ(r.code, 0) << sub;
    EXPECT_FALSE(r.out.empty()) << sub;
  }
}

}  // namespace
}  // namespace mcpnet
