#include "mak/dispatch.h"

#include <sstream>

#include <gtest/gtest.h>

#include "mak/bench.h"
#include "mak/errors.h"
#include "mak/generators.h"
#include "mak/oracle.h"
#include "test_util.h"

namespace mak {
namespace {

using ::mak::testing::MakeInstance;

SolveReport RunAlgo(const Instance& instance, Algorithm algo,
                std::string indexing = "") {
  SolveOptions options;
  options.algorithm = algo;
  options.indexing = std::move(indexing);
  return Solve(instance, options);
}

TEST(DispatchTest, AutoPicksUnanimousPath) {
  const Instance instance = MakeInstance({1, 2}, {{1, 5}, {0, 3}}, 2);
  EXPECT_EQ(RunAlgo(instance, Algorithm::kAuto).algorithm, Algorithm::kUnanimous);
}

TEST(DispatchTest, AutoPicksStronglyUnanimousPath) {
  const Instance instance =
      MakeInstance({1, 2, 1}, {{1, 5, 2}, {2, 9, 3}}, 2, Rule::kMedian, 2);
  const SolveReport report = RunAlgo(instance, Algorithm::kAuto);
  EXPECT_EQ(report.algorithm, Algorithm::kStronglyUnanimous);
  EXPECT_EQ(report.value, BruteForceSolve(instance).bundle.value);
}

TEST(DispatchTest, AutoPicksSingleCrossingPath) {
  const Instance instance = Generate({.kind = GeneratorKind::kSingleCrossing,
                                      .num_voters = 4,
                                      .num_items = 6,
                                      .seed = 3});
  const SolveReport report = RunAlgo(instance, Algorithm::kAuto);
  if (report.algorithm != Algorithm::kUnanimous) {
    EXPECT_EQ(report.algorithm, Algorithm::kSingleCrossing);
  }
  EXPECT_EQ(report.value, BruteForceSolve(instance).bundle.value);
}

TEST(DispatchTest, AutoFallsBackToOracle) {
  Caps caps;
  caps.xp_max_guesses = 1;
  caps.matching_max_voters = 0;
  const Instance instance =
      MakeInstance({1, 1}, {{1, 2}, {2, 1}}, 2, Rule::kMedian, 1);
  SolveOptions options;
  options.caps = caps;
  const SolveReport report = Solve(instance, options);
  EXPECT_EQ(report.algorithm, Algorithm::kOracle);
  EXPECT_EQ(report.value, 4);
}

TEST(DispatchTest, AutoAgreesWithOracle) {
  mak::Rng rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    for (Rule rule : {Rule::kDiverse, Rule::kMedian, Rule::kBest}) {
      const Instance instance = testing::RandomInstance(
          rng, {.max_voters = 4, .max_items = 6, .rule = rule,
                .lambdas = rule == Rule::kDiverse ? std::vector<int>{1}
                                                  : std::vector<int>{1, 2, 3}});
      const SolveReport report = RunAlgo(instance, Algorithm::kAuto);
      EXPECT_EQ(report.value, BruteForceSolve(instance).bundle.value)
          << AlgorithmName(report.algorithm);
      ASSERT_TRUE(report.witness);
      EXPECT_LE(report.witness->cost, instance.budget());
    }
  }
}

TEST(DispatchTest, XpAndMatchingAgree) {
  mak::Rng rng(72);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance instance = testing::RandomInstance(
        rng, {.max_voters = 3, .max_items = 5, .rule = Rule::kMedian,
              .lambdas = {1, 2}});
    EXPECT_EQ(RunAlgo(instance, Algorithm::kXp).value,
              RunAlgo(instance, Algorithm::kMatching).value);
  }
}

TEST(DispatchTest, IncompatibleRequestsAreInputErrors) {
  const Instance median = MakeInstance({1}, {{1}}, 1, Rule::kMedian, 1);
  EXPECT_THROW(RunAlgo(median, Algorithm::kPolymul), InputError);
  EXPECT_THROW(RunAlgo(median, Algorithm::kKpCover), InputError);
  const Instance diverse = MakeInstance({1}, {{1}}, 1);
  EXPECT_THROW(RunAlgo(diverse, Algorithm::kSingleCrossing), InputError);
  EXPECT_THROW(RunAlgo(diverse, Algorithm::kKpCover, "budget"), InputError);
  EXPECT_THROW(ParseAlgorithm("simplex"), InputError);
}

TEST(DispatchTest, SizeErrorNamesCap) {
  SolveOptions options;
  options.algorithm = Algorithm::kOracle;
  options.caps.oracle_max_items = 1;
  try {
    Solve(MakeInstance({1, 1}, {{1, 1}}, 1), options);
    FAIL();
  } catch (const SizeError& e) {
    EXPECT_EQ(e.cap(), "oracle_max_items");
  }
}

TEST(DispatchTest, PolymulIsValueOnly) {
  const Instance instance = MakeInstance({1, 2}, {{1, 5}, {4, 0}}, 3);
  const SolveReport report = RunAlgo(instance, Algorithm::kPolymul, "fft");
  EXPECT_FALSE(report.witness);
  EXPECT_EQ(report.value, 9);
  EXPECT_NE(ReportToJson(instance, report).find("value-only"),
            std::string::npos);
}

TEST(DispatchTest, ReportsTargetAndCertificate) {
  InstanceData data = Generate({.kind = GeneratorKind::kSingleCrossing,
                                .num_voters = 3,
                                .num_items = 4,
                                .seed = 4})
                          .data();
  data.target = 1;
  const Instance instance(data);
  SolveOptions options;
  options.algorithm = Algorithm::kFptas;
  options.epsilon = {1, 2};
  const SolveReport report = Solve(instance, options);
  EXPECT_EQ(report.meets_target, report.value >= 1);
  EXPECT_NE(ReportToText(instance, report).find("certificate"),
            std::string::npos);
  EXPECT_NE(ReportToJson(instance, report).find("\"epsilon\": \"1/2\""),
            std::string::npos);
}

TEST(BenchTest, SmallSuiteAgreesAndIsDeterministic) {
  BenchConfig config;
  config.instances_per_cell = 1;
  config.max_voters = 3;
  config.max_items = 4;
  config.threads = 2;
  config.seed = 17;
  const auto suite = DefaultSuite(config);
  const BenchResult first = RunBench(suite, config);
  EXPECT_TRUE(first.disagreements.empty());
  config.threads = 1;
  const BenchResult second = RunBench(DefaultSuite(config), config);
  std::ostringstream a;
  std::ostringstream b;
  WriteBenchCsv(first, a);
  WriteBenchCsv(second, b);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().substr(0, a.str().find('\n')), kBenchHeader);
}

}  // namespace
}  // namespace mak
