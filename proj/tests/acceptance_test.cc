// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mak/diverse_solvers.h"
#include "mak/errors.h"
#include "mak/generators.h"
#include "mak/indexed_polynomial.h"
#include "mak/median_solvers.h"
#include "mak/oracle.h"
#include "mak/profiles.h"
#include "mak/wmsc.h"
#include "test_util.h"

namespace mak {
namespace {

using testing::RandomInstance;
using testing::RandomSpec;
using Clock = std::chrono::steady_clock;

constexpr double kMedianSuiteSeconds = 300.0;
constexpr double kFptasInstanceSeconds = 1.0;

struct Outcome {
  bool ok = true;
  int checked = 0;
  std::string detail;

  void Fail(const std::string& message) {
    if (ok) detail = message;
    ok = false;
  }
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Value Opt(const Instance& instance) {
  return BruteForceSolve(instance).bundle.value;
}

std::string Describe(const char* what, int index, Value got, Value want) {
  std::ostringstream out;
  out << what << " #" << index << ": got " << got << ", oracle " << want;
  return out.str();
}

RandomSpec MedianSuiteSpec(Rule rule) {
  return {.max_voters = 4, .max_items = 6, .max_cost = 5, .max_util = 6,
          .max_budget = 10, .rule = rule, .lambdas = {1, 2, 3}};
}

Outcome MedianOracle() {
  Outcome out;
  Rng rng(1001);
  const auto start = Clock::now();
  for (int i = 0; i < 300; ++i) {
    const Instance instance = RandomInstance(rng, MedianSuiteSpec(Rule::kMedian));
    const Value want = Opt(instance);
    const Value xp = SolveMedianXp(instance).bundle.value;
    const Value matching = SolveMatchingFpt(instance).bundle.value;
    if (xp != want) out.Fail(Describe("xp", i, xp, want));
    if (matching != want) out.Fail(Describe("matching", i, matching, want));
    ++out.checked;
  }
  const double elapsed = Seconds(start);
  if (elapsed >= kMedianSuiteSeconds) out.Fail("suite took too long");
  std::ostringstream detail;
  detail << out.checked << " instances in " << elapsed << " s";
  if (out.ok) out.detail = detail.str();
  return out;
}

Outcome BestOracle() {
  Outcome out;
  Rng rng(1002);
  for (int i = 0; i < 300; ++i) {
    const Instance instance = RandomInstance(rng, MedianSuiteSpec(Rule::kBest));
    const Value want = Opt(instance);
    const Value got = SolveMatchingFpt(instance).bundle.value;
    if (got != want) out.Fail(Describe("matching", i, got, want));
    ++out.checked;
  }
  for (int i = 0; i < 300; ++i) {
    const Instance instance = RandomInstance(
        rng, {.max_voters = 1, .max_items = 12, .rule = Rule::kBest,
              .lambdas = {1, 2, 3, 4, 5}});
    const Value want = Opt(instance);
    for (auto indexing :
         {SingleVoterIndexing::kBudget, SingleVoterIndexing::kUtility}) {
      const Value got = SolveBestSingleVoter(instance, indexing).bundle.value;
      if (got != want) out.Fail(Describe("single-voter", i, got, want));
    }
    ++out.checked;
  }
  if (out.ok) out.detail = std::to_string(out.checked) + " instances";
  return out;
}

Outcome DiverseOracle() {
  Outcome out;
  Rng rng(1003);
  for (int i = 0; i < 300; ++i) {
    const Instance instance = RandomInstance(
        rng, {.max_voters = 6, .max_items = 8, .rule = Rule::kDiverse});
    const Value want = Opt(instance);
    for (auto indexing : {KpCoverIndexing::kProfit, KpCoverIndexing::kCost}) {
      const Value got =
          SolveDiverseKpCover(instance, indexing).solution.bundle.value;
      if (got != want) out.Fail(Describe("kpcover", i, got, want));
    }
    const Value poly = SolveDiversePolymul(instance).value;
    if (poly != want) out.Fail(Describe("polymul", i, poly, want));
    ++out.checked;
  }
  for (int i = 0; i < 100; ++i) {
    const Instance instance = Generate(
        {.kind = GeneratorKind::kSingleCrossing,
         .num_voters = 1 + i % 6,
         .num_items = 1 + (i / 6) % 8,
         .budget = static_cast<Value>(i % 11),
         .seed = 5000 + static_cast<std::uint64_t>(i)});
    const Value want = Opt(instance);
    for (auto indexing : {BlockDpIndexing::kUtility, BlockDpIndexing::kCost}) {
      const Value got =
          SolveDiverseSingleCrossing(instance, *instance.sc_order(), indexing)
              .bundle.value;
      if (got != want) out.Fail(Describe("sc", i, got, want));
    }
    ++out.checked;
  }
  if (out.ok) out.detail = std::to_string(out.checked) + " instances";
  return out;
}

Value BruteForceWmsc(const WmscInstance& wmsc, bool& feasible) {
  const int f = static_cast<int>(wmsc.sets.size());
  Value best = 0;
  feasible = false;
  for (std::uint32_t mask = 0; mask < (1u << f); ++mask) {
    std::vector<int> count(wmsc.universe_size, 0);
    Value cost = 0;
    for (int j = 0; j < f; ++j) {
      if (!(mask >> j & 1)) continue;
      cost += wmsc.set_costs[j];
      for (int e = 0; e < wmsc.universe_size; ++e) count[e] += wmsc.sets[j][e];
    }
    bool covered = true;
    for (int c : count) covered = covered && c >= wmsc.multiplicity;
    if (covered && (!feasible || cost < best)) {
      best = cost;
      feasible = true;
    }
  }
  return best;
}

Outcome WmscOracle() {
  Outcome out;
  Rng rng(1004);
  for (int i = 0; i < 200; ++i) {
    WmscInstance wmsc;
    wmsc.universe_size = static_cast<int>(rng.Uniform(1, 3));
    wmsc.multiplicity = static_cast<int>(rng.Uniform(1, 3));
    const int f = static_cast<int>(rng.Uniform(0, 6));
    for (int j = 0; j < f; ++j) {
      std::vector<bool> set(wmsc.universe_size);
      for (int e = 0; e < wmsc.universe_size; ++e) set[e] = rng.Coin();
      wmsc.sets.push_back(set);
      wmsc.set_costs.push_back(rng.Uniform(1, 5));
    }
    bool feasible = false;
    const Value want = BruteForceWmsc(wmsc, feasible);
    const auto got = SolveWmsc(wmsc);
    if (got.has_value() != feasible) {
      out.Fail("feasibility differs on #" + std::to_string(i));
    } else if (got && got->total_cost != want) {
      out.Fail(Describe("wmsc", i, got->total_cost, want));
    }
    ++out.checked;
  }
  if (out.ok) out.detail = std::to_string(out.checked) + " instances";
  return out;
}

Instance PlantDuplicates(Rng& rng, const Instance& base) {
  InstanceData data = base.data();
  const int n = static_cast<int>(data.utils.size());
  const int copies = static_cast<int>(rng.Uniform(1, 3));
  for (int c = 0; c < copies; ++c) {
    const auto& source = data.utils[rng.Uniform(0, n - 1)];
    // A positive multiple keeps the weak order unchanged.
    const Value factor = rng.Uniform(1, 2);
    std::vector<Value> row;
    for (Value u : source) row.push_back(u * factor);
    data.utils.push_back(row);
    data.voter_ids.push_back("d" + std::to_string(c + 1));
  }
  return Instance(std::move(data));
}

Outcome MergeSafety() {
  Outcome out;
  Rng rng(1005);
  int merged_any = 0;
  for (int i = 0; i < 100; ++i) {
    for (Rule rule : {Rule::kDiverse, Rule::kMedian, Rule::kBest}) {
      const Instance base = RandomInstance(
          rng, {.max_voters = 3, .max_items = 6, .rule = rule,
                .lambdas = rule == Rule::kDiverse ? std::vector<int>{1}
                                                  : std::vector<int>{1, 2, 3}});
      const Instance instance = PlantDuplicates(rng, base);
      const MergeResult merged = MergeIdenticalVoters(instance);
      if (merged.instance.num_voters() < instance.num_voters()) ++merged_any;
      const Value want = Opt(instance);
      const Value got = Opt(merged.instance);
      if (got != want) out.Fail(Describe("merge", i, got, want));
    }
    ++out.checked;
  }
  if (merged_any == 0) out.Fail("no voters were merged");
  if (out.ok) out.detail = std::to_string(out.checked) + " instances x 3 rules";
  return out;
}

Outcome LiftEquivalence() {
  Outcome out;
  Rng rng(1006);
  for (int i = 0; i < 100; ++i) {
    const Instance instance = RandomInstance(
        rng, {.max_voters = 4, .max_items = 6, .rule = Rule::kDiverse});
    const Value want = Opt(instance);
    for (int lambda : {2, 3}) {
      const Value got = Opt(LiftDiverseToMedian(instance, lambda));
      if (got != want) out.Fail(Describe("lift", i, got, want));
    }
    ++out.checked;
  }
  for (int i = 0; i < 100; ++i) {
    const Instance instance = Generate(
        {.kind = GeneratorKind::kSingleCrossing,
         .num_voters = 1 + i % 5,
         .num_items = 1 + i % 6,
         .seed = 6000 + static_cast<std::uint64_t>(i)});
    for (int lambda : {2, 3}) {
      const Instance lifted = LiftDiverseToMedian(instance, lambda);
      if (!VerifySingleCrossing(lifted, *instance.sc_order())) {
        out.Fail("lifted SC instance #" + std::to_string(i) +
                 " fails verification");
      }
      if (Opt(lifted) != Opt(instance)) {
        out.Fail("lifted SC instance #" + std::to_string(i) + " changes value");
      }
    }
    ++out.checked;
  }
  if (out.ok) out.detail = std::to_string(out.checked) + " instances";
  return out;
}

Outcome FptasGuarantee() {
  Outcome out;
  double slowest = 0;
  const std::vector<Rational> epsilons = {{1, 10}, {1, 2}, {1, 1}};
  for (int i = 0; i < 100; ++i) {
    const Instance instance = Generate(
        {.kind = GeneratorKind::kSingleCrossing,
         .num_voters = 1 + i % 6,
         .num_items = 1 + (i * 7) % 10,
         .max_util = 10'000,
         .max_cost = 5,
         .budget = static_cast<Value>(1 + i % 12),
         .seed = 7000 + static_cast<std::uint64_t>(i)});
    const Value opt = Opt(instance);
    for (const Rational& eps : epsilons) {
      for (auto indexing : {BlockDpIndexing::kCost, BlockDpIndexing::kUtility}) {
        const auto start = Clock::now();
        const Value got =
            SolveDiverseFptas(instance, *instance.sc_order(), eps, indexing)
                .bundle.value;
        const double elapsed = Seconds(start);
        slowest = std::max(slowest, elapsed);
        // value * (1 + num/den) >= opt, in integers.
        const __int128 lhs = static_cast<__int128>(got) * (eps.den + eps.num);
        const __int128 rhs = static_cast<__int128>(opt) * eps.den;
        if (got > opt) out.Fail(Describe("fptas above optimum", i, got, opt));
        if (lhs < rhs) out.Fail(Describe("fptas below bound", i, got, opt));
        if (elapsed >= kFptasInstanceSeconds) {
          out.Fail("instance #" + std::to_string(i) + " took too long");
        }
      }
    }
    ++out.checked;
  }
  std::ostringstream detail;
  detail << out.checked << " instances, slowest " << slowest << " s";
  if (out.ok) out.detail = detail.str();
  return out;
}

PolyFlags RandomWeightFlags(Rng& rng, int n, int weight) {
  PolyFlags flags(std::size_t{1} << n, 0);
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (std::popcount(i) == weight && rng.Coin()) flags[i] = 1;
  }
  return flags;
}

Outcome PolynomialInternals() {
  Outcome out;
  Rng rng(1008);
  const int n = 6;
  for (int i = 0; i < 50; ++i) {
    const int s1 = static_cast<int>(rng.Uniform(1, n - 1));
    const int s2 = static_cast<int>(rng.Uniform(1, n - s1));
    const PolyFlags a = RandomWeightFlags(rng, n, s1);
    const PolyFlags b = RandomWeightFlags(rng, n, s2);
    PolyFlags want(a.size(), 0);
    for (std::size_t x = 0; x < a.size(); ++x) {
      for (std::size_t y = 0; y < b.size(); ++y) {
        if (a[x] && b[y] && (x & y) == 0) want[x | y] = 1;
      }
    }
    for (auto method : {ProductMethod::kSchoolbook, ProductMethod::kFft}) {
      if (ProductProject(a, b, s1 + s2, method) != want) {
        out.Fail("product mismatch on pair #" + std::to_string(i));
      }
    }
    ++out.checked;
  }
  std::uint64_t stored = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Instance instance =
        Generate({.num_voters = n, .num_items = 8, .seed = 8000 + seed});
    for (const PolyLayer& layer : BuildPolynomialLayers(instance)) {
      for (const auto& [key, flags] : layer) {
        for (std::size_t i = 0; i < flags.size(); ++i) {
          if (!flags[i]) continue;
          ++stored;
          if (std::popcount(i) != key.size) {
            out.Fail("stored index weight differs from its size key");
          }
        }
      }
    }
    if (SolveDiversePolymul(instance).value != Opt(instance)) {
      out.Fail("polymul value differs at n=6");
    }
  }
  if (out.ok) {
    out.detail = std::to_string(out.checked) + " pairs, " +
                 std::to_string(stored) + " stored indices";
  }
  return out;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Outcome BenchDeterminism() {
  Outcome out;
#ifdef MAK_BINARY
  const auto dir = std::filesystem::temp_directory_path() / "mak_acceptance";
  std::filesystem::create_directories(dir);
  std::vector<std::string> outputs;
  for (int run = 0; run < 2; ++run) {
    const auto csv = dir / ("bench" + std::to_string(run) + ".csv");
    const std::string command = std::string("\"") + MAK_BINARY +
                                "\" bench --seed 42 --counterexample-dir \"" +
                                dir.string() + "\" -o \"" + csv.string() + "\"";
    if (std::system(command.c_str()) != 0) {
      out.Fail("mak bench exited non-zero");
      return out;
    }
    outputs.push_back(ReadFile(csv));
  }
  if (outputs[0].empty()) out.Fail("empty CSV");
  if (outputs[0] != outputs[1]) out.Fail("CSV bytes differ");
  if (out.ok) out.detail = std::to_string(outputs[0].size()) + " identical bytes";
  std::filesystem::remove_all(dir);
#else
  out.Fail("mak binary not built");
#endif
  return out;
}

}  // namespace
}  // namespace mak

int main() {
  struct Check {
    const char* name;
    const char* title;
    std::function<mak::Outcome()> run;
  };
  const std::vector<Check> checks = {
      {"AC1", "median rule matches oracle", mak::MedianOracle},
      {"AC2", "best rule matches oracle", mak::BestOracle},
      {"AC3", "diverse rule matches oracle", mak::DiverseOracle},
      {"AC4", "multicover DP matches enumeration", mak::WmscOracle},
      {"AC5", "merging identical voters keeps the optimum", mak::MergeSafety},
      {"AC6", "lifting keeps the optimum", mak::LiftEquivalence},
      {"AC7", "approximation guarantee", mak::FptasGuarantee},
      {"AC8", "polynomial products and index weights",
       mak::PolynomialInternals},
      {"AC9", "bench CSV is deterministic", mak::BenchDeterminism},
  };
  int failures = 0;
  for (const Check& check : checks) {
    mak::Outcome outcome;
    try {
      outcome = check.run();
    } catch (const std::exception& e) {
      outcome.Fail(std::string("exception: ") + e.what());
    }
    std::cout << check.name << ": " << (outcome.ok ? "PASS" : "FAIL") << " "
              << check.title << " (" << outcome.detail << ")" << std::endl;
    if (!outcome.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
