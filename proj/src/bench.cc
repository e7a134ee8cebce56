#include "mak/bench.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <thread>
#include <tuple>

#include "mak/dispatch.h"
#include "mak/errors.h"
#include "mak/io.h"
#include "mak/median_solvers.h"
#include "mak/oracle.h"
#include "mak/profiles.h"

namespace mak {
namespace {

struct CaseResult {
  std::vector<BenchRow> rows;
  std::vector<std::string> disagreements;
  std::vector<std::string> files;
};

struct Run {
  Algorithm algo;
  std::string indexing;
};

std::string Label(const Run& run) {
  std::string label(AlgorithmName(run.algo));
  if (!run.indexing.empty()) label += ":" + run.indexing;
  return label;
}

std::vector<Run> ApplicableRuns(const Instance& instance) {
  std::vector<Run> runs;
  const bool su = IsStronglyUnanimous(instance);
  switch (instance.rule()) {
    case Rule::kDiverse: {
      runs = {{Algorithm::kXp, ""},
              {Algorithm::kMatching, ""},
              {Algorithm::kKpCover, "profit"},
              {Algorithm::kKpCover, "cost"},
              {Algorithm::kPolymul, "schoolbook"},
              {Algorithm::kPolymul, "fft"}};
      const Instance normalized = Normalize(instance).instance;
      if (normalized.num_items() == 0 || IsUnanimous(normalized)) {
        runs.push_back({Algorithm::kUnanimous, ""});
      }
      if (instance.sc_order() &&
          VerifySingleCrossing(instance, *instance.sc_order())) {
        runs.push_back({Algorithm::kSingleCrossing, "cost"});
        runs.push_back({Algorithm::kSingleCrossing, "utility"});
        runs.push_back({Algorithm::kFptas, "cost"});
        runs.push_back({Algorithm::kFptas, "utility"});
      }
      break;
    }
    case Rule::kMedian:
      runs = {{Algorithm::kXp, ""}, {Algorithm::kMatching, ""}};
      break;
    case Rule::kBest:
      runs = {{Algorithm::kMatching, ""}};
      if (instance.num_voters() == 1) {
        runs.push_back({Algorithm::kSingleVoter, "budget"});
        runs.push_back({Algorithm::kSingleVoter, "utility"});
      }
      break;
  }
  if (su) runs.push_back({Algorithm::kStronglyUnanimous, ""});
  runs.push_back({Algorithm::kAuto, ""});
  return runs;
}

BenchRow MakeRow(const BenchCase& c, const Instance& instance,
                 std::string algo, Value value, double millis,
                 std::uint64_t states, bool timing) {
  BenchRow row;
  row.instance_id = c.id;
  row.n = instance.num_voters();
  row.m = instance.num_items();
  row.b = instance.budget();
  row.lambda = instance.lambda();
  row.rule = instance.rule();
  row.algo = std::move(algo);
  row.value = value;
  if (timing) row.millis = millis;
  row.states = states;
  return row;
}

CaseResult RunCase(const BenchCase& c, const BenchConfig& config) {
  CaseResult result;
  const Instance instance = Generate(c.params);
  SolveOptions options;
  options.caps = config.caps;
  options.algorithm = Algorithm::kOracle;
  const SolveReport oracle = Solve(instance, options);
  result.rows.push_back(MakeRow(c, instance, "oracle", oracle.value,
                                oracle.millis, oracle.states, config.timing));
  auto disagree = [&](const std::string& what) {
    result.disagreements.push_back(c.id + ": " + what);
  };

  for (const Run& run : ApplicableRuns(instance)) {
    options.algorithm = run.algo;
    options.indexing = run.indexing;
    SolveReport report;
    try {
      report = Solve(instance, options);
    } catch (const SizeError&) {
      continue;
    } catch (const std::exception& e) {
      disagree(Label(run) + " failed: " + e.what());
      continue;
    }
    result.rows.push_back(MakeRow(c, instance, Label(run), report.value,
                                  report.millis, report.states,
                                  config.timing));
    if (run.algo == Algorithm::kFptas) {
      const Rational& e = options.epsilon;
      const __int128 scaled = static_cast<__int128>(report.value) *
                              (e.num + e.den);
      if (report.value > oracle.value ||
          scaled < static_cast<__int128>(oracle.value) * e.den) {
        disagree(Label(run) + " value " + std::to_string(report.value) +
                 " violates its guarantee against " +
                 std::to_string(oracle.value));
      }
    } else if (report.value != oracle.value) {
      disagree(Label(run) + " value " + std::to_string(report.value) +
               " != oracle " + std::to_string(oracle.value));
    }
  }

  if (instance.rule() == Rule::kDiverse) {
    for (int lambda : {2, 3}) {
      const Instance lifted = LiftDiverseToMedian(instance, lambda);
      options.algorithm = Algorithm::kOracle;
      options.indexing.clear();
      SolveReport report;
      try {
        report = Solve(lifted, options);
      } catch (const SizeError&) {
        continue;
      }
      const std::string label = "lift" + std::to_string(lambda) + ":oracle";
      result.rows.push_back(MakeRow(c, instance, label, report.value,
                                    report.millis, report.states,
                                    config.timing));
      if (report.value != oracle.value) {
        disagree(label + " value " + std::to_string(report.value) +
                 " != oracle " + std::to_string(oracle.value));
      }
    }
  }

  if (!result.disagreements.empty()) {
    const std::filesystem::path path =
        std::filesystem::path(config.counterexample_dir) /
        ("counterexample_" + c.id + ".json");
    WriteInstanceFile(path.string(), instance);
    result.files.push_back(path.string());
  }
  return result;
}

}  // namespace

std::vector<BenchCase> DefaultSuite(const BenchConfig& config) {
  std::vector<BenchCase> suite;
  Rng rng(config.seed);
  int index = 0;
  const int max_items = std::max(config.max_items, 1);
  std::vector<int> item_counts{std::min(3, max_items)};
  if (max_items > 3) item_counts.push_back(max_items);
  for (Rule rule : {Rule::kDiverse, Rule::kMedian, Rule::kBest}) {
    for (GeneratorKind kind :
         {GeneratorKind::kGeneral, GeneratorKind::kUnanimous,
          GeneratorKind::kStronglyUnanimous, GeneratorKind::kSingleCrossing,
          GeneratorKind::kSinglePeaked}) {
      for (int n = 1; n <= config.max_voters; ++n) {
        for (int m : item_counts) {
          for (int r = 0; r < config.instances_per_cell; ++r) {
            BenchCase c;
            char id[16];
            std::snprintf(id, sizeof(id), "c%05d", index);
            c.id = id;
            c.params.kind = kind;
            c.params.num_voters = n;
            c.params.num_items = m;
            c.params.max_util = 6;
            c.params.max_cost = 5;
            c.params.budget = rng.Uniform(0, 10);
            c.params.rule = rule;
            c.params.lambda = rule == Rule::kDiverse ? 1 : 1 + index % 3;
            c.params.seed = static_cast<std::uint64_t>(
                rng.Uniform(0, std::int64_t{1} << 40));
            suite.push_back(c);
            ++index;
          }
        }
      }
    }
  }
  return suite;
}

BenchResult RunBench(const std::vector<BenchCase>& suite,
                     const BenchConfig& config) {
  std::vector<CaseResult> results(suite.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < suite.size(); i = next++) {
      results[i] = RunCase(suite[i], config);
    }
  };
  unsigned threads = config.threads > 0
                         ? static_cast<unsigned>(config.threads)
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(suite.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  BenchResult out;
  for (CaseResult& r : results) {
    for (BenchRow& row : r.rows) out.rows.push_back(std::move(row));
    for (std::string& d : r.disagreements) {
      out.disagreements.push_back(std::move(d));
    }
    for (std::string& f : r.files) {
      out.counterexample_files.push_back(std::move(f));
    }
  }
  std::stable_sort(out.rows.begin(), out.rows.end(),
                   [](const BenchRow& a, const BenchRow& b) {
                     return std::tie(a.instance_id, a.algo) <
                            std::tie(b.instance_id, b.algo);
                   });
  return out;
}

void WriteBenchCsv(const BenchResult& result, std::ostream& out) {
  out << kBenchHeader << "\n";
  for (const BenchRow& row : result.rows) {
    out << row.instance_id << ',' << row.n << ',' << row.m << ',' << row.b
        << ',' << row.lambda << ',' << RuleName(row.rule) << ',' << row.algo
        << ',' << row.value << ',';
    if (row.millis) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.3f", *row.millis);
      out << buf;
    }
    out << ',' << row.states << "\n";
  }
}

}  // namespace mak
