#ifndef MAK_BENCH_H_
#define MAK_BENCH_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mak/caps.h"
#include "mak/generators.h"
#include "mak/instance.h"

namespace mak {

struct BenchConfig {
  std::uint64_t seed = 1;
  int instances_per_cell = 4;
  int max_voters = 4;
  int max_items = 6;
  int threads = 0;      // 0: hardware concurrency
  bool timing = false;  // fill the millis column
  std::string counterexample_dir = ".";
  Caps caps;
};

struct BenchRow {
  std::string instance_id;
  int n = 0;
  int m = 0;
  Value b = 0;
  int lambda = 1;
  Rule rule = Rule::kDiverse;
  std::string algo;
  Value value = 0;
  std::optional<double> millis;
  std::uint64_t states = 0;
};

struct BenchResult {
  std::vector<BenchRow> rows;  // sorted by (instance_id, algo)
  // One message per disagreement with the oracle; empty when all agree.
  std::vector<std::string> disagreements;
  std::vector<std::string> counterexample_files;
};

// One generated instance of the suite.
struct BenchCase {
  std::string id;
  GeneratorParams params;
};

// The default suite: every (rule, generator kind, n, m) combination up to
// the configured sizes, with lambda cycling through {1, 2, 3} for median and
// best. Seeds derive from config.seed.
std::vector<BenchCase> DefaultSuite(const BenchConfig& config);

// Runs every applicable solver on every case, compares with the oracle (the
// FPTAS against its guarantee, lifted diverse instances for equal optima),
// and writes a counterexample instance file per disagreeing case.
BenchResult RunBench(const std::vector<BenchCase>& suite,
                     const BenchConfig& config);

constexpr const char* kBenchHeader =
    "instance_id,n,m,b,lambda,rule,algo,value,millis,states";
void WriteBenchCsv(const BenchResult& result, std::ostream& out);

}  // namespace mak

#endif  // MAK_BENCH_H_
