#ifndef MAK_GENERATORS_H_
#define MAK_GENERATORS_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mak/instance.h"

namespace mak {

// Seeded source with a bounded draw that does not depend on the standard
// library's distribution implementations, so streams match across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi);
  bool Coin() { return Uniform(0, 1) == 1; }
  template <typename T>
  void Shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1],
                values[static_cast<std::size_t>(
                    Uniform(0, static_cast<std::int64_t>(i) - 1))]);
    }
  }
  // k distinct values from [lo, hi], descending.
  std::vector<std::int64_t> DistinctDescending(int k, std::int64_t lo,
                                               std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

enum class GeneratorKind { kGeneral, kUnanimous, kStronglyUnanimous,
                           kSingleCrossing, kSinglePeaked };

// "general", "unanimous", "su", "sc", "sp".
GeneratorKind ParseGeneratorKind(std::string_view name);
std::string_view GeneratorKindName(GeneratorKind kind);

struct GeneratorParams {
  GeneratorKind kind = GeneratorKind::kGeneral;
  int num_voters = 3;
  int num_items = 5;
  Value max_util = 6;
  Value max_cost = 5;
  Value budget = 10;
  Rule rule = Rule::kDiverse;
  int lambda = 1;
  std::uint64_t seed = 1;
};

// Deterministic for fixed params. Utilities are in [0, max_util] and costs in
// [1, max_cost]. "sc" and "sp" use strict preferences and therefore widen the
// utility range to [0, max(max_util, m - 1)]; they record the voter order /
// item axis in the instance. Class claims are verified before returning
// (InternalError on failure). Throws InputError on non-positive sizes.
Instance Generate(const GeneratorParams& params);

}  // namespace mak

#endif  // MAK_GENERATORS_H_
