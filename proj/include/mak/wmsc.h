#ifndef MAK_WMSC_H_
#define MAK_WMSC_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "mak/caps.h"
#include "mak/instance.h"

namespace mak {

// Weighted multiset multicover: pick a minimum-cost subfamily of `sets` that
// covers each of the `universe_size` elements at least `multiplicity` times.
struct WmscInstance {
  int universe_size = 0;
  // Characteristic vectors, each of length universe_size.
  std::vector<std::vector<bool>> sets;
  std::vector<Value> set_costs;
  Value budget = 0;  // checked by the caller
  int multiplicity = 1;
};

struct WmscSolution {
  std::vector<int> selection;  // ascending set indices
  Value total_cost = 0;
  std::uint64_t states = 0;
};

// Coverage counts in {0..k}^n packed in mixed radix k+1, element 0 lowest.
class CoverageVector {
 public:
  CoverageVector(int universe_size, int multiplicity);

  std::uint64_t num_states() const { return num_states_; }
  std::uint64_t full() const { return full_; }
  int digit(std::uint64_t code, int element) const;
  // Entrywise max(0, x_i - chi_i).
  std::uint64_t SaturatingMinus(std::uint64_t code,
                                const std::vector<bool>& chi) const;

 private:
  int n_;
  int k_;
  std::vector<std::uint64_t> place_;
  std::uint64_t num_states_;
  std::uint64_t full_;
};

// Exact DP over (coverage vector, prefix of the family):
//   T[x, 0] = 0 if x = 0 else inf
//   T[x, j] = min(T[x, j-1], T[x - chi(F_j), j-1] + c(F_j))
// with saturating subtraction. Returns the cheapest full cover or nullopt if
// none exists. Throws SizeError when (k+1)^n * |F| > caps.wmsc_max_cells.
std::optional<WmscSolution> SolveWmsc(const WmscInstance& wmsc,
                                      const Caps& caps = DefaultCaps());

}  // namespace mak

#endif  // MAK_WMSC_H_
