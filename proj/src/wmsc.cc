#include "mak/wmsc.h"

#include <algorithm>
#include <limits>
#include <string>

#include "mak/errors.h"

namespace mak {
namespace {

constexpr Value kInf = std::numeric_limits<Value>::max() / 4;

}  // namespace

CoverageVector::CoverageVector(int universe_size, int multiplicity)
    : n_(universe_size), k_(multiplicity), place_(universe_size) {
  std::uint64_t place = 1;
  full_ = 0;
  for (int i = 0; i < n_; ++i) {
    place_[i] = place;
    full_ += place * static_cast<std::uint64_t>(k_);
    place = SatMul(place, static_cast<std::uint64_t>(k_) + 1);
  }
  num_states_ = place;
}

int CoverageVector::digit(std::uint64_t code, int element) const {
  return static_cast<int>((code / place_[element]) % (k_ + 1));
}

std::uint64_t CoverageVector::SaturatingMinus(
    std::uint64_t code, const std::vector<bool>& chi) const {
  for (int i = 0; i < n_; ++i) {
    if (chi[i] && digit(code, i) > 0) code -= place_[i];
  }
  return code;
}

std::optional<WmscSolution> SolveWmsc(const WmscInstance& wmsc,
                                      const Caps& caps) {
  const int n = wmsc.universe_size;
  const int k = wmsc.multiplicity;
  const int num_sets = static_cast<int>(wmsc.sets.size());
  if (k < 1) throw InputError("WMSC multiplicity must be >= 1");
  if (static_cast<int>(wmsc.set_costs.size()) != num_sets) {
    throw InputError("WMSC cost list length differs from family size");
  }
  for (const auto& set : wmsc.sets) {
    if (static_cast<int>(set.size()) != n) {
      throw InputError("WMSC characteristic vector has wrong length");
    }
  }
  const std::uint64_t states = SatPow(static_cast<std::uint64_t>(k) + 1, n);
  CheckCap("wmsc_max_cells",
           SatMul(states, std::max<std::uint64_t>(1, num_sets)),
           caps.wmsc_max_cells);

  const CoverageVector cov(n, k);
  std::vector<Value> prev(states, kInf);
  std::vector<Value> cur(states);
  prev[0] = 0;
  // took[j][x]: T[x, j+1] was attained by adding F_{j+1}.
  std::vector<std::vector<bool>> took(num_sets, std::vector<bool>(states));
  for (int j = 0; j < num_sets; ++j) {
    const Value c = wmsc.set_costs[j];
    for (std::uint64_t x = 0; x < states; ++x) {
      const Value skip = prev[x];
      const Value from = prev[cov.SaturatingMinus(x, wmsc.sets[j])];
      const Value take = from >= kInf ? kInf : from + c;
      if (take < skip) {
        cur[x] = take;
        took[j][x] = true;
      } else {
        cur[x] = skip;
      }
    }
    std::swap(prev, cur);
  }
  const std::uint64_t goal = cov.full();
  if (prev[goal] >= kInf) return std::nullopt;

  WmscSolution solution;
  solution.total_cost = prev[goal];
  solution.states = SatMul(states, static_cast<std::uint64_t>(num_sets) + 1);
  std::uint64_t x = goal;
  for (int j = num_sets - 1; j >= 0; --j) {
    if (took[j][x]) {
      solution.selection.push_back(j);
      x = cov.SaturatingMinus(x, wmsc.sets[j]);
    }
  }
  if (x != 0) throw InternalError("WMSC backtracking did not reach zero");
  std::reverse(solution.selection.begin(), solution.selection.end());
  return solution;
}

}  // namespace mak
