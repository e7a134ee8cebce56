#ifndef MAK_SOLUTION_H_
#define MAK_SOLUTION_H_

#include <cstdint>

#include "mak/satisfaction.h"

namespace mak {

struct SolveStats {
  // Number of DP cells, guesses or search nodes the solver touched.
  std::uint64_t states = 0;
};

// Witness-producing solvers return the bundle with its value recomputed on
// the instance they were called with.
struct Solution {
  Bundle bundle;
  SolveStats stats;
};

// Decision-style solvers that only certify an optimal value.
struct ValueSolution {
  Value value = 0;
  SolveStats stats;
};

}  // namespace mak

#endif  // MAK_SOLUTION_H_
