#ifndef MAK_MEDIAN_SOLVERS_H_
#define MAK_MEDIAN_SOLVERS_H_

#include "mak/caps.h"
#include "mak/instance.h"
#include "mak/solution.h"

namespace mak {

// Representative guessing. For every voter a representative item r_v is
// guessed; item p becomes the set F_p = {v : util_v(p) >= util_v(r_v)} with
// cost c(p), and a multicover with multiplicity lambda of cost <= b certifies
// that every voter gets at least util_v(r_v). The best certified guess wins.
// Guesses are enumerated over each voter's distinct utility levels (items
// with equal utility for v induce the same family) and pruned when their sum
// cannot beat the incumbent.
// Accepts the median and diverse rules.
Solution SolveMedianXp(const Instance& instance,
                       const Caps& caps = DefaultCaps());

// Guess the bundle size k <= min(b, m) and every voter's ranking of the k
// bundle positions, then match positions to items under the budget.
//
// Best rule: the weight of (position l, item p) is the sum of util_v(p) over
// voters ranking l among their top lambda. The weights only depend on the
// induced 0/1 position-by-voter matrix, so guesses are enumerated as
// canonical multisets of its columns (permutation tuples modulo relabeling
// of positions, all-zero columns dropped since they are dominated by a
// smaller k), and each is solved with AssignPositions.
//
// Median rule: a guess only certifies its weight when the matched items are
// ranked by every voter as the guess says. Guesses are therefore expanded
// lazily: positions are filled in the first voter's rank order and every
// other voter's ranking is the projection of the partial matching, so only
// consistent (guess, matching) pairs are visited, with budget pruning.
//
// Accepts the median, best and diverse rules.
Solution SolveMatchingFpt(const Instance& instance,
                          const Caps& caps = DefaultCaps());

enum class SingleVoterIndexing {
  kBudget,   // T[i][j][k]: max utility, cost <= j, exactly k items
  kUtility,  // T[i][a][k]: min cost, utility exactly a, exactly k items
};

// Best rule with one voter: a knapsack with at most lambda items.
Solution SolveBestSingleVoter(
    const Instance& instance,
    SingleVoterIndexing indexing = SingleVoterIndexing::kBudget,
    const Caps& caps = DefaultCaps());

// Strongly unanimous profiles: all voters are merged into one, then the
// median/diverse rule goes through SolveMedianXp and the best rule through
// SolveBestSingleVoter. The returned bundle is evaluated on `instance`.
Solution SolveStronglyUnanimous(const Instance& instance,
                                const Caps& caps = DefaultCaps());

// Turns a diverse instance into a median instance with the given lambda by
// adding lambda-1 unit-cost items that every voter ranks above all original
// items (utilities u_max + 1 .. u_max + lambda - 1) and raising the budget by
// lambda-1. Optimal values coincide. target_lambda == 1 returns the input.
Instance LiftDiverseToMedian(const Instance& instance, int target_lambda);

}  // namespace mak

#endif  // MAK_MEDIAN_SOLVERS_H_
