#ifndef MAK_DIVERSE_SOLVERS_H_
#define MAK_DIVERSE_SOLVERS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "mak/caps.h"
#include "mak/instance.h"
#include "mak/solution.h"

namespace mak {

// Unanimous profiles: any common top item is optimal on its own. Items over
// budget are dropped first, and unanimity is checked on what remains; the
// lowest-index common top is returned. Throws InputError otherwise.
Solution SolveDiverseUnanimous(const Instance& instance);

enum class KpCoverIndexing {
  kProfit,  // T[S][j]: min cost covering exactly S with profit exactly j
  kCost,    // T[S][j]: max profit covering exactly S with cost <= j
};

// One selected family member: voters `voters` (bit v = voter v) served by
// `item`.
struct CoverPart {
  std::uint32_t voters = 0;
  int item = -1;
  friend bool operator==(const CoverPart&, const CoverPart&) = default;
};

struct KpCoverSolution {
  Solution solution;
  // Pairwise disjoint, union is every voter. Empty when no cover fits.
  std::vector<CoverPart> parts;
};

// Reduction to a cover problem over voter subsets: every pair (X, item) with
// non-empty X has cost c(item) and profit sum_{v in X} util_v(item); the
// chosen pairs must partition the voters. The family is enumerated on the
// fly, item-major and X ascending. An item may serve several groups; the
// bundle keeps it once.
KpCoverSolution SolveDiverseKpCover(
    const Instance& instance, KpCoverIndexing indexing = KpCoverIndexing::kCost,
    const Caps& caps = DefaultCaps());

enum class BlockDpIndexing {
  kCost,     // T[i][beta]: best utility for the first i voters, cost <= beta
  kUtility,  // T[i][alpha]: min cost reaching utility alpha
};

// Single-crossing order `sigma` (voter indices): consecutive blocks of voters
// along sigma are each served by one item. Runs in O(n^2 m dim) where dim is
// b (cost indexing) or u_bar (utility indexing). Throws InputError if sigma
// does not verify.
Solution SolveDiverseSingleCrossing(
    const Instance& instance, const std::vector<int>& sigma,
    BlockDpIndexing indexing = BlockDpIndexing::kCost,
    const Caps& caps = DefaultCaps());

// Exact positive rational num/den.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

// Parses "num/den" or an integer. Throws InputError on malformed input or a
// non-positive denominator.
Rational ParseRational(const std::string& text);
std::string FormatRational(const Rational& value);

// Utilities scaled by s = epsilon * u_max / (2n): ceil(util / s), computed
// exactly. u_max is taken over affordable items. Returns all zeros when
// u_max is 0.
std::vector<std::vector<Value>> ScaleUtilities(const Instance& instance,
                                               const Rational& epsilon);

// Block DP on the scaled utilities, value recomputed on the original ones.
// Guarantees value * (1 + epsilon) >= optimum for 0 < epsilon <= 1. With cost
// indexing ties on the scaled objective are broken by the original utility;
// utility indexing gives a table size independent of b.
Solution SolveDiverseFptas(const Instance& instance,
                           const std::vector<int>& sigma,
                           const Rational& epsilon,
                           BlockDpIndexing indexing = BlockDpIndexing::kCost,
                           const Caps& caps = DefaultCaps());

}  // namespace mak

#endif  // MAK_DIVERSE_SOLVERS_H_
