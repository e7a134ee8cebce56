#ifndef MAK_SATISFACTION_H_
#define MAK_SATISFACTION_H_

#include <span>
#include <vector>

#include "mak/instance.h"

namespace mak {

// A set of items, stored as sorted distinct item indices, together with its
// cost and its total satisfaction under the instance's rule.
struct Bundle {
  std::vector<int> items;
  Value cost = 0;
  Value value = 0;

  friend bool operator==(const Bundle&, const Bundle&) = default;
};

// lambda-th largest utility of `voter` over `bundle` (multiset order), or 0
// when the bundle holds fewer than lambda items.
Value SatMedian(const Instance& instance, int voter, std::span<const int> bundle,
                int lambda);
Value SatMedian(const Instance& instance, int voter,
                std::span<const int> bundle);

// Sum of the lambda largest utilities; all of them when |bundle| < lambda.
Value SatBest(const Instance& instance, int voter, std::span<const int> bundle,
              int lambda);
Value SatBest(const Instance& instance, int voter, std::span<const int> bundle);

// Satisfaction of one voter under the instance's rule.
Value Satisfaction(const Instance& instance, int voter,
                   std::span<const int> bundle);

Value TotalSatisfaction(const Instance& instance, std::span<const int> bundle);

Value BundleCost(const Instance& instance, std::span<const int> bundle);

// Sorts and deduplicates `items`, validates ids and fills in cost and value.
Bundle MakeBundle(const Instance& instance, std::vector<int> items);

bool IsFeasible(const Instance& instance, const Bundle& bundle);

// Lexicographic order on sorted item-index lists ({} < {0} < {0,1} < {0,2}).
bool LexLess(std::span<const int> a, std::span<const int> b);

}  // namespace mak

#endif  // MAK_SATISFACTION_H_
