#ifndef MAK_ASSIGNMENT_H_
#define MAK_ASSIGNMENT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mak/caps.h"
#include "mak/instance.h"

namespace mak {

struct PositionAssignment {
  std::vector<int> item_of_position;  // size k, distinct items
  Value weight = 0;
  std::uint64_t states = 0;
};

// Maximum-weight injective map from k positions to items whose total item
// cost stays within `budget`. weights[l][p] is the gain of putting item p at
// position l. Runs a DP over (items seen, positions filled, budget used) in
// O(m * 2^k * b * k). Returns nullopt when no k distinct items fit the
// budget.
std::optional<PositionAssignment> AssignPositions(
    const std::vector<std::vector<Value>>& weights,
    std::span<const Value> costs, Value budget,
    const Caps& caps = DefaultCaps());

}  // namespace mak

#endif  // MAK_ASSIGNMENT_H_
