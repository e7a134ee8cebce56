#include "mak/oracle.h"

#include <bit>
#include <cstdint>
#include <string>

#include "mak/errors.h"

namespace mak {
namespace {

std::vector<int> MaskItems(std::uint32_t mask) {
  std::vector<int> items;
  while (mask != 0) {
    items.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return items;
}

}  // namespace

Solution BruteForceSolve(const Instance& instance, const Caps& caps) {
  const int m = instance.num_items();
  if (m > caps.oracle_max_items || m > 30) {
    throw SizeError("oracle_max_items",
                    "m = " + std::to_string(m) + " > " +
                        std::to_string(caps.oracle_max_items));
  }
  const std::uint32_t num_masks = std::uint32_t{1} << m;
  Solution best;  // empty bundle: always feasible
  best.bundle = MakeBundle(instance, {});
  std::vector<int> items;
  for (std::uint32_t mask = 1; mask < num_masks; ++mask) {
    Value cost = 0;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      cost += instance.cost(std::countr_zero(rest));
    }
    if (cost > instance.budget()) continue;
    items = MaskItems(mask);
    const Value value = TotalSatisfaction(instance, items);
    if (value > best.bundle.value ||
        (value == best.bundle.value && LexLess(items, best.bundle.items))) {
      best.bundle.items = items;
      best.bundle.cost = cost;
      best.bundle.value = value;
    }
  }
  best.stats.states = num_masks;
  return best;
}

}  // namespace mak
