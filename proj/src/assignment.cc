#include "mak/assignment.h"

#include <algorithm>
#include <limits>
#include <string>

#include "mak/errors.h"

namespace mak {
namespace {

constexpr Value kNegInf = std::numeric_limits<Value>::min() / 4;

}  // namespace

std::optional<PositionAssignment> AssignPositions(
    const std::vector<std::vector<Value>>& weights,
    std::span<const Value> costs, Value budget, const Caps& caps) {
  const int k = static_cast<int>(weights.size());
  const int m = static_cast<int>(costs.size());
  if (k > 20) throw SizeError("matching_max_k", "k = " + std::to_string(k));
  for (const auto& row : weights) {
    if (static_cast<int>(row.size()) != m) {
      throw InputError("weight row length differs from item count");
    }
  }
  if (budget < 0) return std::nullopt;
  if (k == 0) return PositionAssignment{};
  if (k > m) return std::nullopt;

  const std::size_t masks = std::size_t{1} << k;
  const std::size_t width = static_cast<std::size_t>(budget) + 1;
  const std::uint64_t cells = SatMul(SatMul(masks, width), m + 1);
  CheckCap("dp_max_cells", cells, caps.dp_max_cells);

  // table[mask * width + beta]: best weight filling `mask` with cost <= beta.
  std::vector<Value> table(masks * width, kNegInf);
  std::fill(table.begin(), table.begin() + width, 0);
  // choice[i][mask * width + beta]: position item i went to, or -1.
  std::vector<std::vector<std::int8_t>> choice(
      m, std::vector<std::int8_t>(masks * width, -1));

  for (int i = 0; i < m; ++i) {
    const Value c = costs[i];
    if (c > budget) continue;
    // Descending masks: every source mask is smaller, so still holds the
    // previous item's row.
    for (std::size_t mask = masks - 1; mask > 0; --mask) {
      for (std::size_t beta = width; beta-- > static_cast<std::size_t>(c);) {
        Value& cell = table[mask * width + beta];
        for (int l = 0; l < k; ++l) {
          if (!(mask >> l & 1)) continue;
          const Value from = table[(mask ^ (std::size_t{1} << l)) * width +
                                   (beta - static_cast<std::size_t>(c))];
          if (from == kNegInf) continue;
          const Value cand = from + weights[l][i];
          if (cand > cell) {
            cell = cand;
            choice[i][mask * width + beta] = static_cast<std::int8_t>(l);
          }
        }
      }
    }
  }

  const std::size_t full = masks - 1;
  const Value best = table[full * width + (width - 1)];
  if (best == kNegInf) return std::nullopt;

  PositionAssignment result;
  result.weight = best;
  result.states = cells;
  result.item_of_position.assign(k, -1);
  std::size_t mask = full;
  std::size_t beta = width - 1;
  for (int i = m - 1; i >= 0 && mask != 0; --i) {
    const int l = choice[i][mask * width + beta];
    if (l < 0) continue;
    result.item_of_position[l] = i;
    mask ^= std::size_t{1} << l;
    beta -= static_cast<std::size_t>(costs[i]);
  }
  if (mask != 0) throw InternalError("assignment backtracking incomplete");
  return result;
}

}  // namespace mak
