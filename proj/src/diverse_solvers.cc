#include "mak/diverse_solvers.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>
#include <utility>

#include "mak/errors.h"
#include "mak/profiles.h"
#include "mak/satisfaction.h"

namespace mak {
namespace {

constexpr Value kInf = std::numeric_limits<Value>::max() / 4;
constexpr Value kNegInf = std::numeric_limits<Value>::min() / 4;

void RequireDiverse(const Instance& instance, const char* solver) {
  if (instance.rule() != Rule::kDiverse) {
    throw InputError(std::string(solver) + " requires the diverse rule");
  }
}

Value ProfitOf(const Instance& instance, std::uint32_t voters, int item) {
  Value total = 0;
  for (int v = 0; v < instance.num_voters(); ++v) {
    if (voters >> v & 1) total += instance.util(v, item);
  }
  return total;
}

// Block DP along a voter order. `primary[v][p]` is maximized; with cost
// indexing, `secondary` (when non-null) breaks ties.
struct BlockDp {
  const std::vector<int>& order;
  const std::vector<std::vector<Value>>& primary;
  const std::vector<std::vector<Value>>* secondary;
  std::span<const Value> costs;
  Value budget;
  const Caps& caps;

  std::uint64_t states = 0;

  int n() const { return static_cast<int>(order.size()); }
  int m() const { return static_cast<int>(costs.size()); }

  // prefix[p][i]: sum of table[order[0..i)][p].
  std::vector<std::vector<Value>> Prefix(
      const std::vector<std::vector<Value>>& table) const {
    std::vector<std::vector<Value>> prefix(m(), std::vector<Value>(n() + 1, 0));
    for (int p = 0; p < m(); ++p) {
      for (int i = 0; i < n(); ++i) {
        prefix[p][i + 1] = prefix[p][i] + table[order[i]][p];
      }
    }
    return prefix;
  }

  std::vector<int> RunCostIndexed() {
    const std::size_t width = static_cast<std::size_t>(budget) + 1;
    CheckCap("dp_max_cells",
             SatMul(SatMul(n() + 1, width), SatMul(n(), m())),
             caps.dp_max_cells);
    const auto pre1 = Prefix(primary);
    const auto pre2 = secondary ? Prefix(*secondary) : pre1;
    using Score = std::pair<Value, Value>;
    const Score none{kNegInf, kNegInf};
    std::vector<Score> table((n() + 1) * width, none);
    std::vector<std::pair<int, int>> parent((n() + 1) * width, {-1, -1});
    std::fill(table.begin(), table.begin() + width, Score{0, 0});
    for (int i = 1; i <= n(); ++i) {
      for (std::size_t beta = 0; beta < width; ++beta) {
        Score& cell = table[i * width + beta];
        for (int j = 0; j < i; ++j) {
          for (int p = 0; p < m(); ++p) {
            if (costs[p] > static_cast<Value>(beta)) continue;
            const Score& from = table[j * width + beta - costs[p]];
            if (from.first == kNegInf) continue;
            const Score cand{from.first + pre1[p][i] - pre1[p][j],
                             from.second + pre2[p][i] - pre2[p][j]};
            if (cand > cell) {
              cell = cand;
              parent[i * width + beta] = {j, p};
            }
          }
        }
      }
    }
    states = (n() + 1) * width;
    std::vector<int> items;
    std::size_t beta = width - 1;
    if (table[n() * width + beta].first == kNegInf) return items;
    for (int i = n(); i > 0;) {
      const auto [j, p] = parent[i * width + beta];
      items.push_back(p);
      beta -= static_cast<std::size_t>(costs[p]);
      i = j;
    }
    return items;
  }

  std::vector<int> RunUtilityIndexed() {
    Value dim = 0;
    for (int v = 0; v < n(); ++v) {
      Value best = 0;
      for (int p = 0; p < m(); ++p) {
        if (costs[p] <= budget) best = std::max(best, primary[v][p]);
      }
      dim += best;
    }
    const std::size_t width = static_cast<std::size_t>(dim) + 1;
    CheckCap("dp_max_cells",
             SatMul(SatMul(n() + 1, width), SatMul(n(), m())),
             caps.dp_max_cells);
    const auto pre = Prefix(primary);
    std::vector<Value> table((n() + 1) * width, kInf);
    std::vector<std::pair<int, int>> parent((n() + 1) * width, {-1, -1});
    table[0] = 0;
    for (int i = 1; i <= n(); ++i) {
      for (int j = 0; j < i; ++j) {
        for (int p = 0; p < m(); ++p) {
          if (costs[p] > budget) continue;
          const Value gain = pre[p][i] - pre[p][j];
          for (std::size_t alpha = static_cast<std::size_t>(gain);
               alpha < width; ++alpha) {
            const Value from = table[j * width + alpha - gain];
            if (from == kInf) continue;
            const Value cand = from + costs[p];
            Value& cell = table[i * width + alpha];
            if (cand < cell) {
              cell = cand;
              parent[i * width + alpha] = {j, p};
            }
          }
        }
      }
    }
    states = (n() + 1) * width;
    std::vector<int> items;
    std::size_t alpha = width;
    while (alpha-- > 0) {
      if (table[n() * width + alpha] <= budget) break;
    }
    if (alpha == static_cast<std::size_t>(-1)) return items;
    for (int i = n(); i > 0;) {
      const auto [j, p] = parent[i * width + alpha];
      items.push_back(p);
      alpha -= static_cast<std::size_t>(pre[p][i] - pre[p][j]);
      i = j;
    }
    return items;
  }
};

std::vector<std::vector<Value>> UtilityTable(const Instance& instance) {
  return instance.data().utils;
}

}  // namespace

Solution SolveDiverseUnanimous(const Instance& instance) {
  RequireDiverse(instance, "unanimous solver");
  const NormalizeResult normalized = Normalize(instance);
  Solution result;
  result.stats.states = instance.num_items();
  if (normalized.instance.num_items() == 0) {
    result.bundle = MakeBundle(instance, {});
    return result;
  }
  const std::optional<int> top = CommonTopItem(normalized.instance);
  if (!top) throw InputError("profile is not unanimous over affordable items");
  result.bundle = MakeBundle(
      instance, {instance.FindItem(normalized.instance.item_id(*top))});
  return result;
}

KpCoverSolution SolveDiverseKpCover(const Instance& instance,
                                    KpCoverIndexing indexing,
                                    const Caps& caps) {
  RequireDiverse(instance, "kp-cover solver");
  const int n = instance.num_voters();
  const int m = instance.num_items();
  if (n > 20) throw SizeError("kpcover_max_cells", "n = " + std::to_string(n));
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  const std::size_t subsets = std::size_t{1} << n;
  const Value b = instance.budget();
  const Value u_bar = ComputeStats(instance).u_bar;
  const Value dim = indexing == KpCoverIndexing::kProfit ? u_bar + 1 : b + 1;
  CheckCap("kpcover_max_cells",
           SatMul(SatMul(subsets, SatMul(subsets, m)), dim),
           caps.kpcover_max_cells);

  const std::size_t width = static_cast<std::size_t>(dim);
  const bool by_profit = indexing == KpCoverIndexing::kProfit;
  std::vector<Value> table(subsets * width, by_profit ? kInf : kNegInf);
  if (by_profit) {
    table[0] = 0;
  } else {
    std::fill(table.begin(), table.begin() + width, 0);
  }
  std::vector<CoverPart> parent(subsets * width);
  std::vector<Value> profit(subsets);

  for (int r = 0; r < m; ++r) {
    const Value c = instance.cost(r);
    if (c > b) continue;
    profit[0] = 0;
    for (std::uint32_t x = 1; x <= full; ++x) {
      const int low = std::countr_zero(x);
      profit[x] = profit[x & (x - 1)] + instance.util(low, r);
    }
    for (std::uint32_t x = 1; x <= full; ++x) {
      const Value gain = profit[x];
      const std::uint32_t comp = full ^ x;
      // S = x | t with t disjoint from x; row t is never written for this x.
      for (std::uint32_t t = comp;; t = (t - 1) & comp) {
        const std::size_t s = x | t;
        if (by_profit) {
          for (Value j = dim - 1; j >= gain; --j) {
            const Value from = table[t * width + (j - gain)];
            if (from == kInf) continue;
            Value& cell = table[s * width + j];
            if (from + c < cell) {
              cell = from + c;
              parent[s * width + j] = {x, r};
            }
          }
        } else {
          for (Value beta = dim - 1; beta >= c; --beta) {
            const Value from = table[t * width + (beta - c)];
            if (from == kNegInf) continue;
            Value& cell = table[s * width + beta];
            if (from + gain > cell) {
              cell = from + gain;
              parent[s * width + beta] = {x, r};
            }
          }
        }
        if (t == 0) break;
      }
    }
  }

  KpCoverSolution result;
  result.solution.stats.states = SatMul(subsets, width);
  Value column = -1;
  Value best = -1;
  if (by_profit) {
    for (Value j = dim - 1; j >= 0; --j) {
      if (table[full * width + j] <= b) {
        column = j;
        best = j;
        break;
      }
    }
  } else if (table[full * width + (width - 1)] != kNegInf) {
    column = dim - 1;
    best = table[full * width + column];
  }
  std::vector<int> items;
  if (column >= 0) {
    std::uint32_t s = full;
    Value j = column;
    while (s != 0) {
      const CoverPart part = parent[s * width + j];
      if (part.item < 0 || (part.voters & ~s) != 0) {
        throw InternalError("kp-cover backtracking failed");
      }
      result.parts.push_back(part);
      items.push_back(part.item);
      s ^= part.voters;
      j -= by_profit ? ProfitOf(instance, part.voters, part.item)
                     : instance.cost(part.item);
    }
    std::uint32_t seen = 0;
    for (const CoverPart& part : result.parts) {
      if (seen & part.voters) throw InternalError("kp-cover parts overlap");
      seen |= part.voters;
    }
    if (seen != full) throw InternalError("kp-cover parts miss voters");
  }
  result.solution.bundle = MakeBundle(instance, std::move(items));
  if (result.solution.bundle.cost > b ||
      (best >= 0 && result.solution.bundle.value < best)) {
    throw InternalError("kp-cover witness does not certify its value");
  }
  return result;
}

Solution SolveDiverseSingleCrossing(const Instance& instance,
                                    const std::vector<int>& sigma,
                                    BlockDpIndexing indexing,
                                    const Caps& caps) {
  RequireDiverse(instance, "single-crossing solver");
  if (!VerifySingleCrossing(instance, sigma)) {
    throw InputError("voter order is not single-crossing");
  }
  const auto utils = UtilityTable(instance);
  BlockDp dp{sigma, utils, nullptr, instance.costs(), instance.budget(), caps};
  std::vector<int> items = indexing == BlockDpIndexing::kCost
                               ? dp.RunCostIndexed()
                               : dp.RunUtilityIndexed();
  Solution result;
  result.bundle = MakeBundle(instance, std::move(items));
  result.stats.states = dp.states;
  return result;
}

Rational ParseRational(const std::string& text) {
  Rational r;
  const std::size_t slash = text.find('/');
  auto parse = [&](std::string_view part, std::int64_t& out) {
    const char* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, out);
    if (part.empty() || ec != std::errc() || ptr != end) {
      throw InputError("malformed rational '" + text + "'");
    }
  };
  const std::string_view view(text);
  if (slash == std::string::npos) {
    parse(view, r.num);
    r.den = 1;
  } else {
    parse(view.substr(0, slash), r.num);
    parse(view.substr(slash + 1), r.den);
  }
  if (r.den <= 0) throw InputError("rational denominator must be positive");
  return r;
}

std::string FormatRational(const Rational& value) {
  return std::to_string(value.num) + "/" + std::to_string(value.den);
}

std::vector<std::vector<Value>> ScaleUtilities(const Instance& instance,
                                               const Rational& epsilon) {
  if (epsilon.num <= 0 || epsilon.den <= 0) {
    throw InputError("epsilon must be positive");
  }
  const int n = instance.num_voters();
  const int m = instance.num_items();
  Value u_max = 0;
  for (int v = 0; v < n; ++v) {
    for (int p = 0; p < m; ++p) {
      if (instance.cost(p) <= instance.budget()) {
        u_max = std::max(u_max, instance.util(v, p));
      }
    }
  }
  std::vector<std::vector<Value>> scaled(n, std::vector<Value>(m, 0));
  if (u_max == 0) return scaled;
  // util / s = util * den * 2n / (num * u_max)
  const __int128 denom = static_cast<__int128>(epsilon.num) * u_max;
  for (int v = 0; v < n; ++v) {
    for (int p = 0; p < m; ++p) {
      const __int128 numer =
          static_cast<__int128>(instance.util(v, p)) * epsilon.den * 2 * n;
      const __int128 q = (numer + denom - 1) / denom;
      if (q > std::numeric_limits<Value>::max() / 4) {
        throw SizeError("dp_max_cells", "scaled utility overflows");
      }
      scaled[v][p] = static_cast<Value>(q);
    }
  }
  return scaled;
}

Solution SolveDiverseFptas(const Instance& instance,
                           const std::vector<int>& sigma,
                           const Rational& epsilon, BlockDpIndexing indexing,
                           const Caps& caps) {
  RequireDiverse(instance, "fptas");
  if (epsilon.num <= 0 || epsilon.den <= 0 || epsilon.num > epsilon.den) {
    throw InputError("epsilon must lie in (0, 1], got " +
                     FormatRational(epsilon));
  }
  if (!VerifySingleCrossing(instance, sigma)) {
    throw InputError("voter order is not single-crossing");
  }
  // The scaled profile may lose single-crossing through ties; not re-checked.
  const auto scaled = ScaleUtilities(instance, epsilon);
  const auto utils = UtilityTable(instance);
  BlockDp dp{sigma,
             scaled,
             indexing == BlockDpIndexing::kCost ? &utils : nullptr,
             instance.costs(),
             instance.budget(),
             caps};
  std::vector<int> items = indexing == BlockDpIndexing::kCost
                               ? dp.RunCostIndexed()
                               : dp.RunUtilityIndexed();
  Solution result;
  result.bundle = MakeBundle(instance, std::move(items));
  result.stats.states = dp.states;
  return result;
}

}  // namespace mak
