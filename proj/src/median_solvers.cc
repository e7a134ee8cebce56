#include "mak/median_solvers.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "mak/assignment.h"
#include "mak/errors.h"
#include "mak/profiles.h"
#include "mak/wmsc.h"

namespace mak {
namespace {

constexpr Value kNegInf = std::numeric_limits<Value>::min() / 4;
constexpr Value kInf = std::numeric_limits<Value>::max() / 4;

// Representative guessing search state.
class XpSearch {
 public:
  XpSearch(const Instance& instance, const Caps& caps)
      : instance_(instance), caps_(caps), n_(instance.num_voters()) {
    levels_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      std::vector<Value> levels(instance.utils_of(v).begin(),
                                instance.utils_of(v).end());
      std::sort(levels.begin(), levels.end(), std::greater<>());
      levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
      levels_[v] = std::move(levels);
    }
    // suffix_max_[v] = sum of the top levels of voters v..n-1.
    suffix_max_.assign(n_ + 1, 0);
    for (int v = n_ - 1; v >= 0; --v) {
      suffix_max_[v] =
          suffix_max_[v + 1] + (levels_[v].empty() ? 0 : levels_[v].front());
    }
    threshold_.assign(n_, 0);
  }

  std::uint64_t NumGuesses() const {
    std::uint64_t total = 1;
    for (const auto& levels : levels_) total = SatMul(total, levels.size());
    return total;
  }

  Solution Run() {
    Solution best;
    best.bundle = MakeBundle(instance_, {});
    std::vector<Value> costs(instance_.costs().begin(),
                             instance_.costs().end());
    std::sort(costs.begin(), costs.end());
    for (int p = 0; p < instance_.num_items(); ++p) {
      if (instance_.cost(p) <= instance_.budget()) family_items_.push_back(p);
    }
    const int lambda = instance_.lambda();
    if (static_cast<int>(costs.size()) >= lambda &&
        std::accumulate(costs.begin(), costs.begin() + lambda, Value{0}) <=
            instance_.budget()) {
      Recurse(0, 0);
    }
    if (best_selection_) {
      std::vector<int> items;
      for (int j : *best_selection_) items.push_back(family_items_[j]);
      best.bundle = MakeBundle(instance_, std::move(items));
    }
    best.stats.states = states_;
    return best;
  }

 private:
  void Recurse(int v, Value partial) {
    if (partial + suffix_max_[v] <= best_sum_) return;
    if (v == n_) {
      Evaluate(partial);
      return;
    }
    for (Value level : levels_[v]) {
      threshold_[v] = level;
      Recurse(v + 1, partial + level);
    }
  }

  void Evaluate(Value guess_sum) {
    ++states_;
    const int m = instance_.num_items();
    const int lambda = instance_.lambda();
    WmscInstance wmsc;
    wmsc.universe_size = n_;
    wmsc.multiplicity = lambda;
    wmsc.budget = instance_.budget();
    std::vector<int> coverage(n_, 0);
    for (int p = 0; p < m; ++p) {
      if (instance_.cost(p) > instance_.budget()) continue;
      std::vector<bool> set(n_);
      for (int v = 0; v < n_; ++v) {
        set[v] = instance_.util(v, p) >= threshold_[v];
        coverage[v] += set[v];
      }
      wmsc.sets.push_back(std::move(set));
      wmsc.set_costs.push_back(instance_.cost(p));
    }
    for (int v = 0; v < n_; ++v) {
      if (coverage[v] < lambda) return;
    }
    std::optional<WmscSolution> cover = SolveWmsc(wmsc, caps_);
    cells_ += SatMul(SatPow(lambda + 1, n_), wmsc.sets.size());
    CheckCap("xp_max_cells", cells_, caps_.xp_max_cells);
    if (!cover) return;
    states_ += cover->states;
    if (cover->total_cost > instance_.budget()) return;
    best_sum_ = guess_sum;
    best_selection_ = cover->selection;
  }

  const Instance& instance_;
  const Caps& caps_;
  const int n_;
  std::vector<std::vector<Value>> levels_;
  std::vector<Value> suffix_max_;
  std::vector<Value> threshold_;
  Value best_sum_ = -1;
  std::optional<std::vector<int>> best_selection_;
  std::vector<int> family_items_;  // family index -> item
  std::uint64_t cells_ = 0;
  std::uint64_t states_ = 0;
};

// Canonical column multisets for the best-rule indicator matrices.
class ColumnGuesses {
 public:
  ColumnGuesses(int num_voters, int k, int ones_per_voter,
                std::uint64_t limit)
      : n_(num_voters), k_(k), limit_(limit),
        remaining_(num_voters, ones_per_voter) {}

  template <typename Visit>
  void ForEach(Visit&& visit) {
    columns_.clear();
    Recurse(1, visit);
  }

  std::uint64_t count() const { return count_; }

 private:
  template <typename Visit>
  void Recurse(std::uint32_t min_column, Visit& visit) {
    const int placed = static_cast<int>(columns_.size());
    if (placed == k_) {
      for (int r : remaining_) {
        if (r != 0) return;
      }
      if (++count_ > limit_) {
        throw SizeError("matching_max_guesses",
                        "more than " + std::to_string(limit_) + " guesses");
      }
      visit(columns_);
      return;
    }
    // Every voter still needs `remaining` ones in k - placed columns.
    for (int r : remaining_) {
      if (r > k_ - placed) return;
    }
    const std::uint32_t end = std::uint32_t{1} << n_;
    for (std::uint32_t col = min_column; col < end; ++col) {
      bool ok = true;
      for (int v = 0; v < n_ && ok; ++v) {
        if (col >> v & 1) ok = remaining_[v] > 0;
      }
      if (!ok) continue;
      for (int v = 0; v < n_; ++v) remaining_[v] -= col >> v & 1;
      columns_.push_back(col);
      Recurse(col, visit);
      columns_.pop_back();
      for (int v = 0; v < n_; ++v) remaining_[v] += col >> v & 1;
    }
  }

  int n_;
  int k_;
  std::uint64_t limit_;
  std::vector<int> remaining_;
  std::vector<std::uint32_t> columns_;
  std::uint64_t count_ = 0;
};

Solution MatchingBest(const Instance& instance, int lambda, int max_k,
                      const Caps& caps) {
  const int n = instance.num_voters();
  const int m = instance.num_items();
  Solution best;
  best.bundle = MakeBundle(instance, {});
  Value best_weight = 0;
  std::uint64_t guesses = 0;
  std::uint64_t cells = 0;
  for (int k = 1; k <= max_k && k <= n * lambda; ++k) {
    const int ones = std::min(lambda, k);
    ColumnGuesses columns(n, k, ones, caps.matching_max_guesses - guesses);
    columns.ForEach([&](const std::vector<std::uint32_t>& cols) {
      std::vector<std::vector<Value>> weights(k, std::vector<Value>(m, 0));
      for (int l = 0; l < k; ++l) {
        for (int v = 0; v < n; ++v) {
          if (!(cols[l] >> v & 1)) continue;
          for (int p = 0; p < m; ++p) weights[l][p] += instance.util(v, p);
        }
      }
      cells += SatMul(SatMul(std::uint64_t{1} << k, instance.budget() + 1),
                      m + 1);
      CheckCap("matching_max_cells", cells, caps.matching_max_cells);
      std::optional<PositionAssignment> match =
          AssignPositions(weights, instance.costs(), instance.budget(), caps);
      if (!match) return;
      best.stats.states += match->states;
      if (match->weight > best_weight) {
        best_weight = match->weight;
        best.bundle = MakeBundle(instance, match->item_of_position);
      }
    });
    guesses += columns.count();
  }
  best.stats.states += guesses;
  if (best.bundle.value < best_weight) {
    throw InternalError("matching weight exceeds bundle satisfaction");
  }
  return best;
}

// Median rule: enumerate (ranking guess, matching) pairs that are
// consistent with each other. Positions are labeled by the first voter's
// ranking, so the matched items form a subsequence of that ranking; every
// other voter's ranking psi_i is the projection of the matched items.
class ConsistentMatchingSearch {
 public:
  ConsistentMatchingSearch(const Instance& instance, int max_k,
                           const Caps& caps)
      : instance_(instance), caps_(caps), max_k_(max_k),
        lambda_(instance.lambda()) {
    order_.resize(instance.num_items());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return instance.util(0, a) > instance.util(0, b);
    });
  }

  Solution Run() {
    best_.bundle = MakeBundle(instance_, {});
    Recurse(0, 0);
    best_.stats.states = nodes_;
    return best_;
  }

 private:
  void Recurse(std::size_t next, Value cost) {
    if (++nodes_ > caps_.matching_max_guesses) {
      throw SizeError("matching_max_guesses",
                      "more than " +
                          std::to_string(caps_.matching_max_guesses) +
                          " (guess, matching) pairs");
    }
    if (static_cast<int>(positions_.size()) >= lambda_) Score();
    if (static_cast<int>(positions_.size()) == max_k_) return;
    for (std::size_t i = next; i < order_.size(); ++i) {
      const int p = order_[i];
      if (cost + instance_.cost(p) > instance_.budget()) continue;
      positions_.push_back(p);
      Recurse(i + 1, cost + instance_.cost(p));
      positions_.pop_back();
    }
  }

  // Weight of the matching under the projected rankings:
  // sum over voters of util_v(item at the position ranked lambda-th).
  void Score() {
    const int k = static_cast<int>(positions_.size());
    std::vector<int> rank(k);
    Value weight = 0;
    for (int v = 0; v < instance_.num_voters(); ++v) {
      std::iota(rank.begin(), rank.end(), 0);
      std::stable_sort(rank.begin(), rank.end(), [&](int a, int b) {
        return instance_.util(v, positions_[a]) >
               instance_.util(v, positions_[b]);
      });
      // rank[r] is the position psi_v maps to r+1.
      weight += instance_.util(v, positions_[rank[lambda_ - 1]]);
    }
    if (weight > best_.bundle.value) {
      best_.bundle = MakeBundle(instance_, positions_);
      if (best_.bundle.value != weight) {
        throw InternalError("consistent matching weight differs from value");
      }
    }
  }

  const Instance& instance_;
  const Caps& caps_;
  const int max_k_;
  const int lambda_;
  std::vector<int> order_;
  std::vector<int> positions_;
  Solution best_;
  std::uint64_t nodes_ = 0;
};

void RequireRule(const Instance& instance, std::initializer_list<Rule> rules,
                 const char* solver) {
  for (Rule r : rules) {
    if (instance.rule() == r) return;
  }
  throw InputError(std::string(solver) + " does not support the " +
                   std::string(RuleName(instance.rule())) + " rule");
}

}  // namespace

Solution SolveMedianXp(const Instance& instance, const Caps& caps) {
  RequireRule(instance, {Rule::kMedian, Rule::kDiverse}, "xp");
  XpSearch search(instance, caps);
  CheckCap("xp_max_guesses", search.NumGuesses(), caps.xp_max_guesses);
  return search.Run();
}

Solution SolveMatchingFpt(const Instance& instance, const Caps& caps) {
  const int n = instance.num_voters();
  if (n > caps.matching_max_voters) {
    throw SizeError("matching_max_voters",
                    "n = " + std::to_string(n) + " > " +
                        std::to_string(caps.matching_max_voters));
  }
  const Value budget_bound = std::min<Value>(instance.budget(),
                                             instance.num_items());
  const int max_k = static_cast<int>(budget_bound);
  if (max_k > caps.matching_max_k) {
    throw SizeError("matching_max_k",
                    "min(b, m) = " + std::to_string(max_k) + " > " +
                        std::to_string(caps.matching_max_k));
  }
  switch (instance.rule()) {
    case Rule::kBest:
      return MatchingBest(instance, instance.lambda(), max_k, caps);
    case Rule::kDiverse:
      return MatchingBest(instance, 1, max_k, caps);
    case Rule::kMedian:
      return ConsistentMatchingSearch(instance, max_k, caps).Run();
  }
  return {};
}

Solution SolveBestSingleVoter(const Instance& instance,
                              SingleVoterIndexing indexing, const Caps& caps) {
  if (instance.rule() != Rule::kBest) {
    throw InputError("single-voter knapsack requires the best rule");
  }
  if (instance.num_voters() != 1) {
    throw InputError("single-voter knapsack requires exactly one voter");
  }
  const int m = instance.num_items();
  const int kmax = std::min(instance.lambda(), m);
  const Value b = instance.budget();
  std::span<const Value> utils = instance.utils_of(0);
  Solution result;

  if (indexing == SingleVoterIndexing::kBudget) {
    const std::size_t width = static_cast<std::size_t>(b) + 1;
    const std::size_t layer = width * (kmax + 1);
    CheckCap("dp_max_cells", SatMul(layer, m + 1), caps.dp_max_cells);
    // t[i][j * (kmax+1) + k]
    std::vector<std::vector<Value>> t(m + 1, std::vector<Value>(layer, kNegInf));
    for (std::size_t j = 0; j < width; ++j) t[0][j * (kmax + 1)] = 0;
    for (int i = 1; i <= m; ++i) {
      const Value c = instance.cost(i - 1);
      for (std::size_t j = 0; j < width; ++j) {
        for (int k = 0; k <= kmax; ++k) {
          Value best = t[i - 1][j * (kmax + 1) + k];
          if (k > 0 && static_cast<Value>(j) >= c) {
            const Value from =
                t[i - 1][(j - static_cast<std::size_t>(c)) * (kmax + 1) + k - 1];
            if (from != kNegInf) best = std::max(best, from + utils[i - 1]);
          }
          t[i][j * (kmax + 1) + k] = best;
        }
      }
    }
    int best_k = 0;
    for (int k = 1; k <= kmax; ++k) {
      if (t[m][b * (kmax + 1) + k] > t[m][b * (kmax + 1) + best_k]) best_k = k;
    }
    std::vector<int> items;
    std::size_t j = static_cast<std::size_t>(b);
    int k = best_k;
    for (int i = m; i >= 1 && k > 0; --i) {
      if (t[i][j * (kmax + 1) + k] == t[i - 1][j * (kmax + 1) + k]) continue;
      items.push_back(i - 1);
      j -= static_cast<std::size_t>(instance.cost(i - 1));
      --k;
    }
    result.bundle = MakeBundle(instance, std::move(items));
    result.stats.states = SatMul(layer, m + 1);
    return result;
  }

  // Utility-indexed: minimum cost of exactly k items with utility exactly a.
  std::vector<Value> sorted(utils.begin(), utils.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const Value cap_utility =
      std::accumulate(sorted.begin(), sorted.begin() + kmax, Value{0});
  const std::size_t width = static_cast<std::size_t>(cap_utility) + 1;
  const std::size_t layer = width * (kmax + 1);
  CheckCap("dp_max_cells", SatMul(layer, m + 1), caps.dp_max_cells);
  std::vector<std::vector<Value>> t(m + 1, std::vector<Value>(layer, kInf));
  t[0][0] = 0;
  for (int i = 1; i <= m; ++i) {
    const Value u = utils[i - 1];
    const Value c = instance.cost(i - 1);
    for (std::size_t a = 0; a < width; ++a) {
      for (int k = 0; k <= kmax; ++k) {
        Value best = t[i - 1][a * (kmax + 1) + k];
        if (k > 0 && static_cast<Value>(a) >= u) {
          const Value from =
              t[i - 1][(a - static_cast<std::size_t>(u)) * (kmax + 1) + k - 1];
          if (from != kInf) best = std::min(best, from + c);
        }
        t[i][a * (kmax + 1) + k] = best;
      }
    }
  }
  std::size_t best_a = 0;
  int best_k = 0;
  for (std::size_t a = 0; a < width; ++a) {
    for (int k = 0; k <= kmax; ++k) {
      if (t[m][a * (kmax + 1) + k] <= b) {
        best_a = a;
        best_k = k;
        break;
      }
    }
  }
  std::vector<int> items;
  std::size_t a = best_a;
  int k = best_k;
  for (int i = m; i >= 1 && k > 0; --i) {
    if (t[i][a * (kmax + 1) + k] == t[i - 1][a * (kmax + 1) + k]) continue;
    items.push_back(i - 1);
    a -= static_cast<std::size_t>(utils[i - 1]);
    --k;
  }
  result.bundle = MakeBundle(instance, std::move(items));
  result.stats.states = SatMul(layer, m + 1);
  return result;
}

Solution SolveStronglyUnanimous(const Instance& instance, const Caps& caps) {
  if (!IsStronglyUnanimous(instance)) {
    throw InputError("profile is not strongly unanimous");
  }
  const Instance merged = MergeIdenticalVoters(instance).instance;
  Solution inner = instance.rule() == Rule::kBest
                       ? SolveBestSingleVoter(merged,
                                              SingleVoterIndexing::kBudget,
                                              caps)
                       : SolveMedianXp(merged, caps);
  Solution result;
  result.bundle = MakeBundle(instance, inner.bundle.items);
  result.stats = inner.stats;
  return result;
}

Instance LiftDiverseToMedian(const Instance& instance, int target_lambda) {
  if (instance.rule() != Rule::kDiverse) {
    throw InputError("lifting requires a diverse instance");
  }
  if (target_lambda < 1) throw InputError("target lambda must be >= 1");
  if (target_lambda == 1) return instance;

  InstanceData data = instance.data();
  const Value u_max = ComputeStats(instance).u_max;
  const int m = instance.num_items();
  for (int j = m + 1; j <= m + target_lambda - 1; ++j) {
    std::string id = "lift" + std::to_string(j - m);
    while (instance.FindItem(id) >= 0) id += "_";
    data.item_ids.push_back(id);
    data.costs.push_back(1);
    for (auto& row : data.utils) row.push_back(u_max + j - m);
  }
  data.budget += target_lambda - 1;
  data.rule = Rule::kMedian;
  data.lambda = target_lambda;
  data.sp_axis.reset();
  return Instance(std::move(data));
}

}  // namespace mak
