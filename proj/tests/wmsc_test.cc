#include "mak/wmsc.h"

#include <algorithm>
#include <functional>
#include <limits>

#include <gtest/gtest.h>

#include "mak/assignment.h"
#include "mak/errors.h"
#include "mak/generators.h"

namespace mak {
namespace {

// Cheapest subfamily covering every element k times, by enumeration.
std::optional<Value> BruteForceWmsc(const WmscInstance& w) {
  const int f = static_cast<int>(w.sets.size());
  std::optional<Value> best;
  for (std::uint32_t mask = 0; mask < (1u << f); ++mask) {
    std::vector<int> count(w.universe_size, 0);
    Value cost = 0;
    for (int j = 0; j < f; ++j) {
      if (!(mask >> j & 1)) continue;
      cost += w.set_costs[j];
      for (int e = 0; e < w.universe_size; ++e) count[e] += w.sets[j][e];
    }
    bool ok = true;
    for (int c : count) ok = ok && c >= w.multiplicity;
    if (ok && (!best || cost < *best)) best = cost;
  }
  return best;
}

TEST(CoverageVectorTest, PackingAndSaturation) {
  CoverageVector cv(3, 2);
  EXPECT_EQ(cv.num_states(), 27u);
  EXPECT_EQ(cv.digit(cv.full(), 0), 2);
  EXPECT_EQ(cv.digit(cv.full(), 2), 2);
  const std::uint64_t once = cv.SaturatingMinus(cv.full(), {true, false, true});
  EXPECT_EQ(cv.digit(once, 0), 1);
  EXPECT_EQ(cv.digit(once, 1), 2);
  const std::uint64_t floor =
      cv.SaturatingMinus(cv.SaturatingMinus(once, {true, false, false}),
                         {true, false, false});
  EXPECT_EQ(cv.digit(floor, 0), 0);
}

TEST(WmscTest, Singletons) {
  WmscInstance w{.universe_size = 3,
                 .sets = {{true, false, false},
                          {false, true, false},
                          {false, false, true}},
                 .set_costs = {1, 1, 1},
                 .budget = 10,
                 .multiplicity = 1};
  const auto result = SolveWmsc(w);
  ASSERT_TRUE(result);
  EXPECT_EQ(result->total_cost, 3);
  EXPECT_EQ(result->selection, (std::vector<int>{0, 1, 2}));
}

TEST(WmscTest, TwoCheapest) {
  WmscInstance w{.universe_size = 1,
                 .sets = {{true}, {true}, {true}},
                 .set_costs = {5, 1, 2},
                 .budget = 10,
                 .multiplicity = 2};
  const auto result = SolveWmsc(w);
  ASSERT_TRUE(result);
  EXPECT_EQ(result->total_cost, 3);
  EXPECT_EQ(result->selection, (std::vector<int>{1, 2}));
}

TEST(WmscTest, Uncoverable) {
  WmscInstance w{.universe_size = 2,
                 .sets = {{true, false}},
                 .set_costs = {1},
                 .budget = 10,
                 .multiplicity = 1};
  EXPECT_FALSE(SolveWmsc(w));
}

TEST(WmscTest, Cap) {
  WmscInstance w{.universe_size = 2,
                 .sets = {{true, true}},
                 .set_costs = {1},
                 .budget = 10,
                 .multiplicity = 3};
  Caps caps;
  caps.wmsc_max_cells = 10;
  EXPECT_THROW(SolveWmsc(w, caps), SizeError);
}

TEST(WmscTest, MatchesEnumeration) {
  Rng rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    WmscInstance w;
    w.universe_size = static_cast<int>(rng.Uniform(1, 3));
    w.multiplicity = static_cast<int>(rng.Uniform(1, 3));
    w.budget = 100;
    const int f = static_cast<int>(rng.Uniform(1, 6));
    for (int j = 0; j < f; ++j) {
      std::vector<bool> set(w.universe_size);
      for (int e = 0; e < w.universe_size; ++e) set[e] = rng.Coin();
      w.sets.push_back(set);
      w.set_costs.push_back(rng.Uniform(1, 9));
    }
    const auto expected = BruteForceWmsc(w);
    const auto got = SolveWmsc(w);
    ASSERT_EQ(got.has_value(), expected.has_value());
    if (!got) continue;
    EXPECT_EQ(got->total_cost, *expected);
    Value cost = 0;
    std::vector<int> count(w.universe_size, 0);
    for (int j : got->selection) {
      cost += w.set_costs[j];
      for (int e = 0; e < w.universe_size; ++e) count[e] += w.sets[j][e];
    }
    EXPECT_EQ(cost, got->total_cost);
    for (int c : count) EXPECT_GE(c, w.multiplicity);
  }
}

// Best injective map of k positions into items, by enumeration.
std::optional<Value> BruteForceAssign(
    const std::vector<std::vector<Value>>& weights,
    const std::vector<Value>& costs, Value budget) {
  const int k = static_cast<int>(weights.size());
  const int m = static_cast<int>(costs.size());
  std::optional<Value> best;
  std::function<void(int, Value, Value, std::uint32_t)> go =
      [&](int l, Value weight, Value cost, std::uint32_t used) {
        if (cost > budget) return;
        if (l == k) {
          if (!best || weight > *best) best = weight;
          return;
        }
        for (int p = 0; p < m; ++p) {
          if (used >> p & 1) continue;
          go(l + 1, weight + weights[l][p], cost + costs[p], used | 1u << p);
        }
      };
  go(0, 0, 0, 0);
  return best;
}

TEST(AssignPositionsTest, SinglePosition) {
  const auto result = AssignPositions({{4, 9, 7}}, std::vector<Value>{1, 5, 2}, 3);
  ASSERT_TRUE(result);
  EXPECT_EQ(result->item_of_position, std::vector<int>{2});
  EXPECT_EQ(result->weight, 7);
}

TEST(AssignPositionsTest, OnlyOneAffordablePair) {
  const auto result = AssignPositions({{1, 2, 9}, {3, 1, 9}},
                                      std::vector<Value>{1, 1, 5}, 2);
  ASSERT_TRUE(result);
  EXPECT_EQ(result->item_of_position, (std::vector<int>{1, 0}));
  EXPECT_EQ(result->weight, 5);
  EXPECT_FALSE(AssignPositions({{1}, {1}}, std::vector<Value>{1}, 5));
}

TEST(AssignPositionsTest, MatchesEnumeration) {
  Rng rng(9);
  for (int trial = 0; trial < 150; ++trial) {
    const int k = static_cast<int>(rng.Uniform(1, 3));
    const int m = static_cast<int>(rng.Uniform(1, 5));
    std::vector<std::vector<Value>> weights(k, std::vector<Value>(m));
    for (auto& row : weights) {
      for (Value& w : row) w = rng.Uniform(0, 9);
    }
    std::vector<Value> costs(m);
    for (Value& c : costs) c = rng.Uniform(1, 4);
    const Value budget = rng.Uniform(0, 9);
    const auto expected = BruteForceAssign(weights, costs, budget);
    const auto got = AssignPositions(weights, costs, budget);
    ASSERT_EQ(got.has_value(), expected.has_value());
    if (!got) continue;
    EXPECT_EQ(got->weight, *expected);
    Value weight = 0;
    Value cost = 0;
    std::vector<int> items = got->item_of_position;
    for (int l = 0; l < k; ++l) {
      weight += weights[l][items[l]];
      cost += costs[items[l]];
    }
    std::sort(items.begin(), items.end());
    EXPECT_EQ(std::unique(items.begin(), items.end()), items.end());
    EXPECT_EQ(weight, got->weight);
    EXPECT_LE(cost, budget);
  }
}

}  // namespace
}  // namespace mak
