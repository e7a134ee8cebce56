#ifndef MAK_INSTANCE_H_
#define MAK_INSTANCE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mak {

using Value = std::int64_t;

// Aggregation of a voter's utilities over a bundle.
//   kDiverse: maximum utility in the bundle (lambda is always 1).
//   kMedian:  lambda-th largest utility, 0 if the bundle has < lambda items.
//   kBest:    sum of the lambda largest utilities.
enum class Rule { kDiverse, kMedian, kBest };

std::string_view RuleName(Rule rule);
// Throws InputError on unknown names.
Rule ParseRule(std::string_view name);

// Plain aggregate used to build (and rebuild) instances. Items and voters are
// addressed by their position in `item_ids` / `voter_ids`.
struct InstanceData {
  std::vector<std::string> item_ids;
  std::vector<Value> costs;
  std::vector<std::string> voter_ids;
  std::vector<std::vector<Value>> utils;  // utils[voter][item]
  Value budget = 0;
  int lambda = 1;
  Rule rule = Rule::kDiverse;
  std::optional<Value> target;
  std::optional<std::vector<int>> sc_order;  // voter indices
  std::optional<std::vector<int>> sp_axis;   // item indices

  friend bool operator==(const InstanceData&, const InstanceData&) = default;
};

// Validated, immutable multiagent knapsack instance.
//
// Invariants enforced on construction (InputError otherwise):
//   n >= 1, lambda >= 1, diverse implies lambda == 1, every cost >= 1, every
//   utility >= 0, budget >= 0, one utility row of length m per voter, unique
//   ids, orderings (when present) are permutations.
// An empty item set is allowed so that normalization can remove every item.
class Instance {
 public:
  explicit Instance(InstanceData data);

  int num_items() const { return static_cast<int>(data_.item_ids.size()); }
  int num_voters() const { return static_cast<int>(data_.voter_ids.size()); }

  Value cost(int item) const { return data_.costs[item]; }
  Value util(int voter, int item) const { return data_.utils[voter][item]; }
  std::span<const Value> utils_of(int voter) const { return data_.utils[voter]; }
  std::span<const Value> costs() const { return data_.costs; }

  Value budget() const { return data_.budget; }
  int lambda() const { return data_.lambda; }
  Rule rule() const { return data_.rule; }
  const std::optional<Value>& target() const { return data_.target; }
  const std::optional<std::vector<int>>& sc_order() const {
    return data_.sc_order;
  }
  const std::optional<std::vector<int>>& sp_axis() const {
    return data_.sp_axis;
  }

  const std::string& item_id(int item) const { return data_.item_ids[item]; }
  const std::string& voter_id(int voter) const {
    return data_.voter_ids[voter];
  }
  // -1 when absent.
  int FindItem(std::string_view id) const;
  int FindVoter(std::string_view id) const;

  const InstanceData& data() const { return data_; }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.data_ == b.data_;
  }

 private:
  InstanceData data_;
};

struct InstanceStats {
  Value u_max = 0;  // max utility over all voters and items
  Value u_bar = 0;  // sum over voters of their maximum utility
  Value u_hat = 0;  // sum of all utilities
};

InstanceStats ComputeStats(const Instance& instance);

// Returns a copy with a different rule / lambda (validated as usual).
Instance WithRule(const Instance& instance, Rule rule, int lambda);
Instance WithBudget(const Instance& instance, Value budget);

struct NormalizeResult {
  Instance instance;
  std::vector<std::string> removed_items;
  // Every item was removed and a positive target was requested.
  bool trivially_infeasible = false;
};

// Drops every item whose cost exceeds the budget. Utilities and the
// single-peaked axis are restricted accordingly.
NormalizeResult Normalize(const Instance& instance);

}  // namespace mak

#endif  // MAK_INSTANCE_H_
