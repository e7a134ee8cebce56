#include "mak/instance.h"

#include <algorithm>
#include <set>
#include <utility>

#include "mak/errors.h"

namespace mak {
namespace {

void CheckPermutation(const std::vector<int>& order, int size,
                      const std::string& what) {
  if (static_cast<int>(order.size()) != size) {
    throw InputError(what + " must list each of the " + std::to_string(size) +
                     " entries exactly once");
  }
  std::vector<char> seen(size, 0);
  for (int x : order) {
    if (x < 0 || x >= size || seen[x]) {
      throw InputError(what + " is not a permutation");
    }
    seen[x] = 1;
  }
}

void CheckUniqueIds(const std::vector<std::string>& ids,
                    const std::string& what) {
  std::set<std::string> seen;
  for (const std::string& id : ids) {
    if (!seen.insert(id).second) {
      throw InputError("duplicate " + what + " id '" + id + "'");
    }
  }
}

}  // namespace

std::string_view RuleName(Rule rule) {
  switch (rule) {
    case Rule::kDiverse:
      return "diverse";
    case Rule::kMedian:
      return "median";
    case Rule::kBest:
      return "best";
  }
  return "?";
}

Rule ParseRule(std::string_view name) {
  if (name == "diverse") return Rule::kDiverse;
  if (name == "median") return Rule::kMedian;
  if (name == "best") return Rule::kBest;
  throw InputError("unknown rule '" + std::string(name) +
                   "' (expected diverse, median or best)");
}

Instance::Instance(InstanceData data) : data_(std::move(data)) {
  const int m = num_items();
  const int n = num_voters();
  if (n < 1) throw InputError("instance needs at least one voter");
  if (static_cast<int>(data_.costs.size()) != m) {
    throw InputError("cost list length differs from item count");
  }
  if (static_cast<int>(data_.utils.size()) != n) {
    throw InputError("utility table row count differs from voter count");
  }
  if (data_.lambda < 1) throw InputError("lambda must be >= 1");
  if (data_.rule == Rule::kDiverse && data_.lambda != 1) {
    throw InputError("the diverse rule requires lambda = 1");
  }
  if (data_.budget < 0) throw InputError("budget must be non-negative");
  if (data_.target && *data_.target < 0) {
    throw InputError("target must be non-negative");
  }
  for (int p = 0; p < m; ++p) {
    if (data_.costs[p] < 1) {
      throw InputError("item '" + data_.item_ids[p] + "' has cost < 1");
    }
  }
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(data_.utils[v].size()) != m) {
      throw InputError("voter '" + data_.voter_ids[v] + "' has " +
                       std::to_string(data_.utils[v].size()) +
                       " utilities, expected " + std::to_string(m));
    }
    for (Value u : data_.utils[v]) {
      if (u < 0) {
        throw InputError("voter '" + data_.voter_ids[v] +
                         "' has a negative utility");
      }
    }
  }
  CheckUniqueIds(data_.item_ids, "item");
  CheckUniqueIds(data_.voter_ids, "voter");
  if (data_.sc_order) CheckPermutation(*data_.sc_order, n, "sc_order");
  if (data_.sp_axis) CheckPermutation(*data_.sp_axis, m, "sp_axis");
}

int Instance::FindItem(std::string_view id) const {
  auto it = std::find(data_.item_ids.begin(), data_.item_ids.end(), id);
  return it == data_.item_ids.end()
             ? -1
             : static_cast<int>(it - data_.item_ids.begin());
}

int Instance::FindVoter(std::string_view id) const {
  auto it = std::find(data_.voter_ids.begin(), data_.voter_ids.end(), id);
  return it == data_.voter_ids.end()
             ? -1
             : static_cast<int>(it - data_.voter_ids.begin());
}

InstanceStats ComputeStats(const Instance& instance) {
  InstanceStats stats;
  for (int v = 0; v < instance.num_voters(); ++v) {
    Value best = 0;
    for (Value u : instance.utils_of(v)) {
      best = std::max(best, u);
      stats.u_hat += u;
    }
    stats.u_bar += best;
    stats.u_max = std::max(stats.u_max, best);
  }
  return stats;
}

Instance WithRule(const Instance& instance, Rule rule, int lambda) {
  InstanceData data = instance.data();
  data.rule = rule;
  data.lambda = lambda;
  return Instance(std::move(data));
}

Instance WithBudget(const Instance& instance, Value budget) {
  InstanceData data = instance.data();
  data.budget = budget;
  return Instance(std::move(data));
}

NormalizeResult Normalize(const Instance& instance) {
  const InstanceData& in = instance.data();
  const int m = instance.num_items();
  std::vector<int> new_index(m, -1);
  InstanceData out = in;
  out.item_ids.clear();
  out.costs.clear();
  for (auto& row : out.utils) row.clear();
  std::vector<std::string> removed;
  for (int p = 0; p < m; ++p) {
    if (in.costs[p] > in.budget) {
      removed.push_back(in.item_ids[p]);
      continue;
    }
    new_index[p] = static_cast<int>(out.item_ids.size());
    out.item_ids.push_back(in.item_ids[p]);
    out.costs.push_back(in.costs[p]);
    for (int v = 0; v < instance.num_voters(); ++v) {
      out.utils[v].push_back(in.utils[v][p]);
    }
  }
  if (in.sp_axis) {
    std::vector<int> axis;
    for (int p : *in.sp_axis) {
      if (new_index[p] >= 0) axis.push_back(new_index[p]);
    }
    out.sp_axis = std::move(axis);
  }
  const bool infeasible =
      out.item_ids.empty() && in.target.has_value() && *in.target > 0;
  return NormalizeResult{Instance(std::move(out)), std::move(removed),
                         infeasible};
}

}  // namespace mak
