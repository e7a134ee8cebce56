#include "mak/satisfaction.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "mak/errors.h"

namespace mak {
namespace {

void CheckVoter(const Instance& instance, int voter) {
  if (voter < 0 || voter >= instance.num_voters()) {
    throw InputError("unknown voter index " + std::to_string(voter));
  }
}

std::vector<Value> UtilityVector(const Instance& instance, int voter,
                                 std::span<const int> bundle) {
  CheckVoter(instance, voter);
  std::vector<Value> values;
  values.reserve(bundle.size());
  for (int p : bundle) {
    if (p < 0 || p >= instance.num_items()) {
      throw InputError("unknown item index " + std::to_string(p));
    }
    values.push_back(instance.util(voter, p));
  }
  return values;
}

}  // namespace

Value SatMedian(const Instance& instance, int voter,
                std::span<const int> bundle, int lambda) {
  std::vector<Value> values = UtilityVector(instance, voter, bundle);
  if (lambda < 1) throw InputError("lambda must be >= 1");
  if (static_cast<int>(values.size()) < lambda) return 0;
  auto nth = values.begin() + (lambda - 1);
  std::nth_element(values.begin(), nth, values.end(), std::greater<>());
  return *nth;
}

Value SatMedian(const Instance& instance, int voter,
                std::span<const int> bundle) {
  return SatMedian(instance, voter, bundle, instance.lambda());
}

Value SatBest(const Instance& instance, int voter, std::span<const int> bundle,
              int lambda) {
  std::vector<Value> values = UtilityVector(instance, voter, bundle);
  if (lambda < 1) throw InputError("lambda must be >= 1");
  const auto take = std::min<std::size_t>(lambda, values.size());
  std::partial_sort(values.begin(), values.begin() + take, values.end(),
                    std::greater<>());
  return std::accumulate(values.begin(), values.begin() + take, Value{0});
}

Value SatBest(const Instance& instance, int voter,
              std::span<const int> bundle) {
  return SatBest(instance, voter, bundle, instance.lambda());
}

Value Satisfaction(const Instance& instance, int voter,
                   std::span<const int> bundle) {
  switch (instance.rule()) {
    case Rule::kDiverse:
      return SatMedian(instance, voter, bundle, 1);
    case Rule::kMedian:
      return SatMedian(instance, voter, bundle, instance.lambda());
    case Rule::kBest:
      return SatBest(instance, voter, bundle, instance.lambda());
  }
  return 0;
}

Value TotalSatisfaction(const Instance& instance,
                        std::span<const int> bundle) {
  Value total = 0;
  for (int v = 0; v < instance.num_voters(); ++v) {
    total += Satisfaction(instance, v, bundle);
  }
  return total;
}

Value BundleCost(const Instance& instance, std::span<const int> bundle) {
  Value cost = 0;
  for (int p : bundle) {
    if (p < 0 || p >= instance.num_items()) {
      throw InputError("unknown item index " + std::to_string(p));
    }
    cost += instance.cost(p);
  }
  return cost;
}

Bundle MakeBundle(const Instance& instance, std::vector<int> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  Bundle bundle;
  bundle.cost = BundleCost(instance, items);
  bundle.value = TotalSatisfaction(instance, items);
  bundle.items = std::move(items);
  return bundle;
}

bool IsFeasible(const Instance& instance, const Bundle& bundle) {
  return BundleCost(instance, bundle.items) <= instance.budget();
}

bool LexLess(std::span<const int> a, std::span<const int> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace mak
