#include "mak/profiles.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "mak/errors.h"

namespace mak {
namespace {

void RequirePermutation(const std::vector<int>& order, int size,
                        const char* what) {
  std::vector<char> seen(size, 0);
  bool ok = static_cast<int>(order.size()) == size;
  for (int x : order) {
    if (!ok) break;
    if (x < 0 || x >= size || seen[x]) ok = false;
    else seen[x] = 1;
  }
  if (!ok) throw InputError(std::string(what) + " is not a permutation");
}

bool CrossingHolds(const Instance& instance, const std::vector<int>& sigma) {
  const int m = instance.num_items();
  const int n = instance.num_voters();
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      if (p == q) continue;
      // Contiguous iff the membership sequence along sigma has at most one
      // run of members.
      int runs = 0;
      bool prev = false;
      for (int i = 0; i < n; ++i) {
        const int v = sigma[i];
        const bool in = instance.util(v, p) >= instance.util(v, q);
        if (in && !prev) ++runs;
        prev = in;
      }
      if (runs > 1) return false;
    }
  }
  return true;
}

bool PeakedAt(std::span<const Value> utils, const std::vector<int>& axis,
              int top_pos) {
  for (int i = 0; i + 1 <= top_pos; ++i) {
    if (utils[axis[i]] > utils[axis[i + 1]]) return false;
  }
  for (int i = top_pos; i + 1 < static_cast<int>(axis.size()); ++i) {
    if (utils[axis[i]] < utils[axis[i + 1]]) return false;
  }
  return true;
}

}  // namespace

WeakOrder WeakOrderOf(const Instance& instance, int voter) {
  if (voter < 0 || voter >= instance.num_voters()) {
    throw InputError("unknown voter index " + std::to_string(voter));
  }
  std::vector<int> items(instance.num_items());
  std::iota(items.begin(), items.end(), 0);
  std::stable_sort(items.begin(), items.end(), [&](int a, int b) {
    return instance.util(voter, a) > instance.util(voter, b);
  });
  WeakOrder order;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i == 0 ||
        instance.util(voter, items[i]) != instance.util(voter, items[i - 1])) {
      order.emplace_back();
    }
    order.back().push_back(items[i]);
  }
  return order;
}

std::optional<int> CommonTopItem(const Instance& instance) {
  const int n = instance.num_voters();
  std::vector<Value> top(n, 0);
  for (int v = 0; v < n; ++v) {
    for (Value u : instance.utils_of(v)) top[v] = std::max(top[v], u);
  }
  for (int p = 0; p < instance.num_items(); ++p) {
    bool all = true;
    for (int v = 0; v < n && all; ++v) all = instance.util(v, p) == top[v];
    if (all) return p;
  }
  return std::nullopt;
}

bool IsUnanimous(const Instance& instance) {
  return CommonTopItem(instance).has_value();
}

bool IsStronglyUnanimous(const Instance& instance) {
  return DistanceToStrongUnanimity(instance) == 0;
}

int DistanceToStrongUnanimity(const Instance& instance) {
  std::map<WeakOrder, int> groups;
  int largest = 0;
  for (int v = 0; v < instance.num_voters(); ++v) {
    largest = std::max(largest, ++groups[WeakOrderOf(instance, v)]);
  }
  return instance.num_voters() - largest;
}

bool VerifySingleCrossing(const Instance& instance,
                          const std::vector<int>& sigma) {
  RequirePermutation(sigma, instance.num_voters(), "voter ordering");
  return CrossingHolds(instance, sigma);
}

bool VerifySinglePeaked(const Instance& instance,
                        const std::vector<int>& axis) {
  const int m = instance.num_items();
  RequirePermutation(axis, m, "item axis");
  for (int v = 0; v < instance.num_voters(); ++v) {
    std::span<const Value> utils = instance.utils_of(v);
    Value top = 0;
    for (Value u : utils) top = std::max(top, u);
    bool ok = false;
    for (int pos = 0; pos < m && !ok; ++pos) {
      if (utils[axis[pos]] == top) ok = PeakedAt(utils, axis, pos);
    }
    if (!ok && m > 0) return false;
  }
  return true;
}

std::optional<std::vector<int>> DetectSingleCrossing(const Instance& instance,
                                                     const Caps& caps) {
  const int n = instance.num_voters();
  if (n > caps.sc_detect_max_voters) {
    throw SizeError("sc_detect_max_voters",
                    "n = " + std::to_string(n) + " > " +
                        std::to_string(caps.sc_detect_max_voters));
  }
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    if (CrossingHolds(instance, sigma)) return sigma;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

ProfileReport AnalyzeProfile(const Instance& instance, const Caps& caps) {
  ProfileReport report;
  report.is_unanimous = IsUnanimous(instance);
  report.distance_d = DistanceToStrongUnanimity(instance);
  report.is_strongly_unanimous = report.distance_d == 0;
  if (instance.sc_order()) {
    report.sc_order_verified = VerifySingleCrossing(instance, *instance.sc_order());
    if (*report.sc_order_verified) report.sc_order = instance.sc_order();
  }
  if (instance.sp_axis()) {
    report.sp_axis_verified = VerifySinglePeaked(instance, *instance.sp_axis());
    if (*report.sp_axis_verified) report.sp_axis = instance.sp_axis();
  }
  if (!report.sc_order && instance.num_voters() <= caps.sc_detect_max_voters) {
    report.sc_order = DetectSingleCrossing(instance, caps);
    report.sc_detection_ran = true;
  }
  return report;
}

MergeResult MergeIdenticalVoters(const Instance& instance) {
  const InstanceData& in = instance.data();
  const int n = instance.num_voters();
  std::map<WeakOrder, int> group_of_order;
  std::vector<int> mapping(n);
  InstanceData out = in;
  out.voter_ids.clear();
  out.utils.clear();
  for (int v = 0; v < n; ++v) {
    auto [it, inserted] = group_of_order.try_emplace(
        WeakOrderOf(instance, v), static_cast<int>(out.voter_ids.size()));
    const int g = it->second;
    mapping[v] = g;
    if (inserted) {
      out.voter_ids.push_back(in.voter_ids[v]);
      out.utils.push_back(in.utils[v]);
    } else {
      out.voter_ids[g] += "+" + in.voter_ids[v];
      for (int p = 0; p < instance.num_items(); ++p) {
        out.utils[g][p] += in.utils[v][p];
      }
    }
  }
  if (in.sc_order) {
    // Dropping voters from a sequence keeps every block contiguous.
    std::vector<char> placed(out.voter_ids.size(), 0);
    std::vector<int> sigma;
    for (int v : *in.sc_order) {
      if (!placed[mapping[v]]) {
        placed[mapping[v]] = 1;
        sigma.push_back(mapping[v]);
      }
    }
    out.sc_order = std::move(sigma);
  }
  return MergeResult{Instance(std::move(out)), std::move(mapping)};
}

}  // namespace mak
