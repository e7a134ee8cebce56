#ifndef MAK_PROFILES_H_
#define MAK_PROFILES_H_

#include <optional>
#include <vector>

#include "mak/caps.h"
#include "mak/instance.h"

namespace mak {

// A voter's preference as indifference classes of item indices, ordered by
// strictly decreasing utility. Items inside a class are ascending.
using WeakOrder = std::vector<std::vector<int>>;

WeakOrder WeakOrderOf(const Instance& instance, int voter);

// Some item is a (possibly tied) top choice of every voter.
bool IsUnanimous(const Instance& instance);
// Lowest-index item that is a top choice of every voter, if any.
std::optional<int> CommonTopItem(const Instance& instance);

// All voters share one weak order.
bool IsStronglyUnanimous(const Instance& instance);

// n minus the size of the largest group of voters with identical weak orders.
int DistanceToStrongUnanimity(const Instance& instance);

// For every ordered item pair (p, p'), {v : util_v(p) >= util_v(p')} must be
// a contiguous block of `sigma`. Throws InputError if sigma is not a
// permutation of the voters.
bool VerifySingleCrossing(const Instance& instance,
                          const std::vector<int>& sigma);

// Utilities must weakly increase along `axis` up to the voter's top item and
// weakly decrease after it. With tied maxima every top is tried, nearest to
// the axis start first. Throws InputError if axis is not a permutation.
bool VerifySinglePeaked(const Instance& instance,
                        const std::vector<int>& axis);

// Exhaustive search over voter permutations in lexicographic order. Throws
// SizeError when n > caps.sc_detect_max_voters.
std::optional<std::vector<int>> DetectSingleCrossing(
    const Instance& instance, const Caps& caps = DefaultCaps());

struct ProfileReport {
  bool is_unanimous = false;
  bool is_strongly_unanimous = false;
  int distance_d = 0;
  std::optional<std::vector<int>> sc_order;
  std::optional<std::vector<int>> sp_axis;
  // Results for the orderings stored in the instance, when present.
  std::optional<bool> sc_order_verified;
  std::optional<bool> sp_axis_verified;
  // False when detection was skipped because of the voter cap.
  bool sc_detection_ran = false;
};

ProfileReport AnalyzeProfile(const Instance& instance,
                             const Caps& caps = DefaultCaps());

struct MergeResult {
  Instance instance;
  // voter_mapping[original voter] = merged voter index.
  std::vector<int> voter_mapping;
};

// Repeatedly merges voters with identical weak orders into one voter whose
// utilities are the coordinatewise sum. Merged voters appear in order of
// their first member; ids are joined with '+'. The single-crossing order is
// carried over (restricted to one member per group).
MergeResult MergeIdenticalVoters(const Instance& instance);

}  // namespace mak

#endif  // MAK_PROFILES_H_
