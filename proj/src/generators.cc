#include "mak/generators.h"

#include <algorithm>
#include <limits>
#include <numeric>

#include "mak/errors.h"
#include "mak/profiles.h"

namespace mak {

std::int64_t Rng::Uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InputError("empty range");
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

std::vector<std::int64_t> Rng::DistinctDescending(int k, std::int64_t lo,
                                                  std::int64_t hi) {
  if (hi - lo + 1 < k) throw InputError("range too small for distinct draw");
  // Floyd's sampling.
  std::vector<std::int64_t> chosen;
  for (std::int64_t j = hi - k + 1; j <= hi; ++j) {
    const std::int64_t t = Uniform(lo, j);
    if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) {
      chosen.push_back(t);
    } else {
      chosen.push_back(j);
    }
  }
  std::sort(chosen.rbegin(), chosen.rend());
  return chosen;
}

namespace {

constexpr std::pair<GeneratorKind, std::string_view> kKindNames[] = {
    {GeneratorKind::kGeneral, "general"},
    {GeneratorKind::kUnanimous, "unanimous"},
    {GeneratorKind::kStronglyUnanimous, "su"},
    {GeneratorKind::kSingleCrossing, "sc"},
    {GeneratorKind::kSinglePeaked, "sp"},
};

// Assigns distinct utilities along a strict ranking (best first).
void FillByRank(Rng& rng, const std::vector<int>& ranking, Value max_util,
                std::vector<Value>& row) {
  const int m = static_cast<int>(ranking.size());
  const auto values =
      rng.DistinctDescending(m, 0, std::max<Value>(max_util, m - 1));
  for (int r = 0; r < m; ++r) row[ranking[r]] = values[r];
}

}  // namespace

GeneratorKind ParseGeneratorKind(std::string_view name) {
  for (const auto& [kind, text] : kKindNames) {
    if (text == name) return kind;
  }
  throw InputError("unknown generator kind '" + std::string(name) + "'");
}

std::string_view GeneratorKindName(GeneratorKind kind) {
  for (const auto& [k, text] : kKindNames) {
    if (k == kind) return text;
  }
  return "?";
}

Instance Generate(const GeneratorParams& params) {
  const int n = params.num_voters;
  const int m = params.num_items;
  if (n < 1 || m < 1) throw InputError("n and m must be positive");
  if (params.max_util < 0 || params.max_cost < 1 || params.budget < 0) {
    throw InputError("max_util >= 0, max_cost >= 1 and budget >= 0 required");
  }
  Rng rng(params.seed);
  InstanceData data;
  for (int p = 0; p < m; ++p) {
    data.item_ids.push_back("p" + std::to_string(p + 1));
    data.costs.push_back(rng.Uniform(1, params.max_cost));
  }
  for (int v = 0; v < n; ++v) {
    data.voter_ids.push_back("v" + std::to_string(v + 1));
  }
  data.utils.assign(n, std::vector<Value>(m, 0));
  data.budget = params.budget;
  data.rule = params.rule;
  data.lambda = params.lambda;

  switch (params.kind) {
    case GeneratorKind::kGeneral:
    case GeneratorKind::kUnanimous: {
      for (auto& row : data.utils) {
        for (Value& u : row) u = rng.Uniform(0, params.max_util);
      }
      if (params.kind == GeneratorKind::kUnanimous) {
        const int top = static_cast<int>(rng.Uniform(0, m - 1));
        for (auto& row : data.utils) {
          row[top] = *std::max_element(row.begin(), row.end());
        }
      }
      break;
    }
    case GeneratorKind::kStronglyUnanimous: {
      // Shared ranking cut into indifference classes.
      std::vector<int> ranking(m);
      std::iota(ranking.begin(), ranking.end(), 0);
      rng.Shuffle(ranking);
      std::vector<int> class_of(m, 0);
      int classes = 1;
      for (int r = 1; r < m; ++r) {
        if (classes <= params.max_util && rng.Coin()) ++classes;
        class_of[r] = classes - 1;
      }
      for (auto& row : data.utils) {
        const auto levels = rng.DistinctDescending(classes, 0, params.max_util);
        for (int r = 0; r < m; ++r) row[ranking[r]] = levels[class_of[r]];
      }
      break;
    }
    case GeneratorKind::kSingleCrossing: {
      std::vector<int> ranking(m);
      std::iota(ranking.begin(), ranking.end(), 0);
      rng.Shuffle(ranking);
      // above[a][b]: a ranked above b in the first ranking.
      std::vector<std::vector<bool>> above(m, std::vector<bool>(m, false));
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) above[ranking[i]][ranking[j]] = true;
      }
      std::vector<std::vector<int>> rankings;
      for (int v = 0; v < n; ++v) {
        if (v > 0) {
          const int swaps = static_cast<int>(rng.Uniform(0, m));
          for (int s = 0; s < swaps && m > 1; ++s) {
            const int pos = static_cast<int>(rng.Uniform(0, m - 2));
            const int a = ranking[pos];
            const int b = ranking[pos + 1];
            if (above[a][b]) std::swap(ranking[pos], ranking[pos + 1]);
          }
        }
        rankings.push_back(ranking);
      }
      // Voters are stored in shuffled positions; sigma lists them in
      // construction order.
      std::vector<int> slot(n);
      std::iota(slot.begin(), slot.end(), 0);
      rng.Shuffle(slot);
      for (int v = 0; v < n; ++v) {
        FillByRank(rng, rankings[v], params.max_util, data.utils[slot[v]]);
      }
      data.sc_order = slot;
      break;
    }
    case GeneratorKind::kSinglePeaked: {
      std::vector<int> axis(m);
      std::iota(axis.begin(), axis.end(), 0);
      rng.Shuffle(axis);
      for (auto& row : data.utils) {
        const int peak = static_cast<int>(rng.Uniform(0, m - 1));
        std::vector<int> ranking{axis[peak]};
        int left = peak - 1;
        int right = peak + 1;
        while (left >= 0 || right < m) {
          const bool go_left = right >= m || (left >= 0 && rng.Coin());
          ranking.push_back(go_left ? axis[left--] : axis[right++]);
        }
        FillByRank(rng, ranking, params.max_util, row);
      }
      data.sp_axis = axis;
      break;
    }
  }

  Instance instance(std::move(data));
  bool ok = true;
  switch (params.kind) {
    case GeneratorKind::kGeneral:
      break;
    case GeneratorKind::kUnanimous:
      ok = IsUnanimous(instance);
      break;
    case GeneratorKind::kStronglyUnanimous:
      ok = IsStronglyUnanimous(instance);
      break;
    case GeneratorKind::kSingleCrossing:
      ok = VerifySingleCrossing(instance, *instance.sc_order());
      break;
    case GeneratorKind::kSinglePeaked:
      ok = VerifySinglePeaked(instance, *instance.sp_axis());
      break;
  }
  if (!ok) {
    throw InternalError("generated instance fails its class check: " +
                        std::string(GeneratorKindName(params.kind)));
  }
  return instance;
}

}  // namespace mak
