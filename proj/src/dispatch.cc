#include "mak/dispatch.h"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mak/errors.h"
#include "mak/indexed_polynomial.h"
#include "mak/median_solvers.h"
#include "mak/oracle.h"
#include "mak/profiles.h"

namespace mak {
namespace {

constexpr std::pair<Algorithm, std::string_view> kAlgorithmNames[] = {
    {Algorithm::kAuto, "auto"},
    {Algorithm::kOracle, "oracle"},
    {Algorithm::kXp, "xp"},
    {Algorithm::kMatching, "matching"},
    {Algorithm::kStronglyUnanimous, "su"},
    {Algorithm::kSingleVoter, "single-voter"},
    {Algorithm::kUnanimous, "unanimous"},
    {Algorithm::kKpCover, "kpcover"},
    {Algorithm::kPolymul, "polymul"},
    {Algorithm::kSingleCrossing, "sc"},
    {Algorithm::kFptas, "fptas"},
};

[[noreturn]] void BadIndexing(Algorithm algo, const std::string& indexing) {
  throw InputError("indexing '" + indexing + "' does not apply to " +
                   std::string(AlgorithmName(algo)));
}

const std::vector<int>& RequireScOrder(const Instance& instance) {
  if (!instance.sc_order()) {
    throw InputError("instance has no sc_order");
  }
  return *instance.sc_order();
}

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = SatMul(result, n - k + i) / i;
  }
  return result;
}

bool UnanimousOverAffordable(const Instance& instance) {
  const Instance normalized = Normalize(instance).instance;
  return normalized.num_items() == 0 || IsUnanimous(normalized);
}

// Runs one named solver and fills value, witness, states and indexing.
void RunSolver(const Instance& instance, Algorithm algo,
               const SolveOptions& options, SolveReport& report) {
  const Caps& caps = options.caps;
  const std::string& ix = options.indexing;
  std::optional<Solution> solution;
  report.indexing.clear();
  switch (algo) {
    case Algorithm::kAuto:
      throw InternalError("auto is not a solver");
    case Algorithm::kOracle:
      solution = BruteForceSolve(instance, caps);
      break;
    case Algorithm::kXp:
      solution = SolveMedianXp(instance, caps);
      break;
    case Algorithm::kMatching:
      solution = SolveMatchingFpt(instance, caps);
      break;
    case Algorithm::kStronglyUnanimous:
      solution = SolveStronglyUnanimous(instance, caps);
      break;
    case Algorithm::kSingleVoter: {
      SingleVoterIndexing indexing = SingleVoterIndexing::kBudget;
      report.indexing = "budget";
      if (ix == "utility") {
        indexing = SingleVoterIndexing::kUtility;
        report.indexing = ix;
      } else if (!ix.empty() && ix != "budget") {
        BadIndexing(algo, ix);
      }
      solution = SolveBestSingleVoter(instance, indexing, caps);
      break;
    }
    case Algorithm::kUnanimous:
      solution = SolveDiverseUnanimous(instance);
      break;
    case Algorithm::kKpCover: {
      KpCoverIndexing indexing = KpCoverIndexing::kCost;
      report.indexing = "cost";
      if (ix == "profit") {
        indexing = KpCoverIndexing::kProfit;
        report.indexing = ix;
      } else if (!ix.empty() && ix != "cost") {
        BadIndexing(algo, ix);
      }
      solution = SolveDiverseKpCover(instance, indexing, caps).solution;
      break;
    }
    case Algorithm::kPolymul: {
      PolymulOptions polymul;
      report.indexing = "schoolbook";
      if (ix == "fft") {
        polymul.method = ProductMethod::kFft;
        report.indexing = ix;
      } else if (!ix.empty() && ix != "schoolbook") {
        BadIndexing(algo, ix);
      }
      const ValueSolution value = SolveDiversePolymul(instance, polymul, caps);
      report.value = value.value;
      report.states = value.stats.states;
      report.witness.reset();
      return;
    }
    case Algorithm::kSingleCrossing:
    case Algorithm::kFptas: {
      BlockDpIndexing indexing = BlockDpIndexing::kCost;
      report.indexing = "cost";
      if (ix == "utility") {
        indexing = BlockDpIndexing::kUtility;
        report.indexing = ix;
      } else if (!ix.empty() && ix != "cost") {
        BadIndexing(algo, ix);
      }
      const std::vector<int>& sigma = RequireScOrder(instance);
      if (algo == Algorithm::kSingleCrossing) {
        solution = SolveDiverseSingleCrossing(instance, sigma, indexing, caps);
      } else {
        solution = SolveDiverseFptas(instance, sigma, options.epsilon,
                                     indexing, caps);
        report.epsilon = options.epsilon;
      }
      break;
    }
  }
  report.value = solution->bundle.value;
  report.states = solution->stats.states;
  report.witness = solution->bundle;
}

void VerifyWitness(const Instance& instance, const SolveReport& report) {
  if (!report.witness) return;
  const Bundle check = MakeBundle(instance, report.witness->items);
  if (check.cost > instance.budget() || check.cost != report.witness->cost ||
      check.value != report.witness->value || check.value != report.value) {
    throw InternalError("witness of " +
                        std::string(AlgorithmName(report.algorithm)) +
                        " does not re-verify");
  }
}

void RunAuto(const Instance& instance, const SolveOptions& options,
             SolveReport& report) {
  const Caps& caps = options.caps;
  auto run = [&](Algorithm algo, std::string reason) {
    report.algorithm = algo;
    report.reason = std::move(reason);
    RunSolver(instance, algo, options, report);
  };

  if (instance.rule() == Rule::kDiverse && UnanimousOverAffordable(instance)) {
    return run(Algorithm::kUnanimous, "unanimous profile");
  }
  if (IsStronglyUnanimous(instance)) {
    try {
      return run(Algorithm::kStronglyUnanimous, "strongly unanimous profile");
    } catch (const SizeError&) {
    }
  }
  if (instance.rule() == Rule::kDiverse && instance.sc_order() &&
      VerifySingleCrossing(instance, *instance.sc_order())) {
    SolveOptions exact = options;
    exact.indexing.clear();
    try {
      RunSolver(instance, Algorithm::kSingleCrossing, exact, report);
      report.algorithm = Algorithm::kSingleCrossing;
      report.reason = "verified single-crossing order";
      return;
    } catch (const SizeError&) {
    }
    for (const char* indexing : {"", "utility"}) {
      exact.indexing = indexing;
      try {
        RunSolver(instance, Algorithm::kFptas, exact, report);
        report.algorithm = Algorithm::kFptas;
        report.reason = "verified single-crossing order, exact table over cap";
        return;
      } catch (const SizeError&) {
      }
    }
  }

  std::vector<std::pair<std::uint64_t, Algorithm>> candidates;
  for (Algorithm algo : {Algorithm::kSingleVoter, Algorithm::kKpCover,
                         Algorithm::kXp, Algorithm::kMatching}) {
    if (auto states = EstimateStates(instance, algo, caps)) {
      candidates.emplace_back(*states, algo);
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  SolveOptions plain = options;
  plain.indexing.clear();
  for (const auto& [states, algo] : candidates) {
    try {
      report.algorithm = algo;
      report.reason = "smallest estimated state count (" +
                      std::to_string(states) + ")";
      RunSolver(instance, algo, plain, report);
      return;
    } catch (const SizeError&) {
    }
  }
  run(Algorithm::kOracle, "no exact solver within caps");
}

}  // namespace

Algorithm ParseAlgorithm(std::string_view name) {
  for (const auto& [algo, text] : kAlgorithmNames) {
    if (text == name) return algo;
  }
  throw InputError("unknown algorithm '" + std::string(name) + "'");
}

std::string_view AlgorithmName(Algorithm algo) {
  for (const auto& [a, text] : kAlgorithmNames) {
    if (a == algo) return text;
  }
  return "?";
}

std::optional<std::uint64_t> EstimateStates(const Instance& instance,
                                            Algorithm algo, const Caps& caps) {
  const int n = instance.num_voters();
  const int m = instance.num_items();
  const std::uint64_t b = static_cast<std::uint64_t>(instance.budget());
  const Rule rule = instance.rule();
  switch (algo) {
    case Algorithm::kOracle:
      if (m > caps.oracle_max_items || m > 30) return std::nullopt;
      return std::uint64_t{1} << m;
    case Algorithm::kSingleVoter: {
      if (rule != Rule::kBest || n != 1) return std::nullopt;
      const std::uint64_t cells =
          SatMul(SatMul(b + 1, std::min(instance.lambda(), m) + 1), m + 1);
      if (cells > caps.dp_max_cells) return std::nullopt;
      return cells;
    }
    case Algorithm::kKpCover: {
      if (rule != Rule::kDiverse || n > 20) return std::nullopt;
      const std::uint64_t subsets = std::uint64_t{1} << n;
      const std::uint64_t cells =
          SatMul(SatMul(subsets, SatMul(subsets, m)), b + 1);
      if (cells > caps.kpcover_max_cells) return std::nullopt;
      return cells;
    }
    case Algorithm::kXp: {
      if (rule == Rule::kBest) return std::nullopt;
      std::uint64_t guesses = 1;
      for (int v = 0; v < n; ++v) {
        const auto row = instance.utils_of(v);
        guesses = SatMul(guesses, std::set<Value>(row.begin(), row.end()).size());
      }
      if (guesses > caps.xp_max_guesses) return std::nullopt;
      const std::uint64_t cover =
          SatMul(SatPow(instance.lambda() + 1, n), m);
      if (cover > caps.wmsc_max_cells) return std::nullopt;
      return SatMul(guesses, cover);
    }
    case Algorithm::kMatching: {
      if (n > caps.matching_max_voters) return std::nullopt;
      const std::uint64_t k_max = std::min<std::uint64_t>(b, m);
      if (k_max > static_cast<std::uint64_t>(caps.matching_max_k)) {
        return std::nullopt;
      }
      std::uint64_t total = 0;
      if (rule == Rule::kMedian) {
        // Ordered subsequences of one ranking.
        for (std::uint64_t k = 1; k <= k_max; ++k) {
          total += Binomial(m, k);
        }
        total = SatMul(total, n);
      } else {
        const std::uint64_t columns = (std::uint64_t{1} << n) - 1;
        for (std::uint64_t k = 1; k <= k_max; ++k) {
          const std::uint64_t guesses = Binomial(columns + k - 1, k);
          total += SatMul(guesses,
                          SatMul(SatMul(std::uint64_t{1} << k, b + 1), m + 1));
        }
      }
      if (total > caps.matching_max_guesses * 16) return std::nullopt;
      return total;
    }
    default:
      return std::nullopt;
  }
}

SolveReport Solve(const Instance& instance, const SolveOptions& options) {
  SolveReport report;
  const auto start = std::chrono::steady_clock::now();
  if (options.algorithm == Algorithm::kAuto) {
    RunAuto(instance, options, report);
  } else {
    report.algorithm = options.algorithm;
    RunSolver(instance, options.algorithm, options, report);
  }
  report.millis = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  VerifyWitness(instance, report);
  if (instance.target()) report.meets_target = report.value >= *instance.target();
  return report;
}

std::string ReportToJson(const Instance& instance, const SolveReport& report) {
  nlohmann::ordered_json out;
  out["algorithm"] = std::string(AlgorithmName(report.algorithm));
  if (!report.indexing.empty()) out["indexing"] = report.indexing;
  if (!report.reason.empty()) out["reason"] = report.reason;
  out["value"] = report.value;
  if (report.witness) {
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (int p : report.witness->items) items.push_back(instance.item_id(p));
    out["witness"] = {{"items", items}, {"cost", report.witness->cost}};
  } else {
    out["witness"] = "value-only";
  }
  if (report.meets_target) {
    out["target"] = *instance.target();
    out["meets_target"] = *report.meets_target;
  }
  if (report.epsilon) {
    out["epsilon"] = FormatRational(*report.epsilon);
  }
  out["millis"] = report.millis;
  out["states"] = report.states;
  return out.dump(2) + "\n";
}

std::string ReportToText(const Instance& instance, const SolveReport& report) {
  std::ostringstream out;
  out << "algorithm: " << AlgorithmName(report.algorithm);
  if (!report.indexing.empty()) out << " (" << report.indexing << ")";
  out << "\n";
  if (!report.reason.empty()) out << "reason: " << report.reason << "\n";
  out << "value: " << report.value << "\n";
  if (report.witness) {
    out << "bundle:";
    for (int p : report.witness->items) out << " " << instance.item_id(p);
    out << "\ncost: " << report.witness->cost << " / " << instance.budget()
        << "\n";
  } else {
    out << "bundle: value-only\n";
  }
  if (report.epsilon) {
    const Rational& e = *report.epsilon;
    out << "certificate: optimum <= " << report.value << " * (1 + "
        << FormatRational(e) << ") = " << report.value * (e.den + e.num)
        << "/" << e.den << "\n";
  }
  if (report.meets_target) {
    out << "target " << *instance.target() << ": "
        << (*report.meets_target ? "met" : "not met") << "\n";
  }
  out << "states: " << report.states << "\n";
  out << "millis: " << report.millis << "\n";
  return out.str();
}

}  // namespace mak
