#ifndef MAK_DISPATCH_H_
#define MAK_DISPATCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mak/caps.h"
#include "mak/diverse_solvers.h"
#include "mak/instance.h"
#include "mak/satisfaction.h"

namespace mak {

enum class Algorithm {
  kAuto,
  kOracle,
  kXp,
  kMatching,
  kStronglyUnanimous,
  kSingleVoter,
  kUnanimous,
  kKpCover,
  kPolymul,
  kSingleCrossing,
  kFptas,
};

// "auto", "oracle", "xp", "matching", "su", "single-voter", "unanimous",
// "kpcover", "polymul", "sc", "fptas".
Algorithm ParseAlgorithm(std::string_view name);
std::string_view AlgorithmName(Algorithm algo);

struct SolveOptions {
  Algorithm algorithm = Algorithm::kAuto;
  Rational epsilon{1, 2};
  // Table layout; empty picks the solver's default.
  //   kpcover: "profit" | "cost"      single-voter: "budget" | "utility"
  //   sc, fptas: "cost" | "utility"   polymul: "schoolbook" | "fft"
  std::string indexing;
  Caps caps;
};

struct SolveReport {
  Algorithm algorithm = Algorithm::kAuto;  // the solver that actually ran
  std::string indexing;
  Value value = 0;
  std::optional<Bundle> witness;  // nullopt for value-only solvers
  std::optional<bool> meets_target;
  // Set for the FPTAS: optimum <= value * (1 + epsilon).
  std::optional<Rational> epsilon;
  double millis = 0;
  std::uint64_t states = 0;
  // Auto dispatch only: why this solver was picked.
  std::string reason;
};

// Runs one solver. Witnesses are re-verified on `instance` (cost within
// budget, value recomputed) before returning. Throws InputError when the
// algorithm does not apply to the instance and SizeError when a cap refuses.
//
// Auto dispatch: diverse and unanimous over affordable items -> unanimous;
// strongly unanimous -> su; diverse with a verified sc_order -> sc (fptas
// when the exact table is over the cap); otherwise the exact solver with the
// smallest estimated state count whose caps admit the instance, falling back
// to the oracle.
SolveReport Solve(const Instance& instance, const SolveOptions& options);

// Estimated states for an exact solver, nullopt if it does not apply or a
// cap refuses.
std::optional<std::uint64_t> EstimateStates(const Instance& instance,
                                            Algorithm algo, const Caps& caps);

std::string ReportToJson(const Instance& instance, const SolveReport& report);
std::string ReportToText(const Instance& instance, const SolveReport& report);

}  // namespace mak

#endif  // MAK_DISPATCH_H_
