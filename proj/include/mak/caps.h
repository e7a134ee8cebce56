#ifndef MAK_CAPS_H_
#define MAK_CAPS_H_

#include <cstdint>
#include <string>

namespace mak {

// Upper limits on the state spaces the exponential solvers may touch. A solver
// whose instance exceeds a cap throws SizeError naming the cap.
struct Caps {
  int oracle_max_items = 20;
  int sc_detect_max_voters = 8;
  std::uint64_t wmsc_max_cells = 100'000'000;    // (k+1)^n * |F|
  std::uint64_t xp_max_guesses = 10'000'000;     // representative tuples
  std::uint64_t xp_max_cells = 500'000'000;      // multicover cells, summed
  int matching_max_voters = 6;
  int matching_max_k = 8;                        // min(b, m)
  std::uint64_t matching_max_guesses = 50'000'000;
  std::uint64_t matching_max_cells = 500'000'000;  // summed over guesses
  int polymul_max_voters = 8;
  std::uint64_t polymul_max_cells = 100'000'000; // n * u_bar * b * 2^n
  std::uint64_t kpcover_max_cells = 2'000'000'000;  // 2^n * |F| * dim
  std::uint64_t dp_max_cells = 200'000'000;      // pseudo-polynomial tables
};

const Caps& DefaultCaps();

// Throws SizeError(name, ...) when value > limit.
void CheckCap(const std::string& name, std::uint64_t value,
              std::uint64_t limit);

// Saturating helpers for cap arithmetic.
std::uint64_t SatMul(std::uint64_t a, std::uint64_t b);
std::uint64_t SatPow(std::uint64_t base, int exp);

}  // namespace mak

#endif  // MAK_CAPS_H_
