#include "mak/caps.h"

#include <limits>

#include "mak/errors.h"

namespace mak {

const Caps& DefaultCaps() {
  static const Caps kCaps;
  return kCaps;
}

void CheckCap(const std::string& name, std::uint64_t value,
              std::uint64_t limit) {
  if (value > limit) {
    throw SizeError(name, std::to_string(value) + " > " +
                              std::to_string(limit));
  }
}

std::uint64_t SatMul(std::uint64_t a, std::uint64_t b) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

std::uint64_t SatPow(std::uint64_t base, int exp) {
  std::uint64_t result = 1;
  for (int i = 0; i < exp; ++i) result = SatMul(result, base);
  return result;
}

}  // namespace mak
