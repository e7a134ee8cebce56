#ifndef MAK_INDEXED_POLYNOMIAL_H_
#define MAK_INDEXED_POLYNOMIAL_H_

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "mak/caps.h"
#include "mak/instance.h"
#include "mak/solution.h"

namespace mak {

// 0/1 coefficient array over monomials x^i, i in [0, 2^n). Index i is read as
// the characteristic vector of a voter subset (bit v set iff voter v in it).
using PolyFlags = std::vector<std::uint8_t>;

enum class ProductMethod {
  kSchoolbook,  // O(|A| * |B|) over the non-zero monomials
  kFft,         // O(2^n * n) via a complex FFT of the coefficient arrays
};

// R(H_s(A * B)): multiplies the polynomials with integer addition of
// exponents, keeps monomials of Hamming weight s and resets every non-zero
// coefficient to one. When A and B have uniform weights s1 and s2 and
// s = s1 + s2, index i survives iff it is the disjoint union of an index of A
// and an index of B.
PolyFlags ProductProject(const PolyFlags& a, const PolyFlags& b, int s,
                         ProductMethod method = ProductMethod::kSchoolbook);

// (part-size total, utility, cost)
struct PolyKey {
  int size = 0;
  Value utility = 0;
  Value cost = 0;

  friend auto operator<=>(const PolyKey&, const PolyKey&) = default;
};

// All non-zero polynomials of one type j, keyed by (s, alpha, beta).
using PolyLayer = std::map<PolyKey, PolyFlags>;

struct PolymulOptions {
  ProductMethod method = ProductMethod::kSchoolbook;
};

// Type-1 polynomials: flag chi(Y) in P[|Y|, util_Y(p), c(p)] for every
// non-empty voter subset Y and item p with c(p) <= b. Type-j polynomials
// combine type-1 with type-(j-1) via ProductProject. Returns layers 1..n
// (index 0 holds type 1). Diverse rule only.
std::vector<PolyLayer> BuildPolynomialLayers(
    const Instance& instance, const PolymulOptions& options = {},
    const Caps& caps = DefaultCaps());

// Largest alpha such that some P^j[n, alpha, beta] with beta <= b is
// non-zero. Value only: the truncation to 0/1 coefficients discards which
// items produced a monomial.
ValueSolution SolveDiversePolymul(const Instance& instance,
                                  const PolymulOptions& options = {},
                                  const Caps& caps = DefaultCaps());

}  // namespace mak

#endif  // MAK_INDEXED_POLYNOMIAL_H_
