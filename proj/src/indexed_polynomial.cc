#include "mak/indexed_polynomial.h"

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "mak/errors.h"

namespace mak {
namespace {

using Complex = std::complex<double>;

void Fft(std::vector<Complex>& a, bool invert) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle =
        2 * std::numbers::pi / static_cast<double>(len) * (invert ? -1 : 1);
    const Complex wlen(std::cos(angle), std::sin(angle));
    for (std::size_t i = 0; i < n; i += len) {
      Complex w(1);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const Complex u = a[i + j];
        const Complex v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (invert) {
    for (Complex& x : a) x /= static_cast<double>(n);
  }
}

PolyFlags ProductSchoolbook(const PolyFlags& a, const PolyFlags& b, int s) {
  std::vector<std::size_t> ia, ib;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i]) ia.push_back(i);
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i]) ib.push_back(i);
  }
  PolyFlags out(a.size(), 0);
  for (std::size_t x : ia) {
    for (std::size_t y : ib) {
      const std::size_t sum = x + y;
      if (sum < out.size() && std::popcount(sum) == s) out[sum] = 1;
    }
  }
  return out;
}

PolyFlags ProductFft(const PolyFlags& a, const PolyFlags& b, int s) {
  std::size_t len = 1;
  while (len < 2 * a.size()) len <<= 1;
  std::vector<Complex> fa(len), fb(len);
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i] ? 1.0 : 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) fb[i] = b[i] ? 1.0 : 0.0;
  Fft(fa, false);
  Fft(fb, false);
  for (std::size_t i = 0; i < len; ++i) fa[i] *= fb[i];
  Fft(fa, true);
  PolyFlags out(a.size(), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (fa[i].real() > 0.5 && std::popcount(i) == s) out[i] = 1;
  }
  return out;
}

bool AnySet(const PolyFlags& flags) {
  for (std::uint8_t f : flags) {
    if (f) return true;
  }
  return false;
}

}  // namespace

PolyFlags ProductProject(const PolyFlags& a, const PolyFlags& b, int s,
                         ProductMethod method) {
  if (a.size() != b.size() || !std::has_single_bit(a.size())) {
    throw InputError("flag arrays must share a power-of-two length");
  }
  return method == ProductMethod::kFft ? ProductFft(a, b, s)
                                       : ProductSchoolbook(a, b, s);
}

std::vector<PolyLayer> BuildPolynomialLayers(const Instance& instance,
                                             const PolymulOptions& options,
                                             const Caps& caps) {
  if (instance.rule() != Rule::kDiverse) {
    throw InputError("polynomial multiplication requires the diverse rule");
  }
  const int n = instance.num_voters();
  if (n > caps.polymul_max_voters || n > 24) {
    throw SizeError("polymul_max_voters",
                    "n = " + std::to_string(n) + " > " +
                        std::to_string(caps.polymul_max_voters));
  }
  const Value b = instance.budget();
  const Value u_bar = ComputeStats(instance).u_bar;
  const std::size_t width = std::size_t{1} << n;
  CheckCap("polymul_max_cells",
           SatMul(SatMul(SatMul(n, u_bar + 1), b + 1), width),
           caps.polymul_max_cells);

  std::vector<PolyLayer> layers;
  PolyLayer first;
  for (int p = 0; p < instance.num_items(); ++p) {
    if (instance.cost(p) > b) continue;
    for (std::size_t y = 1; y < width; ++y) {
      Value alpha = 0;
      for (int v = 0; v < n; ++v) {
        if (y >> v & 1) alpha += instance.util(v, p);
      }
      PolyKey key{std::popcount(y), alpha, instance.cost(p)};
      PolyFlags& flags = first[key];
      if (flags.empty()) flags.assign(width, 0);
      flags[y] = 1;
    }
  }
  layers.push_back(std::move(first));

  // Non-zero indices per polynomial, so schoolbook products skip empty cells.
  auto index_lists = [](const PolyLayer& layer) {
    std::vector<std::vector<std::size_t>> lists;
    lists.reserve(layer.size());
    for (const auto& entry : layer) {
      std::vector<std::size_t>& list = lists.emplace_back();
      for (std::size_t i = 0; i < entry.second.size(); ++i) {
        if (entry.second[i]) list.push_back(i);
      }
    }
    return lists;
  };
  const auto base_lists = index_lists(layers.front());
  PolyFlags scratch(width, 0);
  for (int j = 2; j <= n; ++j) {
    const PolyLayer& base = layers.front();
    const PolyLayer& prev = layers.back();
    const auto prev_lists = index_lists(prev);
    PolyLayer next;
    std::size_t bi = 0;
    for (auto it1 = base.begin(); it1 != base.end(); ++it1, ++bi) {
      const PolyKey& k1 = it1->first;
      std::size_t pi = 0;
      for (auto it2 = prev.begin(); it2 != prev.end(); ++it2, ++pi) {
        const PolyKey& k2 = it2->first;
        const int s = k1.size + k2.size;
        if (s > n) break;  // prev is ordered by size first
        const Value beta = k1.cost + k2.cost;
        if (beta > b) continue;
        bool any = false;
        if (options.method == ProductMethod::kFft) {
          scratch = ProductProject(it1->second, it2->second, s,
                                   ProductMethod::kFft);
          any = AnySet(scratch);
        } else {
          std::fill(scratch.begin(), scratch.end(), 0);
          for (std::size_t x : base_lists[bi]) {
            for (std::size_t y : prev_lists[pi]) {
              const std::size_t sum = x + y;
              if (sum < width && std::popcount(sum) == s) {
                scratch[sum] = 1;
                any = true;
              }
            }
          }
        }
        if (!any) continue;
        PolyFlags& slot = next[PolyKey{s, k1.utility + k2.utility, beta}];
        if (slot.empty()) slot.assign(width, 0);
        for (std::size_t i = 0; i < width; ++i) slot[i] |= scratch[i];
      }
    }
    if (next.empty()) break;
    layers.push_back(std::move(next));
  }
  return layers;
}

ValueSolution SolveDiversePolymul(const Instance& instance,
                                  const PolymulOptions& options,
                                  const Caps& caps) {
  const std::vector<PolyLayer> layers =
      BuildPolynomialLayers(instance, options, caps);
  const int n = instance.num_voters();
  ValueSolution result;
  for (const PolyLayer& layer : layers) {
    for (const auto& [key, flags] : layer) {
      result.stats.states += flags.size();
      if (key.size == n && key.cost <= instance.budget()) {
        result.value = std::max(result.value, key.utility);
      }
    }
  }
  return result;
}

}  // namespace mak
