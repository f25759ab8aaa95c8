#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace bergmod {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Child seed for stream `index` of a root seed. Stable across platforms.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
  return splitmix64(root ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

inline double uniform01(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// Randomly shifted Halton sequence. Prefixes are nested, so a run with m
// points is contained in a run with 2m points.
class ShiftedHalton {
 public:
  ShiftedHalton(int dims, std::uint64_t seed);

  // Point with 1-based index k in [0,1)^dims.
  std::vector<double> at(std::uint64_t k) const;
  int dims() const { return static_cast<int>(shift_.size()); }

 private:
  std::vector<double> shift_;
};

}  // namespace bergmod
