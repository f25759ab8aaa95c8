#include "bergmod/rng.hpp"

#include <stdexcept>

namespace bergmod {

namespace {

constexpr int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                           41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};

double radical_inverse(std::uint64_t k, int base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (k > 0) {
    r += f * static_cast<double>(k % base);
    k /= base;
    f *= inv;
  }
  return r;
}

}  // namespace

ShiftedHalton::ShiftedHalton(int dims, std::uint64_t seed) {
  if (dims < 1 || dims > static_cast<int>(std::size(kPrimes)))
    throw std::invalid_argument("ShiftedHalton: unsupported dimension");
  Rng rng(seed);
  shift_.resize(dims);
  for (auto& s : shift_) s = uniform01(rng);
}

std::vector<double> ShiftedHalton::at(std::uint64_t k) const {
  std::vector<double> u(shift_.size());
  for (std::size_t j = 0; j < shift_.size(); ++j) {
    double x = radical_inverse(k, kPrimes[j]) + shift_[j];
    u[j] = x >= 1.0 ? x - 1.0 : x;
  }
  return u;
}

}  // namespace bergmod
