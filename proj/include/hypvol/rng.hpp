#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace hypvol {

// Deterministic random source.  Raw mt19937_64 bits are mapped to doubles by
// hand so that streams do not depend on the standard library's distribution
// implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return (eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::complex<double> box(double m) {
    double re = uniform(-m, m);
    double im = uniform(-m, m);
    return {re, im};
  }

  std::uint64_t bits() { return eng_(); }

  std::uint64_t below(std::uint64_t n) { return eng_() % n; }

private:
  std::mt19937_64 eng_;
};

} // namespace hypvol
