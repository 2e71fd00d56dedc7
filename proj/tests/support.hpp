// Shared helpers for the unit tests: an independent matrix exponential and
// a seeded sampler of momenta.
#pragma once

#include "majorana/halfspin.hpp"

#include <random>

namespace testing {

/// Taylor series with scaling and squaring. Independent of the closed-form
/// boosts under test.
template <typename T>
majorana::Matrix<T> series_exp(const majorana::Matrix<T>& a) {
  int squarings = 0;
  T scale = T(1);
  const T n = majorana::max_abs(a);
  while (n * scale > T(0.25)) {
    scale /= 2;
    ++squarings;
  }
  const majorana::Matrix<T> x = a * scale;
  majorana::Matrix<T> term = majorana::Matrix<T>::Identity(a.rows(), a.cols());
  majorana::Matrix<T> sum = term;
  for (int k = 1; k < 40; ++k) {
    term = (term * x / T(k)).eval();
    sum += term;
  }
  for (int k = 0; k < squarings; ++k) sum = (sum * sum).eval();
  return sum;
}

/// Momenta with m in [0.2, 3], |p| in [0, 6] and uniform directions.
class MomentumSampler {
 public:
  explicit MomentumSampler(unsigned seed) : rng_(seed) {}

  majorana::FourMomentum<double> next() {
    std::uniform_real_distribution<double> mass(0.2, 3.0), mag(0.0, 6.0), u(-1.0, 1.0),
        phi(0.0, 2 * majorana::pi<double>);
    return {mass(rng_), mag(rng_), std::acos(u(rng_)), phi(rng_)};
  }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

 private:
  std::mt19937 rng_;
};

}  // namespace testing
