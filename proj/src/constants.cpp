#include "kfactor/constants.hpp"

#include <cmath>
#include <numbers>

#include "kfactor/specfun.hpp"

namespace kfactor::specfun {

double exp_euler_gamma() {
  static const double value = std::exp(kEulerGamma);
  return value;
}

double c_default() {
  static const double value = std::exp(std::numbers::e + 1.0);
  return value;
}

double alladi_grinstead() {
  // c' = sum_{n>=2} (1/n) ln(n/(n-1)) = sum_{k>=1} (zeta(k+1) - 1) / k,
  // which converges geometrically.
  static const double value = [] {
    long double c_prime = 0.0L;
    for (int k = 1; k <= 64; ++k) {
      const long double term =
          static_cast<long double>(zeta_minus_one(k + 1)) / k;
      c_prime += term;
      if (term < 1e-19L) break;
    }
    return static_cast<double>(expl(c_prime - 1.0L));
  }();
  return value;
}

}  // namespace kfactor::specfun
