// Independent reference implementations for test expectations. Everything
// here is deliberately simple and separate from the library's evaluation
// paths: trial division instead of sieving, Simpson quadrature instead of
// series or Gauss-Legendre, long-double series for erfc.
#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace oracles {

// Omega (with multiplicity) and omega (distinct) by trial division.
inline std::pair<int, int> factor_counts(std::uint64_t n) {
  int with_multiplicity = 0;
  int distinct = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ++distinct;
      while (n % p == 0) {
        n /= p;
        ++with_multiplicity;
      }
    }
  }
  if (n > 1) {
    ++distinct;
    ++with_multiplicity;
  }
  return {with_multiplicity, distinct};
}

inline std::uint64_t count_k_almost(std::uint64_t x, int k,
                                    bool with_multiplicity) {
  std::uint64_t count = 0;
  for (std::uint64_t n = 2; n <= x; ++n) {
    const auto [big, little] = factor_counts(n);
    if ((with_multiplicity ? big : little) == k) ++count;
  }
  return count;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline std::uint64_t prime_count(std::uint64_t x) {
  std::uint64_t count = 0;
  for (std::uint64_t n = 2; n <= x; ++n)
    if (is_prime(n)) ++count;
  return count;
}

// Recursive adaptive Simpson with absolute tolerance. The tolerance is
// floored near machine epsilon so unattainable requests terminate on the
// depth cap instead of exploding the recursion tree.
template <typename F>
double simpson_step(F&& f, double a, double b, double fa, double fm, double fb,
                    double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  const double half_tol = std::max(0.5 * tol, 1e-17);
  return simpson_step(f, a, m, fa, flm, fm, left, half_tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, half_tol, depth - 1);
}

template <typename F>
double integrate(F&& f, double a, double b, double tol = 1e-13) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, std::max(tol, 1e-16), 16);
}

// Principal-value li by quadrature. The t -> 1 pole pair is folded as
// 1/ln t + 1/ln(2 - t), which extends smoothly through t = 1; the t -> 0
// corner (unbounded derivatives of 1/ln t) is tamed by substituting t = u^4.
inline double li_quadrature(double x) {
  // int_0^(1/2) dt/ln t with t = u^4
  const auto corner = [](double u) {
    return u <= 0.0 ? 0.0 : u * u * u / std::log(u);
  };
  const double part_a = integrate(corner, 0.0, std::pow(0.5, 0.25), 1e-14);
  // int_0^(1/2) dt/ln(2 - t), smooth
  const auto mirror = [](double t) { return 1.0 / std::log(2.0 - t); };
  const double part_b = integrate(mirror, 0.0, 0.5, 1e-14);
  // int_(1/2)^1 of the folded pair
  const auto folded = [](double t) {
    const double u = 1.0 - t;
    if (std::abs(u) < 1e-4) return 1.0 + u * u / 12.0;  // series through t = 1
    return 1.0 / std::log(t) + 1.0 / std::log(2.0 - t);
  };
  const double part_c = integrate(folded, 0.5, 1.0, 1e-14);
  const double li2 = part_a + part_b + part_c;
  if (x == 2.0) return li2;
  const auto tail = [](double t) { return 1.0 / std::log(t); };
  return li2 + integrate(tail, 2.0, x, 1e-13);
}

// erfc by long-double series (x <= 2) or Lentz continued fraction:
// sqrt(pi) e^{x^2} erfc(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))).
inline long double erfc_reference(long double x) {
  if (x < 0.0L) return 2.0L - erfc_reference(-x);
  const long double sqrt_pi = 1.7724538509055160272981674833411452L;
  if (x <= 2.0L) {
    // erf(x) = 2/sqrt(pi) sum (-1)^n x^(2n+1) / (n! (2n+1))
    long double term = x;
    long double sum = x;
    for (int n = 1; n < 200; ++n) {
      term *= -x * x / n;
      const long double add = term / (2 * n + 1);
      sum += add;
      if (fabsl(add) < 1e-22L * fabsl(sum)) break;
    }
    return 1.0L - 2.0L / sqrt_pi * sum;
  }
  long double f = 1e-30L;  // modified Lentz, b0 = 0
  long double c = f;
  long double d = 0.0L;
  for (int i = 0; i < 500; ++i) {
    const long double an = i == 0 ? 1.0L : i / 2.0L;
    d = x + an * d;
    if (d == 0.0L) d = 1e-30L;
    c = x + an / c;
    if (c == 0.0L) c = 1e-30L;
    d = 1.0L / d;
    const long double delta = c * d;
    f *= delta;
    if (fabsl(delta - 1.0L) < 1e-22L) break;
  }
  return expl(-x * x) / sqrt_pi * f;
}

}  // namespace oracles
