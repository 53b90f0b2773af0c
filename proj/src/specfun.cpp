#include "kfactor/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "kfactor/errors.hpp"
#include "kfactor/quadrature.hpp"

namespace kfactor::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Owen's T on the quadrature path; requires |a| <= 1 after reduction.
double owens_t_quadrature(double h, double a) {
  if (a == 0.0) return 0.0;
  const double h2 = h * h;
  if (0.5 * h2 > 750.0) return 0.0;  // Gaussian factor underflows
  // Narrow panels once the Gaussian factor decays on a scale ~ 1/h.
  const int panels =
      8 + std::min(240, static_cast<int>(std::ceil(4.0 * std::abs(h))));
  const auto integrand = [h2](double t) {
    return std::exp(-0.5 * h2 * (1.0 + t * t)) / (1.0 + t * t);
  };
  return quad::gauss_legendre_panels(integrand, 0.0, a, panels) / (2.0 * kPi);
}

// Lanczos rational approximation, N=13, g=6.024680040776729583740234375.
// Coefficients published by Boost.Math (lanczos13m53); sqrt(2 pi) is folded
// into the numerator.
constexpr double kLanczosG = 6.024680040776729583740234375;
constexpr std::array<double, 13> kLanczosNum = {
    2.506628274631000270164908177133837338626e0,
    2.108242777515793458725097339207133627117e2,
    8.071672002365816210638002902272250613822e3,
    1.860562653952234950402949897160456992822e5,
    2.876370628935372441225409051620849613599e6,
    3.142641558540019438061423162831820536287e7,
    2.488745578620541565114603864132294232163e8,
    1.439720407311721673663223072794912393972e9,
    6.039542586352028005064291644307297921070e9,
    1.792103442603720969991975575445893111267e10,
    3.571195923735566804944018545154716670596e10,
    4.291980364264909876895789904700198885093e10,
    2.353137688041075968857200767445163675473e10};
constexpr std::array<double, 13> kLanczosDen = {
    1.0,          66.0,         1925.0,       32670.0,     357423.0,
    2637558.0,    13339535.0,   45995730.0,   105258076.0, 150917976.0,
    120543840.0,  39916800.0,   0.0};

// Both arrays hold the z^12..z^0 coefficients for Horner evaluation; the
// denominator is z(z+1)...(z+11).
Complex lanczos_sum(Complex z) {
  Complex num = 0.0;
  Complex den = 0.0;
  for (int i = 0; i < 13; ++i) {
    num = num * z + kLanczosNum[i];
    den = den * z + kLanczosDen[i];
  }
  return num / den;
}

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 &&
         z.real() == std::floor(z.real());
}

Complex gamma_positive_half(Complex z) {
  // Valid for Re(z) >= 0.5.
  const Complex zgh = z + Complex(kLanczosG - 0.5);
  return lanczos_sum(z) * std::pow(zgh, z - Complex(0.5)) * std::exp(-zgh);
}

}  // namespace

double erfc(double x) { return std::erfc(x); }

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double owens_t(double h, double a) {
  // T(-h, a) = T(h, a); T(h, -a) = -T(h, a).
  double sign = 1.0;
  if (a < 0.0) {
    a = -a;
    sign = -1.0;
  }
  h = std::abs(h);
  if (a == 0.0) return 0.0;
  if (h == 0.0) return sign * std::atan(a) / (2.0 * kPi);
  if (a <= 1.0) return sign * owens_t_quadrature(h, a);
  const double ah = a * h;
  const double phi_h = normal_cdf(h);
  const double phi_ah = normal_cdf(ah);
  const double reduced = 0.5 * (phi_h + phi_ah) - phi_h * phi_ah -
                         owens_t_quadrature(ah, 1.0 / a);
  return sign * reduced;
}

double skew_normal_cdf(double x, double mu, double sigma, double a) {
  if (!(sigma > 0.0)) throw DomainError("sigma must be positive");
  const double u = (x - mu) / sigma;
  return 0.5 * std::erfc(-u / std::numbers::sqrt2) - 2.0 * owens_t(u, a);
}

Complex gamma(Complex z) {
  if (is_nonpositive_integer(z))
    throw DomainError("gamma pole at non-positive integer");
  if (z.real() < 0.5) {
    // Reflection: gamma(z) = pi / (sin(pi z) gamma(1 - z)).
    const Complex s = std::sin(Complex(kPi) * z);
    return Complex(kPi) / (s * gamma_positive_half(Complex(1.0) - z));
  }
  return gamma_positive_half(z);
}

Complex factorial(Complex beta) { return gamma(beta + Complex(1.0)); }

Complex complex_pow(double base, double exponent) {
  if (base == 0.0) {
    if (exponent > 0.0) return Complex(0.0);
    throw DomainError("0 cannot be raised to a non-positive power");
  }
  if (base > 0.0) return Complex(std::pow(base, exponent));
  const double mag = std::pow(-base, exponent);
  return Complex(mag * std::cos(exponent * kPi), mag * std::sin(exponent * kPi));
}

double li(double x) {
  if (!(x > 1.0)) throw DomainError("li requires x > 1");
  // li(x) = gamma + ln ln x + sum_{n>=1} (ln x)^n / (n n!); all terms
  // positive for x > 1.
  const double lx = std::log(x);
  double sum = kEulerGamma + std::log(lx);
  double pow_term = 1.0;  // (ln x)^n / n!
  for (int n = 1; n <= 20000; ++n) {
    pow_term *= lx / n;
    const double term = pow_term / n;
    sum += term;
    // the positive floor keeps the threshold meaningful where li crosses 0
    if (term < 1e-17 * std::abs(sum) + 1e-300 && n > 4) return sum;
  }
  throw ConvergenceError("li series did not converge");
}

double Li(double x) {
  if (!(x >= 2.0)) throw DomainError("Li requires x >= 2");
  static const double li2 = li(2.0);
  return li(x) - li2;
}

double li_inverse(double y, const Config& cfg) {
  if (!(y > 0.0)) throw DomainError("li_inverse requires y > 0");
  // li is strictly increasing on (1, inf) onto (-inf, inf).
  double lo = 1.0 + 1e-9;  // li(lo) ~ -20
  double hi = 4.0;
  int grow = 0;
  while (li(hi) < y) {
    hi *= 2.0;
    if (++grow > 1100) throw ConvergenceError("li_inverse bracket failed");
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (li(mid) < y)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-6 * hi) break;
  }
  // Newton: x' = x - (li(x) - y) ln x.
  double x = 0.5 * (lo + hi);
  const double tol = std::max(cfg.abs_tol, 1e-14 * std::abs(y));
  for (int i = 0; i < cfg.max_iter; ++i) {
    const double r = li(x) - y;
    if (std::abs(r) <= tol) return x;
    double next = x - r * std::log(x);
    if (next <= lo || next >= hi) next = 0.5 * (lo + hi);
    if (r > 0.0)
      hi = std::min(hi, x);
    else
      lo = std::max(lo, x);
    x = next;
  }
  throw ConvergenceError("li_inverse Newton iteration did not converge");
}

double zeta_minus_one(int m) {
  if (m < 2) throw DomainError("zeta_minus_one requires m >= 2");
  // Euler-Maclaurin with N=16 and eight Bernoulli correction terms:
  // zeta(m) - 1 = sum_{j=2}^{N-1} j^-m + N^-m/2 + N^(1-m)/(m-1)
  //             + sum_k B_2k/(2k)! (m)_(2k-1) N^(-m-2k+1).
  constexpr long double kBernoulliOverFact[8] = {
      1.0L / 12.0L,          -1.0L / 720.0L,
      1.0L / 30240.0L,       -1.0L / 1209600.0L,
      1.0L / 47900160.0L,    -691.0L / 1307674368000.0L,
      1.0L / 74724249600.0L, -3617.0L / 10670622842880000.0L};
  constexpr long double kN = 16.0L;
  const long double s = m;
  long double sum = 0.0L;
  for (int j = 15; j >= 2; --j) sum += powl(static_cast<long double>(j), -s);
  sum += 0.5L * powl(kN, -s);
  sum += powl(kN, 1.0L - s) / (s - 1.0L);
  long double rising = 1.0L;  // (s)(s+1)...(s+2k-2)
  for (int k = 1; k <= 8; ++k) {
    rising *= (k == 1) ? s : (s + 2 * k - 3) * (s + 2 * k - 2);
    sum += kBernoulliOverFact[k - 1] * rising * powl(kN, -s - 2 * k + 1);
  }
  return static_cast<double>(sum);
}

double zeta(int m) { return 1.0 + zeta_minus_one(m); }

double riemann_r(double x, const Config& cfg) {
  if (!(x >= 2.0)) throw DomainError("riemann_r requires x >= 2");
  const double lx = std::log(x);
  long double sum = 1.0L;
  long double pow_term = 1.0L;  // (ln x)^n / n!
  for (int n = 1; n <= cfg.max_iter; ++n) {
    pow_term *= lx / n;
    const long double term = pow_term / (n * static_cast<long double>(zeta(n + 1)));
    sum += term;
    if (term < cfg.abs_tol) return static_cast<double>(sum);
  }
  throw ConvergenceError("Gram series did not converge at x = " +
                         std::to_string(x));
}

int moebius(int n) {
  if (n < 1) throw DomainError("moebius requires n >= 1");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

double riemann_r_mobius(double x) {
  if (!(x >= 2.0)) throw DomainError("riemann_r_mobius requires x >= 2");
  double sum = 0.0;
  for (int n = 1;; ++n) {
    const double root = std::exp(std::log(x) / n);
    if (root < 2.0) break;
    const int mu = moebius(n);
    if (mu != 0) sum += mu * li(root) / n;
  }
  return sum;
}

}  // namespace kfactor::specfun
