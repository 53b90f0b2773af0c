#pragma once

#include <complex>
#include <cstdint>

#include "kfactor/constants.hpp"

namespace kfactor::specfun {

using Complex = std::complex<double>;

struct Config {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_iter = 400;
  int quadrature_points = 20;
};

/// Complementary error function, relative error <= 1e-13 for |x| <= 10.
double erfc(double x);

/// Standard normal CDF.
double normal_cdf(double x);

/// Owen's T function T(h, a) = (1/2pi) int_0^a exp(-h^2(1+t^2)/2)/(1+t^2) dt.
/// Evaluated by panelled Gauss-Legendre quadrature; arguments with |a| > 1
/// are reduced through T(h,a) = (Phi(h)+Phi(ah))/2 - Phi(h)Phi(ah) - T(ah,1/a).
/// Absolute error <= 1e-12.
double owens_t(double h, double a);

/// Skew-normal CDF: erfc(-(x-mu)/(sqrt(2) sigma))/2 - 2 T((x-mu)/sigma, a).
double skew_normal_cdf(double x, double mu, double sigma, double a);

/// Gamma on real and complex arguments (Lanczos with reflection).
/// Throws DomainError at the poles 0, -1, -2, ...
Complex gamma(Complex z);

/// Generalized factorial: gamma(beta + 1).
Complex factorial(Complex beta);

/// Principal-branch power of a real base: exp(e (ln|b| + i arg b)) with
/// arg b in {0, pi}. Real base > 0 gives a real result; base 0 with positive
/// exponent gives 0, otherwise DomainError.
Complex complex_pow(double base, double exponent);

/// Logarithmic integral, principal value of int_0^x dt/ln t, for x > 1.
double li(double x);

/// Offset logarithmic integral li(x) - li(2), for x >= 2.
double Li(double x);

/// Inverse of li on (1, inf): returns x with li(x) = y, |li(x)-y| <= 1e-12
/// scaled. Bracketing plus Newton refinement.
double li_inverse(double y, const Config& cfg = {});

/// Riemann R function via the Gram series
/// 1 + sum_{n>=1} (ln x)^n / (n n! zeta(n+1)), truncated at cfg.abs_tol.
double riemann_r(double x, const Config& cfg = {});

/// R through the Moebius form sum mu(n)/n li(x^(1/n)), truncated once
/// x^(1/n) < 2. Independent cross-check of riemann_r.
double riemann_r_mobius(double x);

/// zeta(m) - 1 for integer m >= 2, by Euler-Maclaurin; accurate for all m
/// including the regime where zeta(m) rounds to 1.
double zeta_minus_one(int m);

double zeta(int m);

/// Moebius mu(n) by trial division (intended for small n).
int moebius(int n);

}  // namespace kfactor::specfun
