#include "kfactor/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "kfactor/constants.hpp"
#include "kfactor/counting.hpp"
#include "kfactor/errors.hpp"
#include "kfactor/quadrature.hpp"

namespace kfactor::estimators {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

// Prime zeta at 2 through sum_k mu(k)/k ln zeta(2k).
double prime_zeta_2() {
  static const double value = [] {
    long double sum = 0.0L;
    for (int k = 1; k <= 32; ++k) {
      const int mu = specfun::moebius(k);
      if (mu == 0) continue;
      sum += mu * log1pl(specfun::zeta_minus_one(2 * k)) /
             static_cast<long double>(k);
    }
    return static_cast<double>(sum);
  }();
  return value;
}

}  // namespace

CdfPreset resolve_preset(CdfPreset preset) {
  return preset == CdfPreset::kCalibrated ? CdfPreset::kExpGamma : preset;
}

CdfParams preset_params(CdfPreset preset) {
  const double c = specfun::c_default();
  switch (resolve_preset(preset)) {
    case CdfPreset::kGamma: {
      const double g = specfun::kEulerGamma;
      return CdfParams{2.0 * g + 0.25, 2.0 * g + 0.25, g - 0.25, c};
    }
    case CdfPreset::kExpGamma:
    default: {
      const double eg = specfun::exp_euler_gamma();
      return CdfParams{2.0 * eg + 0.25, 2.0 * eg + 0.25, eg - 0.25, c};
    }
  }
}

std::string_view preset_name(CdfPreset preset) {
  switch (resolve_preset(preset)) {
    case CdfPreset::kGamma:
      return "gamma";
    case CdfPreset::kExpGamma:
    default:
      return "exp-gamma";
  }
}

std::optional<CdfPreset> parse_preset(std::string_view name) {
  if (name == "gamma") return CdfPreset::kGamma;
  if (name == "exp-gamma") return CdfPreset::kExpGamma;
  if (name == "calibrated") return CdfPreset::kCalibrated;
  return std::nullopt;
}

double landau(double x, int k) {
  if (k <= 0) throw DomainError("k must be positive");
  if (!(x > kE)) throw DomainError("landau requires x > e");
  const double lx = std::log(x);
  if (k == 1) return x / lx;
  return x / lx * std::pow(std::log(lx), k - 1) /
         std::tgamma(static_cast<double>(k));
}

double selberg_G(double z, const SelbergConfig& cfg,
                 std::span<const std::uint32_t> primes) {
  if (!(z >= 0.0) || !(z < 2.0))
    throw DomainError("G(z) is defined for 0 <= z < 2");
  if (cfg.prime_limit < 100)
    throw DomainError("Selberg prime limit must be >= 100");

  long double log_product = 0.0L;
  long double inv_p2_partial = 0.0L;
  for (const std::uint32_t p : primes) {
    if (p > cfg.prime_limit) break;
    const double pd = static_cast<double>(p);
    log_product += -log1p(-z / pd) + z * log1p(-1.0 / pd);
    inv_p2_partial += 1.0L / (static_cast<long double>(pd) * pd);
  }
  if (cfg.tail_correction) {
    const long double tail2 = prime_zeta_2() - inv_p2_partial;
    log_product += 0.5L * z * (z - 1.0L) * tail2;
  }
  return static_cast<double>(expl(log_product)) / std::tgamma(z + 1.0);
}

double selberg_G(double z, const SelbergConfig& cfg) {
  const PrimeTable primes = PrimeTable::build(cfg.prime_limit);
  return selberg_G(z, cfg, primes.primes());
}

double selberg_estimate(double x, int k, const SelbergConfig& cfg) {
  if (k <= 0) throw DomainError("k must be positive");
  if (!(cfg.r_bound > 0.0) || !(cfg.r_bound < 2.0))
    throw DomainError("uniformity constant R must lie in (0, 2)");
  if (!(x > std::exp(kE)))
    throw DomainError("selberg_estimate requires x > e^e");
  const double llx = std::log(std::log(x));
  if (static_cast<double>(k) > cfg.r_bound * llx)
    throw WindowError("k = " + std::to_string(k) +
                      " outside the uniformity window k <= " +
                      std::to_string(cfg.r_bound * llx));
  const double z = (k - 1) / llx;
  return selberg_G(z, cfg) * landau(x, k);
}

double cdf_alpha(double k, const CdfParams& params) {
  return specfun::skew_normal_cdf(k, params.mu, params.sigma, params.a_skew);
}

Complex cdf_beta(double alpha, double c) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  if (alpha > 1.0) throw DomainError("alpha must be <= 1");
  if (!(c > 1.0)) throw DomainError("c must be > 1");
  const double big_l = std::log(c * alpha);
  if (big_l == 0.0) return Complex(0.0);
  return Complex(big_l) + specfun::complex_pow(big_l, 1.0 / kPi);
}

double cdf_estimate(double x, int k, const CdfParams& params) {
  if (k <= 0) throw DomainError("k must be positive");
  if (!(x >= 2.0)) throw DomainError("cdf_estimate requires x >= 2");
  const double alpha = cdf_alpha(static_cast<double>(k), params);
  const double y = std::ldexp(x, 1 - k);
  const double w = params.c * alpha * y;
  if (!(w > 1.0))
    throw DomainError("cdf_estimate undefined: c*alpha*y = " +
                      std::to_string(w) + " <= 1; increase x");
  const Complex beta = cdf_beta(alpha, params.c);
  const Complex ln_w = std::log(Complex(w));
  const Complex ln_ln_w = std::log(ln_w);  // principal branch when ln w < 1
  const Complex numerator = Complex(w) * std::pow(ln_ln_w, beta);
  const Complex denominator = specfun::factorial(beta) * ln_w;
  return (numerator / denominator).real();
}

double limit_estimate(double x, double c) {
  if (!(c > 1.0)) throw DomainError("c must be > 1");
  if (!(c * x > kE)) throw DomainError("limit_estimate requires c x > e");
  const double lc = std::log(c);
  const double beta = lc + std::pow(lc, 1.0 / kPi);
  const double ln_cx = std::log(c * x);
  const double gamma_term = specfun::gamma(Complex(beta + 1.0)).real();
  return c * x * std::pow(std::log(ln_cx), beta) / (gamma_term * ln_cx);
}

double bounding_curve(double k) {
  return specfun::alladi_grinstead() * std::pow(kE + 1.0, k / kE);
}

double translate_curve(double k) {
  return -specfun::alladi_grinstead() * std::pow(kE + 1.0, -k / kE) - k;
}

double cdf_alpha_integral_form() {
  const double eg = specfun::exp_euler_gamma();
  // First piece: (1/pi) int_{(-3+8e^g)/(sqrt2 (1+8e^g))}^inf e^{-t^2} dt.
  const double lower = (-3.0 + 8.0 * eg) / (std::numbers::sqrt2 * (1.0 + 8.0 * eg));
  const double first =
      (1.0 / kPi) * 0.5 * std::sqrt(kPi) * specfun::erfc(lower);
  // Second piece: int_0^{1/4 - e^g} of the Owen-type integrand with
  // h^2 = (3 - 8e^g)^2 / (1 + 8e^g)^2, no prefactor.
  const double h = (3.0 - 8.0 * eg) / (1.0 + 8.0 * eg);
  const double h2 = h * h;
  const double upper = 0.25 - eg;
  const auto integrand = [h2](double t) {
    return std::exp(-0.5 * h2 * (1.0 + t * t)) / (1.0 + t * t);
  };
  const double second =
      specfun::quad::gauss_legendre_panels(integrand, 0.0, upper, 16);
  return first + second;
}

ComparisonTable comparison_table(const FactorCountTable& table,
                                 std::uint64_t x, int k_max,
                                 const CdfParams& params, bool include_selberg,
                                 const SelbergConfig& selberg_cfg) {
  if (k_max <= 0) throw DomainError("k_max must be positive");
  const auto actual = counts_by_k(table, x, k_max, CountMode::kBigOmega);
  const double xd = static_cast<double>(x);

  // One prime sweep shared by all Selberg rows.
  std::optional<PrimeTable> selberg_primes;
  if (include_selberg)
    selberg_primes = PrimeTable::build(selberg_cfg.prime_limit);

  ComparisonTable result;
  result.x = x;
  result.rows.reserve(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    ComparisonRow row;
    row.k = k;
    row.actual = actual[static_cast<std::size_t>(k) - 1];
    try {
      row.landau = landau(xd, k);
    } catch (const DomainError&) {
    }
    if (include_selberg) {
      try {
        const double llx = std::log(std::log(xd));
        if (static_cast<double>(k) > selberg_cfg.r_bound * llx)
          throw WindowError("outside window");
        const double z = (k - 1) / llx;
        row.selberg = selberg_G(z, selberg_cfg, selberg_primes->primes()) *
                      landau(xd, k);
      } catch (const DomainError&) {
      }
    }
    try {
      row.cdf = cdf_estimate(xd, k, params);
    } catch (const DomainError&) {
    }
    result.rows.push_back(row);
  }
  return result;
}

std::vector<std::uint64_t> series_grid(std::uint64_t x_max,
                                       std::uint64_t step) {
  if (x_max < 2) throw DomainError("series grid requires x_max >= 2");
  std::vector<std::uint64_t> grid;
  if (step == 0 && x_max > 1000) {
    // Logarithmic grid, about 512 points, always ending at x_max.
    const int points = 512;
    const double ratio = std::log(static_cast<double>(x_max) / 2.0);
    for (int i = 0; i < points; ++i) {
      const double t = static_cast<double>(i) / (points - 1);
      const auto x =
          static_cast<std::uint64_t>(std::llround(2.0 * std::exp(ratio * t)));
      if (grid.empty() || x > grid.back()) grid.push_back(x);
    }
    if (grid.back() != x_max) grid.push_back(x_max);
    return grid;
  }
  const std::uint64_t stride = step == 0 ? 1 : step;
  for (std::uint64_t x = 2; x <= x_max; x += stride) grid.push_back(x);
  return grid;
}

RatioSeries ratio_series(const PrimeTable& primes, std::uint64_t x_max,
                         std::span<const int> k_list, double c,
                         std::uint64_t step) {
  if (!(c > 1.0)) throw DomainError("c must be > 1");
  if (x_max > primes.limit())
    throw ResourceError("prime table does not cover x_max", x_max);
  for (const int k : k_list)
    if (k <= 0) throw DomainError("k values must be positive");

  RatioSeries series;
  series.k_list.assign(k_list.begin(), k_list.end());
  series.c = c;
  for (const std::uint64_t x : series_grid(x_max, step)) {
    RatioSeriesRow row;
    row.x = x;
    row.pi_x = primes.pi(x);
    if (row.pi_x == 0) {
      row.note = "skipped: pi(x) = 0";
      series.rows.push_back(std::move(row));
      continue;
    }
    for (const int k : k_list) {
      if (k - 1 >= 64 || x > (std::numeric_limits<std::uint64_t>::max() >> (k - 1))) {
        row.ratios.emplace_back(std::nullopt);
        row.note = "some k skipped: 2^(k-1) x overflows";
        continue;
      }
      const std::uint64_t scaled = x << (k - 1);
      row.ratios.emplace_back(
          static_cast<double>(count_exact_recursive(primes, scaled, k)) /
          static_cast<double>(row.pi_x));
    }
    const double xd = static_cast<double>(x);
    row.sqrt_li = std::sqrt(specfun::Li(xd));
    row.two_li_cuberoot = 2.0 * std::cbrt(specfun::Li(xd));
    try {
      row.curve_over_r = limit_estimate(xd, c) / specfun::riemann_r(xd);
    } catch (const DomainError&) {
      row.note = "curve undefined at this x";
    }
    series.rows.push_back(std::move(row));
  }
  return series;
}

}  // namespace kfactor::estimators
