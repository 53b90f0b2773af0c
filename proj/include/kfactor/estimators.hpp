#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kfactor/factor_table.hpp"
#include "kfactor/prime_table.hpp"
#include "kfactor/specfun.hpp"

namespace kfactor::estimators {

using specfun::Complex;

/// Constants of the CDF weighting function and the growth constant c.
struct CdfParams {
  double mu = 0.0;
  double sigma = 1.0;
  double a_skew = 0.0;
  double c = 2.0;
};

/// The two published readings of the CDF constants: one built from Euler's
/// gamma, one from e^gamma. Calibrated resolves to the reading that tracks
/// the reference counts best (the e^gamma one).
enum class CdfPreset { kGamma, kExpGamma, kCalibrated };

CdfPreset resolve_preset(CdfPreset preset);
CdfParams preset_params(CdfPreset preset);
std::string_view preset_name(CdfPreset preset);
std::optional<CdfPreset> parse_preset(std::string_view name);

struct SelbergConfig {
  std::uint64_t prime_limit = 1'000'000;
  bool tail_correction = true;
  double r_bound = 1.9;  // uniformity window constant, must stay below 2
};

/// Landau's main term (x / ln x) (ln ln x)^(k-1) / (k-1)!. Requires x > e.
double landau(double x, int k);

/// Selberg's factor G(z) = 1/Gamma(z+1) prod_p (1 - z/p)^(-1) (1 - 1/p)^z,
/// evaluated in log space over primes <= cfg.prime_limit with a second-order
/// tail estimate z(z-1)/2 sum_{p>P} p^-2 when cfg.tail_correction is on.
/// Domain 0 <= z < 2.
double selberg_G(double z, const SelbergConfig& cfg,
                 std::span<const std::uint32_t> primes);
double selberg_G(double z, const SelbergConfig& cfg = {});

/// G((k-1)/ln ln x) * landau(x, k). Refuses k beyond r_bound * ln ln x.
double selberg_estimate(double x, int k, const SelbergConfig& cfg = {});

/// CDF weight alpha(k), the skew-normal CDF at k under the given params.
double cdf_alpha(double k, const CdfParams& params);

/// beta = L + L^(1/pi) with L = ln(c alpha); complex once L < 0.
Complex cdf_beta(double alpha, double c);

/// The corrected estimate of N_k(x): with y = x 2^(1-k), w = c alpha y,
/// evaluates w (ln ln w)^beta / (beta! ln w) in complex arithmetic and
/// returns the real part. Throws DomainError when w <= 1.
double cdf_estimate(double x, int k, const CdfParams& params);

/// k -> infinity form: c x (ln ln(c x))^beta / (beta! ln(c x)) with the real
/// beta = ln c + (ln c)^(1/pi). Requires c > 1 and c x > e.
double limit_estimate(double x, double c);

/// Power-3 boundary fit alpha_AG (e+1)^(k/e) and the asymptote translation
/// -alpha_AG (e+1)^(-k/e) - k.
double bounding_curve(double k);
double translate_curve(double k);

/// The alternative integral form of alpha at k = 1, evaluated exactly as
/// published (including its prefactors and limits). Cross-check only; it is
/// not used by cdf_estimate.
double cdf_alpha_integral_form();

struct ComparisonRow {
  int k = 0;
  std::optional<double> landau;
  std::optional<double> selberg;
  std::optional<double> cdf;
  std::uint64_t actual = 0;
};

struct ComparisonTable {
  std::uint64_t x = 0;
  std::vector<ComparisonRow> rows;
};

/// Rows k = 1..k_max with the estimators evaluated where defined (a failing
/// estimator leaves an empty cell) and exact counts from the table.
ComparisonTable comparison_table(const FactorCountTable& table,
                                 std::uint64_t x, int k_max,
                                 const CdfParams& params, bool include_selberg,
                                 const SelbergConfig& selberg_cfg = {});

struct RatioSeriesRow {
  std::uint64_t x = 0;
  std::uint64_t pi_x = 0;
  std::vector<std::optional<double>> ratios;  // aligned with k_list
  std::optional<double> sqrt_li;
  std::optional<double> two_li_cuberoot;
  std::optional<double> curve_over_r;
  std::string note;
};

struct RatioSeries {
  std::vector<int> k_list;
  double c = 0.0;
  std::vector<RatioSeriesRow> rows;
};

/// Per grid point x: N_k(2^(k-1) x) / pi(x) for each k, sqrt(Li(x)),
/// 2 Li(x)^(1/3), and limit_estimate(x, c) / R(x). Infeasible cells are left
/// empty with a note.
RatioSeries ratio_series(const PrimeTable& primes, std::uint64_t x_max,
                         std::span<const int> k_list, double c,
                         std::uint64_t step = 0);

/// Integer grid for series emission: every integer from 2 when step is
/// given (or x_max is small), otherwise a deduplicated logarithmic grid.
std::vector<std::uint64_t> series_grid(std::uint64_t x_max,
                                       std::uint64_t step = 0);

}  // namespace kfactor::estimators
