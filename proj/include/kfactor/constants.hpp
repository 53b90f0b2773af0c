#pragma once

namespace kfactor::specfun {

/// Euler--Mascheroni constant gamma.
inline constexpr double kEulerGamma = 0.577215664901532860606512090082;

/// e^gamma, the base of the exp-gamma CDF preset.
double exp_euler_gamma();

/// Default growth constant c = e^(e+1).
double c_default();

/// Alladi--Grinstead constant e^(c'-1) with c' = sum_{n>=2} (1/n) ln(n/(n-1)).
/// Evaluated through the zeta expansion c' = sum_{k>=1} (zeta(k+1)-1)/k.
double alladi_grinstead();

}  // namespace kfactor::specfun
