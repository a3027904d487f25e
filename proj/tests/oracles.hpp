#pragma once

// Test-only reference values and computations. The numeric constants were
// frozen from a 40-digit computation and rounded to the nearest double; the
// function oracles below stay off the library's evaluation paths (long double
// arithmetic and the radical closed form instead of the stable one).

#include <cmath>

namespace oracles {

constexpr double kLinUniform2 = 0.3112781244591329;
constexpr double kLinUniform3 = 0.4591479170272448;
constexpr double kLinUniform6 = 0.6548575458269756;
constexpr double kLinUniform6Minus2 = 0.3435794213678428;
constexpr double kLinUniform100 = 0.959531296097706;
constexpr double kKlHalfVsQuarters = 0.2075187496394219;
constexpr double kSurprisalD1Half = -0.792481250360578;
constexpr double kSurprisalD2One = 0.36067376022224085;
constexpr double kSurprisalD2Half = 0.9617966939259756;
constexpr double kWeightedD2Half = -1.1040641537581684;
constexpr double kWeightedD2Nine = -0.6983459222936511;
// H* of (0.1, 0.2, 0.3, 0.4)
constexpr double kLinTenths = 0.504177997650901;

/// I*(p) straight from the radical definition, in long double.
inline long double lin_surprisal_radical(long double p) {
  if (p <= 0.0L) return 1.0L;
  const long double ratio = 4.0L * std::pow(p, p) / std::pow(p + 1.0L, p + 1.0L);
  return std::log2(std::sqrt(ratio));
}

/// H*(U_N) from the radical closed form.
inline double lin_entropy_uniform_radical(long double n) {
  return static_cast<double>(lin_surprisal_radical(1.0L / n));
}

/// The entropy summand f(a) = a I*(a), for finite differencing.
inline long double weighted_surprisal(long double a) { return a * lin_surprisal_radical(a); }

template <typename F>
long double central_d1(F f, long double x, long double h) {
  return (f(x + h) - f(x - h)) / (2.0L * h);
}

template <typename F>
long double central_d2(F f, long double x, long double h) {
  return (f(x + h) - 2.0L * f(x) + f(x - h)) / (h * h);
}

}  // namespace oracles
