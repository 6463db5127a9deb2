#pragma once

// Thermal entanglement of two-qubit XY models (k_B = 1).
//
// Isotropic chain in a field B:  C = max((sinh(J/T) - 1) / (cosh(J/T) + cosh(B/T)), 0)
// Anisotropic chain, no field:  C = max((sinh(J/T) - cosh(Jg/T)) / (cosh(J/T) + cosh(Jg/T)), 0)
//
// Both are even in J; the closed forms here use |J| so they agree with the
// Gibbs-state route for ferromagnetic coupling as well.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "xychain/chain.hpp"
#include "xychain/entanglement.hpp"
#include "xychain/error.hpp"
#include "xychain/linalg.hpp"

namespace xychain {

struct ThermalPoint {
  double T = 1.0;
  double B = 0.0;
  double gamma = 0.0;
  double J = 1.0;

  void validate() const {
    if (!(T > 0.0) || !std::isfinite(T)) throw Error(Errc::BadTemperature, "temperature must be positive");
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw Error(Errc::BadGamma, "gamma must lie in [0,1]");
  }

  ChainSpec chain() const { return ChainSpec{2, J, gamma, B}; }
};

struct CriticalTemperature {
  double value = 0.0;
  double residual = 0.0;
};

/// Below this multiple of |J| the closed forms switch to a rearrangement scaled
/// by exp(-|J|/T) so sinh/cosh never overflow.
inline constexpr double kLowTemperatureFraction = 0.05;

/// exp(-H/T)/Z for the two-site chain, via the spectral decomposition of H with
/// energies measured from the ground state.
inline ComplexMatrix gibbs_state(const ThermalPoint& p) {
  p.validate();
  const HermitianEigen eig = eig_hermitian(build_hamiltonian(p.chain()));
  const double e0 = eig.values.front();
  double z = 0.0;
  for (double e : eig.values) z += std::exp(-(e - e0) / p.T);
  return hermitian_function(eig, [&](double e) { return cplx(std::exp(-(e - e0) / p.T) / z); });
}

namespace detail {

inline void require_temperature(double T) {
  if (!(T > 0.0) || !std::isfinite(T)) throw Error(Errc::BadTemperature, "temperature must be positive");
}

inline void require_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw Error(Errc::BadGamma, "gamma must lie in [0,1]");
}

// Builds the X-shaped two-qubit matrix
//   [ a  0  0  d ]
//   [ 0  b  c  0 ]
//   [ 0  c  b  0 ]
//   [ d  0  0  e ]
inline ComplexMatrix x_state(double a, double b, double c, double d, double e) {
  ComplexMatrix m(4, 4);
  m(0, 0) = a;
  m(1, 1) = m(2, 2) = b;
  m(1, 2) = m(2, 1) = c;
  m(0, 3) = m(3, 0) = d;
  m(3, 3) = e;
  return m;
}

// e^{-m} cosh(x) and e^{-m} sinh(x) without forming cosh(x).
inline double scaled_cosh(double x, double m) { return 0.5 * (std::exp(x - m) + std::exp(-x - m)); }
inline double scaled_sinh(double x, double m) { return 0.5 * (std::exp(x - m) - std::exp(-x - m)); }

}  // namespace detail

/// Closed-form Gibbs state of J (s+_1 s-_2 + h.c.) + (B/2)(sz_1 + sz_2).
inline ComplexMatrix thermal_state_isotropic(double J, double B, double T) {
  detail::require_temperature(T);
  const double x = J / T, y = B / T;
  const double m = std::max(std::abs(x), std::abs(y));
  const double z = 2.0 * (detail::scaled_cosh(x, m) + detail::scaled_cosh(y, m));
  return detail::x_state(std::exp(-y - m) / z, detail::scaled_cosh(x, m) / z, -detail::scaled_sinh(x, m) / z, 0.0,
                         std::exp(y - m) / z);
}

/// Closed-form Gibbs state of (J/2)[(1+g) sx sx + (1-g) sy sy].
inline ComplexMatrix thermal_state_anisotropic(double J, double gamma, double T) {
  detail::require_temperature(T);
  detail::require_gamma(gamma);
  const double x = J / T, y = J * gamma / T;
  const double m = std::max(std::abs(x), std::abs(y));
  const double z = 2.0 * (detail::scaled_cosh(x, m) + detail::scaled_cosh(y, m));
  const double corner = detail::scaled_cosh(y, m) / z;
  return detail::x_state(corner, detail::scaled_cosh(x, m) / z, -detail::scaled_sinh(x, m) / z,
                         -detail::scaled_sinh(y, m) / z, corner);
}

inline double concurrence_isotropic_closed_form(double J, double B, double T) {
  detail::require_temperature(T);
  const double x = std::abs(J) / T, y = std::abs(B) / T;
  double c;
  if (T >= kLowTemperatureFraction * std::abs(J)) {
    c = (std::sinh(x) - 1.0) / (std::cosh(x) + std::cosh(y));
  } else {
    const double num = detail::scaled_sinh(x, x) - std::exp(-x);
    const double den = detail::scaled_cosh(x, x) + detail::scaled_cosh(y, x);
    c = num / den;
  }
  return std::max(c, 0.0);
}

inline double concurrence_anisotropic_closed_form(double J, double gamma, double T) {
  detail::require_temperature(T);
  detail::require_gamma(gamma);
  const double x = std::abs(J) / T, y = std::abs(J) * gamma / T;
  double c;
  if (T >= kLowTemperatureFraction * std::abs(J)) {
    c = (std::sinh(x) - std::cosh(y)) / (std::cosh(x) + std::cosh(y));
  } else {
    const double num = detail::scaled_sinh(x, x) - detail::scaled_cosh(y, x);
    const double den = detail::scaled_cosh(x, x) + detail::scaled_cosh(y, x);
    c = num / den;
  }
  return std::max(c, 0.0);
}

/// T_c = |J| / arcsinh(1), the same for every field B.
inline CriticalTemperature critical_temperature_isotropic(double J) {
  if (J == 0.0) throw Error(Errc::ZeroCoupling, "critical temperature needs J != 0");
  const double tc = std::abs(J) / std::asinh(1.0);
  return {tc, std::abs(std::sinh(std::abs(J) / tc) - 1.0)};
}

/// T -> 0 limit of the isotropic concurrence: 1 below the critical field, 1/2 at
/// B = J, 0 above.
inline double zero_temperature_limit(double J, double B) {
  if (J == 0.0) return 0.0;
  const double j = std::abs(J), b = std::abs(B);
  if (b < j) return 1.0;
  if (b == j) return 0.5;
  return 0.0;
}

inline constexpr int kBisectionMaxIter = 200;
inline constexpr double kBracketExpansion = 2.0;
inline constexpr double kBracketCeiling = 1e3;  // in units of |J|

/// Root of sinh(J/T) = cosh(J g / T). The reported residual is that of the
/// equation divided by cosh(J g / T), which is the plain residual whenever the
/// terms are of order one and stays meaningful as T_c -> 0 for g -> 1.
inline CriticalTemperature critical_temperature_anisotropic(double J, double gamma) {
  if (J == 0.0) throw Error(Errc::ZeroCoupling, "critical temperature needs J != 0");
  detail::require_gamma(gamma);
  if (gamma == 1.0) throw Error(Errc::NoRoot, "Ising limit: sinh(x) = cosh(x) has no finite solution");
  const double j = std::abs(J);
  // sign of sinh(j/T) - cosh(j g/T), scaled by exp(-j/T)
  auto f = [j, gamma](double T) {
    const double x = j / T;
    return detail::scaled_sinh(x, x) - detail::scaled_cosh(gamma * x, x);
  };

  const double t0 = j / std::asinh(1.0);
  double lo = t0, hi = t0;
  while (f(lo) <= 0.0) {
    lo /= kBracketExpansion;
    if (lo < std::numeric_limits<double>::min()) throw Error(Errc::NoRoot, "no sign change below T_c(gamma=0)");
  }
  while (f(hi) >= 0.0) {
    hi *= kBracketExpansion;
    if (hi > kBracketCeiling * j) throw Error(Errc::NoRoot, "no sign change up to 1e3 |J|");
  }
  // f(lo) > 0 > f(hi), lo < hi

  for (int it = 0; it < kBisectionMaxIter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  const double tc = 0.5 * (lo + hi);
  const double x = j / tc;
  return {tc, std::abs(f(tc)) / detail::scaled_cosh(gamma * x, x)};
}

}  // namespace xychain
