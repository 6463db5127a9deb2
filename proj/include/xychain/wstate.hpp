#pragma once

// Generalized W states and their periodic generation by the isotropic XY ring
// from the initial state s+_1 |0...0>.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "xychain/chain.hpp"
#include "xychain/error.hpp"
#include "xychain/evolution.hpp"

namespace xychain {

struct WSpec {
  int n_qubits = 3;
  std::vector<double> phases;  // theta_1..theta_N in radians; empty means all zero
};

/// sum_n exp(i theta_n) s+_n |0...0> / sqrt(N)
inline StateVector make_w_state(const WSpec& spec) {
  if (spec.n_qubits < 2 || spec.n_qubits > 12) throw Error(Errc::BadDims, "W state needs 2..12 qubits");
  if (!spec.phases.empty() && spec.phases.size() != static_cast<std::size_t>(spec.n_qubits))
    throw Error(Errc::BadDims, "one phase per qubit required");
  const double amp = 1.0 / std::sqrt(static_cast<double>(spec.n_qubits));
  StateVector s{spec.n_qubits, std::vector<cplx>(std::size_t{1} << spec.n_qubits)};
  for (int site = 1; site <= spec.n_qubits; ++site) {
    const double theta = spec.phases.empty() ? 0.0 : spec.phases[static_cast<std::size_t>(site - 1)];
    s.amplitudes[excitation_index(spec.n_qubits, site)] = std::polar(amp, theta);
  }
  return s;
}

/// Wraps an angle into (-pi, pi].
inline double wrap_phase(double theta) {
  double w = std::remainder(theta, 2.0 * std::numbers::pi);
  if (w <= -std::numbers::pi) w += 2.0 * std::numbers::pi;
  return w;
}

/// max_n P(n) - min_n P(n)
inline double probability_spread(const AmplitudeSet& amp) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& b : amp.b) {
    const double p = std::norm(b);
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  return hi - lo;
}

struct CrossingReport {
  std::vector<double> times;
  std::vector<double> fidelity_at_times;
  std::vector<double> max_probability_spread_at_times;
  // Smallest spread seen anywhere in (0, t_max], reported whether or not it
  // qualifies as a crossing.
  double min_spread = std::numeric_limits<double>::infinity();
  double min_spread_time = 0.0;
};

inline constexpr double kCrossingTol = 1e-7;
inline constexpr double kCrossingTimeTol = 1e-9;
inline constexpr int kScanPointsPerPeriod = 10000;

/// Recurrence time of the one-excitation dynamics, 2 pi / f with f the
/// fundamental gap frequency, if the gaps are commensurate.
inline std::optional<double> one_excitation_period(const ChainSpec& spec, double tol = 1e-9) {
  const auto f = fundamental_gap_frequency(spec, tol);
  if (!f) return std::nullopt;
  return 2.0 * std::numbers::pi / *f;
}

namespace detail {

// Minimizes a unimodal f on [a, b] down to an interval of width `width`.
template <typename F>
double golden_section_min(F&& f, double a, double b, double width) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > width) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? c : d;
}

}  // namespace detail

/// Times in (0, t_max] at which all one-excitation probabilities coincide to
/// within `tol`. The spread max P - min P is scanned on a grid of 10^4 points
/// per recurrence period (per 2 pi / |J| when there is none), and every grid
/// minimum is refined by golden-section search to 1e-9 in t.
inline CrossingReport find_crossings(const ChainSpec& spec, double t_max, double tol = kCrossingTol) {
  detail::require_isotropic_free(spec);
  if (spec.coupling_J == 0.0) throw Error(Errc::ZeroCoupling, "no dynamics for J = 0");
  CrossingReport rep;
  if (!(t_max > 0.0)) return rep;

  const double unit = one_excitation_period(spec).value_or(2.0 * std::numbers::pi / std::abs(spec.coupling_J));
  const double step_target = unit / kScanPointsPerPeriod;
  const auto intervals = static_cast<std::size_t>(std::ceil(t_max / step_target));
  const double step = t_max / static_cast<double>(intervals);

  auto spread_at = [&spec](double t) { return probability_spread(amplitudes_analytic(spec, t)); };
  std::vector<double> s(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) {
    s[i] = spread_at(step * static_cast<double>(i));
    if (i > 0 && s[i] < rep.min_spread) {
      rep.min_spread = s[i];
      rep.min_spread_time = step * static_cast<double>(i);
    }
  }

  auto refine = [&](double a, double b) {
    const double t = detail::golden_section_min(spread_at, a, std::min(b, t_max), kCrossingTimeTol);
    const double st = spread_at(t);
    if (st < rep.min_spread) {
      rep.min_spread = st;
      rep.min_spread_time = t;
    }
    if (st > tol || t <= 0.0) return;
    if (!rep.times.empty() && t - rep.times.back() < 10.0 * kCrossingTimeTol) return;
    const AmplitudeSet amp = amplitudes_analytic(spec, t);
    double fid = 0.0;
    for (const auto& b : amp.b) fid += std::abs(b);
    fid = fid * fid / static_cast<double>(spec.n_sites);
    rep.times.push_back(t);
    rep.fidelity_at_times.push_back(fid);
    rep.max_probability_spread_at_times.push_back(st);
  };

  for (std::size_t i = 1; i <= intervals; ++i) {
    const bool left = s[i] < s[i - 1];
    const bool right = i == intervals || s[i] <= s[i + 1];
    if (!(left && right)) continue;
    const double a = step * static_cast<double>(i - 1);
    const double b = i == intervals ? t_max : step * static_cast<double>(i + 1);
    refine(a, b);
  }
  return rep;
}

struct WCheck {
  bool is_w = false;
  std::vector<double> phases;  // relative to site 1, wrapped to (-pi, pi]
};

inline constexpr double kWModulusTol = 1e-8;

/// Confirms the evolved state at t is a generalized W state and extracts its
/// phases relative to site 1. Throws NotAWState otherwise.
inline WCheck verify_w_at_crossing(const ChainSpec& spec, double t) {
  const AmplitudeSet amp = amplitudes_analytic(spec, t);
  const double target = 1.0 / std::sqrt(static_cast<double>(spec.n_sites));
  for (const auto& b : amp.b)
    if (std::abs(std::abs(b) - target) > kWModulusTol) throw Error(Errc::NotAWState, "amplitude moduli are not all 1/sqrt(N)");
  WCheck out{true, {}};
  const double ref = std::arg(amp.b.front());
  for (const auto& b : amp.b) out.phases.push_back(wrap_phase(std::arg(b) - ref));
  out.phases.front() = 0.0;
  return out;
}

struct Periodicity {
  bool is_periodic = false;
  std::optional<double> period;
  double max_deviation = 0.0;  // max over samples of |b(t0+T) - phase * b(t0)|
};

/// Recurrence of the amplitudes up to a global phase. The candidate period
/// comes from the gap frequencies and is confirmed at 32 pseudo-random t0.
inline Periodicity periodicity_check(const ChainSpec& spec, double tol = 1e-9) {
  detail::require_isotropic_free(spec);
  Periodicity out;
  const auto period = one_excitation_period(spec);
  if (!period) return out;

  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> dist(0.0, 50.0);
  for (int sample = 0; sample < 32; ++sample) {
    const double t0 = dist(rng);
    const AmplitudeSet a = amplitudes_analytic(spec, t0);
    const AmplitudeSet b = amplitudes_analytic(spec, t0 + *period);
    cplx inner = 0.0;
    for (std::size_t n = 0; n < a.b.size(); ++n) inner += std::conj(a.b[n]) * b.b[n];
    const cplx phase = std::abs(inner) > 0.0 ? inner / std::abs(inner) : cplx(1.0);
    for (std::size_t n = 0; n < a.b.size(); ++n)
      out.max_deviation = std::max(out.max_deviation, std::abs(b.b[n] - phase * a.b[n]));
  }
  out.is_periodic = out.max_deviation <= tol;
  if (out.is_periodic) out.period = period;
  return out;
}

}  // namespace xychain
