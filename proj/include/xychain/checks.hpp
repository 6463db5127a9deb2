#pragma once

// Built-in verification suites: each check measures a residual against a
// known answer and passes when it is within tolerance.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xychain/chain.hpp"
#include "xychain/entanglement.hpp"
#include "xychain/error.hpp"
#include "xychain/evolution.hpp"
#include "xychain/thermal.hpp"
#include "xychain/wstate.hpp"

namespace xychain {

enum class CheckSuite { evolution, wstate, thermal, all };

inline std::optional<CheckSuite> parse_suite(std::string_view s) {
  if (s == "evolution") return CheckSuite::evolution;
  if (s == "wstate") return CheckSuite::wstate;
  if (s == "thermal") return CheckSuite::thermal;
  if (s == "all") return CheckSuite::all;
  return std::nullopt;
}

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_residual = 0.0;
};

namespace detail {

using std::numbers::pi;

struct CheckDef {
  std::string name;
  double tol;
  std::function<double()> residual;
};

inline ChainSpec free_ring(int n, double J = 1.0) { return ChainSpec{n, J, 0.0, 0.0}; }

inline double max_over(std::span<const double> xs, auto&& f) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, f(x));
  return m;
}

// Distance between two sorted lists of times; infinite if the sizes differ.
inline double list_distance(const std::vector<double>& got, std::initializer_list<double> want) {
  if (got.size() != want.size()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  auto it = want.begin();
  for (double g : got) d = std::max(d, std::abs(g - *it++));
  return d;
}

inline double phase_residual(const ChainSpec& spec, double t, std::initializer_list<double> want) {
  const auto w = verify_w_at_crossing(spec, t);
  double d = 0.0;
  auto it = want.begin();
  for (double ph : w.phases) d = std::max(d, std::abs(wrap_phase(ph - *it++)));
  return d;
}

inline std::vector<CheckDef> evolution_checks() {
  const auto grid = uniform_grid(0.0, 20.0, 401);
  return {
      {"two-site P1 = cos^2 t", 1e-12,
       [grid] {
         return max_over(grid, [](double t) {
           return std::abs(std::norm(amplitudes_analytic(free_ring(2), t).b[0]) - std::cos(t) * std::cos(t));
         });
       }},
      {"N=3 probabilities closed form", 1e-12,
       [grid] {
         return max_over(grid, [](double t) {
           const auto a = amplitudes_analytic(free_ring(3), t);
           const double p1 = (5 + 4 * std::cos(1.5 * t)) / 9, p2 = (2 - 2 * std::cos(1.5 * t)) / 9;
           return std::max({std::abs(std::norm(a.b[0]) - p1), std::abs(std::norm(a.b[1]) - p2),
                            std::abs(std::norm(a.b[2]) - p2)});
         });
       }},
      {"N=4 probabilities closed form", 1e-12,
       [grid] {
         return max_over(grid, [](double t) {
           const auto a = amplitudes_analytic(free_ring(4), t);
           const double c = std::cos(t / 2), s = std::sin(t / 2), q = std::sin(t) * std::sin(t) / 4;
           return std::max({std::abs(std::norm(a.b[0]) - c * c * c * c), std::abs(std::norm(a.b[2]) - s * s * s * s),
                            std::abs(std::norm(a.b[1]) - q), std::abs(std::norm(a.b[3]) - q)});
         });
       }},
      {"norm conservation N<=12", 1e-10,
       [grid] {
         double m = 0.0;
         for (int n = 2; n <= 12; ++n)
           m = std::max(m, max_over(grid, [n](double t) {
                          return std::abs(amplitudes_analytic(free_ring(n), t).total_probability() - 1.0);
                        }));
         return m;
       }},
      {"reflection symmetry N<=12", 1e-10,
       [grid] {
         double m = 0.0;
         for (int n = 3; n <= 12; ++n)
           m = std::max(m, max_over(grid, [n](double t) {
                          const auto a = amplitudes_analytic(free_ring(n), t);
                          double d = 0.0;
                          for (int s = 2; s <= n; ++s) d = std::max(d, std::abs(std::norm(a.b[s - 1]) - std::norm(a.b[n + 1 - s])));
                          return d;
                        }));
         return m;
       }},
      {"full-space oracle N<=8", 1e-10,
       [] {
         const auto ts = uniform_grid(0.0, 20.0, 81);
         double m = 0.0;
         for (int n = 2; n <= 8; ++n) {
           const Propagator prop(free_ring(n));
           const auto psi0 = StateVector::basis(n, excitation_index(n, 1));
           for (double t : ts) {
             const auto num = project_one_excitation(prop.evolve(psi0, t), t);
             const auto ana = amplitudes_analytic(free_ring(n), t);
             for (int k = 0; k < n; ++k) m = std::max(m, std::abs(num.b[k] - ana.b[k]));
           }
         }
         return m;
       }},
      {"singlet phase exp(iJt)", 1e-12,
       [] {
         const double r = 1.0 / std::sqrt(2.0);
         const StateVector singlet{2, {0.0, r, -r, 0.0}};
         double m = 0.0;
         for (double t : {0.3, 1.7, 6.0}) {
           const auto out = evolve_full(free_ring(2), singlet, t);
           for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(out.amplitudes[i] - std::polar(1.0, t) * singlet.amplitudes[i]));
         }
         return m;
       }},
      {"swap gate basis maps", 1e-10, [] { return swap_gate_check(free_ring(2)).max_map_deviation(); }},
      {"sqrt-swap squared = swap", 1e-12,
       [] {
         const auto rep = swap_gate_check(free_ring(2));
         return std::max(rep.sqrt_swap_square_defect, rep.sqrt_swap_unitarity_defect);
       }},
  };
}

inline std::vector<CheckDef> wstate_checks() {
  return {
      {"N=3 crossings at {4pi/9 8pi/9}", 1e-6,
       [] { return list_distance(find_crossings(free_ring(3), 4 * pi / 3).times, {4 * pi / 9, 8 * pi / 9}); }},
      {"N=4 crossings at {pi/2 3pi/2}", 1e-6,
       [] { return list_distance(find_crossings(free_ring(4), 2 * pi).times, {pi / 2, 3 * pi / 2}); }},
      {"N=3 W phases at 4pi/9", 1e-6, [] { return phase_residual(free_ring(3), 4 * pi / 9, {0.0, -2 * pi / 3, -2 * pi / 3}); }},
      {"N=3 W phases at 8pi/9", 1e-6, [] { return phase_residual(free_ring(3), 8 * pi / 9, {0.0, 2 * pi / 3, 2 * pi / 3}); }},
      {"N=4 W phases at pi/2", 1e-6, [] { return phase_residual(free_ring(4), pi / 2, {0.0, -pi / 2, pi, -pi / 2}); }},
      {"N=4 W phases at 3pi/2", 1e-6, [] { return phase_residual(free_ring(4), 3 * pi / 2, {0.0, pi / 2, pi, pi / 2}); }},
      // residual is the number of crossings found
      {"N=5 no crossings up to t=100", 0.0, [] { return static_cast<double>(find_crossings(free_ring(5), 100.0).times.size()); }},
      {"N=6 no crossings over one period", 0.0,
       [] {
         const auto rep = find_crossings(free_ring(6), 4 * pi);
         return rep.times.size() + (rep.min_spread > 1e-3 ? 0.0 : 1.0);
       }},
      {"crossing pair concurrence = 2/N", 1e-6,
       [] {
         double m = 0.0;
         for (auto [n, tmax] : {std::pair{3, 4 * pi / 3}, std::pair{4, 2 * pi}})
           for (double t : find_crossings(free_ring(n), tmax).times) {
             const auto amp = amplitudes_analytic(free_ring(n), t);
             for (int i = 1; i <= n; ++i)
               for (int j = i + 1; j <= n; ++j)
                 m = std::max(m, std::abs(concurrence_pair_from_state(amp.to_state(), i, j).value - 2.0 / n));
           }
         return m;
       }},
      {"W_N pair concurrence = 2/N for N<=10", 1e-12,
       [] {
         std::mt19937_64 rng(0x57a7e);
         std::uniform_real_distribution<double> ph(-pi, pi);
         double m = 0.0;
         for (int n = 2; n <= 10; ++n)
           for (int draw = 0; draw < 10; ++draw) {
             std::vector<double> phases(n);
             for (auto& p : phases) p = ph(rng);
             const auto w = make_w_state({n, phases});
             for (int j = 2; j <= n; ++j) m = std::max(m, std::abs(concurrence_pair_from_state(w, 1, j).value - 2.0 / n));
           }
         return m;
       }},
      {"period N=3 = 4pi/3", 1e-12,
       [] {
         const auto p = periodicity_check(free_ring(3));
         return p.is_periodic ? std::abs(*p.period - 4 * pi / 3) : std::numeric_limits<double>::infinity();
       }},
      {"period N=4 = 2pi", 1e-12,
       [] {
         const auto p = periodicity_check(free_ring(4));
         return p.is_periodic ? std::abs(*p.period - 2 * pi) : std::numeric_limits<double>::infinity();
       }},
      {"N=5 aperiodic", 0.0, [] { return periodicity_check(free_ring(5)).is_periodic ? 1.0 : 0.0; }},
  };
}

inline std::vector<CheckDef> thermal_checks() {
  auto matrix = [](double J, double B, double g, double T) { return concurrence(gibbs_state({T, B, g, J})).value; };
  return {
      {"T_c(gamma=0) = 1.1346", 1e-4, [] { return std::abs(critical_temperature_isotropic(1.0).value - 1.1346); }},
      {"T_c(gamma=0) bisection = arcsinh form", 1e-12,
       [] { return std::abs(critical_temperature_anisotropic(1.0, 0.0).value - critical_temperature_isotropic(1.0).value); }},
      {"T_c(gamma=0.6) residual", 1e-10,
       [] {
         const double tc = critical_temperature_anisotropic(1.0, 0.6).value;
         return std::abs(std::sinh(1.0 / tc) - std::cosh(0.6 / tc));
       }},
      // residual is the largest increase of T_c between successive gamma
      {"T_c decreases with gamma", 0.0,
       [] {
         double worst = 0.0, prev = critical_temperature_anisotropic(1.0, 0.0).value;
         for (int k = 1; k < 20; ++k) {
           const double tc = critical_temperature_anisotropic(1.0, 0.05 * k).value;
           worst = std::max(worst, tc - prev);
           prev = tc;
         }
         return worst > 0.0 ? worst : 0.0;
       }},
      {"isotropic closed form = Gibbs state", 1e-10,
       [matrix] {
         double m = 0.0;
         for (int i = 0; i < 40; ++i)
           for (double B : {0.0, 0.3, 0.6, 0.9, 1.0, 1.1, 1.2, 1.5, 2.0, -0.8, 3.0, 0.99, 1.01}) {
             const double T = 0.005 * std::pow(600.0, i / 39.0);
             m = std::max(m, std::abs(concurrence_isotropic_closed_form(1.0, B, T) - matrix(1.0, B, 0.0, T)));
           }
         return m;
       }},
      {"anisotropic closed form = Gibbs state", 1e-10,
       [matrix] {
         double m = 0.0;
         for (int i = 0; i < 40; ++i)
           for (double g : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99, 1.0}) {
             const double T = 0.005 * std::pow(600.0, i / 39.0);
             m = std::max(m, std::abs(concurrence_anisotropic_closed_form(1.0, g, T) - matrix(1.0, 0.0, g, T)));
           }
         return m;
       }},
      {"J and -J give equal concurrence", 1e-10,
       [matrix] {
         double m = 0.0;
         for (double T : {0.01, 0.1, 0.5, 1.0, 1.5}) {
           for (double B : {0.0, 0.5, 1.0, 1.2}) m = std::max(m, std::abs(matrix(1.0, B, 0.0, T) - matrix(-1.0, B, 0.0, T)));
           for (double g : {0.3, 0.6, 0.8}) m = std::max(m, std::abs(matrix(1.0, 0.0, g, T) - matrix(-1.0, 0.0, g, T)));
         }
         return m;
       }},
      {"T->0 limits 1 / 1/2 / 0", 0.0,
       [] {
         return std::abs(zero_temperature_limit(1.0, 0.5) - 1.0) + std::abs(zero_temperature_limit(1.0, 1.0) - 0.5) +
                std::abs(zero_temperature_limit(1.0, 1.5));
       }},
      // residual is how far each side misses its bound
      {"field step at T=1e-3 (B=0.9 vs 1.1)", 0.0,
       [] {
         const double below = concurrence_isotropic_closed_form(1.0, 0.9, 1e-3);
         const double above = concurrence_isotropic_closed_form(1.0, 1.1, 1e-3);
         return std::max(0.0, 0.99 - below) + std::max(0.0, above - 0.01);
       }},
      {"no entanglement above T_c for any B", 0.0,
       [] {
         const double tc = critical_temperature_isotropic(1.0).value;
         double m = 0.0;
         for (double B : {0.0, 0.5, 1.0, 1.2, 2.0})
           for (double f : {1.001, 1.2, 2.0}) m = std::max(m, concurrence_isotropic_closed_form(1.0, B, tc * f));
         return m;
       }},
      {"Ising chain unentangled", 1e-12,
       [matrix] {
         double m = 0.0;
         for (double T : {1e-3, 0.1, 0.5, 2.0}) m = std::max(m, matrix(1.0, 0.0, 1.0, T));
         return m;
       }},
  };
}

inline std::vector<CheckDef> suite_checks(CheckSuite s) {
  switch (s) {
    case CheckSuite::evolution: return evolution_checks();
    case CheckSuite::wstate: return wstate_checks();
    case CheckSuite::thermal: return thermal_checks();
    case CheckSuite::all: {
      auto out = evolution_checks();
      for (auto& c : wstate_checks()) out.push_back(std::move(c));
      for (auto& c : thermal_checks()) out.push_back(std::move(c));
      return out;
    }
  }
  return {};
}

}  // namespace detail

/// Runs a suite. A check that throws counts as failed with an infinite residual.
inline std::vector<CheckResult> run_checks(CheckSuite suite) {
  std::vector<CheckResult> out;
  for (const auto& def : detail::suite_checks(suite)) {
    CheckResult r{def.name, false, std::numeric_limits<double>::infinity()};
    try {
      r.max_residual = def.residual();
      r.passed = r.max_residual <= def.tol;
    } catch (const Error&) {
    }
    out.push_back(std::move(r));
  }
  return out;
}

/// name,status,max_residual
inline void write_check_report(std::ostream& os, const std::vector<CheckResult>& results) {
  os << "name,status,max_residual\n";
  for (const auto& r : results) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", r.max_residual);
    os << r.name << ',' << (r.passed ? "PASS" : "FAIL") << ',' << buf << '\n';
  }
}

}  // namespace xychain
