#pragma once

// XY-family Hamiltonians on a periodic ring and the analytic one-excitation
// eigensystem of the isotropic chain.
//
//   H = (J/4) sum_{n=1..N} [(1+g) sx_n sx_{n+1} + (1-g) sy_n sy_{n+1}] + (B/2) sum_n sz_n
//
// with site N+1 identified with site 1. For N = 2 the sum visits the single bond
// twice, which gives the two-qubit form J (s+_1 s-_2 + s+_2 s-_1) + ... directly.
// sz is the standard Pauli matrix, sz|0> = +|0>, so the Gibbs state at field B
// carries exp(-B/T) on |00>. Units: hbar = k_B = 1.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <vector>

#include "xychain/error.hpp"
#include "xychain/linalg.hpp"

namespace xychain {

struct ChainSpec {
  int n_sites = 2;
  double coupling_J = 1.0;
  double anisotropy_gamma = 0.0;
  double field_B = 0.0;

  bool isotropic_free() const noexcept { return anisotropy_gamma == 0.0 && field_B == 0.0; }

  void validate() const {
    if (n_sites < 2) throw Error(Errc::BadDims, "chain needs at least two sites");
    if (n_sites > 12) throw Error(Errc::BadDims, "chain longer than 12 sites exceeds the 2^12 dimension cap");
    if (!(anisotropy_gamma >= 0.0 && anisotropy_gamma <= 1.0)) throw Error(Errc::BadGamma, "gamma must lie in [0,1]");
  }
};

/// Basis index of the state with a single excitation on `site` (1-based).
inline std::size_t excitation_index(int n_sites, int site) { return std::size_t{1} << (n_sites - site); }

inline ComplexMatrix build_hamiltonian(const ChainSpec& spec) {
  spec.validate();
  if (!spec.isotropic_free() && spec.n_sites != 2)
    throw Error(Errc::UnsupportedCombination, "anisotropy and field are defined for two sites only");

  const int n = spec.n_sites;
  const std::size_t dim = std::size_t{1} << n;
  const double hop_mixed = 0.5 * spec.coupling_J;                          // bits differ: s+s- + h.c.
  const double hop_equal = 0.5 * spec.coupling_J * spec.anisotropy_gamma;  // bits equal: s+s+ + h.c.
  ComplexMatrix h(dim, dim);
  for (std::size_t state = 0; state < dim; ++state) {
    double diag = 0.0;
    for (int site = 1; site <= n; ++site) {
      const auto bit = static_cast<unsigned>(n - site);
      diag += ((state >> bit) & 1U) ? -0.5 * spec.field_B : 0.5 * spec.field_B;

      const int next = site % n + 1;
      const auto bit_next = static_cast<unsigned>(n - next);
      const bool differ = ((state >> bit) & 1U) != ((state >> bit_next) & 1U);
      const double amp = differ ? hop_mixed : hop_equal;
      if (amp == 0.0) continue;
      const std::size_t flipped = state ^ (std::size_t{1} << bit) ^ (std::size_t{1} << bit_next);
      h(flipped, state) += amp;
    }
    h(state, state) += diag;
  }
  return h;
}

struct OneExcitationEigen {
  int k_index = 0;               // 1..N
  double energy = 0.0;           // J cos(2 pi k / N)
  std::vector<cplx> amplitudes;  // a_{k,n} = exp(i 2 pi n k / N) / sqrt(N), n = 1..N

  /// Embeds the eigenvector in the full 2^N register.
  std::vector<cplx> state_vector() const {
    const int n = static_cast<int>(amplitudes.size());
    std::vector<cplx> psi(std::size_t{1} << n);
    for (int site = 1; site <= n; ++site) psi[excitation_index(n, site)] = amplitudes[static_cast<std::size_t>(site - 1)];
    return psi;
  }
};

inline std::vector<OneExcitationEigen> one_excitation_spectrum(const ChainSpec& spec) {
  spec.validate();
  if (!spec.isotropic_free()) throw Error(Errc::UnsupportedCombination, "one-excitation sector needs gamma = 0, B = 0");
  const int n = spec.n_sites;
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<OneExcitationEigen> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    OneExcitationEigen e;
    e.k_index = k;
    e.energy = spec.coupling_J * std::cos(2.0 * std::numbers::pi * k / n);
    for (int site = 1; site <= n; ++site)
      e.amplitudes.push_back(std::polar(norm, 2.0 * std::numbers::pi * site * k / n));
    out.push_back(std::move(e));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Commensurability of the one-excitation frequencies

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

/// Continued-fraction approximation of x > 0 with denominator at most `max_den`;
/// returns the first convergent within relative tolerance `tol`.
inline std::optional<Rational> rational_approximation(double x, double tol, std::int64_t max_den = 64) {
  if (!(x > 0.0) || !std::isfinite(x)) return std::nullopt;
  std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(x));
  std::int64_t k_prev = 0, k = 1;
  double rem = x - std::floor(x);
  for (;;) {
    if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) <= tol * x) return Rational{h, k};
    if (rem <= 0.0) return std::nullopt;
    const double inv = 1.0 / rem;
    const auto a = static_cast<std::int64_t>(std::floor(inv));
    rem = inv - std::floor(inv);
    const std::int64_t h_next = a * h + h_prev;
    const std::int64_t k_next = a * k + k_prev;
    if (k_next > max_den) return std::nullopt;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
}

/// Distinct nonzero gaps |E_k - E_k'| of the one-excitation spectrum, ascending.
inline std::vector<double> one_excitation_gaps(const ChainSpec& spec) {
  const auto spectrum = one_excitation_spectrum(spec);
  const double merge = 1e-12 * std::max(1.0, std::abs(spec.coupling_J));
  std::vector<double> gaps;
  for (std::size_t a = 0; a < spectrum.size(); ++a)
    for (std::size_t b = a + 1; b < spectrum.size(); ++b) {
      const double g = std::abs(spectrum[a].energy - spectrum[b].energy);
      if (g > merge) gaps.push_back(g);
    }
  std::sort(gaps.begin(), gaps.end());
  std::vector<double> distinct;
  for (double g : gaps)
    if (distinct.empty() || g - distinct.back() > merge) distinct.push_back(g);
  return distinct;
}

/// Largest frequency f such that every gap is an integer multiple of f, or
/// nullopt when some ratio of gaps is not rational (denominator <= 64).
inline std::optional<double> fundamental_gap_frequency(const ChainSpec& spec, double tol) {
  const auto gaps = one_excitation_gaps(spec);
  if (gaps.empty()) return std::nullopt;
  const double base = gaps.front();
  std::vector<Rational> ratios;
  std::int64_t lcm_den = 1;
  for (double g : gaps) {
    auto r = rational_approximation(g / base, tol);
    if (!r) return std::nullopt;
    ratios.push_back(*r);
    lcm_den = std::lcm(lcm_den, r->den);
  }
  std::int64_t common = 0;
  for (const auto& r : ratios) common = std::gcd(common, r.num * (lcm_den / r.den));
  return base * static_cast<double>(common) / static_cast<double>(lcm_den);
}

inline bool frequency_ratio_rationality(const ChainSpec& spec, double tol = 1e-9) {
  return fundamental_gap_frequency(spec, tol).has_value();
}

}  // namespace xychain
