#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "xychain/chain.hpp"
#include "xychain/error.hpp"
#include "xychain/linalg.hpp"

namespace xychain {

struct StateVector {
  int n_qubits = 0;
  std::vector<cplx> amplitudes;

  static StateVector basis(int n_qubits, std::size_t index) {
    StateVector s{n_qubits, std::vector<cplx>(std::size_t{1} << n_qubits)};
    if (index >= s.amplitudes.size()) throw Error(Errc::BadDims, "basis index out of range");
    s.amplitudes[index] = 1.0;
    return s;
  }

  double norm() const {
    double s = 0.0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
  }

  void require_valid(double tol = 1e-10) const {
    if (n_qubits < 1 || amplitudes.size() != (std::size_t{1} << n_qubits))
      throw Error(Errc::BadDims, "state length is not 2^n");
    if (std::abs(norm() - 1.0) > tol) throw Error(Errc::NotAState, "state is not normalized");
  }
};

/// |<a|b>|
inline double overlap_modulus(const StateVector& a, const StateVector& b) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return std::abs(s);
}

/// One-excitation amplitudes b_n(t) on the states s+_n |0...0>, n = 1..N.
struct AmplitudeSet {
  double time = 0.0;
  std::vector<cplx> b;

  double total_probability() const {
    double s = 0.0;
    for (const auto& x : b) s += std::norm(x);
    return s;
  }

  /// The full 2^N state sum_n b_n s+_n |0...0>.
  StateVector to_state() const {
    const int n = static_cast<int>(b.size());
    StateVector s{n, std::vector<cplx>(std::size_t{1} << n)};
    for (int site = 1; site <= n; ++site) s.amplitudes[excitation_index(n, site)] = b[static_cast<std::size_t>(site - 1)];
    return s;
  }
};

namespace detail {

inline void require_isotropic_free(const ChainSpec& spec) {
  spec.validate();
  if (!spec.isotropic_free()) throw Error(Errc::UnsupportedCombination, "needs gamma = 0 and B = 0");
}

}  // namespace detail

/// Closed-form amplitudes for the initial state s+_1 |0...0>:
///   b_n(t) = (1/N) sum_k exp(i 2 pi (n-1) k / N - i t J cos(2 pi k / N))
inline AmplitudeSet amplitudes_analytic(const ChainSpec& spec, double t) {
  detail::require_isotropic_free(spec);
  const int n = spec.n_sites;
  std::vector<cplx> phase(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    phase[static_cast<std::size_t>(k - 1)] = std::polar(1.0, -t * spec.coupling_J * std::cos(2.0 * std::numbers::pi * k / n));
  AmplitudeSet out{t, std::vector<cplx>(static_cast<std::size_t>(n))};
  for (int site = 1; site <= n; ++site) {
    cplx s = 0.0;
    for (int k = 1; k <= n; ++k)
      s += std::polar(1.0, 2.0 * std::numbers::pi * ((site - 1) * k % n) / n) * phase[static_cast<std::size_t>(k - 1)];
    out.b[static_cast<std::size_t>(site - 1)] = s / static_cast<double>(n);
  }
  return out;
}

/// exp(-i H t) built once from the block spectral decomposition of H and
/// applied to any number of states or times.
class Propagator {
 public:
  explicit Propagator(const ComplexMatrix& hamiltonian)
      : dim_(hamiltonian.rows()), blocks_(checked_blocks(hamiltonian)) {}

  explicit Propagator(const ChainSpec& spec) : Propagator(build_hamiltonian(spec)) {}

  std::size_t dimension() const noexcept { return dim_; }

  std::vector<cplx> apply(std::span<const cplx> psi, double t) const {
    if (psi.size() != dim_) throw Error(Errc::BadDims, "state length does not match the Hamiltonian");
    std::vector<cplx> out(dim_);
    std::vector<cplx> coeff;
    for (const auto& blk : blocks_) {
      const std::size_t m = blk.indices.size();
      coeff.assign(m, 0.0);
      for (std::size_t k = 0; k < m; ++k) {
        cplx s = 0.0;
        for (std::size_t r = 0; r < m; ++r) s += std::conj(blk.eigen.vectors(r, k)) * psi[blk.indices[r]];
        coeff[k] = s * std::polar(1.0, -blk.eigen.values[k] * t);
      }
      for (std::size_t r = 0; r < m; ++r) {
        cplx s = 0.0;
        for (std::size_t k = 0; k < m; ++k) s += blk.eigen.vectors(r, k) * coeff[k];
        out[blk.indices[r]] = s;
      }
    }
    return out;
  }

  StateVector evolve(const StateVector& psi0, double t) const {
    psi0.require_valid();
    return StateVector{psi0.n_qubits, apply(psi0.amplitudes, t)};
  }

  ComplexMatrix unitary(double t) const {
    ComplexMatrix u(dim_, dim_);
    for (const auto& blk : blocks_) {
      const std::size_t m = blk.indices.size();
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          cplx s = 0.0;
          for (std::size_t k = 0; k < m; ++k)
            s += blk.eigen.vectors(i, k) * std::polar(1.0, -blk.eigen.values[k] * t) * std::conj(blk.eigen.vectors(j, k));
          u(blk.indices[i], blk.indices[j]) = s;
        }
    }
    return u;
  }

 private:
  static std::vector<detail::HermitianBlock> checked_blocks(const ComplexMatrix& h) {
    detail::require_hermitian(h, 1e-10);
    return detail::hermitian_blocks(h);
  }

  std::size_t dim_;
  std::vector<detail::HermitianBlock> blocks_;
};

/// Numeric propagation in the full 2^N space.
inline StateVector evolve_full(const ChainSpec& spec, const StateVector& psi0, double t) {
  spec.validate();
  if (psi0.n_qubits != spec.n_sites) throw Error(Errc::BadDims, "state and chain sizes differ");
  return Propagator(spec).evolve(psi0, t);
}

/// Amplitudes of `psi` on the single-excitation states s+_n |0...0>.
inline AmplitudeSet project_one_excitation(const StateVector& psi, double t) {
  AmplitudeSet out{t, {}};
  for (int site = 1; site <= psi.n_qubits; ++site) out.b.push_back(psi.amplitudes[excitation_index(psi.n_qubits, site)]);
  return out;
}

// ---------------------------------------------------------------------------

struct BasisMap {
  std::string input;                // e.g. "|01>"
  std::vector<cplx> expected;       // column of the ideal gate
  double deviation = 0.0;           // max componentwise deviation, phases included
};

struct SwapGateReport {
  std::array<BasisMap, 4> maps;
  double sqrt_swap_unitarity_defect = 0.0;  // max |U^dagger U - I| at t = pi/(4J)
  double sqrt_swap_square_defect = 0.0;     // max |U(pi/4J)^2 - U(pi/2J)|
  double max_map_deviation() const {
    double m = 0.0;
    for (const auto& bm : maps) m = std::max(m, bm.deviation);
    return m;
  }
  bool passed(double map_tol = 1e-10, double square_tol = 1e-12) const {
    return max_map_deviation() <= map_tol && sqrt_swap_unitarity_defect <= square_tol && sqrt_swap_square_defect <= square_tol;
  }
};

/// Evolution for t = pi/(2J) against the ideal swap-up-to-phase map
/// |00> -> |00>, |01> -> -i|10>, |10> -> -i|01>, |11> -> |11>.
inline SwapGateReport swap_gate_check(const ChainSpec& spec) {
  detail::require_isotropic_free(spec);
  if (spec.n_sites != 2) throw Error(Errc::UnsupportedCombination, "swap gate needs two sites");
  if (spec.coupling_J == 0.0) throw Error(Errc::ZeroCoupling, "swap time is undefined for J = 0");
  const Propagator prop(spec);
  const double t_swap = std::numbers::pi / (2.0 * spec.coupling_J);
  const ComplexMatrix u = prop.unitary(t_swap);
  const ComplexMatrix root = prop.unitary(0.5 * t_swap);

  const cplx mi(0.0, -1.0);
  SwapGateReport rep;
  rep.maps = {BasisMap{"|00>", {1.0, 0.0, 0.0, 0.0}, 0.0}, BasisMap{"|01>", {0.0, 0.0, mi, 0.0}, 0.0},
              BasisMap{"|10>", {0.0, mi, 0.0, 0.0}, 0.0}, BasisMap{"|11>", {0.0, 0.0, 0.0, 1.0}, 0.0}};
  for (std::size_t col = 0; col < 4; ++col) {
    double dev = 0.0;
    for (std::size_t row = 0; row < 4; ++row) dev = std::max(dev, std::abs(u(row, col) - rep.maps[col].expected[row]));
    rep.maps[col].deviation = dev;
  }
  rep.sqrt_swap_unitarity_defect = max_abs_diff(root.adjoint() * root, ComplexMatrix::identity(4));
  rep.sqrt_swap_square_defect = max_abs_diff(root * root, u);
  return rep;
}

// ---------------------------------------------------------------------------

struct TimeSeries {
  std::string quantity;   // "P" for probabilities, "C" for concurrences
  std::vector<int> sites; // one site for P, a pair for C
  std::vector<double> times;
  std::vector<double> values;
};

inline std::vector<double> uniform_grid(double t0, double t1, std::size_t points) {
  if (points < 2) throw Error(Errc::BadDims, "a grid needs at least two points");
  std::vector<double> grid(points);
  const double step = (t1 - t0) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = t0 + step * static_cast<double>(i);
  grid.back() = t1;
  return grid;
}

/// 2001 samples over [0, 4 pi].
inline std::vector<double> default_time_grid() { return uniform_grid(0.0, 4.0 * std::numbers::pi, 2001); }

/// P(n, N, t) = |b_n(t)|^2 for every site n.
inline std::vector<TimeSeries> probability_series(const ChainSpec& spec, std::span<const double> t_grid) {
  detail::require_isotropic_free(spec);
  std::vector<TimeSeries> out(static_cast<std::size_t>(spec.n_sites));
  for (int site = 1; site <= spec.n_sites; ++site) {
    auto& ts = out[static_cast<std::size_t>(site - 1)];
    ts.quantity = "P";
    ts.sites = {site};
    ts.times.assign(t_grid.begin(), t_grid.end());
    ts.values.reserve(t_grid.size());
  }
  for (double t : t_grid) {
    const auto amp = amplitudes_analytic(spec, t);
    for (std::size_t n = 0; n < amp.b.size(); ++n) out[n].values.push_back(std::norm(amp.b[n]));
  }
  return out;
}

}  // namespace xychain
