#pragma once

// Wootters concurrence of two-qubit states.
//
// C = max(l1 - l2 - l3 - l4, 0), where l1 >= ... >= l4 are the square roots of
// the eigenvalues of R = rho (sy x sy) rho* (sy x sy). Complex conjugation is
// taken in the standard product basis {|00>, |01>, |10>, |11>}.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <utility>

#include "xychain/error.hpp"
#include "xychain/evolution.hpp"
#include "xychain/linalg.hpp"

namespace xychain {

inline constexpr double kStateTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kSpectrumClamp = 1e-8;

struct ConcurrenceValue {
  double value = 0.0;
  std::array<double, 4> lambdas{};  // descending
};

/// sy x sy in the standard basis: anti-diagonal (-1, 1, 1, -1).
inline ComplexMatrix spin_flip() { return kron(pauli::y(), pauli::y()); }

/// Throws NotAState unless rho is Hermitian, unit-trace and numerically PSD.
/// Returns the eigendecomposition computed on the way.
inline HermitianEigen validate_density_matrix(const ComplexMatrix& rho) {
  if (!rho.is_square()) throw Error(Errc::NotAState, "density matrix is not square");
  if (hermiticity_defect(rho) > kStateTol) throw Error(Errc::NotAState, "density matrix is not Hermitian");
  if (std::abs(rho.trace() - 1.0) > kStateTol) throw Error(Errc::NotAState, "density matrix trace differs from 1");
  auto eig = eig_hermitian(rho, kStateTol);
  if (eig.values.front() < -kPsdTol) throw Error(Errc::NotAState, "density matrix has a negative eigenvalue");
  return eig;
}

namespace detail {

inline ConcurrenceValue from_lambdas(std::array<double, 4> l) {
  std::sort(l.begin(), l.end(), std::greater<>());
  return {std::max(l[0] - l[1] - l[2] - l[3], 0.0), l};
}

inline void require_two_qubits(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw Error(Errc::NotAState, "concurrence needs a 4x4 density matrix");
}

}  // namespace detail

/// Canonical route. With rho = W W^dagger, W = V sqrt(P), the lambdas are the
/// singular values of tau = W^T (sy x sy) W, since tau^dagger tau is similar to R.
/// This keeps small lambdas accurate to ~eps instead of ~sqrt(eps).
inline ConcurrenceValue concurrence(const ComplexMatrix& rho) {
  detail::require_two_qubits(rho);
  const HermitianEigen eig = validate_density_matrix(rho);
  ComplexMatrix w = eig.vectors;
  for (std::size_t k = 0; k < 4; ++k) {
    const double s = std::sqrt(std::max(eig.values[k], 0.0));
    for (std::size_t i = 0; i < 4; ++i) w(i, k) *= s;
  }
  const ComplexMatrix tau = w.transpose() * spin_flip() * w;
  const auto sv = singular_values(tau);
  return detail::from_lambdas({sv[0], sv[1], sv[2], sv[3]});
}

/// Literal route: eigenvalues of the non-Hermitian product R, clamped and
/// square-rooted. Real parts below -1e-8 raise NegativeSpectrum.
inline ConcurrenceValue concurrence_direct(const ComplexMatrix& rho) {
  detail::require_two_qubits(rho);
  validate_density_matrix(rho);
  const ComplexMatrix flip = spin_flip();
  const ComplexMatrix r = rho * flip * rho.conjugate() * flip;
  const auto mu = eigvals_general(r);
  std::array<double, 4> l{};
  for (std::size_t k = 0; k < 4; ++k) {
    const double re = mu[k].real();
    if (re < -kSpectrumClamp) throw Error(Errc::NegativeSpectrum, "spin-flipped product has a negative eigenvalue");
    l[k] = std::sqrt(std::max(re, 0.0));
  }
  return detail::from_lambdas(l);
}

/// Concurrence between sites i and j (1-based) of a pure N-qubit state.
inline ConcurrenceValue concurrence_pair_from_state(const StateVector& psi, int i, int j) {
  psi.require_valid();
  if (i == j || i < 1 || j < 1 || i > psi.n_qubits || j > psi.n_qubits)
    throw Error(Errc::BadSites, "need two distinct sites in range");
  const int keep[2] = {i, j};
  return concurrence(reduced_from_pure(psi.amplitudes, psi.n_qubits, keep));
}

/// C_ij = 2 |b_i b_j| for a state in the one-excitation sector.
inline double concurrence_one_excitation(const AmplitudeSet& amp, int i, int j) {
  const int n = static_cast<int>(amp.b.size());
  if (i == j || i < 1 || j < 1 || i > n || j > n) throw Error(Errc::BadSites, "need two distinct sites in range");
  if (std::abs(amp.total_probability() - 1.0) > kStateTol) throw Error(Errc::NotAState, "amplitudes are not normalized");
  return 2.0 * std::abs(amp.b[static_cast<std::size_t>(i - 1)] * amp.b[static_cast<std::size_t>(j - 1)]);
}

}  // namespace xychain
