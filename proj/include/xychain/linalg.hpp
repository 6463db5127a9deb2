#pragma once

// Dense complex linear algebra for small quantum systems (up to 2^12 states).
//
// Basis convention used throughout the library: big-endian computational basis,
// site 1 is the most significant bit, so |100> is index 4 for three qubits.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xychain/error.hpp"

namespace xychain {

using cplx = std::complex<double>;

inline constexpr std::size_t kMaxDimension = std::size_t{1} << 12;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw Error(Errc::BadDims, "matrix dimensions must be positive");
  }

  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0) throw Error(Errc::BadDims, "empty matrix literal");
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw Error(Errc::BadDims, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const double> d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> data() const noexcept { return data_; }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  ComplexMatrix transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  ComplexMatrix conjugate() const {
    ComplexMatrix out = *this;
    for (auto& z : out.data_) z = std::conj(z);
    return out;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  /// Largest entry modulus.
  double max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }

  ComplexMatrix& operator*=(cplx s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::BadDims, "matrix product shape mismatch");
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend std::vector<cplx> operator*(const ComplexMatrix& a, std::span<const cplx> x) {
    if (a.cols_ != x.size()) throw Error(Errc::BadDims, "matrix-vector shape mismatch");
    std::vector<cplx> y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      cplx s = 0.0;
      for (std::size_t j = 0; j < a.cols_; ++j) s += a(i, j) * x[j];
      y[i] = s;
    }
    return y;
  }

 private:
  void require_same_shape(const ComplexMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::BadDims, "shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

/// max |a_ij - b_ij|
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::BadDims, "shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

inline double hermiticity_defect(const ComplexMatrix& a) {
  if (!a.is_square()) throw Error(Errc::BadDims, "matrix is not square");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

inline ComplexMatrix outer(std::span<const cplx> ket, std::span<const cplx> bra) {
  ComplexMatrix m(ket.size(), bra.size());
  for (std::size_t i = 0; i < ket.size(); ++i)
    for (std::size_t j = 0; j < bra.size(); ++j) m(i, j) = ket[i] * std::conj(bra[j]);
  return m;
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

namespace pauli {
inline ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
inline ComplexMatrix y() { return {{0.0, cplx(0, -1)}, {cplx(0, 1), 0.0}}; }
inline ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli

/// Single-site operator `op` acting on `site` (1-based) of an n-qubit register.
inline ComplexMatrix embed_site(const ComplexMatrix& op, int n_qubits, int site) {
  if (site < 1 || site > n_qubits) throw Error(Errc::BadSites, "site out of range");
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (int s = 1; s <= n_qubits; ++s) out = kron(out, s == site ? op : ComplexMatrix::identity(2));
  return out;
}

// ---------------------------------------------------------------------------
// Reduced density matrices

namespace detail {

inline int qubit_count_for(std::size_t dim) {
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return (std::size_t{1} << n) == dim ? n : -1;
}

inline void check_kept_sites(int n_qubits, std::span<const int> keep) {
  if (keep.empty()) throw Error(Errc::BadSites, "no sites kept");
  for (std::size_t a = 0; a < keep.size(); ++a) {
    if (keep[a] < 1 || keep[a] > n_qubits) throw Error(Errc::BadSites, "site out of range");
    for (std::size_t b = 0; b < a; ++b)
      if (keep[a] == keep[b]) throw Error(Errc::BadSites, "kept sites must be distinct");
  }
}

// Splits a full basis index into (kept index, traced index). The first kept site
// becomes the most significant bit of the kept index.
struct SiteSplit {
  std::vector<std::size_t> kept_bits;    // bit position (from LSB) of each kept site
  std::vector<std::size_t> traced_bits;  // remaining bit positions, high to low

  SiteSplit(int n_qubits, std::span<const int> keep) {
    std::vector<bool> is_kept(static_cast<std::size_t>(n_qubits) + 1, false);
    for (int s : keep) {
      kept_bits.push_back(static_cast<std::size_t>(n_qubits - s));
      is_kept[static_cast<std::size_t>(s)] = true;
    }
    for (int s = 1; s <= n_qubits; ++s)
      if (!is_kept[static_cast<std::size_t>(s)]) traced_bits.push_back(static_cast<std::size_t>(n_qubits - s));
  }

  std::size_t compose(std::size_t kept, std::size_t traced) const {
    std::size_t full = 0;
    const std::size_t nk = kept_bits.size();
    for (std::size_t a = 0; a < nk; ++a)
      if ((kept >> (nk - 1 - a)) & 1U) full |= std::size_t{1} << kept_bits[a];
    const std::size_t nt = traced_bits.size();
    for (std::size_t a = 0; a < nt; ++a)
      if ((traced >> (nt - 1 - a)) & 1U) full |= std::size_t{1} << traced_bits[a];
    return full;
  }
};

}  // namespace detail

/// Traces out every site not listed in `keep` (1-based). The result is ordered
/// big-endian in the order the sites are listed.
inline ComplexMatrix partial_trace(const ComplexMatrix& rho, int n_qubits, std::span<const int> keep,
                                   double trace_tol = 1e-10) {
  if (n_qubits < 1 || !rho.is_square() || rho.rows() != (std::size_t{1} << n_qubits))
    throw Error(Errc::BadDims, "density matrix is not 2^n x 2^n");
  detail::check_kept_sites(n_qubits, keep);
  if (hermiticity_defect(rho) > trace_tol) throw Error(Errc::BadDims, "density matrix is not Hermitian");
  if (std::abs(rho.trace() - 1.0) > trace_tol) throw Error(Errc::BadDims, "density matrix trace differs from 1");

  const detail::SiteSplit split(n_qubits, keep);
  const std::size_t dk = std::size_t{1} << keep.size();
  const std::size_t dt = std::size_t{1} << split.traced_bits.size();
  ComplexMatrix out(dk, dk);
  for (std::size_t a = 0; a < dk; ++a)
    for (std::size_t b = 0; b < dk; ++b) {
      cplx s = 0.0;
      for (std::size_t e = 0; e < dt; ++e) s += rho(split.compose(a, e), split.compose(b, e));
      out(a, b) = s;
    }
  return out;
}

inline ComplexMatrix partial_trace(const ComplexMatrix& rho, int n_qubits, std::pair<int, int> keep) {
  const int sites[2] = {keep.first, keep.second};
  return partial_trace(rho, n_qubits, std::span<const int>(sites));
}

/// Reduced density matrix of the pure state |psi><psi| without forming the outer product.
inline ComplexMatrix reduced_from_pure(std::span<const cplx> psi, int n_qubits, std::span<const int> keep) {
  if (n_qubits < 1 || psi.size() != (std::size_t{1} << n_qubits))
    throw Error(Errc::BadDims, "state length is not 2^n");
  detail::check_kept_sites(n_qubits, keep);
  const detail::SiteSplit split(n_qubits, keep);
  const std::size_t dk = std::size_t{1} << keep.size();
  const std::size_t dt = std::size_t{1} << split.traced_bits.size();
  ComplexMatrix out(dk, dk);
  for (std::size_t e = 0; e < dt; ++e)
    for (std::size_t a = 0; a < dk; ++a) {
      const cplx pa = psi[split.compose(a, e)];
      if (pa == cplx{}) continue;
      for (std::size_t b = 0; b < dk; ++b) out(a, b) += pa * std::conj(psi[split.compose(b, e)]);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Hermitian eigensolver: cyclic complex Jacobi, applied independently to every
// block of the permutation-block-diagonal form of the input.

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

namespace detail {

inline constexpr int kMaxJacobiSweeps = 100;

inline HermitianEigen jacobi_hermitian(ComplexMatrix a) {
  const std::size_t n = a.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = a.frobenius_norm();
  HermitianEigen out;
  if (n == 1 || scale == 0.0) {
    for (std::size_t i = 0; i < n; ++i) out.values.push_back(a(i, i).real());
    out.vectors = std::move(v);
    return out;
  }
  const double target = std::numeric_limits<double>::epsilon() * scale;
  for (int sweep = 0;; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(2.0 * off) <= target) break;
    if (sweep == kMaxJacobiSweeps) throw Error(Errc::NoConvergence, "Jacobi sweeps exhausted");

    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag <= 1e-3 * target / static_cast<double>(n)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        // Phase w makes the (p,q) element real, then a real rotation clears it.
        const cplx w = std::conj(a(p, q)) / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const cplx uqp = -s * w;
        const cplx uqq = c * w;

        for (std::size_t k = 0; k < n; ++k) {
          const cplx xp = a(k, p), xq = a(k, q);
          a(k, p) = xp * c + xq * uqp;
          a(k, q) = xp * s + xq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx xp = a(p, k), xq = a(q, k);
          a(p, k) = c * xp + std::conj(uqp) * xq;
          a(q, k) = s * xp + std::conj(uqq) * xq;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
        for (std::size_t k = 0; k < n; ++k) {
          const cplx xp = v(k, p), xq = v(k, q);
          v(k, p) = xp * c + xq * uqp;
          v(k, q) = xp * s + xq * uqq;
        }
      }
  }
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i).real();
  out.vectors = std::move(v);
  return out;
}

/// One diagonal block of a Hermitian matrix: its basis indices and local eigensystem.
struct HermitianBlock {
  std::vector<std::size_t> indices;
  HermitianEigen eigen;
};

/// Groups basis states into connected components of the nonzero pattern of `a`
/// and diagonalizes each component separately.
inline std::vector<HermitianBlock> hermitian_blocks(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a(i, j) != cplx{} || a(j, i) != cplx{}) {
        const std::size_t ri = find(i), rj = find(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }

  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);

  std::vector<HermitianBlock> blocks;
  for (auto& idx : groups) {
    if (idx.empty()) continue;
    ComplexMatrix sub(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c)
        sub(r, c) = 0.5 * (a(idx[r], idx[c]) + std::conj(a(idx[c], idx[r])));
    blocks.push_back({std::move(idx), jacobi_hermitian(std::move(sub))});
  }
  return blocks;
}

inline void require_hermitian(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) throw Error(Errc::BadDims, "matrix is not square");
  if (a.rows() > kMaxDimension) throw Error(Errc::BadDims, "dimension exceeds 2^12");
  if (hermiticity_defect(a) > tol) throw Error(Errc::NonHermitian, "matrix differs from its adjoint");
}

}  // namespace detail

/// Full spectral decomposition of a Hermitian matrix; eigenvalues ascending.
inline HermitianEigen eig_hermitian(const ComplexMatrix& a, double tol = 1e-10) {
  detail::require_hermitian(a, tol);
  const std::size_t n = a.rows();
  const auto blocks = detail::hermitian_blocks(a);

  struct Pair {
    double value;
    std::size_t block, column;
  };
  std::vector<Pair> pairs;
  pairs.reserve(n);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t k = 0; k < blocks[b].eigen.values.size(); ++k) pairs.push_back({blocks[b].eigen.values[k], b, k});
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) { return x.value < y.value; });

  HermitianEigen out;
  out.values.reserve(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    const auto& pr = pairs[col];
    const auto& blk = blocks[pr.block];
    out.values.push_back(pr.value);
    for (std::size_t r = 0; r < blk.indices.size(); ++r) out.vectors(blk.indices[r], col) = blk.eigen.vectors(r, pr.column);
  }
  return out;
}

/// V f(Lambda) V^dagger for a Hermitian matrix; `f` maps a real eigenvalue to a complex weight.
template <typename F>
ComplexMatrix hermitian_function(const HermitianEigen& eig, F&& f) {
  const std::size_t n = eig.values.size();
  std::vector<cplx> w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = f(eig.values[k]);
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (w[k] == cplx{}) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vik = eig.vectors(i, k) * w[k];
      if (vik == cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  return out;
}

template <typename F>
ComplexMatrix hermitian_function(const ComplexMatrix& a, F&& f, double tol = 1e-10) {
  return hermitian_function(eig_hermitian(a, tol), std::forward<F>(f));
}

// ---------------------------------------------------------------------------
// General (non-Hermitian) eigenvalues: Householder reduction to Hessenberg form
// followed by single-shift complex QR with Wilkinson shifts.

inline std::vector<cplx> eigvals_general(const ComplexMatrix& input) {
  if (!input.is_square()) throw Error(Errc::BadDims, "matrix is not square");
  const std::size_t n = input.rows();
  ComplexMatrix h = input;

  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm += std::norm(h(i, k));
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0) continue;
    const cplx x0 = h(k + 1, k);
    const cplx phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : cplx(1.0);
    std::vector<cplx> v(n, 0.0);
    v[k + 1] = x0 + phase * xnorm;
    for (std::size_t i = k + 2; i < n; ++i) v[i] = h(i, k);
    double vnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm += std::norm(v[i]);
    if (vnorm == 0.0) continue;
    // h <- (I - 2 v v^dagger / |v|^2) h (I - 2 v v^dagger / |v|^2)
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * h(i, j);
      s *= 2.0 / vnorm;
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= v[i] * s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      cplx s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += h(i, j) * v[j];
      s *= 2.0 / vnorm;
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= s * std::conj(v[j]);
    }
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  std::vector<cplx> eig(n);
  std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n) - 1;
  int iter = 0;
  const int max_iter = 60 * static_cast<int>(std::max<std::size_t>(n, 1));
  const double hnorm = std::max(h.frobenius_norm(), std::numeric_limits<double>::min());
  std::vector<std::pair<cplx, cplx>> rot;

  while (hi >= 0) {
    if (hi == 0) {
      eig[0] = h(0, 0);
      break;
    }
    std::ptrdiff_t lo = hi;
    while (lo > 0) {
      const double sub = std::abs(h(lo, lo - 1));
      double ref = std::abs(h(lo, lo)) + std::abs(h(lo - 1, lo - 1));
      if (ref == 0.0) ref = hnorm;
      if (sub <= eps * ref) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig[hi] = h(hi, hi);
      --hi;
      iter = 0;
      continue;
    }
    if (++iter > max_iter) throw Error(Errc::NoConvergence, "QR iteration did not converge");

    cplx shift;
    if (iter % 11 == 0) {
      shift = h(hi, hi) + std::abs(h(hi, hi - 1));
    } else {
      const cplx a = h(hi - 1, hi - 1), b = h(hi - 1, hi), c = h(hi, hi - 1), d = h(hi, hi);
      const cplx tr_half = 0.5 * (a + d);
      const cplx disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
      const cplx r1 = tr_half + disc, r2 = tr_half - disc;
      shift = std::abs(r1 - d) < std::abs(r2 - d) ? r1 : r2;
    }

    const auto ulo = static_cast<std::size_t>(lo), uhi = static_cast<std::size_t>(hi);
    for (std::size_t i = ulo; i <= uhi; ++i) h(i, i) -= shift;
    rot.clear();
    for (std::size_t k = ulo; k < uhi; ++k) {
      const cplx a = h(k, k), b = h(k + 1, k);
      const double r = std::hypot(std::abs(a), std::abs(b));
      const cplx c = r == 0.0 ? cplx(1.0) : a / r;
      const cplx s = r == 0.0 ? cplx(0.0) : b / r;
      rot.emplace_back(c, s);
      for (std::size_t j = k; j <= uhi; ++j) {
        const cplx x = h(k, j), y = h(k + 1, j);
        h(k, j) = std::conj(c) * x + std::conj(s) * y;
        h(k + 1, j) = -s * x + c * y;
      }
    }
    for (std::size_t k = ulo; k < uhi; ++k) {
      const auto [c, s] = rot[k - ulo];
      const std::size_t last = std::min(k + 2, uhi);
      for (std::size_t i = ulo; i <= last; ++i) {
        const cplx x = h(i, k), y = h(i, k + 1);
        h(i, k) = x * c + y * s;
        h(i, k + 1) = -x * std::conj(s) + y * std::conj(c);
      }
    }
    for (std::size_t i = ulo; i <= uhi; ++i) h(i, i) += shift;
  }
  return eig;
}

// ---------------------------------------------------------------------------
// Singular values by one-sided (Hestenes) Jacobi. Absolute accuracy is of order
// eps * |A| in the singular values themselves, with no squaring.

inline std::vector<double> singular_values(const ComplexMatrix& input) {
  ComplexMatrix a = input;
  const std::size_t m = a.rows(), n = a.cols();
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int sweep = 0;; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0;
        cplx gamma = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          alpha += std::norm(a(i, p));
          beta += std::norm(a(i, q));
          gamma += std::conj(a(i, p)) * a(i, q);
        }
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const cplx w = std::conj(gamma) / g;  // a_q * w has real overlap with a_p
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const cplx xp = a(i, p), xq = a(i, q) * w;
          a(i, p) = c * xp - s * xq;
          a(i, q) = s * xp + c * xq;
        }
      }
    if (!rotated) break;
    if (sweep == detail::kMaxJacobiSweeps) throw Error(Errc::NoConvergence, "one-sided Jacobi did not converge");
  }
  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += std::norm(a(i, j));
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

}  // namespace xychain
