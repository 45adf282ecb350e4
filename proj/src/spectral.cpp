// Copyright 2026 The fockskin Authors
// SPDX-License-Identifier: Apache-2.0
#include "fockskin/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <vector>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace fockskin {

namespace {

using std::complex;
constexpr complex<double> kI{0.0, 1.0};

void check_square(const Eigen::MatrixXcd& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
}

void lapack_ok(lapack_int info, const char* routine) {
  if (info != 0)
    throw std::runtime_error(std::string(routine) + " failed, info=" +
                             std::to_string(info));
}

// zgeev on a working copy; vectors optional.
void general_eigensolve(Eigen::MatrixXcd a, Eigen::VectorXcd& w,
                        Eigen::MatrixXcd* v) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  w.resize(n);
  if (v) v->resize(n, n);
  lapack_ok(LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', v ? 'V' : 'N', n, a.data(),
                          n, w.data(), nullptr, 1, v ? v->data() : nullptr,
                          v ? n : 1),
            "zgeev");
}

// zheevd on a working copy; input is assumed Hermitian (upper triangle used).
void hermitian_eigensolve(Eigen::MatrixXcd a, Eigen::VectorXd& w,
                          Eigen::MatrixXcd* v) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  w.resize(n);
  lapack_ok(LAPACKE_zheevd(LAPACK_COL_MAJOR, v ? 'V' : 'N', 'U', n, a.data(),
                           n, w.data()),
            "zheevd");
  if (v) *v = std::move(a);
}

Eigen::MatrixXcd lu_inverse(Eigen::MatrixXcd a) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  std::vector<lapack_int> ipiv(n);
  lapack_ok(LAPACKE_zgetrf(LAPACK_COL_MAJOR, n, n, a.data(), n, ipiv.data()),
            "zgetrf");
  lapack_ok(LAPACKE_zgetri(LAPACK_COL_MAJOR, n, a.data(), n, ipiv.data()),
            "zgetri");
  return a;
}

// Ascending by real part, then imaginary part.
std::vector<int> eigen_sort_order(const Eigen::VectorXcd& w) {
  std::vector<int> idx(w.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (w[a].real() != w[b].real()) return w[a].real() < w[b].real();
    return w[a].imag() < w[b].imag();
  });
  return idx;
}

double max_column_residual(const Eigen::MatrixXcd& h, const EigenSystem& eig) {
  const Eigen::MatrixXcd hv = h * eig.v;
  double worst = 0.0;
  for (int m = 0; m < eig.v.cols(); ++m)
    worst = std::max(worst,
                     (hv.col(m) - eig.eigenvalues[m] * eig.v.col(m)).norm());
  return worst;
}

}  // namespace

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0 || m.cols() == 0)
    throw std::invalid_argument("singular_values: empty matrix");
  Eigen::MatrixXcd a = m;
  const lapack_int rows = static_cast<lapack_int>(m.rows());
  const lapack_int cols = static_cast<lapack_int>(m.cols());
  Eigen::VectorXd s(std::min(rows, cols));
  lapack_ok(LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', rows, cols, a.data(), rows,
                           s.data(), nullptr, 1, nullptr, 1),
            "zgesdd");
  return s;
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  check_square(m, "hermitian_eigenvalues");
  Eigen::VectorXd w;
  hermitian_eigensolve((m + m.adjoint()) / 2.0, w, nullptr);
  return w;
}

EigenSystem diagonalize(const Operator& h) {
  check_square(h.mat, "diagonalize");
  EigenSystem eig;
  Eigen::VectorXcd w;
  Eigen::MatrixXcd v;
  general_eigensolve(h.mat, w, &v);

  const auto order = eigen_sort_order(w);
  eig.eigenvalues.resize(w.size());
  eig.v.resize(v.rows(), v.cols());
  for (int m = 0; m < static_cast<int>(order.size()); ++m) {
    eig.eigenvalues[m] = w[order[m]];
    eig.v.col(m) = v.col(order[m]).normalized();
  }

  const Eigen::VectorXd sv = singular_values(eig.v);
  const double eps = std::numeric_limits<double>::epsilon();
  if (sv[sv.size() - 1] < 1e3 * eps * sv[0]) {
    eig.residual = max_column_residual(h.mat, eig);
    throw DefectiveMatrixError(
        "eigenvector matrix is numerically singular (defective Hamiltonian)",
        eig.residual);
  }
  eig.v_inv = lu_inverse(eig.v);
  eig.residual = max_column_residual(h.mat, eig);
  eig.inverse_defect =
      (eig.v * eig.v_inv - Eigen::MatrixXcd::Identity(eig.v.rows(), eig.v.cols()))
          .cwiseAbs()
          .maxCoeff();
  return eig;
}

namespace {

// Shared by diagonalize_gauge and eigenvalues_gauge: transform, strip a
// uniform imaginary diagonal shift, check Hermiticity.
struct GaugeTransformed {
  Eigen::MatrixXcd m;  // Hermitian part
  double shift_im;     // uniform imaginary diagonal shift removed from m
};

GaugeTransformed gauge_hermitian_part(const Operator& h, const Operator& r) {
  check_square(h.mat, "diagonalize_gauge");
  if (r.dim() != h.dim())
    throw std::invalid_argument("gauge transform dimension mismatch");
  const int d = h.dim();
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i)
      if (i != j && r.mat(i, j) != 0.0)
        throw std::invalid_argument("gauge transform must be diagonal");
    if (r.mat(j, j) == 0.0)
      throw std::invalid_argument("gauge transform is singular");
  }
  GaugeTransformed out;
  out.m = h.mat;
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) out.m(i, j) *= r.mat(j, j) / r.mat(i, i);

  double shift = 0.0;
  for (int k = 0; k < d; ++k) shift += out.m(k, k).imag();
  shift /= d;
  out.shift_im = shift;
  if (shift != 0.0)
    for (int k = 0; k < d; ++k) out.m(k, k) -= kI * shift;

  const double scale = out.m.cwiseAbs().maxCoeff();
  const double defect = (out.m - out.m.adjoint()).cwiseAbs().maxCoeff();
  if (defect > 1e-10 * std::max(scale, 1.0))
    throw std::invalid_argument(
        "gauge-transformed matrix is not Hermitian; the gauge path only "
        "applies when R^{-1} H R is Hermitian up to a uniform imaginary "
        "shift");
  return out;
}

}  // namespace

EigenSystem diagonalize_gauge(const Operator& h, const Operator& r) {
  GaugeTransformed gt = gauge_hermitian_part(h, r);
  const int d = h.dim();

  Eigen::VectorXd w;
  Eigen::MatrixXcd phi;
  hermitian_eigensolve((gt.m + gt.m.adjoint()) / 2.0, w, &phi);

  EigenSystem eig;
  eig.eigenvalues.resize(d);
  for (int m = 0; m < d; ++m)
    eig.eigenvalues[m] = complex<double>(w[m], gt.shift_im);

  // v_m = R phi_m / ||R phi_m||; the inverse is exact in structure:
  // V^{-1} = diag(||R phi_m||) phi^dag R^{-1}.
  eig.v.resize(d, d);
  eig.v_inv.resize(d, d);
  Eigen::VectorXd norms(d);
  for (int m = 0; m < d; ++m) {
    Eigen::VectorXcd col = phi.col(m);
    for (int i = 0; i < d; ++i) col[i] *= r.mat(i, i);
    norms[m] = col.norm();
    eig.v.col(m) = col / norms[m];
  }
  for (int m = 0; m < d; ++m)
    for (int j = 0; j < d; ++j)
      eig.v_inv(m, j) = norms[m] * std::conj(phi(j, m)) / r.mat(j, j);

  eig.residual = max_column_residual(h.mat, eig);
  eig.inverse_defect =
      (eig.v * eig.v_inv - Eigen::MatrixXcd::Identity(d, d))
          .cwiseAbs()
          .maxCoeff();
  return eig;
}

Eigen::VectorXcd eigenvalues_only(const Operator& h) {
  check_square(h.mat, "eigenvalues_only");
  Eigen::VectorXcd w;
  general_eigensolve(h.mat, w, nullptr);
  const auto order = eigen_sort_order(w);
  Eigen::VectorXcd sorted(w.size());
  for (int m = 0; m < static_cast<int>(order.size()); ++m)
    sorted[m] = w[order[m]];
  return sorted;
}

Eigen::VectorXcd eigenvalues_gauge(const Operator& h, const Operator& r) {
  GaugeTransformed gt = gauge_hermitian_part(h, r);
  Eigen::VectorXd w;
  hermitian_eigensolve((gt.m + gt.m.adjoint()) / 2.0, w, nullptr);
  Eigen::VectorXcd out(w.size());
  for (int m = 0; m < w.size(); ++m)
    out[m] = complex<double>(w[m], gt.shift_im);
  return out;
}

double condition_number(const Eigen::MatrixXcd& v) {
  check_square(v, "condition_number");
  const Eigen::VectorXd s = singular_values(v);
  if (s[s.size() - 1] == 0.0) return std::numeric_limits<double>::infinity();
  return s[0] / s[s.size() - 1];
}

double submatrix_condition_number(const Eigen::MatrixXcd& v) {
  if (v.rows() < v.cols() || v.cols() == 0)
    throw std::invalid_argument(
        "submatrix_condition_number: need D x k with k <= D");
  const Eigen::VectorXd s = singular_values(v);
  if (s[s.size() - 1] == 0.0) return std::numeric_limits<double>::infinity();
  return s[0] / s[s.size() - 1];
}

double propagator_norm(const EigenSystem& eig, double t) {
  if (t < 0) throw std::invalid_argument("propagator_norm: t must be >= 0");
  // |e^{-i E t}| = e^{Im E t}; pull the dominant factor out so the matrix
  // stays O(1) for any t.
  double max_im = eig.eigenvalues[0].imag();
  for (int m = 1; m < eig.eigenvalues.size(); ++m)
    max_im = std::max(max_im, eig.eigenvalues[m].imag());
  const double shift = max_im * t;
  Eigen::MatrixXcd scaled = eig.v;
  for (int m = 0; m < eig.v.cols(); ++m)
    scaled.col(m) *= std::exp(-kI * eig.eigenvalues[m] * t - shift);
  const Eigen::VectorXd s = singular_values(scaled * eig.v_inv);
  return std::exp(shift) * s[0];
}

double spectral_radius(const Eigen::MatrixXcd& m) {
  check_square(m, "spectral_radius");
  Eigen::VectorXcd w;
  general_eigensolve(m, w, nullptr);
  return w.cwiseAbs().maxCoeff();
}

double operator_two_norm(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0 || m.cols() == 0)
    throw std::invalid_argument("operator_two_norm: empty matrix");
  // Power iteration on M^H M with a deterministic start; the ramp breaks
  // accidental orthogonality to the top singular vector.
  Eigen::VectorXcd x(m.cols());
  for (int k = 0; k < m.cols(); ++k)
    x[k] = 1.0 + 1e-3 * static_cast<double>(k) / static_cast<double>(m.cols());
  x.normalize();
  double sigma = 0.0;
  for (int it = 0; it < 200; ++it) {
    Eigen::VectorXcd y = m.adjoint() * (m * x);
    const double norm = y.norm();
    if (norm == 0.0) return 0.0;
    y /= norm;
    const double next = std::sqrt(norm);
    if (it > 4 && std::abs(next - sigma) <= 1e-12 * next) {
      sigma = next;
      break;
    }
    sigma = next;
    x = std::move(y);
  }
  return sigma;
}

}  // namespace fockskin
