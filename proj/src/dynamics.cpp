// Copyright 2026 The fockskin Authors
// SPDX-License-Identifier: Apache-2.0
#include "fockskin/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace fockskin {

namespace {

using std::complex;
constexpr complex<double> kI{0.0, 1.0};

void check_time_grid(const std::vector<double>& times, const char* who) {
  if (times.empty())
    throw std::invalid_argument(std::string(who) + ": empty time grid");
  if (times.front() < 0.0)
    throw std::invalid_argument(std::string(who) + ": times must be >= 0");
  if (!std::is_sorted(times.begin(), times.end()))
    throw std::invalid_argument(std::string(who) + ": times must be sorted");
}

// exp(-i E t) per mode, with the dominant growth factored out. Returns the
// common log-scale so callers can restore magnitudes without overflow.
Eigen::VectorXcd mode_phases(const Eigen::VectorXcd& eigenvalues, double t,
                             double* log_scale) {
  double max_im = eigenvalues[0].imag();
  for (int m = 1; m < eigenvalues.size(); ++m)
    max_im = std::max(max_im, eigenvalues[m].imag());
  *log_scale = max_im * t;
  Eigen::VectorXcd ph(eigenvalues.size());
  for (int m = 0; m < eigenvalues.size(); ++m)
    ph[m] = std::exp(-kI * eigenvalues[m] * t - *log_scale);
  return ph;
}

}  // namespace

std::vector<double> survival_probability_pure(
    const EigenSystem& heff, const Eigen::VectorXcd& psi0,
    const std::vector<double>& times) {
  check_time_grid(times, "survival_probability_pure");
  if (psi0.size() != heff.v.rows())
    throw std::invalid_argument("survival_probability_pure: size mismatch");
  if (std::abs(psi0.norm() - 1.0) > 1e-10)
    throw std::invalid_argument(
        "survival_probability_pure: psi0 must be normalized");

  const Eigen::VectorXcd coeff = heff.v_inv * psi0;
  std::vector<double> p(times.size());
  for (std::size_t k = 0; k < times.size(); ++k) {
    double log_scale = 0.0;
    const Eigen::VectorXcd ph = mode_phases(heff.eigenvalues, times[k],
                                            &log_scale);
    const double amp = (heff.v * ph.cwiseProduct(coeff).matrix()).norm();
    p[k] = std::exp(2.0 * (std::log(amp) + log_scale));
  }
  return p;
}

DynamicsTrace propagator_norm_trace(const EigenSystem& heff,
                                    const std::vector<double>& times) {
  check_time_grid(times, "propagator_norm_trace");
  DynamicsTrace tr;
  tr.times = times;
  tr.kappa = condition_number(heff.v);

  double max_im = heff.eigenvalues[0].imag();
  for (int m = 1; m < heff.eigenvalues.size(); ++m)
    max_im = std::max(max_im, heff.eigenvalues[m].imag());

  tr.norm.resize(times.size());
  tr.envelope.resize(times.size());
  for (std::size_t k = 0; k < times.size(); ++k) {
    tr.norm[k] = propagator_norm(heff, times[k]);
    tr.envelope[k] = tr.kappa * std::exp(max_im * times[k]);
  }

  // Least-squares slope of log norm over the last decade of the grid,
  // where the decay is asymptotic rather than transient.
  const double cutoff = times.back() / 10.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (times[k] < cutoff || tr.norm[k] <= 0.0) continue;
    const double y = std::log(tr.norm[k]);
    sx += times[k];
    sy += y;
    sxx += times[k] * times[k];
    sxy += times[k] * y;
    ++n;
  }
  if (n >= 2 && n * sxx - sx * sx > 0.0)
    tr.fitted_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return tr;
}

std::pair<double, double> relaxation_time(double kappa, int particles,
                                          double alpha) {
  if (kappa < 1.0)
    throw std::invalid_argument("relaxation_time: kappa must be >= 1");
  if (particles < 1)
    throw std::invalid_argument("relaxation_time: need at least one particle");
  if (alpha <= 0.0)
    throw std::invalid_argument("relaxation_time: alpha must be positive");
  const double tau0 = 1.0 / (2.0 * particles * std::sinh(alpha));
  return {tau0, (1.0 + std::log(kappa)) * tau0};
}

std::vector<Eigen::MatrixXcd> lindblad_evolve(
    const Operator& h0, const std::vector<Operator>& lindblads,
    const Eigen::MatrixXcd& rho0, const std::vector<double>& times,
    double dt0) {
  check_time_grid(times, "lindblad_evolve");
  const int d = h0.dim();
  if (rho0.rows() != d || rho0.cols() != d)
    throw std::invalid_argument("lindblad_evolve: rho0 dimension mismatch");
  if ((rho0 - rho0.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("lindblad_evolve: rho0 must be Hermitian");
  if (std::abs(rho0.trace().real() - 1.0) > 1e-10)
    throw std::invalid_argument("lindblad_evolve: rho0 must have unit trace");
  if (dt0 <= 0.0)
    throw std::invalid_argument("lindblad_evolve: dt0 must be positive");
  for (const Operator& l : lindblads) {
    if (l.dim() != d)
      throw std::invalid_argument("lindblad_evolve: jump dimension mismatch");
    if (l.basis != h0.basis)
      throw std::invalid_argument("lindblad_evolve: jump basis mismatch");
  }

  // Precompute sum_r L_r^dag L_r once; the dissipator needs it every step.
  Eigen::MatrixXcd gamma = Eigen::MatrixXcd::Zero(d, d);
  for (const Operator& l : lindblads) gamma += l.mat.adjoint() * l.mat;

  const auto liouville = [&](const Eigen::MatrixXcd& rho) {
    Eigen::MatrixXcd drho = -kI * (h0.mat * rho - rho * h0.mat);
    drho -= 0.5 * (gamma * rho + rho * gamma);
    for (const Operator& l : lindblads)
      drho += l.mat * rho * l.mat.adjoint();
    return drho;
  };

  const auto rk4_step = [&](Eigen::MatrixXcd& rho, double dt) {
    const Eigen::MatrixXcd k1 = liouville(rho);
    const Eigen::MatrixXcd k2 = liouville(rho + 0.5 * dt * k1);
    const Eigen::MatrixXcd k3 = liouville(rho + 0.5 * dt * k2);
    const Eigen::MatrixXcd k4 = liouville(rho + dt * k3);
    rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  };

  const auto integrate = [&](double dt) {
    std::vector<Eigen::MatrixXcd> out;
    out.reserve(times.size());
    Eigen::MatrixXcd rho = rho0;
    double t = 0.0;
    for (double target : times) {
      while (target - t > 0.5 * dt) {
        const double step = std::min(dt, target - t);
        rk4_step(rho, step);
        t += step;
      }
      if (target > t) {
        rk4_step(rho, target - t);
        t = target;
      }
      out.push_back(rho);
    }
    return out;
  };

  // The exact flow is trace preserving; drift measures integration error.
  double dt = dt0;
  for (int halvings = 0; halvings <= 12; ++halvings) {
    std::vector<Eigen::MatrixXcd> out = integrate(dt);
    const double span = std::max(times.back(), 1.0);
    double drift = 0.0;
    for (const Eigen::MatrixXcd& rho : out)
      drift = std::max(drift, std::abs(rho.trace().real() - 1.0));
    if (drift < 1e-8 * span || halvings == 12) return out;
    dt /= 2.0;
  }
  return integrate(dt);  // unreachable
}

SectorProjection sector_projection(const Eigen::MatrixXcd& rho,
                                   const UnionBasis& basis, int particles) {
  if (rho.rows() != basis.dim() || rho.cols() != basis.dim())
    throw std::invalid_argument("sector_projection: dimension mismatch");
  const int off = basis.sector_offset(particles);
  const int dim = basis.sector_dim(particles);
  SectorProjection proj;
  proj.block = rho.block(off, off, dim, dim);
  proj.weight = proj.block.trace().real();
  return proj;
}

}  // namespace fockskin
