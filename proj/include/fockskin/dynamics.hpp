// Copyright 2026 The fockskin Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "fockskin/models.hpp"
#include "fockskin/spectral.hpp"

namespace fockskin {

struct DynamicsTrace {
  std::vector<double> times;
  std::vector<double> norm;      // ||exp(-i H_eff t)||
  std::vector<double> envelope;  // kappa * exp(max Im E * t)
  std::vector<double> survival;  // ||exp(-i H_eff t) psi0||^2
  double kappa = std::numeric_limits<double>::quiet_NaN();
  double fitted_slope = std::numeric_limits<double>::quiet_NaN();
  double tau0 = std::numeric_limits<double>::quiet_NaN();
  double tau = std::numeric_limits<double>::quiet_NaN();
};

/// Surviving probability of a pure state under the effective (non-Hermitian)
/// Hamiltonian: P(t) = ||exp(-i H_eff t) psi0||^2 through the supplied
/// eigendecomposition. times must start at 0 and be sorted ascending; psi0
/// must be normalized. P is monotone non-increasing because the
/// anti-Hermitian part of H_eff is -(i/2) sum_r L_r^dag L_r <= 0.
std::vector<double> survival_probability_pure(const EigenSystem& heff,
                                              const Eigen::VectorXcd& psi0,
                                              const std::vector<double>& times);

/// norm[k] = ||exp(-i H_eff t_k)|| together with the decay envelope
/// kappa(V) exp(max_m Im E_m * t): the norm can exceed 1 transiently but
/// never the envelope. fitted_slope is the least-squares slope of log norm
/// over the last decade of the grid (t >= t_max / 10).
DynamicsTrace propagator_norm_trace(const EigenSystem& heff,
                                    const std::vector<double>& times);

/// (tau0, tau) with tau0 = 1 / (2 N sinh alpha) and
/// tau = (1 + log kappa) tau0: the non-normal relaxation delay. Requires
/// kappa >= 1, particles >= 1, alpha > 0.
std::pair<double, double> relaxation_time(double kappa, int particles,
                                          double alpha);

/// Fixed-step RK4 integration of the Lindblad master equation
///   d rho/dt = -i[h0, rho] + sum_r (L_r rho L_r^dag
///                                   - (1/2){L_r^dag L_r, rho}).
/// rho0 must be Hermitian, PSD and unit trace. The step starts at dt0 and
/// is halved (up to 12 times) until the trace drift stays below 1e-8 per
/// unit time. Returns rho at each requested time, whose grid must be sorted
/// ascending with times[0] >= 0.
std::vector<Eigen::MatrixXcd> lindblad_evolve(
    const Operator& h0, const std::vector<Operator>& lindblads,
    const Eigen::MatrixXcd& rho0, const std::vector<double>& times,
    double dt0 = 2e-3);

struct SectorProjection {
  Eigen::MatrixXcd block;  // P_N rho P_N restricted to the sector
  double weight = 0.0;     // tr(P_N rho P_N)
};

/// Fixed-N diagonal block of a density matrix on the union basis.
SectorProjection sector_projection(const Eigen::MatrixXcd& rho,
                                   const UnionBasis& basis, int particles);

}  // namespace fockskin
