// Copyright 2026 The fockskin Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "fockskin/models.hpp"
#include "fockskin/spectral.hpp"

namespace fockskin {

/// Localization threshold Lambda_xi = 1 / sqrt((xi+1)(D-xi)). If xi+1
/// eigenstates with pairwise distinct eigenvalues are all Lambda-localized
/// with Lambda <= Lambda_xi, the Hamiltonian cannot be Hermitian.
double lambda_threshold(int xi, int dim);

/// Strict test: |<order[k]|psi>| < lambda for every display position
/// k >= xi (0-based; positions xi..D-1 are the tail). psi must be
/// normalized to 1e-10.
bool is_lambda_localized(const Eigen::VectorXcd& psi, int xi, double lambda,
                         const std::vector<int>& order);

struct LocalizationReport {
  int xi = 0;
  double lambda = 0.0;     // threshold actually tested
  double lambda_xi = 0.0;  // Hermiticity-breaking threshold for this xi
  std::vector<int> passing;  // eigenstate indices that are localized
  int distinct_count = 0;    // passing states with pairwise distinct E
  bool verdict = false;      // distinct_count >= xi+1 and lambda <= lambda_xi
  std::vector<double> margins;  // per eigenstate: max tail amplitude
  int reference = 0;            // eigenstate whose amplitudes set the order
  std::vector<int> order;       // display position -> basis index
  std::vector<int> selected;    // xi+1 lowest-tail-weight states, for display
};

struct DetectOptions {
  std::optional<int> xi;         // default: scan the coarse grid below
  std::optional<int> reference;  // default: eigenstate 0 (ascending order)
  std::optional<double> lambda;  // default: lambda_threshold(xi, D)
};

/// Runs the localization criterion on an eigensystem: reorders the basis by
/// the reference eigenstate, computes tail margins for every eigenstate,
/// counts the passing ones with pairwise distinct eigenvalues (distinct
/// means |E_i - E_j| > 1e-8 max|E|), and sets the verdict. Without an
/// explicit xi, scans xi in {ceil(D/8), ceil(D/4), ceil(D/2), ceil(7D/8)}
/// and returns the report maximizing distinct_count - (xi+1).
LocalizationReport detect_skin_effect(const EigenSystem& eig,
                                      const DetectOptions& opts = {});

/// Certified consequence of a detection: whenever the criterion holds at
/// threshold lambda with lambda <= 1 / sqrt(D - xi), every diagonalizing V
/// satisfies kappa(V) > sqrt(1/((xi+1)(D-xi) lambda^2) - 1/(xi+1)).
double kappa_lower_bound(double lambda, int xi, int dim);

/// Condition-number witness from the last display position:
/// kappa_0 = (1/sqrt(D)) sqrt(1/max_m |<order[D-1]|Psi_m>|^2 - 1).
/// Requires D >= 2; returns +infinity when the amplitude is zero.
double kappa_zero(const EigenSystem& eig, const std::vector<int>& order);

/// Closed-form estimate exp(alpha N (L-N)) / sqrt(C(L,N)) for the
/// interacting Hatano-Nelson model at the given parameters.
double kappa_zero_estimate(const ModelParams& p);

struct GramDiagnostics {
  Eigen::MatrixXcd p;   // Gram matrix of the supplied states
  Eigen::MatrixXcd p1;  // head contribution, rank <= xi
  Eigen::MatrixXcd p2;  // tail contribution
  double trace_p2 = 0.0;
  double rho_p2 = 0.0;  // spectral radius of p2
  double max_offdiag_p = 0.0;
};

/// Splits the Gram matrix of a k-column state family into head (display
/// positions < xi) and tail (>= xi) contributions, the decomposition behind
/// the Hermiticity obstruction: for orthonormal Lambda_xi-localized
/// families, rank(p1) <= xi while trace(p2) < 1, which contradicts p = I.
GramDiagnostics gram_decomposition(const Eigen::MatrixXcd& states, int xi,
                                   const std::vector<int>& order);

/// The D x (xi+1) family showing Lambda_xi cannot be improved: exactly
/// orthonormal, with every tail amplitude equal to Lambda_xi. Column j
/// (1-based) has head entries exp(2 pi i j n / (xi+1)) / sqrt(xi+1).
Eigen::MatrixXcd tightness_witness(int xi, int dim);

}  // namespace fockskin
