// Copyright 2026 The fockskin Authors
// SPDX-License-Identifier: Apache-2.0
#include "fockskin/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "fockskin/fockspace.hpp"

namespace fockskin {

namespace {

void check_position(int xi, int dim, const char* who) {
  if (dim < 1) throw std::invalid_argument(std::string(who) + ": dim < 1");
  if (xi < 0 || xi >= dim)
    throw std::invalid_argument(std::string(who) +
                                ": xi must satisfy 0 <= xi < dim");
}

// Number of pairwise-distinct eigenvalues among the given eigenstate
// indices. Indices are in ascending spectral order, so degenerate values
// are adjacent and consecutive-difference clustering suffices.
int count_distinct(const Eigen::VectorXcd& eigenvalues,
                   const std::vector<int>& members) {
  if (members.empty()) return 0;
  const double delta = 1e-8 * eigenvalues.cwiseAbs().maxCoeff();
  int clusters = 1;
  for (std::size_t k = 1; k < members.size(); ++k)
    if (std::abs(eigenvalues[members[k]] - eigenvalues[members[k - 1]]) >
        delta)
      ++clusters;
  return clusters;
}

LocalizationReport evaluate_at_xi(const EigenSystem& eig,
                                  const std::vector<int>& order, int xi,
                                  std::optional<double> lambda_opt,
                                  int reference) {
  const int d = eig.v.rows();
  LocalizationReport rep;
  rep.xi = xi;
  rep.lambda_xi = lambda_threshold(xi, d);
  rep.lambda = lambda_opt.value_or(rep.lambda_xi);
  rep.reference = reference;
  rep.order = order;

  rep.margins.resize(d);
  std::vector<double> tail_weight(d);  // sum |amp|^2 over the tail
  for (int m = 0; m < d; ++m) {
    double tail = 0.0;
    double weight = 0.0;
    for (int k = xi; k < d; ++k) {
      const double a = std::abs(eig.v(order[k], m));
      tail = std::max(tail, a);
      weight += a * a;
    }
    rep.margins[m] = tail;
    tail_weight[m] = weight;
    if (tail < rep.lambda) rep.passing.push_back(m);
  }
  rep.distinct_count = count_distinct(eig.eigenvalues, rep.passing);
  rep.verdict = rep.distinct_count >= xi + 1 && rep.lambda <= rep.lambda_xi;

  std::vector<int> by_weight(d);
  std::iota(by_weight.begin(), by_weight.end(), 0);
  std::stable_sort(by_weight.begin(), by_weight.end(), [&](int a, int b) {
    return tail_weight[a] < tail_weight[b];
  });
  by_weight.resize(std::min(xi + 1, d));
  rep.selected = std::move(by_weight);
  return rep;
}

}  // namespace

double lambda_threshold(int xi, int dim) {
  check_position(xi, dim, "lambda_threshold");
  return 1.0 / std::sqrt(static_cast<double>(xi + 1) *
                         static_cast<double>(dim - xi));
}

bool is_lambda_localized(const Eigen::VectorXcd& psi, int xi, double lambda,
                         const std::vector<int>& order) {
  const int d = static_cast<int>(psi.size());
  check_position(xi, d, "is_lambda_localized");
  if (static_cast<int>(order.size()) != d)
    throw std::invalid_argument("is_lambda_localized: order/psi size mismatch");
  if (std::abs(psi.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("is_lambda_localized: psi must be normalized");
  for (int k = xi; k < d; ++k)
    if (std::abs(psi[order[k]]) >= lambda) return false;
  return true;
}

LocalizationReport detect_skin_effect(const EigenSystem& eig,
                                      const DetectOptions& opts) {
  const int d = static_cast<int>(eig.v.rows());
  if (d < 1) throw std::invalid_argument("detect_skin_effect: empty system");
  const int reference = opts.reference.value_or(0);
  if (reference < 0 || reference >= d)
    throw std::invalid_argument("detect_skin_effect: reference out of range");
  const std::vector<int> order = reference_order(eig.v.col(reference));

  if (opts.xi) {
    check_position(*opts.xi, d, "detect_skin_effect");
    return evaluate_at_xi(eig, order, *opts.xi, opts.lambda, reference);
  }

  // Coarse scan; the score rewards passing states beyond the xi+1 needed.
  std::vector<int> grid;
  for (int num : {1, 2, 4, 7}) {
    int xi = static_cast<int>((static_cast<long>(num) * d + 7) / 8);
    xi = std::clamp(xi, 0, d - 1);
    if (std::find(grid.begin(), grid.end(), xi) == grid.end())
      grid.push_back(xi);
  }
  LocalizationReport best;
  long best_score = std::numeric_limits<long>::min();
  for (int xi : grid) {
    LocalizationReport rep =
        evaluate_at_xi(eig, order, xi, opts.lambda, reference);
    const long score = rep.distinct_count - (static_cast<long>(xi) + 1);
    if (score > best_score) {
      best_score = score;
      best = std::move(rep);
    }
  }
  return best;
}

double kappa_lower_bound(double lambda, int xi, int dim) {
  check_position(xi, dim, "kappa_lower_bound");
  if (lambda <= 0.0)
    throw std::invalid_argument("kappa_lower_bound: lambda must be positive");
  const double arg = 1.0 / (static_cast<double>(xi + 1) *
                            static_cast<double>(dim - xi) * lambda * lambda) -
                     1.0 / (xi + 1);
  return std::sqrt(std::max(arg, 0.0));
}

double kappa_zero(const EigenSystem& eig, const std::vector<int>& order) {
  const int d = static_cast<int>(eig.v.rows());
  if (d < 2) throw std::invalid_argument("kappa_zero: need dim >= 2");
  if (static_cast<int>(order.size()) != d)
    throw std::invalid_argument("kappa_zero: order size mismatch");
  double amp = 0.0;
  for (int m = 0; m < d; ++m)
    amp = std::max(amp, std::abs(eig.v(order[d - 1], m)));
  if (amp == 0.0) return std::numeric_limits<double>::infinity();
  const double arg = std::max(1.0 / (amp * amp) - 1.0, 0.0);
  return std::sqrt(arg / d);
}

double kappa_zero_estimate(const ModelParams& p) {
  if (p.N < 0 || p.N > p.L)
    throw std::invalid_argument("kappa_zero_estimate: bad particle number");
  return std::exp(p.alpha * p.N * (p.L - p.N)) /
         std::sqrt(static_cast<double>(binomial(p.L, p.N)));
}

GramDiagnostics gram_decomposition(const Eigen::MatrixXcd& states, int xi,
                                   const std::vector<int>& order) {
  const int d = static_cast<int>(states.rows());
  const int k = static_cast<int>(states.cols());
  check_position(xi, d, "gram_decomposition");
  if (k < 1) throw std::invalid_argument("gram_decomposition: no states");
  if (static_cast<int>(order.size()) != d)
    throw std::invalid_argument("gram_decomposition: order size mismatch");

  Eigen::MatrixXcd head(xi, k);
  Eigen::MatrixXcd tail(d - xi, k);
  for (int r = 0; r < d; ++r) {
    if (r < xi)
      head.row(r) = states.row(order[r]);
    else
      tail.row(r - xi) = states.row(order[r]);
  }

  GramDiagnostics g;
  g.p = states.adjoint() * states;
  g.p1 = head.adjoint() * head;
  g.p2 = tail.adjoint() * tail;
  g.trace_p2 = g.p2.trace().real();
  g.rho_p2 = spectral_radius(g.p2);
  g.max_offdiag_p = 0.0;
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i)
      if (i != j) g.max_offdiag_p = std::max(g.max_offdiag_p,
                                             std::abs(g.p(i, j)));
  return g;
}

Eigen::MatrixXcd tightness_witness(int xi, int dim) {
  check_position(xi, dim, "tightness_witness");
  // Discrete Fourier modes over xi head positions plus the uniform tail
  // state; columns are exactly orthonormal and every tail amplitude equals
  // lambda_threshold(xi, dim), so the threshold is not improvable.
  const int k = xi + 1;
  const double head_amp = 1.0 / std::sqrt(static_cast<double>(k));
  const double tail_amp = lambda_threshold(xi, dim);
  Eigen::MatrixXcd w(dim, k);
  for (int j = 1; j <= k; ++j) {
    for (int n = 1; n <= xi; ++n)
      w(n - 1, j - 1) =
          std::polar(head_amp, 2.0 * std::numbers::pi * j * n / k);
    for (int r = xi; r < dim; ++r) w(r, j - 1) = tail_amp;
  }
  return w;
}

}  // namespace fockskin
