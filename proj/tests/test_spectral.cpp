// Copyright 2026 The fockskin Authors
// SPDX-License-Identifier: Apache-2.0
#include "fockskin/spectral.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "fockskin/models.hpp"
#include "fockskin/rng.hpp"
#include "oracles.hpp"

using namespace fockskin;
using Catch::Approx;
using std::complex;

namespace {

ModelParams ihn_params(int L, int N, double alpha = 0.5, double U = -1.0) {
  ModelParams p;
  p.L = L;
  p.N = N;
  p.alpha = alpha;
  p.U = U;
  return p;
}

// Largest |w_a - w_b| after sorting both by (Re, Im).
double multiset_distance(Eigen::VectorXcd a, Eigen::VectorXcd b) {
  REQUIRE(a.size() == b.size());
  const auto lex = [](const complex<double>& x, const complex<double>& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  };
  std::sort(a.data(), a.data() + a.size(), lex);
  std::sort(b.data(), b.data() + b.size(), lex);
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("diagonalize solves a two-site hopping matrix") {
  Operator h{Eigen::MatrixXcd::Zero(2, 2), "dense"};
  h.mat(0, 1) = 1.0;
  h.mat(1, 0) = 1.0;
  const EigenSystem eig = diagonalize(h);
  CHECK(eig.eigenvalues[0].real() == Approx(-1.0).margin(1e-14));
  CHECK(eig.eigenvalues[1].real() == Approx(1.0).margin(1e-14));
  CHECK(eig.v.col(0).norm() == Approx(1.0).margin(1e-14));
  CHECK(eig.residual < 1e-14);
  CHECK(eig.inverse_defect < 1e-14);
}

TEST_CASE("eigenvalues are sorted by real part then imaginary part") {
  Operator h{Eigen::MatrixXcd::Zero(3, 3), "dense"};
  h.mat(0, 0) = complex<double>(1.0, 2.0);
  h.mat(1, 1) = complex<double>(1.0, -2.0);
  h.mat(2, 2) = complex<double>(-1.0, 0.0);
  const EigenSystem eig = diagonalize(h);
  CHECK(eig.eigenvalues[0] == complex<double>(-1.0, 0.0));
  CHECK(eig.eigenvalues[1] == complex<double>(1.0, -2.0));
  CHECK(eig.eigenvalues[2] == complex<double>(1.0, 2.0));
}

TEST_CASE("a Jordan block is reported as defective, not silently inverted") {
  Operator h{Eigen::MatrixXcd::Zero(2, 2), "dense"};
  h.mat(0, 1) = 1.0;
  CHECK_THROWS_AS(diagonalize(h), DefectiveMatrixError);
}

TEST_CASE("gauge and direct paths agree on the open interacting chain") {
  const FockBasis basis(6, 3);
  const ModelParams p = ihn_params(6, 3);
  const Operator h = build_interacting_hn(p, basis);
  const Operator r = build_similarity_transform(p, basis);

  const EigenSystem direct = diagonalize(h);
  const EigenSystem gauge = diagonalize_gauge(h, r);

  CHECK(multiset_distance(direct.eigenvalues, gauge.eigenvalues) < 1e-8);
  // The gauge path promises exact realness and tight residuals.
  for (int m = 0; m < gauge.eigenvalues.size(); ++m)
    CHECK(gauge.eigenvalues[m].imag() == 0.0);
  const double scale = gauge.eigenvalues.cwiseAbs().maxCoeff();
  CHECK(gauge.residual < 1e-12 * scale);
  CHECK((gauge.v * gauge.v_inv -
         Eigen::MatrixXcd::Identity(h.dim(), h.dim())).cwiseAbs().maxCoeff() <
        1e-10);
}

TEST_CASE("gauge path strips a uniform imaginary diagonal shift") {
  const FockBasis basis(4, 2);
  const ModelParams p = ihn_params(4, 2);
  Operator h = build_interacting_hn(p, basis);
  const complex<double> shift(0.0, -2.0 * std::sinh(p.alpha) * p.N);
  h.mat += shift * Eigen::MatrixXcd::Identity(h.dim(), h.dim());

  const EigenSystem eig =
      diagonalize_gauge(h, build_similarity_transform(p, basis));
  for (int m = 0; m < eig.eigenvalues.size(); ++m)
    CHECK(eig.eigenvalues[m].imag() == Approx(shift.imag()).margin(1e-13));
}

TEST_CASE("gauge path refuses a transform that fails to hermitize") {
  const FockBasis basis(4, 2);
  ModelParams p = ihn_params(4, 2);
  p.bc = BoundaryCondition::periodic;  // ring is not gauge-equivalent
  const Operator h = build_interacting_hn(p, basis);
  p.bc = BoundaryCondition::open;
  const Operator r = build_similarity_transform(p, basis);
  CHECK_THROWS_AS(diagonalize_gauge(h, r), std::invalid_argument);
}

TEST_CASE("eigenvalues_only matches the full decomposition") {
  const FockBasis basis(5, 2);
  const Operator h = build_interacting_hn(ihn_params(5, 2), basis);
  const EigenSystem eig = diagonalize(h);
  const Eigen::VectorXcd w = eigenvalues_only(h);
  CHECK(multiset_distance(w, eig.eigenvalues) < 1e-12);

  const Operator r = build_similarity_transform(ihn_params(5, 2), basis);
  const Eigen::VectorXcd wg = eigenvalues_gauge(h, r);
  CHECK(multiset_distance(wg, eig.eigenvalues) < 1e-8);
}

TEST_CASE("condition numbers come from singular value ratios") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(3, 3);
  CHECK(condition_number(m) == Approx(1.0).margin(1e-14));
  m(0, 0) = 4.0;
  m(2, 2) = 0.5;
  CHECK(condition_number(m) == Approx(8.0).margin(1e-12));
  m(2, 2) = 0.0;
  CHECK(condition_number(m) == std::numeric_limits<double>::infinity());

  Eigen::MatrixXcd tall = Eigen::MatrixXcd::Zero(4, 2);
  tall(0, 0) = 1.0;
  tall(1, 1) = 1.0;
  CHECK(submatrix_condition_number(tall) == Approx(1.0).margin(1e-14));
  CHECK_THROWS_AS(submatrix_condition_number(tall.transpose()),
                  std::invalid_argument);
}

TEST_CASE("propagator norm matches a dense matrix exponential") {
  Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    Eigen::MatrixXcd m(6, 6);
    for (int j = 0; j < 6; ++j)
      for (int i = 0; i < 6; ++i)
        m(i, j) = complex<double>(rng.normal(), rng.normal()) / 3.0;
    const EigenSystem eig = diagonalize(Operator{m, "dense"});
    for (double t : {0.0, 0.3, 1.7}) {
      CHECK(propagator_norm(eig, t) ==
            Approx(oracles::propagator_norm_expm(m, t)).epsilon(1e-9));
    }
  }
}

TEST_CASE("propagator norm of a Hermitian generator stays at one") {
  Rng rng(3);
  const Eigen::MatrixXcd m = rng.hermitian(8);
  const EigenSystem eig = diagonalize(Operator{m, "dense"});
  for (double t : {0.0, 1.0, 10.0, 100.0})
    CHECK(propagator_norm(eig, t) == Approx(1.0).margin(1e-9));
  CHECK_THROWS_AS(propagator_norm(eig, -0.5), std::invalid_argument);
}

TEST_CASE("propagator norm survives strong decay without underflow tricks") {
  // Pure decay -i c I: the norm is e^{-ct}, far below double range for
  // plain matrix exponentials at large t.
  Operator h{Eigen::MatrixXcd::Zero(2, 2), "dense"};
  h.mat(0, 0) = complex<double>(0.0, -0.3);
  h.mat(1, 1) = complex<double>(0.0, -0.3);
  const EigenSystem eig = diagonalize(h);
  CHECK(propagator_norm(eig, 10.0) == Approx(std::exp(-3.0)).epsilon(1e-10));
  CHECK(std::log(propagator_norm(eig, 1000.0)) ==
        Approx(-300.0).epsilon(1e-10));
}

TEST_CASE("spectral radius and two-norm agree with known matrices") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 1) = 3.0;  // nilpotent: radius 0, norm 3
  CHECK(spectral_radius(m) == Approx(0.0).margin(1e-12));
  CHECK(operator_two_norm(m) == Approx(3.0).epsilon(1e-12));

  Rng rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    Eigen::MatrixXcd a(7, 7);
    for (int j = 0; j < 7; ++j)
      for (int i = 0; i < 7; ++i)
        a(i, j) = complex<double>(rng.normal(), rng.normal());
    CHECK(operator_two_norm(a) ==
          Approx(singular_values(a)[0]).epsilon(1e-10));
    CHECK(spectral_radius(a) <= operator_two_norm(a) * (1 + 1e-12));
  }
}

TEST_CASE("singular values are returned in descending order") {
  Rng rng(9);
  Eigen::MatrixXcd a(5, 3);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 5; ++i)
      a(i, j) = complex<double>(rng.normal(), rng.normal());
  const Eigen::VectorXd s = singular_values(a);
  REQUIRE(s.size() == 3);
  CHECK(s[0] >= s[1]);
  CHECK(s[1] >= s[2]);
  CHECK(s[2] >= 0.0);
}

TEST_CASE("hermitian_eigenvalues ascend and match the general solver") {
  Rng rng(13);
  const Eigen::MatrixXcd m = rng.hermitian(9);
  const Eigen::VectorXd w = hermitian_eigenvalues(m);
  for (int k = 1; k < w.size(); ++k) CHECK(w[k] >= w[k - 1]);
  const EigenSystem eig = diagonalize(Operator{m, "dense"});
  for (int k = 0; k < w.size(); ++k) {
    CHECK(eig.eigenvalues[k].real() == Approx(w[k]).margin(1e-10));
    CHECK(std::abs(eig.eigenvalues[k].imag()) < 1e-10);
  }
}

TEST_CASE("solvers reject empty and non-square input") {
  const Operator empty{Eigen::MatrixXcd(), "dense"};
  CHECK_THROWS_AS(diagonalize(empty), std::invalid_argument);
  const Operator rect{Eigen::MatrixXcd::Zero(2, 3), "dense"};
  CHECK_THROWS_AS(diagonalize(rect), std::invalid_argument);
  CHECK_THROWS_AS(eigenvalues_only(rect), std::invalid_argument);
}
