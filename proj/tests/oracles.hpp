// Copyright 2026 The fockskin Authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent reference implementations used to cross-check the library.
// Each uses a different technique from the code under test: occupied-site
// lists instead of bitmasks, Pascal's triangle instead of multiplicative
// binomials, dense scaling-and-squaring expm instead of eigendecomposition.
#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace oracles {

inline std::uint64_t pascal_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(i + 1, 1);
    for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

// c^dag_i c_j on a state written as the ascending list of occupied sites,
// with |s> = c^dag_{s_1} ... c^dag_{s_N} |vac>. The sign counts the
// creation operators each of c_j and c^dag_i anticommutes past.
inline std::optional<std::pair<std::vector<int>, int>> list_hop(
    std::vector<int> occ, int i, int j) {
  const auto jt = std::find(occ.begin(), occ.end(), j);
  if (jt == occ.end()) return std::nullopt;
  int sign = (jt - occ.begin()) % 2 == 0 ? 1 : -1;
  occ.erase(jt);
  const auto it = std::lower_bound(occ.begin(), occ.end(), i);
  if (it != occ.end() && *it == i) return std::nullopt;
  if ((it - occ.begin()) % 2 != 0) sign = -sign;
  occ.insert(it, i);
  return std::make_pair(std::move(occ), sign);
}

inline Eigen::MatrixXcd expm(const Eigen::MatrixXcd& m) { return m.exp(); }

// ||exp(-i h t)|| without any eigendecomposition.
inline double propagator_norm_expm(const Eigen::MatrixXcd& h, double t) {
  const std::complex<double> mit(0.0, -t);
  const Eigen::MatrixXcd u = (mit * h).exp();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(u);
  return svd.singularValues()[0];
}

}  // namespace oracles
