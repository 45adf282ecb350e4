// Copyright 2026 The fockskin Authors
// SPDX-License-Identifier: Apache-2.0
#include "fockskin/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fockskin {

double Rng::uniform() {
  // 53 random bits mapped to [0, 1), the usual double-precision ldexp trick.
  return std::ldexp(static_cast<double>(gen_() >> 11), -53);
}

double Rng::normal() {
  // Box-Muller, cosine branch only; u is kept away from 0 so log is finite.
  const double u = std::ldexp(static_cast<double>(gen_() >> 11) + 0.5, -53);
  const double v = uniform();
  return std::sqrt(-2.0 * std::log(u)) *
         std::cos(2.0 * std::numbers::pi * v);
}

int Rng::uniform_int(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: hi < lo");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

std::vector<int> Rng::permutation(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  // Fisher-Yates.
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[uniform_int(0, i)]);
  return p;
}

Eigen::MatrixXcd Rng::hermitian(int dim) {
  Eigen::MatrixXcd m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    m(j, j) = normal();
    for (int i = j + 1; i < dim; ++i) {
      const std::complex<double> z(normal(), normal());
      m(i, j) = z / std::sqrt(2.0);
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

Eigen::VectorXcd Rng::unit_vector(int dim) {
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v[i] = std::complex<double>(normal(), normal());
  const double n = v.norm();
  if (n == 0.0) return unit_vector(dim);
  return v / n;
}

}  // namespace fockskin
