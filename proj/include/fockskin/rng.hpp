// Copyright 2026 The fockskin Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Core>

namespace fockskin {

/// Deterministic random helpers. The distributions are hand-rolled on top
/// of the raw mt19937_64 stream because the std::*_distribution adaptors
/// are implementation-defined, which would break byte-identical reruns.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  /// Standard normal via Box-Muller.
  double normal();
  /// Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi);

  std::vector<int> permutation(int n);
  Eigen::MatrixXcd hermitian(int dim);
  Eigen::VectorXcd unit_vector(int dim);

 private:
  std::mt19937_64 gen_;
};

}  // namespace fockskin
