// Copyright 2026 The fockskin Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <string>

#include <Eigen/Core>

namespace fockskin {

/// Dense operator together with the tag of the basis it lives on. The tag
/// is only used to catch accidental mixing of operators from different
/// bases; all numerics go through `mat`.
struct Operator {
  Eigen::MatrixXcd mat;
  std::string basis;

  int dim() const { return static_cast<int>(mat.rows()); }
};

}  // namespace fockskin
