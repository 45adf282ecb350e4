// Copyright 2026 The fockskin Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace fockskin {

/// One spinless-fermion Fock state on an L-site chain. Sites are numbered
/// 1..L and site j maps to bit j-1 of the occupation word.
struct FockState {
  std::uint32_t occ = 0;
  int sites = 0;

  bool occupied(int site) const { return (occ >> (site - 1)) & 1u; }
  int count() const;
  /// Sum of the occupied site indices (1-based), the exponent entering the
  /// imaginary gauge transform.
  int site_sum() const;

  bool operator==(const FockState& other) const {
    return occ == other.occ && sites == other.sites;
  }
};

/// Fixed-particle-number basis. States are enumerated once in canonical
/// order (ascending occupation word); `order()` is a display permutation on
/// top of that, identity until reorder_by_reference is applied.
class FockBasis {
 public:
  FockBasis() = default;
  FockBasis(int sites, int particles);

  int sites() const { return sites_; }
  int particles() const { return particles_; }
  int dim() const { return static_cast<int>(states_.size()); }

  const FockState& state(int canonical) const { return states_[canonical]; }
  const std::vector<FockState>& states() const { return states_; }

  /// Canonical index of a state, or -1 if it is not in this basis.
  int index_of(const FockState& s) const;

  /// Display permutation: order()[k] is the canonical index shown at
  /// display position k (0-based).
  const std::vector<int>& order() const { return order_; }
  void set_order(std::vector<int> order);

  std::string tag() const;

 private:
  int sites_ = 0;
  int particles_ = 0;
  std::vector<FockState> states_;
  std::vector<int> order_;
  std::unordered_map<std::uint32_t, int> lookup_;
};

/// Union of fixed-N sectors n = max_particles, max_particles-1, ..., 0,
/// concatenated in that order with each sector in canonical order. This is
/// the state space for the lossy dynamics, which only lowers N.
class UnionBasis {
 public:
  UnionBasis(int sites, int max_particles);

  int sites() const { return sites_; }
  int max_particles() const { return max_particles_; }
  int dim() const { return static_cast<int>(states_.size()); }

  const FockState& state(int k) const { return states_[k]; }
  int index_of(const FockState& s) const;

  int sector_offset(int particles) const;
  int sector_dim(int particles) const;

  std::string tag() const;

 private:
  int sites_ = 0;
  int max_particles_ = 0;
  std::vector<FockState> states_;
  std::vector<int> offsets_;  // indexed by particle number
  std::unordered_map<std::uint32_t, int> lookup_;
};

/// All C(sites, particles) states, ascending occupation word.
FockBasis enumerate_basis(int sites, int particles);

/// Matrix element of c^dag_i c_j between Fock states: returns the target
/// state and the fermionic sign (-1)^(occupied sites strictly between i and
/// j), or nullopt when the element vanishes (j empty, or i occupied with
/// i != j). i == j on an occupied site is the number operator, sign +1.
std::optional<std::pair<FockState, int>> hop_element(const FockState& s,
                                                     int i, int j);

/// New basis whose display order sorts |amplitudes| descending (stable, so
/// ties keep canonical order). `amplitudes` is indexed canonically and must
/// have length dim().
FockBasis reorder_by_reference(const FockBasis& basis,
                               const Eigen::VectorXcd& amplitudes);

/// Stable descending-|amplitude| permutation of 0..D-1, the ordering rule
/// used by reorder_by_reference.
std::vector<int> reference_order(const Eigen::VectorXcd& amplitudes);

std::uint64_t binomial(int n, int k);

}  // namespace fockskin
