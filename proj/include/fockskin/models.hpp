// Copyright 2026 The fockskin Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "fockskin/fockspace.hpp"
#include "fockskin/operator.hpp"

namespace fockskin {

enum class BoundaryCondition { open, periodic };

struct ModelParams {
  int L = 0;                  // chain length
  int N = 0;                  // particle number (fixed-sector builders)
  double alpha = 0.0;         // hopping asymmetry, e^{+alpha} to the left
  double U = 0.0;             // nearest-neighbour interaction
  double t = 1.0;             // single-particle variant: symmetric hopping
  double g = 0.0;             // single-particle variant: asymmetric part
  BoundaryCondition bc = BoundaryCondition::open;
  // The periodic chain closes the hopping ring; whether the interaction
  // ring also closes is a convention, so it is kept switchable.
  bool pbc_boundary_interaction = true;
};

/// Single-particle Hatano-Nelson chain,
///   H = sum_j (t+g)|j+1><j| + (t-g)|j><j+1|,
/// plus the wrap-around pair for periodic bc.
Operator build_hatano_nelson_single(const ModelParams& p);

/// Diagonal similarity transform for the single-particle chain, entries
/// rho^(j - (L-1)/2) with rho = sqrt((t+g)/(t-g)). For the open chain
/// R^{-1} H R is Hermitian with hopping sqrt(t^2 - g^2); the centred
/// exponent keeps the entries inside double range up to L of several
/// thousand. Requires t - g > 0 and t + g > 0.
Operator build_similarity_transform_single(const ModelParams& p);

/// Interacting Hatano-Nelson Hamiltonian
///   H = sum_j e^{alpha} c^dag_j c_{j+1} + e^{-alpha} c^dag_{j+1} c_j
///       + U n_j n_{j+1}
/// on the given fixed-N basis (canonical index order). Periodic bc adds the
/// j = L bond with site L+1 identified with 1.
Operator build_interacting_hn(const ModelParams& p, const FockBasis& basis);
Operator build_interacting_hn(const ModelParams& p, const UnionBasis& basis);

/// Diagonal similarity transform R with entries exp(-alpha * sum of
/// occupied site indices). For the open chain R^{-1} H_iHN R is Hermitian.
Operator build_similarity_transform(const ModelParams& p,
                                    const FockBasis& basis);
Operator build_similarity_transform(const ModelParams& p,
                                    const UnionBasis& basis);

/// R^{-1} H R for diagonal invertible R. Exact columnwise/rowwise scaling,
/// no matrix products involved.
Operator gauge_transformed(const Operator& h, const Operator& r);

/// Total particle number operator on the union basis.
Operator build_number_operator(const UnionBasis& basis);

/// Annihilation operator c_site on the union basis (maps sector n to n-1).
Operator build_annihilator(const UnionBasis& basis, int site);

struct OpenSystem {
  Operator h0;                      // Hermitian part of the realization
  std::vector<Operator> lindblads;  // L+1 jump operators, sector-lowering
};

/// Hermitian chain plus one-body-loss jump operators whose effective
/// Hamiltonian h0 - (i/2) sum_r L_r^dag L_r equals the interacting
/// Hatano-Nelson model shifted by -2i sinh(alpha) N:
///   h0  = sum_j cosh(alpha) (c^dag_j c_{j+1} + h.c.) + U n_j n_{j+1}
///   L_j = sqrt(2 sinh alpha) (c_j + i c_{j+1}),  j = 1..L-1
///   L_0 = sqrt(2 sinh alpha) c_1,  L_L = sqrt(2 sinh alpha) c_L
/// Requires alpha >= 0 and open boundaries; at alpha = 0 the jump operators
/// vanish (Hermitian limit).
OpenSystem build_h0_and_lindblad(const ModelParams& p, const UnionBasis& basis);

struct SectorOpenSystem {
  Operator h0;                          // restricted to the fixed-N sector
  std::vector<Operator> jump_products;  // L_r^dag L_r, particle-conserving
};

/// Fixed-sector realization of the same open system. The jump operators
/// themselves leave the sector, so only the products L_r^dag L_r are
/// representable here.
SectorOpenSystem build_h0_and_jump_products(const ModelParams& p,
                                            const FockBasis& basis);

/// h0 - (i/2) sum_r L_r^dag L_r.
Operator build_effective_hamiltonian(const Operator& h0,
                                     const std::vector<Operator>& lindblads);

/// Same contraction when the products are already sector-diagonal.
Operator effective_hamiltonian_in_sector(const SectorOpenSystem& sys);

/// Fixed-N diagonal block of an operator on the union basis.
Operator sector_block(const Operator& op, const UnionBasis& basis,
                      int particles);

}  // namespace fockskin
