// Copyright 2026 The fockskin Authors
// SPDX-License-Identifier: Apache-2.0
#include "fockskin/models.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace fockskin {

namespace {

using std::complex;
constexpr complex<double> kI{0.0, 1.0};

void check_chain(const ModelParams& p) {
  if (p.L < 2) throw std::invalid_argument("chain needs at least two sites");
}

struct Bond {
  int a, b;      // hopping c^dag_a c_b carries e^{+alpha}
  bool interact; // whether U n_a n_b is included
};

std::vector<Bond> chain_bonds(const ModelParams& p) {
  std::vector<Bond> bonds;
  for (int j = 1; j < p.L; ++j) bonds.push_back({j, j + 1, true});
  if (p.bc == BoundaryCondition::periodic)
    bonds.push_back({p.L, 1, p.pbc_boundary_interaction});
  return bonds;
}

// Shared body for the fixed-N and union bases: the Hamiltonian only needs
// the state list and an index lookup.
template <typename Basis>
Eigen::MatrixXcd interacting_hn_matrix(const ModelParams& p,
                                       const Basis& basis) {
  check_chain(p);
  const int d = basis.dim();
  const double up = std::exp(p.alpha), dn = std::exp(-p.alpha);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
  const auto bonds = chain_bonds(p);
  for (int k = 0; k < d; ++k) {
    const FockState& s = basis.state(k);
    for (const Bond& bond : bonds) {
      if (auto el = hop_element(s, bond.a, bond.b))
        h(basis.index_of(el->first), k) += up * el->second;
      if (auto el = hop_element(s, bond.b, bond.a))
        h(basis.index_of(el->first), k) += dn * el->second;
      if (bond.interact && s.occupied(bond.a) && s.occupied(bond.b))
        h(k, k) += p.U;
    }
  }
  return h;
}

template <typename Basis>
Eigen::MatrixXcd similarity_matrix(const ModelParams& p, const Basis& basis) {
  const int d = basis.dim();
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k)
    r(k, k) = std::exp(-p.alpha * basis.state(k).site_sum());
  return r;
}

}  // namespace

Operator build_hatano_nelson_single(const ModelParams& p) {
  check_chain(p);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(p.L, p.L);
  for (int j = 0; j + 1 < p.L; ++j) {
    h(j + 1, j) = p.t + p.g;
    h(j, j + 1) = p.t - p.g;
  }
  if (p.bc == BoundaryCondition::periodic) {
    h(0, p.L - 1) += p.t + p.g;
    h(p.L - 1, 0) += p.t - p.g;
  }
  return {std::move(h), "site:L=" + std::to_string(p.L)};
}

Operator build_similarity_transform_single(const ModelParams& p) {
  check_chain(p);
  if (p.t - p.g <= 0.0 || p.t + p.g <= 0.0)
    throw std::invalid_argument(
        "similarity transform needs t - g > 0 and t + g > 0");
  const double rho = std::sqrt((p.t + p.g) / (p.t - p.g));
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(p.L, p.L);
  for (int k = 0; k < p.L; ++k)
    r(k, k) = std::pow(rho, k - 0.5 * (p.L - 1));
  return {std::move(r), "site:L=" + std::to_string(p.L)};
}

Operator build_interacting_hn(const ModelParams& p, const FockBasis& basis) {
  if (basis.sites() != p.L)
    throw std::invalid_argument("basis does not match chain length");
  return {interacting_hn_matrix(p, basis), basis.tag()};
}

Operator build_interacting_hn(const ModelParams& p, const UnionBasis& basis) {
  if (basis.sites() != p.L)
    throw std::invalid_argument("basis does not match chain length");
  return {interacting_hn_matrix(p, basis), basis.tag()};
}

Operator build_similarity_transform(const ModelParams& p,
                                    const FockBasis& basis) {
  if (basis.sites() != p.L)
    throw std::invalid_argument("basis does not match chain length");
  return {similarity_matrix(p, basis), basis.tag()};
}

Operator build_similarity_transform(const ModelParams& p,
                                    const UnionBasis& basis) {
  if (basis.sites() != p.L)
    throw std::invalid_argument("basis does not match chain length");
  return {similarity_matrix(p, basis), basis.tag()};
}

Operator gauge_transformed(const Operator& h, const Operator& r) {
  if (h.dim() != r.dim() || h.mat.cols() != r.mat.cols())
    throw std::invalid_argument("operator dimensions do not match");
  const int d = h.dim();
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i)
      if (i != j && r.mat(i, j) != 0.0)
        throw std::invalid_argument("gauge transform must be diagonal");
  for (int k = 0; k < d; ++k)
    if (r.mat(k, k) == 0.0)
      throw std::invalid_argument("gauge transform is singular");
  Eigen::MatrixXcd m = h.mat;
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) m(i, j) *= r.mat(j, j) / r.mat(i, i);
  return {std::move(m), h.basis};
}

Operator build_number_operator(const UnionBasis& basis) {
  const int d = basis.dim();
  Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k) n(k, k) = basis.state(k).count();
  return {std::move(n), basis.tag()};
}

Operator build_annihilator(const UnionBasis& basis, int site) {
  if (site < 1 || site > basis.sites())
    throw std::invalid_argument("annihilator site out of range");
  const int d = basis.dim();
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
  const std::uint32_t below = (std::uint32_t{1} << (site - 1)) - 1;
  for (int k = 0; k < d; ++k) {
    const FockState& s = basis.state(k);
    if (!s.occupied(site)) continue;
    FockState target{s.occ & ~(std::uint32_t{1} << (site - 1)), s.sites};
    const int row = basis.index_of(target);
    if (row < 0) continue;  // sector below the union floor
    const int crossings = std::popcount(s.occ & below);
    c(row, k) = (crossings & 1) ? -1.0 : 1.0;
  }
  return {std::move(c), basis.tag()};
}

OpenSystem build_h0_and_lindblad(const ModelParams& p,
                                 const UnionBasis& basis) {
  check_chain(p);
  if (basis.sites() != p.L)
    throw std::invalid_argument("basis does not match chain length");
  if (p.bc != BoundaryCondition::open)
    throw std::invalid_argument("loss realization requires open boundaries");
  if (p.alpha < 0)
    throw std::invalid_argument("loss realization requires alpha >= 0");

  const int d = basis.dim();
  const double ch = std::cosh(p.alpha);
  Eigen::MatrixXcd h0mat = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const FockState& s = basis.state(k);
    for (int j = 1; j < p.L; ++j) {
      if (auto el = hop_element(s, j, j + 1))
        h0mat(basis.index_of(el->first), k) += ch * el->second;
      if (auto el = hop_element(s, j + 1, j))
        h0mat(basis.index_of(el->first), k) += ch * el->second;
      if (s.occupied(j) && s.occupied(j + 1)) h0mat(k, k) += p.U;
    }
  }
  Operator h0{std::move(h0mat), basis.tag()};

  const double pref = std::sqrt(2.0 * std::sinh(p.alpha));
  std::vector<Operator> lindblads;
  lindblads.reserve(p.L + 1);
  {
    Operator l0 = build_annihilator(basis, 1);
    l0.mat *= pref;
    lindblads.push_back(std::move(l0));
  }
  for (int j = 1; j < p.L; ++j) {
    Operator lj = build_annihilator(basis, j);
    Operator lj1 = build_annihilator(basis, j + 1);
    lj.mat = pref * (lj.mat + kI * lj1.mat);
    lindblads.push_back(std::move(lj));
  }
  {
    Operator ll = build_annihilator(basis, p.L);
    ll.mat *= pref;
    lindblads.push_back(std::move(ll));
  }
  return {std::move(h0), std::move(lindblads)};
}

SectorOpenSystem build_h0_and_jump_products(const ModelParams& p,
                                            const FockBasis& basis) {
  check_chain(p);
  if (basis.sites() != p.L)
    throw std::invalid_argument("basis does not match chain length");
  if (p.bc != BoundaryCondition::open)
    throw std::invalid_argument("loss realization requires open boundaries");
  if (p.alpha < 0)
    throw std::invalid_argument("loss realization requires alpha >= 0");

  const int d = basis.dim();
  const double ch = std::cosh(p.alpha);
  const double s2 = 2.0 * std::sinh(p.alpha);
  Eigen::MatrixXcd h0 = Eigen::MatrixXcd::Zero(d, d);
  std::vector<Eigen::MatrixXcd> prod(
      p.L + 1, Eigen::MatrixXcd::Zero(d, d));
  for (int k = 0; k < d; ++k) {
    const FockState& s = basis.state(k);
    // boundary losses: L_0^dag L_0 = s2 n_1, L_L^dag L_L = s2 n_L
    if (s.occupied(1)) prod[0](k, k) += s2;
    if (s.occupied(p.L)) prod[p.L](k, k) += s2;
    for (int j = 1; j < p.L; ++j) {
      if (auto el = hop_element(s, j, j + 1)) {
        h0(basis.index_of(el->first), k) += ch * el->second;
        prod[j](basis.index_of(el->first), k) +=
            s2 * kI * static_cast<double>(el->second);
      }
      if (auto el = hop_element(s, j + 1, j)) {
        h0(basis.index_of(el->first), k) += ch * el->second;
        prod[j](basis.index_of(el->first), k) -=
            s2 * kI * static_cast<double>(el->second);
      }
      if (s.occupied(j) && s.occupied(j + 1)) h0(k, k) += p.U;
      if (s.occupied(j)) prod[j](k, k) += s2;
      if (s.occupied(j + 1)) prod[j](k, k) += s2;
    }
  }
  SectorOpenSystem sys;
  sys.h0 = {std::move(h0), basis.tag()};
  sys.jump_products.reserve(prod.size());
  for (auto& m : prod) sys.jump_products.push_back({std::move(m), basis.tag()});
  return sys;
}

Operator build_effective_hamiltonian(const Operator& h0,
                                     const std::vector<Operator>& lindblads) {
  Eigen::MatrixXcd heff = h0.mat;
  for (const Operator& l : lindblads) {
    if (l.basis != h0.basis || l.dim() != h0.dim())
      throw std::invalid_argument("jump operator on a different basis");
    heff -= 0.5 * kI * (l.mat.adjoint() * l.mat);
  }
  return {std::move(heff), h0.basis};
}

Operator effective_hamiltonian_in_sector(const SectorOpenSystem& sys) {
  Eigen::MatrixXcd heff = sys.h0.mat;
  for (const Operator& prod : sys.jump_products) {
    if (prod.basis != sys.h0.basis || prod.dim() != sys.h0.dim())
      throw std::invalid_argument("jump product on a different basis");
    heff -= 0.5 * kI * prod.mat;
  }
  return {std::move(heff), sys.h0.basis};
}

Operator sector_block(const Operator& op, const UnionBasis& basis,
                      int particles) {
  if (op.dim() != basis.dim())
    throw std::invalid_argument("operator does not match union basis");
  const int off = basis.sector_offset(particles);
  const int d = basis.sector_dim(particles);
  return {op.mat.block(off, off, d, d),
          "fock:L=" + std::to_string(basis.sites()) +
              ",N=" + std::to_string(particles)};
}

}  // namespace fockskin
