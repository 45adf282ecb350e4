// Copyright 2026 The fockskin Authors
// SPDX-License-Identifier: Apache-2.0
#include "fockskin/fockspace.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fockskin {

namespace {

constexpr int kMaxSites = 28;  // occupation words are 32-bit

void check_sites_particles(int sites, int particles) {
  if (sites < 1 || sites > kMaxSites)
    throw std::invalid_argument("site count out of range");
  if (particles < 0 || particles > sites)
    throw std::invalid_argument("particle count out of range");
}

}  // namespace

int FockState::count() const { return std::popcount(occ); }

int FockState::site_sum() const {
  int sum = 0;
  for (std::uint32_t w = occ; w; w &= w - 1)
    sum += std::countr_zero(w) + 1;
  return sum;
}

FockBasis::FockBasis(int sites, int particles)
    : sites_(sites), particles_(particles) {
  check_sites_particles(sites, particles);
  const std::uint32_t limit = std::uint32_t{1} << sites;
  // Gosper's hack walks equal-popcount words in ascending order.
  std::uint32_t w = particles == 0 ? 0 : (std::uint32_t{1} << particles) - 1;
  for (;;) {
    states_.push_back({w, sites});
    if (particles == 0) break;
    const std::uint32_t c = w & (0u - w);
    const std::uint32_t r = w + c;
    if (r >= limit) break;
    w = (((r ^ w) >> 2) / c) | r;
    if (w >= limit) break;
  }
  order_.resize(states_.size());
  for (int k = 0; k < dim(); ++k) order_[k] = k;
  lookup_.reserve(states_.size());
  for (int k = 0; k < dim(); ++k) lookup_.emplace(states_[k].occ, k);
}

int FockBasis::index_of(const FockState& s) const {
  if (s.sites != sites_) return -1;
  auto it = lookup_.find(s.occ);
  return it == lookup_.end() ? -1 : it->second;
}

void FockBasis::set_order(std::vector<int> order) {
  if (static_cast<int>(order.size()) != dim())
    throw std::invalid_argument("display order has wrong length");
  std::vector<bool> seen(order.size(), false);
  for (int k : order) {
    if (k < 0 || k >= dim() || seen[k])
      throw std::invalid_argument("display order is not a permutation");
    seen[k] = true;
  }
  order_ = std::move(order);
}

std::string FockBasis::tag() const {
  return "fock:L=" + std::to_string(sites_) + ",N=" + std::to_string(particles_);
}

UnionBasis::UnionBasis(int sites, int max_particles)
    : sites_(sites), max_particles_(max_particles) {
  check_sites_particles(sites, max_particles);
  offsets_.assign(max_particles + 1, 0);
  for (int n = max_particles; n >= 0; --n) {
    offsets_[n] = static_cast<int>(states_.size());
    FockBasis sector(sites, n);
    states_.insert(states_.end(), sector.states().begin(),
                   sector.states().end());
  }
  lookup_.reserve(states_.size());
  for (int k = 0; k < dim(); ++k) lookup_.emplace(states_[k].occ, k);
}

int UnionBasis::index_of(const FockState& s) const {
  if (s.sites != sites_) return -1;
  auto it = lookup_.find(s.occ);
  return it == lookup_.end() ? -1 : it->second;
}

int UnionBasis::sector_offset(int particles) const {
  if (particles < 0 || particles > max_particles_)
    throw std::invalid_argument("sector outside union basis");
  return offsets_[particles];
}

int UnionBasis::sector_dim(int particles) const {
  if (particles < 0 || particles > max_particles_)
    throw std::invalid_argument("sector outside union basis");
  return static_cast<int>(binomial(sites_, particles));
}

std::string UnionBasis::tag() const {
  return "union:L=" + std::to_string(sites_) +
         ",Nmax=" + std::to_string(max_particles_);
}

FockBasis enumerate_basis(int sites, int particles) {
  return FockBasis(sites, particles);
}

std::optional<std::pair<FockState, int>> hop_element(const FockState& s,
                                                     int i, int j) {
  if (i < 1 || i > s.sites || j < 1 || j > s.sites)
    throw std::invalid_argument("hop site out of range");
  if (!s.occupied(j)) return std::nullopt;
  if (i == j) return std::make_pair(s, 1);
  if (s.occupied(i)) return std::nullopt;
  const int lo = std::min(i, j), hi = std::max(i, j);
  // Occupied sites strictly between i and j, counted before the hop.
  const std::uint32_t between =
      ((std::uint32_t{1} << (hi - 1)) - 1) & ~((std::uint32_t{1} << lo) - 1);
  const int crossings = std::popcount(s.occ & between);
  FockState target{s.occ ^ (std::uint32_t{1} << (j - 1)) ^
                       (std::uint32_t{1} << (i - 1)),
                   s.sites};
  return std::make_pair(target, (crossings & 1) ? -1 : 1);
}

std::vector<int> reference_order(const Eigen::VectorXcd& amplitudes) {
  const int d = static_cast<int>(amplitudes.size());
  std::vector<int> order(d);
  for (int k = 0; k < d; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(amplitudes[a]) > std::abs(amplitudes[b]);
  });
  return order;
}

FockBasis reorder_by_reference(const FockBasis& basis,
                               const Eigen::VectorXcd& amplitudes) {
  if (amplitudes.size() != basis.dim())
    throw std::invalid_argument("amplitude vector has wrong length");
  FockBasis out = basis;
  out.set_order(reference_order(amplitudes));
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("binomial arguments out of range");
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // Exact at every step: r is divisible by i after the multiply.
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

}  // namespace fockskin
