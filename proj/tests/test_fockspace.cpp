// Copyright 2026 The fockskin Authors
// SPDX-License-Identifier: Apache-2.0
#include "fockskin/fockspace.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "oracles.hpp"

using namespace fockskin;

namespace {

// Occupied-site list of a state, ascending, 1-based.
std::vector<int> occupied_list(const FockState& s) {
  std::vector<int> occ;
  for (int site = 1; site <= s.sites; ++site)
    if (s.occupied(site)) occ.push_back(site);
  return occ;
}

}  // namespace

TEST_CASE("binomial matches Pascal's triangle") {
  for (int n = 0; n <= 28; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == oracles::pascal_binomial(n, k));
  CHECK_THROWS_AS(binomial(5, 7), std::invalid_argument);
  CHECK_THROWS_AS(binomial(5, -1), std::invalid_argument);
}

TEST_CASE("basis enumerates all states ascending with the right count") {
  const FockBasis basis(6, 3);
  REQUIRE(basis.dim() == 20);
  std::set<std::uint32_t> seen;
  for (int k = 0; k < basis.dim(); ++k) {
    const FockState& s = basis.state(k);
    CHECK(s.count() == 3);
    CHECK(s.sites == 6);
    seen.insert(s.occ);
    if (k > 0) CHECK(basis.state(k - 1).occ < s.occ);
  }
  CHECK(seen.size() == 20);
  // Canonical extremes: particles packed left first, packed right last.
  CHECK(basis.state(0).occ == 0b000111u);
  CHECK(basis.state(19).occ == 0b111000u);
}

TEST_CASE("basis handles the empty and full sectors") {
  const FockBasis empty(5, 0);
  REQUIRE(empty.dim() == 1);
  CHECK(empty.state(0).occ == 0u);

  const FockBasis full(5, 5);
  REQUIRE(full.dim() == 1);
  CHECK(full.state(0).occ == 0b11111u);
}

TEST_CASE("index_of inverts enumeration and rejects foreign states") {
  const FockBasis basis(8, 4);
  for (int k = 0; k < basis.dim(); ++k)
    CHECK(basis.index_of(basis.state(k)) == k);
  CHECK(basis.index_of(FockState{0b1u, 8}) == -1);   // wrong N
  CHECK(basis.index_of(FockState{0b1111u, 6}) == -1);  // wrong L
}

TEST_CASE("basis rejects invalid sizes") {
  CHECK_THROWS_AS(FockBasis(29, 1), std::invalid_argument);
  CHECK_THROWS_AS(FockBasis(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(FockBasis(4, -1), std::invalid_argument);
}

TEST_CASE("site_sum adds the occupied 1-based site indices") {
  CHECK(FockState{0b0111u, 6}.site_sum() == 1 + 2 + 3);
  CHECK(FockState{0b111000u, 6}.site_sum() == 4 + 5 + 6);
  CHECK(FockState{0u, 6}.site_sum() == 0);
}

TEST_CASE("hop_element agrees with the occupied-list oracle everywhere") {
  const FockBasis basis(6, 3);
  for (int k = 0; k < basis.dim(); ++k) {
    const FockState& s = basis.state(k);
    for (int i = 1; i <= 6; ++i) {
      for (int j = 1; j <= 6; ++j) {
        const auto got = hop_element(s, i, j);
        const auto want = oracles::list_hop(occupied_list(s), i, j);
        REQUIRE(got.has_value() == want.has_value());
        if (!got) continue;
        CHECK(occupied_list(got->first) == want->first);
        CHECK(got->second == want->second);
      }
    }
  }
}

TEST_CASE("hop_element handles the diagonal and range checks") {
  const FockState s{0b0101u, 4};  // sites 1 and 3
  const auto number = hop_element(s, 3, 3);
  REQUIRE(number.has_value());
  CHECK(number->first == s);
  CHECK(number->second == 1);
  CHECK_FALSE(hop_element(s, 2, 2).has_value());
  CHECK_THROWS_AS(hop_element(s, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(hop_element(s, 1, 5), std::invalid_argument);
}

TEST_CASE("wrap-around hop picks up one sign per particle in between") {
  // c^dag_6 c_1 on |1,3>: site 3 sits strictly between, so sign -1. In
  // general the ring-closing hop crosses all N-1 other particles.
  const FockState s{0b000101u, 6};
  const auto el = hop_element(s, 6, 1);
  REQUIRE(el.has_value());
  CHECK(el->first.occ == 0b100100u);
  CHECK(el->second == -1);
}

TEST_CASE("union basis concatenates sectors in descending particle number") {
  const UnionBasis basis(4, 2);
  REQUIRE(basis.dim() == 6 + 4 + 1);
  CHECK(basis.sector_offset(2) == 0);
  CHECK(basis.sector_dim(2) == 6);
  CHECK(basis.sector_offset(1) == 6);
  CHECK(basis.sector_dim(1) == 4);
  CHECK(basis.sector_offset(0) == 10);
  CHECK(basis.sector_dim(0) == 1);
  for (int k = 0; k < basis.dim(); ++k)
    CHECK(basis.index_of(basis.state(k)) == k);
  CHECK_THROWS_AS(basis.sector_offset(3), std::invalid_argument);
  CHECK_THROWS_AS(basis.sector_dim(-1), std::invalid_argument);
}

TEST_CASE("union basis with all sectors spans the full space") {
  const UnionBasis basis(5, 5);
  CHECK(basis.dim() == 32);
}

TEST_CASE("reference_order sorts by descending amplitude, stable on ties") {
  Eigen::VectorXcd amp(5);
  amp << 0.1, std::complex<double>(0.0, 0.5), 0.5, -0.9, 0.1;
  const std::vector<int> order = reference_order(amp);
  CHECK(order == std::vector<int>{3, 1, 2, 0, 4});
}

TEST_CASE("reorder_by_reference installs the reference permutation") {
  const FockBasis basis(4, 2);
  Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(basis.dim());
  for (int k = 0; k < basis.dim(); ++k) amp[k] = k;  // ascending
  const FockBasis reordered = reorder_by_reference(basis, amp);
  for (int k = 0; k < basis.dim(); ++k)
    CHECK(reordered.order()[k] == basis.dim() - 1 - k);
  // Canonical enumeration is untouched.
  for (int k = 0; k < basis.dim(); ++k)
    CHECK(reordered.state(k) == basis.state(k));
}

TEST_CASE("set_order validates permutations") {
  FockBasis basis(4, 2);
  CHECK_THROWS_AS(basis.set_order({0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(basis.set_order({0, 0, 1, 2, 3, 4}), std::invalid_argument);
  std::vector<int> bad(basis.dim());
  for (int k = 0; k < basis.dim(); ++k) bad[k] = k;
  bad[0] = basis.dim();
  CHECK_THROWS_AS(basis.set_order(bad), std::invalid_argument);
}

TEST_CASE("basis tags identify the sector") {
  CHECK(FockBasis(6, 3).tag() == "fock:L=6,N=3");
  CHECK(UnionBasis(4, 2).tag() == "union:L=4,Nmax=2");
}
