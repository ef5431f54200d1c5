#include "doctest.h"

#include <stdexcept>

#include "oscq/lattice.hpp"

using namespace oscq::lattice;

TEST_CASE("oscillator basis enumeration") {
  CHECK(oscillator_basis(0) == std::vector<FockIndex>{{0, 0}});
  CHECK(oscillator_basis(1) == std::vector<FockIndex>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(oscillator_basis(2).size() == 6);

  for (int n_max = 0; n_max <= 100; ++n_max) {
    CHECK(static_cast<int>(oscillator_basis(n_max).size()) == (n_max + 1) * (n_max + 2) / 2);
  }

  const auto basis = oscillator_basis(7);
  for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
    CHECK(basis_index(basis[k].m, basis[k].n) == k);
  }
}

TEST_CASE("oscillator Bohr-Sommerfeld set is the quarter lattice") {
  const auto points = bs_set_oscillator(1);
  REQUIRE(points.size() == 3);
  CHECK(points[0] == std::pair{0.0, 0.0});
  CHECK(points[1] == std::pair{0.0, 1.0});
  CHECK(points[2] == std::pair{1.0, 0.0});

  CHECK(bs_set_oscillator(0).size() == 1);
  const auto larger = bs_set_oscillator(3, 0.5);
  CHECK(larger.size() == 10);
  for (const auto& [a1, a2] : larger) CHECK(a1 + a2 <= 3 * 0.5 + 1e-15);
}

TEST_CASE("reduced Bohr-Sommerfeld set") {
  const auto set = bs_set_reduced(3);
  REQUIRE(set.entries.size() == 7);
  int circles = 0;
  int poles = 0;
  for (const auto& entry : set.entries) {
    (entry.kind == OrbitKind::circle ? circles : poles) += 1;
    CHECK(entry.radius_sq + static_cast<std::int64_t>(entry.p) * entry.p == 9);
  }
  CHECK(circles == 5);
  CHECK(poles == 2);

  const auto degenerate = bs_set_reduced(0);
  REQUIRE(degenerate.entries.size() == 1);
  CHECK(degenerate.entries[0].kind == OrbitKind::pole);

  CHECK(bs_set_reduced(2).entries[2].radius == doctest::Approx(2.0));  // p = 0, radius 2*hbar

  for (int q = 0; q <= 100; ++q) {
    for (const auto& entry : bs_set_reduced(q).entries) {
      CHECK(entry.radius_sq + static_cast<std::int64_t>(entry.p) * entry.p ==
            static_cast<std::int64_t>(q) * q);
    }
  }
}

TEST_CASE("parity chains") {
  CHECK(parity_chain(3, 3) == ChainParity::even_rel_q);
  CHECK(parity_chain(2, 3) == ChainParity::odd_rel_q);
  CHECK(parity_chain(0, 0) == ChainParity::even_rel_q);
  CHECK(parity_chain(-3, 3) == ChainParity::even_rel_q);
  CHECK_THROWS_AS(parity_chain(4, 3), std::domain_error);

  for (int q = 0; q <= 100; ++q) {
    int even = 0;
    int odd = 0;
    for (const auto& entry : bs_set_reduced(q).entries) {
      (parity_chain(entry.p, q) == ChainParity::even_rel_q ? even : odd) += 1;
    }
    CHECK(even == q + 1);
    CHECK(odd == q);
  }
}
