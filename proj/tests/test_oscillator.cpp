#include "doctest.h"

#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

#include "oscq/lattice.hpp"
#include "oscq/oscillator.hpp"

using namespace oscq;
using namespace oscq::osc;
using oscq::lattice::basis_index;
using oscq::op::Complex;

TEST_CASE("action operators") {
  const ActionOperators action = build_action_ops(6, 1.0);
  const int k23 = basis_index(2, 3);
  CHECK(action.qe.at(k23, k23) == Complex(5.0, 0.0));
  CHECK(action.ql.at(k23, k23) == Complex(-1.0, 0.0));

  const int ground = basis_index(0, 0);
  CHECK(action.qa1.at(ground, ground) == Complex(0.0, 0.0));
  CHECK(action.qa2.at(ground, ground) == Complex(0.0, 0.0));
  CHECK(action.qe.at(ground, ground) == Complex(0.0, 0.0));
  CHECK(action.ql.at(ground, ground) == Complex(0.0, 0.0));

  // Joint (E, L) spectrum at n_max = 2.
  const ActionOperators small = build_action_ops(2, 1.0);
  std::set<std::pair<double, double>> joint;
  for (const auto& ix : lattice::oscillator_basis(2)) {
    const int k = basis_index(ix.m, ix.n);
    joint.emplace(small.qe.at(k, k).real(), small.ql.at(k, k).real());
  }
  const std::set<std::pair<double, double>> expected{
      {0.0, 0.0}, {1.0, -1.0}, {1.0, 1.0}, {2.0, -2.0}, {2.0, 0.0}, {2.0, 2.0}};
  CHECK(joint == expected);
}

TEST_CASE("z ladder operators") {
  const LadderOperators ladder = build_z_ops(6, 1.0);
  CHECK(ladder.qz1.at(basis_index(0, 0), basis_index(1, 0)) ==
        Complex(std::sqrt(2.0), 0.0));

  // m = 0 annihilates: the column of e_{0,5} in qz1 is empty.
  for (const auto& [key, value] : ladder.qz1.entries()) {
    CHECK(key.second != basis_index(0, 5));
  }

  CHECK(ladder.qz2bar.at(basis_index(1, 2), basis_index(1, 1)) == Complex(2.0, 0.0));

  // Raising out of the cutoff shell is dropped.
  for (const auto& [key, value] : ladder.qz1bar.entries()) {
    CHECK(lattice::oscillator_basis(6)[key.second].shell() <= 5);
  }
}

TEST_CASE("pi operators: matrix elements") {
  const PiOperators pi = build_pi_ops(5, 1.0);
  CHECK(pi.qpi1.at(basis_index(0, 1), basis_index(1, 0)) == Complex(1.0, 0.0));

  const int k11 = basis_index(1, 1);
  CHECK(pi.qpi3.at(k11, k11) == Complex(0.0, 0.0));
  CHECK(pi.qpi2.at(basis_index(0, 2), k11) == Complex(0.0, -std::sqrt(2.0)));
  CHECK(pi.qpi2.at(basis_index(2, 0), k11) == Complex(0.0, std::sqrt(2.0)));
}

TEST_CASE("su(2)/u(2) identity suite") {
  for (int n_max = 0; n_max <= 20; ++n_max) {
    CHECK(verify_su2_u2(build_oscillator_operators(n_max, 1.0), 1e-12).all_pass());
  }
  CHECK(verify_su2_u2(build_oscillator_operators(7, 0.5), 1e-12).all_pass());

  // [qe, qpi3] vanishes exactly: both diagonal.
  const OscillatorOperators ops = build_oscillator_operators(4, 1.0);
  CHECK(max_residual(commutator(ops.qe, ops.qpi3)) == 0.0);
}

TEST_CASE("block decomposition") {
  const OscillatorOperators ops = build_oscillator_operators(2, 1.0);
  const auto blocks = osc::block_decompose(ops.qpi3, 2);
  CHECK(blocks.at(0).at(0, 0) == Complex(0.0, 0.0));
  CHECK(blocks.at(1).at(0, 0) == Complex(-1.0, 0.0));
  CHECK(blocks.at(1).at(1, 1) == Complex(1.0, 0.0));
  CHECK(blocks.at(2).at(0, 0) == Complex(-2.0, 0.0));
  CHECK(blocks.at(2).at(1, 1) == Complex(0.0, 0.0));
  CHECK(blocks.at(2).at(2, 2) == Complex(2.0, 0.0));

  const auto qe_blocks = osc::block_decompose(ops.qe, 2);
  for (int shell = 0; shell <= 2; ++shell) {
    CHECK(max_residual(qe_blocks.at(shell) -
                       op::SparseOperator::identity(shell + 1).scaled(double(shell))) == 0.0);
  }

  CHECK_THROWS_AS(osc::block_decompose(ops.qz1, 2), std::invalid_argument);
}

TEST_CASE("casimir blocks") {
  const OscillatorOperators ops = build_oscillator_operators(6, 1.0);
  const auto block0 = casimir(ops, 0);
  CHECK(block0.dim() == 1);
  CHECK(max_residual(block0) == 0.0);

  // Shell 1: direct 2x2 arithmetic gives 3 hbar^2 I.
  const auto block1 = casimir(ops, 1);
  CHECK(max_residual(block1 - op::SparseOperator::identity(2).scaled(3.0)) <= 1e-14);

  CHECK_THROWS_AS(casimir(ops, 7), std::invalid_argument);

  // Brute-force dense oracle per shell, with hbar != 1.
  const double hbar = 0.7;
  const OscillatorOperators scaled = build_oscillator_operators(6, hbar);
  for (int q = 0; q <= 6; ++q) {
    Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(q + 1, q + 1);
    Eigen::MatrixXcd b1 = dense, b2 = dense, b3 = dense;
    for (int m = 0; m <= q; ++m) {
      const int n = q - m;
      if (m >= 1) {
        b1(m - 1, m) += hbar * std::sqrt(double(m) * (n + 1));
        b2(m - 1, m) += Complex(0.0, -hbar * std::sqrt(double(m) * (n + 1)));
      }
      if (n >= 1) {
        b1(m + 1, m) += hbar * std::sqrt(double(m + 1) * n);
        b2(m + 1, m) += Complex(0.0, hbar * std::sqrt(double(m + 1) * n));
      }
      b3(m, m) = (2 * m - q) * hbar;
    }
    const Eigen::MatrixXcd oracle = b1 * b1 + b2 * b2 + b3 * b3;
    CHECK((casimir(scaled, q).dense() - oracle).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("joint spectrum equals the Bohr-Sommerfeld set") {
  const int n_max = 9;
  const double hbar = 0.25;
  const ActionOperators action = build_action_ops(n_max, hbar);
  const auto points = lattice::bs_set_oscillator(n_max, hbar);
  const auto basis = lattice::oscillator_basis(n_max);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const int idx = basis_index(basis[k].m, basis[k].n);
    CHECK(action.qa1.at(idx, idx).real() == points[k].first);
    CHECK(action.qa2.at(idx, idx).real() == points[k].second);
  }
}
