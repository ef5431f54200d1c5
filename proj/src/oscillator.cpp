#include "oscq/oscillator.hpp"

#include <cmath>
#include <stdexcept>

namespace oscq::osc {

namespace {

using lattice::FockIndex;
using lattice::basis_index;
using lattice::basis_size;
using lattice::oscillator_basis;
using op::Complex;

constexpr Complex kMinusI{0.0, -1.0};  // (hbar/i) = -i hbar

}  // namespace

ActionOperators build_action_ops(int n_max, double hbar) {
  const auto basis = oscillator_basis(n_max);
  const int dim = basis_size(n_max);
  ActionOperators ops{SparseOperator(dim), SparseOperator(dim), SparseOperator(dim),
                      SparseOperator(dim)};
  for (const FockIndex& ix : basis) {
    const int k = basis_index(ix.m, ix.n);
    ops.qa1.set(k, k, Complex(ix.m * hbar, 0.0));
    ops.qa2.set(k, k, Complex(ix.n * hbar, 0.0));
    ops.qe.set(k, k, Complex((ix.m + ix.n) * hbar, 0.0));
    ops.ql.set(k, k, Complex((ix.m - ix.n) * hbar, 0.0));
  }
  return ops;
}

LadderOperators build_z_ops(int n_max, double hbar) {
  const auto basis = oscillator_basis(n_max);
  const int dim = basis_size(n_max);
  LadderOperators ops{SparseOperator(dim), SparseOperator(dim), SparseOperator(dim),
                      SparseOperator(dim)};
  for (const FockIndex& ix : basis) {
    const int k = basis_index(ix.m, ix.n);
    if (ix.m >= 1) {
      ops.qz1.set(basis_index(ix.m - 1, ix.n), k, Complex(std::sqrt(2.0 * ix.m * hbar), 0.0));
    }
    if (ix.n >= 1) {
      ops.qz2.set(basis_index(ix.m, ix.n - 1), k, Complex(std::sqrt(2.0 * ix.n * hbar), 0.0));
    }
    // Raised targets beyond the cutoff shell are dropped (boundary truncation).
    if (ix.shell() + 1 <= n_max) {
      ops.qz1bar.set(basis_index(ix.m + 1, ix.n), k,
                     Complex(std::sqrt(2.0 * (ix.m + 1) * hbar), 0.0));
      ops.qz2bar.set(basis_index(ix.m, ix.n + 1), k,
                     Complex(std::sqrt(2.0 * (ix.n + 1) * hbar), 0.0));
    }
  }
  return ops;
}

PiOperators build_pi_ops(int n_max, double hbar) {
  const auto basis = oscillator_basis(n_max);
  const int dim = basis_size(n_max);
  PiOperators ops{SparseOperator(dim), SparseOperator(dim), SparseOperator(dim),
                  SparseOperator(dim)};
  for (const FockIndex& ix : basis) {
    const int k = basis_index(ix.m, ix.n);
    const int m = ix.m;
    const int n = ix.n;
    if (m >= 1) {
      const double amp = hbar * std::sqrt(static_cast<double>(m) * (n + 1));
      const int target = basis_index(m - 1, n + 1);
      ops.qpi1.add(target, k, Complex(amp, 0.0));
      ops.qpi2.add(target, k, kMinusI * amp);
    }
    if (n >= 1) {
      const double amp = hbar * std::sqrt(static_cast<double>(m + 1) * n);
      const int target = basis_index(m + 1, n - 1);
      ops.qpi1.add(target, k, Complex(amp, 0.0));
      ops.qpi2.add(target, k, -kMinusI * amp);
    }
    ops.qpi3.set(k, k, Complex((m - n) * hbar, 0.0));
    ops.qpi4.set(k, k, Complex((m + n) * hbar, 0.0));
  }
  return ops;
}

OscillatorOperators build_oscillator_operators(int n_max, double hbar) {
  OscillatorOperators all;
  all.n_max = n_max;
  all.hbar = hbar;
  ActionOperators action = build_action_ops(n_max, hbar);
  all.qa1 = std::move(action.qa1);
  all.qa2 = std::move(action.qa2);
  all.qe = std::move(action.qe);
  all.ql = std::move(action.ql);
  LadderOperators ladder = build_z_ops(n_max, hbar);
  all.qz1 = std::move(ladder.qz1);
  all.qz1bar = std::move(ladder.qz1bar);
  all.qz2 = std::move(ladder.qz2);
  all.qz2bar = std::move(ladder.qz2bar);
  PiOperators pi = build_pi_ops(n_max, hbar);
  all.qpi1 = std::move(pi.qpi1);
  all.qpi2 = std::move(pi.qpi2);
  all.qpi3 = std::move(pi.qpi3);
  all.qpi4 = std::move(pi.qpi4);
  return all;
}

VerificationReport verify_su2_u2(const OscillatorOperators& ops, double tol) {
  VerificationReport report;
  const Complex two_over_i = 2.0 * kMinusI;  // 2 (hbar/i) / hbar

  const double hbar = ops.hbar;
  report.add("su2: [Qpi1,Qpi2] = 2(hbar/i) Qpi3",
             max_residual(commutator(ops.qpi1, ops.qpi2) - (two_over_i * hbar) * ops.qpi3), tol);
  report.add("su2: [Qpi1,Qpi3] = -2(hbar/i) Qpi2",
             max_residual(commutator(ops.qpi1, ops.qpi3) + (two_over_i * hbar) * ops.qpi2), tol);
  report.add("su2: [Qpi2,Qpi3] = 2(hbar/i) Qpi1",
             max_residual(commutator(ops.qpi2, ops.qpi3) - (two_over_i * hbar) * ops.qpi1), tol);

  report.add("u2: [Qe,Qpi1] = 0", max_residual(commutator(ops.qe, ops.qpi1)), tol);
  report.add("u2: [Qe,Qpi2] = 0", max_residual(commutator(ops.qe, ops.qpi2)), tol);
  report.add("u2: [Qe,Qpi3] = 0", max_residual(commutator(ops.qe, ops.qpi3)), tol);

  report.add("adjoint: Qpi1 self-adjoint", max_residual(adjoint(ops.qpi1) - ops.qpi1), tol);
  report.add("adjoint: Qpi2 self-adjoint", max_residual(adjoint(ops.qpi2) - ops.qpi2), tol);
  report.add("adjoint: Qpi3 self-adjoint", max_residual(adjoint(ops.qpi3) - ops.qpi3), tol);
  report.add("adjoint: Qpi4 self-adjoint", max_residual(adjoint(ops.qpi4) - ops.qpi4), tol);

  // Composition cross-checks are only valid on shells whose raised
  // intermediates stay inside the cutoff.
  const auto basis = lattice::oscillator_basis(ops.n_max);
  const auto interior_residual = [&](const SparseOperator& difference) {
    double worst = 0.0;
    for (const auto& [key, value] : difference.entries()) {
      if (basis[static_cast<std::size_t>(key.second)].shell() <= ops.n_max - 1) {
        worst = std::max(worst, std::abs(value));
      }
    }
    return worst;
  };
  report.add("ladder: Qpi1 = (Qz1 Qz2bar + Qz1bar Qz2)/2 on interior shells",
             interior_residual(ops.qpi1 - Complex(0.5, 0.0) * (ops.qz1 * ops.qz2bar +
                                                               ops.qz1bar * ops.qz2)),
             tol);
  report.add("ladder: Qpi2 = (Qz1 Qz2bar - Qz1bar Qz2)/(2i) on interior shells",
             interior_residual(ops.qpi2 - Complex(0.0, -0.5) * (ops.qz1 * ops.qz2bar -
                                                                ops.qz1bar * ops.qz2)),
             tol);
  report.add("ladder: Qz1bar = adjoint(Qz1), Qz2bar = adjoint(Qz2)",
             std::max(max_residual(adjoint(ops.qz1) - ops.qz1bar),
                      max_residual(adjoint(ops.qz2) - ops.qz2bar)),
             tol);
  return report;
}

std::map<int, SparseOperator> block_decompose(const SparseOperator& opr, int n_max) {
  const auto basis = lattice::oscillator_basis(n_max);
  if (opr.dim() != lattice::basis_size(n_max)) {
    throw std::invalid_argument("block_decompose: operator dimension does not match the cutoff");
  }
  std::map<int, SparseOperator> blocks;
  for (int shell = 0; shell <= n_max; ++shell) blocks.emplace(shell, SparseOperator(shell + 1));
  for (const auto& [key, value] : opr.entries()) {
    const FockIndex row = basis[static_cast<std::size_t>(key.first)];
    const FockIndex col = basis[static_cast<std::size_t>(key.second)];
    if (row.shell() != col.shell()) {
      throw std::invalid_argument("block_decompose: operator couples different shells");
    }
    blocks.at(row.shell()).set(row.m, col.m, value);
  }
  return blocks;
}

SparseOperator casimir(const OscillatorOperators& ops, int shell) {
  if (shell < 0 || shell > ops.n_max) {
    throw std::invalid_argument("casimir: shell outside the truncated basis");
  }
  const SparseOperator total =
      ops.qpi1 * ops.qpi1 + ops.qpi2 * ops.qpi2 + ops.qpi3 * ops.qpi3;
  return block_decompose(total, ops.n_max).at(shell);
}

}  // namespace oscq::osc
