#include "oscq/intertwiner.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "oscq/oscillator.hpp"
#include "oscq/reduced.hpp"

namespace oscq::qred {

namespace {
using op::Complex;
}

lattice::ReducedIndex Intertwiner::forward(const lattice::FockIndex& ix) const {
  if (ix.m < 0 || ix.n < 0 || ix.shell() != q) {
    throw std::domain_error("Intertwiner::forward: index not in the shell m + n = q");
  }
  return lattice::ReducedIndex{ix.m - ix.n, q};
}

lattice::FockIndex Intertwiner::inverse(const lattice::ReducedIndex& ix) const {
  if (ix.q != q || std::abs(ix.p) > q || (ix.p - q) % 2 != 0) {
    throw std::domain_error("Intertwiner::inverse: index not in the even-relative chain");
  }
  return lattice::FockIndex{(ix.p + q) / 2, (q - ix.p) / 2};
}

Intertwiner build_intertwiner(int q) {
  if (q < 0) throw std::domain_error("build_intertwiner: q must be >= 0");
  Intertwiner iq;
  iq.q = q;
  iq.matrix = SparseOperator(2 * q + 1, q + 1);
  for (int m = 0; m <= q; ++m) {
    // e_{m,q-m} maps to p = 2m - q, stored at row p + q = 2m.
    iq.matrix.set(2 * m, m, Complex(1.0, 0.0));
  }
  return iq;
}

VerificationReport verify_intertwining(int q, double hbar, double tol) {
  VerificationReport report;
  const Intertwiner iq = build_intertwiner(q);
  const SparseOperator& iw = iq.matrix;

  const osc::OscillatorOperators oscillator = osc::build_oscillator_operators(q, hbar);
  const red::ReducedOperators reduced = red::build_reduced_ops(q, hbar);
  const SparseOperator pi1 = osc::block_decompose(oscillator.qpi1, q).at(q);
  const SparseOperator pi2 = osc::block_decompose(oscillator.qpi2, q).at(q);
  const SparseOperator pi3 = osc::block_decompose(oscillator.qpi3, q).at(q);
  const SparseOperator qe = osc::block_decompose(oscillator.qe, q).at(q);
  const SparseOperator ql = osc::block_decompose(oscillator.ql, q).at(q);

  report.add("intertwine: Qpt1 I = I Qpi1", max_residual(reduced.qpt1 * iw - iw * pi1), tol);
  report.add("intertwine: Qpt2 I = I Qpi2", max_residual(reduced.qpt2 * iw - iw * pi2), tol);
  report.add("intertwine: Qpt3 I = I Qpi3", max_residual(reduced.qpt3 * iw - iw * pi3), tol);
  report.add("intertwine: Qpt4 I = I Qe", max_residual(reduced.qpt4 * iw - iw * qe), tol);
  report.add("intertwine: Qpt3 I = I Ql", max_residual(reduced.qpt3 * iw - iw * ql), tol);

  // Round trips are 0/1 arithmetic and must be exact.
  const SparseOperator inverse_forward = adjoint(iw) * iw;
  double roundtrip = max_residual(inverse_forward - SparseOperator::identity(q + 1));
  SparseOperator even_projector(2 * q + 1);
  for (int m = 0; m <= q; ++m) even_projector.set(2 * m, 2 * m, Complex(1.0, 0.0));
  roundtrip = std::max(roundtrip, max_residual(iw * adjoint(iw) - even_projector));
  report.add("intertwine: forward/inverse round trips exact", roundtrip, 0.0);

  double parity = 0.0;
  for (const auto& [key, value] : iw.entries()) {
    const int p = key.first - q;
    if (lattice::parity_chain(p, q) != lattice::ChainParity::even_rel_q) parity = 1.0;
  }
  report.add("intertwine: image lies in the even-relative chain", parity, 0.0);
  return report;
}

std::vector<MultiplicityRow> multiplicity_report(int n_max, double hbar) {
  if (n_max < 0) throw std::domain_error("multiplicity_report: n_max must be >= 0");
  std::vector<MultiplicityRow> rows;
  const osc::OscillatorOperators oscillator = osc::build_oscillator_operators(n_max, hbar);
  const auto pi1_blocks = osc::block_decompose(oscillator.qpi1, n_max);
  const auto pi2_blocks = osc::block_decompose(oscillator.qpi2, n_max);
  const auto pi3_blocks = osc::block_decompose(oscillator.qpi3, n_max);

  for (int q = 0; q <= n_max; ++q) {
    MultiplicityRow row;
    row.q = q;
    row.dim_Hq = q + 1;
    const Intertwiner iq = build_intertwiner(q);
    row.dim_Hq0 = iq.matrix.cols();  // matched via the intertwiner: q + 1
    row.dim_Hq1 = 2 * q + 1 - row.dim_Hq0;

    const std::array<SparseOperator, 3> shell_ops{pi1_blocks.at(q), pi2_blocks.at(q),
                                                  pi3_blocks.at(q)};
    row.commutant_Hq = op::commutant_dimension(shell_ops);

    const red::ReducedOperators reduced = red::build_reduced_ops(q, hbar);
    const std::array<SparseOperator, 3> reduced_ops{reduced.qpt1, reduced.qpt2, reduced.qpt3};
    row.commutant_Hqtilde = op::commutant_dimension(reduced_ops);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace oscq::qred
