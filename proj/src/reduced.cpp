#include "oscq/reduced.hpp"

#include <cmath>
#include <stdexcept>

namespace oscq::red {

namespace {
using op::Complex;
}

std::int64_t BCoefficients::at(int p) const {
  auto it = b_sq.find(p);
  if (it == b_sq.end()) throw std::out_of_range("BCoefficients::at: p outside -q..q+2");
  return it->second;
}

BCoefficients b_coefficients(int q) {
  if (q < 0) throw std::domain_error("b_coefficients: q must be >= 0");
  BCoefficients coeffs;
  coeffs.q = q;

  // Even-relative chain: closed form, checked against the recurrence.
  std::int64_t propagated = 0;
  for (int p = -q; p <= q + 2; p += 2) {
    const std::int64_t closed =
        static_cast<std::int64_t>(p + q) * static_cast<std::int64_t>(q - p + 2);
    if (p > -q) propagated -= 4LL * (p - 2);
    if (closed != propagated) {
      throw std::logic_error("b_coefficients: closed form disagrees with the recurrence");
    }
    if (closed < 0) throw std::logic_error("b_coefficients: negative b_sq on the even chain");
    coeffs.b_sq[p] = closed;
  }

  // Odd-relative chain: recurrence only, from the boundary b_sq(-q+1) = 0.
  std::int64_t value = 0;
  for (int p = -q + 1; p <= q + 1; p += 2) {
    if (p > -q + 1) value -= 4LL * (p - 2);
    if (value < 0) throw std::logic_error("b_coefficients: negative b_sq on the odd chain");
    coeffs.b_sq[p] = value;
  }
  if (coeffs.b_sq.at(q + 1) != 0) {
    throw std::logic_error("b_coefficients: odd chain does not terminate with b_sq(q+1) = 0");
  }
  return coeffs;
}

int reduced_row(int p, int q) {
  if (p < -q || p > q) throw std::domain_error("reduced_row: need |p| <= q");
  return p + q;
}

ReducedOperators build_reduced_ops(int q, double hbar) {
  const BCoefficients coeffs = b_coefficients(q);
  const int dim = 2 * q + 1;
  ReducedOperators ops;
  ops.q = q;
  ops.hbar = hbar;
  ops.qpt3 = SparseOperator(dim);
  ops.qpt_plus = SparseOperator(dim);
  ops.qpt_minus = SparseOperator(dim);
  ops.qpt4 = SparseOperator(dim);

  for (int p = -q; p <= q; ++p) {
    const int col = reduced_row(p, q);
    ops.qpt3.set(col, col, Complex(p * hbar, 0.0));
    ops.qpt4.set(col, col, Complex(q * hbar, 0.0));
    if (p - 2 >= -q) {
      const double b = hbar * std::sqrt(static_cast<double>(coeffs.at(p)));
      ops.qpt_plus.set(reduced_row(p - 2, q), col, Complex(b, 0.0));
    }
    if (p + 2 <= q) {
      const double b = hbar * std::sqrt(static_cast<double>(coeffs.at(p + 2)));
      ops.qpt_minus.set(reduced_row(p + 2, q), col, Complex(b, 0.0));
    }
  }
  ops.qpt1 = Complex(0.5, 0.0) * (ops.qpt_plus + ops.qpt_minus);
  ops.qpt2 = Complex(0.0, -0.5) * (ops.qpt_plus - ops.qpt_minus);  // 1/(2i) = -i/2
  return ops;
}

VerificationReport verify_reduced_su2(int q, double hbar, double tol) {
  const ReducedOperators ops = build_reduced_ops(q, hbar);
  VerificationReport report;
  const Complex two_i_hbar(0.0, 2.0 * hbar);

  report.add("reduced su2: [Qpt+,Qpt-] = -4 hbar Qpt3",
             max_residual(commutator(ops.qpt_plus, ops.qpt_minus) + (4.0 * hbar) * ops.qpt3), tol);
  report.add("reduced su2: [Qpt1,Qpt2] = -2 i hbar Qpt3",
             max_residual(commutator(ops.qpt1, ops.qpt2) + two_i_hbar * ops.qpt3), tol);
  report.add("reduced su2: [Qpt2,Qpt3] = -2 i hbar Qpt1",
             max_residual(commutator(ops.qpt2, ops.qpt3) + two_i_hbar * ops.qpt1), tol);
  report.add("reduced su2: [Qpt1,Qpt3] = +2 i hbar Qpt2",
             max_residual(commutator(ops.qpt1, ops.qpt3) - two_i_hbar * ops.qpt2), tol);
  report.add("reduced adjoint: Qpt1 self-adjoint", max_residual(adjoint(ops.qpt1) - ops.qpt1), tol);
  report.add("reduced adjoint: Qpt2 self-adjoint", max_residual(adjoint(ops.qpt2) - ops.qpt2), tol);
  report.add("reduced adjoint: Qpt3 self-adjoint", max_residual(adjoint(ops.qpt3) - ops.qpt3), tol);
  report.add("reduced adjoint: adjoint(Qpt+) = Qpt-",
             max_residual(adjoint(ops.qpt_plus) - ops.qpt_minus), tol);
  return report;
}

ParitySplit decompose_parity(int q) {
  if (q < 0) throw std::domain_error("decompose_parity: q must be >= 0");
  ParitySplit split;
  for (int p = -q; p <= q; ++p) {
    if (lattice::parity_chain(p, q) == lattice::ChainParity::even_rel_q) {
      split.even_p.push_back(p);
    } else {
      split.odd_p.push_back(p);
    }
  }
  return split;
}

}  // namespace oscq::red
