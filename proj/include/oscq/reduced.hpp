#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "oscq/lattice.hpp"
#include "oscq/operator.hpp"

namespace oscq::red {

using op::SparseOperator;
using op::VerificationReport;

/// Squared shifting coefficients b_p^2 / hbar^2 as exact integers, for
/// p = -q .. q+2.  Both parity chains obey b_sq(p+2) - b_sq(p) = -4p; the
/// boundaries b_sq(-q) = b_sq(-q+1) = 0 and b_sq(q+1) = b_sq(q+2) = 0 pin
/// the two solutions.
struct BCoefficients {
  int q = 0;
  std::map<int, std::int64_t> b_sq;

  std::int64_t at(int p) const;
};

/// Even-relative chain (p == q mod 2) from the closed form (p+q)(q-p+2),
/// cross-checked against the recurrence; odd-relative chain propagated by
/// the recurrence alone from b_sq(-q+1) = 0, with the emergent b_sq(q+1) = 0
/// verified.  Inconsistencies throw std::logic_error.
BCoefficients b_coefficients(int q);

/// Operators on the 2q+1 dimensional basis indexed by p = -q..q
/// (row index p + q):
///   qpt_plus  e_p = hbar sqrt(b_sq(p))   e_{p-2}
///   qpt_minus e_p = hbar sqrt(b_sq(p+2)) e_{p+2}
///   qpt1 = (qpt_plus + qpt_minus)/2, qpt2 = (qpt_plus - qpt_minus)/(2i)
///   qpt3 e_p = p hbar e_p,           qpt4 = q hbar id.
struct ReducedOperators {
  int q = 0;
  double hbar = 1.0;
  SparseOperator qpt3, qpt_plus, qpt_minus, qpt1, qpt2, qpt4;
};

ReducedOperators build_reduced_ops(int q, double hbar = 1.0);

int reduced_row(int p, int q);

/// Commutator and adjointness identities of the reduced representation.
VerificationReport verify_reduced_su2(int q, double hbar, double tol);

/// p-labels of the two invariant chains: even-relative (dimension q+1) and
/// odd-relative (dimension q).
struct ParitySplit {
  std::vector<int> even_p;
  std::vector<int> odd_p;
};

ParitySplit decompose_parity(int q);

}  // namespace oscq::red
