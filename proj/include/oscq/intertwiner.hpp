#pragma once

#include <vector>

#include "oscq/lattice.hpp"
#include "oscq/operator.hpp"

namespace oscq::qred {

using op::SparseOperator;
using op::VerificationReport;

/// Basis identification of the oscillator shell H_q (dimension q+1, local
/// index m) with the even-relative chain inside the reduced space H~_q
/// (dimension 2q+1): e_{m,q-m} -> e~_{2m-q,q}.  The matrix is 0/1 and
/// unitary onto its image.
struct Intertwiner {
  int q = 0;
  SparseOperator matrix;  // (2q+1) x (q+1)

  lattice::ReducedIndex forward(const lattice::FockIndex& ix) const;
  lattice::FockIndex inverse(const lattice::ReducedIndex& ix) const;
};

Intertwiner build_intertwiner(int q);

/// The five intertwining identities qpt_j I = I qpi_j (j = 1,2,3),
/// qpt4 I = I qe and qpt3 I = I ql on the shell H_q, plus exact round trips
/// and parity consistency of the image.
VerificationReport verify_intertwining(int q, double hbar, double tol);

struct MultiplicityRow {
  int q = 0;
  int dim_Hq = 0;
  int dim_Hq0 = 0;           // matched through the intertwiner
  int dim_Hq1 = 0;           // present only in the reduced quantization
  int commutant_Hq = 0;
  int commutant_Hqtilde = 0;
};

/// Per-q accounting of matched and surplus components, with commutant
/// dimensions from the Schur criterion.  Cost grows quickly with q through
/// the commutant SVDs; intended for desk-scale n_max.
std::vector<MultiplicityRow> multiplicity_report(int n_max, double hbar = 1.0);

}  // namespace oscq::qred
