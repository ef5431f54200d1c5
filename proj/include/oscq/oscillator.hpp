#pragma once

#include <map>

#include "oscq/lattice.hpp"
#include "oscq/operator.hpp"

namespace oscq::osc {

using op::SparseOperator;
using op::VerificationReport;

struct ActionOperators {
  SparseOperator qa1, qa2, qe, ql;
};

/// Shifting operators.  The qz*bar raises drop targets beyond the cutoff
/// shell m + n = n_max, so adjointness with qz* holds on the whole truncated
/// space and the composition identities hold on shells N <= n_max - 1.
struct LadderOperators {
  SparseOperator qz1, qz1bar, qz2, qz2bar;
};

struct PiOperators {
  SparseOperator qpi1, qpi2, qpi3, qpi4;
};

struct OscillatorOperators {
  int n_max = 0;
  double hbar = 1.0;
  SparseOperator qa1, qa2, qe, ql;
  SparseOperator qz1, qz1bar, qz2, qz2bar;
  SparseOperator qpi1, qpi2, qpi3, qpi4;
};

/// Diagonal action operators: qa1 e_{m,n} = m hbar e_{m,n}, qa2 e_{m,n} =
/// n hbar e_{m,n}, qe = qa1 + qa2, ql = qa1 - qa2.
ActionOperators build_action_ops(int n_max, double hbar = 1.0);

/// qz1 e_{m,n} = sqrt(2 m hbar) e_{m-1,n} (zero at m = 0) and
/// qz1bar e_{m,n} = sqrt(2 (m+1) hbar) e_{m+1,n}; same in the second index.
LadderOperators build_z_ops(int n_max, double hbar = 1.0);

/// Closed-form matrix elements, not compositions of truncated z-operators:
///   qpi1 e_{m,n} = hbar (sqrt(m(n+1)) e_{m-1,n+1} + sqrt((m+1)n) e_{m+1,n-1})
///   qpi2 e_{m,n} = (hbar/i) (sqrt(m(n+1)) e_{m-1,n+1} - sqrt((m+1)n) e_{m+1,n-1})
///   qpi3 e_{m,n} = (m-n) hbar e_{m,n},   qpi4 = qe.
/// All four preserve the shells N = m + n at any cutoff.
PiOperators build_pi_ops(int n_max, double hbar = 1.0);

OscillatorOperators build_oscillator_operators(int n_max, double hbar = 1.0);

/// The su(2)/u(2) identity suite: three pi commutators, [qe, qpi_j] = 0,
/// self-adjointness of qpi_1..4, and the z-ladder composition cross-check
/// restricted to interior shells.
VerificationReport verify_su2_u2(const OscillatorOperators& ops, double tol);

/// Splits a shell-preserving operator into its blocks on H_N, N = 0..n_max;
/// block N has dimension N+1 and local index m.  Throws std::invalid_argument
/// when an entry couples two different shells.
std::map<int, SparseOperator> block_decompose(const SparseOperator& opr, int n_max);

/// qpi1^2 + qpi2^2 + qpi3^2 restricted to shell N.
SparseOperator casimir(const OscillatorOperators& ops, int shell);

}  // namespace oscq::osc
