#pragma once

#include <cstdint>
#include <vector>

#include "oscq/operator.hpp"
#include "oscq/oscillator.hpp"

namespace oscq::checks {

using op::VerificationReport;

/// Knobs shared by the verification scopes.  tol governs the operator and
/// geometry identity checks; the finite-difference and quadrature checks
/// carry their own method-limited tolerances.
struct Options {
  double hbar = 1.0;
  double tol = 1e-10;
  int n_max = 20;      // oscillator cutoff
  int q_max = 50;      // reduced su(2) sweep
  std::uint64_t seed = 12345;
};

// Secondary sweep limits; cheap enough to run on every invocation.
inline constexpr int kBAlgebraQMax = 200;
inline constexpr int kParityQMax = 100;
inline constexpr int kCommutantQMax = 12;
inline constexpr int kIntertwineQMax = 30;
inline constexpr int kRoundTripQMax = 50;
inline constexpr int kCasimirQMax = 20;
inline constexpr int kMultiplicityQMax = 8;
inline constexpr int kPoissonPoints = 1000;
inline constexpr int kTrialCount = 1000;
inline constexpr double kPoissonTol = 1e-6;       // finite-difference limited
inline constexpr double kQuadratureRelTol = 1e-4; // grid-resolution limited

// Oscillator side.
VerificationReport spectrum_checks(int n_max, double hbar);
VerificationReport su2_u2_checks(const osc::OscillatorOperators& ops, double tol);
VerificationReport block_structure_checks(int n_max, double hbar);
VerificationReport casimir_checks(int n_max, int q_max, double hbar, double tol);
VerificationReport oscillator_commutant_checks(int q_max, double hbar);

/// Sign-flips the k-th stored matrix element among (qpi1, qpi2, qpi3), in
/// entry order; fault injection for the mutation smoke test.
osc::OscillatorOperators mutate_pi_entry(osc::OscillatorOperators ops, int index);
int mutation_count(const osc::OscillatorOperators& ops);

// Reduced side.
VerificationReport b_algebra_checks(int q_max);
VerificationReport reduced_su2_checks(int q_max, double hbar, double tol);
VerificationReport parity_checks(int q_max, double hbar);
VerificationReport reduced_commutant_checks(int q_max, double hbar);
VerificationReport reduced_casimir_checks(int q_max, double hbar, double tol);

// Intertwiner.
VerificationReport intertwiner_checks(int q_max, int roundtrip_q_max, double hbar, double tol);
VerificationReport multiplicity_checks(int q_max, double hbar);

// Classical geometry.
VerificationReport poisson_table_checks(int points, std::uint64_t seed, double tol);
VerificationReport action_angle_checks(int points, std::uint64_t seed, double tol);
VerificationReport invariant_relation_checks(int points, std::uint64_t seed, double tol);
VerificationReport flow_checks(int points, std::uint64_t seed, double tol);
VerificationReport hopf_checks(int points, std::uint64_t seed, double tol);
VerificationReport reduced_geometry_checks(int points, std::uint64_t seed, double tol);
VerificationReport prequantization_checks(const std::vector<int>& qs, int n_theta, int n_phi,
                                          double hbar, double rel_tol);

// su(2) appendix machinery.
VerificationReport su2geo_checks(int trials, std::uint64_t seed, double tol);

// Scope runners used by the CLI.
VerificationReport check_oscillator(const Options& opts, int mutate_index = -1);
VerificationReport check_reduced(const Options& opts);
VerificationReport check_intertwine(const Options& opts);
VerificationReport check_classical(const Options& opts);
VerificationReport check_su2(const Options& opts);
VerificationReport check_all(const Options& opts, int mutate_index = -1);

}  // namespace oscq::checks
