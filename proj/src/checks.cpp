#include "oscq/checks.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "oscq/classical.hpp"
#include "oscq/intertwiner.hpp"
#include "oscq/lattice.hpp"
#include "oscq/reduced.hpp"
#include "oscq/su2geo.hpp"

namespace oscq::checks {

namespace {

using op::Complex;
using op::SparseOperator;

constexpr double kPi = std::numbers::pi;

/// Seeded generator with platform-independent draws (std distributions are
/// implementation-defined sequences).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  double gauss() {
    double u1 = uniform(0.0, 1.0);
    while (u1 <= 1e-300) u1 = uniform(0.0, 1.0);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * uniform(0.0, 1.0));
  }

  Eigen::Vector3d gauss3() { return {gauss(), gauss(), gauss()}; }

  Eigen::Vector3d unit3() {
    Eigen::Vector3d v = gauss3();
    while (v.norm() < 1e-6) v = gauss3();
    return v.normalized();
  }

 private:
  std::mt19937_64 engine_;
};

std::string sweep(const char* label, int bound) {
  return std::string(" (") + label + "<=" + std::to_string(bound) + ")";
}

classical::XiEtaState random_xieta(Rng& rng) {
  classical::XiEtaState s;
  s.xi = {rng.gauss(), rng.gauss()};
  s.eta = {rng.gauss(), rng.gauss()};
  return s;
}

classical::ClassicalState random_xy(Rng& rng) {
  classical::ClassicalState s;
  s.x = {rng.gauss(), rng.gauss()};
  s.y = {rng.gauss(), rng.gauss()};
  return s;
}

Eigen::Vector4d as_vec4(const classical::ClassicalState& s) {
  return {s.x[0], s.x[1], s.y[0], s.y[1]};
}

// Dense shell matrices straight from the closed-form elements; the oracle
// path for the casimir checks, independent of the sparse compose machinery.
std::array<Eigen::MatrixXcd, 3> dense_shell_pi(int q, double hbar) {
  const int dim = q + 1;
  Eigen::MatrixXcd b1 = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd b2 = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd b3 = Eigen::MatrixXcd::Zero(dim, dim);
  for (int m = 0; m <= q; ++m) {
    const int n = q - m;
    if (m >= 1) {
      const double amp = hbar * std::sqrt(static_cast<double>(m) * (n + 1));
      b1(m - 1, m) += amp;
      b2(m - 1, m) += Complex(0.0, -amp);
    }
    if (n >= 1) {
      const double amp = hbar * std::sqrt(static_cast<double>(m + 1) * n);
      b1(m + 1, m) += amp;
      b2(m + 1, m) += Complex(0.0, amp);
    }
    b3(m, m) = (2 * m - q) * hbar;
  }
  return {b1, b2, b3};
}

std::array<Eigen::MatrixXcd, 3> dense_reduced_pi(int q, double hbar) {
  const red::BCoefficients coeffs = red::b_coefficients(q);
  const int dim = 2 * q + 1;
  Eigen::MatrixXcd p1 = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd p2 = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd p3 = Eigen::MatrixXcd::Zero(dim, dim);
  for (int p = -q; p <= q; ++p) {
    const int col = p + q;
    p3(col, col) = p * hbar;
    if (p - 2 >= -q) {
      const double b = hbar * std::sqrt(static_cast<double>(coeffs.at(p)));
      p1(col - 2, col) += 0.5 * b;
      p2(col - 2, col) += Complex(0.0, -0.5) * b;
    }
    if (p + 2 <= q) {
      const double b = hbar * std::sqrt(static_cast<double>(coeffs.at(p + 2)));
      p1(col + 2, col) += 0.5 * b;
      p2(col + 2, col) += Complex(0.0, 0.5) * b;
    }
  }
  return {p1, p2, p3};
}

double scalar_identity_residual(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0) return 0.0;
  return (m - m(0, 0) * Eigen::MatrixXcd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

}  // namespace

VerificationReport spectrum_checks(int n_max, double hbar) {
  VerificationReport report;
  const osc::ActionOperators action = osc::build_action_ops(n_max, hbar);
  // Integer-exact comparisons are made on hbar-stripped values.
  const auto stripped = [hbar](Complex value) { return value.real() / hbar; };
  const auto mismatch = [&](Complex value, long long expected) {
    const double s = stripped(value);
    return std::llround(s) != expected || std::abs(s - std::llround(s)) > 1e-9 ||
           std::abs(value.imag()) != 0.0;
  };
  int lattice_mismatches = 0;
  int linear_mismatches = 0;
  for (const auto& ix : lattice::oscillator_basis(n_max)) {
    const int k = lattice::basis_index(ix.m, ix.n);
    if (mismatch(action.qa1.at(k, k), ix.m)) ++lattice_mismatches;
    if (mismatch(action.qa2.at(k, k), ix.n)) ++lattice_mismatches;
    if (mismatch(action.qe.at(k, k), ix.m + ix.n)) ++lattice_mismatches;
    if (mismatch(action.ql.at(k, k), ix.m - ix.n)) ++lattice_mismatches;
    if (std::llround(stripped(action.qe.at(k, k))) !=
        std::llround(stripped(action.qa1.at(k, k))) +
            std::llround(stripped(action.qa2.at(k, k)))) {
      ++linear_mismatches;
    }
    if (std::llround(stripped(action.ql.at(k, k))) !=
        std::llround(stripped(action.qa1.at(k, k))) -
            std::llround(stripped(action.qa2.at(k, k)))) {
      ++linear_mismatches;
    }
  }
  report.add("spectrum: (A1,A2,E,L) diagonals equal the quarter-lattice values" +
                 sweep("N", n_max),
             static_cast<double>(lattice_mismatches), 0.0);
  report.add("spectrum: Qe = Qa1 + Qa2 and Ql = Qa1 - Qa2 (hbar-stripped)",
             static_cast<double>(linear_mismatches), 0.0);
  return report;
}

VerificationReport su2_u2_checks(const osc::OscillatorOperators& ops, double tol) {
  return osc::verify_su2_u2(ops, tol);
}

VerificationReport block_structure_checks(int n_max, double hbar) {
  VerificationReport report;
  const osc::OscillatorOperators ops = osc::build_oscillator_operators(n_max, hbar);
  double residual = 0.0;
  for (const SparseOperator* o : {&ops.qpi1, &ops.qpi2, &ops.qpi3, &ops.qpi4, &ops.qe, &ops.ql}) {
    const auto blocks = osc::block_decompose(*o, n_max);
    SparseOperator rebuilt(o->dim());
    const auto basis = lattice::oscillator_basis(n_max);
    for (const auto& [shell, block] : blocks) {
      for (const auto& [key, value] : block.entries()) {
        rebuilt.set(lattice::basis_index(key.first, shell - key.first),
                    lattice::basis_index(key.second, shell - key.second), value);
      }
    }
    residual = std::max(residual, max_residual(rebuilt - *o));
  }
  report.add("blocks: shell decomposition reassembles exactly", residual, 0.0);

  // An empty qz1 (cutoff 0) preserves shells vacuously and decomposes fine.
  bool as_expected = true;
  if (ops.qz1.nnz() > 0) {
    as_expected = false;
    try {
      osc::block_decompose(ops.qz1, n_max);
    } catch (const std::invalid_argument&) {
      as_expected = true;
    }
  }
  report.add("blocks: shell-shifting Qz1 is rejected structurally", as_expected ? 0.0 : 1.0, 0.0);
  report.add("structure: Qpi3 = Ql and Qpi4 = Qe",
             std::max(max_residual(ops.qpi3 - ops.ql), max_residual(ops.qpi4 - ops.qe)), 0.0);
  return report;
}

VerificationReport casimir_checks(int n_max, int q_max, double hbar, double tol) {
  VerificationReport report;
  const osc::OscillatorOperators ops = osc::build_oscillator_operators(n_max, hbar);
  double vs_oracle = 0.0;
  double vs_identity = 0.0;
  for (int q = 0; q <= q_max; ++q) {
    const auto [b1, b2, b3] = dense_shell_pi(q, hbar);
    const Eigen::MatrixXcd oracle = b1 * b1 + b2 * b2 + b3 * b3;
    const Eigen::MatrixXcd impl = osc::casimir(ops, q).dense();
    vs_oracle = std::max(vs_oracle, (impl - oracle).cwiseAbs().maxCoeff());
    vs_identity = std::max(vs_identity, scalar_identity_residual(oracle));
  }
  report.add("casimir: shell blocks match the dense oracle" + sweep("q", q_max), vs_oracle, tol);
  report.add("casimir: oracle blocks are scalar multiples of the identity" + sweep("q", q_max),
             vs_identity, tol);
  return report;
}

VerificationReport oscillator_commutant_checks(int q_max, double hbar) {
  VerificationReport report;
  const osc::OscillatorOperators ops = osc::build_oscillator_operators(q_max, hbar);
  const auto pi1 = osc::block_decompose(ops.qpi1, q_max);
  const auto pi2 = osc::block_decompose(ops.qpi2, q_max);
  const auto pi3 = osc::block_decompose(ops.qpi3, q_max);
  int mismatches = 0;
  for (int q = 0; q <= q_max; ++q) {
    const std::array<SparseOperator, 3> shell_ops{pi1.at(q), pi2.at(q), pi3.at(q)};
    if (op::commutant_dimension(shell_ops) != 1) ++mismatches;
  }
  report.add("commutant: every shell representation is irreducible" + sweep("q", q_max),
             static_cast<double>(mismatches), 0.0);
  return report;
}

int mutation_count(const osc::OscillatorOperators& ops) {
  return static_cast<int>(ops.qpi1.nnz() + ops.qpi2.nnz() + ops.qpi3.nnz());
}

osc::OscillatorOperators mutate_pi_entry(osc::OscillatorOperators ops, int index) {
  if (index < 0 || index >= mutation_count(ops)) {
    throw std::out_of_range("mutate_pi_entry: index outside the stored pi entries");
  }
  for (SparseOperator* target : {&ops.qpi1, &ops.qpi2, &ops.qpi3}) {
    if (index < static_cast<int>(target->nnz())) {
      auto it = target->entries().begin();
      std::advance(it, index);
      target->set(it->first.first, it->first.second, -it->second);
      return ops;
    }
    index -= static_cast<int>(target->nnz());
  }
  throw std::logic_error("mutate_pi_entry: unreachable");
}

VerificationReport b_algebra_checks(int q_max) {
  VerificationReport report;
  int violations = 0;
  int palindrome_violations = 0;
  for (int q = 0; q <= q_max; ++q) {
    red::BCoefficients coeffs;
    try {
      coeffs = red::b_coefficients(q);
    } catch (const std::logic_error&) {
      ++violations;
      continue;
    }
    if (coeffs.at(-q) != 0 || coeffs.at(q + 2) != 0 || coeffs.at(q + 1) != 0) ++violations;
    if (q >= 1 && coeffs.at(-q + 1) != 0) ++violations;
    for (const auto& [p, value] : coeffs.b_sq) {
      if (value < 0) ++violations;
      const auto next = coeffs.b_sq.find(p + 2);
      if (next != coeffs.b_sq.end() && next->second - value != -4LL * p) ++violations;
      const std::int64_t closed =
          static_cast<std::int64_t>(p + q) * static_cast<std::int64_t>(q - p + 2);
      if ((p - q) % 2 == 0 && value != closed) ++violations;
    }
    if (q <= 50) {
      for (int p = -q; p <= q + 2; p += 2) {
        if (coeffs.at(p) != coeffs.at(2 - p)) ++palindrome_violations;
      }
    }
  }
  report.add("b: closed form, recurrence, and boundaries agree integer-exactly" +
                 sweep("q", q_max),
             static_cast<double>(violations), 0.0);
  report.add("b: even chain is palindromic about p = 1" + sweep("q", 50),
             static_cast<double>(palindrome_violations), 0.0);
  return report;
}

VerificationReport reduced_su2_checks(int q_max, double hbar, double tol) {
  std::vector<double> worst;
  std::vector<std::string> names;
  for (int q = 0; q <= q_max; ++q) {
    const op::VerificationReport per_q = red::verify_reduced_su2(q, hbar, tol);
    if (names.empty()) {
      for (const auto& check : per_q.checks()) {
        names.push_back(check.name + sweep("q", q_max));
        worst.push_back(0.0);
      }
    }
    for (std::size_t i = 0; i < per_q.checks().size(); ++i) {
      worst[i] = std::max(worst[i], per_q.checks()[i].max_abs_residual);
    }
  }
  VerificationReport report;
  for (std::size_t i = 0; i < names.size(); ++i) report.add(names[i], worst[i], tol);
  return report;
}

VerificationReport parity_checks(int q_max, double hbar) {
  VerificationReport report;
  int dim_mismatches = 0;
  int parity_mismatches = 0;
  double spectrum_residual = 0.0;
  for (int q = 0; q <= q_max; ++q) {
    const red::ParitySplit split = red::decompose_parity(q);
    if (static_cast<int>(split.even_p.size()) != q + 1 ||
        static_cast<int>(split.odd_p.size()) != q) {
      ++dim_mismatches;
    }
    const red::ReducedOperators ops = red::build_reduced_ops(q, hbar);
    for (const SparseOperator* o :
         {&ops.qpt1, &ops.qpt2, &ops.qpt3, &ops.qpt4, &ops.qpt_plus, &ops.qpt_minus}) {
      for (const auto& [key, value] : o->entries()) {
        if ((key.first - key.second) % 2 != 0) ++parity_mismatches;
      }
    }
    const auto bs = lattice::bs_set_reduced(q, hbar);
    for (const auto& entry : bs.entries) {
      const int row = red::reduced_row(entry.p, q);
      spectrum_residual = std::max(
          spectrum_residual, std::abs(ops.qpt3.at(row, row) - Complex(entry.p * hbar, 0.0)));
    }
  }
  report.add("parity: chain dimensions are q+1 and q" + sweep("q", q_max),
             static_cast<double>(dim_mismatches), 0.0);
  report.add("parity: reduced operators preserve the chain parity" + sweep("q", q_max),
             static_cast<double>(parity_mismatches), 0.0);
  report.add("reduced: Qpt3 spectrum equals the Bohr-Sommerfeld labels" + sweep("q", q_max),
             spectrum_residual, 0.0);
  return report;
}

VerificationReport reduced_commutant_checks(int q_max, double hbar) {
  VerificationReport report;
  int mismatches = 0;
  for (int q = 0; q <= q_max; ++q) {
    const red::ReducedOperators ops = red::build_reduced_ops(q, hbar);
    const std::array<SparseOperator, 3> gens{ops.qpt1, ops.qpt2, ops.qpt3};
    // The q = 0 orbit carries a single one-dimensional component.
    const int expected = (q == 0) ? 1 : 2;
    if (op::commutant_dimension(gens) != expected) ++mismatches;
  }
  report.add("commutant: reduced representation splits into two irreducibles" + sweep("q", q_max),
             static_cast<double>(mismatches), 0.0);
  return report;
}

VerificationReport reduced_casimir_checks(int q_max, double hbar, double tol) {
  VerificationReport report;
  double vs_oracle = 0.0;
  double vs_identity = 0.0;
  for (int q = 0; q <= q_max; ++q) {
    const auto [p1, p2, p3] = dense_reduced_pi(q, hbar);
    const Eigen::MatrixXcd oracle = p1 * p1 + p2 * p2 + p3 * p3;
    const red::ReducedOperators ops = red::build_reduced_ops(q, hbar);
    const Eigen::MatrixXcd impl =
        (ops.qpt1 * ops.qpt1 + ops.qpt2 * ops.qpt2 + ops.qpt3 * ops.qpt3).dense();
    vs_oracle = std::max(vs_oracle, (impl - oracle).cwiseAbs().maxCoeff());

    const red::ParitySplit split = red::decompose_parity(q);
    for (const std::vector<int>* chain : {&split.even_p, &split.odd_p}) {
      const int n = static_cast<int>(chain->size());
      Eigen::MatrixXcd sub(n, n);
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          sub(r, c) = oracle(red::reduced_row((*chain)[r], q), red::reduced_row((*chain)[c], q));
        }
      }
      vs_identity = std::max(vs_identity, scalar_identity_residual(sub));
    }
  }
  report.add("reduced casimir: matches the dense oracle" + sweep("q", q_max), vs_oracle, tol);
  report.add("reduced casimir: scalar on each parity chain" + sweep("q", q_max), vs_identity, tol);
  return report;
}

VerificationReport intertwiner_checks(int q_max, int roundtrip_q_max, double hbar, double tol) {
  std::vector<double> worst(5, 0.0);
  std::vector<std::string> names;
  for (int q = 0; q <= q_max; ++q) {
    const op::VerificationReport per_q = qred::verify_intertwining(q, hbar, tol);
    for (std::size_t i = 0; i < 5; ++i) {
      if (names.size() < 5) names.push_back(per_q.checks()[i].name + sweep("q", q_max));
      worst[i] = std::max(worst[i], per_q.checks()[i].max_abs_residual);
    }
  }
  VerificationReport report;
  for (std::size_t i = 0; i < 5; ++i) report.add(names[i], worst[i], tol);

  double roundtrip = 0.0;
  double parity = 0.0;
  for (int q = 0; q <= roundtrip_q_max; ++q) {
    const qred::Intertwiner iq = qred::build_intertwiner(q);
    roundtrip = std::max(roundtrip, max_residual(adjoint(iq.matrix) * iq.matrix -
                                                 SparseOperator::identity(q + 1)));
    for (const auto& [key, value] : iq.matrix.entries()) {
      if (lattice::parity_chain(key.first - q, q) != lattice::ChainParity::even_rel_q) {
        parity += 1.0;
      }
    }
    for (int m = 0; m <= q; ++m) {
      const lattice::FockIndex fock{m, q - m};
      const lattice::ReducedIndex image = iq.forward(fock);
      if (!(iq.inverse(image) == fock)) roundtrip = std::max(roundtrip, 1.0);
    }
  }
  report.add("intertwine: round trips are exact" + sweep("q", roundtrip_q_max), roundtrip, 0.0);
  report.add("intertwine: image lies in the even-relative chain" + sweep("q", roundtrip_q_max),
             parity, 0.0);
  return report;
}

VerificationReport multiplicity_checks(int q_max, double hbar) {
  VerificationReport report;
  int mismatches = 0;
  for (const qred::MultiplicityRow& row : qred::multiplicity_report(q_max, hbar)) {
    if (row.dim_Hq != row.q + 1 || row.dim_Hq0 != row.q + 1 || row.dim_Hq1 != row.q) ++mismatches;
    if (row.commutant_Hq != 1) ++mismatches;
    if (row.commutant_Hqtilde != ((row.q == 0) ? 1 : 2)) ++mismatches;
  }
  report.add("multiplicity: dims and commutants match the expected table" + sweep("q", q_max),
             static_cast<double>(mismatches), 0.0);
  return report;
}

VerificationReport poisson_table_checks(int points, std::uint64_t seed, double tol) {
  VerificationReport report;
  Rng rng(seed);
  double residual = 0.0;
  for (int trial = 0; trial < points; ++trial) {
    const classical::XiEtaState state = random_xieta(rng);
    const classical::InvariantPoint inv = classical::invariants_pi(state);
    for (int i = 1; i <= 4; ++i) {
      for (int j = 1; j <= 4; ++j) {
        const double closed = classical::poisson_bracket_pi(i, j, inv);
        const double fd = classical::poisson_bracket_fd(i, j, state);
        residual = std::max(residual, std::abs(closed - fd));
      }
    }
  }
  report.add("poisson: structure table matches the finite-difference oracle (16 pairs)", residual,
             tol);
  return report;
}

VerificationReport action_angle_checks(int points, std::uint64_t seed, double tol) {
  VerificationReport report;
  Rng rng(seed);
  double roundtrip = 0.0;
  for (int trial = 0; trial < points; ++trial) {
    classical::ActionAngle aa{rng.uniform(0.0, 5.0), rng.uniform(0.0, 5.0),
                              rng.uniform(0.0, 2.0 * kPi), rng.uniform(0.0, 2.0 * kPi)};
    const auto [e, ell] = classical::energy_momentum(classical::from_action_angle(aa));
    roundtrip = std::max(roundtrip, std::abs(e - (aa.a1 + aa.a2)));
    roundtrip = std::max(roundtrip, std::abs(ell - (aa.a1 - aa.a2)));
  }
  report.add("action-angle: energy-momentum round trip (A1+A2, A1-A2)", roundtrip, tol);

  // Pullback of omega through the chart equals dA ^ dtheta; finite-difference
  // Jacobian at interior points.
  Eigen::Matrix4d omega_xy = Eigen::Matrix4d::Zero();
  omega_xy(2, 0) = omega_xy(3, 1) = 1.0;
  omega_xy(0, 2) = omega_xy(1, 3) = -1.0;
  Eigen::Matrix4d omega_aa = Eigen::Matrix4d::Zero();
  omega_aa(0, 2) = omega_aa(1, 3) = 1.0;
  omega_aa(2, 0) = omega_aa(3, 1) = -1.0;
  const double step = 1e-6;
  double pullback = 0.0;
  for (int trial = 0; trial < std::min(points, 200); ++trial) {
    const classical::ActionAngle aa{rng.uniform(0.2, 5.0), rng.uniform(0.2, 5.0),
                                    rng.uniform(0.0, 2.0 * kPi), rng.uniform(0.0, 2.0 * kPi)};
    Eigen::Matrix4d jac;
    for (int c = 0; c < 4; ++c) {
      classical::ActionAngle plus = aa;
      classical::ActionAngle minus = aa;
      double* coords_plus[4] = {&plus.a1, &plus.a2, &plus.th1, &plus.th2};
      double* coords_minus[4] = {&minus.a1, &minus.a2, &minus.th1, &minus.th2};
      *coords_plus[c] += step;
      *coords_minus[c] -= step;
      jac.col(c) = (as_vec4(classical::from_action_angle(plus)) -
                    as_vec4(classical::from_action_angle(minus))) /
                   (2.0 * step);
    }
    pullback = std::max(
        pullback, (jac.transpose() * omega_xy * jac - omega_aa).cwiseAbs().maxCoeff());
  }
  report.add("action-angle: chart pulls omega back to dA ^ dtheta", pullback, 1e-8);

  int strata_mismatches = 0;
  const auto expect = [&](double e, double ell, classical::Stratum s, classical::LeafType l) {
    const classical::StratumTag tag = classical::classify(e, ell);
    if (tag.stratum != s || tag.leaf != l) ++strata_mismatches;
  };
  expect(1.0, 0.5, classical::Stratum::v2, classical::LeafType::torus2);
  expect(1.0, 1.0, classical::Stratum::v1, classical::LeafType::circle);
  expect(0.0, 0.0, classical::Stratum::v0, classical::LeafType::point);
  for (int trial = 0; trial < std::min(points, 200); ++trial) {
    const auto [e, ell] = classical::energy_momentum(random_xy(rng));
    const classical::StratumTag tag = classical::classify(e, ell);
    if (tag.stratum == classical::Stratum::v2 && std::abs(ell) >= e) ++strata_mismatches;
  }
  report.add("strata: classification matches the leaf table",
             static_cast<double>(strata_mismatches), 0.0);
  return report;
}

VerificationReport invariant_relation_checks(int points, std::uint64_t seed, double tol) {
  VerificationReport report;
  Rng rng(seed);
  double pi_residual = 0.0;
  double sigma_residual = 0.0;
  for (int trial = 0; trial < points; ++trial) {
    const classical::XiEtaState state = random_xieta(rng);
    const classical::InvariantPoint inv = classical::invariants_pi(state);
    pi_residual =
        std::max(pi_residual, inv.relation_residual / std::max(1.0, inv.pi4 * inv.pi4));
    const classical::SigmaInvariants sig = classical::invariants_sigma(random_xy(rng));
    const double relation = sig.sigma1 * sig.sigma1 - sig.sigma2 * sig.sigma2 -
                            sig.sigma3 * sig.sigma3 - sig.sigma4 * sig.sigma4;
    sigma_residual =
        std::max(sigma_residual, std::abs(relation) / std::max(1.0, sig.sigma1 * sig.sigma1));
  }
  report.add("invariants: pi1^2 + pi2^2 + pi3^2 = pi4^2 (relative)", pi_residual, tol);
  report.add("invariants: sigma1^2 = sigma2^2 + sigma3^2 + sigma4^2 (relative)", sigma_residual,
             tol);
  return report;
}

VerificationReport flow_checks(int points, std::uint64_t seed, double tol) {
  VerificationReport report;
  Rng rng(seed);
  double periodicity = 0.0;
  double invariance = 0.0;
  double quarter_turn = 0.0;
  for (int trial = 0; trial < points; ++trial) {
    const classical::ClassicalState s = random_xy(rng);
    const double t = rng.uniform(-10.0, 10.0);
    const auto [e, ell] = classical::energy_momentum(s);

    const classical::ClassicalState full_e = classical::flow_E(2.0 * kPi, s);
    const classical::ClassicalState full_l = classical::flow_L(2.0 * kPi, s);
    periodicity = std::max({periodicity, (full_e.x - s.x).cwiseAbs().maxCoeff(),
                            (full_e.y - s.y).cwiseAbs().maxCoeff(),
                            (full_l.x - s.x).cwiseAbs().maxCoeff(),
                            (full_l.y - s.y).cwiseAbs().maxCoeff()});

    for (const classical::ClassicalState& moved :
         {classical::flow_E(t, s), classical::flow_L(t, s)}) {
      const auto [e2, ell2] = classical::energy_momentum(moved);
      invariance = std::max({invariance, std::abs(e2 - e), std::abs(ell2 - ell)});
    }

    const classical::ClassicalState quarter = classical::flow_E(kPi / 2.0, s);
    quarter_turn = std::max({quarter_turn, (quarter.x + s.y).cwiseAbs().maxCoeff(),
                             (quarter.y - s.x).cwiseAbs().maxCoeff()});
  }
  report.add("flows: flow_E and flow_L are 2 pi periodic", periodicity, tol);
  report.add("flows: E and L are invariant under both flows", invariance, tol);
  report.add("flows: flow_E(pi/2) maps (x, y) to (-y, x)", quarter_turn, tol);
  return report;
}

VerificationReport hopf_checks(int points, std::uint64_t seed, double tol) {
  VerificationReport report;
  Rng rng(seed);
  const double fixed_tol = 1e-10;
  double invariance = 0.0;
  double on_sphere = 0.0;
  double fiber_membership = 0.0;
  double plane = 0.0;
  double torus = 0.0;
  for (int trial = 0; trial < points; ++trial) {
    const double e = rng.uniform(0.2, 4.0);

    classical::XiEtaState state = random_xieta(rng);
    const double norm = std::sqrt(state.xi.squaredNorm() + state.eta.squaredNorm());
    const double target = std::sqrt(2.0 * e);
    state.xi *= target / norm;
    state.eta *= target / norm;

    const classical::Vec3 image = classical::hopf(state, e, 1e-9);
    on_sphere = std::max(on_sphere, std::abs(image.norm() - e));

    const double t = rng.uniform(-10.0, 10.0);
    const classical::XiEtaState moved =
        classical::to_xieta(classical::flow_E(t, classical::to_xy(state)));
    invariance = std::max(invariance, (classical::hopf(moved) - image).cwiseAbs().maxCoeff());

    // Fiber through a random sphere point, sampled at a random parameter.
    const classical::Vec3 pi_point = e * rng.unit3();
    const classical::XiEtaState fiber = classical::hopf_fiber(pi_point, e, t);
    fiber_membership = std::max(
        fiber_membership, (classical::hopf(fiber) - pi_point).cwiseAbs().maxCoeff());
    fiber_membership = std::max(
        fiber_membership,
        std::abs(fiber.xi.squaredNorm() + fiber.eta.squaredNorm() - 2.0 * e));
    plane = std::max(plane, std::abs(pi_point[0] * fiber.xi[0] - pi_point[1] * fiber.eta[0] -
                                     (e + pi_point[2]) * fiber.xi[1]));
    plane = std::max(plane, std::abs(pi_point[1] * fiber.xi[0] + pi_point[0] * fiber.eta[0] -
                                     (e + pi_point[2]) * fiber.eta[1]));

    // Torus actions over the reduced level set pi3 = ell.
    const double ell = rng.uniform(-e, e);
    const double r = std::sqrt(std::max(0.0, e * e - ell * ell));
    const double alpha = rng.uniform(0.0, 2.0 * kPi);
    const classical::Vec3 level{r * std::cos(alpha), r * std::sin(alpha), ell};
    const classical::XiEtaState on_level = classical::hopf_fiber(level, e, t);
    const auto [se, sell] = classical::energy_momentum(classical::to_xy(on_level));
    const auto [a1, a2] = classical::fiber_torus_actions(ell, e);
    torus = std::max({torus, std::abs(0.5 * (se + sell) - a1), std::abs(0.5 * (se - sell) - a2)});
  }
  report.add("hopf: invariant along the flow_E fibers", invariance, tol);
  report.add("hopf: image lies on the sphere of radius e", on_sphere, fixed_tol);
  report.add("hopf fiber: points project back to pi and stay on the 3-sphere", fiber_membership,
             fixed_tol);
  report.add("hopf fiber: Case-1 plane equations hold", plane, fixed_tol);
  report.add("fiber torus: sampled actions equal ((e+l)/2, (e-l)/2)", torus, fixed_tol);
  return report;
}

VerificationReport reduced_geometry_checks(int points, std::uint64_t seed, double tol) {
  VerificationReport report;
  Rng rng(seed);
  const double fixed_tol = std::max(tol, 1e-12);
  double tangency = 0.0;
  double hamiltonian = 0.0;
  double period = 0.0;
  double rotation = 0.0;
  double form_checks = 0.0;
  for (int trial = 0; trial < points; ++trial) {
    const double e = rng.uniform(0.2, 4.0);
    const classical::Vec3 pi_point = e * rng.unit3();
    const classical::Vec3 grad = rng.gauss3();
    const auto grad_k = [&grad](const classical::Vec3&) { return grad; };

    const classical::Vec3 field = classical::reduced_field(grad_k, pi_point);
    tangency = std::max(tangency, std::abs(field.dot(pi_point)) /
                                      std::max(1.0, grad.norm() * e * e));

    // Random tangent vector at pi.
    classical::Vec3 u = rng.gauss3();
    u -= u.dot(pi_point) / (e * e) * pi_point;
    hamiltonian = std::max(
        hamiltonian,
        std::abs(classical::reduced_symplectic(pi_point, field, u, e) + grad.dot(u)));

    period = std::max(period,
                      (classical::reduced_flow_pi3(kPi, pi_point) - pi_point).cwiseAbs().maxCoeff());
    const classical::Vec3 pole{0.0, 0.0, e};
    period = std::max(
        period,
        (classical::reduced_flow_pi3(rng.uniform(-5.0, 5.0), pole) - pole).cwiseAbs().maxCoeff());
    const classical::Vec3 start{e, 0.0, 0.0};
    const classical::Vec3 quarter = classical::reduced_flow_pi3(kPi / 4.0, start);
    rotation = std::max(rotation, (quarter - classical::Vec3{0.0, e, 0.0}).cwiseAbs().maxCoeff());

    // Antisymmetry and the north-pole normalization of omega_e.
    classical::Vec3 v = rng.gauss3();
    v -= v.dot(pi_point) / (e * e) * pi_point;
    form_checks = std::max(form_checks,
                           std::abs(classical::reduced_symplectic(pi_point, u, v, e) +
                                    classical::reduced_symplectic(pi_point, v, u, e)));
    form_checks =
        std::max(form_checks, std::abs(classical::reduced_symplectic(pi_point, u, u, e)));
    const classical::Vec3 north{0.0, 0.0, e};
    form_checks = std::max(form_checks, std::abs(classical::reduced_symplectic(
                                            north, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, e) +
                                        1.0 / (2.0 * e)));
  }
  report.add("reduced field: tangent to the sphere (scalar triple product)", tangency, 1e-13);
  report.add("reduced field: omega_e(X_K, u) = -dK u", hamiltonian, fixed_tol);
  report.add("reduced flow: period pi, poles fixed", period, fixed_tol);
  report.add("reduced flow: rotation by angle 2t", rotation, fixed_tol);
  report.add("reduced symplectic: antisymmetric, -1/(2e) at the north pole", form_checks,
             fixed_tol);
  return report;
}

VerificationReport prequantization_checks(const std::vector<int>& qs, int n_theta, int n_phi,
                                          double hbar, double rel_tol) {
  VerificationReport report;
  double worst = 0.0;
  for (int q : qs) {
    const double e = q * hbar;
    const double d_theta = kPi / n_theta;
    const double d_phi = 2.0 * kPi / n_phi;
    double integral = 0.0;
    for (int i = 0; i < n_theta; ++i) {
      const double theta = (i + 0.5) * d_theta;
      const double st = std::sin(theta);
      const double ct = std::cos(theta);
      for (int j = 0; j < n_phi; ++j) {
        const double phi = (j + 0.5) * d_phi;
        const double cp = std::cos(phi);
        const double sp = std::sin(phi);
        const classical::Vec3 point{e * st * cp, e * st * sp, e * ct};
        const classical::Vec3 u = classical::Vec3{e * ct * cp, e * ct * sp, -e * st} * d_theta;
        const classical::Vec3 v = classical::Vec3{-e * st * sp, e * st * cp, 0.0} * d_phi;
        integral += classical::reduced_symplectic(point, u, v, e);
      }
    }
    const double expected = 2.0 * kPi * q * hbar;
    worst = std::max(worst, std::abs(std::abs(integral) - expected) / expected);
  }
  report.add("prequantization: integral of omega_e over the sphere equals 2 pi q hbar (q=1,2,5)",
             worst, rel_tol);
  return report;
}

VerificationReport su2geo_checks(int trials, std::uint64_t seed, double tol) {
  VerificationReport report;
  Rng rng(seed);
  double j_linear = 0.0;
  double bracket_identity = 0.0;
  double killing_euclidean = 0.0;
  double killing_ad = 0.0;
  double killing_positive = 0.0;
  double rotation_intertwine = 0.0;
  double exp_membership = 0.0;
  double ad_invariants = 0.0;
  double momentum_components = 0.0;
  double equivariance = 0.0;
  double momentum_vs_hopf = 0.0;
  double orbit_vs_reduced = 0.0;

  for (int trial = 0; trial < trials; ++trial) {
    const su2::Vec3 a = rng.gauss3();
    const su2::Vec3 b = rng.gauss3();
    const su2::AlgebraElement u = su2::j_inv(a);
    const su2::AlgebraElement v = su2::j_inv(b);

    j_linear = std::max(j_linear, (su2::j_map(u) - a).cwiseAbs().maxCoeff());
    const double alpha = rng.uniform(-2.0, 2.0);
    const double beta = rng.uniform(-2.0, 2.0);
    j_linear = std::max(
        j_linear,
        (su2::j_map(su2::AlgebraElement(alpha * u.matrix() + beta * v.matrix())) -
         (alpha * a + beta * b))
            .cwiseAbs()
            .maxCoeff());

    bracket_identity = std::max(
        bracket_identity,
        (su2::j_map(su2::bracket(u, v)) - 2.0 * a.cross(b)).cwiseAbs().maxCoeff());

    killing_euclidean = std::max(killing_euclidean, std::abs(su2::killing(u, v) - a.dot(b)));
    if (a.norm() > 1e-8 && su2::killing(u, u) <= 0.0) killing_positive += 1.0;

    const su2::GroupElement group = su2::exp_su2(u);
    killing_ad = std::max(killing_ad,
                          std::abs(su2::killing(su2::ad_action(group, u), su2::ad_action(group, v)) -
                                   su2::killing(u, v)));

    rotation_intertwine = std::max(
        rotation_intertwine,
        (su2::j_map(su2::ad_action(group, v)) - su2::rotation_of(u) * b).cwiseAbs().maxCoeff());

    const double t = rng.uniform(-10.0, 10.0);
    const su2::Mat2 exp_mat = su2::exp_su2(su2::j_inv(t * rng.unit3())).matrix();
    exp_membership = std::max(
        exp_membership,
        (exp_mat.adjoint() * exp_mat - su2::Mat2::Identity()).cwiseAbs().maxCoeff());
    exp_membership =
        std::max(exp_membership, std::abs(exp_mat.determinant() - std::complex<double>(1.0, 0.0)));

    const su2::Mat2 conjugated = su2::ad_action(group, v).matrix();
    ad_invariants =
        std::max(ad_invariants, (conjugated + conjugated.adjoint()).cwiseAbs().maxCoeff());
    ad_invariants = std::max(ad_invariants, std::abs(conjugated.trace()));

    const su2::Vec2c z{std::complex<double>(rng.gauss(), rng.gauss()),
                       std::complex<double>(rng.gauss(), rng.gauss())};
    const su2::Vec3 momentum = su2::momentum_J(z);
    momentum_components = std::max(
        momentum_components,
        std::max({std::abs(su2::hermitian_form(su2::E1(), z) - momentum[0]),
                  std::abs(su2::hermitian_form(su2::E2(), z) - momentum[1]),
                  std::abs(su2::hermitian_form(su2::E3(), z) - momentum[2])}));

    equivariance = std::max(
        equivariance,
        (su2::momentum_J(group.matrix() * z) - su2::rotation_of(u) * momentum)
            .cwiseAbs()
            .maxCoeff());

    // Against the classical Hopf invariants under z_j = xi_j + i eta_j: the
    // momentum map carries the opposite orientation on the second axis.
    classical::XiEtaState state;
    state.xi = {z[0].real(), z[1].real()};
    state.eta = {z[0].imag(), z[1].imag()};
    const classical::Vec3 hopf_image = classical::hopf(state);
    momentum_vs_hopf = std::max(
        momentum_vs_hopf,
        std::max({std::abs(momentum[0] - hopf_image[0]), std::abs(momentum[1] + hopf_image[1]),
                  std::abs(momentum[2] - hopf_image[2])}));

    const double e = rng.uniform(0.2, 4.0);
    const su2::Vec3 x = e * rng.unit3();
    const su2::Vec3 y = rng.gauss3();
    const su2::Vec3 yp = rng.gauss3();
    orbit_vs_reduced = std::max(
        orbit_vs_reduced,
        std::abs(su2::orbit_form(x, y, yp, e) -
                 classical::reduced_symplectic(x, x.cross(y), x.cross(yp), e)));
  }

  report.add("su2geo: j linear bijection with exact round trips", j_linear, tol);
  report.add("su2geo: j[u,v] = 2 j(u) x j(v)", bracket_identity, tol);
  report.add("su2geo: killing form equals the Euclidean pairing", killing_euclidean, tol);
  report.add("su2geo: killing form is Ad-invariant", killing_ad, tol);
  report.add("su2geo: killing form positive definite away from zero", killing_positive, 0.0);
  report.add("su2geo: j(Ad_exp(u) v) = rotation_of(u) j(v)", rotation_intertwine, tol);
  report.add("su2geo: exp stays in SU(2) for |t| <= 10", exp_membership, 1e-13);
  report.add("su2geo: Ad preserves anti-hermitian traceless", ad_invariants, 1e-13);
  report.add("su2geo: momentum components equal the hermitian forms", momentum_components, tol);
  report.add("su2geo: momentum equivariance J(Uz) = R(U) J(z)", equivariance, tol);
  report.add("su2geo: momentum equals Hopf invariants up to second-axis orientation",
             momentum_vs_hopf, 1e-12);
  report.add("su2geo: orbit form equals the reduced symplectic form", orbit_vs_reduced, tol);
  return report;
}

VerificationReport check_oscillator(const Options& opts, int mutate_index) {
  VerificationReport report;
  report.merge(spectrum_checks(opts.n_max, opts.hbar));
  osc::OscillatorOperators ops = osc::build_oscillator_operators(opts.n_max, opts.hbar);
  if (mutate_index >= 0) ops = mutate_pi_entry(std::move(ops), mutate_index);
  report.merge(su2_u2_checks(ops, opts.tol));
  report.merge(block_structure_checks(opts.n_max, opts.hbar));
  report.merge(casimir_checks(opts.n_max, std::min(opts.n_max, kCasimirQMax), opts.hbar,
                              std::max(opts.tol, 1e-10)));
  report.merge(oscillator_commutant_checks(std::min(opts.n_max, kCommutantQMax), opts.hbar));
  return report;
}

VerificationReport check_reduced(const Options& opts) {
  VerificationReport report;
  report.merge(b_algebra_checks(std::max(opts.q_max, kBAlgebraQMax)));
  report.merge(reduced_su2_checks(opts.q_max, opts.hbar, opts.tol));
  report.merge(parity_checks(std::max(opts.q_max, kParityQMax), opts.hbar));
  report.merge(reduced_commutant_checks(kCommutantQMax, opts.hbar));
  report.merge(reduced_casimir_checks(kCasimirQMax, opts.hbar, std::max(opts.tol, 1e-10)));
  return report;
}

VerificationReport check_intertwine(const Options& opts) {
  VerificationReport report;
  report.merge(intertwiner_checks(kIntertwineQMax, kRoundTripQMax, opts.hbar, opts.tol));
  report.merge(multiplicity_checks(kMultiplicityQMax, opts.hbar));
  return report;
}

VerificationReport check_classical(const Options& opts) {
  VerificationReport report;
  report.merge(action_angle_checks(2000, opts.seed, opts.tol));
  report.merge(invariant_relation_checks(1000000, opts.seed + 1, std::max(opts.tol, 1e-12)));
  report.merge(poisson_table_checks(kPoissonPoints, opts.seed + 2, kPoissonTol));
  report.merge(flow_checks(500, opts.seed + 3, opts.tol));
  report.merge(hopf_checks(500, opts.seed + 4, opts.tol));
  report.merge(reduced_geometry_checks(500, opts.seed + 5, opts.tol));
  report.merge(prequantization_checks({1, 2, 5}, 200, 100, opts.hbar, kQuadratureRelTol));
  return report;
}

VerificationReport check_su2(const Options& opts) {
  return su2geo_checks(kTrialCount, opts.seed + 6, opts.tol);
}

VerificationReport check_all(const Options& opts, int mutate_index) {
  VerificationReport report;
  report.merge(check_oscillator(opts, mutate_index));
  report.merge(check_reduced(opts));
  report.merge(check_intertwine(opts));
  report.merge(check_classical(opts));
  report.merge(check_su2(opts));
  return report;
}

}  // namespace oscq::checks
