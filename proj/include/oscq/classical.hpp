#pragma once

#include <complex>
#include <functional>
#include <utility>

#include <Eigen/Core>

namespace oscq::classical {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

/// Phase-space point in the cotangent chart (x1, x2, y1, y2).
struct ClassicalState {
  Vec2 x{0.0, 0.0};
  Vec2 y{0.0, 0.0};
};

/// The same point in the (xi, eta) chart, with z_j = xi_j + i eta_j.
struct XiEtaState {
  Vec2 xi{0.0, 0.0};
  Vec2 eta{0.0, 0.0};

  std::complex<double> z1() const { return {xi[0], eta[0]}; }
  std::complex<double> z2() const { return {xi[1], eta[1]}; }
};

/// Linear chart change (x, y) <-> (xi, eta); mutually inverse.
XiEtaState to_xieta(const ClassicalState& s);
ClassicalState to_xy(const XiEtaState& s);

struct ActionAngle {
  double a1 = 0.0;
  double a2 = 0.0;
  double th1 = 0.0;
  double th2 = 0.0;
};

enum class Stratum { v0, v1, v2 };
enum class LeafType { point, circle, torus2 };

struct StratumTag {
  Stratum stratum;
  LeafType leaf;
};

struct InvariantPoint {
  double pi1 = 0.0;
  double pi2 = 0.0;
  double pi3 = 0.0;
  double pi4 = 0.0;
  double relation_residual = 0.0;  // |pi1^2 + pi2^2 + pi3^2 - pi4^2|
};

struct SigmaInvariants {
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  double sigma3 = 0.0;
  double sigma4 = 0.0;
};

/// e = (x1^2 + y1^2)/2 + (x2^2 + y2^2)/2, ell = x1 y2 - x2 y1.
std::pair<double, double> energy_momentum(const ClassicalState& s);

/// Whitney strata of the orbit space {|ell| <= e}: V2 (open, 2-torus leaves),
/// V1 (edges, circles), V0 (vertex, point).  Throws std::domain_error when
/// |ell| exceeds e beyond tolerance.
StratumTag classify(double e, double ell, double tol = 1e-9);

/// r_j = sqrt(2 A_j); angles periodic mod 2 pi.  Round trip:
/// energy_momentum(from_action_angle(aa)) = (A1 + A2, A1 - A2).
ClassicalState from_action_angle(const ActionAngle& aa);
XiEtaState xieta_from_action_angle(const ActionAngle& aa);

/// pi1 = xi1 xi2 + eta1 eta2, pi2 = xi1 eta2 - xi2 eta1,
/// pi3 = (xi1^2 + eta1^2 - xi2^2 - eta2^2)/2, pi4 = |z|^2 / 2.
InvariantPoint invariants_pi(const XiEtaState& s);

SigmaInvariants invariants_sigma(const ClassicalState& s);

/// Structure table of the pi invariants: {pi_i, pi_j} = 2 eps_{ijk} pi_k for
/// i, j in {1,2,3}; zero whenever an index is 4.
double poisson_bracket_pi(int i, int j, const InvariantPoint& at);

/// Finite-difference bracket of pi_i and pi_j at a chart point, using the
/// Darboux pairs {xi_k, eta_k}; the pi's are quadratic so central differences
/// are exact up to rounding.  Oracle for the closed-form table.
double poisson_bracket_fd(int i, int j, const XiEtaState& at, double step = 1e-6);

/// (pi1, pi2, pi3) of the invariants; restricted to |zeta|^2 = 2e this is the
/// quotient map of the energy flow, with fibers the great circles.
Vec3 hopf(const XiEtaState& s);
Vec3 hopf(const XiEtaState& s, double e, double tol);

/// Point of the fiber over pi at flow parameter t: a fixed seed (eta1 = 0,
/// xi1 = sqrt(e + pi3), Case-2 seed (0, sqrt(2e), 0, 0) at the south pole)
/// advanced by z -> exp(i t) z.  Throws for |pi| != e or e = 0.
XiEtaState hopf_fiber(const Vec3& pi, double e, double t, double tol = 1e-9);

/// Exact rotation flows, period 2 pi; both preserve e and ell.
ClassicalState flow_E(double t, const ClassicalState& s);
ClassicalState flow_L(double t, const ClassicalState& s);

/// X(pi) = 2 (grad_k(pi) x pi); always tangent to the sphere through pi.
Vec3 reduced_field(const std::function<Vec3(const Vec3&)>& grad_k, const Vec3& pi);

/// Rotation by angle 2t about the pi3 axis; period pi.
Vec3 reduced_flow_pi3(double t, const Vec3& pi);

/// omega_e(pi)(u, v) = -<pi, u x v> / (2 e^2) on tangent vectors u, v at pi.
double reduced_symplectic(const Vec3& pi, const Vec3& u, const Vec3& v, double e,
                          double tol = 1e-9);

/// Actions of the torus over the reduced level set pi3 = ell:
/// (a1, a2) = ((e + ell)/2, (e - ell)/2); one vanishes when |ell| = e.
std::pair<double, double> fiber_torus_actions(double ell, double e);

}  // namespace oscq::classical
