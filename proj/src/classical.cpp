#include "oscq/classical.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Geometry>

namespace oscq::classical {

namespace {

constexpr double kSqrtHalf = 0.70710678118654752440;

double scaled_tol(double tol, double scale) { return tol * std::max(1.0, scale); }

double pi_component(int k, const XiEtaState& s) {
  const double xi1 = s.xi[0], xi2 = s.xi[1], eta1 = s.eta[0], eta2 = s.eta[1];
  switch (k) {
    case 1: return xi1 * xi2 + eta1 * eta2;
    case 2: return xi1 * eta2 - xi2 * eta1;
    case 3: return 0.5 * (xi1 * xi1 + eta1 * eta1 - xi2 * xi2 - eta2 * eta2);
    case 4: return 0.5 * (xi1 * xi1 + eta1 * eta1 + xi2 * xi2 + eta2 * eta2);
    default: throw std::out_of_range("pi_component: index must be 1..4");
  }
}

}  // namespace

XiEtaState to_xieta(const ClassicalState& s) {
  XiEtaState out;
  out.xi[0] = -kSqrtHalf * (s.x[0] + s.y[1]);
  out.xi[1] = kSqrtHalf * (s.y[1] - s.x[0]);
  out.eta[0] = kSqrtHalf * (s.y[0] - s.x[1]);
  out.eta[1] = kSqrtHalf * (s.y[0] + s.x[1]);
  return out;
}

ClassicalState to_xy(const XiEtaState& s) {
  ClassicalState out;
  out.x[0] = -kSqrtHalf * (s.xi[0] + s.xi[1]);
  out.x[1] = kSqrtHalf * (s.eta[1] - s.eta[0]);
  out.y[0] = kSqrtHalf * (s.eta[0] + s.eta[1]);
  out.y[1] = kSqrtHalf * (s.xi[1] - s.xi[0]);
  return out;
}

std::pair<double, double> energy_momentum(const ClassicalState& s) {
  const double e = 0.5 * (s.x[0] * s.x[0] + s.y[0] * s.y[0]) +
                   0.5 * (s.x[1] * s.x[1] + s.y[1] * s.y[1]);
  const double ell = s.x[0] * s.y[1] - s.x[1] * s.y[0];
  return {e, ell};
}

StratumTag classify(double e, double ell, double tol) {
  const double eps = scaled_tol(tol, e);
  if (std::abs(ell) > e + eps) {
    throw std::domain_error("classify: point outside the orbit space |ell| <= e");
  }
  if (e <= eps) return {Stratum::v0, LeafType::point};
  if (std::abs(ell) >= e - eps) return {Stratum::v1, LeafType::circle};
  return {Stratum::v2, LeafType::torus2};
}

XiEtaState xieta_from_action_angle(const ActionAngle& aa) {
  if (aa.a1 < 0.0 || aa.a2 < 0.0) {
    throw std::domain_error("from_action_angle: actions must be nonnegative");
  }
  const double r1 = std::sqrt(2.0 * aa.a1);
  const double r2 = std::sqrt(2.0 * aa.a2);
  XiEtaState out;
  out.xi[0] = r1 * std::cos(aa.th1);
  out.eta[0] = r1 * std::sin(aa.th1);
  out.xi[1] = r2 * std::cos(aa.th2);
  out.eta[1] = r2 * std::sin(aa.th2);
  return out;
}

ClassicalState from_action_angle(const ActionAngle& aa) {
  return to_xy(xieta_from_action_angle(aa));
}

InvariantPoint invariants_pi(const XiEtaState& s) {
  InvariantPoint p;
  p.pi1 = pi_component(1, s);
  p.pi2 = pi_component(2, s);
  p.pi3 = pi_component(3, s);
  p.pi4 = pi_component(4, s);
  p.relation_residual = std::abs(p.pi1 * p.pi1 + p.pi2 * p.pi2 + p.pi3 * p.pi3 - p.pi4 * p.pi4);
  return p;
}

SigmaInvariants invariants_sigma(const ClassicalState& s) {
  // sigma1^2 = sigma2^2 + sigma3^2 + sigma4^2 via the planar Lagrange
  // identity |x|^2 |y|^2 = <x,y>^2 + (x1 y2 - x2 y1)^2.
  SigmaInvariants sig;
  sig.sigma1 = 0.5 * (s.x.squaredNorm() + s.y.squaredNorm());
  sig.sigma2 = s.x[0] * s.y[1] - s.x[1] * s.y[0];
  sig.sigma3 = 0.5 * (s.x.squaredNorm() - s.y.squaredNorm());
  sig.sigma4 = s.x.dot(s.y);
  return sig;
}

double poisson_bracket_pi(int i, int j, const InvariantPoint& at) {
  if (i < 1 || i > 4 || j < 1 || j > 4) {
    throw std::out_of_range("poisson_bracket_pi: indices must be 1..4");
  }
  if (i == 4 || j == 4 || i == j) return 0.0;
  const double pi[4] = {0.0, at.pi1, at.pi2, at.pi3};
  // {pi_i, pi_j} = 2 eps_{ijk} pi_k
  const int k = 6 - i - j;
  const int sign = ((j - i) == 1 || (j - i) == -2) ? 1 : -1;
  return 2.0 * sign * pi[k];
}

double poisson_bracket_fd(int i, int j, const XiEtaState& at, double step) {
  if (i < 1 || i > 4 || j < 1 || j > 4) {
    throw std::out_of_range("poisson_bracket_fd: indices must be 1..4");
  }
  const auto value = [&](int which, const XiEtaState& s) { return pi_component(which, s); };
  const auto partials = [&](int which) {
    Eigen::Vector4d grad;  // d/dxi1, d/dxi2, d/deta1, d/deta2
    for (int c = 0; c < 4; ++c) {
      XiEtaState plus = at;
      XiEtaState minus = at;
      double* pp = (c < 2) ? &plus.xi[c] : &plus.eta[c - 2];
      double* pm = (c < 2) ? &minus.xi[c] : &minus.eta[c - 2];
      *pp += step;
      *pm -= step;
      grad[c] = (value(which, plus) - value(which, minus)) / (2.0 * step);
    }
    return grad;
  };
  const Eigen::Vector4d gi = partials(i);
  const Eigen::Vector4d gj = partials(j);
  // Darboux pairs {xi_k, eta_k} = delta: {f,g} = sum_k (f_xi g_eta - f_eta g_xi).
  return gi[0] * gj[2] - gi[2] * gj[0] + gi[1] * gj[3] - gi[3] * gj[1];
}

Vec3 hopf(const XiEtaState& s) {
  return {pi_component(1, s), pi_component(2, s), pi_component(3, s)};
}

Vec3 hopf(const XiEtaState& s, double e, double tol) {
  const double norm_sq = s.xi.squaredNorm() + s.eta.squaredNorm();
  if (std::abs(norm_sq - 2.0 * e) > scaled_tol(tol, 2.0 * e)) {
    throw std::domain_error("hopf: point not on the 3-sphere of radius sqrt(2e)");
  }
  return hopf(s);
}

XiEtaState hopf_fiber(const Vec3& pi, double e, double t, double tol) {
  if (e <= 0.0) throw std::domain_error("hopf_fiber: degenerate fiber at e = 0");
  if (std::abs(pi.norm() - e) > scaled_tol(tol, e)) {
    throw std::domain_error("hopf_fiber: |pi| != e");
  }
  XiEtaState seed;
  if (e + pi[2] <= scaled_tol(tol, e)) {
    // South pole: the fiber is {xi1 = eta1 = 0, xi2^2 + eta2^2 = 2e}.
    seed.xi = {0.0, std::sqrt(2.0 * e)};
    seed.eta = {0.0, 0.0};
  } else {
    const double xi1 = std::sqrt(e + pi[2]);
    seed.xi = {xi1, pi[0] / xi1};
    seed.eta = {0.0, pi[1] / xi1};
  }
  const std::complex<double> phase{std::cos(t), std::sin(t)};
  const std::complex<double> z1 = phase * seed.z1();
  const std::complex<double> z2 = phase * seed.z2();
  XiEtaState out;
  out.xi = {z1.real(), z2.real()};
  out.eta = {z1.imag(), z2.imag()};
  return out;
}

ClassicalState flow_E(double t, const ClassicalState& s) {
  const double c = std::cos(t);
  const double sn = std::sin(t);
  ClassicalState out;
  out.x = c * s.x - sn * s.y;
  out.y = sn * s.x + c * s.y;
  return out;
}

ClassicalState flow_L(double t, const ClassicalState& s) {
  const double c = std::cos(t);
  const double sn = std::sin(t);
  const Eigen::Matrix2d rot{{c, sn}, {-sn, c}};
  ClassicalState out;
  out.x = rot * s.x;
  out.y = rot * s.y;
  return out;
}

Vec3 reduced_field(const std::function<Vec3(const Vec3&)>& grad_k, const Vec3& pi) {
  return 2.0 * grad_k(pi).cross(pi);
}

Vec3 reduced_flow_pi3(double t, const Vec3& pi) {
  const double c = std::cos(2.0 * t);
  const double sn = std::sin(2.0 * t);
  return {c * pi[0] - sn * pi[1], sn * pi[0] + c * pi[1], pi[2]};
}

double reduced_symplectic(const Vec3& pi, const Vec3& u, const Vec3& v, double e, double tol) {
  if (std::abs(pi.norm() - e) > scaled_tol(tol, e)) {
    throw std::domain_error("reduced_symplectic: |pi| != e");
  }
  const double scale = e * std::max(u.norm(), v.norm());
  if (std::abs(pi.dot(u)) > scaled_tol(tol, scale) || std::abs(pi.dot(v)) > scaled_tol(tol, scale)) {
    throw std::domain_error("reduced_symplectic: u, v must be tangent at pi");
  }
  return -pi.dot(u.cross(v)) / (2.0 * e * e);
}

std::pair<double, double> fiber_torus_actions(double ell, double e) {
  if (std::abs(ell) > e + scaled_tol(1e-12, e)) {
    throw std::domain_error("fiber_torus_actions: need |ell| <= e");
  }
  return {0.5 * (e + ell), 0.5 * (e - ell)};
}

}  // namespace oscq::classical
