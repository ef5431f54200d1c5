#include "oscq/su2geo.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Geometry>

namespace oscq::su2 {

namespace {

using Complex = std::complex<double>;
constexpr Complex kI{0.0, 1.0};

double matrix_inf_norm(const Mat2& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

AlgebraElement::AlgebraElement(const Mat2& m, double tol) : m_(m) {
  const double scale = std::max(1.0, matrix_inf_norm(m));
  if (matrix_inf_norm(m + m.adjoint()) > tol * scale) {
    throw std::domain_error("AlgebraElement: matrix is not anti-hermitian");
  }
  if (std::abs(m.trace()) > tol * scale) {
    throw std::domain_error("AlgebraElement: matrix is not traceless");
  }
}

GroupElement::GroupElement(const Mat2& m, double tol) : m_(m) {
  if (matrix_inf_norm(m.adjoint() * m - Mat2::Identity()) > tol) {
    throw std::domain_error("GroupElement: matrix is not unitary");
  }
  if (std::abs(m.determinant() - Complex(1.0, 0.0)) > tol) {
    throw std::domain_error("GroupElement: determinant is not 1");
  }
}

AlgebraElement E1() { return j_inv({1.0, 0.0, 0.0}); }
AlgebraElement E2() { return j_inv({0.0, 1.0, 0.0}); }
AlgebraElement E3() { return j_inv({0.0, 0.0, 1.0}); }

Vec3 j_map(const AlgebraElement& u) {
  const Mat2& m = u.matrix();
  return {m(0, 1).imag(), m(1, 0).real(), m(0, 0).imag()};
}

AlgebraElement j_inv(const Vec3& v) {
  Mat2 m;
  m(0, 0) = Complex(0.0, v[2]);
  m(0, 1) = Complex(-v[1], v[0]);
  m(1, 0) = Complex(v[1], v[0]);
  m(1, 1) = Complex(0.0, -v[2]);
  return AlgebraElement(m);
}

AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v) {
  return AlgebraElement(u.matrix() * v.matrix() - v.matrix() * u.matrix());
}

double killing(const AlgebraElement& u, const AlgebraElement& v) {
  return 0.5 * (u.matrix() * v.matrix().conjugate().transpose()).trace().real();
}

GroupElement exp_su2(const AlgebraElement& u) {
  const double theta = j_map(u).norm();
  if (theta == 0.0) return GroupElement(Mat2::Identity());
  return GroupElement(std::cos(theta) * Mat2::Identity() +
                      (std::sin(theta) / theta) * u.matrix());
}

AlgebraElement ad_action(const GroupElement& g, const AlgebraElement& u) {
  return AlgebraElement(g.matrix() * u.matrix() * g.matrix().adjoint());
}

Mat3 rotation_of(const AlgebraElement& u) {
  const Vec3 w = j_map(u);
  const double theta = 2.0 * w.norm();
  if (theta == 0.0) return Mat3::Identity();
  const Vec3 axis = w.normalized();
  Mat3 skew;
  skew << 0.0, -axis[2], axis[1], axis[2], 0.0, -axis[0], -axis[1], axis[0], 0.0;
  return Mat3::Identity() + std::sin(theta) * skew + (1.0 - std::cos(theta)) * skew * skew;
}

double hermitian_form(const AlgebraElement& u, const Vec2c& z) {
  const Complex value = 0.5 * (z.adjoint() * (-kI * u.matrix()) * z)(0, 0);
  return value.real();
}

Vec3 momentum_J(const Vec2c& z) {
  const Complex w = z[0] * std::conj(z[1]);
  return {w.real(), w.imag(), 0.5 * (std::norm(z[0]) - std::norm(z[1]))};
}

double orbit_form(const Vec3& x, const Vec3& y, const Vec3& yp, double e, double tol) {
  if (std::abs(x.norm() - e) > tol * std::max(1.0, e)) {
    throw std::domain_error("orbit_form: |x| != e");
  }
  return -0.5 * x.dot(y.cross(yp));
}

}  // namespace oscq::su2
