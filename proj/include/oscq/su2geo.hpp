#pragma once

#include <complex>

#include <Eigen/Core>

namespace oscq::su2 {

using Mat2 = Eigen::Matrix2cd;
using Mat3 = Eigen::Matrix3d;
using Vec2c = Eigen::Vector2cd;
using Vec3 = Eigen::Vector3d;

/// Anti-hermitian traceless 2x2 matrix [[i z, -y + i x], [y + i x, -i z]].
/// Construction validates the invariants and throws std::domain_error when
/// they fail beyond tolerance.
class AlgebraElement {
 public:
  explicit AlgebraElement(const Mat2& m, double tol = 1e-12);
  const Mat2& matrix() const { return m_; }

 private:
  Mat2 m_;
};

/// Element [[alpha, -beta], [conj(beta), conj(alpha)]] with unit determinant.
class GroupElement {
 public:
  explicit GroupElement(const Mat2& m, double tol = 1e-12);
  const Mat2& matrix() const { return m_; }

 private:
  Mat2 m_;
};

/// Basis elements mapped by j to the standard basis of R^3.
AlgebraElement E1();
AlgebraElement E2();
AlgebraElement E3();

/// u = [[i z, -y + i x], [y + i x, -i z]] -> (x, y, z); linear bijection.
Vec3 j_map(const AlgebraElement& u);
AlgebraElement j_inv(const Vec3& v);

/// Matrix commutator; satisfies j([u, u']) = 2 j(u) x j(u').
AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v);

/// k(u, u') = tr(u conj(u')^T) / 2 = <j(u), j(u')>; Ad-invariant.
double killing(const AlgebraElement& u, const AlgebraElement& v);

/// Closed form exp(u) = cos(theta) I + (sin(theta)/theta) u, theta = |j(u)|.
GroupElement exp_su2(const AlgebraElement& u);

/// Ad_U u = U u U^{-1}.
AlgebraElement ad_action(const GroupElement& g, const AlgebraElement& u);

/// exp of the skew matrix 2 i^{-1}(j(u)): rotation by angle 2 |j(u)| about
/// the axis j(u).  Satisfies j(Ad_{exp u} v) = rotation_of(u) j(v).
Mat3 rotation_of(const AlgebraElement& u);

/// J^u(z) = conj(z)^T (-i u) z / 2; real for valid algebra elements.
double hermitian_form(const AlgebraElement& u, const Vec2c& z);

/// (Re z1 conj(z2), Im z1 conj(z2), (|z1|^2 - |z2|^2)/2); component j equals
/// hermitian_form(E_j, z), and J(U z) = rotation_of(u) J(z) for U = exp(u).
Vec3 momentum_J(const Vec2c& z);

/// omega_e(x)(x cross y, x cross y') = -<x, y cross y'> / 2 on |x| = e;
/// agrees with classical::reduced_symplectic through the triple-product
/// identity (x cross y) cross (x cross y') = x <x, y cross y'>.
double orbit_form(const Vec3& x, const Vec3& y, const Vec3& yp, double e, double tol = 1e-9);

}  // namespace oscq::su2
