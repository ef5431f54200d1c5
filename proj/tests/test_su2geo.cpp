#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "oscq/classical.hpp"
#include "oscq/su2geo.hpp"

using namespace oscq::su2;

namespace {

constexpr double kPi = std::numbers::pi;

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Vec3 random_vec(std::mt19937_64& rng, double scale = 1.5) {
  return {uniform(rng, -scale, scale), uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
}

}  // namespace

TEST_CASE("j map and basis") {
  CHECK((j_map(E1()) - Vec3{1, 0, 0}).norm() == 0.0);
  CHECK((j_map(E2()) - Vec3{0, 1, 0}).norm() == 0.0);
  CHECK((j_map(E3()) - Vec3{0, 0, 1}).norm() == 0.0);

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec3 v = random_vec(rng);
    CHECK((j_map(j_inv(v)) - v).norm() == 0.0);
  }

  Mat2 bad;
  bad << 1.0, 0.0, 0.0, 1.0;  // hermitian, not anti-hermitian
  CHECK_THROWS_AS(AlgebraElement{bad}, std::domain_error);
}

TEST_CASE("bracket identity") {
  CHECK((j_map(bracket(E1(), E2())) - Vec3{0, 0, 2}).norm() == 0.0);  // [E1,E2] = 2 E3

  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    const Vec3 a = random_vec(rng);
    const Vec3 b = random_vec(rng);
    const AlgebraElement u = j_inv(a);
    CHECK(j_map(bracket(u, u)).norm() == 0.0);
    CHECK((j_map(bracket(u, j_inv(b))) - 2.0 * a.cross(b)).norm() <= 1e-13);
  }
}

TEST_CASE("killing form") {
  CHECK(killing(E1(), E1()) == doctest::Approx(1.0));
  CHECK(killing(E1(), E2()) == doctest::Approx(0.0));

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const Vec3 a = random_vec(rng);
    const Vec3 b = random_vec(rng);
    CHECK(std::abs(killing(j_inv(a), j_inv(b)) - a.dot(b)) <= 1e-13);
    if (a.norm() > 1e-6) CHECK(killing(j_inv(a), j_inv(a)) > 0.0);

    const GroupElement g = exp_su2(j_inv(random_vec(rng)));
    CHECK(std::abs(killing(ad_action(g, j_inv(a)), ad_action(g, j_inv(b))) -
                   killing(j_inv(a), j_inv(b))) <= 1e-12);
  }
}

TEST_CASE("adjoint action and rotations") {
  const AlgebraElement u = j_inv({0.3, -0.8, 0.5});
  const GroupElement identity{Mat2::Identity()};
  CHECK((ad_action(identity, u).matrix() - u.matrix()).cwiseAbs().maxCoeff() == 0.0);

  // (pi/4) E3 exponentiates to a quarter turn about the z-axis.
  const Mat3 quarter = rotation_of(j_inv({0.0, 0.0, kPi / 4}));
  Mat3 expected;
  expected << 0, -1, 0, 1, 0, 0, 0, 0, 1;
  CHECK((quarter - expected).cwiseAbs().maxCoeff() <= 1e-15);

  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 500; ++trial) {
    const Vec3 a = random_vec(rng);
    const Vec3 b = random_vec(rng);
    const AlgebraElement generator = j_inv(a);
    const GroupElement g = exp_su2(generator);
    CHECK((j_map(ad_action(g, j_inv(b))) - rotation_of(generator) * b).norm() <= 1e-10);
  }

  // exp stays in SU(2) out to |t| = 10.
  for (int trial = 0; trial < 200; ++trial) {
    const double t = uniform(rng, -10.0, 10.0);
    Vec3 axis = random_vec(rng);
    if (axis.norm() < 1e-6) continue;
    axis.normalize();
    const Mat2 g = exp_su2(j_inv(t * axis)).matrix();
    CHECK((g.adjoint() * g - Mat2::Identity()).cwiseAbs().maxCoeff() <= 1e-13);
    CHECK(std::abs(g.determinant() - std::complex<double>(1.0, 0.0)) <= 1e-13);
  }
}

TEST_CASE("momentum map") {
  const Vec2c basis_state{1.0, 0.0};
  CHECK((momentum_J(basis_state) - Vec3{0.0, 0.0, 0.5}).norm() == 0.0);
  CHECK(hermitian_form(E3(), basis_state) == doctest::Approx(0.5));

  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 300; ++trial) {
    const Vec2c z{std::complex<double>(uniform(rng, -1, 1), uniform(rng, -1, 1)),
                  std::complex<double>(uniform(rng, -1, 1), uniform(rng, -1, 1))};
    const Vec3 momentum = momentum_J(z);
    CHECK(std::abs(hermitian_form(E1(), z) - momentum[0]) <= 1e-14);
    CHECK(std::abs(hermitian_form(E2(), z) - momentum[1]) <= 1e-14);
    CHECK(std::abs(hermitian_form(E3(), z) - momentum[2]) <= 1e-14);

    // diag(e^{it}, e^{-it}) rotates (J1, J2) by 2t and fixes J3.
    const double t = uniform(rng, -3, 3);
    Mat2 diag_u = Mat2::Zero();
    diag_u(0, 0) = std::polar(1.0, t);
    diag_u(1, 1) = std::polar(1.0, -t);
    const Vec3 rotated = momentum_J(diag_u * z);
    const double c = std::cos(2 * t);
    const double s = std::sin(2 * t);
    CHECK(std::abs(rotated[0] - (c * momentum[0] - s * momentum[1])) <= 1e-13);
    CHECK(std::abs(rotated[1] - (s * momentum[0] + c * momentum[1])) <= 1e-13);
    CHECK(std::abs(rotated[2] - momentum[2]) <= 1e-14);
  }
}

TEST_CASE("orbit symplectic form") {
  const double e = 2.0;
  const Vec3 north{0.0, 0.0, e};
  CHECK(orbit_form(north, {1, 0, 0}, {0, 1, 0}, e) == doctest::Approx(-e / 2));
  CHECK(orbit_form(north, {1, 0, 0}, {3, 0, 0}, e) == 0.0);
  CHECK_THROWS_AS(orbit_form({1, 0, 0}, {0, 1, 0}, {0, 0, 1}, e), std::domain_error);

  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 400; ++trial) {
    Vec3 direction = random_vec(rng);
    if (direction.norm() < 1e-3) continue;
    direction.normalize();
    const double radius = uniform(rng, 0.3, 3.0);
    const Vec3 x = radius * direction;
    const Vec3 y = random_vec(rng);
    const Vec3 yp = random_vec(rng);
    CHECK(std::abs(orbit_form(x, y, yp, radius) -
                   oscq::classical::reduced_symplectic(x, x.cross(y), x.cross(yp), radius)) <=
          1e-12);
  }
}
