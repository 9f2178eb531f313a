#include "spinorlab/kinematics.hpp"
#include "spinorlab/sampling.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace spinorlab;

TEST_CASE("boost parameters from an on-shell momentum") {
  const FourMomentum p = FourMomentum::from_mass_momentum(1.0, {0, 0, 0.75});
  CHECK(p.energy == doctest::Approx(1.25).epsilon(1e-14));
  const BoostParams bp = boost_params(p);
  CHECK(std::cosh(bp.rapidity) == doctest::Approx(1.25).epsilon(1e-14));
  CHECK(std::sinh(bp.rapidity) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK((bp.axis - Eigen::Vector3d::UnitZ()).norm() == 0.0);
}

TEST_CASE("rest frame conventions") {
  const FourMomentum rest = FourMomentum::rest(2.0);
  const BoostParams bp = boost_params(rest);
  CHECK(bp.rapidity == 0.0);
  CHECK((bp.axis - Eigen::Vector3d::UnitZ()).norm() == 0.0);
  CHECK((boost_right(rest) - Matrix2c::Identity()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((boost_left(rest) - Matrix2c::Identity()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("transverse momentum example") {
  const FourMomentum p = FourMomentum::from_mass_momentum(1.0, {1, 0, 0});
  CHECK(std::cosh(boost_params(p).rapidity) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("invalid momenta are rejected") {
  CHECK_THROWS_AS(FourMomentum::from_mass_momentum(0.0, {0, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FourMomentum::from_mass_momentum(-1.0, {0, 0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FourMomentum::from_mass_momentum(1.0, {0, 0, 2e6}),
                  std::domain_error);
}

TEST_CASE("closed-form boost matches the frozen example") {
  const FourMomentum p = FourMomentum::from_mass_momentum(1.0, {0, 0, 0.75});
  const Matrix2c lr = boost_right(p);
  CHECK(std::abs(lr(0, 0) - std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(lr(1, 1) - 1.0 / std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(lr(0, 1)) == 0.0);
  CHECK(std::abs(lr(1, 0)) == 0.0);
}

TEST_CASE("closed-form boost matches the exponential oracle") {
  for (const FourMomentum& p : sample_momenta(100, 97, 1.3)) {
    const BoostParams bp = boost_params(p);
    const Matrix2c arg = 0.5 * bp.rapidity * sigma_dot(bp.axis);
    CHECK((boost_right(p) - oracles::expm(arg)).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((boost_left(p) - oracles::expm(Matrix2c(-arg))).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("boost identities") {
  for (const FourMomentum& p : sample_momenta(100, 101, 0.7)) {
    const Matrix2c lr = boost_right(p), ll = boost_left(p);
    CHECK(std::abs(lr.determinant() - 1.0) < 1e-10);
    CHECK(std::abs(ll.determinant() - 1.0) < 1e-10);
    const Matrix2c expected =
        (p.energy * Matrix2c::Identity() + sigma_dot(p.p)) / p.mass;
    CHECK((lr * ll.inverse() - expected).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((lr * lr.adjoint() - expected).cwiseAbs().maxCoeff() < 1e-10);

    const BoostParams bp = boost_params(p);
    CHECK(std::abs(p.mass * std::cosh(bp.rapidity) - p.energy) < 1e-10);
    CHECK((p.mass * std::sinh(bp.rapidity) * bp.axis - p.p).norm() < 1e-10);
  }
}
