#include "spinorlab/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace spinorlab {

namespace {
constexpr double kMaxMomentumOverMass = 1e6;
}

FourMomentum FourMomentum::from_mass_momentum(double mass, const Eigen::Vector3d& p) {
  if (!(mass > 0.0) || !std::isfinite(mass))
    throw std::invalid_argument("FourMomentum: mass must be positive and finite");
  if (!p.allFinite()) throw std::invalid_argument("FourMomentum: momentum must be finite");
  if (p.norm() > kMaxMomentumOverMass * mass)
    throw std::domain_error("FourMomentum: |p|/m exceeds 1e6, rapidity out of range");
  FourMomentum out;
  out.mass = mass;
  out.p = p;
  out.energy = std::sqrt(mass * mass + p.squaredNorm());
  return out;
}

FourMomentum FourMomentum::rest(double mass) {
  return from_mass_momentum(mass, Eigen::Vector3d::Zero());
}

BoostParams boost_params(const FourMomentum& p) {
  BoostParams out;
  out.rapidity = std::asinh(p.p_norm() / p.mass);
  out.axis = p.p_norm() > 0.0 ? Eigen::Vector3d(p.p / p.p_norm())
                              : Eigen::Vector3d::UnitZ();
  return out;
}

namespace {

Matrix2c half_angle_boost(const FourMomentum& p, double sign) {
  const double ch = std::sqrt((p.energy / p.mass + 1.0) / 2.0);
  const double sh = (p.p_norm() / p.mass) / (2.0 * ch);
  const Eigen::Vector3d n = p.p_norm() > 0.0 ? Eigen::Vector3d(p.p / p.p_norm())
                                             : Eigen::Vector3d::UnitZ();
  return ch * Matrix2c::Identity() + sign * sh * sigma_dot(n);
}

}  // namespace

Matrix2c boost_right(const FourMomentum& p) { return half_angle_boost(p, +1.0); }

Matrix2c boost_left(const FourMomentum& p) { return half_angle_boost(p, -1.0); }

}  // namespace spinorlab
