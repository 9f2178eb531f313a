#pragma once

#include "spinorlab/matrices.hpp"

namespace spinorlab {

/// On-shell massive (bradyon) momentum in mass units.
struct FourMomentum {
  double energy = 1.0;
  Eigen::Vector3d p = Eigen::Vector3d::Zero();
  double mass = 1.0;

  /// E is computed from the mass-shell relation.  Requires m > 0 and
  /// |p|/m <= 1e6 (rapidity guard).
  static FourMomentum from_mass_momentum(double mass, const Eigen::Vector3d& p);
  static FourMomentum rest(double mass);

  double p_norm() const { return p.norm(); }
  double invariant_mass_sq() const { return energy * energy - p.squaredNorm(); }
};

struct BoostParams {
  double rapidity = 0.0;                              // cosh = E/m, sinh = |p|/m
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();    // z by convention at rest
};

BoostParams boost_params(const FourMomentum& p);

/// Right-handed boost exp(+sigma.n phi/2) = cosh(phi/2) + sigma.n sinh(phi/2).
Matrix2c boost_right(const FourMomentum& p);

/// Left-handed boost exp(-sigma.n phi/2); equals boost_right(p)^{-1}.
Matrix2c boost_left(const FourMomentum& p);

}  // namespace spinorlab
