#pragma once

#include "spinorlab/kinematics.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace spinorlab {

/// Deterministic sampling helpers.  All draws go through uniform01(), which
/// maps mt19937_64 output to [0,1) as (x >> 11) * 2^-53, so a seed pins the
/// whole stream independent of the standard library's distribution objects.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01();
  double uniform(double lo, double hi);
  double log_uniform(double lo, double hi);
  Eigen::Vector3d unit_vector();
  Complex complex_box();  // Re, Im uniform in [-1, 1]
  Matrix4c random_matrix4();
  Vector4c random_spinor4();

 private:
  std::mt19937_64 gen_;
};

/// Random bradyon momenta: direction uniform on the sphere, |p|/m
/// log-uniform in [1e-3, p_over_m_max].
std::vector<FourMomentum> sample_momenta(int count, std::uint64_t seed, double mass,
                                         double p_over_m_max = 10.0);

}  // namespace spinorlab
