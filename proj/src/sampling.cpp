#include "spinorlab/sampling.hpp"

#include <cmath>

namespace spinorlab {

double Rng::uniform01() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

double Rng::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

Eigen::Vector3d Rng::unit_vector() {
  const double cos_theta = uniform(-1.0, 1.0);
  const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
  const double az = uniform(0.0, 2.0 * M_PI);
  return {sin_theta * std::cos(az), sin_theta * std::sin(az), cos_theta};
}

Complex Rng::complex_box() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

Matrix4c Rng::random_matrix4() {
  Matrix4c m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = complex_box();
  return m;
}

Vector4c Rng::random_spinor4() {
  Vector4c v;
  for (int r = 0; r < 4; ++r) v(r) = complex_box();
  return v;
}

std::vector<FourMomentum> sample_momenta(int count, std::uint64_t seed, double mass,
                                         double p_over_m_max) {
  Rng rng(seed);
  std::vector<FourMomentum> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double p_over_m = rng.log_uniform(1e-3, p_over_m_max);
    out.push_back(
        FourMomentum::from_mass_momentum(mass, mass * p_over_m * rng.unit_vector()));
  }
  return out;
}

}  // namespace spinorlab
