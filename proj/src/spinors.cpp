#include "spinorlab/spinors.hpp"

#include <cmath>
#include <stdexcept>

namespace spinorlab {

namespace {
constexpr Complex kI{0.0, 1.0};

// (-1)^{1/2 - h}
double sign_half_minus(Helicity h) { return h == Helicity::Up ? 1.0 : -1.0; }
}  // namespace

WeylSpinor rest_spinor(Helicity h, double theta, double azimuth, Chirality c) {
  WeylSpinor s;
  s.h = h;
  s.chirality = c;
  s.theta = theta;
  s.azimuth = azimuth;
  const Complex em = std::exp(-kI * (azimuth / 2.0));
  const Complex ep = std::exp(kI * (azimuth / 2.0));
  const double ct = std::cos(theta / 2.0), st = std::sin(theta / 2.0);
  if (h == Helicity::Up)
    s.components << ct * em, st * ep;
  else
    s.components << -st * em, ct * ep;
  return s;
}

Matrix2c xi_matrix(double azimuth) {
  Matrix2c xi = Matrix2c::Zero();
  xi(0, 0) = std::exp(kI * azimuth);
  xi(1, 1) = std::exp(-kI * azimuth);
  return xi;
}

double ryder_burgard_residual(const RBParams& params, Helicity h, double theta,
                              double azimuth) {
  const Vector2c phi_h = rest_spinor(h, theta, azimuth, Chirality::Left).components;
  const Vector2c phi_mh =
      rest_spinor(opposite(h), theta, azimuth, Chirality::Left).components;
  const double theta_h = h == Helicity::Up ? params.theta1 : params.theta2;
  const Vector2c wigner_term = params.a * sign_half_minus(h) *
                               std::exp(kI * (params.theta1 + params.theta2)) *
                               (wigner_theta() * phi_mh.conjugate());
  const Vector2c xi_term = params.b * std::exp(2.0 * kI * theta_h) *
                           (xi_matrix(azimuth).inverse() * phi_h.conjugate());
  return (phi_h - wigner_term - xi_term).norm();
}

WeylSpinor boost_weyl(const WeylSpinor& s, const FourMomentum& p) {
  WeylSpinor out = s;
  const Matrix2c lambda =
      s.chirality == Chirality::Right ? boost_right(p) : boost_left(p);
  out.components = lambda * s.components;
  return out;
}

DiracPair make_dirac(Helicity h, const FourMomentum& p, double theta, double azimuth) {
  // One common rest spinor for both chiralities; this is what the
  // helicity-interchange relations amount to under the half-angle convention.
  const Vector2c rest = rest_spinor(h, theta, azimuth, Chirality::Left).components;
  DiracPair pair;
  pair.u.kind = BispinorKind::DiracU;
  pair.u.label = h;
  pair.u.momentum = p;
  pair.u.theta = theta;
  pair.u.azimuth = azimuth;
  pair.u.components.head<2>() = boost_right(p) * rest;
  pair.u.components.tail<2>() = boost_left(p) * rest;
  pair.v = pair.u;
  pair.v.kind = BispinorKind::DiracV;
  pair.v.components = gamma_set().g5 * pair.u.components;
  return pair;
}

Bispinor make_lambda(Helicity eta, ConjugacyKind kind, const FourMomentum& p,
                     double theta, double azimuth) {
  Bispinor out;
  out.kind = kind == ConjugacyKind::S ? BispinorKind::LambdaS : BispinorKind::LambdaA;
  out.label = eta;
  out.zeta = kind == ConjugacyKind::S ? kI : -kI;
  out.momentum = p;
  out.theta = theta;
  out.azimuth = azimuth;
  const Vector2c phi_l =
      boost_left(p) *
      rest_spinor(opposite(eta), theta, azimuth, Chirality::Left).components;
  out.components.head<2>() = out.zeta * (wigner_theta() * phi_l.conjugate());
  out.components.tail<2>() = phi_l;
  return out;
}

Bispinor make_rho(Helicity eta, ConjugacyKind kind, const FourMomentum& p,
                  double theta, double azimuth) {
  Bispinor out;
  out.kind = kind == ConjugacyKind::S ? BispinorKind::RhoS : BispinorKind::RhoA;
  out.label = eta;
  out.zeta = kind == ConjugacyKind::S ? kI : -kI;
  out.momentum = p;
  out.theta = theta;
  out.azimuth = azimuth;
  const Vector2c phi_r =
      boost_right(p) *
      rest_spinor(opposite(eta), theta, azimuth, Chirality::Right).components;
  out.components.head<2>() = phi_r;
  out.components.tail<2>() =
      std::conj(out.zeta) * (wigner_theta() * phi_r.conjugate());
  return out;
}

Conjugacy classify_conjugacy(const Vector4c& psi, double tol) {
  const double n = psi.norm();
  if (!(n > 1e-14))
    throw std::invalid_argument("classify_conjugacy: degenerate (zero) spinor");
  const Vector4c c = charge_conjugation().apply(psi);
  if ((c - psi).norm() <= tol * n) return Conjugacy::SelfConjugate;
  if ((c + psi).norm() <= tol * n) return Conjugacy::AntiSelfConjugate;
  return Conjugacy::Neither;
}

Conjugacy classify_conjugacy(const Bispinor& b, double tol) {
  return classify_conjugacy(b.components, tol);
}

std::pair<double, double> polar_angles(const Eigen::Vector3d& p) {
  const double rho = std::hypot(p.x(), p.y());
  if (rho == 0.0 && p.z() == 0.0) return {0.0, 0.0};
  const double az = rho == 0.0 ? 0.0 : std::atan2(p.y(), p.x());
  return {std::atan2(rho, p.z()), az};
}

}  // namespace spinorlab
