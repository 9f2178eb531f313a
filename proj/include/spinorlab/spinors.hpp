#pragma once

#include "spinorlab/kinematics.hpp"
#include "spinorlab/matrices.hpp"

namespace spinorlab {

enum class Chirality { Left, Right };
enum class Helicity { Up, Down };  // h = +1/2, -1/2
enum class ConjugacyKind { S, A };  // self / anti-self charge conjugate
enum class Conjugacy { SelfConjugate, AntiSelfConjugate, Neither };

inline double half(Helicity h) { return h == Helicity::Up ? 0.5 : -0.5; }
inline Helicity opposite(Helicity h) {
  return h == Helicity::Up ? Helicity::Down : Helicity::Up;
}

struct WeylSpinor {
  Vector2c components = Vector2c::Zero();
  Helicity h = Helicity::Up;
  Chirality chirality = Chirality::Left;
  double theta = 0.0;    // polar angle of the quantization axis
  double azimuth = 0.0;
};

/// Unit-norm rest-frame helicity eigenspinor of sigma.n(theta, azimuth),
/// half-angle phase convention:
///   h=+1/2: ( cos(t/2) e^{-i az/2},  sin(t/2) e^{+i az/2} )
///   h=-1/2: ( -sin(t/2) e^{-i az/2}, cos(t/2) e^{+i az/2} )
WeylSpinor rest_spinor(Helicity h, double theta, double azimuth, Chirality c);

/// diag(e^{i azimuth}, e^{-i azimuth}); under the half-angle convention
/// Xi^{-1} conj(phi^h) = phi^h identically.
Matrix2c xi_matrix(double azimuth);

struct RBParams {
  double a = 0.0;
  double b = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
};

/// Norm of
///   phi^h - a (-1)^{1/2-h} e^{i(t1+t2)} Theta conj(phi^{-h})
///         - b e^{2i t_h} Xi^{-1} conj(phi^h)
/// on rest spinors, with t_up = theta1 and t_down = theta2.
double ryder_burgard_residual(const RBParams& params, Helicity h, double theta,
                              double azimuth);

/// Apply the chirality-matched boost to a rest spinor.
WeylSpinor boost_weyl(const WeylSpinor& s, const FourMomentum& p);

enum class BispinorKind { DiracU, DiracV, LambdaS, LambdaA, RhoS, RhoA };

struct Bispinor {
  Vector4c components = Vector4c::Zero();
  BispinorKind kind = BispinorKind::DiracU;
  Helicity label = Helicity::Up;  // helicity for u/v, chiral helicity for lambda/rho
  Complex zeta = Complex(0, 0);   // phase factor for lambda/rho, 0 otherwise
  FourMomentum momentum;
  double theta = 0.0;
  double azimuth = 0.0;
};

struct DiracPair {
  Bispinor u;
  Bispinor v;
};

/// Dirac 4-spinors u = (phi_R(p), phi_L(p)) and v = g5 u, with the left and
/// right rest spinors identified (the helicity-interchange relations).
DiracPair make_dirac(Helicity h, const FourMomentum& p, double theta, double azimuth);

/// Second-type spinor lambda_eta = ( zeta Theta conj(phi_L(p)), phi_L(p) ),
/// built from the helicity -eta left spinor; zeta = +i (S), -i (A).
Bispinor make_lambda(Helicity eta, ConjugacyKind kind, const FourMomentum& p,
                     double theta, double azimuth);

/// rho_eta = ( phi_R(p), conj(zeta Theta) conj(phi_R(p)) ), mirror construction.
Bispinor make_rho(Helicity eta, ConjugacyKind kind, const FourMomentum& p,
                  double theta, double azimuth);

/// Apply charge conjugation and compare; throws on a (near-)zero spinor.
Conjugacy classify_conjugacy(const Vector4c& psi, double tol = 1e-10);
Conjugacy classify_conjugacy(const Bispinor& b, double tol = 1e-10);

/// Polar/azimuth angles of the momentum direction (z-axis at rest).
std::pair<double, double> polar_angles(const Eigen::Vector3d& p);

}  // namespace spinorlab
