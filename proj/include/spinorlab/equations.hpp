#pragma once

#include "spinorlab/kinematics.hpp"
#include "spinorlab/matrices.hpp"
#include "spinorlab/spinors.hpp"

#include <array>
#include <vector>

namespace spinorlab {

struct EquationParams {
  double a = 1.0;
  double b = 2.0;
  double mass = 1.0;
};

struct GeneralizedParams {
  double a = 1.0;
  double b = 2.0;
  double alpha1 = 1.5707963267948966;  // pi/2
  double alpha2 = 0.0;
  double beta1 = 0.0;
  double beta2 = 1.0;
  double mass = 1.0;
};

enum class Frequency { Positive, Negative };  // e^{-ip.x} / e^{+ip.x}

/// Momentum-space Dirac matrix phat = gamma^mu p_mu; phat^2 = p^2.
Matrix4c dirac_op(const FourMomentum& p);
Matrix4c dirac_op(double energy, const Eigen::Vector3d& p);

/// Residual block norms of the coupled lambda equations
///   i a (phat/m) lambda_up   - (b C K -+ 1) lambda_down = 0
///   i a (phat/m) lambda_down + (b C K -+ 1) lambda_up   = 0
/// (upper sign S, lower sign A), evaluated on helicity-basis spinors.
/// Returns {eq1 R-block, eq1 L-block, eq2 R-block, eq2 L-block}.
/// All four vanish on the branch a = b - 1.
std::array<double, 4> lambda_equation_residuals(const FourMomentum& p,
                                                const EquationParams& params,
                                                ConjugacyKind kind);

/// Realified single-frequency operator a (+-phat)/m + b C K - 1.
RealLinearOp first_order_op(const FourMomentum& p, const EquationParams& params,
                            Frequency freq);

/// Complex 8x8 operator coupling the e^{-ip.x} and e^{+ip.x} coefficients of
/// a field annihilated by [a i gamma.d /m + b C K - 1]; acts on
/// (psi_+, conj(psi_-)).  Singular exactly at p^2 = m^2 (b -+ 1)^2 / a^2.
Matrix8c frequency_paired_op(const FourMomentum& p, const EquationParams& params);

struct MajoranaDecoupleReport {
  double conjugation_deviation = 0.0;   // U-conjugated op vs realify(+-a phat_MR/m - 1, -b)
  double realness_deviation = 0.0;      // Re(phat_MR) and Im of the -b scalar
  double decoupling_deviation = 0.0;    // split into [D-b] psi1 = 0, [D+b] psi2 = 0
  double coupled_form_deviation = 0.0;  // (phi,chi) system [[D,-b],[-b,D]]
  double frequency_asymmetry = 0.0;
  bool dirac_degenerate_pair = false;   // b = 0: two uncoupled Dirac systems
  double max_deviation() const;
};

/// Verify, momentum by momentum, that conjugating first_order_op by the
/// Majorana transform turns the antilinear part into the real scalar -b and
/// that the real-field sector system decouples and recouples as
/// [D - 1 ... ] phi = b chi with D = a phat_MR / m - 1.  Requires a != 0.
MajoranaDecoupleReport majorana_decouple(const EquationParams& params,
                                         const std::vector<FourMomentum>& momenta);
MajoranaDecoupleReport majorana_decouple(const EquationParams& params);

struct BarutCoefficients {
  double alpha2 = 0.0;  // a / 2m
  double kappa = 0.0;   // m (1 - b^2) / 2a
};

/// Coefficients of the second-order operator obtained by squaring the
/// coupled first-order system.  Requires a != 0, m > 0.
BarutCoefficients barut_identification(const EquationParams& params);

/// Max entrywise deviation of (-m/2a) [ (a phat/m - 1)^2 - b^2 ] from
/// phat - alpha2 p^2 - kappa; zero identically.
double barut_factorization_check(const FourMomentum& p, const EquationParams& params);

struct DispersionResult {
  std::vector<double> roots_p2;        // mass^2 units
  std::vector<int> multiplicities;     // p0-root count per p^2 value, sums to 4
  bool massless_degenerate = false;
};

/// det(a phat/m + (b-1)) = (a^2 p^2/m^2 - (b-1)^2)^2:
/// single root p^2 = m^2 (b-1)^2 / a^2, multiplicity 4.
DispersionResult dispersion_roots(const EquationParams& params);

/// det(a phat/m + i beta1 g5 + e^{i alpha2} beta2), real for beta2 sin(alpha2)=0:
/// single root p^2 = m^2 (beta1^2 + beta2^2) / a^2 for every alpha1.
DispersionResult dispersion_roots(const GeneralizedParams& params);

/// | (b-1)^2 - a^2 p^2 / m^2 | on a plane wave (d^2 -> -p^2).
double klein_gordon_residual(double p_squared, const EquationParams& params);

struct SokolikReport {
  double conjugation_deviation = 0.0;  // gamma5-equation transported to the MR
  double pair_form_deviation = 0.0;    // the two real equations in (psi1, psi2)
  double closure_deviation = 0.0;      // off-diagonal blocks in the (phi, chi) basis
  double kg_identity_deviation = 0.0;  // D_phi^2 = (a^2 p^2/m^2 - (b-1)^2) 1
  double frequency_asymmetry = 0.0;
  double max_deviation() const;
};

/// Branch a = 1 - b of the gamma5 equation [i a gamma.d/m - (b-1) g5 C K]:
/// verifies the real coupled pair, its closure on phi = Psi1 + Psi2 alone,
/// and the second-order reduction.  Throws on branch mismatch.
SokolikReport sokolik_reduction_check(const EquationParams& params,
                                      const std::vector<FourMomentum>& momenta);
SokolikReport sokolik_reduction_check(const EquationParams& params);

struct CompatibilityResult {
  bool consistent = false;
  int kernel_dim = 0;
  double constraint_gap = 0.0;     // | beta1^2 + beta2^2 - (b-1)^2 |
  double solvability = 0.0;        // sigma_min / sigma_max of the mode system
  double alt_reading_solvability = 0.0;  // daggered rows kept un-conjugated
  bool readings_agree = true;
};

/// Mode-constraint system on (c_up, c_down, d_up, d_down) with the daggered
/// pair rewritten by conjugation.
Eigen::Matrix4cd mode_constraint_matrix(const GeneralizedParams& params);

/// Nontrivial-solution analysis of the mode constraints.  Consistent exactly
/// when e^{i alpha2} beta2 is real and beta1^2 + beta2^2 = (b-1)^2.
CompatibilityResult compatibility_solve(const GeneralizedParams& params,
                                        double tol = 1e-10);

/// Closed-form compatibility condition (the region the solver must carve out).
bool compatibility_condition(const GeneralizedParams& params, double gap_tol = 1e-8);

struct DiracDegenerationReport {
  bool consistent = false;
  int kernel_dim = 0;
  int c_pairing = 0;              // c_up = (c_pairing) i c_down on the kernel
  int d_pairing = 0;              // d_up = (d_pairing) i d_down
  double pairing_deviation = 0.0;
};

/// beta1 = 0 limit: kernel vectors phase-lock c_up to c_down and d_up to
/// d_down with opposite signs, swapping between alpha2 = 0 and pi.
DiracDegenerationReport dirac_degeneration(const GeneralizedParams& params,
                                           double tol = 1e-10);

}  // namespace spinorlab
