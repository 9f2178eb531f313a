#pragma once

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <string>

namespace spinorlab {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Matrix8c = Eigen::Matrix<Complex, 8, 8>;
using Vector2c = Eigen::Vector2cd;
using Vector4c = Eigen::Vector4cd;
using Vector8c = Eigen::Matrix<Complex, 8, 1>;
using Matrix8d = Eigen::Matrix<double, 8, 8>;
using Vector8d = Eigen::Matrix<double, 8, 1>;

/// Pauli matrix sigma_k, k in {1,2,3}.
Matrix2c pauli(int k);

/// sigma . a for a real 3-vector a.
Matrix2c sigma_dot(const Eigen::Vector3d& a);

/// Spin-1/2 Wigner matrix, entries (-1)^{1/2+h} delta_{h',-h} in the
/// basis order (h=+1/2, h=-1/2):  [[0,-1],[1,0]].
Matrix2c wigner_theta();

struct GammaSet {
  Matrix4c g0, g1, g2, g3, g5;
  const Matrix4c& spatial(int k) const;  // k in {1,2,3}
};

/// Gamma matrices in the chiral basis with bispinor order (phi_R, phi_L),
/// metric (+,-,-,-) and g5 = diag(1,1,-1,-1).
const GammaSet& gamma_set();

/// Space-inversion matrix: the 4x4 anti-diagonal block identity.
/// Coincides with gamma^0 of this basis.
Matrix4c parity();

/// Matrix part C of the charge-conjugation operation psi -> C psi*:
/// [[0, i*Theta], [-i*Theta, 0]].
Matrix4c cc_matrix();

/// A real-linear (generally not complex-linear) operator on C^4,
/// stored as an 8x8 real matrix acting on (Re psi, Im psi).
///
/// realify(L, A) represents psi -> L psi + A conj(psi).  Purely linear
/// operators commute with mult_by_i(); purely antilinear ones anticommute.
struct RealLinearOp {
  Matrix8d m = Matrix8d::Zero();

  static RealLinearOp realify(const Matrix4c& linear, const Matrix4c& antilinear);
  static RealLinearOp identity();
  static RealLinearOp mult_by_i();

  Vector4c apply(const Vector4c& psi) const;
  Matrix4c linear_part() const;
  Matrix4c antilinear_part() const;

  RealLinearOp operator*(const RealLinearOp& rhs) const;  // composition
  RealLinearOp inverse() const;

  /// Kernel dimension over the reals, by singular-value threshold.
  int kernel_dim(double tol = 1e-9) const;
};

/// Charge conjugation S^c = C K, realified.  An involution; antilinear.
RealLinearOp charge_conjugation();

struct MajoranaTransform {
  Matrix4c u;
  Matrix4c u_dagger;
};

/// Unitary transform to the Majorana representation,
/// U = (1/2) [[1-i*Theta, 1+i*Theta], [-1-i*Theta, 1-i*Theta]].
MajoranaTransform majorana_transform();

Vector8d realified(const Vector4c& psi);
Vector4c complexified(const Vector8d& v);

/// The fixed basis / phase conventions, echoed into every report.
const std::map<std::string, std::string>& convention_fingerprint();

}  // namespace spinorlab
