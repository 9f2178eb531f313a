#include "spinorlab/matrices.hpp"

#include <stdexcept>

namespace spinorlab {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Matrix2c pauli(int k) {
  Matrix2c s;
  switch (k) {
    case 1:
      s << 0, 1, 1, 0;
      break;
    case 2:
      s << 0, -kI, kI, 0;
      break;
    case 3:
      s << 1, 0, 0, -1;
      break;
    default:
      throw std::invalid_argument("pauli: index must be 1, 2 or 3");
  }
  return s;
}

Matrix2c sigma_dot(const Eigen::Vector3d& a) {
  return a.x() * pauli(1) + a.y() * pauli(2) + a.z() * pauli(3);
}

Matrix2c wigner_theta() {
  Matrix2c t;
  t << 0, -1, 1, 0;
  return t;
}

const Matrix4c& GammaSet::spatial(int k) const {
  switch (k) {
    case 1:
      return g1;
    case 2:
      return g2;
    case 3:
      return g3;
    default:
      throw std::invalid_argument("GammaSet::spatial: index must be 1, 2 or 3");
  }
}

const GammaSet& gamma_set() {
  static const GammaSet set = [] {
    GammaSet g;
    const Matrix2c id2 = Matrix2c::Identity();
    g.g0.setZero();
    g.g0.block<2, 2>(0, 2) = id2;
    g.g0.block<2, 2>(2, 0) = id2;
    Matrix4c* spatial[3] = {&g.g1, &g.g2, &g.g3};
    for (int k = 1; k <= 3; ++k) {
      spatial[k - 1]->setZero();
      spatial[k - 1]->block<2, 2>(0, 2) = -pauli(k);
      spatial[k - 1]->block<2, 2>(2, 0) = pauli(k);
    }
    g.g5 = Matrix4c::Zero();
    g.g5.diagonal() << 1, 1, -1, -1;
    return g;
  }();
  return set;
}

Matrix4c parity() { return gamma_set().g0; }

Matrix4c cc_matrix() {
  Matrix4c c = Matrix4c::Zero();
  const Matrix2c t = wigner_theta();
  c.block<2, 2>(0, 2) = kI * t;
  c.block<2, 2>(2, 0) = -kI * t;
  return c;
}

RealLinearOp RealLinearOp::realify(const Matrix4c& linear, const Matrix4c& antilinear) {
  RealLinearOp op;
  const Eigen::Matrix4d lr = linear.real(), li = linear.imag();
  const Eigen::Matrix4d ar = antilinear.real(), ai = antilinear.imag();
  op.m.block<4, 4>(0, 0) = lr + ar;
  op.m.block<4, 4>(0, 4) = -li + ai;
  op.m.block<4, 4>(4, 0) = li + ai;
  op.m.block<4, 4>(4, 4) = lr - ar;
  return op;
}

RealLinearOp RealLinearOp::identity() {
  return realify(Matrix4c::Identity(), Matrix4c::Zero());
}

RealLinearOp RealLinearOp::mult_by_i() {
  return realify(kI * Matrix4c::Identity(), Matrix4c::Zero());
}

Vector4c RealLinearOp::apply(const Vector4c& psi) const {
  return complexified(m * realified(psi));
}

Matrix4c RealLinearOp::linear_part() const {
  const Eigen::Matrix4d a = m.block<4, 4>(0, 0), b = m.block<4, 4>(0, 4);
  const Eigen::Matrix4d c = m.block<4, 4>(4, 0), d = m.block<4, 4>(4, 4);
  return 0.5 * ((a + d).cast<Complex>() + kI * (c - b).cast<Complex>());
}

Matrix4c RealLinearOp::antilinear_part() const {
  const Eigen::Matrix4d a = m.block<4, 4>(0, 0), b = m.block<4, 4>(0, 4);
  const Eigen::Matrix4d c = m.block<4, 4>(4, 0), d = m.block<4, 4>(4, 4);
  return 0.5 * ((a - d).cast<Complex>() + kI * (c + b).cast<Complex>());
}

RealLinearOp RealLinearOp::operator*(const RealLinearOp& rhs) const {
  RealLinearOp out;
  out.m = m * rhs.m;
  return out;
}

RealLinearOp RealLinearOp::inverse() const {
  RealLinearOp out;
  out.m = m.inverse();
  return out;
}

int RealLinearOp::kernel_dim(double tol) const {
  Eigen::JacobiSVD<Matrix8d> svd(m);
  const auto& sv = svd.singularValues();
  const double scale = sv(0);
  if (scale <= tol) return 8;
  int dim = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) < tol * scale) ++dim;
  return dim;
}

RealLinearOp charge_conjugation() {
  return RealLinearOp::realify(Matrix4c::Zero(), cc_matrix());
}

MajoranaTransform majorana_transform() {
  const Matrix2c it = kI * wigner_theta();
  const Matrix2c id2 = Matrix2c::Identity();
  MajoranaTransform t;
  t.u.block<2, 2>(0, 0) = id2 - it;
  t.u.block<2, 2>(0, 2) = id2 + it;
  t.u.block<2, 2>(2, 0) = -id2 - it;
  t.u.block<2, 2>(2, 2) = id2 - it;
  t.u *= 0.5;
  t.u_dagger.block<2, 2>(0, 0) = id2 - it;
  t.u_dagger.block<2, 2>(0, 2) = -id2 - it;
  t.u_dagger.block<2, 2>(2, 0) = id2 + it;
  t.u_dagger.block<2, 2>(2, 2) = id2 - it;
  t.u_dagger *= 0.5;
  return t;
}

Vector8d realified(const Vector4c& psi) {
  Vector8d v;
  v << psi.real(), psi.imag();
  return v;
}

Vector4c complexified(const Vector8d& v) {
  return v.head<4>().cast<Complex>() + kI * v.tail<4>().cast<Complex>();
}

const std::map<std::string, std::string>& convention_fingerprint() {
  static const std::map<std::string, std::string> fp = {
      {"basis", "chiral, bispinor order (phi_R, phi_L)"},
      {"metric", "(+,-,-,-)"},
      {"gamma5", "diag(+1,+1,-1,-1)"},
      {"wigner_theta", "[[0,-1],[1,0]]"},
      {"charge_conjugation", "[[0, i Theta],[-i Theta, 0]] K"},
      {"frequency", "e^{-ip.x} positive"},
      {"normalization", "unit-norm rest spinors"},
  };
  return fp;
}

}  // namespace spinorlab
