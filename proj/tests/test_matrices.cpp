#include "spinorlab/matrices.hpp"
#include "spinorlab/sampling.hpp"

#include <doctest.h>

using namespace spinorlab;

namespace {
constexpr Complex kI{0.0, 1.0};

double max_abs(const Matrix4c& m) { return m.cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("wigner operator entries and involution") {
  const Matrix2c t = wigner_theta();
  CHECK(t(0, 0) == Complex(0, 0));
  CHECK(t(0, 1) == Complex(-1, 0));
  CHECK(t(1, 0) == Complex(1, 0));
  CHECK(t(1, 1) == Complex(0, 0));
  CHECK((t * t + Matrix2c::Identity()).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("wigner operator conjugates sigma.a to -conj(sigma.a)") {
  const Matrix2c t = wigner_theta();
  const Eigen::Vector3d fixed(1, 2, 3);
  CHECK((t * sigma_dot(fixed) * t.inverse() + sigma_dot(fixed).conjugate())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const Eigen::Vector3d a(rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3));
    CHECK((t * sigma_dot(a) * t.inverse() + sigma_dot(a).conjugate())
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("gamma set satisfies the Clifford relations") {
  const GammaSet& g = gamma_set();
  const Matrix4c* gam[4] = {&g.g0, &g.g1, &g.g2, &g.g3};
  const double metric[4] = {1.0, -1.0, -1.0, -1.0};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Matrix4c anti = (*gam[mu]) * (*gam[nu]) + (*gam[nu]) * (*gam[mu]);
      const double expected = mu == nu ? 2.0 * metric[mu] : 0.0;
      CHECK(max_abs(Matrix4c(anti - expected * Matrix4c::Identity())) < 1e-12);
    }
  CHECK(max_abs(Matrix4c(g.g5 * g.g5 - Matrix4c::Identity())) < 1e-12);
  for (int mu = 0; mu < 4; ++mu)
    CHECK(max_abs(Matrix4c(g.g5 * (*gam[mu]) + (*gam[mu]) * g.g5)) < 1e-12);
  // g5 = i g0 g1 g2 g3 in this basis
  CHECK(max_abs(Matrix4c(kI * g.g0 * g.g1 * g.g2 * g.g3 - g.g5)) < 1e-12);
}

TEST_CASE("parity is the anti-diagonal block identity") {
  CHECK(max_abs(Matrix4c(parity() * parity() - Matrix4c::Identity())) < 1e-15);
  CHECK(max_abs(Matrix4c(parity() - gamma_set().g0)) == 0.0);
  Rng rng(3);
  const Vector4c psi = rng.random_spinor4();
  const Vector4c swapped = parity() * psi;
  CHECK((swapped.head<2>() - psi.tail<2>()).norm() == doctest::Approx(0.0));
  CHECK((swapped.tail<2>() - psi.head<2>()).norm() == doctest::Approx(0.0));
}

TEST_CASE("realify basics") {
  CHECK((RealLinearOp::identity().m - Matrix8d::Identity()).cwiseAbs().maxCoeff() == 0.0);

  const RealLinearOp conj_op =
      RealLinearOp::realify(Matrix4c::Zero(), Matrix4c::Identity());
  Vector4c psi = Vector4c::Zero();
  psi(0) = Complex(1, 2);
  const Vector4c conj = conj_op.apply(psi);
  CHECK(conj(0) == Complex(1, -2));
  CHECK(conj.tail<3>().norm() == 0.0);
}

TEST_CASE("realify composition and part extraction") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const Matrix4c a = rng.random_matrix4(), b = rng.random_matrix4();
    const Matrix4c c = rng.random_matrix4(), d = rng.random_matrix4();
    const RealLinearOp lhs = RealLinearOp::realify(a, b) * RealLinearOp::realify(c, d);

    // Composition law checked against direct application on random spinors.
    const Vector4c psi = rng.random_spinor4();
    const Vector4c inner = c * psi + d * psi.conjugate();
    const Vector4c direct = a * inner + b * inner.conjugate();
    CHECK((lhs.apply(psi) - direct).norm() < 1e-12);

    const RealLinearOp rhs = RealLinearOp::realify(a * c + b * d.conjugate(),
                                                   a * d + b * c.conjugate());
    CHECK((lhs.m - rhs.m).cwiseAbs().maxCoeff() < 1e-12);

    CHECK(max_abs(Matrix4c(RealLinearOp::realify(a, b).linear_part() - a)) < 1e-13);
    CHECK(max_abs(Matrix4c(RealLinearOp::realify(a, b).antilinear_part() - b)) < 1e-13);
  }
}

TEST_CASE("linear ops commute with i, antilinear ops anticommute") {
  Rng rng(13);
  const RealLinearOp j = RealLinearOp::mult_by_i();
  for (int i = 0; i < 20; ++i) {
    const RealLinearOp lin = RealLinearOp::realify(rng.random_matrix4(), Matrix4c::Zero());
    const RealLinearOp anti = RealLinearOp::realify(Matrix4c::Zero(), rng.random_matrix4());
    CHECK(((lin * j).m - (j * lin).m).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(((anti * j).m + (j * anti).m).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("charge conjugation is an antilinear involution") {
  const RealLinearOp cc = charge_conjugation();
  const RealLinearOp j = RealLinearOp::mult_by_i();
  CHECK(((cc * j).m + (j * cc).m).cwiseAbs().maxCoeff() < 1e-12);
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const Vector4c psi = rng.random_spinor4();
    CHECK((cc.apply(cc.apply(psi)) - psi).norm() < 1e-12);
  }
}

TEST_CASE("majorana transform is unitary and matches its printed adjoint") {
  const MajoranaTransform mt = majorana_transform();
  CHECK(max_abs(Matrix4c(mt.u * mt.u_dagger - Matrix4c::Identity())) < 1e-12);
  CHECK(max_abs(Matrix4c(mt.u_dagger * mt.u - Matrix4c::Identity())) < 1e-12);
  CHECK(max_abs(Matrix4c(mt.u_dagger - mt.u.adjoint())) < 1e-15);

  Rng rng(19);
  for (int i = 0; i < 10; ++i) {
    const Vector4c psi = rng.random_spinor4();
    CHECK((mt.u_dagger * (mt.u * psi) - psi).norm() < 1e-12);
  }
}

TEST_CASE("majorana representation realness") {
  const MajoranaTransform mt = majorana_transform();
  const GammaSet& g = gamma_set();
  for (const Matrix4c* gam : {&g.g0, &g.g1, &g.g2, &g.g3, &g.g5}) {
    const Matrix4c mr = mt.u * (*gam) * mt.u_dagger;
    CHECK(mr.real().cwiseAbs().maxCoeff() < 1e-14);
  }
  // C K becomes -K: U C U^T = -1.
  const Matrix4c ucu = mt.u * cc_matrix() * mt.u.transpose();
  CHECK(max_abs(Matrix4c(ucu + Matrix4c::Identity())) < 1e-14);
}

TEST_CASE("kernel dimension of realified operators") {
  CHECK(RealLinearOp::identity().kernel_dim() == 0);
  const RealLinearOp zero = RealLinearOp::realify(Matrix4c::Zero(), Matrix4c::Zero());
  CHECK(zero.kernel_dim() == 8);
}
