#include "spinorlab/equations.hpp"

#include "spinorlab/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinorlab {

namespace {

constexpr Complex kI{0.0, 1.0};

double max_abs(const Matrix4c& m) { return m.cwiseAbs().maxCoeff(); }
double max_abs(const Matrix8c& m) { return m.cwiseAbs().maxCoeff(); }
double max_abs(const Matrix8d& m) { return m.cwiseAbs().maxCoeff(); }

Matrix8c block2(const Matrix4c& a00, const Matrix4c& a01, const Matrix4c& a10,
                const Matrix4c& a11) {
  Matrix8c m;
  m.block<4, 4>(0, 0) = a00;
  m.block<4, 4>(0, 4) = a01;
  m.block<4, 4>(4, 0) = a10;
  m.block<4, 4>(4, 4) = a11;
  return m;
}

void require_nonzero_a(double a) {
  if (std::abs(a) < 1e-14)
    throw std::domain_error("equation parameter a must be nonzero");
}

std::vector<FourMomentum> default_momenta(double mass) {
  return sample_momenta(20, 1234567u, mass, 10.0);
}

}  // namespace

Matrix4c dirac_op(double energy, const Eigen::Vector3d& p) {
  const GammaSet& g = gamma_set();
  return energy * g.g0 - p.x() * g.g1 - p.y() * g.g2 - p.z() * g.g3;
}

Matrix4c dirac_op(const FourMomentum& p) { return dirac_op(p.energy, p.p); }

std::array<double, 4> lambda_equation_residuals(const FourMomentum& p,
                                                const EquationParams& params,
                                                ConjugacyKind kind) {
  const auto [theta, azimuth] = polar_angles(p.p);
  const Vector4c lam_up = make_lambda(Helicity::Up, kind, p, theta, azimuth).components;
  const Vector4c lam_dn =
      make_lambda(Helicity::Down, kind, p, theta, azimuth).components;

  // (b C K - 1) for S, (b C K + 1) for A.
  const double unit_sign = kind == ConjugacyKind::S ? -1.0 : 1.0;
  const RealLinearOp ck = RealLinearOp::realify(unit_sign * Matrix4c::Identity(),
                                                params.b * cc_matrix());
  const Matrix4c phat_over_m = dirac_op(p) / params.mass;

  const Vector4c r1 = kI * params.a * (phat_over_m * lam_up) - ck.apply(lam_dn);
  const Vector4c r2 = kI * params.a * (phat_over_m * lam_dn) + ck.apply(lam_up);
  return {r1.head<2>().norm(), r1.tail<2>().norm(), r2.head<2>().norm(),
          r2.tail<2>().norm()};
}

RealLinearOp first_order_op(const FourMomentum& p, const EquationParams& params,
                            Frequency freq) {
  const double sign = freq == Frequency::Positive ? 1.0 : -1.0;
  const Matrix4c linear =
      sign * params.a * dirac_op(p) / params.mass - Matrix4c::Identity();
  return RealLinearOp::realify(linear, params.b * cc_matrix());
}

Matrix8c frequency_paired_op(const FourMomentum& p, const EquationParams& params) {
  const Matrix4c phat = dirac_op(p);
  const Matrix4c c = cc_matrix();
  const Matrix4c id = Matrix4c::Identity();
  const Matrix4c dp = params.a * phat / params.mass - id;
  const Matrix4c dm = -params.a * phat.conjugate() / params.mass - id;
  return block2(dp, params.b * c, params.b * c.conjugate(), dm);
}

double MajoranaDecoupleReport::max_deviation() const {
  return std::max({conjugation_deviation, realness_deviation, decoupling_deviation,
                   coupled_form_deviation, frequency_asymmetry});
}

MajoranaDecoupleReport majorana_decouple(const EquationParams& params,
                                         const std::vector<FourMomentum>& momenta) {
  require_nonzero_a(params.a);
  const MajoranaTransform mt = majorana_transform();
  const RealLinearOp w = RealLinearOp::realify(mt.u, Matrix4c::Zero());
  const RealLinearOp wi = RealLinearOp::realify(mt.u_dagger, Matrix4c::Zero());
  const Matrix4c id = Matrix4c::Identity();
  const Matrix4c zero = Matrix4c::Zero();
  const Matrix4c minus_b = -params.b * id;

  MajoranaDecoupleReport rep;
  rep.dirac_degenerate_pair = std::abs(params.b) < 1e-14;

  for (const FourMomentum& p : momenta) {
    const Matrix4c phat_mr = mt.u * dirac_op(p) * mt.u_dagger;
    std::array<double, 2> freq_dev{0.0, 0.0};
    std::array<Matrix4c, 2> lin_mr;

    for (int f = 0; f < 2; ++f) {
      const double sign = f == 0 ? 1.0 : -1.0;
      const Frequency freq = f == 0 ? Frequency::Positive : Frequency::Negative;
      const RealLinearOp o_mr = w * first_order_op(p, params, freq) * wi;
      const Matrix4c expected_lin = sign * params.a * phat_mr / params.mass - id;
      const RealLinearOp expected = RealLinearOp::realify(expected_lin, minus_b);
      const double dev = max_abs(Matrix8d(o_mr.m - expected.m));
      freq_dev[f] = dev;
      rep.conjugation_deviation = std::max(rep.conjugation_deviation, dev);
      lin_mr[f] = o_mr.linear_part();
      rep.realness_deviation =
          std::max({rep.realness_deviation,
                    max_abs(Matrix4c(o_mr.antilinear_part() - minus_b)),
                    phat_mr.real().cwiseAbs().maxCoeff()});
    }
    rep.frequency_asymmetry =
        std::max(rep.frequency_asymmetry, std::abs(freq_dev[0] - freq_dev[1]));

    // Sector system on (psi_+, psi_-) for a field with real and imaginary
    // parts Psi_1, Psi_2; psi_{+-} = psi_1 +- i psi_2.
    const Matrix8c sector = block2(lin_mr[0], minus_b, minus_b, lin_mr[1].conjugate());
    const Matrix4c d = params.a * phat_mr / params.mass - id;

    // x = G y, rows combined by R: the system decouples in (psi_1, psi_2).
    const Matrix8c g = block2(id, kI * id, id, -kI * id);
    const Matrix8c r = 0.5 * block2(id, id, -kI * id, kI * id);
    const Matrix8c decoupled = r * sector * g;
    const Matrix8c decoupled_expected =
        block2(d - params.b * id, zero, zero, d + params.b * id);
    rep.decoupling_deviation = std::max(
        rep.decoupling_deviation, max_abs(Matrix8c(decoupled - decoupled_expected)));

    // (phi, chi) = (psi_1 + psi_2, psi_1 - psi_2) restores the coupled set.
    const Matrix8c pmat = block2(id, id, id, -id);
    const Matrix8c coupled = pmat * decoupled * (0.5 * pmat);
    const Matrix8c coupled_expected = block2(d, minus_b, minus_b, d);
    rep.coupled_form_deviation = std::max(
        rep.coupled_form_deviation, max_abs(Matrix8c(coupled - coupled_expected)));
    if (rep.dirac_degenerate_pair) {
      const double offdiag = std::max(max_abs(Matrix4c(coupled.block<4, 4>(0, 4))),
                                      max_abs(Matrix4c(coupled.block<4, 4>(4, 0))));
      rep.dirac_degenerate_pair = offdiag < 1e-10;
    }
  }
  return rep;
}

MajoranaDecoupleReport majorana_decouple(const EquationParams& params) {
  return majorana_decouple(params, default_momenta(params.mass));
}

BarutCoefficients barut_identification(const EquationParams& params) {
  require_nonzero_a(params.a);
  if (!(params.mass > 0.0))
    throw std::invalid_argument("barut_identification: mass must be positive");
  return {params.a / (2.0 * params.mass),
          params.mass * (1.0 - params.b * params.b) / (2.0 * params.a)};
}

double barut_factorization_check(const FourMomentum& p, const EquationParams& params) {
  const BarutCoefficients c = barut_identification(params);
  const Matrix4c id = Matrix4c::Identity();
  const Matrix4c phat = dirac_op(p);
  const Matrix4c first_order = params.a * phat / params.mass - id;
  const Matrix4c lhs = (-params.mass / (2.0 * params.a)) *
                       (first_order * first_order - params.b * params.b * id);
  const double p2 = p.invariant_mass_sq();
  const Matrix4c rhs = phat - (c.alpha2 * p2 + c.kappa) * id;
  return max_abs(Matrix4c(lhs - rhs));
}

namespace {

DispersionResult single_root(double root, double mass) {
  DispersionResult out;
  out.roots_p2 = {root};
  out.multiplicities = {4};
  out.massless_degenerate = std::abs(root) <= 1e-12 * std::max(1.0, mass * mass);
  return out;
}

}  // namespace

DispersionResult dispersion_roots(const EquationParams& params) {
  require_nonzero_a(params.a);
  const double t = params.b - 1.0;
  return single_root(params.mass * params.mass * t * t / (params.a * params.a),
                     params.mass);
}

DispersionResult dispersion_roots(const GeneralizedParams& params) {
  require_nonzero_a(params.a);
  if (std::abs(std::sin(params.alpha2) * params.beta2) >
      1e-9 * std::max(1.0, std::abs(params.beta2)))
    throw std::domain_error(
        "dispersion_roots: e^{i alpha2} beta2 must be real (alpha2 in {0, pi})");
  const double r2 = params.beta1 * params.beta1 + params.beta2 * params.beta2;
  return single_root(params.mass * params.mass * r2 / (params.a * params.a),
                     params.mass);
}

double klein_gordon_residual(double p_squared, const EquationParams& params) {
  const double t = params.b - 1.0;
  return std::abs(t * t - params.a * params.a * p_squared / (params.mass * params.mass));
}

double SokolikReport::max_deviation() const {
  return std::max({conjugation_deviation, pair_form_deviation, closure_deviation,
                   kg_identity_deviation, frequency_asymmetry});
}

SokolikReport sokolik_reduction_check(const EquationParams& params,
                                      const std::vector<FourMomentum>& momenta) {
  const double expected_a = 1.0 - params.b;
  if (std::abs(params.a - expected_a) > 1e-9 * std::max(1.0, std::abs(expected_a)))
    throw std::domain_error("sokolik_reduction_check: branch mismatch, a must be 1 - b");

  const MajoranaTransform mt = majorana_transform();
  const RealLinearOp w = RealLinearOp::realify(mt.u, Matrix4c::Zero());
  const RealLinearOp wi = RealLinearOp::realify(mt.u_dagger, Matrix4c::Zero());
  const Matrix4c id = Matrix4c::Identity();
  const Matrix4c zero = Matrix4c::Zero();
  const double t = params.b - 1.0;
  const Matrix4c g5c = gamma_set().g5 * cc_matrix();
  const Matrix4c g5_mr = mt.u * gamma_set().g5 * mt.u_dagger;

  SokolikReport rep;
  for (const FourMomentum& p : momenta) {
    const Matrix4c phat_mr = mt.u * dirac_op(p) * mt.u_dagger;
    std::array<double, 2> freq_dev{0.0, 0.0};
    std::array<Matrix4c, 2> lin_mr;

    for (int f = 0; f < 2; ++f) {
      const double sign = f == 0 ? 1.0 : -1.0;
      const Matrix4c linear = sign * params.a * dirac_op(p) / params.mass;
      const RealLinearOp op = RealLinearOp::realify(linear, -t * g5c);
      const RealLinearOp op_mr = w * op * wi;
      const Matrix4c expected_lin = sign * params.a * phat_mr / params.mass;
      const RealLinearOp expected = RealLinearOp::realify(expected_lin, t * g5_mr);
      freq_dev[f] = max_abs(Matrix8d(op_mr.m - expected.m));
      rep.conjugation_deviation = std::max(rep.conjugation_deviation, freq_dev[f]);
      lin_mr[f] = op_mr.linear_part();
    }
    rep.frequency_asymmetry =
        std::max(rep.frequency_asymmetry, std::abs(freq_dev[0] - freq_dev[1]));

    const Matrix4c x = params.a * phat_mr / params.mass;
    const Matrix4c y = t * g5_mr;
    const Matrix8c sector =
        block2(lin_mr[0], y, (t * g5_mr).conjugate(), lin_mr[1].conjugate());
    const Matrix8c g = block2(id, kI * id, id, -kI * id);
    const Matrix8c r = 0.5 * block2(id, id, -kI * id, kI * id);
    const Matrix8c pair = r * sector * g;
    const Matrix8c pair_expected = block2(x, -kI * y, -kI * y, x);
    rep.pair_form_deviation =
        std::max(rep.pair_form_deviation, max_abs(Matrix8c(pair - pair_expected)));

    const Matrix8c pmat = block2(id, id, id, -id);
    const Matrix8c split = pmat * pair * (0.5 * pmat);
    rep.closure_deviation =
        std::max({rep.closure_deviation, max_abs(Matrix4c(split.block<4, 4>(0, 4))),
                  max_abs(Matrix4c(split.block<4, 4>(4, 0)))});

    const double kg_scalar = params.a * params.a * p.invariant_mass_sq() /
                                 (params.mass * params.mass) -
                             t * t;
    const Matrix4c phi_block = split.block<4, 4>(0, 0);
    const Matrix4c chi_block = split.block<4, 4>(4, 4);
    rep.kg_identity_deviation = std::max(
        {rep.kg_identity_deviation,
         max_abs(Matrix4c(phi_block * phi_block - kg_scalar * id)),
         max_abs(Matrix4c(chi_block * chi_block - kg_scalar * id))});
  }
  return rep;
}

SokolikReport sokolik_reduction_check(const EquationParams& params) {
  return sokolik_reduction_check(params, default_momenta(params.mass));
}

Eigen::Matrix4cd mode_constraint_matrix(const GeneralizedParams& params) {
  const double t = params.b - 1.0;
  const Complex u = std::exp(kI * params.alpha1) * params.beta1;
  const Complex v = std::exp(kI * params.alpha2) * params.beta2;
  Eigen::Matrix4cd m;
  m << t, kI * v, 0, -kI * u,              //
      -kI * v, t, kI * u, 0,               //
      0, -kI * std::conj(u), t, -kI * std::conj(v),  //
      kI * std::conj(u), 0, kI * std::conj(v), t;
  return m;
}

namespace {

Eigen::Matrix4cd mode_constraint_matrix_literal(const GeneralizedParams& params) {
  // Daggered rows transcribed without conjugation (the other reading).
  const double t = params.b - 1.0;
  const Complex u = std::exp(kI * params.alpha1) * params.beta1;
  const Complex v = std::exp(kI * params.alpha2) * params.beta2;
  Eigen::Matrix4cd m;
  m << t, kI * v, 0, -kI * u,  //
      -kI * v, t, kI * u, 0,   //
      0, kI * u, t, kI * v,    //
      -kI * u, 0, -kI * v, t;
  return m;
}

double solvability_ratio(const Eigen::Matrix4cd& m) {
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv(0) < 1e-300) return 0.0;
  return sv(sv.size() - 1) / sv(0);
}

}  // namespace

CompatibilityResult compatibility_solve(const GeneralizedParams& params, double tol) {
  const Eigen::Matrix4cd m = mode_constraint_matrix(params);
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(m);
  const auto& sv = svd.singularValues();

  CompatibilityResult out;
  const double t = params.b - 1.0;
  out.constraint_gap =
      std::abs(params.beta1 * params.beta1 + params.beta2 * params.beta2 - t * t);
  if (sv(0) < 1e-300) {
    out.consistent = true;
    out.kernel_dim = 4;
    out.solvability = 0.0;
  } else {
    out.solvability = sv(3) / sv(0);
    out.consistent = out.solvability < tol;
    for (int i = 0; i < 4; ++i)
      if (sv(i) < tol * sv(0)) ++out.kernel_dim;
  }
  out.alt_reading_solvability =
      solvability_ratio(mode_constraint_matrix_literal(params));
  const bool alt_consistent = out.alt_reading_solvability < tol;
  out.readings_agree = alt_consistent == out.consistent;
  return out;
}

bool compatibility_condition(const GeneralizedParams& params, double gap_tol) {
  const double t = params.b - 1.0;
  const double gap =
      std::abs(params.beta1 * params.beta1 + params.beta2 * params.beta2 - t * t);
  const bool phase_real = std::abs(std::sin(params.alpha2) * params.beta2) <=
                          1e-9 * std::max(1.0, std::abs(params.beta2));
  return phase_real && gap < gap_tol;
}

DiracDegenerationReport dirac_degeneration(const GeneralizedParams& params,
                                           double tol) {
  if (std::abs(params.beta1) > 1e-12)
    throw std::invalid_argument("dirac_degeneration: requires beta1 = 0");

  const CompatibilityResult compat = compatibility_solve(params, tol);
  DiracDegenerationReport rep;
  rep.consistent = compat.consistent;
  rep.kernel_dim = compat.kernel_dim;
  if (!compat.consistent) return rep;

  const Eigen::Matrix4cd m = mode_constraint_matrix(params);
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  for (int i = 0; i < 4; ++i) {
    if (sv(i) >= tol * sv(0)) continue;
    const Eigen::Vector4cd k = svd.matrixV().col(i);
    const Vector2c c = k.head<2>(), d = k.tail<2>();
    if (c.norm() > 1e-8) {
      // c_up = s i c_down on the kernel
      const double dev_plus = std::abs(c(0) - kI * c(1)) / c.norm();
      const double dev_minus = std::abs(c(0) + kI * c(1)) / c.norm();
      const int s = dev_plus <= dev_minus ? 1 : -1;
      rep.pairing_deviation =
          std::max(rep.pairing_deviation, std::min(dev_plus, dev_minus));
      if (rep.c_pairing == 0) rep.c_pairing = s;
      else if (rep.c_pairing != s) rep.pairing_deviation = 1.0;
    }
    if (d.norm() > 1e-8) {
      const double dev_plus = std::abs(d(0) - kI * d(1)) / d.norm();
      const double dev_minus = std::abs(d(0) + kI * d(1)) / d.norm();
      const int s = dev_plus <= dev_minus ? 1 : -1;
      rep.pairing_deviation =
          std::max(rep.pairing_deviation, std::min(dev_plus, dev_minus));
      if (rep.d_pairing == 0) rep.d_pairing = s;
      else if (rep.d_pairing != s) rep.pairing_deviation = 1.0;
    }
  }
  return rep;
}

}  // namespace spinorlab
