#include "spinorlab/report.hpp"

#include "spinorlab/sampling.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace spinorlab {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPi = 3.14159265358979323846;

std::string verdict_for(double residual, double tol) {
  return residual < tol ? "pass" : "fail";
}

nlohmann::json scalar_params(const RunParams& rp) {
  return nlohmann::json{{"a", rp.a},
                        {"b", rp.b},
                        {"alpha1", rp.alpha1},
                        {"alpha2", rp.alpha2},
                        {"beta1", rp.beta1},
                        {"beta2", rp.beta2},
                        {"m", rp.m},
                        {"tol", rp.tol},
                        {"count", rp.sampling.count},
                        {"seed", rp.sampling.seed},
                        {"p_over_m_max", rp.sampling.p_over_m_max}};
}

double max4(const Matrix4c& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

nlohmann::json fingerprint_json() {
  nlohmann::json j;
  for (const auto& [key, value] : convention_fingerprint()) j[key] = value;
  return j;
}

nlohmann::json record_json(const ReportRecord& r) {
  return nlohmann::json{{"check", r.check},
                        {"params", r.params},
                        {"residual", r.residual},
                        {"verdict", r.verdict},
                        {"fingerprint", fingerprint_json()}};
}

const char* const kCsvHeader = "check,params,residual,verdict,fingerprint";

namespace {
std::string csv_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}
}  // namespace

std::string record_csv_row(const ReportRecord& r) {
  std::ostringstream os;
  os << csv_escape(r.check) << ',' << csv_escape(r.params.dump()) << ','
     << nlohmann::json(r.residual).dump() << ',' << csv_escape(r.verdict) << ','
     << csv_escape(fingerprint_json().dump());
  return os.str();
}

void write_records(std::ostream& os, const std::vector<ReportRecord>& records,
                   const std::string& format) {
  if (format == "csv") {
    os << kCsvHeader << '\n';
    for (const auto& r : records) os << record_csv_row(r) << '\n';
  } else {
    for (const auto& r : records) os << record_json(r).dump() << '\n';
  }
}

bool any_failed(const std::vector<ReportRecord>& records) {
  for (const auto& r : records)
    if (r.verdict == "fail") return true;
  return false;
}

std::vector<ReportRecord> run_verify(const RunParams& rp) {
  std::vector<ReportRecord> records;
  const nlohmann::json base = scalar_params(rp);
  auto add = [&](const std::string& check, double residual,
                 const std::string& verdict = "") {
    records.push_back(ReportRecord{
        check, base, residual,
        verdict.empty() ? verdict_for(residual, rp.tol) : verdict});
  };

  const GammaSet& g = gamma_set();
  const Matrix4c id4 = Matrix4c::Identity();
  const Matrix2c id2 = Matrix2c::Identity();
  const std::vector<FourMomentum> momenta =
      sample_momenta(rp.sampling.count, rp.sampling.seed, rp.m,
                     rp.sampling.p_over_m_max);
  Rng rng(rp.sampling.seed + 1);

  // Clifford relations {g^mu, g^nu} = 2 g^{mu nu}.
  {
    const Matrix4c* gam[4] = {&g.g0, &g.g1, &g.g2, &g.g3};
    const double metric[4] = {1.0, -1.0, -1.0, -1.0};
    double dev = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        const Matrix4c anti = (*gam[mu]) * (*gam[nu]) + (*gam[nu]) * (*gam[mu]);
        const double expected = mu == nu ? 2.0 * metric[mu] : 0.0;
        dev = std::max(dev, max4(Matrix4c(anti - expected * id4)));
      }
    dev = std::max(dev, max4(Matrix4c(g.g5 * g.g5 - id4)));
    for (int mu = 0; mu < 4; ++mu)
      dev = std::max(dev, max4(Matrix4c(g.g5 * (*gam[mu]) + (*gam[mu]) * g.g5)));
    dev = std::max(dev, max4(Matrix4c(parity() - g.g0)));
    add("clifford-relations", dev);
  }

  // Wigner operator.
  {
    Matrix2c expected;
    expected << 0, -1, 1, 0;
    double dev = (wigner_theta() - expected).cwiseAbs().maxCoeff();
    dev = std::max(dev, (wigner_theta() * wigner_theta() + id2).cwiseAbs().maxCoeff());
    add("wigner-involution", dev);
  }
  {
    double dev = 0.0;
    const Matrix2c theta = wigner_theta();
    for (int i = 0; i < rp.sampling.count; ++i) {
      const Eigen::Vector3d a(rng.uniform(-2, 2), rng.uniform(-2, 2),
                              rng.uniform(-2, 2));
      const Matrix2c lhs = theta * sigma_dot(a) * theta.inverse();
      dev = std::max(dev,
                     (lhs + sigma_dot(a).conjugate()).cwiseAbs().maxCoeff());
    }
    add("wigner-conjugation", dev);
  }

  // Realification is a faithful homomorphism.
  {
    double dev = 0.0;
    for (int i = 0; i < rp.sampling.count; ++i) {
      const Matrix4c a = rng.random_matrix4(), b = rng.random_matrix4();
      const Matrix4c c = rng.random_matrix4(), d = rng.random_matrix4();
      const RealLinearOp lhs =
          RealLinearOp::realify(a, b) * RealLinearOp::realify(c, d);
      const RealLinearOp rhs = RealLinearOp::realify(a * c + b * d.conjugate(),
                                                     a * d + b * c.conjugate());
      dev = std::max(dev, (lhs.m - rhs.m).cwiseAbs().maxCoeff());
      const Vector4c psi = rng.random_spinor4();
      dev = std::max(
          dev, (RealLinearOp::realify(a, b).apply(psi) - (a * psi + b * psi.conjugate()))
                   .norm());
    }
    add("realify-homomorphism", dev);
  }

  // Majorana transform unitarity.
  {
    const MajoranaTransform mt = majorana_transform();
    const double dev = std::max(max4(Matrix4c(mt.u * mt.u_dagger - id4)),
                                max4(Matrix4c(mt.u_dagger * mt.u - id4)));
    add("majorana-unitarity", dev);
  }

  // Charge conjugation: involution, antilinearity.
  {
    const RealLinearOp cc = charge_conjugation();
    const RealLinearOp j = RealLinearOp::mult_by_i();
    double dev = ((cc * j).m + (j * cc).m).cwiseAbs().maxCoeff();
    for (int i = 0; i < rp.sampling.count; ++i) {
      const Vector4c psi = rng.random_spinor4();
      dev = std::max(dev, (cc.apply(cc.apply(psi)) - psi).norm());
    }
    add("charge-conjugation-involution", dev);
  }

  // Boosts.
  {
    double dev = 0.0;
    for (const auto& p : momenta) {
      dev = std::max(dev, std::abs(boost_right(p).determinant() - 1.0));
      dev = std::max(dev, std::abs(boost_left(p).determinant() - 1.0));
    }
    add("boost-unimodularity", dev);
  }
  {
    double dev = 0.0;
    for (const auto& p : momenta) {
      const Matrix2c lr = boost_right(p);
      const Matrix2c expected = (p.energy * id2 + sigma_dot(p.p)) / p.mass;
      dev = std::max(dev, (lr * lr.adjoint() - expected).cwiseAbs().maxCoeff());
      dev = std::max(dev, (lr * boost_left(p) - id2).cwiseAbs().maxCoeff());
    }
    add("boost-identity", dev);
  }
  {
    double dev = 0.0;
    for (const auto& p : momenta) {
      const BoostParams bp = boost_params(p);
      dev = std::max(dev, std::abs(p.mass * std::cosh(bp.rapidity) - p.energy));
      dev = std::max(dev, (p.mass * std::sinh(bp.rapidity) * bp.axis - p.p).norm());
    }
    add("boost-reconstruction", dev);
  }

  // Rest spinors on an angular grid.
  const int kGrid = 12;
  {
    double dev = 0.0;
    for (int it = 0; it < kGrid; ++it)
      for (int ia = 0; ia < kGrid; ++ia) {
        const double theta = kPi * (it + 0.5) / kGrid;
        const double az = 2.0 * kPi * ia / kGrid;
        const Eigen::Vector3d n(std::sin(theta) * std::cos(az),
                                std::sin(theta) * std::sin(az), std::cos(theta));
        for (Helicity h : {Helicity::Up, Helicity::Down}) {
          const Vector2c s = rest_spinor(h, theta, az, Chirality::Left).components;
          dev = std::max(dev, (sigma_dot(n) * s - 2.0 * half(h) * s).norm());
        }
      }
    add("rest-spinor-helicity", dev);
  }
  {
    double dev = 0.0;
    const Matrix2c theta_m = wigner_theta();
    for (int it = 0; it < kGrid; ++it)
      for (int ia = 0; ia < kGrid; ++ia) {
        const double theta = kPi * (it + 0.5) / kGrid;
        const double az = 2.0 * kPi * ia / kGrid;
        const Vector2c up = rest_spinor(Helicity::Up, theta, az, Chirality::Left).components;
        const Vector2c dn =
            rest_spinor(Helicity::Down, theta, az, Chirality::Left).components;
        dev = std::max(dev, (theta_m * up.conjugate() - dn).norm());
        dev = std::max(dev, (theta_m * dn.conjugate() + up).norm());
        const Matrix2c xi_inv = xi_matrix(az).inverse();
        dev = std::max(dev, (xi_inv * up.conjugate() - up).norm());
        dev = std::max(dev, (xi_inv * dn.conjugate() - dn).norm());
      }
    add("conjugation-identities", dev);
  }

  // Ryder-Burgard scalar collapse on both phase branches.
  {
    const std::pair<double, double> pairs[] = {{rp.a, rp.b}, {-1, 2}, {1, 2},
                                               {0, 1},       {2, -1}, {0.5, 0.5},
                                               {1, 0},       {-2, 3}, {3, -2}};
    double dev = 0.0;
    for (const auto& [a, b] : pairs)
      for (int it = 0; it < kGrid; ++it)
        for (int ia = 0; ia < kGrid; ++ia) {
          const double theta = kPi * (it + 0.5) / kGrid;
          const double az = 2.0 * kPi * ia / kGrid;
          for (Helicity h : {Helicity::Up, Helicity::Down}) {
            const double r1 =
                ryder_burgard_residual({a, b, 0.0, kPi}, h, theta, az);
            dev = std::max(dev, std::abs(r1 - std::abs(1.0 - (a + b))));
            const double r2 =
                ryder_burgard_residual({a, b, 0.0, 0.0}, h, theta, az);
            dev = std::max(dev, std::abs(r2 - std::abs(1.0 - (b - a))));
          }
        }
    add("ryder-burgard-collapse", dev);
  }

  // Momentum-space Dirac equation on boosted u, v.
  {
    double dev = 0.0;
    const FourMomentum rest = FourMomentum::rest(rp.m);
    for (Helicity h : {Helicity::Up, Helicity::Down}) {
      const DiracPair at_rest = make_dirac(h, rest, 0.4, 1.1);
      dev = std::max(
          dev, ((g.g0 - id4) * at_rest.u.components).norm());
    }
    for (const auto& p : momenta) {
      const auto [theta, az] = polar_angles(p.p);
      for (Helicity h : {Helicity::Up, Helicity::Down}) {
        const DiracPair pair = make_dirac(h, p, theta, az);
        const Matrix4c phat = dirac_op(p);
        dev = std::max(dev, ((phat - rp.m * id4) * pair.u.components).norm() /
                                pair.u.components.norm());
        dev = std::max(dev, ((phat + rp.m * id4) * pair.v.components).norm() /
                                pair.v.components.norm());
      }
    }
    add("dirac-residual", dev);
  }

  // Charge-conjugacy classification of the second-type spinors.
  {
    double dev = 0.0;
    const RealLinearOp cc = charge_conjugation();
    int checked = 0;
    for (const auto& p : momenta) {
      if (++checked > 20) break;
      const auto [theta, az] = polar_angles(p.p);
      for (Helicity eta : {Helicity::Up, Helicity::Down}) {
        for (ConjugacyKind kind : {ConjugacyKind::S, ConjugacyKind::A}) {
          const double sign = kind == ConjugacyKind::S ? 1.0 : -1.0;
          const Vector4c lam = make_lambda(eta, kind, p, theta, az).components;
          const Vector4c rho = make_rho(eta, kind, p, theta, az).components;
          dev = std::max(dev, (cc.apply(lam) - sign * lam).norm() / lam.norm());
          dev = std::max(dev, (cc.apply(rho) - sign * rho).norm() / rho.norm());
        }
        const Vector4c u = make_dirac(eta, p, theta, az).u.components;
        if (classify_conjugacy(u, rp.tol) != Conjugacy::Neither) dev = std::max(dev, 1.0);
      }
    }
    add("conjugacy-classification", dev);
  }

  // Coupled lambda equations at the configured (a, b).
  {
    double dev = 0.0;
    for (const auto& p : momenta)
      for (ConjugacyKind kind : {ConjugacyKind::S, ConjugacyKind::A}) {
        const auto r = lambda_equation_residuals(p, {rp.a, rp.b, rp.m}, kind);
        dev = std::max({dev, r[0], r[1], r[2], r[3]});
      }
    add("lambda-equations", dev);
  }

  // Second-order factorization.
  {
    double dev = 0.0;
    if (std::abs(rp.a) < 1e-14) {
      add("barut-factorization", 0.0, "degenerate");
    } else {
      for (const auto& p : momenta)
        dev = std::max(dev, barut_factorization_check(p, {rp.a, rp.b, rp.m}));
      add("barut-factorization", dev);
    }
  }

  // Dispersion roots against the sampled determinant.
  {
    if (std::abs(rp.a) < 1e-14) {
      add("dispersion-closed-form", 0.0, "degenerate");
    } else {
      auto det_at = [&](const Matrix4c& shift, double p2) {
        const Eigen::Vector3d pvec(0.0, 0.0, 0.3 * rp.m);
        const double e = std::sqrt(p2 + pvec.squaredNorm());
        return std::abs(
            (Matrix4c(rp.a * dirac_op(e, pvec) / rp.m + shift)).determinant());
      };
      const Matrix4c dirac_shift = (rp.b - 1.0) * id4;
      const DispersionResult eq = dispersion_roots(EquationParams{rp.a, rp.b, rp.m});
      const double ref1 =
          det_at(dirac_shift, eq.roots_p2[0] + std::max(1.0, eq.roots_p2[0]));
      double dev = det_at(dirac_shift, eq.roots_p2[0]) / ref1;

      const Matrix4c gen_shift =
          kI * rp.beta1 * g.g5 + std::cos(rp.alpha2) * rp.beta2 * id4;
      GeneralizedParams gp{rp.a, rp.b, kPi / 2.0, rp.alpha2, rp.beta1, rp.beta2, rp.m};
      if (std::abs(std::sin(rp.alpha2) * rp.beta2) < 1e-9) {
        const DispersionResult gen = dispersion_roots(gp);
        const double ref2 =
            det_at(gen_shift, gen.roots_p2[0] + std::max(1.0, gen.roots_p2[0]));
        dev = std::max(dev, det_at(gen_shift, gen.roots_p2[0]) / ref2);
      }
      const std::string verdict =
          dev < rp.tol
              ? ((std::abs(rp.b - 1.0) < 1e-12 ||
                  (rp.beta1 == 0.0 && rp.beta2 == 0.0))
                     ? "degenerate"
                     : "pass")
              : "fail";
      add("dispersion-closed-form", dev, verdict);
    }
  }

  // Majorana-representation decoupling of the first-order equation.
  {
    if (std::abs(rp.a) < 1e-14) {
      add("majorana-decoupling", 0.0, "degenerate");
    } else {
      std::vector<FourMomentum> subset(momenta.begin(),
                                       momenta.begin() +
                                           std::min<std::size_t>(momenta.size(), 20));
      add("majorana-decoupling",
          majorana_decouple({rp.a, rp.b, rp.m}, subset).max_deviation());
    }
  }

  // Sokolik closure on the matched branch a = 1 - b for the configured b.
  {
    std::vector<FourMomentum> subset(momenta.begin(),
                                     momenta.begin() +
                                         std::min<std::size_t>(momenta.size(), 20));
    const double dev =
        sokolik_reduction_check({1.0 - rp.b, rp.b, rp.m}, subset).max_deviation();
    nlohmann::json params = base;
    params["branch_a"] = 1.0 - rp.b;
    records.push_back(
        ReportRecord{"sokolik-closure", params, dev, verdict_for(dev, rp.tol)});
  }

  // Klein-Gordon consistency of the dispersion root.
  {
    if (std::abs(rp.a) < 1e-14) {
      add("klein-gordon-consistency", 0.0, "degenerate");
    } else {
      const EquationParams eq{rp.a, rp.b, rp.m};
      const DispersionResult d = dispersion_roots(eq);
      const double t = rp.b - 1.0;
      double dev = std::abs(rp.a * rp.a * d.roots_p2[0] / (rp.m * rp.m) - t * t);
      dev = std::max(dev, klein_gordon_residual(d.roots_p2[0], eq));
      add("klein-gordon-consistency", dev,
          d.massless_degenerate ? "degenerate" : verdict_for(dev, rp.tol));
    }
  }

  // Mode-constraint compatibility: solver verdict against the closed form.
  {
    const GeneralizedParams gp{rp.a,     rp.b,     rp.alpha1, rp.alpha2,
                               rp.beta1, rp.beta2, rp.m};
    const CompatibilityResult res = compatibility_solve(gp, rp.tol);
    const bool condition = compatibility_condition(gp);
    const double dev = res.consistent == condition ? 0.0 : 1.0;
    add("compatibility-condition", dev);
  }

  return records;
}

std::vector<double> AxisRange::values() const {
  if (!(step > 0.0)) throw std::invalid_argument("range step must be positive");
  if (!std::isfinite(min) || !std::isfinite(max) || max < min)
    throw std::invalid_argument("range bounds must be finite with max >= min");
  std::vector<double> out;
  const int n = static_cast<int>(std::floor((max - min) / step + 1e-9)) + 1;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(min + step * i);
  return out;
}

std::vector<ReportRecord> run_sweep(const SweepConfig& cfg) {
  std::vector<ReportRecord> records;
  const auto avals = cfg.a.values();
  const auto bvals = cfg.b.values();
  const auto a1vals = cfg.alpha1.values();
  const auto a2vals = cfg.alpha2.values();
  const auto b1vals = cfg.beta1.values();
  const auto b2vals = cfg.beta2.values();
  if (avals.empty() || bvals.empty() || a1vals.empty() || a2vals.empty() ||
      b1vals.empty() || b2vals.empty())
    throw std::invalid_argument("empty sweep grid");

  for (double a : avals)
    for (double b : bvals) {
      int consistent_count = 0;
      double boundary_gap = 0.0;
      double radius_sum = 0.0;
      for (double alpha1 : a1vals)
        for (double alpha2 : a2vals)
          for (double beta1 : b1vals)
            for (double beta2 : b2vals) {
              const GeneralizedParams gp{a, b, alpha1, alpha2, beta1, beta2, cfg.m};
              const CompatibilityResult res = compatibility_solve(gp, cfg.tol);
              nlohmann::json params{{"a", a},           {"b", b},
                                    {"alpha1", alpha1}, {"alpha2", alpha2},
                                    {"beta1", beta1},   {"beta2", beta2},
                                    {"m", cfg.m},       {"kernel_dim", res.kernel_dim},
                                    {"constraint_gap", res.constraint_gap}};
              records.push_back(ReportRecord{
                  "compatibility", params, res.solvability,
                  res.consistent ? "pass" : "fail"});
              if (res.consistent) {
                ++consistent_count;
                boundary_gap = std::max(boundary_gap, res.constraint_gap);
                radius_sum += beta1 * beta1 + beta2 * beta2;
              }

              nlohmann::json dparams{{"a", a},           {"b", b},
                                     {"alpha1", alpha1}, {"alpha2", alpha2},
                                     {"beta1", beta1},   {"beta2", beta2},
                                     {"m", cfg.m}};
              if (std::abs(a) < 1e-14 ||
                  std::abs(std::sin(alpha2) * beta2) > 1e-9) {
                records.push_back(
                    ReportRecord{"dispersion", dparams, 0.0, "degenerate"});
              } else {
                const DispersionResult d =
                    dispersion_roots(GeneralizedParams{a, b, alpha1, alpha2,
                                                       beta1, beta2, cfg.m});
                const double expected =
                    cfg.m * cfg.m * (beta1 * beta1 + beta2 * beta2) / (a * a);
                dparams["p2_roots"] = d.roots_p2;
                dparams["multiplicities"] = d.multiplicities;
                const double dev = std::abs(d.roots_p2[0] - expected) /
                                   std::max(1.0, std::abs(expected));
                records.push_back(ReportRecord{
                    "dispersion", dparams, dev,
                    d.massless_degenerate ? "degenerate" : verdict_for(dev, cfg.tol)});
              }
            }

      nlohmann::json summary{{"a", a},
                             {"b", b},
                             {"m", cfg.m},
                             {"consistent_count", consistent_count},
                             {"expected_radius_sq", (b - 1.0) * (b - 1.0)}};
      if (consistent_count > 0) {
        summary["fitted_radius_sq"] = radius_sum / consistent_count;
        summary["boundary_max_gap"] = boundary_gap;
        records.push_back(ReportRecord{"compatibility-summary", summary, boundary_gap,
                                       boundary_gap < 1e-6 ? "pass" : "fail"});
      } else {
        records.push_back(ReportRecord{"compatibility-summary", summary, 0.0,
                                       "degenerate"});
      }
    }
  return records;
}

namespace {

void read_double(const nlohmann::json& j, const char* key, double& out) {
  if (j.contains(key)) {
    if (!j.at(key).is_number()) throw std::invalid_argument(std::string(key) + " must be a number");
    out = j.at(key).get<double>();
  }
}

AxisRange read_range(const nlohmann::json& j, const char* key, AxisRange fallback) {
  if (!j.contains(key)) return fallback;
  const auto& r = j.at(key);
  if (r.is_number()) {
    const double v = r.get<double>();
    return AxisRange{v, v, 1.0};
  }
  if (!r.is_object()) throw std::invalid_argument(std::string(key) + " must be a number or {min,max,step}");
  AxisRange out = fallback;
  read_double(r, "min", out.min);
  read_double(r, "max", out.max);
  read_double(r, "step", out.step);
  return out;
}

MomentumSampling read_sampling(const nlohmann::json& j, MomentumSampling fallback) {
  MomentumSampling s = fallback;
  if (j.contains("count")) s.count = j.at("count").get<int>();
  if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("p_over_m_max")) s.p_over_m_max = j.at("p_over_m_max").get<double>();
  if (s.count < 1) throw std::invalid_argument("count must be >= 1");
  if (!(s.p_over_m_max > 0.0)) throw std::invalid_argument("p_over_m_max must be positive");
  return s;
}

}  // namespace

RunParams run_params_from_json(const nlohmann::json& j) {
  RunParams rp;
  read_double(j, "a", rp.a);
  read_double(j, "b", rp.b);
  read_double(j, "alpha1", rp.alpha1);
  read_double(j, "alpha2", rp.alpha2);
  read_double(j, "beta1", rp.beta1);
  read_double(j, "beta2", rp.beta2);
  read_double(j, "m", rp.m);
  read_double(j, "tol", rp.tol);
  rp.sampling = read_sampling(j, rp.sampling);
  if (!(rp.m > 0.0)) throw std::invalid_argument("m must be positive");
  if (!(rp.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  return rp;
}

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
  SweepConfig cfg;
  cfg.a = read_range(j, "a", cfg.a);
  cfg.b = read_range(j, "b", cfg.b);
  cfg.alpha1 = read_range(j, "alpha1", cfg.alpha1);
  cfg.alpha2 = read_range(j, "alpha2", cfg.alpha2);
  cfg.beta1 = read_range(j, "beta1", cfg.beta1);
  cfg.beta2 = read_range(j, "beta2", cfg.beta2);
  read_double(j, "m", cfg.m);
  read_double(j, "tol", cfg.tol);
  cfg.sampling = read_sampling(j, cfg.sampling);
  if (j.contains("format")) cfg.format = j.at("format").get<std::string>();
  if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
  if (cfg.format != "json" && cfg.format != "csv")
    throw std::invalid_argument("format must be json or csv");
  if (!(cfg.m > 0.0)) throw std::invalid_argument("m must be positive");
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  return cfg;
}

}  // namespace spinorlab
