// Python bindings for the core operations.

#include "spinorlab/equations.hpp"
#include "spinorlab/kinematics.hpp"
#include "spinorlab/matrices.hpp"
#include "spinorlab/sampling.hpp"
#include "spinorlab/spinors.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace spinorlab;

namespace {

Helicity helicity_from(const std::string& s) {
  if (s == "up") return Helicity::Up;
  if (s == "down") return Helicity::Down;
  throw std::invalid_argument("helicity must be 'up' or 'down'");
}

Chirality chirality_from(const std::string& s) {
  if (s == "left" || s == "L") return Chirality::Left;
  if (s == "right" || s == "R") return Chirality::Right;
  throw std::invalid_argument("chirality must be 'left' or 'right'");
}

ConjugacyKind kind_from(const std::string& s) {
  if (s == "S") return ConjugacyKind::S;
  if (s == "A") return ConjugacyKind::A;
  throw std::invalid_argument("kind must be 'S' or 'A'");
}

std::string conjugacy_str(Conjugacy c) {
  switch (c) {
    case Conjugacy::SelfConjugate:
      return "S";
    case Conjugacy::AntiSelfConjugate:
      return "A";
    default:
      return "neither";
  }
}

py::dict dispersion_dict(const DispersionResult& d) {
  py::dict out;
  out["roots_p2"] = d.roots_p2;
  out["multiplicities"] = d.multiplicities;
  out["massless_degenerate"] = d.massless_degenerate;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "bispinor representation workbench";

  py::class_<FourMomentum>(m, "FourMomentum")
      .def_static("from_mass_momentum", &FourMomentum::from_mass_momentum,
                  py::arg("mass"), py::arg("p"))
      .def_static("rest", &FourMomentum::rest, py::arg("mass"))
      .def_readonly("energy", &FourMomentum::energy)
      .def_readonly("p", &FourMomentum::p)
      .def_readonly("mass", &FourMomentum::mass)
      .def("invariant_mass_sq", &FourMomentum::invariant_mass_sq);

  py::class_<RealLinearOp>(m, "RealLinearOp")
      .def_static("realify", &RealLinearOp::realify, py::arg("linear"),
                  py::arg("antilinear"))
      .def_readonly("matrix", &RealLinearOp::m)
      .def("apply", &RealLinearOp::apply)
      .def("linear_part", &RealLinearOp::linear_part)
      .def("antilinear_part", &RealLinearOp::antilinear_part)
      .def("kernel_dim", &RealLinearOp::kernel_dim, py::arg("tol") = 1e-9);

  m.def("pauli", &pauli, py::arg("k"));
  m.def("wigner_theta", &wigner_theta);
  m.def("gammas", [] {
    const GammaSet& g = gamma_set();
    return py::make_tuple(g.g0, g.g1, g.g2, g.g3, g.g5);
  });
  m.def("parity", &parity);
  m.def("cc_matrix", &cc_matrix);
  m.def("charge_conjugation", &charge_conjugation);
  m.def("majorana_transform", [] {
    const MajoranaTransform t = majorana_transform();
    return py::make_tuple(t.u, t.u_dagger);
  });
  m.def("convention_fingerprint", [] { return convention_fingerprint(); });

  m.def(
      "boost_params",
      [](const FourMomentum& p) {
        const BoostParams b = boost_params(p);
        return py::make_tuple(b.rapidity, b.axis);
      },
      py::arg("p"));
  m.def("boost_right", &boost_right, py::arg("p"));
  m.def("boost_left", &boost_left, py::arg("p"));

  m.def(
      "rest_spinor",
      [](const std::string& h, double theta, double azimuth, const std::string& c) {
        return rest_spinor(helicity_from(h), theta, azimuth, chirality_from(c))
            .components;
      },
      py::arg("helicity"), py::arg("theta"), py::arg("azimuth"),
      py::arg("chirality") = "left");
  m.def("xi_matrix", &xi_matrix, py::arg("azimuth"));
  m.def(
      "ryder_burgard_residual",
      [](double a, double b, double theta1, double theta2, const std::string& h,
         double theta, double azimuth) {
        return ryder_burgard_residual({a, b, theta1, theta2}, helicity_from(h),
                                      theta, azimuth);
      },
      py::arg("a"), py::arg("b"), py::arg("theta1"), py::arg("theta2"),
      py::arg("helicity"), py::arg("theta"), py::arg("azimuth"));

  m.def(
      "make_dirac",
      [](const std::string& h, const FourMomentum& p, double theta, double azimuth) {
        const DiracPair pair = make_dirac(helicity_from(h), p, theta, azimuth);
        return py::make_tuple(pair.u.components, pair.v.components);
      },
      py::arg("helicity"), py::arg("p"), py::arg("theta") = 0.0,
      py::arg("azimuth") = 0.0);
  m.def(
      "make_lambda",
      [](const std::string& eta, const std::string& kind, const FourMomentum& p,
         double theta, double azimuth) {
        return make_lambda(helicity_from(eta), kind_from(kind), p, theta, azimuth)
            .components;
      },
      py::arg("eta"), py::arg("kind"), py::arg("p"), py::arg("theta") = 0.0,
      py::arg("azimuth") = 0.0);
  m.def(
      "make_rho",
      [](const std::string& eta, const std::string& kind, const FourMomentum& p,
         double theta, double azimuth) {
        return make_rho(helicity_from(eta), kind_from(kind), p, theta, azimuth)
            .components;
      },
      py::arg("eta"), py::arg("kind"), py::arg("p"), py::arg("theta") = 0.0,
      py::arg("azimuth") = 0.0);
  m.def(
      "classify_conjugacy",
      [](const Vector4c& psi, double tol) {
        return conjugacy_str(classify_conjugacy(psi, tol));
      },
      py::arg("psi"), py::arg("tol") = 1e-10);

  m.def(
      "dirac_op", [](const FourMomentum& p) { return dirac_op(p); }, py::arg("p"));
  m.def(
      "lambda_equation_residuals",
      [](const FourMomentum& p, double a, double b, double m_, const std::string& kind) {
        return lambda_equation_residuals(p, {a, b, m_}, kind_from(kind));
      },
      py::arg("p"), py::arg("a"), py::arg("b"), py::arg("m"), py::arg("kind"));
  m.def(
      "first_order_op",
      [](const FourMomentum& p, double a, double b, double m_, bool positive) {
        return first_order_op(p, {a, b, m_},
                              positive ? Frequency::Positive : Frequency::Negative);
      },
      py::arg("p"), py::arg("a"), py::arg("b"), py::arg("m"),
      py::arg("positive_frequency") = true);
  m.def(
      "frequency_paired_op",
      [](const FourMomentum& p, double a, double b, double m_) {
        return frequency_paired_op(p, {a, b, m_});
      },
      py::arg("p"), py::arg("a"), py::arg("b"), py::arg("m"));

  m.def(
      "barut_identification",
      [](double a, double b, double m_) {
        const BarutCoefficients c = barut_identification({a, b, m_});
        return py::make_tuple(c.alpha2, c.kappa);
      },
      py::arg("a"), py::arg("b"), py::arg("m"));
  m.def(
      "barut_factorization_check",
      [](const FourMomentum& p, double a, double b, double m_) {
        return barut_factorization_check(p, {a, b, m_});
      },
      py::arg("p"), py::arg("a"), py::arg("b"), py::arg("m"));

  m.def(
      "dispersion_roots",
      [](double a, double b, double m_) {
        return dispersion_dict(dispersion_roots(EquationParams{a, b, m_}));
      },
      py::arg("a"), py::arg("b"), py::arg("m") = 1.0);
  m.def(
      "generalized_dispersion_roots",
      [](double a, double beta1, double beta2, double m_, double alpha1,
         double alpha2) {
        GeneralizedParams gp;
        gp.a = a;
        gp.beta1 = beta1;
        gp.beta2 = beta2;
        gp.mass = m_;
        gp.alpha1 = alpha1;
        gp.alpha2 = alpha2;
        return dispersion_dict(dispersion_roots(gp));
      },
      py::arg("a"), py::arg("beta1"), py::arg("beta2"), py::arg("m") = 1.0,
      py::arg("alpha1") = 1.5707963267948966, py::arg("alpha2") = 0.0);
  m.def(
      "klein_gordon_residual",
      [](double p2, double a, double b, double m_) {
        return klein_gordon_residual(p2, {a, b, m_});
      },
      py::arg("p_squared"), py::arg("a"), py::arg("b"), py::arg("m") = 1.0);

  m.def(
      "majorana_decouple",
      [](double a, double b, double m_) {
        const MajoranaDecoupleReport r = majorana_decouple({a, b, m_});
        py::dict out;
        out["conjugation_deviation"] = r.conjugation_deviation;
        out["realness_deviation"] = r.realness_deviation;
        out["decoupling_deviation"] = r.decoupling_deviation;
        out["coupled_form_deviation"] = r.coupled_form_deviation;
        out["frequency_asymmetry"] = r.frequency_asymmetry;
        out["dirac_degenerate_pair"] = r.dirac_degenerate_pair;
        out["max_deviation"] = r.max_deviation();
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("m") = 1.0);
  m.def(
      "sokolik_reduction_check",
      [](double b, double m_) {
        const SokolikReport r = sokolik_reduction_check({1.0 - b, b, m_});
        py::dict out;
        out["conjugation_deviation"] = r.conjugation_deviation;
        out["pair_form_deviation"] = r.pair_form_deviation;
        out["closure_deviation"] = r.closure_deviation;
        out["kg_identity_deviation"] = r.kg_identity_deviation;
        out["frequency_asymmetry"] = r.frequency_asymmetry;
        out["max_deviation"] = r.max_deviation();
        return out;
      },
      py::arg("b"), py::arg("m") = 1.0);

  m.def(
      "compatibility_solve",
      [](double b, double beta1, double beta2, double alpha1, double alpha2,
         double tol) {
        GeneralizedParams gp;
        gp.b = b;
        gp.beta1 = beta1;
        gp.beta2 = beta2;
        gp.alpha1 = alpha1;
        gp.alpha2 = alpha2;
        const CompatibilityResult r = compatibility_solve(gp, tol);
        py::dict out;
        out["consistent"] = r.consistent;
        out["kernel_dim"] = r.kernel_dim;
        out["constraint_gap"] = r.constraint_gap;
        out["solvability"] = r.solvability;
        out["alt_reading_solvability"] = r.alt_reading_solvability;
        out["readings_agree"] = r.readings_agree;
        return out;
      },
      py::arg("b"), py::arg("beta1"), py::arg("beta2"), py::arg("alpha1") = 0.0,
      py::arg("alpha2") = 0.0, py::arg("tol") = 1e-10);
  m.def(
      "dirac_degeneration",
      [](double b, double beta2, double alpha1, double alpha2, double tol) {
        GeneralizedParams gp;
        gp.b = b;
        gp.beta1 = 0.0;
        gp.beta2 = beta2;
        gp.alpha1 = alpha1;
        gp.alpha2 = alpha2;
        const DiracDegenerationReport r = dirac_degeneration(gp, tol);
        py::dict out;
        out["consistent"] = r.consistent;
        out["kernel_dim"] = r.kernel_dim;
        out["c_pairing"] = r.c_pairing;
        out["d_pairing"] = r.d_pairing;
        out["pairing_deviation"] = r.pairing_deviation;
        return out;
      },
      py::arg("b"), py::arg("beta2"), py::arg("alpha1") = 0.0,
      py::arg("alpha2") = 0.0, py::arg("tol") = 1e-10);

  m.def("sample_momenta", &sample_momenta, py::arg("count"), py::arg("seed"),
        py::arg("mass"), py::arg("p_over_m_max") = 10.0);
}
