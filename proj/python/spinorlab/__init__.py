"""Numerical workbench for bispinor representation algebra.

Constructs the chiral-basis representation objects (Wigner operator, boosts,
Dirac and second-type spinors, discrete symmetry operators) and verifies the
associated wave equations, dispersion relations and mode-constraint
compatibility conditions.
"""

from spinorlab._core import (
    FourMomentum,
    RealLinearOp,
    barut_factorization_check,
    barut_identification,
    boost_left,
    boost_params,
    boost_right,
    cc_matrix,
    charge_conjugation,
    classify_conjugacy,
    compatibility_solve,
    convention_fingerprint,
    dirac_degeneration,
    dirac_op,
    dispersion_roots,
    first_order_op,
    frequency_paired_op,
    gammas,
    generalized_dispersion_roots,
    klein_gordon_residual,
    lambda_equation_residuals,
    majorana_decouple,
    majorana_transform,
    make_dirac,
    make_lambda,
    make_rho,
    parity,
    pauli,
    rest_spinor,
    ryder_burgard_residual,
    sample_momenta,
    sokolik_reduction_check,
    wigner_theta,
    xi_matrix,
)

__all__ = [
    "FourMomentum",
    "RealLinearOp",
    "barut_factorization_check",
    "barut_identification",
    "boost_left",
    "boost_params",
    "boost_right",
    "cc_matrix",
    "charge_conjugation",
    "classify_conjugacy",
    "compatibility_solve",
    "convention_fingerprint",
    "dirac_degeneration",
    "dirac_op",
    "dispersion_roots",
    "first_order_op",
    "frequency_paired_op",
    "gammas",
    "generalized_dispersion_roots",
    "klein_gordon_residual",
    "lambda_equation_residuals",
    "majorana_decouple",
    "majorana_transform",
    "make_dirac",
    "make_lambda",
    "make_rho",
    "parity",
    "pauli",
    "rest_spinor",
    "ryder_burgard_residual",
    "sample_momenta",
    "sokolik_reduction_check",
    "wigner_theta",
    "xi_matrix",
]
