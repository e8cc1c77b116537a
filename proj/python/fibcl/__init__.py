"""Exact generalized Fibonacci quaternions and their Clifford algebras."""

from ._fibcl import (
    AlgebraParams,
    ClassificationReport,
    FibclError,
    QSqrt5,
    Quaternion,
    Rat,
    ThresholdCertificate,
    alpha_pow,
    binet,
    blade_mul,
    classify,
    dimension,
    energy_E,
    energy_E_prime,
    fib,
    fib_quat,
    gen_fib_quat,
    gen_invertibility_threshold,
    gram_matrix,
    horadam,
    invertibility_threshold,
    lucas,
    norm_closed_form,
    rank2_class,
    run_cli,
    selftest,
)

__all__ = [
    "AlgebraParams",
    "ClassificationReport",
    "FibclError",
    "QSqrt5",
    "Quaternion",
    "Rat",
    "ThresholdCertificate",
    "alpha_pow",
    "binet",
    "blade_mul",
    "classify",
    "dimension",
    "energy_E",
    "energy_E_prime",
    "fib",
    "fib_quat",
    "gen_fib_quat",
    "gen_invertibility_threshold",
    "gram_matrix",
    "horadam",
    "invertibility_threshold",
    "lucas",
    "norm_closed_form",
    "rank2_class",
    "run_cli",
    "selftest",
]
