"""Structured chromatic-polynomial families, fitting and recursions."""

from ptchrom.families.constraints import ConstraintReport, verify_structure_constraints
from ptchrom.families.fitting import KappaForm, NotThisForm, fit_structure, solve_coefficients
from ptchrom.families.forms import (
    CANONICAL_BASIS,
    FAMILY_NAMES,
    LAMBDA_I,
    LAMBDA_TC,
    DenominatorNoCancel,
    LambdaBasis,
    StructuredForm,
    UnknownFamily,
    catalogue,
    catalogue_json,
    diagonalize,
    evaluate_at,
    evaluate_form,
    family_form,
    kappas,
)
from ptchrom.families.genfunc import (
    F_GF,
    Q_C_F,
    CubicRoots,
    DegenerateLambdas,
    GeneratingFunction,
    cubic_roots,
    f_polynomials,
    gf_expand,
    gf_to_lambda_coeffs,
    lambda_f1_radical,
)
from ptchrom.families.recursion import RecursionSpec, recursion_from_basis, verify_recursion

__all__ = [
    "CANONICAL_BASIS",
    "FAMILY_NAMES",
    "F_GF",
    "LAMBDA_I",
    "LAMBDA_TC",
    "Q_C_F",
    "ConstraintReport",
    "CubicRoots",
    "DegenerateLambdas",
    "DenominatorNoCancel",
    "GeneratingFunction",
    "KappaForm",
    "LambdaBasis",
    "NotThisForm",
    "RecursionSpec",
    "StructuredForm",
    "UnknownFamily",
    "catalogue",
    "catalogue_json",
    "cubic_roots",
    "diagonalize",
    "evaluate_at",
    "evaluate_form",
    "f_polynomials",
    "family_form",
    "fit_structure",
    "gf_expand",
    "gf_to_lambda_coeffs",
    "kappas",
    "lambda_f1_radical",
    "recursion_from_basis",
    "solve_coefficients",
    "verify_recursion",
    "verify_structure_constraints",
]
