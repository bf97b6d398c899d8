"""Decide semisimplicity and representation type of Hecke algebras of finite Weyl groups."""

from .classifier import (
    Basis,
    ClassificationInput,
    ClassificationReport,
    EqualQ,
    GenericQ,
    MinusPowerF,
    QIsOne,
    QOne,
    RootOfUnity,
    Status,
    classify,
    classify_group_algebra,
    classify_one_param_irreducible,
    classify_two_param_B,
    combine_factors,
    threshold_finite,
)
from .polyring import IntPolynomial, cyclotomic, phi_multiplicity
from .weyl import IrreducibleType, WeylSpec, degrees, group_order, parse_type_spec, poincare_polynomial

__version__ = "0.1.0"
