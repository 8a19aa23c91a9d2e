"""Realização explícita: base de Chevalley, irredutíveis, complexos e verificações."""

from relbgg.chevalley.basis import ChevalleyBasis, build_chevalley
from relbgg.chevalley.checks import VerificationReport, verify, verify_absolute, verify_relative
from relbgg.chevalley.complex import (
    AbsoluteComplex,
    LieComplex,
    RelativeComplex,
    absolute_complex,
    codifferential,
    cohomology_differential,
    relative_complex,
)
from relbgg.chevalley.irrep import ExplicitRep, build_irrep

__all__ = [
    "AbsoluteComplex",
    "ChevalleyBasis",
    "ExplicitRep",
    "LieComplex",
    "RelativeComplex",
    "VerificationReport",
    "absolute_complex",
    "build_chevalley",
    "build_irrep",
    "codifferential",
    "cohomology_differential",
    "relative_complex",
    "verify",
    "verify_absolute",
    "verify_relative",
]
