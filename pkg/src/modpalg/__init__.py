"""Exact graded-commutative algebra over F_p and Z, with the verification
checks built on it: Steenrod and Milnor operations on presented algebras,
SL_2(F_p) modular invariants, the symmetric-function derivation with its
integer and mod-p kernels, and third-page differential bookkeeping."""

from .algebra import Algebra, Element, Generator, Monomial, make_algebra
from .reports import FAIL, PASS, PRECONDITION, VerdictReport
from .steenrod import SteenrodAction

__all__ = [
    "Algebra",
    "Element",
    "Generator",
    "Monomial",
    "make_algebra",
    "SteenrodAction",
    "VerdictReport",
    "PASS",
    "FAIL",
    "PRECONDITION",
]

__version__ = "0.1.0"
