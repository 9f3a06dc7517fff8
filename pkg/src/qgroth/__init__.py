"""Reduced Grothendieck rings of the queer Lie superalgebra q(n) and its Cartan."""

from .ds import DropExceedsRank, DsIndex, ds_a, ds_h, ds_model
from .exterior import GaussInt, SpoiledElement, wedge
from .groth_h import GrMinusElement, GrXiElement, mul_minus, mul_xi, sc
from .groth_q import ABasisElement, NotInvariantError, mul_a, psi_g, psi_g_inverse, symmetrize
from .supercharacter import sch_L_q2, sch_verma, un_minus_coeff
from .weights import CoreMultiset, Permutation, Weight, classify, core

__version__ = "0.1.0"

__all__ = [
    "Weight",
    "Permutation",
    "CoreMultiset",
    "classify",
    "core",
    "GaussInt",
    "SpoiledElement",
    "wedge",
    "GrMinusElement",
    "GrXiElement",
    "sc",
    "mul_minus",
    "mul_xi",
    "ABasisElement",
    "NotInvariantError",
    "mul_a",
    "psi_g",
    "psi_g_inverse",
    "symmetrize",
    "un_minus_coeff",
    "sch_verma",
    "sch_L_q2",
    "DsIndex",
    "DropExceedsRank",
    "ds_a",
    "ds_h",
    "ds_model",
]
