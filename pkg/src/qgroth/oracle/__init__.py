"""Exact matrix models used as ground truth for the combinatorial rules."""

from .linalg import SuperMatrix, Subspace
from .modules import (
    CliffordModule,
    OracleScaleError,
    T_matrix,
    direct_sum,
    injective_hull,
    parity_shift,
    realize_C,
    realize_C_fermionic,
    restrict,
    smult_supertrace,
    socle,
    socle_signed,
    tensor_modules,
)
from .quadnum import QuadNum
from .verify import head_socle_report, verify_T_head_socle, verify_tensor_thm

__all__ = [
    "QuadNum",
    "SuperMatrix",
    "Subspace",
    "CliffordModule",
    "OracleScaleError",
    "realize_C",
    "realize_C_fermionic",
    "T_matrix",
    "smult_supertrace",
    "tensor_modules",
    "direct_sum",
    "parity_shift",
    "restrict",
    "socle",
    "socle_signed",
    "injective_hull",
    "verify_tensor_thm",
    "verify_T_head_socle",
    "head_socle_report",
]
