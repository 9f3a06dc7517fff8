"""Checks of the structural claims about Clifford modules, run on explicit matrices."""

from __future__ import annotations

from fractions import Fraction

from ..groth_h import kernel_dim, kkk_exception, product_total_exponent, sc
from ..weights import Weight
from .linalg import SuperMatrix, image
from .modules import (
    injective_hull,
    radical,
    realize_C,
    smult_supertrace,
    socle,
    socle_signed,
    tensor_modules,
)

__all__ = ["verify_tensor_thm", "verify_T_head_socle", "head_socle_report"]


def verify_tensor_thm(lam: Weight, mu: Weight, relations: bool = True) -> dict:
    """Decompose C(lam) (x) C(mu) and compare with the predicted structure.

    The module should be a sum of copies of C(lam+mu) (x) wedge(K), K of
    dimension ``kernel_dim``.  Either a single copy (up to parity) when
    n_lam + n_mu = n_{lam+mu} + dim K, or 2^a copies of each parity,
    a = n_lam + n_mu - n_{lam+mu} - dim K - 1.
    """
    nu = lam + mu
    t = tensor_modules(realize_C(lam), realize_C(mu))
    nl, nm, nn = lam.n_lambda, mu.n_lambda, nu.n_lambda
    dk = kernel_dim(lam, mu)
    size = 1 << nn

    soc = socle(t)
    copies = len(soc) // size
    first_case = nn + dk == nl + nm
    a = None if first_case else nl + nm - nn - dk - 1
    expected_copies = 1 if first_case else 1 << (a + 1)
    printed = Fraction(nl + nm - nn, 2) - dk
    printed_agrees = first_case or printed == a

    signed_soc = socle_signed(t, soc)
    pi_invariant = bool(nu.parity) or signed_soc == 0
    smult = smult_supertrace(t, nu, check=False)
    kkk = kkk_exception(lam, mu)
    s = sc(lam, mu)

    checks = {
        "relations": t.check_relations() if relations else True,
        "dimension": t.dim == 1 << (nl + nm),
        "factor_count": t.dim == size << product_total_exponent(lam, mu),
        "projective": len(soc) << dk == t.dim and len(soc) % size == 0,
        "copies": copies == expected_copies,
        "balanced": first_case or pi_invariant,
        "sign_vs_sc": bool(nu.parity) or smult == s,
        "pi_invariance_vs_kkk": pi_invariant == (not kkk),
    }
    details = {
        "target": nu.literal(),
        "total_dim": t.dim,
        "kernel_dim": dk,
        "first_case": first_case,
        "derived_exponent": a,
        "printed_exponent": str(printed),
        "printed_exponent_agrees": printed_agrees,
        "socle_copies": copies,
        "socle_signed": signed_soc,
        "smult": smult,
        "sc": s,
        "pi_invariant": pi_invariant,
        "kkk_exception": kkk,
        # literal Gr_- reading: signed part vanishes exactly off the exceptional case
        "signed_zero_iff_not_kkk": bool(nu.parity) or ((smult == 0) == (not kkk)),
        "i1_mod2_oracle": smult if nu.parity else None,
        "i1_mod2_sc": (s % 2) if nu.parity else None,
    }
    ok = all(checks.values())
    return {
        "case": f"C({lam.literal()})*C({mu.literal()})",
        "expected": {"copies": expected_copies, "sc": s},
        "got": {"copies": copies, "smult": smult},
        "pass": ok,
        "checks": checks,
        "details": details,
    }


def head_socle_report(lam: Weight) -> dict:
    """T_h = H_1 ... H_n on the injective hull of C(lam)."""
    hull = injective_hull(lam)
    T = SuperMatrix.identity(hull.dim).with_parity(hull.par)
    for g in hull.gens:
        T = T @ g
    soc = socle(hull)
    rad = radical(hull)
    img = image(T)
    rad_killed = all(not T.apply(v) for v in rad.basis)
    c_dim = realize_C(lam).dim
    checks = {
        "relations": hull.check_relations(),
        "dimension": hull.dim == c_dim << lam.zero_count,
        "socle_dim": len(soc) == c_dim,
        "image_is_socle": img == soc,
        "radical_in_kernel": rad_killed,
        "head_dim": hull.dim - len(rad) == c_dim,
    }
    return {
        "case": f"hull C({lam.literal()})",
        "expected": {"image_dim": c_dim},
        "got": {"image_dim": len(img)},
        "pass": all(checks.values()),
        "checks": checks,
    }


def verify_T_head_socle(lam: Weight) -> bool:
    if lam.zero_count < 1:
        raise ValueError("needs corank at least 1")
    return head_socle_report(lam)["pass"]

