"""Supercharacters: Verma modules through U(n^-), the q(2) table, and checkers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .groth_h import GrMinusElement, mul_minus, sc
from .groth_q import ABasisElement
from .weights import Weight, core

__all__ = [
    "NegRootVector",
    "negative_roots",
    "in_negative_cone",
    "height",
    "un_minus_coeff",
    "un_minus_coeff_bruteforce",
    "cone_weights",
    "sch_verma",
    "sch_L_q2",
    "sch_L_q2_recursive",
    "check_block_support",
    "check_mod4",
    "mod4_violations",
    "check_sch_constraints",
]

MAX_BRUTE_HEIGHT = 10


@dataclass(frozen=True)
class NegRootVector:
    """k_alpha for alpha = e_p - e_q, p > q (1-based); stored as sorted ((p, q), k)."""

    coeffs: tuple[tuple[tuple[int, int], int], ...]

    def __init__(self, coeffs: dict[tuple[int, int], int]):
        for (p, q), k in coeffs.items():
            if not p > q >= 1 or k < 0:
                raise ValueError(f"bad negative root entry {(p, q)}: {k}")
        object.__setattr__(self, "coeffs", tuple(sorted((r, k) for r, k in coeffs.items() if k)))

    def weight(self, n: int) -> Weight:
        e = [0] * n
        for (p, q), k in self.coeffs:
            e[p - 1] += k
            e[q - 1] -= k
        return Weight(e)

    def classes(self, n: int) -> list[GrMinusElement]:
        """[S^k g_alpha] = [C(k alpha)] for each root used."""
        out = []
        for (p, q), k in self.coeffs:
            e = [0] * n
            e[p - 1], e[q - 1] = k, -k
            out.append(GrMinusElement.basis(Weight(e)))
        return out


def negative_roots(n: int) -> list[tuple[int, int]]:
    return [(p, q) for q in range(1, n + 1) for p in range(q + 1, n + 1)]


def in_negative_cone(nu: Weight) -> bool:
    if not nu.is_integral or sum(nu.entries) != 0:
        return False
    run = Fraction(0)
    for a in nu.entries:
        run += a
        if run > 0:
            return False
    return True


def height(nu: Weight) -> int:
    return int(sum(a for a in nu.entries if a > 0))


def _require_cone(nu: Weight, n: int) -> None:
    if nu.n != n:
        raise ValueError("weight does not match the ambient rank")
    if not in_negative_cone(nu):
        raise ValueError(f"{nu.literal()} is not in the negative root cone")


def _product(classes: list[GrMinusElement], n: int) -> GrMinusElement:
    out = GrMinusElement.basis(Weight.zero(n))
    for c in classes:
        out = mul_minus(out, c)
        if not out:
            break
    return out


def un_minus_coeff(nu: Weight, n: int | None = None) -> int:
    """Coefficient of [C(nu)] in sch U(n^-).

    Positions carrying +-k must alternate (bottom, top, bottom, ...) when
    read left to right; then the roots pair consecutive positions and the
    sign is that of the product of the [C(k alpha)].
    """
    n = nu.n if n is None else n
    _require_cone(nu, n)
    groups: dict[Fraction, list[tuple[int, int]]] = {}
    for i, a in enumerate(nu.entries):
        if a:
            groups.setdefault(abs(a), []).append((i + 1, 1 if a > 0 else -1))
    roots: dict[tuple[int, int], int] = {}
    for k, pts in groups.items():
        if len(pts) % 2:
            return 0
        for j in range(0, len(pts), 2):
            (q, sq), (p, sp) = pts[j], pts[j + 1]
            if sq != -1 or sp != 1:
                return 0
            roots[(p, q)] = int(k)
    prod = _product(NegRootVector(roots).classes(n), n)
    return prod[nu]


def _vectors(nu: Weight, n: int, max_height: int) -> Iterator[dict[tuple[int, int], int]]:
    roots = negative_roots(n)
    target = [int(a) for a in nu.entries]
    h = height(nu)
    if h > max_height:
        raise ValueError(f"height {h} exceeds brute-force limit {max_height}")

    def rec(j: int, cur: list[int], left: int, chosen: dict) -> Iterator[dict]:
        if j == len(roots):
            if cur == target:
                yield dict(chosen)
            return
        p, q = roots[j]
        for k in range(left + 1):
            if k:
                cur[p - 1] += k
                cur[q - 1] -= k
                chosen[(p, q)] = k
            yield from rec(j + 1, cur, left - k, chosen)
            if k:
                cur[p - 1] -= k
                cur[q - 1] += k
                del chosen[(p, q)]

    yield from rec(0, [0] * n, h, {})


def un_minus_coeff_bruteforce(nu: Weight, n: int | None = None, max_height: int = MAX_BRUTE_HEIGHT) -> int:
    """Sum over every assignment k_alpha with sum k_alpha alpha = nu."""
    n = nu.n if n is None else n
    _require_cone(nu, n)
    total = GrMinusElement()
    for vec in _vectors(nu, n, max_height):
        total = total + _product(NegRootVector(vec).classes(n), n)
    return total[nu]


def cone_weights(n: int, depth: int, positions: tuple[int, ...] | None = None) -> Iterator[Weight]:
    """Weights of the negative root cone of height <= depth supported on ``positions``."""
    pos = list(range(n)) if positions is None else sorted(positions)

    def rec(j: int, run: int, hgt: int, vals: list[int]) -> Iterator[list[int]]:
        if j == len(pos):
            if run == 0:
                yield list(vals)
            return
        remaining = len(pos) - j - 1
        for a in range(-depth, depth + 1):
            r = run + a
            h = hgt + max(a, 0)
            if r > 0 or h > depth:
                continue
            # what is still missing must be recoverable by later positive entries
            if -r > depth - h or (remaining == 0 and r != 0):
                continue
            vals.append(a)
            yield from rec(j + 1, r, h, vals)
            vals.pop()

    for vals in rec(0, 0, 0, []):
        e = [0] * n
        for p, a in zip(pos, vals):
            e[p] = a
        yield Weight(e)


@lru_cache(maxsize=None)
def _coeff_cached(nu: Weight) -> int:
    return un_minus_coeff(nu)


def sch_verma(lam: Weight, depth: int, full: bool = False) -> GrMinusElement:
    """sch M(lam) truncated at height ``depth``.

    Only nu supported on the zero positions of lam can contribute; with
    ``full=True`` every nu of the cone is expanded instead (a cross-check).
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    n = lam.n
    positions = None if full else lam.zero_positions
    out: dict[Weight, int] = {}
    for nu in cone_weights(n, depth, positions):
        m = _coeff_cached(nu)
        if not m:
            continue
        s = sc(nu, lam)
        if s:
            w = nu + lam
            out[w] = out.get(w, 0) + m * s
    return GrMinusElement(out)


# q(2)


def _q2_case(lam: Weight) -> tuple[str, int | Fraction]:
    if lam.n != 2:
        raise ValueError("the q(2) table needs n = 2")
    if not lam.is_dominant():
        raise ValueError(f"{lam.literal()} is not dominant")
    a, b = lam.entries
    if a == 0 and b == 0:
        return "zero", 0
    if a + b == 0:
        s = a
        return ("integral", int(s)) if s.denominator == 1 else ("half", s - Fraction(1, 2))
    if a == 0 or b == 0:
        return "one_zero", 0
    return "typical", 0


def sch_L_q2(lam: Weight) -> ABasisElement:
    kind, s = _q2_case(lam)
    if kind in ("typical", "one_zero"):
        # a one-zero weight (a,0) or (0,-a) is alone in its block
        return ABasisElement.basis(lam)
    if kind == "zero":
        return ABasisElement.one(2)
    if kind == "integral":
        return ABasisElement(2, {Weight([i, -i]): 1 for i in range(1, s + 1)})
    half = Fraction(1, 2)
    return ABasisElement(2, {Weight([i + half, -i - half]): 1 for i in range(int(s) + 1)})


def sch_L_q2_recursive(lam: Weight) -> ABasisElement:
    """Same table from [K(s alpha)] = a_{s alpha} and 0 -> Pi L((s-1)alpha) -> K -> L -> 0.

    In the reduced ring this reads L(s) = K(s) + L(s-1); the bottom of the
    chain is L(alpha) = K(alpha) (V_0 has class 0) or L(alpha/2) = K(alpha/2).
    """
    kind, s = _q2_case(lam)
    if kind not in ("integral", "half"):
        return sch_L_q2(lam)
    K = ABasisElement.basis(lam)
    bottom = 1 if kind == "integral" else 0
    if s == bottom:
        return K
    return K + sch_L_q2_recursive(lam - Weight([1, -1]))


# constraint checkers


def check_block_support(x: GrMinusElement | ABasisElement, lam: Weight) -> bool:
    A = core(lam.entries)
    return all(core(w.entries) == A for w in x.terms)


def _mod4_ok(nu: Weight, lam: Weight) -> bool:
    if nu.rank % 2 or lam.rank % 2:
        return True
    return (nu.rank - lam.rank) % 4 == 0


def check_mod4(x: GrMinusElement | ABasisElement, lam: Weight) -> bool:
    return all(_mod4_ok(w, lam) for w in x.terms)


def mod4_violations(x: GrMinusElement | ABasisElement, lam: Weight) -> list[Weight]:
    return [w for w in sorted(x.terms, key=lambda u: u.entries) if not _mod4_ok(w, lam)]


def check_sch_constraints(x: GrMinusElement | ABasisElement, lam: Weight) -> bool:
    """Block support, zero-count bound and the mod-4 rule for sch L(lam)."""
    if not check_block_support(x, lam):
        return False
    if any(w.zero_count > lam.zero_count for w in x.terms):
        return False
    return check_mod4(x, lam)
