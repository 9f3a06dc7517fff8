"""Duflo-Serganova maps on reduced Grothendieck rings of q(n).

The index is the total rank drop r: ds_r goes from q(n) to q(n - r).
"""

from __future__ import annotations

from dataclasses import dataclass

from .exterior import SpoiledElement
from .groth_h import GrMinusElement
from .groth_q import ABasisElement, dominant_from_values
from .weights import Weight

__all__ = ["DsIndex", "DropExceedsRank", "ds_a", "ds_h", "ds_model", "check_composition", "smult_restriction_oracle"]


class DropExceedsRank(ValueError):
    def __init__(self):
        super().__init__("drop exceeds rank")


@dataclass(frozen=True)
class DsIndex:
    r: int
    source: int

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("drop must be non-negative")
        if self.r > self.source:
            raise DropExceedsRank()

    @property
    def target(self) -> int:
        return self.source - self.r


def _idx(idx: DsIndex | int, n: int) -> DsIndex:
    if isinstance(idx, DsIndex):
        if idx.source != n:
            raise ValueError("index source does not match the element")
        return idx
    return DsIndex(int(idx), n)


def ds_a(idx: DsIndex | int, x: ABasisElement) -> ABasisElement:
    """a_mu -> a_mu' if mu has at least r zeros (mu' keeps the nonzero values), else 0."""
    d = _idx(idx, x.n)
    out: dict[Weight, int] = {}
    for mu, c in x.terms.items():
        if mu.zero_count < d.r:
            continue
        nu = dominant_from_values(mu.nonzero, d.target)
        out[nu] = out.get(nu, 0) + c
    return ABasisElement(d.target, out)


def ds_h(idx: DsIndex | int, x: GrMinusElement) -> GrMinusElement:
    """[C(lam)] -> [C(lam')] when the last r entries of lam vanish, else 0."""
    terms = x.terms
    n = next(iter(terms)).n if terms else None
    if n is None:
        return GrMinusElement()
    d = _idx(idx, n)
    out: dict[Weight, int] = {}
    for lam, c in terms.items():
        if any(lam.entries[d.target:]):
            continue
        nu = Weight(lam.entries[: d.target])
        out[nu] = out.get(nu, 0) + c
    return GrMinusElement(out)


def ds_model(idx: DsIndex | int, z: SpoiledElement) -> SpoiledElement:
    if z.flavor != "value" or z.bound is None:
        raise ValueError("expected a value-flavor element with a degree bound")
    d = _idx(idx, z.bound)
    return z.truncate(d.target)


def check_composition(i: int, j: int, x: ABasisElement) -> bool:
    if i + j > x.n:
        raise DropExceedsRank()
    return ds_a(i, ds_a(j, x)) == ds_a(i + j, x)


def smult_restriction_oracle(lam: Weight, nu: Weight) -> int:
    """smult of C(nu) in C(lam) restricted to the Cartan of q(n - r), r = n - len(nu).

    The dropped coordinates of the even torus are kept: only the part of
    C(lam) on which they act by 0 survives DS, so a nonzero dropped entry
    gives 0.
    """
    from .oracle.modules import realize_C, restrict, smult_supertrace

    r = lam.n - nu.n
    if r < 0:
        raise DropExceedsRank()
    res = restrict(realize_C(lam), r)
    if res.weight != nu:
        return 0
    return smult_supertrace(res, nu)
