"""The reduced Grothendieck ring of q(n) in the a-basis.

a_nu is the signed W-orbit sum of [C(nu)] over dominant nu.  Products are
computed natively through value monomials: a_lam corresponds to
phase(lam) v_{j1} ^ ... ^ v_{jk} with j1 > ... > jk the nonzero entries.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Iterable, Mapping

from .exterior import GaussInt, SpoiledElement
from .groth_h import GrMinusElement
from .weights import (
    NotRegularDominantError,
    Permutation,
    Weight,
    dominant_representative,
    permutation_sign,
    t_data,
    weyl_act,
)

__all__ = [
    "ABasisElement",
    "NotInvariantError",
    "symmetrize",
    "invariant_expand",
    "dominant_from_values",
    "mul_a",
    "a_product",
    "psi_g",
    "psi_g_inverse",
    "ev0",
    "dual_star_a",
    "sch_typical",
]


class NotInvariantError(ValueError):
    def __init__(self, msg: str, witness: Weight | None = None):
        super().__init__(msg)
        self.witness = witness


class ABasisElement:
    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Weight, int] | None = None):
        self.n = n
        out: dict[Weight, int] = {}
        for w, c in (terms or {}).items():
            w = w if isinstance(w, Weight) else Weight(w)
            if w.n != n:
                raise ValueError("weight of the wrong ambient rank")
            if not w.is_dominant():
                raise ValueError(f"a-basis keys are dominant weights, got {w}")
            c = out.get(w, 0) + int(c)
            if w.parity:
                c %= 2
            if c:
                out[w] = c
            else:
                out.pop(w, None)
        self._terms = out

    @classmethod
    def basis(cls, nu: Weight, coeff: int = 1) -> "ABasisElement":
        return cls(nu.n, {nu: coeff})

    @classmethod
    def one(cls, n: int) -> "ABasisElement":
        return cls(n, {Weight.zero(n): 1})

    @property
    def terms(self) -> dict[Weight, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda t: t[0].entries)

    def __getitem__(self, w: Weight) -> int:
        return self._terms.get(w, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, ABasisElement) and self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def _check(self, other: "ABasisElement") -> None:
        if self.n != other.n:
            raise ValueError("ambient rank mismatch")

    def __add__(self, other: "ABasisElement") -> "ABasisElement":
        self._check(other)
        t = dict(self._terms)
        for w, c in other._terms.items():
            t[w] = t.get(w, 0) + c
        return ABasisElement(self.n, t)

    def __neg__(self) -> "ABasisElement":
        return ABasisElement(self.n, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "ABasisElement") -> "ABasisElement":
        return self + (-other)

    def scale(self, c: int) -> "ABasisElement":
        return ABasisElement(self.n, {w: c * v for w, v in self._terms.items()})

    def __mul__(self, other: "ABasisElement") -> "ABasisElement":
        return mul_a(self, other)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*a({w.literal()})" for w, c in self.items())

    def to_json(self) -> dict:
        terms = []
        for w, c in self.items():
            t: dict = {"weight": [str(a) for a in w], "coeff": str(c)}
            if w.parity:
                t["mod2"] = True
            terms.append(t)
        return {"basis": "a", "n": self.n, "terms": terms}

    @classmethod
    def from_json(cls, obj: dict) -> "ABasisElement":
        if obj.get("basis", "a") != "a":
            raise ValueError("expected an a-basis element")
        terms: dict[Weight, int] = {}
        for t in obj["terms"]:
            w = Weight.from_json(t["weight"])
            terms[w] = terms.get(w, 0) + int(t["coeff"])
        n = int(obj["n"]) if "n" in obj else (next(iter(terms)).n if terms else 0)
        return cls(n, terms)


# orbit sums


def _orbit(nu: Weight) -> dict[Weight, int]:
    """Distinct W-translates of nu with their weyl_act signs."""
    out: dict[Weight, int] = {}
    n = nu.n
    for img in permutations(range(1, n + 1)):
        mu, s = weyl_act(Permutation(img), nu)
        if mu in out:
            if out[mu] != s and not mu.parity:
                raise NotRegularDominantError(f"stabilizer of {nu} acts by a sign")
            continue
        out[mu] = s
    return out


def symmetrize(nu: Weight) -> GrMinusElement:
    if not nu.is_dominant():
        raise ValueError(f"{nu.literal()} is not dominant")
    return GrMinusElement(_orbit(nu))


def invariant_expand(x: GrMinusElement) -> ABasisElement:
    terms = x.terms
    if not terms:
        return ABasisElement(0)
    n = next(iter(terms)).n
    out: dict[Weight, int] = {}
    rest = dict(terms)
    while rest:
        w = min(rest, key=lambda u: u.entries)
        try:
            dom, _ = dominant_representative(w)
        except NotRegularDominantError:
            raise NotInvariantError(f"not W-invariant: term at {w.literal()}", w) from None
        if not dom.is_dominant():
            raise NotInvariantError(f"orbit of {w.literal()} has no dominant weight", w)
        c = rest.get(dom, 0)
        if not c:
            raise NotInvariantError(f"not W-invariant: term at {w.literal()}", w)
        out[dom] = c
        for mu, s in _orbit(dom).items():
            v = rest.get(mu, 0) - c * s
            if mu.parity:
                v %= 2
            if v:
                rest[mu] = v
            else:
                rest.pop(mu, None)
    return ABasisElement(n, out)


# products


def dominant_from_values(values: Iterable[Fraction], n: int) -> Weight:
    """The dominant weight of q(n) whose nonzero entries are ``values``."""
    vals = sorted((Fraction(v) for v in values), reverse=True)
    if len(vals) > n:
        raise ValueError("more values than the ambient rank")
    if len(set(vals)) != len(vals):
        raise NotRegularDominantError("repeated value")
    pos = [v for v in vals if v > 0]
    neg = [v for v in vals if v < 0]
    w = Weight(pos + [0] * (n - len(vals)) + neg)
    if not w.is_dominant():
        raise ValueError(f"values {[str(v) for v in vals]} give no dominant weight of q({n})")
    return w


def _phase_count(w: Weight) -> int:
    return 1 if t_data(w).phase_is_i else 0


def a_product(lam: Weight, mu: Weight) -> tuple[Weight, int] | None:
    """a_lam a_mu = s a_tau; None when the product is 0."""
    A, B = lam.nonzero, mu.nonzero
    if set(A) & set(B) or (len(A) % 2 and len(B) % 2) or len(A) + len(B) > lam.n:
        return None
    tau = dominant_from_values(A + B, lam.n)
    # sign of sorting the concatenation of two descending sequences descending
    s = permutation_sign([-a for a in A + B])
    k = _phase_count(lam) + _phase_count(mu) - _phase_count(tau)
    if k % 2:
        raise AssertionError(f"imaginary phase ratio for a({lam}) a({mu})")
    return tau, (-s if k == 2 else s)


def mul_a(x: ABasisElement, y: ABasisElement) -> ABasisElement:
    x._check(y)
    out: dict[Weight, int] = {}
    for lam, c in x._terms.items():
        for mu, d in y._terms.items():
            r = a_product(lam, mu)
            if r:
                tau, s = r
                out[tau] = out.get(tau, 0) + s * c * d
    return ABasisElement(x.n, out)


# the model (wedge V)^spoil / J_n


def _phase(w: Weight) -> GaussInt:
    return GaussInt(0, 1) if t_data(w).phase_is_i else GaussInt(1, 0)


def psi_g(x: ABasisElement) -> SpoiledElement:
    terms: dict[tuple, GaussInt] = {}
    for lam, c in x._terms.items():
        vals = lam.nonzero  # descending
        k = len(vals)
        rev = -1 if (k * (k - 1) // 2) % 2 else 1
        mono = tuple(reversed(vals))
        terms[mono] = terms.get(mono, GaussInt()) + _phase(lam) * (rev * c)
    return SpoiledElement(terms, "value", x.n)


def psi_g_inverse(z: SpoiledElement) -> ABasisElement:
    if z.flavor != "value" or z.bound is None:
        raise ValueError("expected a value-flavor element with a degree bound")
    n = z.bound
    out: dict[Weight, int] = {}
    for mono, c in z.items():
        lam = dominant_from_values(mono, n)
        k = len(mono)
        rev = -1 if (k * (k - 1) // 2) % 2 else 1
        ph = _phase(lam)
        # c = ph * rev * coeff, with ph a unit; divide by ph
        q = c * ph.conj() * rev
        if k % 2:
            q = q.mod2()
            if q.im:
                raise ValueError(f"coefficient {c} at {mono} is not in the image")
            out[lam] = q.re
        else:
            if q.im:
                raise ValueError(f"coefficient {c} at {mono} is not in the image")
            out[lam] = q.re
    return ABasisElement(n, out)


def ev0(x: ABasisElement) -> int:
    return x[Weight.zero(x.n)]


def dual_star_a(x: ABasisElement) -> ABasisElement:
    return ABasisElement(x.n, {Weight(-a for a in reversed(w.entries)): c for w, c in x._terms.items()})


def sch_typical(lam: Weight) -> ABasisElement:
    if not lam.is_dominant():
        raise ValueError(f"{lam.literal()} is not dominant")
    if not lam.is_typical():
        raise ValueError(f"{lam.literal()} is atypical; see qgroth.supercharacter")
    return ABasisElement.basis(lam)
