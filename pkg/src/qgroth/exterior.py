"""Spoiled coefficient arithmetic and sparse wedge monomials.

An element is a map from strictly increasing index tuples to Gaussian
integers.  The parity of a monomial's degree decides its coefficient ring:
even monomials carry Z[i], odd ones carry Z[i]/2, and odd * odd = 0.
Two index flavors exist: ``"value"`` (rational labels v_a, the model
(wedge V)^spoil / J_n) and ``"xi"`` (positions 1..n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .weights import CoreMultiset, abar, core, permutation_sign

__all__ = ["GaussInt", "SpoiledElement", "wedge", "wedge_mul", "core_component", "abar_component"]


@dataclass(frozen=True)
class GaussInt:
    re: int = 0
    im: int = 0

    @classmethod
    def coerce(cls, x) -> "GaussInt":
        if isinstance(x, GaussInt):
            return x
        if isinstance(x, complex):
            if x.real != int(x.real) or x.imag != int(x.imag):
                raise ValueError("non-integral Gaussian value")
            return cls(int(x.real), int(x.imag))
        return cls(int(x), 0)

    def __add__(self, o) -> "GaussInt":
        o = GaussInt.coerce(o)
        return GaussInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussInt":
        return GaussInt(-self.re, -self.im)

    def __sub__(self, o) -> "GaussInt":
        return self + (-GaussInt.coerce(o))

    def __mul__(self, o) -> "GaussInt":
        o = GaussInt.coerce(o)
        return GaussInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def mod2(self) -> "GaussInt":
        return GaussInt(self.re % 2, self.im % 2)

    def conj(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def is_unit(self) -> bool:
        return abs(self.re) + abs(self.im) == 1

    def __repr__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        return f"({self.re}{self.im:+d}i)"


ONE = GaussInt(1, 0)
I = GaussInt(0, 1)


def _key(idx: Iterable, flavor: str) -> tuple:
    if flavor == "value":
        return tuple(Fraction(str(a)) if isinstance(a, str) else Fraction(a) for a in idx)
    return tuple(int(a) for a in idx)


def _merge(a: tuple, b: tuple) -> tuple[int, tuple] | None:
    """Sign and sorted union of two increasing monomials, None if they overlap."""
    if set(a) & set(b):
        return None
    inv = 0
    j = 0
    # count pairs (x in a, y in b) with x > y
    for x in a:
        while j < len(b) and b[j] < x:
            j += 1
        inv += j
    return (-1 if inv % 2 else 1), tuple(sorted(a + b))


def _normal(mono: tuple, c: GaussInt) -> GaussInt:
    return c.mod2() if len(mono) % 2 else c


class SpoiledElement:
    """Immutable sparse element of a spoiled exterior algebra."""

    __slots__ = ("flavor", "bound", "_terms", "_hash")

    def __init__(self, terms: Mapping | None = None, flavor: str = "value", bound: int | None = None):
        if flavor not in ("value", "xi"):
            raise ValueError(f"unknown flavor {flavor!r}")
        if flavor == "value" and bound is None:
            raise ValueError("value flavor needs a degree bound")
        self.flavor = flavor
        self.bound = bound
        out: dict[tuple, GaussInt] = {}
        for mono, c in (terms or {}).items():
            mono = _key(mono, flavor)
            if list(mono) != sorted(set(mono)):
                raise ValueError(f"monomial {mono} is not strictly increasing")
            if bound is not None and len(mono) > bound:
                continue
            c = _normal(mono, out.get(mono, GaussInt()) + GaussInt.coerce(c))
            if c:
                out[mono] = c
            else:
                out.pop(mono, None)
        self._terms = out
        self._hash = None

    # construction helpers

    @classmethod
    def zero(cls, flavor: str = "value", bound: int | None = None) -> "SpoiledElement":
        return cls({}, flavor, bound)

    @classmethod
    def one(cls, flavor: str = "value", bound: int | None = None) -> "SpoiledElement":
        return cls({(): ONE}, flavor, bound)

    def _like(self, terms: Mapping) -> "SpoiledElement":
        return SpoiledElement(terms, self.flavor, self.bound)

    @property
    def terms(self) -> dict[tuple, GaussInt]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coefficient(self, mono: Iterable) -> GaussInt:
        return self._terms.get(_key(mono, self.flavor), GaussInt())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check(self, other: "SpoiledElement") -> None:
        if self.flavor != other.flavor or self.bound != other.bound:
            raise ValueError("flavor or degree bound mismatch")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpoiledElement):
            return NotImplemented
        return (self.flavor, self.bound, self._terms) == (other.flavor, other.bound, other._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.flavor, self.bound, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other: "SpoiledElement") -> "SpoiledElement":
        self._check(other)
        t = dict(self._terms)
        for m, c in other._terms.items():
            t[m] = t.get(m, GaussInt()) + c
        return self._like(t)

    def __neg__(self) -> "SpoiledElement":
        return self._like({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "SpoiledElement") -> "SpoiledElement":
        return self + (-other)

    def scale(self, c) -> "SpoiledElement":
        c = GaussInt.coerce(c)
        return self._like({m: c * v for m, v in self._terms.items()})

    def __mul__(self, other: "SpoiledElement") -> "SpoiledElement":
        return wedge_mul(self, other)

    def even_part(self) -> "SpoiledElement":
        return self._like({m: c for m, c in self._terms.items() if len(m) % 2 == 0})

    def odd_part(self) -> "SpoiledElement":
        return self._like({m: c for m, c in self._terms.items() if len(m) % 2})

    def truncate(self, bound: int) -> "SpoiledElement":
        return SpoiledElement({m: c for m, c in self._terms.items() if len(m) <= bound}, self.flavor, bound)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        name = "v" if self.flavor == "value" else "xi"
        parts = []
        for m, c in self.items():
            mono = "^".join(f"{name}{a}" for a in m) or "1"
            parts.append(f"{c!r}*{mono}" + (" (mod 2)" if len(m) % 2 else ""))
        return " + ".join(parts)

    # serialization

    def to_json(self) -> dict:
        terms = []
        for m, c in self.items():
            t = {"mono": [str(a) for a in m], "re": c.re, "im": c.im}
            if len(m) % 2:
                t["mod2"] = True
            terms.append(t)
        out: dict = {"flavor": self.flavor}
        if self.bound is not None:
            out["bound"] = self.bound
        out["terms"] = terms
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "SpoiledElement":
        terms: dict[tuple, GaussInt] = {}
        flavor = obj.get("flavor", "value")
        for t in obj.get("terms", []):
            m = _key(t["mono"], flavor)
            terms[m] = terms.get(m, GaussInt()) + GaussInt(int(t.get("re", 0)), int(t.get("im", 0)))
        return cls(terms, flavor, obj.get("bound"))


def wedge(*indices, coeff=1, flavor: str = "value", bound: int | None = None) -> SpoiledElement:
    """The monomial v_{i1} ^ ... ^ v_{ik} in the order given (sign from sorting)."""
    idx = _key(indices, flavor)
    if len(set(idx)) != len(idx):
        return SpoiledElement.zero(flavor, bound)
    s = permutation_sign(idx)
    return SpoiledElement({tuple(sorted(idx)): GaussInt.coerce(coeff) * s}, flavor, bound)


def wedge_mul(x: SpoiledElement, y: SpoiledElement) -> SpoiledElement:
    x._check(y)
    out: dict[tuple, GaussInt] = {}
    for a, ca in x._terms.items():
        for b, cb in y._terms.items():
            if len(a) % 2 and len(b) % 2:
                continue
            if x.bound is not None and len(a) + len(b) > x.bound:
                continue
            r = _merge(a, b)
            if r is None:
                continue
            s, m = r
            out[m] = out.get(m, GaussInt()) + ca * cb * s
    return x._like(out)


def core_component(x: SpoiledElement, A: CoreMultiset) -> SpoiledElement:
    if x.flavor != "value":
        raise ValueError("core grading needs value-flavor monomials")
    return x._like({m: c for m, c in x._terms.items() if core(m) == A})


def abar_component(x: SpoiledElement, p: int) -> SpoiledElement:
    if x.flavor != "value":
        raise ValueError("abar grading needs value-flavor monomials")
    return x._like({m: c for m, c in x._terms.items() if abar(core(m)) == p % 2})
