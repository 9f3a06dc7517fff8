"""Exact arithmetic in multi-quadratic extensions of Q.

A value is sum c_d sqrt(d) over squarefree integers d (negative allowed,
with sqrt(-a) = i sqrt(a) for a > 0).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Mapping

from sympy import factorint

__all__ = ["QuadNum", "squarefree_split"]


@lru_cache(maxsize=None)
def squarefree_split(m: int) -> tuple[int, int]:
    """Write a nonzero integer m as s * d with d squarefree (sign kept in d)."""
    if m == 0:
        raise ValueError("zero has no squarefree part")
    s, d = 1, (-1 if m < 0 else 1)
    for p, e in factorint(abs(m)).items():
        s *= p ** (e // 2)
        if e % 2:
            d *= p
    return s, d


@lru_cache(maxsize=None)
def _radical_product(a: int, b: int) -> tuple[int, int]:
    """sqrt(a) sqrt(b) = c sqrt(d) for squarefree a, b."""
    i_pow = (a < 0) + (b < 0)
    g = gcd(abs(a), abs(b))
    d = abs(a) * abs(b) // (g * g)
    c = g
    # i^i_pow * sqrt(d): i^2 = -1, i^1 = sqrt(-1) folded into the radicand
    if i_pow == 2:
        c = -c
    elif i_pow == 1:
        d = -d
    return c, d


def _smallest_prime(d: int) -> int:
    """-1 for d = -1, else a prime dividing |d| (d squarefree, |d| > 1 or d < 0)."""
    if abs(d) == 1:
        return -1
    return min(factorint(abs(d)))


def _norm(c):
    """Integral coefficients are kept as ints; they are much cheaper than Fractions."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class QuadNum:
    __slots__ = ("_c", "_h")

    def __init__(self, coeffs: Mapping[int, Fraction] | int | Fraction | None = None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, dict) and not isinstance(coeffs, Mapping):
            coeffs = {1: coeffs}
        self._c = {d: _norm(Fraction(c)) for d, c in coeffs.items() if c != 0}
        self._h = None

    @classmethod
    def _raw(cls, coeffs: dict) -> "QuadNum":
        # coeffs already nonzero and normalized
        obj = object.__new__(cls)
        obj._c = coeffs
        obj._h = None
        return obj

    @classmethod
    def sqrt(cls, q) -> "QuadNum":
        """sqrt of a rational, with sqrt(-a) = i sqrt(a)."""
        q = Fraction(q)
        if q == 0:
            return cls()
        s, d = squarefree_split(q.numerator * q.denominator)
        return cls({d: Fraction(s, q.denominator)})

    @classmethod
    def i(cls) -> "QuadNum":
        return cls({-1: Fraction(1)})

    @staticmethod
    def coerce(x) -> "QuadNum":
        return x if isinstance(x, QuadNum) else QuadNum(x)

    @property
    def radicands(self) -> frozenset[int]:
        return frozenset(self._c)

    def coefficient(self, d: int) -> Fraction:
        return Fraction(self._c.get(d, 0))

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QuadNum(other)
        return isinstance(other, QuadNum) and self._c == other._c

    def __hash__(self) -> int:
        if self._h is None:
            self._h = hash(frozenset(self._c.items()))
        return self._h

    def __add__(self, other) -> "QuadNum":
        other = QuadNum.coerce(other)
        if not other._c:
            return self
        if not self._c:
            return other
        out = dict(self._c)
        for d, c in other._c.items():
            v = out.get(d, 0) + c
            if v:
                out[d] = _norm(v)
            else:
                del out[d]
        return QuadNum._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "QuadNum":
        return QuadNum._raw({d: -c for d, c in self._c.items()})

    def __sub__(self, other) -> "QuadNum":
        return self + (-QuadNum.coerce(other))

    def __rsub__(self, other) -> "QuadNum":
        return QuadNum.coerce(other) - self

    def __mul__(self, other) -> "QuadNum":
        if isinstance(other, (int, Fraction)):
            return QuadNum({d: c * other for d, c in self._c.items()})
        sc, oc = self._c, other._c
        if len(sc) == 1 and len(oc) == 1:
            (a, x), = sc.items()
            (b, y), = oc.items()
            c, d = _radical_product(a, b)
            return QuadNum._raw({d: _norm(c * x * y)})
        out: dict[int, Fraction] = {}
        for a, x in sc.items():
            for b, y in oc.items():
                c, d = _radical_product(a, b)
                out[d] = out.get(d, 0) + c * x * y
        return QuadNum._raw({d: _norm(v) for d, v in out.items() if v})

    __rmul__ = __mul__

    def sigma(self, p: int) -> "QuadNum":
        """Field automorphism negating sqrt(p) (p prime, or p = -1 for i)."""
        out = {}
        for d, c in self._c.items():
            flip = (d < 0) if p == -1 else (abs(d) % p == 0)
            out[d] = -c if flip else c
        return QuadNum(out)

    def conj(self) -> "QuadNum":
        """Complex conjugation."""
        return self.sigma(-1)

    def inverse(self) -> "QuadNum":
        if not self._c:
            raise ZeroDivisionError("QuadNum inverse of zero")
        if self.is_rational():
            return QuadNum(1 / self.to_fraction())
        # pick a generator moving some radicand; x * sigma(x) lies in a smaller field
        d = next(r for r in sorted(self._c, key=abs) if r != 1)
        p = _smallest_prime(d)
        s = self.sigma(p)
        return s * (self * s).inverse()

    def __truediv__(self, other) -> "QuadNum":
        return self * QuadNum.coerce(other).inverse()

    def __rtruediv__(self, other) -> "QuadNum":
        return QuadNum.coerce(other) * self.inverse()

    def __pow__(self, e: int) -> "QuadNum":
        if e < 0:
            return self.inverse() ** (-e)
        out, base = QuadNum(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def is_rational(self) -> bool:
        return set(self._c) <= {1}

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._c.get(1, 0))

    def to_int(self) -> int:
        f = self.to_fraction()
        if f.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return f.numerator

    def __complex__(self) -> complex:
        z = 0j
        for d, c in self._c.items():
            z += float(c) * (1j if d < 0 else 1) * abs(d) ** 0.5
        return z

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for d in sorted(self._c, key=lambda r: (abs(r), r)):
            c = self._c[d]
            if d == 1:
                parts.append(str(c))
            else:
                rad = "i" if d == -1 else (f"sqrt({d})" if d > 0 else f"i*sqrt({-d})")
                parts.append(rad if c == 1 else f"{c}*{rad}")
        return " + ".join(parts)

