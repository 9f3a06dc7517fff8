"""Weights of q(n): profiles, cores, the Weyl group action and t-data."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Weight",
    "Profile",
    "CoreMultiset",
    "Permutation",
    "TData",
    "NotRegularDominantError",
    "classify",
    "core",
    "diamond",
    "t_data",
    "canonical_positions",
    "weyl_act",
    "dominant_representative",
    "abar",
    "permutation_sign",
    "reorder_sign",
]


class NotRegularDominantError(ValueError):
    """Raised when a W-orbit contains no dominant weight."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("weights are exact; pass a string, int or Fraction")
    return Fraction(str(x).strip()) if isinstance(x, str) else Fraction(x)


@dataclass(frozen=True)
class Weight:
    entries: tuple[Fraction, ...]

    def __init__(self, entries: Iterable):
        object.__setattr__(self, "entries", tuple(_frac(e) for e in entries))

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """Parse a literal such as ``"3,1,0,-2"`` or ``"3/2,-1/2"``."""
        parts = [p for p in text.replace(" ", "").split(",")]
        if not parts or any(p == "" for p in parts):
            raise ValueError(f"malformed weight literal {text!r}")
        return cls(parts)

    @classmethod
    def zero(cls, n: int) -> "Weight":
        return cls([0] * n)

    @classmethod
    def from_json(cls, obj) -> "Weight":
        if isinstance(obj, dict):
            w = cls(obj["entries"])
            if "n" in obj and int(obj["n"]) != w.n:
                raise ValueError("weight length does not match n")
            return w
        return cls(obj)

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [str(e) for e in self.entries]}

    def literal(self) -> str:
        return ",".join(str(e) for e in self.entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __add__(self, other: "Weight") -> "Weight":
        if self.n != other.n:
            raise ValueError("weights of different rank")
        return Weight(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def __neg__(self) -> "Weight":
        return Weight(-a for a in self.entries)

    def __repr__(self) -> str:
        return f"Weight({self.literal()})"

    # support data

    @property
    def support(self) -> tuple[int, ...]:
        """0-based positions of the nonzero entries."""
        return tuple(i for i, a in enumerate(self.entries) if a != 0)

    @property
    def zero_positions(self) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.entries) if a == 0)

    @property
    def nonzero(self) -> tuple[Fraction, ...]:
        """Nonzero entries, sorted descending."""
        return tuple(sorted((a for a in self.entries if a != 0), reverse=True))

    @property
    def rank(self) -> int:
        return sum(1 for a in self.entries if a != 0)

    @property
    def zero_count(self) -> int:
        return self.n - self.rank

    @property
    def parity(self) -> int:
        """0 for I0, 1 for I1."""
        return self.rank % 2

    @property
    def n_lambda(self) -> int:
        """log2 of dim C(lambda)."""
        return (self.rank + 1) // 2

    @property
    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.entries)

    @property
    def is_half_integral(self) -> bool:
        return all((a - Fraction(1, 2)).denominator == 1 for a in self.entries)

    def is_dominant(self) -> bool:
        e = self.entries
        for a, b in zip(e, e[1:]):
            d = a - b
            if d < 0 or d.denominator != 1:
                return False
            if d == 0 and a != 0:
                return False
        return True

    def is_typical(self) -> bool:
        vals = self.entries
        return all(a + b != 0 for i, a in enumerate(vals) for b in vals[i:])

    def permuted(self, w: "Permutation") -> "Weight":
        out: list[Fraction] = [Fraction(0)] * self.n
        for i, a in enumerate(self.entries):
            out[w.image[i] - 1] = a
        return Weight(out)


@dataclass(frozen=True)
class Profile:
    nonzero: tuple[Fraction, ...]
    zero_count: int
    rank_F: int
    parity_class: str
    dominant: bool
    typical: bool

    def to_json(self) -> dict:
        return {
            "nonzero": [str(a) for a in self.nonzero],
            "zero_count": str(self.zero_count),
            "rank_F": str(self.rank_F),
            "parity_class": self.parity_class,
            "dominant": self.dominant,
            "typical": self.typical,
        }


def classify(lam: Weight) -> Profile:
    return Profile(
        nonzero=lam.nonzero,
        zero_count=lam.zero_count,
        rank_F=lam.rank,
        parity_class="I1" if lam.parity else "I0",
        dominant=lam.is_dominant(),
        typical=lam.is_typical(),
    )


# cores and the monoid of multisets


@dataclass(frozen=True)
class CoreMultiset:
    values: tuple[Fraction, ...]

    def __init__(self, values: Iterable = ()):
        vals = tuple(sorted((_frac(v) for v in values), reverse=True))
        c = Counter(vals)
        if 0 in c:
            raise ValueError("a core contains no zero")
        if any(-a in c for a in c):
            raise ValueError("a core contains no cancelling pair")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def to_json(self) -> list[str]:
        return [str(a) for a in self.values]

    def __repr__(self) -> str:
        return "Core{" + ",".join(str(a) for a in self.values) + "}"


def core(ms: Iterable) -> CoreMultiset:
    """Drop zeros and maximal families of cancelling pairs (a, -a)."""
    c = Counter(_frac(v) for v in ms)
    c.pop(Fraction(0), None)
    out: list[Fraction] = []
    for a in {abs(v) for v in c}:
        d = c[a] - c[-a]
        out.extend([a if d > 0 else -a] * abs(d))
    return CoreMultiset(out)


def diamond(A: CoreMultiset, B: CoreMultiset) -> CoreMultiset:
    return core(list(A.values) + list(B.values))


def abar(A: CoreMultiset | Iterable) -> int:
    vals = list(A.values if isinstance(A, CoreMultiset) else A)
    pos = sum(1 for a in vals if a > 0)
    neg = sum(1 for a in vals if a < 0)
    d = pos - neg if len(vals) % 2 == 0 else pos - neg - 1
    assert d % 2 == 0, "malformed core"
    return (d // 2) % 2


# t-data


@dataclass(frozen=True)
class TData:
    t_squared: Fraction
    phase: str  # "1" or "i"

    @property
    def phase_is_i(self) -> bool:
        return self.phase == "i"


def t_data(lam: Weight) -> TData:
    k = lam.rank
    prod = Fraction(1)
    for a in lam.entries:
        if a != 0:
            prod *= a
    t2 = prod if (k * (k - 1) // 2) % 2 == 0 else -prod
    return TData(t2, "1" if t2 > 0 else "i")


def canonical_positions(lam: Weight) -> tuple[int, ...]:
    """0-based support of lam in the order used for T_lam.

    Descending value, ties broken by descending position.
    """
    return tuple(sorted(lam.support, key=lambda i: (lam.entries[i], i), reverse=True))


# permutations


def permutation_sign(seq: Sequence) -> int:
    """Sign of the permutation sorting ``seq`` ascending (entries distinct)."""
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def reorder_sign(seq: Sequence, target: Sequence) -> int:
    """Sign of the permutation taking ``seq`` to ``target`` (same elements)."""
    rank = {x: i for i, x in enumerate(target)}
    if len(rank) != len(seq) or any(x not in rank for x in seq):
        raise ValueError("sequences are not rearrangements of each other")
    return permutation_sign([rank[x] for x in seq])


@dataclass(frozen=True)
class Permutation:
    image: tuple[int, ...]  # 1-based, position i goes to image[i-1]

    def __init__(self, image: Iterable[int]):
        img = tuple(int(x) for x in image)
        if sorted(img) != list(range(1, len(img) + 1)):
            raise ValueError(f"not a permutation of 1..{len(img)}: {img}")
        object.__setattr__(self, "image", img)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        img = list(range(1, n + 1))
        img[i - 1], img[j - 1] = img[j - 1], img[i - 1]
        return cls(img)

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (self * other)(i) = self(other(i))."""
        return Permutation(self.image[j - 1] for j in other.image)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.image):
            inv[j - 1] = i + 1
        return Permutation(inv)

    @property
    def sign(self) -> int:
        return permutation_sign(self.image)


def weyl_act(w: Permutation, lam: Weight) -> tuple[Weight, int]:
    if w.n != lam.n:
        raise ValueError("permutation and weight have different n")
    mu = lam.permuted(w)
    moved = [w.image[i] - 1 for i in canonical_positions(lam)]
    return mu, reorder_sign(moved, canonical_positions(mu))


def dominant_representative(lam: Weight) -> tuple[Weight, Permutation]:
    nz = [a for a in lam.entries if a != 0]
    if len(set(nz)) != len(nz):
        raise NotRegularDominantError("orbit not regular-dominant")
    order = sorted(range(lam.n), key=lambda i: -lam.entries[i])
    img = [0] * lam.n
    for new, old in enumerate(order):
        img[old] = new + 1
    w = Permutation(img)
    return lam.permuted(w), w

