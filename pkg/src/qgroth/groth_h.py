"""Grothendieck rings of the Cartan subalgebra of q(n).

Three coordinate systems appear:

* ``GrXiElement``: classes in Gr(F(h)) written as sum (m + k xi)[C(nu)],
  where xi is parity change.  On I1 weights C ~ Pi C, so only m is kept.
* plus-characters: plain dicts ``Weight -> int`` (the quotient xi = 1).
* ``GrMinusElement``: the reduced ring (xi = -1), integer coefficients on
  I0 weights and mod-2 coefficients on I1 weights.

The structure constant of the reduced ring is ``sc``; it is the sign
by which the product of the canonical xi-monomials of two weights
reorders into the canonical monomial of their sum, times a phase ratio.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .exterior import GaussInt, SpoiledElement
from .weights import (
    Permutation,
    Weight,
    canonical_positions,
    reorder_sign,
    t_data,
    weyl_act,
)

__all__ = [
    "GrXiElement",
    "GrMinusElement",
    "xi_mul",
    "to_plus",
    "to_minus",
    "check_image_pm",
    "embed",
    "from_pm",
    "sc",
    "mul_minus",
    "mul_xi",
    "mul_plus",
    "dual_star",
    "dual_sign",
    "dual_star_module",
    "dual_sharp",
    "psi_h",
    "psi_h_mul",
    "ch_t",
    "weyl_act_minus",
    "product_total_exponent",
    "kernel_dim",
    "kkk_exception",
    "basis_product",
]


def _same_n(weights: Iterable[Weight]) -> int | None:
    ns = {w.n for w in weights}
    if len(ns) > 1:
        raise ValueError("mixed ambient rank in one element")
    return ns.pop() if ns else None


class GrMinusElement:
    """Element of the reduced Grothendieck ring in the [C(nu)] basis."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Weight, int] | None = None):
        out: dict[Weight, int] = {}
        for w, c in (terms or {}).items():
            w = w if isinstance(w, Weight) else Weight(w)
            c = out.get(w, 0) + int(c)
            if w.parity:
                c %= 2
            if c:
                out[w] = c
            else:
                out.pop(w, None)
        _same_n(out)
        self._terms = out

    @classmethod
    def basis(cls, lam: Weight, coeff: int = 1) -> "GrMinusElement":
        return cls({lam: coeff})

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
        return isinstance(other, GrMinusElement) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "GrMinusElement") -> "GrMinusElement":
        t = dict(self._terms)
        for w, c in other._terms.items():
            t[w] = t.get(w, 0) + c
        return GrMinusElement(t)

    def __neg__(self) -> "GrMinusElement":
        return GrMinusElement({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "GrMinusElement") -> "GrMinusElement":
        return self + (-other)

    def scale(self, c: int) -> "GrMinusElement":
        return GrMinusElement({w: c * v for w, v in self._terms.items()})

    def __mul__(self, other: "GrMinusElement") -> "GrMinusElement":
        return mul_minus(self, other)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}[C({w.literal()})]" for w, c in self.items())

    def to_json(self) -> dict:
        terms = []
        for w, c in self.items():
            t: dict = {"weight": [str(a) for a in w], "coeff": str(c)}
            if w.parity:
                t["mod2"] = True
            terms.append(t)
        return {"basis": "C-", "terms": terms}

    @classmethod
    def from_json(cls, obj: dict) -> "GrMinusElement":
        if obj.get("basis", "C-") != "C-":
            raise ValueError("expected a C- basis element")
        t: dict[Weight, int] = {}
        for term in obj["terms"]:
            w = Weight.from_json(term["weight"])
            t[w] = t.get(w, 0) + int(term["coeff"])
        return cls(t)


class GrXiElement:
    """Element of Gr(F(h)): per weight a pair (m, k) meaning (m + k xi)[C(nu)]."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Weight, tuple[int, int]] | None = None):
        out: dict[Weight, tuple[int, int]] = {}
        for w, mk in (terms or {}).items():
            w = w if isinstance(w, Weight) else Weight(w)
            m, k = (int(mk), 0) if isinstance(mk, int) else (int(mk[0]), int(mk[1]))
            m0, k0 = out.get(w, (0, 0))
            m, k = m + m0, k + k0
            if w.parity:
                m, k = m + k, 0
            if m or k:
                out[w] = (m, k)
            else:
                out.pop(w, None)
        _same_n(out)
        self._terms = out

    @classmethod
    def basis(cls, lam: Weight, m: int = 1, k: int = 0) -> "GrXiElement":
        return cls({lam: (m, k)})

    @property
    def terms(self) -> dict[Weight, tuple[int, int]]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda t: t[0].entries)

    def __getitem__(self, w: Weight) -> tuple[int, int]:
        return self._terms.get(w, (0, 0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, GrXiElement) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "GrXiElement") -> "GrXiElement":
        t = dict(self._terms)
        for w, (m, k) in other._terms.items():
            m0, k0 = t.get(w, (0, 0))
            t[w] = (m0 + m, k0 + k)
        return GrXiElement(t)

    def __neg__(self) -> "GrXiElement":
        return GrXiElement({w: (-m, -k) for w, (m, k) in self._terms.items()})

    def __sub__(self, other: "GrXiElement") -> "GrXiElement":
        return self + (-other)

    def __mul__(self, other: "GrXiElement") -> "GrXiElement":
        return mul_xi(self, other)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({m}+{k}xi)[C({w.literal()})]" for w, (m, k) in self.items())

    def to_json(self) -> dict:
        return {
            "basis": "C",
            "terms": [
                {"weight": [str(a) for a in w], "m": str(m), "k": str(k)} for w, (m, k) in self.items()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GrXiElement":
        if obj.get("basis", "C") != "C":
            raise ValueError("expected a C basis element")
        t: dict[Weight, tuple[int, int]] = {}
        for term in obj["terms"]:
            w = Weight.from_json(term["weight"])
            m0, k0 = t.get(w, (0, 0))
            t[w] = (m0 + int(term.get("m", 0)), k0 + int(term.get("k", 0)))
        return cls(t)


# quotients and the decomposition


def xi_mul(x: GrXiElement) -> GrXiElement:
    return GrXiElement({w: (m, k) if w.parity else (k, m) for w, (m, k) in x._terms.items()})


def to_plus(x: GrXiElement) -> dict[Weight, int]:
    return {w: m + k for w, (m, k) in x._terms.items() if m + k}


def to_minus(x: GrXiElement) -> GrMinusElement:
    return GrMinusElement({w: m if w.parity else m - k for w, (m, k) in x._terms.items()})


def embed(x: GrXiElement) -> tuple[dict[Weight, int], GrMinusElement]:
    return to_plus(x), to_minus(x)


def check_image_pm(p: Mapping[Weight, int], q: GrMinusElement | Mapping[Weight, int]) -> bool:
    qt = q.terms if isinstance(q, GrMinusElement) else dict(q)
    for w in set(p) | set(qt):
        a, b = p.get(w, 0), qt.get(w, 0)
        if (a - b) % 2:
            return False
        if w.parity and b not in (0, 1):
            return False
    return True


def from_pm(p: Mapping[Weight, int], q: GrMinusElement) -> GrXiElement:
    """Inverse of ``embed`` on its image."""
    if not check_image_pm(p, q):
        raise ValueError("pair is not in the image of (to_plus, to_minus)")
    qt = q.terms
    out: dict[Weight, tuple[int, int]] = {}
    for w in set(p) | set(qt):
        a, b = p.get(w, 0), qt.get(w, 0)
        out[w] = (a, 0) if w.parity else ((a + b) // 2, (a - b) // 2)
    return GrXiElement(out)


# structure constants


def _phase_ratio(lam: Weight, mu: Weight, nu: Weight) -> int:
    i_count = sum(t_data(w).phase_is_i for w in (lam, mu)) - t_data(nu).phase_is_i
    # i^i_count with i_count in {-1, 0, 1, 2}
    if i_count % 2:
        raise AssertionError(f"imaginary phase ratio for {lam} * {mu}")
    return -1 if i_count == 2 else 1


def sc(lam: Weight, mu: Weight) -> int:
    if lam.n != mu.n:
        raise ValueError("weights of different rank")
    a, b = canonical_positions(lam), canonical_positions(mu)
    if set(a) & set(b) or (len(a) * len(b)) % 2:
        return 0
    nu = lam + mu
    return reorder_sign(a + b, canonical_positions(nu)) * _phase_ratio(lam, mu, nu)


def mul_minus(x: GrMinusElement, y: GrMinusElement) -> GrMinusElement:
    out: dict[Weight, int] = {}
    for lam, c in x._terms.items():
        for mu, d in y._terms.items():
            s = sc(lam, mu)
            if s:
                nu = lam + mu
                out[nu] = out.get(nu, 0) + s * c * d
    return GrMinusElement(out)


def product_total_exponent(lam: Weight, mu: Weight) -> int:
    """log2 of the number of composition factors of C(lam) (x) C(mu)."""
    return lam.n_lambda + mu.n_lambda - (lam + mu).n_lambda


def kernel_dim(lam: Weight, mu: Weight) -> int:
    """dim K_{lam,mu} = dim K_{lam+mu} - dim (K_lam cap K_mu)."""
    nu = lam + mu
    both = sum(1 for a, b in zip(lam, mu) if a == 0 and b == 0)
    return nu.zero_count - both


def kkk_exception(lam: Weight, mu: Weight) -> bool:
    """The case in which C(lam) (x) C(mu) need not be Pi-invariant.

    All of K_lam, K_mu, K_{lam+mu} have even codimension and together they
    span h_1.
    """
    nu = lam + mu
    if lam.rank % 2 or mu.rank % 2 or nu.rank % 2:
        return False
    return all(a == 0 or b == 0 or a + b == 0 for a, b in zip(lam, mu))


def basis_product(lam: Weight, mu: Weight) -> tuple[int, int]:
    """(M, K) with [C(lam)][C(mu)] = (M + K xi)[C(lam + mu)] in Gr(F(h))."""
    total = 1 << product_total_exponent(lam, mu)
    if (lam + mu).parity:
        return total, 0
    s = sc(lam, mu)
    if (total + s) % 2:
        raise AssertionError(f"inconsistent total {total} and sign {s}")
    return (total + s) // 2, (total - s) // 2


def mul_xi(x: GrXiElement, y: GrXiElement) -> GrXiElement:
    out: dict[Weight, tuple[int, int]] = {}
    for lam, (m1, k1) in x._terms.items():
        for mu, (m2, k2) in y._terms.items():
            M, K = basis_product(lam, mu)
            a, b = m1 * m2 + k1 * k2, m1 * k2 + k1 * m2
            nu = lam + mu
            m0, k0 = out.get(nu, (0, 0))
            out[nu] = (m0 + a * M + b * K, k0 + a * K + b * M)
    return GrXiElement(out)


def mul_plus(p: Mapping[Weight, int], q: Mapping[Weight, int]) -> dict[Weight, int]:
    """Product in Gr_+(h): dim C(lam) dim C(mu) / dim C(lam+mu) copies."""
    out: dict[Weight, int] = {}
    for lam, a in p.items():
        for mu, b in q.items():
            nu = lam + mu
            out[nu] = out.get(nu, 0) + a * b * (1 << product_total_exponent(lam, mu))
    return {w: c for w, c in out.items() if c}


# dualities and characters


def dual_star(x: GrMinusElement) -> GrMinusElement:
    return GrMinusElement({-w: c for w, c in x._terms.items()})


def dual_sign(lam: Weight) -> int:
    """C(lam)^* = Pi^e C(-lam); the sign (-1)^e compares the two canonical orders."""
    if lam.parity:
        return 1
    return reorder_sign(canonical_positions(lam), canonical_positions(-lam))


def dual_star_module(x: GrMinusElement) -> GrMinusElement:
    """Class of the dual module, parity included (a ring involution)."""
    return GrMinusElement({-w: dual_sign(w) * c for w, c in x._terms.items()})


def dual_sharp(x: GrXiElement) -> GrXiElement:
    out = {}
    for w, (m, k) in x._terms.items():
        out[w] = (k, m) if (not w.parity and w.rank % 4 == 2) else (m, k)
    return GrXiElement(out)


def ch_t(x: GrXiElement) -> dict[Weight, int]:
    return {w: (m + k) << w.n_lambda for w, (m, k) in x._terms.items() if m + k}


def weyl_act_minus(w: Permutation, x: GrMinusElement) -> GrMinusElement:
    out: dict[Weight, int] = {}
    for lam, c in x._terms.items():
        mu, s = weyl_act(w, lam)
        out[mu] = out.get(mu, 0) + s * c
    return GrMinusElement(out)


# the embedding into Z[i][t] (x) spoiled wedge of xi


def psi_h(x: GrMinusElement) -> list[tuple[Weight, SpoiledElement]]:
    """[C(lam)] -> phase(lam) e^lam T_lam, with T_lam the canonical xi-monomial.

    Monomials are stored with ascending 1-based positions, so the
    coefficient also carries the sign of sorting the canonical order.
    """
    out = []
    for lam, c in x.items():
        pos = canonical_positions(lam)
        s = reorder_sign(pos, tuple(sorted(pos)))
        ph = GaussInt(0, 1) if t_data(lam).phase_is_i else GaussInt(1, 0)
        mono = tuple(p + 1 for p in sorted(pos))
        out.append((lam, SpoiledElement({mono: ph * (s * c)}, "xi", lam.n)))
    return out


def psi_h_mul(
    a: list[tuple[Weight, SpoiledElement]], b: list[tuple[Weight, SpoiledElement]]
) -> list[tuple[Weight, SpoiledElement]]:
    """Product in the target ring: e^lam e^mu = e^(lam+mu), wedge on the xi part."""
    acc: dict[Weight, SpoiledElement] = {}
    for lam, u in a:
        for mu, v in b:
            nu = lam + mu
            p = u * v
            acc[nu] = acc[nu] + p if nu in acc else p
    return sorted(((w, e) for w, e in acc.items() if e), key=lambda t: t[0].entries)
