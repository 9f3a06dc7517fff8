"""Explicit matrix realizations of Clifford modules over the Cartan of q(n)."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from ..weights import Weight, canonical_positions, t_data
from .linalg import SuperMatrix, Subspace, image, joint_kernel, restricted_trace
from .quadnum import QuadNum

__all__ = [
    "OracleScaleError",
    "CliffordModule",
    "max_oracle_dim",
    "realize_C",
    "realize_C_fermionic",
    "T_matrix",
    "t_value",
    "smult_supertrace",
    "tensor_modules",
    "direct_sum",
    "parity_shift",
    "restrict",
    "socle",
    "socle_signed",
    "injective_hull",
]

DEFAULT_MAX_DIM = 64


class OracleScaleError(RuntimeError):
    pass


def max_oracle_dim() -> int:
    return int(os.environ.get("QGROTH_MAX_ORACLE_DIM", DEFAULT_MAX_DIM))


def _guard(dim: int) -> None:
    if dim > max_oracle_dim():
        raise OracleScaleError(f"module dimension {dim} exceeds oracle limit {max_oracle_dim()}")


@dataclass
class CliffordModule:
    """gens[i] is the image of H_{i+1}; delta is the grading operator.

    ``dropped`` holds torus eigenvalues of coordinates removed by restriction.
    """

    weight: Weight
    gens: list[SuperMatrix]
    delta: SuperMatrix
    dropped: tuple[Fraction, ...] = field(default=())

    @property
    def n(self) -> int:
        return self.weight.n

    @property
    def dim(self) -> int:
        return self.delta.dim

    @property
    def par(self) -> tuple[int, ...]:
        return self.delta.par

    @property
    def sdim(self) -> tuple[int, int]:
        return self.delta.blocks

    def check_relations(self) -> bool:
        ident = SuperMatrix.identity(self.dim)
        for i, g in enumerate(self.gens):
            if not g.is_zero() and g.parity_of() != 1:
                return False
            if not (g @ self.delta + self.delta @ g).is_zero():
                return False
            for j in range(i, len(self.gens)):
                h = self.gens[j]
                ac = g @ h + h @ g
                want = ident.scale(2 * self.weight[i]) if i == j else SuperMatrix.zero(self.dim)
                if ac != want:
                    return False
        return self.delta @ self.delta == ident


_X = SuperMatrix.from_rows([[0, 1], [1, 0]])
_Y = SuperMatrix.from_rows([[0, -QuadNum.i()], [QuadNum.i(), 0]])
_Z = SuperMatrix.diagonal([1, -1])
_I2 = SuperMatrix.identity(2)


def _chain(m: int, slot: int, mat: SuperMatrix) -> SuperMatrix:
    """Z^(slot) (x) mat (x) I^(m - slot - 1)."""
    out = SuperMatrix.identity(1)
    for s in range(m):
        out = out.kron(_Z if s < slot else (mat if s == slot else _I2))
    return out


def _parity_from_delta(delta: SuperMatrix) -> tuple[int, ...]:
    return tuple(0 if delta.entry(i, i) == QuadNum(1) else 1 for i in range(delta.dim))


def _finish(lam: Weight, gammas: list[SuperMatrix], delta: SuperMatrix) -> CliffordModule:
    dim = delta.dim
    gens = [SuperMatrix.zero(dim)] * lam.n
    for j, pos in enumerate(lam.support):
        gens[pos] = gammas[j].scale(QuadNum.sqrt(lam[pos]))
    if lam.parity == 0:
        t = t_value(lam)
        T = SuperMatrix.identity(dim)
        for p in canonical_positions(lam):
            T = T @ gens[p]
        if T != delta.scale(t):
            if T == delta.scale(-t):
                delta = -delta
            else:
                raise AssertionError(f"T_lambda is not proportional to the grading for {lam}")
    par = _parity_from_delta(delta)
    delta = delta.with_parity(par)
    return CliffordModule(lam, [g.with_parity(par) for g in gens], delta)


@lru_cache(maxsize=4096)
def realize_C(lam: Weight) -> CliffordModule:
    """C(lam) via anticommuting Pauli chains; grading puts T_lam = +t on the even part."""
    m = lam.n_lambda
    _guard(1 << m)
    gammas = []
    for slot in range(m):
        gammas += [_chain(m, slot, _X), _chain(m, slot, _Y)]
    delta = SuperMatrix.identity(1)
    for _ in range(m):
        delta = delta.kron(_Z)
    return _finish(lam, gammas[: lam.rank], delta)


def realize_C_fermionic(lam: Weight) -> CliffordModule:
    """C(lam) on an exterior algebra: xi_l + d_l and i(xi_l - d_l) pairs."""
    m = lam.n_lambda
    dim = 1 << m
    _guard(dim)

    def creation(l: int, annihilate: bool) -> SuperMatrix:
        cols = {}
        for s in range(dim):
            has = (s >> l) & 1
            if has != annihilate:
                continue
            sign = -1 if bin(s & ((1 << l) - 1)).count("1") % 2 else 1
            cols[s] = {s ^ (1 << l): QuadNum(sign)}
        return SuperMatrix(dim, cols)

    gammas = []
    for l in range(m):
        xi, d = creation(l, False), creation(l, True)
        gammas += [xi + d, (xi - d).scale(QuadNum.i())]
    delta = SuperMatrix.diagonal([-1 if bin(s).count("1") % 2 else 1 for s in range(dim)])
    return _finish(lam, gammas[: lam.rank], delta)


def t_value(nu: Weight) -> QuadNum:
    """t(nu) = phase * sqrt|t^2|, which is exactly sqrt(t^2) in our convention."""
    return QuadNum.sqrt(t_data(nu).t_squared)


def T_matrix(m: CliffordModule, nu: Weight) -> SuperMatrix:
    T = SuperMatrix.identity(m.dim).with_parity(m.par)
    for p in canonical_positions(nu):
        T = T @ m.gens[p]
    return T


def _check_weight(m: CliffordModule, nu: Weight) -> None:
    if nu.n != len(m.gens):
        raise ValueError("weight and module have different rank")
    for i, g in enumerate(m.gens):
        if g @ g != SuperMatrix.identity(m.dim).scale(nu[i]):
            raise ValueError(f"torus does not act on the module by {nu}")


def _trace_delta_T(m: CliffordModule, nu: Weight, basis=None) -> QuadNum:
    pos = canonical_positions(nu)
    total = QuadNum()
    for r in range(m.dim) if basis is None else basis:
        v = {r: QuadNum(1)}
        for p in reversed(pos):
            v = m.gens[p].apply(v)
        x = v.get(r)
        if x:
            total = total - x if m.par[r] else total + x
    return total


def smult_supertrace(m: CliffordModule, nu: Weight, check: bool = True, honor_dropped: bool = True) -> int:
    """Signed multiplicity of C(nu) in m (mod 2 on I1 weights).

    With ``honor_dropped`` a module restricted away from a nonzero torus
    eigenvalue counts as 0; otherwise only the kept generators are used.
    """
    if check:
        _check_weight(m, nu)
    if honor_dropped and any(m.dropped):
        return 0
    size = 1 << nu.n_lambda
    if nu.parity:
        if m.dim % size:
            raise AssertionError("dimension is not a multiple of dim C(nu)")
        return (m.dim // size) % 2
    val = _trace_delta_T(m, nu) / (t_value(nu) * size)
    return val.to_int()


def tensor_modules(m1: CliffordModule, m2: CliffordModule) -> CliffordModule:
    _guard(m1.dim * m2.dim)
    id2 = SuperMatrix.identity(m2.dim)
    gens = [g1.kron(id2) + m1.delta.kron(g2) for g1, g2 in zip(m1.gens, m2.gens)]
    delta = m1.delta.kron(m2.delta)
    par = delta.par
    return CliffordModule(m1.weight + m2.weight, [g.with_parity(par) for g in gens], delta)


def direct_sum(m1: CliffordModule, m2: CliffordModule) -> CliffordModule:
    d1 = m1.dim

    def bsum(a: SuperMatrix, b: SuperMatrix) -> SuperMatrix:
        cols = dict(a.cols)
        for c, v in b.cols.items():
            cols[c + d1] = {r + d1: x for r, x in v.items()}
        return SuperMatrix(d1 + b.dim, cols, a.par + b.par)

    return CliffordModule(m1.weight, [bsum(a, b) for a, b in zip(m1.gens, m2.gens)], bsum(m1.delta, m2.delta))


def parity_shift(m: CliffordModule) -> CliffordModule:
    delta = -m.delta
    par = tuple(1 - p for p in m.par)
    delta = delta.with_parity(par)
    return CliffordModule(m.weight, [g.with_parity(par) for g in m.gens], delta, m.dropped)


def restrict(m: CliffordModule, r: int) -> CliffordModule:
    """Keep H_1..H_{n-r}; the dropped torus eigenvalues are remembered."""
    if not 0 <= r <= m.n:
        raise ValueError("drop exceeds rank")
    k = m.n - r
    return CliffordModule(Weight(m.weight.entries[:k]), m.gens[:k], m.delta, m.dropped + m.weight.entries[k:])


def socle(m: CliffordModule) -> Subspace:
    """Joint kernel of the generators acting nilpotently (a graded subspace)."""
    nil = [g for i, g in enumerate(m.gens) if m.weight[i] == 0 and not g.is_zero()]
    even = [i for i in range(m.dim) if m.par[i] == 0]
    odd = [i for i in range(m.dim) if m.par[i] == 1]
    k_even = joint_kernel(nil, m.dim, even)
    k_odd = joint_kernel(nil, m.dim, odd)
    return Subspace(m.dim, k_even.basis + k_odd.basis)


def socle_signed(m: CliffordModule, soc: Subspace | None = None) -> int:
    """Signed multiplicity of C(weight) in the socle."""
    nu = m.weight
    soc = socle(m) if soc is None else soc
    size = 1 << nu.n_lambda
    if nu.parity:
        return (len(soc) // size) % 2
    T = T_matrix(m, nu)
    signs = []
    for v in soc.basis:
        p = min(v)
        signs.append(QuadNum(-1 if m.par[p] else 1))
    val = restricted_trace(T, soc, signs) / (t_value(nu) * size)
    return val.to_int()


def injective_hull(lam: Weight) -> CliffordModule:
    """C(lam) (x) wedge(K_lam); kernel generators act as delta (x) left multiplication."""
    c = realize_C(lam)
    zeros = lam.zero_positions
    r = len(zeros)
    dimw = 1 << r
    _guard(c.dim * dimw)
    lefts = []
    for l in range(r):
        cols = {}
        for s in range(dimw):
            if (s >> l) & 1:
                continue
            sign = -1 if bin(s & ((1 << l) - 1)).count("1") % 2 else 1
            cols[s] = {s | (1 << l): QuadNum(sign)}
        lefts.append(SuperMatrix(dimw, cols))
    wpar = tuple(bin(s).count("1") % 2 for s in range(dimw))
    dw = SuperMatrix.diagonal([-1 if p else 1 for p in wpar], wpar)
    idw = SuperMatrix.identity(dimw, wpar)
    gens = []
    for i in range(lam.n):
        if lam[i] != 0:
            gens.append(c.gens[i].kron(idw))
        else:
            gens.append(c.delta.kron(lefts[zeros.index(i)].with_parity(wpar)))
    delta = c.delta.kron(dw)
    par = delta.par
    return CliffordModule(lam, [g.with_parity(par) for g in gens], delta)


def radical(m: CliffordModule) -> Subspace:
    nil = [g for i, g in enumerate(m.gens) if m.weight[i] == 0 and not g.is_zero()]
    sp = Subspace(m.dim)
    for g in nil:
        for v in image(g).basis:
            sp.add(v)
    return sp
