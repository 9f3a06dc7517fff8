"""Sparse exact linear algebra over QuadNum."""

from __future__ import annotations

from typing import Iterable

from .quadnum import QuadNum

Vector = dict[int, QuadNum]


def vadd(u: Vector, v: Vector, c: QuadNum | int = 1) -> Vector:
    out = dict(u)
    for i, x in v.items():
        y = out.get(i, QuadNum()) + x * c
        if y:
            out[i] = y
        else:
            out.pop(i, None)
    return out


def vscale(v: Vector, c: QuadNum) -> Vector:
    return {i: x * c for i, x in v.items() if x * c}


class SuperMatrix:
    """Square sparse matrix stored by columns, with a parity for each basis vector."""

    __slots__ = ("dim", "cols", "par")

    def __init__(self, dim: int, cols: dict[int, Vector] | None = None, par: tuple[int, ...] | None = None):
        self.dim = dim
        self.cols = {c: v for c, v in (cols or {}).items() if v}
        self.par = par if par is not None else (0,) * dim

    @classmethod
    def identity(cls, dim: int, par=None) -> "SuperMatrix":
        return cls(dim, {i: {i: QuadNum(1)} for i in range(dim)}, par)

    @classmethod
    def zero(cls, dim: int, par=None) -> "SuperMatrix":
        return cls(dim, {}, par)

    @classmethod
    def from_rows(cls, rows: list[list], par=None) -> "SuperMatrix":
        dim = len(rows)
        cols: dict[int, Vector] = {}
        for r, row in enumerate(rows):
            for c, x in enumerate(row):
                x = QuadNum.coerce(x)
                if x:
                    cols.setdefault(c, {})[r] = x
        return cls(dim, cols, par)

    @classmethod
    def diagonal(cls, entries: Iterable, par=None) -> "SuperMatrix":
        ent = [QuadNum.coerce(e) for e in entries]
        return cls(len(ent), {i: {i: e} for i, e in enumerate(ent) if e}, par)

    def with_parity(self, par: tuple[int, ...]) -> "SuperMatrix":
        return SuperMatrix(self.dim, self.cols, par)

    @property
    def blocks(self) -> tuple[int, int]:
        q = sum(self.par)
        return self.dim - q, q

    def entry(self, r: int, c: int) -> QuadNum:
        return self.cols.get(c, {}).get(r, QuadNum())

    def column(self, c: int) -> Vector:
        return self.cols.get(c, {})

    def apply(self, v: Vector) -> Vector:
        out: Vector = {}
        for c, x in v.items():
            col = self.cols.get(c)
            if col:
                for r, y in col.items():
                    out[r] = out.get(r, QuadNum()) + y * x
        return {r: y for r, y in out.items() if y}

    def __matmul__(self, other: "SuperMatrix") -> "SuperMatrix":
        return SuperMatrix(self.dim, {c: self.apply(v) for c, v in other.cols.items()}, self.par)

    def __add__(self, other: "SuperMatrix") -> "SuperMatrix":
        cols = dict(self.cols)
        for c, v in other.cols.items():
            cols[c] = vadd(cols.get(c, {}), v)
        return SuperMatrix(self.dim, cols, self.par)

    def __neg__(self) -> "SuperMatrix":
        return self.scale(QuadNum(-1))

    def __sub__(self, other: "SuperMatrix") -> "SuperMatrix":
        return self + (-other)

    def scale(self, c) -> "SuperMatrix":
        c = QuadNum.coerce(c)
        return SuperMatrix(self.dim, {k: vscale(v, c) for k, v in self.cols.items()}, self.par)

    def kron(self, other: "SuperMatrix") -> "SuperMatrix":
        d2 = other.dim
        cols: dict[int, Vector] = {}
        for c1, v1 in self.cols.items():
            for c2, v2 in other.cols.items():
                cols[c1 * d2 + c2] = {r1 * d2 + r2: x * y for r1, x in v1.items() for r2, y in v2.items()}
        par = tuple((p + q) % 2 for p in self.par for q in other.par)
        return SuperMatrix(self.dim * d2, cols, par)

    def trace(self) -> QuadNum:
        t = QuadNum()
        for c, v in self.cols.items():
            if c in v:
                t = t + v[c]
        return t

    def supertrace(self) -> QuadNum:
        t = QuadNum()
        for c, v in self.cols.items():
            if c in v:
                t = t - v[c] if self.par[c] else t + v[c]
        return t

    def is_zero(self) -> bool:
        return not self.cols

    def __eq__(self, other) -> bool:
        return isinstance(other, SuperMatrix) and self.dim == other.dim and self.cols == other.cols

    def parity_of(self) -> int | None:
        """0 for even, 1 for odd, None for inhomogeneous (zero counts as even)."""
        seen = set()
        for c, v in self.cols.items():
            for r in v:
                seen.add((self.par[r] + self.par[c]) % 2)
        if len(seen) > 1:
            return None
        return seen.pop() if seen else 0

    def to_rows(self) -> list[list[QuadNum]]:
        return [[self.entry(r, c) for c in range(self.dim)] for r in range(self.dim)]

    def __repr__(self) -> str:
        return f"SuperMatrix({self.blocks[0]}|{self.blocks[1]}, nnz={sum(len(v) for v in self.cols.values())})"


class Subspace:
    """Row-reduced spanning set; pivot entries are 1 and cleared elsewhere."""

    __slots__ = ("dim", "basis", "pivots")

    def __init__(self, dim: int, vectors: Iterable[Vector] = ()):
        self.dim = dim
        self.basis: list[Vector] = []
        self.pivots: list[int] = []
        for v in vectors:
            self.add(v)

    def reduce(self, v: Vector) -> Vector:
        for p, b in zip(self.pivots, self.basis):
            x = v.get(p)
            if x:
                v = vadd(v, b, -x)
        return v

    def add(self, v: Vector) -> bool:
        v = self.reduce(dict(v))
        if not v:
            return False
        p = min(v)
        v = vscale(v, v[p].inverse())
        for k, b in enumerate(self.basis):
            x = b.get(p)
            if x:
                self.basis[k] = vadd(b, v, -x)
        self.basis.append(v)
        self.pivots.append(p)
        return True

    def __len__(self) -> int:
        return len(self.basis)

    def contains(self, v: Vector) -> bool:
        return not self.reduce(dict(v))

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and len(self) == len(other) and self.contains_space(other)

    def coords(self, v: Vector) -> list[QuadNum]:
        """Coordinates of a member vector in the stored basis."""
        return [v.get(p, QuadNum()) for p in self.pivots]


def image(m: SuperMatrix, domain: Subspace | None = None) -> Subspace:
    vecs = domain.basis if domain is not None else [{i: QuadNum(1)} for i in range(m.dim)]
    return Subspace(m.dim, (m.apply(v) for v in vecs))


def joint_kernel(ops: list[SuperMatrix], dim: int, restrict_to: list[int] | None = None) -> Subspace:
    """Common kernel of ``ops``, optionally within the span of the given basis indices."""
    idx = list(range(dim)) if restrict_to is None else list(restrict_to)
    if not ops:
        return Subspace(dim, ({i: QuadNum(1)} for i in idx))
    # rows of the stacked operator restricted to idx columns; solve by elimination
    rows: list[Vector] = []
    for op in ops:
        by_row: dict[int, Vector] = {}
        for j, c in enumerate(idx):
            for r, x in op.column(c).items():
                by_row.setdefault(r, {})[j] = x
        rows.extend(by_row.values())
    red = Subspace(len(idx), rows)
    free = [j for j in range(len(idx)) if j not in set(red.pivots)]
    basis = []
    for f in free:
        v: Vector = {idx[f]: QuadNum(1)}
        for p, b in zip(red.pivots, red.basis):
            x = b.get(f)
            if x:
                v[idx[p]] = -x
        basis.append(v)
    return Subspace(dim, basis)


def restricted_trace(m: SuperMatrix, space: Subspace, weights: list[QuadNum] | None = None) -> QuadNum:
    """Trace of an operator preserving ``space``, optionally weighted per basis vector."""
    t = QuadNum()
    for k, v in enumerate(space.basis):
        w = m.apply(v)
        if not space.contains(w):
            raise ValueError("operator does not preserve the subspace")
        c = space.coords(w)[k]
        t = t + (c * weights[k] if weights is not None else c)
    return t
