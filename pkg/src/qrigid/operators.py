"""Arrows between tensor powers of C^d.

Basis of (C^d)^{(x)n}: index tuples (i_1, ..., i_n) in lexicographic order,
slot 1 most significant, so ``a (x) b`` is the Kronecker product.

:class:`TensorOperator` is a materialized sparse matrix (columns of
``{row: value}``) over any scalar type supporting ``+ * conjugate()``:
Fraction, CyclotomicScalar or complex.  :class:`LazyOperator` is a product
of identity-padded local factors applied matrix-free.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from .errors import ResourceError
from .scalars import FLOAT_TOL

#: operators whose codomain dimension exceeds this are only applied matrix-free
DEFAULT_THRESHOLD = 4096

Vector = dict  # basis index -> scalar, zeros omitted


def check_dimension(d: int, n: int, threshold: int, what: str = "operator") -> None:
    dim = d**n
    if dim > threshold:
        raise ResourceError(f"{what} needs dimension {d}^{n} = {dim} > threshold {threshold}", required=dim)


def _add_into(target: dict, key: int, value) -> None:
    cur = target.get(key)
    new = value if cur is None else cur + value
    if new:
        target[key] = new
    elif cur is not None:
        del target[key]


class TensorOperator:
    __slots__ = ("d", "dom", "cod", "cols")

    def __init__(self, d: int, dom: int, cod: int, cols: dict[int, dict[int, object]] | None = None):
        self.d = d
        self.dom = dom
        self.cod = cod
        self.cols = {c: col for c, col in (cols or {}).items() if col}

    # construction -------------------------------------------------------
    @classmethod
    def identity(cls, d: int, n: int, one=Fraction(1)) -> TensorOperator:
        return cls(d, n, n, {i: {i: one} for i in range(d**n)})

    @classmethod
    def from_dense(cls, d: int, dom: int, cod: int, rows: Iterable[Iterable]) -> TensorOperator:
        cols: dict[int, dict[int, object]] = {}
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if v:
                    cols.setdefault(c, {})[r] = v
        return cls(d, dom, cod, cols)

    @classmethod
    def vector(cls, d: int, n: int, entries: Vector) -> TensorOperator:
        """An arrow iota -> u^n with the given coordinates."""
        return cls(d, 0, n, {0: {i: v for i, v in entries.items() if v}})

    # shape --------------------------------------------------------------
    @property
    def n_rows(self) -> int:
        return self.d**self.cod

    @property
    def n_cols(self) -> int:
        return self.d**self.dom

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self.cols.values())

    def entry(self, r: int, c: int):
        return self.cols.get(c, {}).get(r, 0)

    def column(self, c: int) -> Vector:
        return dict(self.cols.get(c, {}))

    def __repr__(self):
        return f"TensorOperator(d={self.d}, {self.dom}->{self.cod}, nnz={self.nnz})"

    # algebra ------------------------------------------------------------
    def __matmul__(self, other: TensorOperator) -> TensorOperator:
        """Composition self o other (other acts first)."""
        if not isinstance(other, TensorOperator):
            return NotImplemented
        if self.d != other.d or self.dom != other.cod:
            raise ValueError(f"cannot compose {self} after {other}")
        out: dict[int, dict[int, object]] = {}
        for c, bcol in other.cols.items():
            acc: dict[int, object] = {}
            for k, bv in bcol.items():
                acol = self.cols.get(k)
                if acol:
                    for r, av in acol.items():
                        _add_into(acc, r, av * bv)
            if acc:
                out[c] = acc
        return TensorOperator(self.d, other.dom, self.cod, out)

    def apply(self, vec: Vector) -> Vector:
        out: dict[int, object] = {}
        for k, x in vec.items():
            col = self.cols.get(k)
            if col:
                for r, v in col.items():
                    _add_into(out, r, v * x)
        return out

    def tensor(self, other: TensorOperator) -> TensorOperator:
        """self (x) other, self on the leading slots."""
        if self.d != other.d:
            raise ValueError("local dimensions differ")
        rb, cb = other.n_rows, other.n_cols
        out = {}
        for ca, acol in self.cols.items():
            for cb_, bcol in other.cols.items():
                out[ca * cb + cb_] = {ra * rb + rb_: av * bv for ra, av in acol.items() for rb_, bv in bcol.items()}
        return TensorOperator(self.d, self.dom + other.dom, self.cod + other.cod, out)

    def pad(self, left: int, right: int) -> TensorOperator:
        """1_{u^left} (x) self (x) 1_{u^right}."""
        if left == 0 and right == 0:
            return self
        f = Factor(left, self)
        n_in = left + self.dom + right
        out = {c: f.apply_basis(c, n_in) for c in range(self.d**n_in)}
        return TensorOperator(self.d, n_in, left + self.cod + right, out)

    def _combine(self, other: TensorOperator, sign: int) -> TensorOperator:
        if (self.d, self.dom, self.cod) != (other.d, other.dom, other.cod):
            raise ValueError("shape mismatch")
        out = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            acc = out.setdefault(c, {})
            for r, v in col.items():
                _add_into(acc, r, v if sign > 0 else -v)
        return TensorOperator(self.d, self.dom, self.cod, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> TensorOperator:
        if not c:
            return TensorOperator(self.d, self.dom, self.cod)
        return TensorOperator(self.d, self.dom, self.cod, {k: {r: c * v for r, v in col.items()} for k, col in self.cols.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def map(self, f: Callable) -> TensorOperator:
        """Entrywise conversion, e.g. to another scalar backend."""
        return TensorOperator(self.d, self.dom, self.cod, {k: {r: f(v) for r, v in col.items()} for k, col in self.cols.items()})

    def transpose(self) -> TensorOperator:
        out: dict[int, dict[int, object]] = {}
        for c, col in self.cols.items():
            for r, v in col.items():
                out.setdefault(r, {})[c] = v
        return TensorOperator(self.d, self.cod, self.dom, out)

    def adjoint(self) -> TensorOperator:
        return self.transpose().map(lambda v: v.conjugate())

    @property
    def H(self) -> TensorOperator:
        return self.adjoint()

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        """Exact equality (use :meth:`close` for floating entries)."""
        if not isinstance(other, TensorOperator):
            return NotImplemented
        if (self.d, self.dom, self.cod) != (other.d, other.dom, other.cod):
            return False
        return not (self - other).cols

    __hash__ = None

    def norm1(self) -> float:
        """Max column 1-norm; the scale used by floating comparisons."""
        return max((sum(abs(complex(v)) for v in col.values()) for col in self.cols.values()), default=0.0)

    def defect(self, other: TensorOperator) -> float:
        """Max column 1-norm of the difference (0.0 means exactly equal)."""
        return (self - other).norm1()

    def close(self, other: TensorOperator, tol: float = FLOAT_TOL) -> bool:
        scale = max(self.norm1(), other.norm1(), 1e-300)
        return self.defect(other) <= tol * scale

    def scalar_value(self, tol: float | None = None):
        """c if self == c * identity (exactly, or to ``tol`` relative), else None."""
        if self.dom != self.cod:
            return None
        n = self.n_rows
        c = self.entry(0, 0)
        ident = TensorOperator.identity(self.d, self.dom, one=c) if c else TensorOperator(self.d, self.dom, self.dom)
        if tol is None:
            return c if self == ident else None
        if n and self.defect(ident) <= tol * max(self.norm1(), 1e-300):
            return c
        return None

    def is_exact(self) -> bool:
        return all(not isinstance(v, (complex, float)) for col in self.cols.values() for v in col.values())

    def to_numpy(self) -> np.ndarray:
        a = np.zeros((self.n_rows, self.n_cols), dtype=complex)
        for c, col in self.cols.items():
            for r, v in col.items():
                a[r, c] = complex(v)
        return a

    def to_rows(self) -> list[list]:
        """Dense exact rows (zeros as Fraction(0))."""
        rows = [[Fraction(0)] * self.n_cols for _ in range(self.n_rows)]
        for c, col in self.cols.items():
            for r, v in col.items():
                rows[r][c] = v
        return rows


@dataclass(frozen=True)
class Factor:
    """A local operator acting on strands [offset, offset + local.dom)."""

    offset: int
    local: TensorOperator

    def apply_basis(self, index: int, n_in: int) -> dict[int, object]:
        loc = self.local
        d = loc.d
        suffix_len = n_in - self.offset - loc.dom
        if suffix_len < 0:
            raise ValueError("factor does not fit in the strand count")
        sfx_base = d**suffix_len
        prefix, rest = divmod(index, d ** (loc.dom + suffix_len))
        middle, suffix = divmod(rest, sfx_base)
        col = loc.cols.get(middle)
        if not col:
            return {}
        head = prefix * d**loc.cod
        return {(head + r) * sfx_base + suffix: v for r, v in col.items()}

    def apply(self, vec: Vector, n_in: int) -> Vector:
        out: dict[int, object] = {}
        for k, x in vec.items():
            for r, v in self.apply_basis(k, n_in).items():
                _add_into(out, r, v * x)
        return out


@dataclass
class LazyOperator:
    """scalar * F_1 o F_2 o ... o F_k on ``n_in`` input strands (F_k acts first)."""

    d: int
    n_in: int
    factors: list[Factor] = field(default_factory=list)
    scalar: object = Fraction(1)

    @property
    def n_out(self) -> int:
        n = self.n_in
        for f in reversed(self.factors):
            n += f.local.cod - f.local.dom
        return n

    def then(self, factor: Factor) -> LazyOperator:
        """factor o self."""
        return LazyOperator(self.d, self.n_in, [factor] + self.factors, self.scalar)

    def __matmul__(self, other: LazyOperator) -> LazyOperator:
        if other.n_out != self.n_in:
            raise ValueError("strand counts do not match")
        return LazyOperator(self.d, other.n_in, self.factors + other.factors, self.scalar * other.scalar)

    def scale(self, c) -> LazyOperator:
        return LazyOperator(self.d, self.n_in, list(self.factors), self.scalar * c)

    def apply(self, vec: Vector) -> Vector:
        n = self.n_in
        for f in reversed(self.factors):
            vec = f.apply(vec, n)
            n += f.local.cod - f.local.dom
        if self.scalar != 1:
            vec = {k: self.scalar * v for k, v in vec.items()}
        return vec

    def materialize(self, threshold: int = DEFAULT_THRESHOLD) -> TensorOperator:
        check_dimension(self.d, max(self.n_in, self.n_out), threshold, "materialization")
        op = TensorOperator.identity(self.d, self.n_in)
        n = self.n_in
        for f in reversed(self.factors):
            cols = {c: f.apply(col, n) for c, col in op.cols.items()}
            n += f.local.cod - f.local.dom
            op = TensorOperator(self.d, self.n_in, n, cols)
        return op.scale(self.scalar) if self.scalar != 1 else op
