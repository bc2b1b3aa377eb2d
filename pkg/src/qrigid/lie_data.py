"""Cartan data for the classical series and the weight form (lambda, lambda + 2 rho).

Simple roots are ordered as in Bourbaki / Humphreys' table: for B_r and C_r
the odd-length root is the last one (alpha_r short in B_r, long in C_r); for
D_r the fork is at alpha_{r-2}, with alpha_{r-1} and alpha_r the two tips.
The form is normalized so that short roots have (alpha, alpha) = 2, and
cartan[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .errors import InvalidRankError, InvalidWeightError
from .linalg import inverse
from .scalars import PhasedPower

MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}


@dataclass(frozen=True)
class LieType:
    series: str
    rank: int

    def __post_init__(self):
        series = self.series.upper()
        object.__setattr__(self, "series", series)
        if series not in MIN_RANK:
            raise InvalidRankError(f"unknown series {self.series!r}; expected one of A, B, C, D")
        if self.rank < MIN_RANK[series]:
            raise InvalidRankError(f"{series}_{self.rank} is below the minimal rank {MIN_RANK[series]} for series {series}")

    def __str__(self):
        return f"{self.series}_{self.rank}"


@dataclass(frozen=True)
class DominantWeight:
    """Coordinates m_i in the fundamental-weight basis."""

    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(m) for m in self.coords)
        if any(m < 0 for m in coords):
            raise InvalidWeightError(f"dominant weight needs non-negative coordinates, got {coords}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def fundamental(cls, rank: int, i: int, multiple: int = 1) -> DominantWeight:
        """multiple * lambda_i (1-based i)."""
        return cls(tuple(multiple if j == i - 1 else 0 for j in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def height(self) -> int:
        return sum(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self):
        return "(" + ",".join(map(str, self.coords)) + ")"


def cartan_matrix(series: str, r: int) -> tuple[tuple[int, ...], ...]:
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
    for i in range(r - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    if series == "B":
        # alpha_r short: <alpha_{r-1}, alpha_r^vee> = -2
        a[r - 2][r - 1] = -2
    elif series == "C":
        a[r - 1][r - 2] = -2
    elif series == "D":
        a[r - 2][r - 1] = a[r - 1][r - 2] = 0
        a[r - 3][r - 1] = a[r - 1][r - 3] = -1
    return tuple(tuple(row) for row in a)


def symmetrizers(series: str, r: int) -> tuple[int, ...]:
    """d_j = (alpha_j, alpha_j) / 2 with short roots of squared length 2."""
    if series == "B":
        return (2,) * (r - 1) + (1,)
    if series == "C":
        return (1,) * (r - 1) + (2,)
    return (1,) * r


@dataclass(frozen=True)
class RootDatum:
    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[int, ...]
    inverse_transpose: tuple[tuple[Fraction, ...], ...]
    fundamental_gram: tuple[tuple[Fraction, ...], ...]
    # integer numerators of the Gram matrix over a common denominator
    _gram_int: tuple[tuple[int, ...], ...] = field(repr=False, compare=False, default=())
    _gram_den: int = field(repr=False, compare=False, default=1)

    @property
    def rank(self) -> int:
        return self.lie_type.rank


def root_datum(t: LieType) -> RootDatum:
    r = t.rank
    a = cartan_matrix(t.series, r)
    dsym = symmetrizers(t.series, r)
    a_inv = inverse([[Fraction(x) for x in row] for row in a])
    inv_t = tuple(tuple(a_inv[j][i] for j in range(r)) for i in range(r))
    # (lambda_i, lambda_j) = d_i * ((A^T)^{-1})_{ij}; this is the symmetric one
    gram = tuple(tuple(dsym[i] * inv_t[i][j] for j in range(r)) for i in range(r))
    den = math.lcm(*(g.denominator for row in gram for g in row))
    gram_int = tuple(tuple(int(g * den) for g in row) for row in gram)
    return RootDatum(t, a, dsym, inv_t, gram, gram_int, den)


def _check_weight(rd: RootDatum, lam: DominantWeight) -> None:
    if lam.rank != rd.rank:
        raise InvalidWeightError(f"weight {lam} has {lam.rank} coordinates, {rd.lie_type} needs {rd.rank}")


def casimir_exponent(rd: RootDatum, lam: DominantWeight) -> Fraction:
    """(lambda, lambda + 2 rho) = sum_ij m_i (m_j + 2) (lambda_i, lambda_j)."""
    _check_weight(rd, lam)
    m = lam.coords
    g = rd._gram_int
    total = 0
    for i, mi in enumerate(m):
        if mi:
            row = g[i]
            total += mi * sum((mj + 2) * gij for mj, gij in zip(m, row))
    return Fraction(total, rd._gram_den)


def kappa_modulus(rd: RootDatum, lam: DominantWeight) -> PhasedPower:
    """|kappa(v_lambda)| as |mu|**(lambda, lambda + 2 rho).

    Only the modulus is fixed at weight level; the phase depends on the choice
    of omega and is returned trivial (k=0, m=1).
    """
    return PhasedPower(0, 1, casimir_exponent(rd, lam))


def _compositions(rank: int, budget: int) -> Iterator[tuple[int, ...]]:
    if rank == 0:
        yield ()
        return
    for first in range(budget + 1):
        for rest in _compositions(rank - 1, budget - first):
            yield (first,) + rest


def enumerate_dominant(rank: int, height_bound: int) -> list[DominantWeight]:
    """All weights with sum(m_i) <= height_bound, in lexicographic order."""
    if height_bound < 0:
        raise ValueError("height_bound must be non-negative")
    return [DominantWeight(c) for c in _compositions(rank, height_bound)]


def positivity_sweep(rd: RootDatum, height_bound: int) -> tuple[int, Fraction | None, list[DominantWeight]]:
    """Check (lambda, lambda + 2 rho) > 0 on every nonzero weight up to the bound.

    Returns (weights checked, smallest exponent seen, violations).
    """
    g = rd._gram_int
    r = rd.rank
    rowsum2 = [2 * sum(row) for row in g]
    count = 0
    best = None
    bad: list[DominantWeight] = []
    for m in _compositions(r, height_bound):
        if not any(m):
            continue
        count += 1
        # m^T G m + 2 m^T G 1, in integers
        total = 0
        for i, mi in enumerate(m):
            if mi:
                row = g[i]
                total += mi * (sum(mj * gij for mj, gij in zip(m, row)) + rowsum2[i])
        if best is None or total < best:
            best = total
        if total <= 0:
            bad.append(DominantWeight(m))
    return count, (None if best is None else Fraction(best, rd._gram_den)), bad


# --- type A tensor powers ---------------------------------------------------


def partitions(n: int, max_parts: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, max_parts - 1, first):
            yield (first,) + rest


def _hooks(shape: tuple[int, ...]) -> Iterator[tuple[int, int, int]]:
    """(row, col, hook length) for each box."""
    conj = [sum(1 for r in shape if r > c) for c in range(shape[0])] if shape else []
    for i, row in enumerate(shape):
        for j in range(row):
            yield i, j, (row - j - 1) + (conj[j] - i - 1) + 1


def standard_tableaux_count(shape: tuple[int, ...]) -> int:
    n = sum(shape)
    denom = 1
    for _, _, h in _hooks(shape):
        denom *= h
    return math.factorial(n) // denom


def gl_dimension(shape: tuple[int, ...], d: int) -> int:
    """dim of the GL_d irreducible with this shape (hook-content formula)."""
    num, den = 1, 1
    for i, j, h in _hooks(shape):
        num *= d + j - i
        den *= h
    return num // den


def tensor_power_decomposition(d: int, n: int) -> dict[DominantWeight, tuple[int, int]]:
    """u^{(x)n} for SU(d): weight -> (multiplicity, dimension of the irreducible).

    Shapes with d rows reduce to SL_d weights by dropping full columns.
    """
    out: dict[DominantWeight, tuple[int, int]] = {}
    for shape in partitions(n, d):
        rows = list(shape) + [0] * (d - len(shape))
        lam = DominantWeight(tuple(rows[i] - rows[i + 1] for i in range(d - 1)))
        mult, dim = standard_tableaux_count(shape), gl_dimension(shape, d)
        old = out.get(lam)
        out[lam] = (mult + (old[0] if old else 0), dim)
    return out
