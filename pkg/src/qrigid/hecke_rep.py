"""The Jimbo-Woronowicz representation of the Hecke algebra H_n(q), q = mu**2.

eta(g_i) acts on slots i, i+1 of (C^d)^{(x)n}:

    psi_a (x) psi_b  ->  mu psi_b (x) psi_a                          a < b
    psi_a (x) psi_a  ->  psi_a (x) psi_a
    psi_a (x) psi_b  ->  mu psi_b (x) psi_a + (1 - q) psi_a (x) psi_b   a > b

so that (eta(g) - 1)(eta(g) + q) = 0.  Basis indices a are 0-based here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .checks import IdentityCheck, compare
from .errors import ResourceError
from .linalg import inverse, nullspace
from .operators import DEFAULT_THRESHOLD, Factor, LazyOperator, TensorOperator, check_dimension
from .scalars import Rational, as_fraction


@dataclass(frozen=True)
class HeckeParams:
    d: int
    mu: Fraction

    def __post_init__(self):
        object.__setattr__(self, "mu", as_fraction(self.mu))
        if self.d < 2:
            raise ValueError("d must be at least 2")
        if self.mu == 0:
            raise ValueError("mu must be nonzero")

    @property
    def q(self) -> Fraction:
        return self.mu * self.mu

    def negated(self) -> HeckeParams:
        return HeckeParams(self.d, -self.mu)


@dataclass(frozen=True)
class BraidWord:
    """A product g_{i1}^{e1} g_{i2}^{e2} ... ; the rightmost letter acts first."""

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        letters = tuple((int(i), int(e)) for i, e in self.letters)
        for i, e in letters:
            if i < 1 or e not in (1, -1):
                raise ValueError(f"bad braid letter {(i, e)}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def positive(cls, indices) -> BraidWord:
        return cls(tuple((i, 1) for i in indices))

    @classmethod
    def parse(cls, text: str) -> BraidWord:
        """Parse e.g. "g1 g2^-1 g1"."""
        letters = []
        for tok in text.split():
            base, _, exp = tok.partition("^")
            letters.append((int(base.lstrip("g")), int(exp) if exp else 1))
        return cls(tuple(letters))

    def __add__(self, other: BraidWord) -> BraidWord:
        return BraidWord(self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(tuple((i, -e) for i, e in reversed(self.letters)))

    def shift(self, k: int) -> BraidWord:
        return BraidWord(tuple((i + k, e) for i, e in self.letters))

    def max_index(self) -> int:
        return max((i for i, _ in self.letters), default=0)

    def __str__(self):
        return " ".join(f"g{i}" if e == 1 else f"g{i}^-1" for i, e in self.letters) or "1"


def quantum_integer(k: int, q: Rational) -> Fraction:
    """[k]_q = 1 + q + ... + q**(k-1)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    q = as_fraction(q)
    return sum((q**j for j in range(k)), Fraction(0))


def quantum_factorial(n: int, q: Rational) -> Fraction:
    out = Fraction(1)
    for k in range(1, n + 1):
        out *= quantum_integer(k, q)
    return out


@lru_cache(maxsize=None)
def jw_local(p: HeckeParams, power: int = 1) -> TensorOperator:
    """eta(g) (power=1) or its inverse (power=-1) on two strands."""
    d, mu, q = p.d, p.mu, p.q
    cols: dict[int, dict[int, Fraction]] = {}
    if power == 1:
        for a in range(d):
            for b in range(d):
                src, swp = a * d + b, b * d + a
                if a < b:
                    cols[src] = {swp: mu}
                elif a == b:
                    cols[src] = {src: Fraction(1)}
                else:
                    col = {swp: mu}
                    if q != 1:
                        col[src] = 1 - q
                    cols[src] = col
        return TensorOperator(d, 2, 2, cols)
    if power == -1:
        # g**-1 = (g - (1 - q)) / q, from g**2 = (1 - q) g + q
        g = jw_local(p, 1)
        return (g - TensorOperator.identity(d, 2, one=1 - q)).scale(1 / q)
    raise ValueError("power must be +1 or -1")


def jw_generator(p: HeckeParams, i: int, n: int, threshold: int = DEFAULT_THRESHOLD) -> TensorOperator:
    """eta(g_i) on (C^d)^{(x)n}, identity on the other slots."""
    if not 1 <= i <= n - 1:
        raise IndexError(f"generator g_{i} needs 1 <= i <= n-1 = {n - 1}")
    check_dimension(p.d, n, threshold)
    return jw_local(p).pad(i - 1, n - i - 1)


def word_lazy(p: HeckeParams, w: BraidWord, n: int) -> LazyOperator:
    if w.max_index() > n - 1:
        raise IndexError(f"word {w} needs more than {n} strands")
    factors = [Factor(i - 1, jw_local(p, e)) for i, e in w.letters]
    return LazyOperator(p.d, n, factors)


def represent_word(p: HeckeParams, w: BraidWord, n: int, threshold: int = DEFAULT_THRESHOLD) -> TensorOperator:
    """eta(w) as a materialized exact operator (inverses are exact)."""
    return word_lazy(p, w, n).materialize(threshold)


def inversion_number(perm) -> int:
    return sum(1 for a, b in itertools.combinations(perm, 2) if a > b)


def determinant_vector(p: HeckeParams) -> TensorOperator:
    """S = sum_p (-mu)**i(p) psi_p(1) (x) ... (x) psi_p(d), an arrow iota -> u^d."""
    d = p.d
    entries = {}
    for perm in itertools.permutations(range(d)):
        idx = 0
        for a in perm:
            idx = idx * d + a
        entries[idx] = (-p.mu) ** inversion_number(perm)
    return TensorOperator.vector(d, d, entries)


def _sectors(d: int, k: int) -> dict[tuple[int, ...], list[int]]:
    """Basis indices grouped by content (the multiset of slot labels)."""
    out: dict[tuple[int, ...], list[int]] = {}
    for idx, digits in enumerate(itertools.product(range(d), repeat=k)):
        out.setdefault(tuple(sorted(digits)), []).append(idx)
    return out


def antisymmetrizer(p: HeckeParams, k: int, threshold: int = DEFAULT_THRESHOLD) -> TensorOperator:
    """Orthogonal projection E_k onto the joint (-q)-eigenspace of eta(g_1..g_{k-1}).

    Each eta(g_i) preserves content, so the kernel of the stacked (eta(g_i) + q)
    is computed sector by sector.  E_0 and E_1 are identities.
    """
    d, q = p.d, p.q
    if k < 0:
        raise ValueError("k must be non-negative")
    check_dimension(d, k, threshold, "antisymmetrizer")
    if k <= 1:
        return TensorOperator.identity(d, k)
    factors = [Factor(i, jw_local(p)) for i in range(k - 1)]
    cols: dict[int, dict[int, Fraction]] = {}
    for basis in _sectors(d, k).values():
        pos = {b: j for j, b in enumerate(basis)}
        nb = len(basis)
        rows = []
        for f in factors:
            block = [[Fraction(0)] * nb for _ in range(nb)]
            for j, b in enumerate(basis):
                for r, v in f.apply_basis(b, k).items():
                    block[pos[r]][j] += v
                block[j][j] += q
            rows.extend(block)
        kern = nullspace(rows, nb)
        if not kern:
            continue
        # P = K (K^T K)^{-1} K^T restricted to the sector
        gram = [[sum(x * y for x, y in zip(u, v)) for v in kern] for u in kern]
        ginv = inverse(gram)
        m = len(kern)
        coef = [[sum(ginv[a][b] * kern[b][j] for b in range(m)) for j in range(nb)] for a in range(m)]
        for j in range(nb):
            col = {}
            for i in range(nb):
                v = sum(kern[a][i] * coef[a][j] for a in range(m))
                if v:
                    col[basis[i]] = v
            if col:
                cols[basis[j]] = col
    return TensorOperator(d, k, k, cols)


def s_relations(p: HeckeParams, threshold: int = DEFAULT_THRESHOLD) -> list[IdentityCheck]:
    """Exact checks of the relations satisfied by S and eta.

    S* S = d!_q;  S S* = d!_q E_d;  (S* (x) 1)(1 (x) S) = (d-1)!_q (-mu)**(d-1);
    eta(g_1 ... g_d)(S (x) 1) = mu**(d-1) (1 (x) S);  eta(g_i) S = -q S.
    """
    d, mu, q = p.d, p.mu, p.q
    if d ** (d + 1) > threshold:
        raise ResourceError(f"S relations need dimension {d}^{d + 1} = {d ** (d + 1)} > threshold {threshold}", d ** (d + 1))
    S = determinant_vector(p)
    St = S.adjoint()
    one_u = TensorOperator.identity(d, 1)
    dq = quantum_factorial(d, q)
    checks = [
        compare("S*S = d!_q", St @ S, TensorOperator.identity(d, 0, one=dq)),
        compare("S S* = d!_q E_d", S @ St, antisymmetrizer(p, d, threshold).scale(dq)),
        compare(
            "S*(x)1 o 1(x)S = (d-1)!_q (-mu)^(d-1)",
            St.tensor(one_u) @ one_u.tensor(S),
            TensorOperator.identity(d, 1, one=quantum_factorial(d - 1, q) * (-mu) ** (d - 1)),
        ),
        compare(
            "eta(g_1...g_d) o S(x)1 = mu^(d-1) 1(x)S",
            represent_word(p, BraidWord.positive(range(1, d + 1)), d + 1, threshold) @ S.tensor(one_u),
            one_u.tensor(S).scale(mu ** (d - 1)),
        ),
    ]
    for i in range(1, d):
        checks.append(compare(f"g_{i} S = -q S", jw_generator(p, i, d, threshold) @ S, S.scale(-q)))
    return checks


def verify_S_relations(p: HeckeParams, threshold: int = DEFAULT_THRESHOLD) -> list[IdentityCheck]:
    return s_relations(p, threshold)
