"""Temperley-Lieb diagrams with exact coefficients and their image in Rep(S_mu U(2)).

A diagram has ``n_top`` points on its upper edge and ``n_bottom`` on its
lower edge; the lower edge is the domain, so ``a @ b`` stacks a above b.
Boundary points are numbered clockwise: top points 0 .. n_top-1 from left
to right, then bottom points from right to left, so bottom point j (from the
left) is n_top + n_bottom - 1 - j.  A diagram is the sorted tuple of its
matched pairs.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .checks import IdentityCheck, compare
from .errors import BoundaryMismatchError, ConfigError
from .hecke_rep import HeckeParams, determinant_vector, jw_local
from .linalg import rank
from .operators import DEFAULT_THRESHOLD, TensorOperator, check_dimension
from .scalars import as_fraction


@dataclass(frozen=True, order=True)
class TLDiagram:
    n_top: int
    n_bottom: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted(tuple(sorted(p)) for p in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        total = self.n_top + self.n_bottom
        seen = sorted(x for p in pairs for x in p)
        if seen != list(range(total)):
            raise ValueError(f"pairing must match all {total} boundary points exactly once")
        for a, b in pairs:
            for c, e in pairs:
                if a < c < b < e:
                    raise ValueError(f"pairs {(a, b)} and {(c, e)} cross")

    # points -----------------------------------------------------------------
    def top(self, i: int) -> int:
        return i

    def bottom(self, j: int) -> int:
        return self.n_top + self.n_bottom - 1 - j

    def locate(self, point: int) -> tuple[str, int]:
        if point < self.n_top:
            return "T", point
        return "B", self.n_top + self.n_bottom - 1 - point

    @cached_property
    def partner(self) -> dict[int, int]:
        out = {}
        for a, b in self.pairs:
            out[a], out[b] = b, a
        return out

    @classmethod
    def from_ends(cls, n_top: int, n_bottom: int, links) -> TLDiagram:
        """Build from pairs of ("T"|"B", index) ends."""
        total = n_top + n_bottom

        def num(end):
            side, k = end
            return k if side == "T" else total - 1 - k

        return cls(n_top, n_bottom, tuple((num(a), num(b)) for a, b in links))

    @classmethod
    def identity(cls, n: int) -> TLDiagram:
        return cls.from_ends(n, n, [(("T", i), ("B", i)) for i in range(n)])

    @classmethod
    def generator(cls, i: int, n: int) -> TLDiagram:
        """Unnormalized E_i (1 <= i <= n-1): cap over strands i, i+1 and cup below."""
        if not 1 <= i <= n - 1:
            raise IndexError(f"E_{i} needs 1 <= i <= {n - 1}")
        links = [(("T", j), ("B", j)) for j in range(n) if j not in (i - 1, i)]
        links += [(("T", i - 1), ("T", i)), (("B", i - 1), ("B", i))]
        return cls.from_ends(n, n, links)

    def through_strands(self) -> int:
        return sum(1 for a, b in self.pairs if (a < self.n_top) != (b < self.n_top))

    def ascii(self) -> str:
        """Parenthesis rendering: ( and ) mark cup/cap ends, | a through strand."""

        def row(side: str, n: int) -> str:
            marks = []
            for k in range(n):
                point = k if side == "T" else self.n_top + self.n_bottom - 1 - k
                other_side, other = self.locate(self.partner[point])
                if other_side != side:
                    marks.append("|")
                else:
                    marks.append("(" if other > k else ")")
            return " ".join(marks)

        return f"top:    {row('T', self.n_top)}\nbottom: {row('B', self.n_bottom)}"

    def __str__(self):
        return self.ascii()


def compose_diagrams(a: TLDiagram, b: TLDiagram) -> tuple[TLDiagram, int]:
    """a stacked above b: the resulting diagram and the number of closed loops."""
    if a.n_bottom != b.n_top:
        raise BoundaryMismatchError(f"cannot stack a diagram with {a.n_bottom} lower points on one with {b.n_top} upper points")
    m = a.n_bottom
    # nodes: ("T", i) top of a, ("M", j) middle line, ("B", k) bottom of b
    adj: dict[tuple[str, int], list[tuple[str, int]]] = {}

    def link(x, y):
        adj.setdefault(x, []).append(y)
        adj.setdefault(y, []).append(x)

    for p, r in a.pairs:
        ends = []
        for pt in (p, r):
            side, k = a.locate(pt)
            ends.append(("T", k) if side == "T" else ("M", k))
        link(*ends)
    for p, r in b.pairs:
        ends = []
        for pt in (p, r):
            side, k = b.locate(pt)
            ends.append(("M", k) if side == "T" else ("B", k))
        link(*ends)

    def step(prev, cur):
        nbrs = adj[cur]
        return nbrs[1] if prev is not None and nbrs[0] == prev else nbrs[0]

    visited: set[tuple[str, int]] = set()
    links = []
    for start in [("T", i) for i in range(a.n_top)] + [("B", k) for k in range(b.n_bottom)]:
        if start in visited:
            continue
        prev, cur = None, start
        visited.add(cur)
        while True:
            prev, cur = cur, step(prev, cur)
            visited.add(cur)
            if cur[0] != "M":
                break
        links.append((start, cur))
    # whatever remains on the middle line closes up into loops
    loops = 0
    for j in range(m):
        if ("M", j) in visited:
            continue
        loops += 1
        prev, cur = None, ("M", j)
        while cur not in visited:
            visited.add(cur)
            prev, cur = cur, step(prev, cur)
    return TLDiagram.from_ends(a.n_top, b.n_bottom, links), loops


class TLElement:
    """Formal combination of diagrams with a common boundary and loop value delta."""

    __slots__ = ("n_top", "n_bottom", "delta", "terms")

    def __init__(self, n_top: int, n_bottom: int, delta: Fraction, terms: dict[TLDiagram, Fraction] | None = None):
        self.n_top, self.n_bottom = n_top, n_bottom
        self.delta = as_fraction(delta)
        self.terms = {}
        for dgm, c in (terms or {}).items():
            if (dgm.n_top, dgm.n_bottom) != (n_top, n_bottom):
                raise BoundaryMismatchError("all diagrams in an element must share boundary data")
            if c:
                self.terms[dgm] = Fraction(c)

    @classmethod
    def of(cls, dgm: TLDiagram, delta, coeff=1) -> TLElement:
        return cls(dgm.n_top, dgm.n_bottom, delta, {dgm: Fraction(coeff)})

    @classmethod
    def identity(cls, n: int, delta) -> TLElement:
        return cls.of(TLDiagram.identity(n), delta)

    @classmethod
    def e(cls, i: int, n: int, delta) -> TLElement:
        """Normalized generator e_i = E_i / delta (a projection)."""
        return cls.of(TLDiagram.generator(i, n), delta, 1 / as_fraction(delta))

    def _like(self, terms) -> TLElement:
        return TLElement(self.n_top, self.n_bottom, self.delta, terms)

    def __add__(self, other: TLElement) -> TLElement:
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return self._like(out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other: TLElement) -> TLElement:
        return self + (-other)

    def scale(self, c) -> TLElement:
        return self._like({k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other: TLElement) -> TLElement:
        if self.delta != other.delta:
            raise ValueError("loop parameters differ")
        if self.n_bottom != other.n_top:
            raise BoundaryMismatchError("boundary counts do not match")
        out: dict[TLDiagram, Fraction] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                dgm, loops = compose_diagrams(a, b)
                out[dgm] = out.get(dgm, 0) + ca * cb * self.delta**loops
        return TLElement(self.n_top, other.n_bottom, self.delta, out)

    def _check(self, other: TLElement):
        if (self.n_top, self.n_bottom, self.delta) != (other.n_top, other.n_bottom, other.delta):
            raise BoundaryMismatchError("elements live in different spaces")

    def __eq__(self, other):
        if not isinstance(other, TLElement):
            return NotImplemented
        return (self.n_top, self.n_bottom, self.delta) == (other.n_top, other.n_bottom, other.delta) and not (self - other).terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        body = " + ".join(f"{c}*{list(d.pairs)}" for d, c in sorted(self.terms.items())) or "0"
        return f"TLElement({self.n_top}->{self.n_bottom}: {body})"


@dataclass(frozen=True)
class TLParams:
    mu: Fraction

    def __post_init__(self):
        mu = as_fraction(self.mu)
        object.__setattr__(self, "mu", mu)
        if mu == 0 or abs(mu) == 1:
            raise ConfigError("the generic regime needs 0 < |mu| < 1 or |mu| > 1")

    @property
    def q(self) -> Fraction:
        return self.mu * self.mu

    @property
    def delta(self) -> Fraction:
        return abs(self.mu + 1 / self.mu)

    @property
    def sign(self) -> int:
        """-1 for mu > 0 (the category T_{-delta}), +1 for mu < 0."""
        return -1 if self.mu > 0 else 1


# --- enumeration -------------------------------------------------------------


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def tl_algebra_dimension(n: int) -> int:
    """Number of (n, n) diagrams, counted by enumeration."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return len(enumerate_diagrams(n))


def _matchings(points: list[int]):
    if not points:
        yield ()
        return
    first = points[0]
    # first point pairs with one at even distance so both sides stay matchable
    for k in range(1, len(points), 2):
        inside, outside = points[1:k], points[k + 1 :]
        for a in _matchings(inside):
            for b in _matchings(outside):
                yield ((first, points[k]),) + a + b


def enumerate_diagrams(n: int) -> list[TLDiagram]:
    """All (n, n) noncrossing matchings, sorted."""
    return sorted(TLDiagram(n, n, m) for m in _matchings(list(range(2 * n))))


def diagram_words(n: int) -> dict[TLDiagram, tuple[int, ...]]:
    """A word E_{i1} ... E_{ik} equal to each diagram (no loops), by breadth-first search."""
    start = TLDiagram.identity(n)
    words = {start: ()}
    queue = deque([start])
    while queue:
        dgm = queue.popleft()
        for i in range(1, n):
            new, loops = compose_diagrams(TLDiagram.generator(i, n), dgm)
            if new not in words:
                assert loops == 0
                words[new] = (i,) + words[dgm]
                queue.append(new)
    return words


# --- Hecke image ---------------------------------------------------------------


def hecke_from_tl(p: TLParams) -> tuple[TLElement, list[IdentityCheck]]:
    """g = (1+q) e - q in TL_2, with the quadratic relation checked exactly."""
    q, delta = p.q, p.delta
    one = TLElement.identity(2, delta)
    e = TLElement.e(1, 2, delta)
    g = e.scale(1 + q) - one.scale(q)
    quad = g @ g - g.scale(1 - q) - one.scale(q)
    e_back = (g + one.scale(q)).scale(1 / (1 + q))
    checks = [
        IdentityCheck("TL_2: g^2 - (1-q)g - q = 0", quad.is_zero(), 0.0 if quad.is_zero() else 1.0, True),
        IdentityCheck("TL_2: e = (g+q)/(1+q) is idempotent", e_back @ e_back == e_back, 0.0, True),
    ]
    return g, checks


@dataclass
class SU2Image:
    """Operator image of TL diagrams on (C^2)^{(x)n} for the mu of ``params``."""

    params: TLParams
    threshold: int = DEFAULT_THRESHOLD

    @cached_property
    def hecke(self) -> HeckeParams:
        return HeckeParams(2, self.params.mu)

    @cached_property
    def cup_cap(self) -> TensorOperator:
        """R R* = lam^2 S S* with lam^2 = 1/|mu| (so ||R||^2 = delta)."""
        S = determinant_vector(self.hecke)
        return (S @ S.adjoint()).scale(1 / abs(self.params.mu))

    def norm_R_sq(self) -> Fraction:
        S = determinant_vector(self.hecke)
        return (S.adjoint() @ S).entry(0, 0) / abs(self.params.mu)

    def sign_rule(self) -> Fraction:
        """(R* (x) 1)(1 (x) R) as a scalar on C^2."""
        S = determinant_vector(self.hecke)
        one = TensorOperator.identity(2, 1)
        op = (S.adjoint().tensor(one) @ one.tensor(S)).scale(1 / abs(self.params.mu))
        return op.scalar_value()

    def generator(self, i: int, n: int) -> TensorOperator:
        check_dimension(2, n, self.threshold, "TL image")
        return self.cup_cap.pad(i - 1, n - i - 1)

    def diagram(self, dgm: TLDiagram, word: tuple[int, ...]) -> TensorOperator:
        n = dgm.n_top
        op = TensorOperator.identity(2, n)
        for i in reversed(word):
            op = self.generator(i, n) @ op
        return op

    def element(self, x: TLElement, words: dict[TLDiagram, tuple[int, ...]]) -> TensorOperator:
        n = x.n_top
        op = TensorOperator(2, n, n)
        for dgm, c in x.terms.items():
            op = op + self.diagram(dgm, words[dgm]).scale(c)
        return op


def tl_relations(p: TLParams, n: int, threshold: int = DEFAULT_THRESHOLD) -> list[IdentityCheck]:
    """e_i^2 = e_i, e_i e_{i+-1} e_i = delta^-2 e_i and far commutativity, in the diagram algebra."""
    delta = p.delta
    e = {i: TLElement.e(i, n, delta) for i in range(1, n)}
    out = []
    for i in range(1, n):
        out.append(_elem_check(f"TL_{n}: e_{i}^2 = e_{i}", e[i] @ e[i], e[i]))
        for j in range(1, n):
            if abs(i - j) == 1:
                out.append(_elem_check(f"TL_{n}: e_{i}e_{j}e_{i} = delta^-2 e_{i}", e[i] @ e[j] @ e[i], e[i].scale(1 / delta**2)))
            elif j > i + 1:
                out.append(_elem_check(f"TL_{n}: e_{i}e_{j} = e_{j}e_{i}", e[i] @ e[j], e[j] @ e[i]))
    return out


def _elem_check(name: str, a: TLElement, b: TLElement) -> IdentityCheck:
    ok = a == b
    return IdentityCheck(name, ok, 0.0 if ok else 1.0, True)


def embed_into_sud2(p: TLParams, n_max: int = 4, relation_max: int = 5, threshold: int = DEFAULT_THRESHOLD) -> dict:
    """Map diagrams to operators on (C^2)^{(x)n} and check the image exactly.

    Covers: TL relations of the image for n <= relation_max, the homomorphism
    property on all pairs of diagrams for n <= n_max, linear independence of
    the Catalan images, the sign rule and ||R||^2 = delta.
    """
    img = SU2Image(p, threshold)
    checks: list[IdentityCheck] = []
    delta = p.delta
    for n in range(2, relation_max + 1):
        check_dimension(2, n, threshold, "TL image")
        e = {i: img.generator(i, n).scale(1 / delta) for i in range(1, n)}
        for i in range(1, n):
            checks.append(compare(f"image n={n}: e_{i}^2 = e_{i}", e[i] @ e[i], e[i]))
            for j in range(1, n):
                if abs(i - j) == 1:
                    checks.append(compare(f"image n={n}: e_{i}e_{j}e_{i} = delta^-2 e_{i}", e[i] @ e[j] @ e[i], e[i].scale(1 / delta**2)))
                elif j > i + 1:
                    checks.append(compare(f"image n={n}: e_{i}e_{j} = e_{j}e_{i}", e[i] @ e[j], e[j] @ e[i]))
    independence = {}
    for n in range(1, n_max + 1):
        words = diagram_words(n)
        ops = {dgm: img.diagram(dgm, w) for dgm, w in words.items()}
        hom_ok = True
        worst = 0.0
        for a in words:
            for b in words:
                dgm, loops = compose_diagrams(a, b)
                lhs = ops[a] @ ops[b]
                rhs = ops[dgm].scale(delta**loops)
                if lhs != rhs:
                    hom_ok = False
                    worst = max(worst, lhs.defect(rhs))
        checks.append(IdentityCheck(f"image n={n}: diagram composition = operator composition ({len(words)}^2 pairs)", hom_ok, worst, True))
        flat = [[op.entry(r, c) for c in range(op.n_cols) for r in range(op.n_rows)] for op in ops.values()]
        r = rank(flat) if flat else 0
        independence[n] = r
        checks.append(IdentityCheck(f"image n={n}: rank of diagram images = Catalan({n}) = {catalan(n)}", r == catalan(n), float(abs(r - catalan(n))), True))
    sign = img.sign_rule()
    checks.append(IdentityCheck(f"sign rule (R*(x)1)(1(x)R) = {sign} matches category sign {p.sign}", sign == p.sign, float(abs(sign - p.sign)) if sign is not None else 1.0, True))
    nrm = img.norm_R_sq()
    checks.append(IdentityCheck(f"||R||^2 = delta = {delta}", nrm == delta, float(abs(nrm - delta)), True))
    # e projects onto the line of S, where eta(g) acts by -q, so the TL
    # generator lands on the rescaled inverse -q eta(g)^-1 (same Hecke relation)
    g_tl = img.cup_cap.scale((1 + p.q) / delta) - TensorOperator.identity(2, 2, one=p.q)
    checks.append(compare("image of (1+q)e - q = -q eta(g)^-1 on (C^2)^2", g_tl, jw_local(img.hecke, -1).scale(-p.q)))
    return {"checks": checks, "sign": sign, "delta": delta, "norm_R_sq": nrm, "image_ranks": independence}


def tl_suite(mu, threshold: int = DEFAULT_THRESHOLD) -> list[IdentityCheck]:
    p = TLParams(mu)
    checks: list[IdentityCheck] = []
    for n in range(2, 6):
        checks.extend(tl_relations(p, n))
    for n in range(0, 6):
        dim = tl_algebra_dimension(n)
        checks.append(IdentityCheck(f"TL_{n} has Catalan({n}) = {catalan(n)} diagrams", dim == catalan(n), float(abs(dim - catalan(n))), True))
    checks.extend(hecke_from_tl(p)[1])
    checks.extend(embed_into_sud2(p, threshold=threshold)["checks"])
    return checks
