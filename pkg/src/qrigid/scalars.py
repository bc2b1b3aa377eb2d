"""Scalar arithmetic shared by every other module.

Three value domains are used:

* ``fractions.Fraction`` for exact rationals (q = mu**2, quantum integers,
  weight-form values);
* :class:`CyclotomicScalar` for exact elements of Q(zeta_m), used when the
  d-th root omega of mu lies in a cyclotomic field;
* Python ``complex`` for everything else.

:class:`PhasedPower` is the exact value domain of kappa on irreducible
objects: a root of unity times a rational power of a fixed base ``|mu|``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

Rational = Union[int, Fraction]
Scalar = Union[int, Fraction, "CyclotomicScalar", complex, float]

#: relative tolerance for floating comparisons
FLOAT_TOL = 1e-9


def as_fraction(x: Rational | str) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def render_rational(x: Rational) -> str:
    x = as_fraction(x)
    return f"{x.numerator}/{x.denominator}"


def integer_root(n: int, k: int) -> int | None:
    """Exact k-th root of a non-negative integer, or None."""
    if n < 0 or k < 1:
        raise ValueError("integer_root needs n >= 0 and k >= 1")
    if n < 2 or k == 1:
        return n
    # Newton iteration on integers, starting above the root
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x**k == n else None


def exact_root(x: Rational, k: int) -> Fraction | None:
    """Positive rational k-th root of a positive rational, when it exists."""
    x = as_fraction(x)
    if x <= 0:
        raise ValueError("exact_root needs a positive argument")
    p = integer_root(x.numerator, k)
    q = integer_root(x.denominator, k)
    if p is None or q is None:
        return None
    return Fraction(p, q)


def is_finite(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


def approx_equal(a: complex, b: complex, tol: float = FLOAT_TOL, scale: float | None = None) -> bool:
    """Compare with tolerance scaled by the larger operand (or by ``scale``)."""
    if scale is None:
        scale = max(abs(a), abs(b))
    return abs(a - b) <= tol * scale


# ---------------------------------------------------------------------------
# cyclotomic fields


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise ValueError("order must be positive")
    # x^m - 1 divided by Phi_k for every proper divisor k
    num = [-1] + [0] * (m - 1) + [1]
    for k in range(1, m):
        if m % k == 0:
            num = _poly_exact_div(num, list(cyclotomic_polynomial(k)))
    return tuple(num)


def _poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        c, r = divmod(num[i + len(den) - 1], lead)
        assert r == 0
        out[i] = c
        for j, dj in enumerate(den):
            num[i + j] -= c * dj
    assert not any(num[: len(den) - 1])
    return out


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Row j holds zeta_m**j written in the power basis 1, zeta, ..., zeta**(phi-1)."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(m):
        rows.append(tuple(cur))
        # multiply by x and reduce the x**deg term with the monic Phi_m
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(deg):
                cur[i] -= top * phi[i]
    return tuple(rows)


class CyclotomicScalar:
    """An element of Q(zeta_m), zeta_m = exp(2 pi i / m), in the power basis.

    Instances are immutable and compare exactly.  Operands of different order
    are lifted to the lcm of the orders.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        deg = len(cyclotomic_polynomial(order)) - 1
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != deg:
            raise ValueError(f"expected {deg} coefficients for order {order}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicScalar is immutable")

    # constructors -------------------------------------------------------
    @classmethod
    def from_residues(cls, order: int, residues: dict[int, Rational]) -> CyclotomicScalar:
        """Build sum_j c_j zeta_m**j from a map j -> c_j (j taken mod m)."""
        table = _power_table(order)
        out = [Fraction(0)] * len(table[0])
        for j, c in residues.items():
            c = Fraction(c)
            if c:
                for i, t in enumerate(table[j % order]):
                    if t:
                        out[i] += c * t
        return cls(order, out)

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> CyclotomicScalar:
        return cls.from_residues(order, {power: 1})

    @classmethod
    def rational(cls, order: int, value: Rational) -> CyclotomicScalar:
        return cls.from_residues(order, {0: value})

    # structure ----------------------------------------------------------
    def lift(self, order: int) -> CyclotomicScalar:
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot lift order {self.order} to {order}")
        step = order // self.order
        return CyclotomicScalar.from_residues(order, {i * step: c for i, c in enumerate(self.coeffs) if c})

    def _coerce(self, other) -> CyclotomicScalar | None:
        if isinstance(other, CyclotomicScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicScalar.rational(self.order, other)
        return None

    @staticmethod
    def _common(a: CyclotomicScalar, b: CyclotomicScalar):
        if a.order == b.order:
            return a, b
        m = math.lcm(a.order, b.order)
        return a.lift(m), b.lift(m)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational element")
        return self.coeffs[0]

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._common(self, o)
        return CyclotomicScalar(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicScalar(self.order, [-x for x in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicScalar(self.order, [x * other for x in self.coeffs])
        if not isinstance(other, CyclotomicScalar):
            return NotImplemented
        a, b = self._common(self, other)
        table = _power_table(a.order)
        deg = len(a.coeffs)
        conv = [Fraction(0)] * (2 * deg - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        conv[i + j] += x * y
        out = list(conv[:deg])
        for k in range(deg, 2 * deg - 1):
            c = conv[k]
            if c:
                for i, t in enumerate(table[k % a.order]):
                    if t:
                        out[i] += c * t
        return CyclotomicScalar(a.order, out)

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicScalar:
        """Multiplicative inverse, by solving the multiplication-matrix system."""
        if not self:
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return CyclotomicScalar.rational(self.order, 1 / self.coeffs[0])
        deg = len(self.coeffs)
        # column i is self * zeta**i
        cols = [(self * CyclotomicScalar.zeta(self.order, i)).coeffs for i in range(deg)]
        rows = [[cols[i][r] for i in range(deg)] + [Fraction(int(r == 0))] for r in range(deg)]
        from .linalg import solve_augmented

        return CyclotomicScalar(self.order, solve_augmented(rows))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicScalar(self.order, [x / other for x in self.coeffs])
        if not isinstance(other, CyclotomicScalar):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CyclotomicScalar.rational(self.order, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> CyclotomicScalar:
        """Complex conjugation zeta -> zeta**-1."""
        return CyclotomicScalar.from_residues(self.order, {-i: c for i, c in enumerate(self.coeffs) if c})

    # comparison / conversion --------------------------------------------
    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._common(self, o)
        return a.coeffs == b.coeffs

    # lifted copies compare equal across orders, so no consistent hash
    __hash__ = None

    def __complex__(self):
        z = cmath.exp(2j * cmath.pi / self.order)
        return complex(sum(float(c) * z**i for i, c in enumerate(self.coeffs)))

    def to_complex(self) -> complex:
        return complex(self)

    def __abs__(self):
        return abs(complex(self))

    def __repr__(self):
        terms = [f"{render_rational(c)}*z^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"Cyc{self.order}(" + (" + ".join(terms) or "0") + ")"


def to_complex(x: Scalar) -> complex:
    return complex(x)


# ---------------------------------------------------------------------------
# phased powers


@dataclass(frozen=True)
class PhasedPower:
    """exp(2 pi i k/m) * |mu|**e for a contextual base |mu| > 0."""

    k: int = 0
    m: int = 1
    e: Fraction = Fraction(0)

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("phase order must be positive")
        k = self.k % self.m
        g = math.gcd(k, self.m)
        # k == 0 gives g == m, so the trivial phase normalizes to 0/1
        object.__setattr__(self, "k", k // g)
        object.__setattr__(self, "m", self.m // g)
        object.__setattr__(self, "e", as_fraction(self.e))

    def __mul__(self, other: PhasedPower) -> PhasedPower:
        if not isinstance(other, PhasedPower):
            return NotImplemented
        m = math.lcm(self.m, other.m)
        k = self.k * (m // self.m) + other.k * (m // other.m)
        return PhasedPower(k, m, self.e + other.e)

    def __pow__(self, n: int) -> PhasedPower:
        return PhasedPower(self.k * n, self.m, self.e * n)

    def inverse(self) -> PhasedPower:
        return self ** -1

    def conjugate(self) -> PhasedPower:
        return PhasedPower(-self.k, self.m, self.e)

    def is_phase(self) -> bool:
        return self.e == 0

    def evaluate(self, mu_abs: Rational | float) -> complex:
        if mu_abs <= 0:
            raise ValueError("base |mu| must be positive")
        modulus = float(mu_abs) ** float(self.e) if self.e else 1.0
        if self.k == 0:
            return complex(modulus, 0.0)
        if 2 * self.k == self.m:
            return complex(-modulus, 0.0)
        return modulus * cmath.exp(2j * cmath.pi * self.k / self.m)

    def to_cyclotomic(self, mu_abs: Rational) -> CyclotomicScalar | None:
        """Exact value in Q(zeta_m) when |mu|**e is rational, else None."""
        e = self.e
        root = exact_root(mu_abs, e.denominator)
        if root is None:
            return None
        modulus = root**e.numerator
        return CyclotomicScalar.from_residues(self.m, {self.k: modulus})

    def render(self) -> str:
        return f"zeta({self.k}/{self.m})*|mu|^({render_rational(self.e)})"

    def __str__(self):
        return self.render()


ONE = PhasedPower()


def pp_multiply(a: PhasedPower, b: PhasedPower) -> PhasedPower:
    return a * b


def pp_is_phase(a: PhasedPower) -> bool:
    return a.is_phase()


def pp_evaluate(a: PhasedPower, mu_abs: Rational | float) -> complex:
    return a.evaluate(mu_abs)


def parse_phased_power(text: str) -> PhasedPower:
    """Inverse of :meth:`PhasedPower.render`."""
    try:
        head, tail = text.split(")*|mu|^(")
        k, m = head[len("zeta(") :].split("/")
        e = Fraction(tail.rstrip(")"))
        return PhasedPower(int(k), int(m), e)
    except ValueError as exc:
        raise ValueError(f"malformed phased power {text!r}") from exc


def mu_phased(mu: Rational) -> PhasedPower:
    """mu = sign * |mu| as a phased power (sign absorbed into the phase)."""
    mu = as_fraction(mu)
    if mu == 0:
        raise ValueError("mu must be nonzero")
    return PhasedPower(0 if mu > 0 else 1, 2, 1)


def omega_phased(mu: Rational, d: int, index: int) -> PhasedPower:
    """The d-th root of mu with the given index.

    omega = zeta_{2d}**(2*index + s) * |mu|**(1/d), with s = 0 for mu > 0 and
    s = 1 for mu < 0, so that omega**d == mu for every index.
    """
    mu = as_fraction(mu)
    if mu == 0:
        raise ValueError("mu must be nonzero")
    s = 0 if mu > 0 else 1
    return PhasedPower(2 * (index % d) + s, 2 * d, Fraction(1, d))


def realize(value: PhasedPower, mu: Rational, backend: str):
    """Turn a phased power into a scalar of the requested backend."""
    mu_abs = abs(as_fraction(mu))
    if backend == "floating":
        return value.evaluate(mu_abs)
    exact = value.to_cyclotomic(mu_abs)
    if exact is None:
        raise ValueError(f"{value.render()} is not exact over Q(zeta) for |mu| = {render_rational(mu_abs)}")
    if backend == "rational":
        if not exact.is_rational():
            raise ValueError(f"{value.render()} is not rational")
        return exact.rational_value()
    return exact
