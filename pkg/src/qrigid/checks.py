from __future__ import annotations

from dataclasses import asdict, dataclass

from .operators import TensorOperator
from .scalars import FLOAT_TOL


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of one verified identity.

    ``defect`` is the max column 1-norm of (lhs - rhs); exact checks pass only
    at defect 0, floating ones at ``tol`` relative to the operands' norm.
    """

    name: str
    passed: bool
    defect: float
    exact: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return asdict(self)


def compare(name: str, lhs: TensorOperator, rhs: TensorOperator, tol: float = FLOAT_TOL, detail: str = "") -> IdentityCheck:
    """Exact comparison when both sides are exact, else tolerance-scaled."""
    exact = lhs.is_exact() and rhs.is_exact()
    defect = lhs.defect(rhs)
    if exact:
        passed = defect == 0.0 and lhs == rhs
    else:
        passed = defect <= tol * max(lhs.norm1(), rhs.norm1(), 1e-300)
    return IdentityCheck(name, passed, defect, exact, detail)


def scalar_check(name: str, value, expected, tol: float = FLOAT_TOL, detail: str = "") -> IdentityCheck:
    exact = not isinstance(value, (complex, float)) and not isinstance(expected, (complex, float))
    defect = abs(complex(value) - complex(expected))
    if exact:
        passed = value == expected
    else:
        passed = defect <= tol * max(abs(complex(value)), abs(complex(expected)), 1e-300)
    return IdentityCheck(name, passed, defect, exact, detail)
