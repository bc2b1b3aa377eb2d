"""The rigidity report: weight sweep, identity suites, the braiding defect and
the mu <-> -mu spectral comparison, with a deterministic JSON/CSV/text body."""

from __future__ import annotations

import csv
import datetime as _dt
import io
import json
import platform
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import __version__
from .braiding_kappa import (
    Braiding,
    BraidingSpec,
    braiding_suite,
    full_twist_inverse_word,
    kappa_fundamental_direct,
    standard_conjugate_fundamental,
)
from .checks import IdentityCheck
from .errors import ConfigError, QRigidError, ResourceError
from .hecke_rep import HeckeParams, antisymmetrizer, represent_word, verify_S_relations
from .kw_twist import kw_suite
from .lie_data import LieType, casimir_exponent, enumerate_dominant, kappa_modulus, root_datum
from .operators import DEFAULT_THRESHOLD, TensorOperator, check_dimension
from .scalars import as_fraction, pp_is_phase, render_rational
from .temperley_lieb import tl_suite

SCHEMA_VERSION = 1

EXIT_PASS = 0
EXIT_RIGIDITY = 2
EXIT_IDENTITY = 3
EXIT_RESOURCE = 4
EXIT_CONFIG = 5


@dataclass(frozen=True)
class RunConfig:
    lie_type: LieType
    mu: Fraction
    omega_index: int = 0
    max_height: int = 3
    max_power: int = 3
    backend: str = "cyclotomic"
    threshold: int = DEFAULT_THRESHOLD
    jobs: int = field(default=1, compare=False)

    def __post_init__(self):
        try:
            mu = as_fraction(self.mu)
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(f"mu must be a rational p/q: {exc}") from exc
        object.__setattr__(self, "mu", mu)
        if mu == 0:
            raise ConfigError("mu must be nonzero")
        if self.lie_type.series != "A" and (mu <= 0 or mu == 1):
            raise ConfigError(f"type {self.lie_type.series} needs 0 < mu < 1 or mu > 1")
        if self.backend not in ("rational", "cyclotomic", "floating"):
            raise ConfigError(f"unknown backend {self.backend!r}")
        if self.max_height < 0 or self.max_power < 1 or self.threshold < 1:
            raise ConfigError("max-height >= 0, max-power >= 1 and threshold >= 1 are required")

    @property
    def d(self) -> int | None:
        """Dimension of the fundamental object for type A."""
        return self.lie_type.rank + 1 if self.lie_type.series == "A" else None

    @property
    def degenerate(self) -> bool:
        return abs(self.mu) == 1

    def as_dict(self) -> dict:
        return {
            "type": self.lie_type.series,
            "rank": self.lie_type.rank,
            "mu": render_rational(self.mu),
            "omega_index": self.omega_index,
            "max_height": self.max_height,
            "max_power": self.max_power,
            "backend": self.backend,
            "threshold": self.threshold,
        }


# --- obstruction witness -------------------------------------------------------


def operator_norm(a: np.ndarray, rel_tol: float = 1e-12, max_iter: int = 10_000) -> float:
    """Largest singular value by power iteration on A A* (deterministic start)."""
    m = a @ a.conj().T
    if not np.any(m):
        return 0.0
    x = np.ones(m.shape[0], dtype=complex) / np.sqrt(m.shape[0])
    est = 0.0
    for _ in range(max_iter):
        y = m @ x
        ny = np.linalg.norm(y)
        if ny == 0.0:
            # start vector in the kernel; fall back to a basis sweep
            x = np.eye(m.shape[0], dtype=complex)[int(np.argmax(np.abs(np.diag(m))))]
            continue
        x = y / ny
        new = float(np.real(np.vdot(x, m @ x)))
        if abs(new - est) <= rel_tol * max(abs(new), 1e-300):
            est = new
            break
        est = new
    return float(np.sqrt(max(est, 0.0)))


def defect_51(spec: BraidingSpec, threshold: int = DEFAULT_THRESHOLD) -> float:
    """|| (R_u* (x) 1_v) (1_ubar (x) [sigma(v,u) - sigma_d(v,u)]) || at u = v = fundamental.

    sigma_d = (sigma*)^{-1}; ubar is cut out of u^{d-1} by E_{d-1}.  Zero exactly
    when the two composites agree, as they do for a unitary braiding.
    """
    d = spec.d
    check_dimension(d, d + 1, threshold, "defect_51")
    pair = standard_conjugate_fundamental(spec, threshold)
    diff = Braiding(spec, "sigma", threshold).block(1, 1) - Braiding(spec, "dual", threshold).block(1, 1)
    S = spec.lift(pair.S)
    one = spec.lift(TensorOperator.identity(d, 1))
    E = spec.lift(antisymmetrizer(spec.params, d - 1, threshold))
    composite = S.adjoint().tensor(one) @ diff.pad(d - 1, 0) @ E.pad(0, 2)
    return float(pair.lam) * operator_norm(composite.to_numpy())


def _sorted_spectrum(values) -> list[complex]:
    return sorted((complex(v) for v in values), key=lambda z: (round(z.real, 9), round(z.imag, 9)))


def mu_sign_spectrum_check(p: HeckeParams, n: int, threshold: int = DEFAULT_THRESHOLD, tol: float = 1e-9) -> dict:
    """Eigenvalues of eta_mu(w) and eta_{-mu}(w), w = G_{n-1}^{-1} ... G_1^{-1}, paired after sorting."""
    if not 1 <= n <= p.d:
        raise ConfigError(f"spectrum comparison needs 1 <= n <= d = {p.d}")
    check_dimension(p.d, n, threshold, "spectrum check")
    w = full_twist_inverse_word(n)
    spectra = []
    for params in (p, p.negated()):
        op = represent_word(params, w, n, threshold)
        spectra.append(_sorted_spectrum(np.linalg.eigvals(op.to_numpy())))
    a, b = spectra
    worst = max((abs(x - y) / max(1.0, abs(x)) for x, y in zip(a, b)), default=0.0)
    return {
        "d": p.d,
        "n": n,
        "mu": render_rational(p.mu),
        "word": str(w),
        "max_defect": worst,
        "passed": len(a) == len(b) and worst <= tol,
        "eigenvalues_mu": [_fmt_complex(z) for z in a],
        "eigenvalues_neg_mu": [_fmt_complex(z) for z in b],
    }


def _fmt_complex(z: complex) -> str:
    re = 0.0 if abs(z.real) < 1e-15 else z.real
    im = 0.0 if abs(z.imag) < 1e-15 else z.imag
    return f"{re:.12g}" if im == 0.0 else f"{re:.12g}{im:+.12g}j"


# --- jobs ----------------------------------------------------------------------


def _identity_records(module: str, checks: list[IdentityCheck]) -> list[dict]:
    return [
        {
            "module": module,
            "name": c.name,
            "status": "pass" if c.passed else "fail",
            "exact": c.exact,
            "defect": "0" if c.exact and c.passed else f"{c.defect:.6g}",
        }
        for c in checks
    ]


def _job_weights(cfg: RunConfig) -> dict:
    rd = root_datum(cfg.lie_type)
    mu_abs = abs(cfg.mu)
    records = []
    for lam in enumerate_dominant(cfg.lie_type.rank, cfg.max_height):
        e = casimir_exponent(rd, lam)
        kp = kappa_modulus(rd, lam)
        records.append(
            {
                "weight": str(lam),
                "casimir_exponent": render_rational(e),
                "kappa_modulus": kp.render(),
                "kappa_modulus_value": f"{abs(kp.evaluate(mu_abs)):.12g}",
                "is_phase": pp_is_phase(kp),
            }
        )
    return {"weights": records}


def _braiding_spec(cfg: RunConfig) -> BraidingSpec:
    return BraidingSpec(HeckeParams(cfg.d, cfg.mu), cfg.omega_index, cfg.backend)


def _job_hecke(cfg: RunConfig) -> dict:
    return {"identities": _identity_records("hecke_rep", verify_S_relations(HeckeParams(cfg.d, cfg.mu), cfg.threshold))}


def _job_braiding(cfg: RunConfig) -> dict:
    spec = _braiding_spec(cfg)
    checks = braiding_suite(spec, cfg.max_power, cfg.threshold)
    k = kappa_fundamental_direct(spec, cfg.threshold)
    kappa = {
        "backend_used": spec.backend,
        "omega": spec.omega_pp().render(),
        "kappa_u": k.value.render() if k.value is not None else _fmt_complex(k.numeric),
        "kappa_u_numeric": _fmt_complex(k.numeric),
        "closed_form": spec.kappa_closed_form().render(),
    }
    return {"identities": _identity_records("braiding_kappa", checks), "kappa": kappa}


def _job_tl(cfg: RunConfig) -> dict:
    return {"identities": _identity_records("temperley_lieb", tl_suite(cfg.mu, cfg.threshold))}


def _job_kw(cfg: RunConfig) -> dict:
    checks, labels = kw_suite(HeckeParams(cfg.d, cfg.mu), cfg.threshold)
    return {"identities": _identity_records("kw_twist", checks), "kw_labels": labels}


def _job_defect(cfg: RunConfig) -> dict:
    spec = _braiding_spec(cfg)
    value = defect_51(spec, cfg.threshold)
    return {"defect_51": {"value": f"{value:.12g}", "omega": spec.omega_pp().render(), "d": cfg.d}}


def _job_spectrum(cfg: RunConfig) -> dict:
    d = cfg.d
    n = min(cfg.max_power, d)
    while n > 1 and d**n > cfg.threshold:
        n -= 1
    return {"spectrum_check": mu_sign_spectrum_check(HeckeParams(d, cfg.mu), max(n, 1), cfg.threshold)}


def _run_job(name: str, cfg: RunConfig) -> dict:
    try:
        return {"ok": True, **JOBS[name](cfg)}
    except ResourceError as exc:
        return {"ok": False, "error": "resource", "message": f"{name}: {exc}"}
    except QRigidError as exc:
        return {"ok": False, "error": "internal", "message": f"{name}: {exc}"}


JOBS = {
    "01-weights": _job_weights,
    "02-hecke": _job_hecke,
    "03-braiding": _job_braiding,
    "04-temperley-lieb": _job_tl,
    "05-kw-twist": _job_kw,
    "06-defect-51": _job_defect,
    "07-spectrum": _job_spectrum,
}


def planned_jobs(cfg: RunConfig) -> list[str]:
    names = ["01-weights"]
    if cfg.lie_type.series == "A":
        names += ["02-hecke", "03-braiding"]
        if cfg.d == 2 and not cfg.degenerate:
            names.append("04-temperley-lieb")
        names += ["05-kw-twist", "06-defect-51", "07-spectrum"]
    return names


# --- report --------------------------------------------------------------------


@dataclass
class RigidityReport:
    body: dict
    exit_code: int

    def to_json(self) -> str:
        return json.dumps(self.body, indent=2, sort_keys=True) + "\n"

    def deterministic_body(self) -> str:
        """JSON with the timestamp removed; identical configs give identical bytes."""
        body = json.loads(json.dumps(self.body))
        body["version"].pop("timestamp", None)
        return json.dumps(body, indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["section", "name", "value", "status"])
        for rec in self.body["weights"]:
            w.writerow(["weight", rec["weight"], rec["kappa_modulus"], "phase" if rec["is_phase"] else "non-phase"])
        for rec in self.body["identities"]:
            w.writerow(["identity", f"{rec['module']}: {rec['name']}", rec["defect"], rec["status"]])
        if self.body["defect_51"] is not None:
            w.writerow(["defect_51", "fundamental", self.body["defect_51"]["value"], ""])
        sc = self.body["spectrum_check"]
        if sc is not None:
            w.writerow(["spectrum_check", f"n={sc['n']}", sc["max_defect"], "pass" if sc["passed"] else "fail"])
        w.writerow(["verdict", self.body["verdict"]["status"], self.body["verdict"]["exit_code"], ""])
        return buf.getvalue()

    def to_text(self) -> str:
        b = self.body
        cfg = b["config"]
        lines = [f"rigidity report for {cfg['type']}_{cfg['rank']} at mu = {cfg['mu']} (backend {cfg['backend']})", ""]
        phases = [r["weight"] for r in b["weights"] if r["is_phase"]]
        lines.append(f"weights checked: {len(b['weights'])}; kappa is a phase at: {', '.join(phases) or 'none'}")
        for rec in b["weights"][:12]:
            lines.append(f"  {rec['weight']:>16}  (l,l+2rho) = {rec['casimir_exponent']:>8}  |kappa| = {rec['kappa_modulus_value']}")
        if len(b["weights"]) > 12:
            lines.append(f"  ... {len(b['weights']) - 12} more")
        failed = [r for r in b["identities"] if r["status"] != "pass"]
        lines.append(f"identities: {len(b['identities'])} checked, {len(failed)} failed")
        for r in failed:
            lines.append(f"  FAIL {r['module']}: {r['name']} (defect {r['defect']})")
        if b["defect_51"] is not None:
            lines.append(f"defect_51 = {b['defect_51']['value']}")
        if b["spectrum_check"] is not None:
            sc = b["spectrum_check"]
            lines.append(f"mu <-> -mu spectrum (n={sc['n']}): {'agree' if sc['passed'] else 'DIFFER'} (max defect {sc['max_defect']:.3g})")
        for note in b["verdict"]["notes"]:
            lines.append(f"note: {note}")
        lines.append(f"verdict: {b['verdict']['status']} (exit {b['verdict']['exit_code']})")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise ConfigError(f"unknown format {fmt!r}")


def version_stamp(timestamp: bool = True) -> dict:
    out = {
        "schema": SCHEMA_VERSION,
        "package": __version__,
        "python": platform.python_version(),
        "numpy": np.__version__,
    }
    if timestamp:
        out["timestamp"] = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    return out


def run_jobs(cfg: RunConfig, names: list[str]) -> dict[str, dict]:
    """Run jobs (in a process pool when cfg.jobs > 1); results keyed by job name."""
    if cfg.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            futures = {name: pool.submit(_run_job, name, cfg) for name in names}
            return {name: futures[name].result() for name in sorted(names)}
    return {name: _run_job(name, cfg) for name in sorted(names)}


def rigidity_report(cfg: RunConfig, timestamp: bool = True) -> RigidityReport:
    results = run_jobs(cfg, planned_jobs(cfg))
    body = {
        "config": cfg.as_dict(),
        "weights": [],
        "identities": [],
        "defect_51": None,
        "spectrum_check": None,
        "verdict": None,
        "version": version_stamp(timestamp),
    }
    notes: list[str] = []
    errors: list[str] = []
    resource = False
    for name in sorted(results):
        res = results[name]
        if not res["ok"]:
            errors.append(res["message"])
            resource = resource or res["error"] == "resource"
            continue
        body["weights"].extend(res.get("weights", []))
        body["identities"].extend(res.get("identities", []))
        for key in ("defect_51", "spectrum_check"):
            if key in res:
                body[key] = res[key]
        if "kw_labels" in res:
            body["kw_labels"] = res["kw_labels"]
        if "kappa" in res:
            body["kappa_fundamental"] = res["kappa"]

    violations = [r["weight"] for r in body["weights"] if r["is_phase"] and any(c != "0" for c in r["weight"].strip("()").split(","))]
    failures = [r for r in body["identities"] if r["status"] != "pass"]
    spectrum_failed = body["spectrum_check"] is not None and not body["spectrum_check"]["passed"]

    if cfg.degenerate:
        notes.append("degenerate: |mu|=1, no rigidity verdict")
    if errors:
        notes.extend(errors)
    if violations and not cfg.degenerate:
        status, code = "rigidity-violation", EXIT_RIGIDITY
        notes.append(f"kappa is a phase on nonzero weights: {', '.join(violations)}")
    elif failures or spectrum_failed or (errors and not resource):
        status, code = "identity-failure", EXIT_IDENTITY
    elif resource:
        status, code = "resource-limit", EXIT_RESOURCE
    elif cfg.degenerate:
        status, code = "degenerate: |mu|=1, no rigidity verdict", EXIT_PASS
    else:
        status, code = "pass", EXIT_PASS
    body["verdict"] = {"status": status, "exit_code": code, "notes": notes}
    return RigidityReport(body, code)


def kappa_table(cfg: RunConfig) -> list[dict]:
    """Weight, (lambda, lambda+2rho) and |kappa| for every weight up to max_height."""
    return _job_weights(cfg)["weights"]
