"""Acceptance criteria, one test per criterion.

Each test records a single PASS/FAIL line (printed in the pytest terminal
summary by conftest.py) and then asserts the same condition.
"""

from __future__ import annotations

import subprocess
import sys
import time
from fractions import Fraction

from conftest import ACCEPTANCE_LINES

from qrigid.braiding_kappa import (
    BraidingSpec,
    expected_exponents,
    kappa_fundamental_direct,
    kappa_power_via_hecke,
    kappa_power_via_sigma,
    kappa_spectrum,
    spectrum_exponents,
)
from qrigid.checks import compare
from qrigid.hecke_rep import HeckeParams, verify_S_relations
from qrigid.kw_twist import (
    LABEL_MINUS,
    LABEL_PLUS,
    LABEL_UNDETERMINED,
    TwistSpec,
    block_braid_eigenvalue,
    category_twist,
    classify_sl_d,
    tau_closed_form,
    verify_prop72,
)
from qrigid.lie_data import (
    MIN_RANK,
    DominantWeight,
    LieType,
    casimir_exponent,
    enumerate_dominant,
    kappa_modulus,
    positivity_sweep,
    root_datum,
)
from qrigid.rigidity import defect_51, mu_sign_spectrum_check
from qrigid.scalars import pp_is_phase
from qrigid.temperley_lieb import TLParams, embed_into_sud2, tl_algebra_dimension, tl_relations

F = Fraction
TOL = 1e-9


def record(number: int, text: str, passed: bool) -> None:
    ACCEPTANCE_LINES.append((number, text, passed))
    print(f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {text}")


def all_types(max_rank: int = 8):
    for series in "ABCD":
        for r in range(MIN_RANK[series], max_rank + 1):
            yield LieType(series, r)


def test_criterion_01_hecke_relations_exact():
    start = time.perf_counter()
    failures = []
    for d in (2, 3):
        for mu in (F(1, 2), F(2), F(-1, 2)):
            for c in verify_S_relations(HeckeParams(d, mu)):
                if not (c.passed and c.exact and c.defect == 0):
                    failures.append(f"d={d} mu={mu}: {c.name}")
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 30
    record(1, f"S relations and g_i S = -q S exact for d in {{2,3}}, mu in {{1/2,2,-1/2}} ({elapsed:.2f}s) {failures}", ok)
    assert ok, failures


def test_criterion_02_kappa_closed_form():
    failures = []
    # floating: |mu| not a d-th power of a rational
    for d in (2, 3):
        for mu in (F(1, 2), F(2), F(-1, 2)):
            for k in range(d):
                spec = BraidingSpec(HeckeParams(d, mu), k, "floating")
                assert spec.backend == "floating"
                got = kappa_fundamental_direct(spec).numeric
                want = spec.kappa_closed_form().evaluate(abs(mu))
                if abs(got - want) > TOL * abs(want):
                    failures.append(f"floating d={d} mu={mu} k={k}: {got:.6g} vs {want:.6g}")
    # cyclotomic: mu = +-nu^d
    for d, nu in ((2, F(1, 2)), (3, F(1, 2)), (2, F(3)), (3, F(2))):
        for mu in (nu**d, -(nu**d)):
            for k in range(d):
                spec = BraidingSpec(HeckeParams(d, mu), k, "cyclotomic")
                assert spec.backend == "cyclotomic"
                got = kappa_fundamental_direct(spec)
                want = spec.kappa_closed_form()
                if got.value != want:
                    failures.append(f"exact d={d} mu={mu} k={k}: {got.value} vs {want}")
    # modulus exponent from weight data
    for d in (2, 3):
        e = casimir_exponent(root_datum(LieType("A", d - 1)), DominantWeight.fundamental(d - 1, 1))
        k = kappa_fundamental_direct(BraidingSpec(HeckeParams(d, F(1, 2**d)), 0))
        if not (e == F(d * d - 1, d) == k.value.e):
            failures.append(f"exponent d={d}: {e} vs {k.value.e}")
    ok = not failures
    record(2, f"kappa(u) = (omega mu)^(d-1) per omega, floating to 1e-9 and exact; exponent (d^2-1)/d; mismatches: {failures}", ok)
    assert ok, failures


def test_criterion_03_route_agreement():
    failures = []
    cases = [(2, F(1, 4), "cyclotomic"), (2, F(-1, 4), "cyclotomic"), (3, F(1, 8), "cyclotomic"), (3, F(-1, 8), "cyclotomic")]
    cases += [(d, mu, "floating") for d in (2, 3) for mu in (F(1, 2), F(2), F(-1, 2))]
    for d, mu, backend in cases:
        for k in range(d):
            spec = BraidingSpec(HeckeParams(d, mu), k, backend)
            for n in range(1, 5):
                c = compare("routes", kappa_power_via_sigma(spec, n), kappa_power_via_hecke(spec, n))
                if not c.passed or (backend == "cyclotomic" and not c.exact):
                    failures.append(f"d={d} mu={mu} k={k} n={n} ({backend}, defect {c.defect:.3g})")
    ok = not failures
    record(3, f"kappa(u^n) sigma route = Hecke route for d in {{2,3}}, n <= 4; mismatches: {failures}", ok)
    assert ok, failures


def test_criterion_04_spectrum_to_weights():
    failures = []
    for d, n in ((2, 2), (2, 3), (3, 2)):
        for mu in (F(1, 2), F(2)):
            got = spectrum_exponents(BraidingSpec(HeckeParams(d, mu)), n)
            want = expected_exponents(d, n)
            if got != want:
                failures.append(f"d={d} n={n} mu={mu}: {got} vs {want}")
    moduli = sorted((round(abs(v), 12), m) for v, m in kappa_spectrum(BraidingSpec(HeckeParams(2, F(1, 2))), 2))
    if moduli != [(0.0625, 3), (1.0, 1)]:
        failures.append(f"d=2 n=2 mu=1/2 moduli {moduli}")
    a2 = root_datum(LieType("A", 2))
    if set(spectrum_exponents(BraidingSpec(HeckeParams(3, F(1, 2))), 2)) != {
        casimir_exponent(a2, DominantWeight((2, 0))),
        casimir_exponent(a2, DominantWeight((0, 1))),
    }:
        failures.append("d=3 n=2 distinct moduli")
    ok = not failures
    record(4, f"eigenvalue moduli of kappa(u^n) = |mu|^casimir with multiplicities (d=2 n=2,3; d=3 n=2) {failures}", ok)
    assert ok, failures


def test_criterion_05_positivity_sweep():
    start = time.perf_counter()
    total, bad = 0, []
    for t in all_types():
        count, smallest, violations = positivity_sweep(root_datum(t), 10)
        total += count
        bad.extend(f"{t}{v}" for v in violations)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    record(5, f"(l, l+2rho) > 0 on {total} nonzero weights, types A-D rank <= 8, height <= 10 ({elapsed:.1f}s)", ok)
    assert ok, bad


def test_criterion_06_phase_criterion():
    mismatches = []
    checked = 0
    for t in all_types():
        rd = root_datum(t)
        for lam in enumerate_dominant(t.rank, 10):
            checked += 1
            if pp_is_phase(kappa_modulus(rd, lam)) != lam.is_zero():
                mismatches.append(f"{t}{lam}")
    ok = not mismatches
    record(6, f"kappa modulus is a phase exactly at the zero weight ({checked} weights, |mu| != 1)", ok)
    assert ok, mismatches[:10]


def test_criterion_07_mu_sign_invariance():
    results = [mu_sign_spectrum_check(HeckeParams(3, mu), n) for n in (2, 3) for mu in (F(1, 2), F(2))]
    worst = max(r["max_defect"] for r in results)
    ok = all(r["passed"] for r in results)
    record(7, f"spectra of eta_mu and eta_-mu on G_(n-1)^-1...G_1^-1 agree, d=3, n in {{2,3}} (max defect {worst:.2g})", ok)
    assert ok


def test_criterion_08_temperley_lieb():
    failures = []
    for mu in (F(1, 2), F(-1, 2), F(2), F(-3)):
        p = TLParams(mu)
        for n in range(2, 6):
            failures += [f"mu={mu}: {c.name}" for c in tl_relations(p, n) if not (c.passed and c.exact)]
        out = embed_into_sud2(p)
        failures += [f"mu={mu}: {c.name}" for c in out["checks"] if not (c.passed and c.exact)]
        expected_sign = -1 if mu > 0 else 1
        if out["sign"] != expected_sign or p.sign != expected_sign:
            failures.append(f"mu={mu}: sign {out['sign']}")
    dims = [tl_algebra_dimension(n) for n in range(6)]
    if dims != [1, 1, 2, 5, 14, 42]:
        failures.append(f"dimensions {dims}")
    ok = not failures
    record(8, f"TL relations with delta^-2, Catalan dimensions n <= 5, sign rule -sign(mu), homomorphism to d=2 image {failures}", ok)
    assert ok, failures


def test_criterion_09_kw_twist():
    failures = []
    for d in (2, 3):
        for mu in (F(1, 2), F(2)):
            p = HeckeParams(d, mu)
            for k in range(d):
                spec = TwistSpec(p, k)
                tau = category_twist(spec)
                if tau != tau_closed_form(spec):
                    failures.append(f"tau d={d} mu={mu} w={k}")
                failures += [f"d={d} mu={mu} w={k}: {c.name}" for c in verify_prop72(spec) if not c.passed]
                label = classify_sl_d(tau, p.q, d)["label"]
                real = k == 0 or (d == 2 and k == 1)
                want = LABEL_PLUS if k == 0 else (LABEL_MINUS if real and d % 2 == 0 else LABEL_UNDETERMINED)
                if label != want:
                    failures.append(f"label d={d} w={k}: {label}")
            if block_braid_eigenvalue(p) != mu ** (d * (d - 1)):
                failures.append(f"block eigenvalue d={d} mu={mu}")
    ok = not failures
    record(9, f"tau = w mu^(d-1) for all w, twisted identities, block eigenvalue mu^(d(d-1)), labels by sign {failures}", ok)
    assert ok, failures


def test_criterion_10_obstruction_witness():
    values = {}
    for d in (2, 3):
        for mu in (F(1), F(1, 2), F(2)):
            values[(d, mu)] = defect_51(BraidingSpec(HeckeParams(d, mu), 0, "floating"))
    ok = all(v <= TOL if mu == 1 else v > 1e-3 for (d, mu), v in values.items())
    text = ", ".join(f"d={d} mu={mu}: {v:.4g}" for (d, mu), v in values.items())
    record(10, f"defect_51 vanishes at mu=1 and exceeds 1e-3 at mu in {{1/2,2}} ({text})", ok)
    assert ok


def _report_body(args) -> bytes:
    proc = subprocess.run([sys.executable, "-m", "qrigid", "report", *args], capture_output=True, check=False)
    lines = [line for line in proc.stdout.splitlines(keepends=True) if b'"timestamp"' not in line]
    return b"".join(lines)


def test_criterion_11_report_determinism():
    args = ["--type", "A", "--rank", "2", "--mu", "1/8", "--max-height", "4", "--max-power", "3"]
    first, second = _report_body(args), _report_body(args)
    parallel = _report_body(args + ["--jobs", "3"])
    ok = first == second == parallel and len(first) > 0
    record(11, f"two report runs with identical config give byte-identical bodies ({len(first)} bytes, also with 3 workers)", ok)
    assert ok
