"""Command-line entry point: ``qrigid <subcommand> [flags]``.

Exit codes: 0 pass, 2 rigidity violation, 3 identity failure, 4 resource
limit, 5 configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .braiding_kappa import BraidingSpec, braiding_suite
from .errors import ConfigError, InvalidRankError, InvalidWeightError, QRigidError, ResourceError
from .hecke_rep import HeckeParams, verify_S_relations
from .kw_twist import kw_suite
from .lie_data import LieType
from .operators import DEFAULT_THRESHOLD
from .rigidity import (
    EXIT_CONFIG,
    EXIT_IDENTITY,
    EXIT_PASS,
    EXIT_RESOURCE,
    RunConfig,
    defect_51,
    kappa_table,
    mu_sign_spectrum_check,
    rigidity_report,
)
from .temperley_lieb import tl_suite


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", dest="series", default="A", choices=["A", "B", "C", "D"], help="Lie series")
    p.add_argument("--rank", type=int, default=1, help="rank r (type A uses d = r + 1)")
    p.add_argument("--mu", default="1/2", help="deformation parameter as P/Q (write --mu=-1/2 for negative values)")
    p.add_argument("--omega", type=int, default=0, help="index k of omega = d-th root of mu")
    p.add_argument("--max-height", type=int, default=3)
    p.add_argument("--max-power", type=int, default=3)
    p.add_argument("--backend", default="cyclotomic", choices=["rational", "cyclotomic", "floating"])
    p.add_argument("--format", dest="fmt", default="json", choices=["json", "csv", "text"])
    p.add_argument("--threshold", type=int, default=DEFAULT_THRESHOLD, help="largest dimension materialized")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the report")
    p.add_argument("--output", "-o", default=None, help="write to this file instead of stdout")


class _Parser(argparse.ArgumentParser):
    """Usage errors are configuration errors (exit 5), not argparse's 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: configuration error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qrigid", description="kappa invariant and rigidity checks for Rep(S_mu U(d))")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, helptext in [
        ("report", "full pipeline: weight sweep, identity suites, defect, spectrum"),
        ("kappa-table", "(lambda, lambda+2rho) and |kappa| per dominant weight"),
        ("defect51", "norm of sigma - sigma_d sandwiched between the conjugate maps"),
        ("spectrum-sign-check", "eigenvalues of the full-twist word at mu and -mu"),
    ]:
        _add_common(sub.add_parser(name, help=helptext))
    v = sub.add_parser("verify", help="run one identity suite")
    _add_common(v)
    v.add_argument("--suite", required=True, choices=["hecke", "braiding", "tl", "kw"])
    return parser


def _config(args) -> RunConfig:
    try:
        mu = Fraction(args.mu)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"--mu must be P/Q, got {args.mu!r}") from exc
    return RunConfig(
        LieType(args.series, args.rank),
        mu,
        omega_index=args.omega,
        max_height=args.max_height,
        max_power=args.max_power,
        backend=args.backend,
        threshold=args.threshold,
        jobs=args.jobs,
    )


def _require_a(cfg: RunConfig, what: str) -> int:
    if cfg.lie_type.series != "A":
        raise ConfigError(f"{what} is only defined for type A")
    return cfg.d


def _emit(text: str, args) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_checks(checks, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([c.as_dict() for c in checks], indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        lines = ["name,status,defect,exact"]
        lines += [f"\"{c.name}\",{'pass' if c.passed else 'fail'},{c.defect:.6g},{c.exact}" for c in checks]
        return "\n".join(lines) + "\n"
    return "".join(f"{'PASS' if c.passed else 'FAIL'}  {c.name}  (defect {c.defect:.3g})\n" for c in checks)


def _verify(cfg: RunConfig, suite: str):
    d = _require_a(cfg, "verify")
    p = HeckeParams(d, cfg.mu)
    if suite == "hecke":
        return verify_S_relations(p, cfg.threshold)
    if suite == "braiding":
        return braiding_suite(BraidingSpec(p, cfg.omega_index, cfg.backend), cfg.max_power, cfg.threshold)
    if suite == "tl":
        if d != 2:
            raise ConfigError("the Temperley-Lieb suite needs d = 2 (--type A --rank 1)")
        return tl_suite(cfg.mu, cfg.threshold)
    return kw_suite(p, cfg.threshold)[0]


def run(args) -> int:
    cfg = _config(args)
    if args.command == "report":
        report = rigidity_report(cfg)
        _emit(report.render(args.fmt), args)
        return report.exit_code
    if args.command == "kappa-table":
        rows = kappa_table(cfg)
        if args.fmt == "json":
            text = json.dumps(rows, indent=2, sort_keys=True) + "\n"
        elif args.fmt == "csv":
            text = "weight,casimir_exponent,kappa_modulus,kappa_modulus_value,is_phase\n" + "".join(
                f"\"{r['weight']}\",{r['casimir_exponent']},{r['kappa_modulus']},{r['kappa_modulus_value']},{r['is_phase']}\n" for r in rows
            )
        else:
            text = "".join(f"{r['weight']:>16}  {r['casimir_exponent']:>8}  {r['kappa_modulus']}  {r['kappa_modulus_value']}\n" for r in rows)
        _emit(text, args)
        return EXIT_PASS
    if args.command == "verify":
        checks = _verify(cfg, args.suite)
        _emit(_render_checks(checks, args.fmt), args)
        return EXIT_PASS if all(c.passed for c in checks) else EXIT_IDENTITY
    if args.command == "defect51":
        d = _require_a(cfg, "defect51")
        spec = BraidingSpec(HeckeParams(d, cfg.mu), cfg.omega_index, cfg.backend)
        value = defect_51(spec, cfg.threshold)
        out = {"d": d, "mu": args.mu, "omega": spec.omega_pp().render(), "defect_51": f"{value:.12g}"}
        _emit(json.dumps(out, sort_keys=True) + "\n" if args.fmt != "text" else f"defect_51 = {value:.12g}\n", args)
        return EXIT_PASS
    if args.command == "spectrum-sign-check":
        d = _require_a(cfg, "spectrum-sign-check")
        res = mu_sign_spectrum_check(HeckeParams(d, cfg.mu), min(cfg.max_power, d), cfg.threshold)
        if args.fmt == "text":
            text = f"n={res['n']}: {'agree' if res['passed'] else 'differ'} (max defect {res['max_defect']:.3g})\n"
        else:
            text = json.dumps(res, indent=2, sort_keys=True) + "\n"
        _emit(text, args)
        return EXIT_PASS if res["passed"] else EXIT_IDENTITY
    raise ConfigError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ConfigError, InvalidRankError, InvalidWeightError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except QRigidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IDENTITY
    except ValueError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
