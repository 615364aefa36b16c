"""Command-line front end: spinor, verify, dispersion, report."""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import dirac, majorana, maxwell, weinberg
from .algebra import BASES, CHIRAL_TO_STANDARD, TOL_ENV, FourMomentum, default_tol
from .report import VerificationReport, _encode, report_from_dict
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMATS = ("json", "csv", "text")


@dataclass(frozen=True)
class RunConfig:
    command: str
    momentum: tuple = (0.0, 0.0, 0.0)
    mass: float | None = None
    basis: str = "standard"
    tolerance: float = 1e-10
    seed: int = 7
    samples: int | None = None
    fmt: str = "json"

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.samples is not None and self.samples < 1:
            raise ValueError("sample count must be at least 1")


class UsageError(Exception):
    pass


def _vec3(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected px,py,pz, got {text!r}")
    try:
        return tuple(float(x) for x in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-numeric momentum {text!r}") from None


def _fraction(text: str) -> float:
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _emit(payload: dict, fmt: str, text: str) -> str:
    if fmt == "json":
        return json.dumps(_encode(payload), indent=2, sort_keys=True)
    if fmt == "csv":
        raise UsageError("csv output is only available for reports")
    return text


# -- spinor ------------------------------------------------------------------------


def _spinor_payload(args) -> tuple[dict, str]:
    p = FourMomentum(args.m, *args.p)
    kind = args.kind
    if kind in ("u", "v"):
        sigma = 0.5 if args.sigma is None else args.sigma
        if sigma not in dirac.SIGMAS:
            raise UsageError("--sigma must be +1/2 or -1/2 for u and v")
        if args.basis == "helicity" and p.norm == 0:
            raise UsageError("the helicity basis needs |p| > 0")
        comps = dirac.spinor_components(kind, p.vec, p.m, sigma, args.basis)
        ref = dirac.reference_components(kind, p, sigma) if args.basis == "standard" else None
        if args.basis == "chiral":
            ref = CHIRAL_TO_STANDARD.conj().T @ dirac.reference_components(kind, p, sigma)
        label = f"{kind}(sigma={Fraction(sigma)}, basis={args.basis})"
    elif kind in ("lambda", "rho"):
        if args.conj_class is None or args.eta is None:
            raise UsageError("--class and --eta are required for lambda and rho")
        comps = majorana.build_components(kind, args.conj_class, args.eta, p.vec, p.m)
        ref = majorana.printed_components(kind, args.conj_class, args.eta, p)
        label = f"{kind}^{args.conj_class}_{args.eta} (chiral basis)"
    else:
        sigma = 1 if args.sigma is None else args.sigma
        if sigma not in (1.0, 0.0, -1.0):
            raise UsageError("--sigma must be 1, 0 or -1 for u1 and v1")
        sigma = int(sigma)
        ctor = weinberg.u1_spinor if kind == "u1" else weinberg.v1_spinor
        comps = ctor(p, sigma).components
        ref = weinberg.printed_u1(p, sigma)
        if kind == "v1":
            ref = weinberg.GAMMA5_STANDARD @ ref
        label = f"{kind}(sigma={sigma}, standard form)"
    diff = None if ref is None else float(np.max(np.abs(comps - ref)))
    payload = {"label": label, "momentum": [float(x) for x in p.four], "mass": p.m, "components": comps,
               "reference": ref, "max_diff": diff}
    lines = [label, f"p = {tuple(float(x) for x in p.four)}"]
    for i, c in enumerate(comps):
        r = "" if ref is None else f"   reference {complex(ref[i]):.12g}"
        lines.append(f"  [{i}] {complex(c):.12g}{r}")
    if diff is not None:
        lines.append(f"max |computed - reference| = {diff:.3e}")
    return payload, "\n".join(lines)


def cmd_spinor(args) -> int:
    payload, text = _spinor_payload(args)
    print(_emit(payload, args.format, text))
    return EXIT_OK


# -- verify ------------------------------------------------------------------------


def _tol(args) -> float:
    tol = args.tol if args.tol is not None else default_tol()
    if not tol > 0:
        raise UsageError("--tol must be positive")
    return tol


def render(rep: VerificationReport, fmt: str, timing: bool = False) -> str:
    if fmt == "json":
        return rep.to_json(timing)
    if fmt == "csv":
        return rep.to_csv().rstrip("\n")
    return rep.to_text()


def cmd_verify(args) -> int:
    cfg = RunConfig("verify", tolerance=_tol(args), seed=args.seed, samples=args.samples, fmt=args.format)
    rep = run_suite(args.suite, cfg.seed, cfg.samples, cfg.tolerance)
    out = render(rep, cfg.fmt, args.timing)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return EXIT_OK if rep.passed else EXIT_FAIL


# -- dispersion ----------------------------------------------------------------------


def cmd_dispersion(args) -> int:
    p = args.p
    if args.model == "maxwell":
        roots = []
        for sign in (1, -1):
            poly = maxwell.rs_characteristic(p, sign)
            kn = float(np.linalg.norm(p))
            for r in maxwell.rs_roots(p, sign):
                kind = "acausal" if abs(r) <= 1e-12 * max(kn, 1.0) else "relativistic"
                roots.append({"sign": sign, "energy": r, "multiplicity": 1, "kind": kind})
        payload = {"model": "maxwell", "p": p, "degree": poly.degree(), "roots": roots}
        text = [f"Det[E -+ S.p], p = {p}"] + [
            f"  sign {r['sign']:+d}: E = {r['energy']:+.12g}  ({r['kind']})" for r in roots]
    elif args.model == "wth":
        if args.m is None:
            raise UsageError("--m is required for the wth model")
        spectrum = weinberg.dispersion_spectrum(args.A, args.B, p, args.m)
        roots = [{"energy": r.energy, "multiplicity": r.multiplicity, "kind": r.kind,
                  "E2_minus_p2": r.energy**2 - float(np.dot(p, p))} for r in spectrum.roots]
        payload = {"model": "wth", "A": args.A, "B": args.B, "p": p, "m": args.m, "degree": spectrum.degree,
                   "all_relativistic": spectrum.all_relativistic, "zero_root": spectrum.zero_root, "roots": roots}
        text = [f"Det[gamma_ab p_a p_b + A p.p + B m^2], A={args.A:g}, B={args.B:g}, p={p}, m={args.m:g}",
                f"  degree {spectrum.degree}"] + [
            f"  E = {complex(r['energy']):.10g}  x{r['multiplicity']}  E^2-p^2 = {complex(r['E2_minus_p2']):.10g}  ({r['kind']})"
            for r in roots]
    else:
        if args.m is None:
            raise UsageError("--m is required for the barut model")
        spectrum = dirac.barut_mass_spectrum(args.alpha, args.beta, args.m)
        roots = [{"mass": w, "branch": b, "det_residual": d}
                 for w, b, d in zip(spectrum.masses, spectrum.branches, spectrum.det_residuals)]
        payload = {"model": "barut", "alpha": args.alpha, "beta": args.beta, "m": args.m, "roots": roots,
                   "diagnostic": spectrum.diagnostic}
        text = [f"Det[g.p + alpha p^2/m - beta], alpha={args.alpha:g}, beta={args.beta:g}, m={args.m:g}"] + [
            f"  W = {r['mass']:.12g}  (branch {r['branch']:+d})" for r in roots]
        if spectrum.diagnostic:
            text.append(f"  {spectrum.diagnostic}")
    print(_emit(payload, args.format, "\n".join(text)))
    return EXIT_OK


# -- report ------------------------------------------------------------------------


def cmd_report(args) -> int:
    try:
        with open(args.file) as fh:
            data = json.load(fh)
        rep = report_from_dict(data)
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read report {args.file!r}: {exc}") from None
    print(render(rep, args.format, timing=rep.timing is not None))
    return EXIT_OK if rep.passed else EXIT_FAIL


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="spinorlab", description="Relativistic spinor identities and dispersion checks.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spinor", help="print spinor components next to closed-form references")
    sp.add_argument("--kind", required=True, choices=["u", "v", "lambda", "rho", "u1", "v1"])
    sp.add_argument("--sigma", type=_fraction, help="+1/2, -1/2 (u, v) or 1, 0, -1 (u1, v1)")
    sp.add_argument("--class", dest="conj_class", choices=["S", "A"])
    sp.add_argument("--eta", choices=["up", "down"])
    sp.add_argument("--p", type=_vec3, default=(0.0, 0.0, 0.0), help="px,py,pz")
    sp.add_argument("--m", type=float, required=True)
    sp.add_argument("--basis", choices=BASES, default="standard")
    sp.add_argument("--format", choices=("json", "text"), default="text")
    sp.set_defaults(func=cmd_spinor)

    vp = sub.add_parser("verify", help="run an identity suite")
    vp.add_argument("--suite", required=True, choices=SUITES + ("all",))
    vp.add_argument("--samples", type=int)
    vp.add_argument("--seed", type=int, default=7)
    vp.add_argument("--tol", type=float, help=f"tolerance (default from {TOL_ENV} or 1e-10)")
    vp.add_argument("--format", choices=FORMATS, default="json")
    vp.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identical output)")
    vp.add_argument("--output", help="write the report to a file")
    vp.set_defaults(func=cmd_verify)

    dp = sub.add_parser("dispersion", help="root table of a wave-operator determinant")
    dp.add_argument("--model", required=True, choices=["wth", "barut", "maxwell"])
    dp.add_argument("--A", type=float, default=1.0)
    dp.add_argument("--B", type=float, default=2.0)
    dp.add_argument("--alpha", type=float, default=1.0)
    dp.add_argument("--beta", type=float, default=1.0)
    dp.add_argument("--p", type=_vec3, default=(0.0, 0.0, 1.0))
    dp.add_argument("--m", type=float)
    dp.add_argument("--format", choices=("json", "text"), default="text")
    dp.set_defaults(func=cmd_dispersion)

    rp = sub.add_parser("report", help="re-render a saved JSON report")
    rp.add_argument("file")
    rp.add_argument("--format", choices=FORMATS, default="text")
    rp.set_defaults(func=cmd_report)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"spinorlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        if os.environ.get("SPINORLAB_DEBUG"):
            raise
        print(f"spinorlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
