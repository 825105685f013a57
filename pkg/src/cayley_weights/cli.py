"""Command-line front end.

Commands::

    dims           conical complex and Cayley deformation dimensions
    weights        exceptional weights with multiplicities in a window
    eta            eta(0), d(0) and the index correction (d(0) + eta(0))/2
    index          expected index at a rate in (1, 2)
    genus          genus of a complete-intersection curve in CP^3
    spectrum       spectrum of 2 dbar^* dbar on a line bundle over CP^1
    verify-frames  check the structure equations of the twisted-cubic link
    profile        emit a builtin profile as TOML

Cone-based commands take ``--builtin c1|c2|c3`` or ``--profile PATH`` (TOML,
grammar in :mod:`cayley_weights.profiles`).  Rationals are passed and printed
as ``"p/q"`` strings.  ``--json`` switches to a machine-readable report that
contains exact strings only.

Exit status: 0 on success, 1 when the mathematics rejects the request
(non-Fredholm rate, indeterminate h0, unsupported profile), 2 on usage or
parse errors.  ``CAYLEY_WEIGHTS_QMAX`` caps spectral scans (default 64).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .deformations import DegenerateCoupling, conical_cayley_dimension
from .eta import IndexQuery, NonFredholmRate, RegularizationError, eta_report, expected_index, weight_sum
from .exact import QuadraticWeight, format_rational, parse_rational
from .frames import verify_structure_equations
from .profiles import BUILTINS, ConeProfile, ProfileError, UnsupportedProfile, builtin, load_profile
from .riemann_roch import IndeterminateError, genus_complete_intersection
from .spectrum import NegativeEigenvalue, SpectrumQuery, eigenvalue_membership, enumerate_spectrum
from .weights import DEFAULT_Q_CAP, enumerate_weights

EXIT_OK, EXIT_REJECTED, EXIT_USAGE = 0, 1, 2
QMAX_ENV = "CAYLEY_WEIGHTS_QMAX"

MATH_REJECTIONS = (
    NonFredholmRate,
    IndeterminateError,
    UnsupportedProfile,
    RegularizationError,
    DegenerateCoupling,
    NegativeEigenvalue,
    ArithmeticError,
)


class UsageError(Exception):
    pass


@dataclass
class Report:
    command: str
    arguments: dict
    input_digest: str
    result: dict
    witnesses: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "arguments": self.arguments,
            "input_digest": self.input_digest,
            "result": self.result,
            "witnesses": self.witnesses,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        data = json.loads(text)
        return cls(data["command"], data["arguments"], data["input_digest"], data["result"], data["witnesses"])


def _digest(arguments: dict, profile: ConeProfile | None) -> str:
    h = hashlib.sha256(json.dumps(arguments, sort_keys=True).encode())
    if profile is not None:
        h.update(profile.to_toml().encode())
    return "sha256:" + h.hexdigest()


def weight_to_json(w: QuadraticWeight):
    return format_rational(w.to_rational()) if w.is_rational() else w.to_json()


def _q_cap() -> int:
    raw = os.environ.get(QMAX_ENV)
    if raw is None:
        return DEFAULT_Q_CAP
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{QMAX_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise UsageError(f"{QMAX_ENV} must be nonnegative")
    return value


def _rational(text: str, flag: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _profile(args) -> ConeProfile:
    if args.builtin:
        return builtin(args.builtin)
    if args.profile:
        return load_profile(args.profile)
    raise UsageError("pass --builtin NAME or --profile PATH")


# ---- commands; each returns (Report, plain-text lines) ---------------------


def cmd_dims(args):
    profile = _profile(args)
    rep = conical_cayley_dimension(profile)
    arguments = {"profile": profile.name}
    result = {
        "profile": profile.name,
        "complex_dim": rep.complex_dim,
        "cayley_dim": rep.cayley_dim,
        "extra_modes": [
            {"mode": format_rational(e.mode), "count": e.count, "mechanism": e.mechanism}
            for e in rep.extra_modes
        ],
        "assumptions": list(rep.assumptions),
    }
    text = [f"{profile.name}: conical Cayley: {rep.cayley_dim}, conical complex: {rep.complex_dim}"]
    for e in rep.extra_modes:
        text.append(f"  extra mode m={format_rational(e.mode)}: {e.count} ({e.mechanism})")
    for a in rep.assumptions:
        text.append(f"  assumes: {a}")
    return Report("dims", arguments, _digest(arguments, profile), result), text


def cmd_weights(args):
    profile = _profile(args)
    lo, hi = _rational(args.min, "--min"), _rational(args.max, "--max")
    if lo > hi:
        raise UsageError(f"empty window: --min {args.min} exceeds --max {args.max}")
    entries = enumerate_weights(profile, lo, hi, q_cap=_q_cap())
    arguments = {"profile": profile.name, "min": format_rational(lo), "max": format_rational(hi)}
    weights, witnesses, text = [], [], []
    for e in entries:
        wj = weight_to_json(e.weight)
        by_kind = e.by_kind()
        weights.append({"weight": wj, "multiplicity": e.multiplicity, "by_kind": by_kind})
        for w in e.witnesses:
            witnesses.append(
                {
                    "weight": wj,
                    "mode": format_rational(w.mode),
                    "index": w.index,
                    "kind": w.kind,
                    "summand": w.summand,
                    "count": w.count,
                    "target": None if w.target is None else format_rational(w.target),
                }
            )
        parts = ", ".join(f"{k} {v}" for k, v in sorted(by_kind.items()))
        text.append(f"{e.weight}: d = {e.multiplicity} ({parts})")
    if not entries:
        text.append("no exceptional weights in the window")
    result = {"profile": profile.name, "weights": weights}
    return Report("weights", arguments, _digest(arguments, profile), result, witnesses), text


def cmd_eta(args):
    profile = _profile(args)
    rep = eta_report(profile, args.degree_bound, args.k0, q_cap=_q_cap())
    arguments = {"profile": profile.name, "k0": args.k0, "degree_bound": args.degree_bound}
    result = {
        "profile": profile.name,
        "eta0": format_rational(rep.eta),
        "d0": rep.d0,
        "correction": format_rational(rep.correction),
        "k0": rep.fit.k0,
        "tail_positive": [format_rational(c) for c in rep.fit.tail_positive],
        "tail_negative": [format_rational(c) for c in rep.fit.tail_negative],
        "head": [[w, d] for w, d in rep.fit.head],
    }
    text = [
        f"{profile.name}: eta(0) = {format_rational(rep.eta)}, d(0) = {rep.d0}, "
        f"(d(0)+eta(0))/2 = {format_rational(rep.correction)}"
    ]
    return Report("eta", arguments, _digest(arguments, profile), result), text


def cmd_index(args):
    profile = _profile(args)
    rate = _rational(args.rate, "--rate")
    query = IndexQuery(args.chi, rate, profile)
    value = expected_index(query, q_cap=_q_cap())
    correction = eta_report(profile, q_cap=_q_cap()).correction
    mid = weight_sum(profile, 0, rate, q_cap=_q_cap())
    arguments = {"profile": profile.name, "chi": args.chi, "rate": format_rational(rate)}
    result = {
        "profile": profile.name,
        "chi": args.chi,
        "rate": format_rational(rate),
        "weight_sum": mid,
        "correction": format_rational(correction),
        "index": format_rational(value),
    }
    text = [
        f"{profile.name}: ind = {args.chi} - {mid} - {format_rational(correction)} = {format_rational(value)}"
        f" at rate {format_rational(rate)}"
    ]
    return Report("index", arguments, _digest(arguments, profile), result), text


def cmd_genus(args):
    try:
        d1, d2 = (int(x) for x in args.degrees.split(","))
    except ValueError:
        raise UsageError(f"--degrees expects d1,d2, got {args.degrees!r}") from None
    g = genus_complete_intersection(d1, d2)
    arguments = {"degrees": [d1, d2]}
    text = [f"genus of the ({d1},{d2}) complete intersection: {g}"]
    return Report("genus", arguments, _digest(arguments, None), {"genus": g}), text


def cmd_spectrum(args):
    kappa = _rational(args.kappa, "--kappa")
    if kappa <= 0:
        raise UsageError("--kappa must be positive")
    if args.qmax < 0:
        raise UsageError("--qmax must be nonnegative")
    query = SpectrumQuery(args.degree, kappa)
    lines = enumerate_spectrum(query, min(args.qmax, _q_cap()))
    arguments = {"degree": args.degree, "kappa": format_rational(kappa), "qmax": args.qmax}
    result = {
        "lines": [
            {"q": l.q, "shift": l.shift, "eigenvalue": format_rational(l.eigenvalue), "multiplicity": l.multiplicity}
            for l in lines
        ]
    }
    text = [f"q={l.q} a={l.shift}: {format_rational(l.eigenvalue)} x {l.multiplicity}" for l in lines]
    if args.target is not None:
        target = _rational(args.target, "--target")
        hit = eigenvalue_membership(query, target)
        arguments["target"] = format_rational(target)
        result["membership"] = None if hit is None else {"q": hit.q, "shift": hit.shift, "multiplicity": hit.multiplicity}
        text.append(f"target {format_rational(target)}: " + ("not in spectrum" if hit is None else f"q={hit.q}, multiplicity {hit.multiplicity}"))
    return Report("spectrum", arguments, _digest(arguments, None), result), text


def cmd_verify_frames(args):
    v = verify_structure_equations()
    equations, text = [], []
    for c in v.checks:
        entry = {"name": c.name, "equation": c.equation, "status": "PASS" if c.passed else "FAIL"}
        if not c.passed:
            entry["residual"] = [{"row": i, "col": j, "form": repr(f)} for i, j, f in c.offending()]
        equations.append(entry)
        text.append(f"{c.name}: {entry['status']}  ({c.equation})")
    extras = {
        "d_squared_zero": not any(v.d_squared),
        "jacobi": not v.jacobi_defect,
        "beta_constraints": not any(v.constraints),
        "h_traceless": not any(v.traces.values()),
    }
    for k, ok in extras.items():
        text.append(f"{k}: {'PASS' if ok else 'FAIL'}")
    result = {"equations": equations, "checks": {k: "PASS" if ok else "FAIL" for k, ok in extras.items()}}
    result["status"] = "PASS" if v.passed else "FAIL"
    return Report("verify-frames", {}, _digest({}, None), result), text


def cmd_profile(args):
    return None, [builtin(args.emit).to_toml().rstrip("\n")]


# ---- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayley-weights",
        description="Exact exceptional weights, eta invariants and conical deformation counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit an exact JSON report")

    cone = argparse.ArgumentParser(add_help=False)
    src = cone.add_mutually_exclusive_group()
    src.add_argument("--builtin", metavar="NAME", help=f"one of {', '.join(sorted(BUILTINS))}")
    src.add_argument("--profile", metavar="PATH", help="TOML profile file")

    p = sub.add_parser("dims", parents=[common, cone], help="conical deformation dimensions")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("weights", parents=[common, cone], help="exceptional weights in [min, max]")
    p.add_argument("--min", required=True)
    p.add_argument("--max", required=True)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("eta", parents=[common, cone], help="eta(0) and the index correction")
    p.add_argument("--k0", type=int, default=1)
    p.add_argument("--degree-bound", type=int, default=2)
    p.set_defaults(func=cmd_eta)

    p = sub.add_parser("index", parents=[common, cone], help="expected index at a rate")
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--rate", required=True)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("genus", parents=[common], help="genus of a complete intersection in CP^3")
    p.add_argument("--degrees", required=True, metavar="D1,D2")
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("spectrum", parents=[common], help="spectrum of 2 dbar^* dbar on CP^1")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--kappa", required=True, metavar="P/Q")
    p.add_argument("--qmax", type=int, default=5)
    p.add_argument("--target", metavar="P/Q", help="also test this eigenvalue for membership")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify-frames", parents=[common], help="structure equations of the L3 frame")
    p.set_defaults(func=cmd_verify_frames)

    p = sub.add_parser("profile", help="emit a builtin profile")
    p.add_argument("--emit", required=True, metavar="NAME")
    p.set_defaults(func=cmd_profile, json=False)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, text = args.func(args)
    except (UsageError, ProfileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MATH_REJECTIONS as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json and report is not None:
        print(report.to_json())
    else:
        print("\n".join(text))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
