"""Command-line interface: ``dschur <subcommand> [flags]``.

Exit status is 0 on success, 1 when a verification suite fails and 2 for
malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from typing import Any, TextIO

from .expand import (
    SchurExpansion,
    mn_derivative,
    mn_multiply,
    pieri_e_coeff,
    pieri_e_expansion,
    pieri_h_coeff,
    pieri_h_expansion,
    raising_expansion,
    skew_pieri_expansion,
)
from .partitions import Partition
from .polyring import Poly, factored_latex
from .symfunc import SkewShape, SuperContext, double_e, double_h, schur_double_jt
from .verify import SUITES, VerifyConfig, run_suite

__all__ = ["main", "build_parser", "parse_partition", "parse_shape"]


class UsageError(ValueError):
    """Malformed command-line input."""


def parse_partition(text: str) -> Partition:
    """``"8,3,1"``; a comma-free string of digits such as ``"22"`` is read digit by digit."""
    text = text.strip()
    if text in ("", "0", "()", "-"):
        return Partition()
    try:
        if "," in text:
            parts = [int(p) for p in text.split(",") if p.strip() != ""]
        elif text.isdigit():
            parts = [int(ch) for ch in text]
        else:
            raise ValueError(text)
        return Partition(parts)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"malformed partition {text!r}: {exc}") from None


def parse_shape(text: str) -> SkewShape:
    """``"outer"`` or ``"outer/inner"``."""
    outer, _, inner = text.partition("/")
    try:
        return SkewShape(parse_partition(outer), parse_partition(inner))
    except UsageError:
        raise
    except ValueError as exc:
        raise UsageError(f"malformed shape {text!r}: {exc}") from None


# -- rendering --------------------------------------------------------------------


def _emit_poly(p: Poly, fmt: str, out: TextIO, factor: bool = False) -> None:
    if fmt == "json":
        out.write(json.dumps(p.to_json(), sort_keys=True) + "\n")
    elif fmt == "latex":
        out.write((factored_latex(p) if factor else p.latex()) + "\n")
    else:
        out.write(str(p) + "\n")


def _emit_expansion(e: SchurExpansion, fmt: str, out: TextIO) -> None:
    if fmt == "json":
        out.write(json.dumps(e.to_json(), sort_keys=True) + "\n")
    elif fmt == "latex":
        out.write(e.latex() + "\n")
    else:
        out.write(str(e) + "\n")


def _skew_label(outer: Partition, inner: Partition, fmt: str) -> str:
    if fmt == "latex":
        return f"s_{{{outer}/{inner}}}" if inner else f"s_{{{outer}}}"
    return f"s[{outer}/{inner}]" if inner else f"s[{outer}]"


# -- subcommands ---------------------------------------------------------------------


def _ctx(args: argparse.Namespace) -> SuperContext:
    if args.vars is not None and args.vars < 0:
        raise UsageError("--vars must be non-negative")
    return SuperContext(args.vars)


def _need(args: argparse.Namespace, *names: str) -> None:
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"--{n.replace('_', '-')} is required for {args.command}")


def cmd_expand(args: argparse.Namespace, out: TextIO) -> int:
    _need(args, "k")
    if args.k < 0:
        raise UsageError("--k must be non-negative")
    fn = double_h if args.command == "expand-h" else double_e
    _emit_poly(fn(args.k, _ctx(args), args.shift), args.format, out)
    return 0


def cmd_schur(args: argparse.Namespace, out: TextIO) -> int:
    _need(args, "shape")
    shape = parse_shape(args.shape)
    try:
        value = schur_double_jt(shape, _ctx(args), args.basis, args.ell)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit_poly(value, args.format, out, factor=True)
    return 0


def cmd_mn(args: argparse.Namespace, out: TextIO) -> int:
    _need(args, "partition", "k")
    if args.k < 1:
        raise UsageError("--k must be positive")
    lam = parse_partition(args.partition)
    fn = mn_multiply if args.direction == "multiply" else mn_derivative
    _emit_expansion(fn(lam, args.k), args.format, out)
    return 0


def cmd_pieri(args: argparse.Namespace, out: TextIO) -> int:
    _need(args, "partition", "k")
    if args.k < 0:
        raise UsageError("--k must be non-negative")
    mu = parse_partition(args.partition)
    try:
        if args.shape is not None:
            lam = parse_partition(args.shape)
            if args.kind == "h":
                c = pieri_h_coeff(mu, lam, args.k, args.ell, args.method)
            else:
                c = pieri_e_coeff(mu, lam, args.k, args.ell)
            _emit_poly(c, args.format, out)
            return 0
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    exp = pieri_h_expansion(mu, args.k) if args.kind == "h" else pieri_e_expansion(mu, args.k)
    _emit_expansion(exp, args.format, out)
    return 0


def cmd_skew_pieri(args: argparse.Namespace, out: TextIO) -> int:
    _need(args, "partition", "k")
    if args.k < 0:
        raise UsageError("--k must be non-negative")
    mu = parse_partition(args.partition)
    nu = parse_partition(args.inner or "")
    if not mu.contains(nu):
        raise UsageError(f"--inner {nu} is not contained in --partition {mu}")
    terms = skew_pieri_expansion(mu, nu, args.k, args.kind)
    order = sorted(terms, key=lambda t: (-t[0].size, [-p for p in t[0]], t[1].size, [-p for p in t[1]]))
    if args.format == "json":
        data = {
            "terms": [
                {"outer": list(lam), "inner": list(eta), "coeff": terms[(lam, eta)].to_json()}
                for lam, eta in order
            ]
        }
        out.write(json.dumps(data, sort_keys=True) + "\n")
        return 0
    pieces = []
    for lam, eta in order:
        c = terms[(lam, eta)]
        label = _skew_label(lam, eta, args.format)
        coeff = c.latex() if args.format == "latex" else str(c)
        if c == 1:
            pieces.append(("+", label))
        elif c == -1:
            pieces.append(("-", label))
        else:
            pieces.append(("+", f"({coeff}) {label}"))
    text = " ".join(f"{sign} {body}" for sign, body in pieces)
    text = text[2:] if text.startswith("+ ") else text
    out.write((text or "0") + "\n")
    return 0


def cmd_raising(args: argparse.Namespace, out: TextIO) -> int:
    _need(args, "partition")
    words = raising_expansion(parse_partition(args.partition))
    if args.format == "json":
        data = {"words": [{"coeff": w.coeff.to_json(), "factors": [list(f) for f in w.factors]} for w in words]}
        out.write(json.dumps(data, sort_keys=True) + "\n")
    elif args.format == "latex":
        pieces = []
        for w in words:
            body = " ".join(f"h_{{{k}}}(\\sigma^{{{s}}}\\alpha)" for k, s in w.factors) or "1"
            c = w.coeff.as_int()
            pieces.append(("- " if c < 0 else "+ ") + (f"{abs(c)} " if abs(c) != 1 else "") + body)
        text = " ".join(pieces)
        out.write((text[2:] if text.startswith("+ ") else text) + "\n")
    else:
        out.write(" + ".join(str(w) for w in words).replace("+ -", "- ") + "\n")
    return 0


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    names = list(SUITES) if args.suite in (None, "all") else args.suite.split(",")
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {', '.join(unknown)}; choose from all, {', '.join(SUITES)}")
    if args.max_size is not None and args.max_size < 0:
        raise UsageError("--max-size must be non-negative")
    cfg = VerifyConfig(
        max_size=args.max_size,
        order=args.order,
        window=args.window,
        seed=args.seed,
    )
    failed = False
    results = []
    for name in names:
        r = run_suite(name, cfg)
        results.append(r)
        failed |= not r.passed
        if args.format != "json":
            out.write(r.summary() + "\n")
            if not r.passed:
                out.write(r.details() + "\n")
            out.flush()
    if args.format == "json":
        data = [
            {
                "suite": r.name,
                "passed": r.passed,
                "cases": r.cases,
                "counterexample": None
                if r.counterexample is None
                else {
                    "label": r.counterexample.label,
                    "lhs": str(r.counterexample.lhs),
                    "rhs": str(r.counterexample.rhs),
                },
            }
            for r in results
        ]
        out.write(json.dumps(data, sort_keys=True) + "\n")
    return 1 if failed else 0


COMMANDS = {
    "expand-h": cmd_expand,
    "expand-e": cmd_expand,
    "schur": cmd_schur,
    "mn": cmd_mn,
    "pieri": cmd_pieri,
    "skew-pieri": cmd_skew_pieri,
    "raising": cmd_raising,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dschur",
        description="Double supersymmetric and double Schur functions: expansions and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="subcommand")

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json", "latex"), default="text")

    helps = {
        "expand-h": "double complete function h_k(x/y || s^shift a)",
        "expand-e": "double elementary function e_k(x/y || s^shift a)",
        "schur": "double (skew) Schur function by Jacobi-Trudi",
        "mn": "Murnaghan-Nakayama: p_k s_lambda or k ds_lambda/dp_k",
        "pieri": "Pieri coefficients or expansion of h_k s_mu (or e_k s_mu)",
        "skew-pieri": "skew Pieri expansion of h_k s_mu/nu (or (-1)^k e_k s_mu/nu)",
        "raising": "raising-operator expansion of s_lambda in shifted h",
        "verify": "run identity suites",
    }
    subs = {name: sub.add_parser(name, help=h, description=h) for name, h in helps.items()}
    for name, p in subs.items():
        common(p)
    for name in ("expand-h", "expand-e"):
        subs[name].add_argument("--k", type=int)
        subs[name].add_argument("--vars", type=int, help="number of x/y pairs (omit for the generic ring)")
        subs[name].add_argument("--shift", type=int, default=0)
    p = subs["schur"]
    p.add_argument("--shape", help="outer or outer/inner, e.g. 22/1 or 4,3/1")
    p.add_argument("--vars", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--basis", choices=("h", "e"), default="h")
    p = subs["mn"]
    p.add_argument("--partition")
    p.add_argument("--k", type=int)
    p.add_argument("--direction", choices=("multiply", "derivative"), default="multiply")
    p = subs["pieri"]
    p.add_argument("--partition", help="mu")
    p.add_argument("--shape", help="lambda; prints the single coefficient")
    p.add_argument("--k", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--kind", choices=("h", "e"), default="h")
    p.add_argument("--method", choices=("closed", "residue"), default="closed")
    p = subs["skew-pieri"]
    p.add_argument("--partition", help="mu")
    p.add_argument("--inner", help="nu")
    p.add_argument("--k", type=int)
    p.add_argument("--kind", choices=("h", "e"), default="h")
    p = subs["raising"]
    p.add_argument("--partition")
    p = subs["verify"]
    p.add_argument("--suite", default="all", help="all, or a comma-separated list of suite names")
    p.add_argument("--max-size", type=int)
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--window", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        sub = parser._subparsers._group_actions[0].choices[args.command]  # type: ignore[union-attr]
        sub.print_usage(sys.stderr)
        print(f"dschur {args.command}: error: {exc}", file=sys.stderr)
        return 2


def run(argv: Sequence[str] | None = None) -> Any:
    sys.exit(main(argv))


if __name__ == "__main__":
    run()
