"""Command-line surface: one subcommand per pipeline stage.

Exit codes: 0 success, 1 invalid parameters, 2 internal invariant violation.
All exact values are serialized without precision loss: rationals as "p/q"
strings, big integers as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional, Sequence

from .abelian import AbelianGroup, Character, DiagonalRepresentation, multiplicity
from .cyclic import CyclicType, minimal_generators
from .selfcheck import run_selfcheck
from .signature import RatioSeries, exact_signature, general_signature, ratio_series
from .syzygy import syzygy_weights

__all__ = ["main", "canonical_json"]


class CliError(ValueError):
    """Raised for anything the user can fix: bad flags, bad parameters."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit(2) here
        raise CliError(message)


def canonical_json(payload: object) -> str:
    """Canonical rendering: sorted keys, compact separators, ASCII only.
    Re-parsing and re-rendering any emitted document is byte-identical."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def _fraction_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _decimal_12(numerator: int, denominator: int) -> str:
    with localcontext() as ctx:
        ctx.prec = 12
        return str(Decimal(numerator) / Decimal(denominator))


def _series_payload(series: RatioSeries) -> list[dict]:
    return [
        {
            "N": e.bound,
            "numerator": str(e.numerator),
            "denominator": str(e.denominator),
            "ratio": _fraction_str(e.ratio),
        }
        for e in series.entries
    ]


def _series_csv(series: RatioSeries) -> str:
    lines = ["N,numerator,denominator,ratio_decimal"]
    for e in series.entries:
        lines.append(
            f"{e.bound},{e.numerator},{e.denominator},{_decimal_12(e.numerator, e.denominator)}"
        )
    return "\n".join(lines)


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise CliError(f"{what} must be a comma-separated list of integers, got {text!r}")


def _cyclic_type(args: argparse.Namespace) -> CyclicType:
    try:
        return CyclicType(args.n, args.a)
    except ValueError as exc:
        raise CliError(str(exc))


def _cyclic_chi(args: argparse.Namespace, n: int) -> int:
    chi = args.chi if args.chi is not None else 0
    if not 0 <= chi < n:
        raise CliError(f"chi must be a residue in [0, {n - 1}], got {chi}")
    return chi


def _grid(args: argparse.Namespace, n_max: int) -> Optional[list[int]]:
    if args.grid is None:
        return None
    grid = _parse_int_list(args.grid, "--grid")
    if any(not 0 <= g <= n_max for g in grid):
        raise CliError(f"grid values must lie in [0, {n_max}]")
    return grid


def _general_rep(args: argparse.Namespace) -> tuple[DiagonalRepresentation, Character]:
    if args.moduli is None or args.weights is None:
        raise CliError("general requires --moduli and --weights")
    moduli = _parse_int_list(args.moduli, "--moduli")
    try:
        group = AbelianGroup(tuple(moduli))
        weights = tuple(
            group.reduce(_parse_int_list(vec, "--weights entry"))
            for vec in args.weights.split(";")
        )
        rep = DiagonalRepresentation(group, weights)
        if args.chi_vector is not None:
            chi = group.reduce(_parse_int_list(args.chi_vector, "--chi"))
        else:
            chi = group.zero()
    except ValueError as exc:
        raise CliError(str(exc))
    return rep, chi


def _cmd_staircase(args: argparse.Namespace, out) -> None:
    t = _cyclic_type(args)
    gens = [[p.i, p.j] for p in minimal_generators(t).generators]
    out.write(canonical_json(gens) + "\n")


def _cmd_weights(args: argparse.Namespace, out) -> None:
    t = _cyclic_type(args)
    rep = syzygy_weights(t)
    payload = {
        "n": t.n,
        "a": t.a,
        "mu": rep.nu + 1,
        "nu": rep.nu,
        "weights": list(rep.weights),
        "faithful": rep.is_faithful(),
    }
    out.write(canonical_json(payload) + "\n")


def _cmd_multiplicity(args: argparse.Namespace, out) -> None:
    t = _cyclic_type(args)
    chi = _cyclic_chi(args, t.n)
    if args.q is None or args.q < 0:
        raise CliError("multiplicity requires a nonnegative --q")
    rep = syzygy_weights(t).as_diagonal_representation()
    value = multiplicity(rep, Character((chi,)), args.q)
    payload = {"n": t.n, "a": t.a, "chi": chi, "q": args.q, "multiplicity": str(value)}
    out.write(canonical_json(payload) + "\n")


def _cmd_series(args: argparse.Namespace, out) -> None:
    t = _cyclic_type(args)
    chi = _cyclic_chi(args, t.n)
    if args.n_max is None or args.n_max < 0:
        raise CliError("series requires a nonnegative --n-max")
    series = ratio_series(t, chi, args.n_max, _grid(args, args.n_max))
    if args.format == "csv":
        out.write(_series_csv(series) + "\n")
        return
    payload = {
        "n": t.n,
        "a": t.a,
        "chi": chi,
        "target": _fraction_str(series.target),
        "entries": _series_payload(series),
    }
    out.write(canonical_json(payload) + "\n")


def _cmd_signature(args: argparse.Namespace, out) -> None:
    t = _cyclic_type(args)
    chi = _cyclic_chi(args, t.n)
    value = exact_signature(t, chi)
    rep = syzygy_weights(t)
    payload = {
        "n": t.n,
        "a": t.a,
        "chi": chi,
        "mu": rep.nu + 1,
        "nu": rep.nu,
        "index": str(value.denominator),
        "signature": _fraction_str(value),
    }
    out.write(canonical_json(payload) + "\n")


def _cmd_general(args: argparse.Namespace, out) -> None:
    rep, chi = _general_rep(args)
    n_max = args.n_max if args.n_max is not None else 0
    if n_max < 0:
        raise CliError("--n-max must be nonnegative")
    try:
        value, series = general_signature(rep, chi, n_max, _grid(args, n_max))
    except ValueError as exc:
        raise CliError(str(exc))
    payload = {
        "moduli": list(rep.group.moduli),
        "weights": [list(w.components) for w in rep.weights],
        "chi": list(chi.components),
        "order": str(rep.group.order),
        "signature": _fraction_str(value),
        "entries": _series_payload(series),
    }
    out.write(canonical_json(payload) + "\n")


def _cmd_verify(args: argparse.Namespace, out) -> None:
    n_max = args.n_max if args.n_max is not None else 12
    if n_max < 2:
        raise CliError("--n-max must be at least 2")
    if not run_selfcheck(n_max, emit=lambda line: out.write(line + "\n")):
        raise RuntimeError("cross-verification failed")


_CYCLIC_COMMANDS = {
    "staircase": _cmd_staircase,
    "weights": _cmd_weights,
    "multiplicity": _cmd_multiplicity,
    "series": _cmd_series,
    "signature": _cmd_signature,
    "general": _cmd_general,
    "verify": _cmd_verify,
}


def _build_parser() -> _Parser:
    parser = _Parser(prog="symsig", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("staircase", "minimal invariant monomial generators of type 1/n(1,a)"),
        ("weights", "syzygy representation weights"),
        ("multiplicity", "character multiplicity in one symmetric power"),
        ("series", "partial-sum ratio series"),
        ("signature", "exact symmetric signature 1/n"),
        ("general", "exact signature of a faithful diagonal representation"),
        ("verify", "run the oracle cross-check grid"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--n", type=int, help="group order")
        p.add_argument("--a", type=int, help="action exponent, coprime to n")
        if name == "general":
            p.add_argument("--chi", dest="chi_vector", type=str,
                           help="target character as comma-separated residues")
        else:
            p.add_argument("--chi", type=int, help="target character (residue mod n)")
        p.add_argument("--q", type=int, help="symmetric power degree")
        p.add_argument("--n-max", dest="n_max", type=int, help="degree or grid bound")
        p.add_argument("--grid", type=str, help="comma-separated list of degree bounds")
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--moduli", type=str, help="cyclic factor orders, comma-separated")
        p.add_argument("--weights", type=str,
                       help="weight characters, semicolon-separated residue vectors")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    out = sys.stdout
    try:
        args = _build_parser().parse_args(argv)
        if args.format == "csv" and args.command != "series":
            raise CliError("csv output is only available for the series subcommand")
        needs_na = args.command in {"staircase", "weights", "multiplicity", "series", "signature"}
        if needs_na and (args.n is None or args.a is None):
            raise CliError(f"{args.command} requires --n and --a")
        _CYCLIC_COMMANDS[args.command](args, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except RuntimeError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
