"""Command-line entry point: ``incgen <subcommand> [flags]``.

Every subcommand prints one report on stdout, JSON by default.  Exit status
is 0 on success, 1 on domain errors (and on an enumeration/formula
mismatch), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

from . import __version__
from .counting import (
    count_by_enumeration,
    count_gen,
    formula_count,
    probability_closed_form,
    radical_data,
)
from .errors import IncGenError
from .generation import check_generates, mgen
from .io import dumps, load_poset, load_tuple
from .poset import cover_data
from .realcomplex import DEFAULT_TOL, FIELDS, monte_carlo
from .rings import parse_ring


def _frac(x):
    return {"num": str(x.numerator), "den": str(x.denominator)}


def cmd_poset(args):
    p = load_poset(args.poset)
    return cover_data(p).to_json(), 0


def cmd_count(args):
    p, R = load_poset(args.poset), parse_ring(args.ring)
    out = count_gen(p, R, args.m).to_json(args.precision)
    out["ring"] = R.spec
    return out, 0


def cmd_prob(args):
    p, R = load_poset(args.poset), parse_ring(args.ring)
    rep = count_gen(p, R, args.m)
    closed = probability_closed_form(p, R, args.m)
    out = rep.to_json(args.precision)
    out["ring"] = R.spec
    out["closed_form"] = _frac(closed)
    out["closed_form_agrees"] = closed == rep.probability
    return out, 0


def cmd_mgen(args):
    p, R = load_poset(args.poset), parse_ring(args.ring)
    return {"ring": R.spec, "mgen": mgen(p, R)}, 0


def cmd_check(args):
    _, _, mats = load_tuple(args.tuple)
    return check_generates(mats).to_json(), 0


def cmd_enumerate(args):
    p, R = load_poset(args.poset), parse_ring(args.ring)
    enumerated = count_by_enumeration(p, R, args.m, workers=args.threads)
    formula = formula_count(p, R, args.m)
    out = {
        "ring": R.spec,
        "m": args.m,
        "enumerated": str(enumerated),
        "formula": str(formula),
        "equal": enumerated == formula,
    }
    return out, 0 if enumerated == formula else 1


def cmd_radical(args):
    p, R = load_poset(args.poset), parse_ring(args.ring)
    out = radical_data(p, R).to_json()
    out["ring"] = R.spec
    return out, 0


def cmd_mc(args):
    p = load_poset(args.poset)
    margins = [] if args.margins_csv else None
    rep = monte_carlo(p, args.field, args.m, args.trials, args.seed, args.tol, margins_out=margins)
    out = rep.to_json()
    if math.isinf(out["min_margin"]):
        out["min_margin"] = None
    if margins is not None:
        with open(args.margins_csv, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(["trial", "margin"])
            w.writerows((t, repr(x)) for t, x in enumerate(margins))
    return out, 0


def _table(obj, indent=0) -> str:
    pad = " " * indent
    lines = []
    for key, val in obj.items():
        if isinstance(val, dict) and set(val) == {"num", "den"}:
            lines.append(f"{pad}{key}: {val['num']}/{val['den']}")
        elif isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_table(val, indent + 2))
        else:
            lines.append(f"{pad}{key}: {val}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="incgen",
        description="Generating tuples of matrix incidence rings: exact counts, criteria and Monte Carlo.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "table"), default="json")

    def poset_flag(p):
        p.add_argument("--poset", required=True, help="poset file, or chain:N / antichain:N")

    def ring_flag(p):
        p.add_argument("--ring", required=True, help='e.g. "GF(4)", "M(2,GF(2))", "GF(2)xGF(3)", "Z/8"')

    def m_flag(p, required=True):
        p.add_argument("-m", type=_positive, required=required, help="tuple length")

    p = sub.add_parser("poset", parents=[common], help="covering relation, rho and c")
    poset_flag(p)
    p.set_defaults(func=cmd_poset)

    for name, func, helptext in (
        ("count", cmd_count, "number of generating tuples"),
        ("prob", cmd_prob, "probability of generating, with the closed-form product"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        poset_flag(p)
        ring_flag(p)
        m_flag(p)
        p.add_argument("--precision", type=int, default=None, help="also print a decimal probability")
        p.set_defaults(func=func)

    p = sub.add_parser("mgen", parents=[common], help="minimal number of generators")
    poset_flag(p)
    ring_flag(p)
    p.set_defaults(func=cmd_mgen)

    p = sub.add_parser("check", parents=[common], help="test a tuple file")
    p.add_argument("--tuple", required=True, help="JSON tuple file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", parents=[common], help="brute-force count vs formula")
    poset_flag(p)
    ring_flag(p)
    m_flag(p)
    p.add_argument("--threads", type=_positive, default=1, help="worker processes")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("radical", parents=[common], help="Jacobson radical of the incidence ring")
    poset_flag(p)
    ring_flag(p)
    p.set_defaults(func=cmd_radical)

    p = sub.add_parser("mc", parents=[common], help="Monte Carlo over R or C")
    poset_flag(p)
    p.add_argument("--field", choices=FIELDS, default="real")
    m_flag(p)
    p.add_argument("--trials", type=_positive, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--margins-csv", default=None, help="write per-trial margins to this CSV file")
    p.set_defaults(func=cmd_mc)
    return parser


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "precision", None) is not None and args.precision < 0:
        parser.error("argument --precision: must be >= 0")
    if getattr(args, "tol", 1.0) <= 0:
        parser.error("argument --tol: must be positive")
    try:
        report, status = args.func(args)
    except (IncGenError, OSError) as exc:
        print(f"incgen: error: {exc}", file=sys.stderr)
        return 1
    if args.output == "json":
        sys.stdout.write(dumps(report))
    else:
        sys.stdout.write(_table(report) + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
